from fractions import Fraction
from unittest import TestCase

from hypothesis import given, settings
from hypothesis import strategies as st
from mock import create_autospec
from parameterized import parameterized, param

from ctxdegree.adapters import ExactSimplexAdapter
from ctxdegree.api.polytope import Elimination, fourier_motzkin_eliminate, remove_redundant, tighten_parallel
from ctxdegree.core import LinearSystem


class TestFourierMotzkin(TestCase):

    def test_combines_lower_and_upper_rows(self):
        system = LinearSystem(('x', 'y', 'z'), inequalities=[({'x': -1, 'y': 1}, 0), ({'x': 1, 'z': -1}, 0)])
        self.assertEqual(
            fourier_motzkin_eliminate(system, 'x'),
            LinearSystem(('y', 'z'), inequalities=[((1, -1), 0)]),
        )

    def test_rows_without_variable_are_kept(self):
        system = LinearSystem(('x', 'y'), inequalities=[({'x': 1}, 1), ({'y': 1}, 2)])
        self.assertEqual(
            fourier_motzkin_eliminate(system, 'x'),
            LinearSystem(('y',), inequalities=[((1,), 2)]),
        )

    def test_contradiction(self):
        system = LinearSystem(('x',), inequalities=[({'x': -1}, 0), ({'x': 1}, -1)])
        self.assertEqual(fourier_motzkin_eliminate(system, 'x').inequalities, (((), -1),))

    def test_absent_variable(self):
        system = LinearSystem(('x',), inequalities=[({'x': 1}, 1)])
        self.assertIs(fourier_motzkin_eliminate(system, 'w'), system)

    def test_equality_is_substituted(self):
        system = LinearSystem(('x', 'y'), inequalities=[({'x': 1}, 2)], equalities=[({'x': 1, 'y': 1}, 1)])
        self.assertEqual(
            fourier_motzkin_eliminate(system, 'x'),
            LinearSystem(('y',), inequalities=[((-1,), 1)]),
        )

    def test_tighten_parallel(self):
        system = LinearSystem(('x', 'y'), inequalities=[({'x': 1, 'y': 1}, 3), ({'x': 2, 'y': 2}, 4), ({'x': -1}, 0)])
        self.assertEqual(tighten_parallel(system).inequalities, (((-1, 0), 0), ((1, 1), 2)))


class TestRemoveRedundant(TestCase):

    @parameterized.expand([
        param(
            'implied bound',
            LinearSystem(('x',), inequalities=[({'x': 1}, 1), ({'x': 1}, 2)]),
            [((1,), 1)],
        ),
        param(
            'implied sum',
            LinearSystem(('x', 'y'), inequalities=[({'x': 1}, 1), ({'y': 1}, 1), ({'x': 1, 'y': 1}, 3),
                                                   ({'x': -1}, 0), ({'y': -1}, 0)]),
            [((-1, 0), 0), ((0, -1), 0), ((0, 1), 1), ((1, 0), 1)],
        ),
        param(
            'infeasible',
            LinearSystem(('x', 'y'), inequalities=[({'x': 1}, 0), ({'x': -1}, -1), ({'y': 1}, 5)]),
            [((-1, 0), -1), ((1, 0), 0)],
        ),
        param(
            'no interior point',
            LinearSystem(('x',), inequalities=[({'x': 1}, 0), ({'x': -1}, 0), ({'x': 1}, 1)]),
            [((-1,), 0), ((1,), 0)],
        ),
        param(
            'contradiction row',
            LinearSystem(('x',), inequalities=[((0,), -3), ({'x': 1}, 1)]),
            [((0,), -1)],
        ),
    ])
    def test_remove_redundant(self, label, system, expected):
        reduced = remove_redundant(system)
        self.assertEqual(list(reduced.inequalities), expected)
        self.assertEqual(reduced.equalities, system.equalities)

    def test_equalities_are_kept(self):
        system = LinearSystem(('x', 'y'), inequalities=[({'x': 1}, 1), ({'x': 1}, 2)], equalities=[({'y': 1}, 0)])
        reduced = remove_redundant(system)
        self.assertEqual(reduced.inequalities, (((1, 0), 1),))
        self.assertEqual(reduced.equalities, (((0, 1), 0),))

    def test_unbounded_rows_are_kept(self):
        system = LinearSystem(('x', 'y'), inequalities=[({'x': 1}, 1), ({'y': 1}, 1)])
        self.assertEqual(remove_redundant(system), system)


class TestElimination(TestCase):

    def test_project_uses_shared_adapter(self):
        adapter = create_autospec(ExactSimplexAdapter, instance=True)
        adapter.minimize.side_effect = ExactSimplexAdapter().minimize
        system = LinearSystem(('x', 'y', 'z'), inequalities=[
            ({'x': -1, 'y': 1}, 0),
            ({'x': 1, 'z': -1}, 0),
            ({'y': -1}, 0),
            ({'z': 1}, 1),
        ])
        projected = Elimination(adapter=adapter).project(system, ['x'])
        self.assertEqual(projected, LinearSystem(('y', 'z'), inequalities=[
            ((-1, 0), 0),
            ((0, 1), 1),
            ((1, -1), 0),
        ]))
        self.assertTrue(adapter.minimize.called)


COORDINATES = ('x', 'y', 'z')
BOX = [({name: sign}, 5) for name in COORDINATES for sign in (1, -1)]
rows = st.tuples(st.lists(st.integers(min_value=-3, max_value=3), min_size=3, max_size=3),
                 st.integers(min_value=-4, max_value=4))
systems = st.lists(rows, min_size=1, max_size=6).map(lambda r: LinearSystem(COORDINATES, inequalities=r))
points = st.fixed_dictionaries({
    name: st.fractions(min_value=-3, max_value=3, max_denominator=4) for name in COORDINATES
})


def _lift(system, point, var):
    """A value of ``var`` extending ``point`` into the system, or None."""
    k = system.index(var)
    lower, upper = None, None
    for coefficients, bound in system.inequalities:
        rest = sum((c * point[name] for name, c in zip(system.coordinates, coefficients) if name != var), Fraction(0))
        c = coefficients[k]
        if c > 0:
            value = (bound - rest) / c
            upper = value if upper is None else min(upper, value)
        elif c < 0:
            value = (bound - rest) / c
            lower = value if lower is None else max(lower, value)
        elif rest > bound:
            return None
    if lower is not None and upper is not None and lower > upper:
        return None
    if lower is not None:
        return lower
    return Fraction(0) if upper is None else upper


class TestEliminationProperties(TestCase):

    @settings(max_examples=200, deadline=None)
    @given(systems, points, st.sampled_from(COORDINATES))
    def test_projection_contains_every_shadow(self, system, point, var):
        if system.satisfied_by(point):
            self.assertTrue(fourier_motzkin_eliminate(system, var).satisfied_by(point))

    @settings(max_examples=200, deadline=None)
    @given(systems, points, st.sampled_from(COORDINATES))
    def test_projection_points_lift(self, system, point, var):
        if fourier_motzkin_eliminate(system, var).satisfied_by(point):
            value = _lift(system, point, var)
            self.assertIsNotNone(value)
            lifted = dict(point)
            lifted[var] = value
            self.assertTrue(system.satisfied_by(lifted))

    @settings(max_examples=50, deadline=None)
    @given(systems, st.lists(points, min_size=5, max_size=5))
    def test_remove_redundant_keeps_feasible_set(self, system, sample):
        system = system.extend(inequalities=BOX)
        reduced = remove_redundant(system)
        self.assertTrue(set(reduced.inequalities) <= set(system.inequalities))
        for point in sample:
            self.assertEqual(reduced.satisfied_by(point), system.satisfied_by(point))
