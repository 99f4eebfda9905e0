from fractions import Fraction
from unittest import TestCase

from parameterized import parameterized, param

from ctxdegree import exceptions
from ctxdegree.api.oracle import (
    CouplingLP,
    build_problem,
    coupling_feasible,
    delta_range_lp,
    max_delta_lp,
    min_delta_coupling,
    min_delta_lp,
    min_delta_marginals_lp,
)
from ctxdegree.api.oracle.coupling_lp import disagreement_counts
from ctxdegree.core import (
    BellConnections,
    BellObservables,
    LGObservables,
    coupling_marginal,
    expectations_from_table,
    get_descriptor,
)
from tests.utils import aerts_observables, bell_system, lg_system, pr_box_observables

IDENTITY_CONNECTIONS = BellConnections(aa1=1, aa2=1, bb1=1, bb2=1)


class TestCouplingProblem(TestCase):

    @parameterized.expand([
        param('bell', BellObservables.zeros(), 17),
        param('lg', LGObservables.zeros(), 13),
    ])
    def test_rows(self, label, obs, rows):
        problem = build_problem(obs)
        self.assertEqual(len(problem.matrix), rows)
        self.assertEqual(len(problem.rhs), rows)
        self.assertEqual(problem.labels[-1], 'normalization')
        self.assertEqual(problem.rhs[-1], 1)

    def test_rows_with_connections(self):
        problem = build_problem(BellObservables.zeros(), IDENTITY_CONNECTIONS)
        self.assertEqual(len(problem.matrix), 33)

    def test_disagreement_counts(self):
        counts = disagreement_counts(get_descriptor('bell'))
        self.assertEqual(counts[255], 0)
        self.assertEqual(counts[127], 1)
        self.assertEqual(max(counts), 4)


class TestCouplingPrograms(TestCase):

    @parameterized.expand([
        param('all zero', BellObservables.zeros(), 0),
        param('pr box', pr_box_observables(), 1),
        param('printed tables', aerts_observables(), Fraction('1.89')),
        param('lg anticorrelated', lg_system((-1, -1, -1)), 1),
        param('lg signalling', lg_system((0, 0, 0), (1, 0, 0, 0, 0, 0)), Fraction(1, 2)),
    ])
    def test_min_delta(self, label, obs, expected):
        self.assertEqual(min_delta_lp(obs), expected)

    def test_min_delta_coupling_reproduces_tables(self):
        obs = pr_box_observables()
        value, coupling = min_delta_coupling(obs)
        self.assertEqual(value, 1)
        for pair in obs.descriptor.observed_pairs:
            table = coupling_marginal(coupling, pair.name)
            self.assertEqual(expectations_from_table(table), obs.context(pair.name))

    def test_max_delta(self):
        self.assertEqual(max_delta_lp(pr_box_observables()), 3)

    @parameterized.expand([
        param('pr box', pr_box_observables()),
        param('printed tables', aerts_observables()),
        param('lg signalling', lg_system((0, 0, 0), (1, 0, 0, 0, 0, 0))),
    ])
    def test_delta_range_shares_phase_one(self, label, obs):
        self.assertEqual(delta_range_lp(obs), (min_delta_lp(obs), max_delta_lp(obs)))

    def test_delta_range_category(self):
        self.assertEqual(CouplingLP().delta_range(pr_box_observables()), (1, 3))

    @parameterized.expand([
        param('printed tables', aerts_observables(), Fraction('1.89')),
        param('pr box', pr_box_observables(), 0),
    ])
    def test_marginals_only(self, label, obs, expected):
        self.assertEqual(min_delta_marginals_lp(obs), expected)


class TestCouplingFeasible(TestCase):

    def test_feasible_with_witness(self):
        outcome = coupling_feasible(BellObservables.zeros(), IDENTITY_CONNECTIONS)
        self.assertTrue(outcome)
        self.assertEqual(expectations_from_table(coupling_marginal(outcome.witness, 'aa1'))[0], 1)

    def test_infeasible(self):
        outcome = coupling_feasible(pr_box_observables(), IDENTITY_CONNECTIONS)
        self.assertFalse(outcome)
        self.assertIsNone(outcome.witness)

    def test_connection_outside_implicit_range(self):
        obs = bell_system((0, 0, 0, 0), (1, -1, 0, 0, 0, 0, 0, 0))
        with self.assertRaises(exceptions.InvalidObservables):
            coupling_feasible(obs, IDENTITY_CONNECTIONS)

    def test_category_class(self):
        self.assertEqual(CouplingLP().min_delta(pr_box_observables()), 1)
