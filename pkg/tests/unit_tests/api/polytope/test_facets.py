from fractions import Fraction
from unittest import TestCase

from hypothesis import given, settings
from hypothesis import strategies as st
from parameterized import parameterized, param

from ctxdegree import exceptions
from ctxdegree.api.polytope import (
    VertexSet,
    double_description,
    enumerate_vertices,
    facet_enumeration,
    match_closed_form,
    tight_vertex_count,
)

SQUARE = VertexSet(('x', 'y'), [(1, 1), (1, -1), (-1, 1), (-1, -1)])
TRIANGLE = VertexSet(('x', 'y', 'z'), [(1, 0, 0), (0, 1, 0), (0, 0, 1)])


class TestFacetEnumeration(TestCase):

    def test_square(self):
        facets = facet_enumeration(SQUARE)
        self.assertEqual(facets.inequalities, (
            ((-1, 0), 1),
            ((0, -1), 1),
            ((0, 1), 1),
            ((1, 0), 1),
        ))
        self.assertEqual(facets.equalities, ())
        self.assertEqual(tight_vertex_count(facets, SQUARE), [2, 2, 2, 2])

    def test_interior_points_are_ignored(self):
        square = VertexSet(SQUARE.coordinates, list(SQUARE.points) + [(0, 0), (1, 0), (1, 1)])
        self.assertEqual(facet_enumeration(square), facet_enumeration(SQUARE))

    def test_lower_dimensional_hull(self):
        facets = facet_enumeration(TRIANGLE)
        self.assertEqual(facets.equalities, (((1, 1, 1), 1),))
        self.assertEqual(len(facets.inequalities), 3)
        for point in TRIANGLE:
            self.assertTrue(facets.satisfied_by(TRIANGLE.as_dict(point)))
        self.assertEqual(tight_vertex_count(facets, TRIANGLE), [2, 2, 2])
        self.assertFalse(facets.satisfied_by({'x': 1, 'y': 1, 'z': -1}))

    @parameterized.expand([
        param('no points', VertexSet(('x',), [])),
        param('identical points', VertexSet(('x', 'y'), [(1, 2), (1, 2)])),
    ])
    def test_degenerate(self, label, vertices):
        with self.assertRaises(exceptions.DegenerateInput):
            facet_enumeration(vertices)

    def test_double_description_rank_deficient(self):
        with self.assertRaises(exceptions.DegenerateInput):
            double_description([(1, 0, 0), (2, 0, 0), (0, 1, 0)])

    def test_double_description_orthant(self):
        rays = double_description([(1, 0), (0, 1)])
        self.assertEqual(sorted(rays), [(0, 1), (1, 0)])


class TestLeggettGargHull(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.vertices = enumerate_vertices('lg')
        cls.facets = facet_enumeration(cls.vertices)

    def test_facet_count(self):
        self.assertEqual(len(self.facets.inequalities), 56)
        self.assertEqual(self.facets.equalities, ())

    def test_partition(self):
        partition = match_closed_form(self.facets, 'lg')
        self.assertEqual((len(partition.compatibility), len(partition.implicit)), (32, 24))

    def test_every_facet_is_supported(self):
        counts = tight_vertex_count(self.facets, self.vertices)
        self.assertTrue(all(count >= 12 for count in counts))


lattice_points = st.lists(
    st.tuples(*[st.integers(min_value=-2, max_value=2)] * 3),
    min_size=2,
    max_size=7,
    unique=True,
)


class TestFacetEnumerationProperties(TestCase):

    @settings(max_examples=60, deadline=None)
    @given(lattice_points, st.data())
    def test_order_and_duplicates_do_not_matter(self, points, data):
        reordered = data.draw(st.permutations(points))
        repeated = data.draw(st.lists(st.sampled_from(points), max_size=4))
        expected = facet_enumeration(VertexSet(('x', 'y', 'z'), points))
        self.assertEqual(facet_enumeration(VertexSet(('x', 'y', 'z'), reordered + repeated)), expected)

    @settings(max_examples=60, deadline=None)
    @given(lattice_points, st.data())
    def test_midpoints_do_not_matter(self, points, data):
        pairs = data.draw(st.lists(st.tuples(st.sampled_from(points), st.sampled_from(points)), max_size=3))
        midpoints = [tuple(Fraction(a + b, 2) for a, b in zip(p, q)) for p, q in pairs]
        expected = facet_enumeration(VertexSet(('x', 'y', 'z'), points))
        self.assertEqual(facet_enumeration(VertexSet(('x', 'y', 'z'), points + midpoints)), expected)

    @settings(max_examples=60, deadline=None)
    @given(lattice_points)
    def test_facets_support_the_points(self, points):
        vertices = VertexSet(('x', 'y', 'z'), points)
        facets = facet_enumeration(vertices)
        dimension = 3 - len(facets.equalities)
        self.assertTrue(all(facets.satisfied_by(vertices.as_dict(point)) for point in vertices))
        self.assertTrue(all(count >= dimension for count in tight_vertex_count(facets, vertices)))
