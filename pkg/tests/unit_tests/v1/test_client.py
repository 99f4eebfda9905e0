from fractions import Fraction
from unittest import TestCase

from mock import MagicMock, create_autospec
from parameterized import parameterized, param

from ctxdegree import Client, exceptions, io
from ctxdegree.adapters import Adapter, ExactSimplexAdapter
from ctxdegree.api import Measures, Oracle, Polytope
from tests.utils import aerts_observables, lg_system, pr_box_observables


class TestClient(TestCase):

    def test_default_adapter(self):
        client = Client()
        self.assertIsInstance(client.adapter, ExactSimplexAdapter)
        self.assertEqual(client.adapter.pivot_rule, 'hybrid')

    def test_categories(self):
        client = Client()
        self.assertIsInstance(client.measures, Measures)
        self.assertIsInstance(client.polytope, Polytope)
        self.assertIsInstance(client.oracle, Oracle)
        for category in (client.measures, client.polytope, client.oracle):
            self.assertIs(category.adapter, client.adapter)

    @parameterized.expand([
        param('measures', 'measures', ['bell', 'leggettgarg']),
        param('polytope', 'polytope', ['hull', 'elimination', 'derivation']),
        param('oracle', 'oracle', ['couplinglp', 'sampling', 'verification']),
    ])
    def test_category_attributes(self, label, category_name, implemented):
        category = getattr(Client(), category_name)
        for name in implemented:
            self.assertIs(getattr(category, name).adapter, category.adapter)
        self.assertEqual(category.unimplemented_classes, [])
        with self.assertRaises(AttributeError):
            getattr(category, 'cyclicn')

    def test_adapter_propagation(self):
        client = Client()
        adapter = create_autospec(Adapter)
        client.adapter = adapter
        self.assertIs(client.oracle.couplinglp.adapter, adapter)
        self.assertIs(client.polytope.elimination.adapter, adapter)
        self.assertIs(client.measures.bell.adapter, adapter)

    def test_adapter_class_receives_settings(self):
        adapter_class = MagicMock()
        Client(adapter=adapter_class, pivot_rule='bland', degenerate_limit=5, ignore_exceptions=True)
        adapter_class.assert_called_once_with(pivot_rule='bland', degenerate_limit=5, ignore_exceptions=True)

    def test_invalid_pivot_rule(self):
        with self.assertRaises(exceptions.ParamValidationError):
            Client(pivot_rule='steepest')

    def test_analyze(self):
        client = Client()
        self.assertEqual(client.analyze(aerts_observables()).delta0, Fraction('1.89'))
        self.assertEqual(client.analyze_document(io.fixture_path('aerts_counts.json')).kind, 'bell')

    def test_measures_through_client(self):
        client = Client()
        self.assertEqual(client.measures.bell.delta_min(pr_box_observables()), 1)
        self.assertEqual(client.measures.leggettgarg.delta_min(lg_system((-1, -1, -1))), 1)
        self.assertEqual(client.oracle.couplinglp.min_delta(pr_box_observables()), 1)
