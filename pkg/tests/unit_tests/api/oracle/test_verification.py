from fractions import Fraction
from unittest import TestCase

from mock import patch
from parameterized import parameterized, param

from ctxdegree import exceptions
from ctxdegree.api.oracle import Verification, check_instance, verify_equivalence
from ctxdegree.api.oracle.verification import instance_scheme


class TestCheckInstance(TestCase):

    @parameterized.expand([
        param('general', 0, 'general'),
        param('marginal selectivity', 1, 'marginal_selectivity'),
        param('zero singles', 2, 'zero_singles'),
        param('cycle restarts', 3, 'general'),
    ])
    def test_instance_scheme(self, label, index, scheme):
        self.assertEqual(instance_scheme(index), scheme)

    @parameterized.expand([
        param('bell', 'bell'),
        param('lg', 'lg'),
    ])
    def test_agreement(self, label, kind):
        result = check_instance(kind, 0, 5)
        self.assertEqual(result.failures, ())
        self.assertEqual(result.delta_lp, result.delta_closed)
        self.assertEqual(result.bounds[0], result.delta_lp)
        self.assertEqual(result.bounds[1], result.max_lp)
        self.assertEqual(result.feasible_lp, result.feasible_closed)

    def test_zero_singles_use_certain_connections(self):
        result = check_instance('bell', 2, 5)
        self.assertEqual(result.scheme, 'zero_singles')
        self.assertTrue(all(value in (-1, 1) for value in result.connections.coordinates().values()))
        self.assertEqual(result.failures, ())


class TestVerifyEquivalence(TestCase):

    def test_lg_run(self):
        report = verify_equivalence('lg', 6, seed=7, workers=1)
        self.assertTrue(report.ok)
        self.assertEqual(report.n_instances, 6)
        self.assertEqual([result.index for result in report.results], list(range(6)))
        self.assertEqual(report.upper_form_matches['s0'], 6)
        self.assertIsNone(report.counterexample)
        self.assertTrue(report.summary().startswith('6/6 instances: closed form = LP oracle'))
        self.assertIn('upper bound s0 attained: 6/6', report.summary())

    def test_bell_summary_has_no_upper_forms(self):
        report = verify_equivalence('bell', 2, seed=7, workers=1)
        self.assertTrue(report.ok)
        self.assertEqual(report.upper_form_matches, {})
        self.assertNotIn('upper bound', report.summary())

    @parameterized.expand([
        param('zero', 0),
        param('negative', -3),
        param('boolean', True),
        param('float', 2.0),
    ])
    def test_invalid_instance_count(self, label, n_instances):
        with self.assertRaises(exceptions.ParamValidationError):
            verify_equivalence('lg', n_instances, workers=1)

    def test_invalid_kind(self):
        with self.assertRaises(exceptions.ParamValidationError):
            verify_equivalence('cyclic', 1, workers=1)

    def test_disagreement_is_reported(self):
        with patch('ctxdegree.api.oracle.verification.delta_min', return_value=Fraction(-1)):
            report = verify_equivalence('lg', 2, seed=7, workers=1)
        self.assertFalse(report.ok)
        self.assertEqual(report.passed, 0)
        self.assertEqual(report.counterexample.index, 0)
        self.assertIn('first counterexample: instance 0 (general scheme)', report.summary())
        self.assertIn('min_delta_lp', report.summary())

    def test_category_class(self):
        report = Verification().verify('lg', 1, seed=3, workers=1)
        self.assertEqual(report.seed, 3)
        self.assertTrue(report.ok)
