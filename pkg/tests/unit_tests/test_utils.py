from decimal import Decimal
from fractions import Fraction
from unittest import TestCase

from mock import patch
from parameterized import parameterized, param

from ctxdegree import exceptions, utils


class TestUtils(TestCase):

    @parameterized.expand([
        param('decimal string', '.049', Fraction(49, 1000)),
        param('fraction string', '4/81', Fraction(4, 81)),
        param('integer', -1, Fraction(-1)),
        param('decimal', Decimal('0.7071067811865475'), Fraction(7071067811865475, 10 ** 16)),
        param('float keeps its binary value', 0.1, Fraction(3602879701896397, 36028797018963968)),
        param('padded string', ' 0.5 ', Fraction(1, 2)),
    ])
    def test_to_rational(self, label, value, expected):
        self.assertEqual(
            first=utils.to_rational(value),
            second=expected,
        )

    @parameterized.expand([
        param('bool', True),
        param('nan', float('nan')),
        param('infinity', float('inf')),
        param('garbage string', 'half'),
        param('zero denominator', '1/0'),
        param('list', [1]),
    ])
    def test_to_rational_rejects(self, label, value):
        with self.assertRaises(exceptions.ParamValidationError):
            utils.to_rational(value, 'p')

    @parameterized.expand([
        param('round down', Fraction(1, 3), 6, '0.333333'),
        param('round up', Fraction(2, 3), 6, '0.666667'),
        param('negative', Fraction(-1, 8), 2, '-0.12'),
        param('half to even', Fraction(5, 8), 2, '0.62'),
        param('zero', 0, 6, '0.000000'),
        param('integer precision', Fraction(7, 2), 0, '4'),
        param('small negative rounds to zero', Fraction(-1, 10 ** 9), 6, '0.000000'),
    ])
    def test_format_decimal(self, label, value, precision, expected):
        self.assertEqual(
            first=utils.format_decimal(value, precision),
            second=expected,
        )

    def test_format_decimal_negative_precision(self):
        with self.assertRaises(exceptions.ParamValidationError):
            utils.format_decimal(1, -1)

    def test_format_fraction(self):
        self.assertEqual(utils.format_fraction(Fraction(189, 100)), '189/100')
        self.assertEqual(utils.format_fraction(0), '0')

    @parameterized.expand([
        param('independent fair coins', 0, 0, (-1, 1)),
        param('opposite certainties', 1, -1, (-1, -1)),
        param('equal certainties', 1, 1, (1, 1)),
        param('biased', Fraction(1, 2), Fraction(1, 4), (Fraction(-1, 4), Fraction(3, 4))),
    ])
    def test_implicit_bounds(self, label, first, second, expected):
        self.assertEqual(
            first=utils.implicit_bounds(first, second),
            second=expected,
        )

    def test_gcd_and_lcm(self):
        self.assertEqual(utils.gcd_of([4, -6, 8]), 2)
        self.assertEqual(utils.gcd_of([0, 0]), 0)
        self.assertEqual(utils.lcm_of([4, 6]), 12)
        self.assertEqual(utils.lcm_of([]), 1)

    def test_validate_choice_param(self):
        utils.validate_choice_param('kind', 'bell', ['bell', 'lg'])
        with self.assertRaises(exceptions.ParamValidationError) as context:
            utils.validate_choice_param('kind', 'chsh', ['bell', 'lg'])
        self.assertIn('"chsh"', str(context.exception))

    def test_validate_unit_interval(self):
        utils.validate_unit_interval('a11', Fraction(-1))
        with self.assertRaises(exceptions.InvalidObservables) as context:
            utils.validate_unit_interval('a11', Fraction(3, 2))
        self.assertEqual(context.exception.path, 'a11')

    @parameterized.expand([
        param('unset', {}, 8, 8, 6),
        param('set', {'CTXDEGREE_WORKERS': '4', 'CTXDEGREE_PRECISION': '3'}, 8, 4, 3),
        param('empty', {'CTXDEGREE_WORKERS': '', 'CTXDEGREE_PRECISION': ''}, 8, 8, 6),
        param('unknown cpu count', {}, None, 1, 6),
    ])
    def test_env_settings(self, label, environ, cpu_count, expected_workers, expected_precision):
        with patch.dict('os.environ', environ, clear=True), patch('os.cpu_count', return_value=cpu_count):
            self.assertEqual(utils.get_workers_from_env(), expected_workers)
            self.assertEqual(utils.get_precision_from_env(), expected_precision)

    @parameterized.expand([
        param('not a number', 'CTXDEGREE_WORKERS', 'many'),
        param('no workers', 'CTXDEGREE_WORKERS', '0'),
        param('negative precision', 'CTXDEGREE_PRECISION', '-2'),
    ])
    def test_env_settings_rejected(self, label, env_var, raw):
        with patch.dict('os.environ', {env_var: raw}, clear=True):
            with self.assertRaises(exceptions.ParamValidationError):
                utils.get_workers_from_env()
                utils.get_precision_from_env()

    @parameterized.expand([
        param('optimal', utils.STATUS_OPTIMAL, None),
        param('infeasible', utils.STATUS_INFEASIBLE, exceptions.Infeasible),
        param('unbounded', utils.STATUS_UNBOUNDED, exceptions.Unbounded),
    ])
    def test_raise_for_status(self, label, status, raises):
        if raises is None:
            utils.raise_for_status(status)
            return
        with self.assertRaises(raises) as context:
            utils.raise_for_status(status, certificate=[1, -1])
        if raises is exceptions.Infeasible:
            self.assertEqual(context.exception.certificate, [1, -1])
