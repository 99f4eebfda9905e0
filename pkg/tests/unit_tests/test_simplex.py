#!/usr/bin/env python
# -*- coding: utf-8 -*-
from fractions import Fraction
from unittest import TestCase

from parameterized import parameterized, param

from ctxdegree import exceptions, simplex, utils


class TestSolveStandardForm(TestCase):

    @parameterized.expand([
        param('hybrid rule', 'hybrid'),
        param('bland rule', 'bland'),
    ])
    def test_minimize(self, label, pivot_rule):
        result = simplex.solve_standard_form([1, 2], [[1, 1]], [1], pivot_rule=pivot_rule)
        self.assertEqual(result.status, utils.STATUS_OPTIMAL)
        self.assertEqual(result.value, 1)
        self.assertEqual(result.x, [1, 0])
        self.assertEqual(result.duals, [1])

    def test_maximize(self):
        result = simplex.solve_standard_form([1, 2], [[1, 1]], [1], maximize=True)
        self.assertEqual(result.value, 2)
        self.assertEqual(result.x, [0, 1])

    def test_exact_fractions(self):
        # x1 + 3 x2 = 1, x1 - x2 = 0
        result = simplex.solve_standard_form([1, 1], [[1, 3], [1, -1]], [1, 0])
        self.assertEqual(result.x, [Fraction(1, 4), Fraction(1, 4)])
        self.assertEqual(result.value, Fraction(1, 2))

    def test_redundant_rows(self):
        result = simplex.solve_standard_form([1, 1], [[1, 1], [2, 2]], [1, 2])
        self.assertEqual(result.status, utils.STATUS_OPTIMAL)
        self.assertEqual(result.value, 1)

    def test_ratio_test_keeps_feasibility(self):
        # the first row allows x1 up to 5 but the second only up to 1
        result = simplex.solve_standard_form([-1, 0, 0], [[1, 1, 0], [1, 0, 1]], [5, 1])
        self.assertEqual(result.status, utils.STATUS_OPTIMAL)
        self.assertEqual(result.value, -1)
        self.assertTrue(all(v >= 0 for v in result.x))

    def test_negative_rhs(self):
        result = simplex.solve_standard_form([1, 0], [[-1, 1]], [-2])
        self.assertEqual(result.value, 2)
        self.assertEqual(result.x, [2, 0])

    def test_infeasible_certificate(self):
        matrix, rhs = [[1, 1]], [-1]
        result = simplex.solve_standard_form([0, 0], matrix, rhs)
        self.assertEqual(result.status, utils.STATUS_INFEASIBLE)
        y = result.certificate
        for j in range(2):
            self.assertLessEqual(sum(y[i] * matrix[i][j] for i in range(len(matrix))), 0)
        self.assertGreater(sum(a * b for a, b in zip(y, rhs)), 0)

    def test_unbounded(self):
        result = simplex.solve_standard_form([-1, 0], [[1, -1]], [0])
        self.assertEqual(result.status, utils.STATUS_UNBOUNDED)
        self.assertIsNone(result.value)

    def test_no_rows(self):
        result = simplex.solve_standard_form([2, 3], [], [])
        self.assertEqual(result.value, 0)

    @parameterized.expand([
        param('rhs length', [1, 1], [[1, 1]], [1, 2], None),
        param('row length', [1, 1], [[1, 1, 1]], [1], None),
        param('pivot rule', [1], [[1]], [1], 'steepest'),
    ])
    def test_invalid_programs(self, label, objective, matrix, rhs, pivot_rule):
        kwargs = {} if pivot_rule is None else {'pivot_rule': pivot_rule}
        with self.assertRaises(exceptions.ParamValidationError):
            simplex.solve_standard_form(objective, matrix, rhs, **kwargs)

    def test_degenerate_fallback(self):
        # 2x2 transportation problem; one row is redundant
        matrix = [
            [1, 1, 0, 0],
            [0, 0, 1, 1],
            [1, 0, 1, 0],
            [0, 1, 0, 1],
        ]
        result = simplex.solve_standard_form([1, 2, 2, 1], matrix, [1, 1, 1, 1], degenerate_limit=1)
        self.assertEqual(result.value, 2)

    def test_fractional_coefficients(self):
        # halving every row leaves the optimum unchanged
        result = simplex.solve_standard_form([1, 1], [[Fraction(1, 2), Fraction(3, 2)], [Fraction(1, 2), Fraction(-1, 2)]],
                                             [Fraction(1, 2), 0])
        self.assertEqual(result.x, [Fraction(1, 4), Fraction(1, 4)])
        self.assertEqual(result.value, Fraction(1, 2))


class TestSolveStandardFormSequence(TestCase):

    def test_shared_region(self):
        results = simplex.solve_standard_form_sequence([([1, 2], False), ([1, 2], True), ([0, 0], False)], [[1, 1]], [1])
        self.assertEqual([r.value for r in results], [1, 2, 0])
        self.assertEqual([r.status for r in results], [utils.STATUS_OPTIMAL] * 3)
        self.assertEqual(sum(results[2].x), 1)

    def test_matches_single_solves(self):
        matrix = [
            [1, 1, 0, 0],
            [0, 0, 1, 1],
            [1, 0, 1, 0],
            [0, 1, 0, 1],
        ]
        rhs = [1, 1, 1, 1]
        objectives = [([1, 2, 2, 1], False), ([1, 2, 2, 1], True), ([0, 3, 1, 0], True)]
        results = simplex.solve_standard_form_sequence(objectives, matrix, rhs)
        for (objective, maximize), result in zip(objectives, results):
            single = simplex.solve_standard_form(objective, matrix, rhs, maximize=maximize)
            self.assertEqual(result.value, single.value)

    def test_infeasible_region(self):
        results = simplex.solve_standard_form_sequence([([1, 0], False), ([1, 0], True)], [[1, 1]], [-1])
        self.assertEqual([r.status for r in results], [utils.STATUS_INFEASIBLE] * 2)
        self.assertIsNotNone(results[0].certificate)

    def test_unbounded_then_bounded(self):
        results = simplex.solve_standard_form_sequence([([1, 0], True), ([1, 0], False)], [[1, -1]], [0])
        self.assertEqual(results[0].status, utils.STATUS_UNBOUNDED)
        self.assertEqual(results[1].value, 0)

    @parameterized.expand([
        param('no objectives', []),
        param('lengths differ', [([1, 1], False), ([1], True)]),
    ])
    def test_invalid_objectives(self, label, objectives):
        with self.assertRaises(exceptions.ParamValidationError):
            simplex.solve_standard_form_sequence(objectives, [[1, 1]], [1])
