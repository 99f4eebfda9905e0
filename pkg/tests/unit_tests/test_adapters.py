#!/usr/bin/env python
# -*- coding: utf-8 -*-
from unittest import TestCase

from mock import patch
from parameterized import parameterized, param

from ctxdegree import adapters, exceptions, utils
from ctxdegree.simplex import LPResult


class TestExactSimplexAdapter(TestCase):
    """Unit tests providing coverage for the solver adapter used by the ctxdegree Client class."""

    @parameterized.expand([
        param('minimize', 'minimize', 1),
        param('maximize', 'maximize', 2),
    ])
    def test_optimize(self, label, method, expected_value):
        adapter = adapters.ExactSimplexAdapter()
        result = getattr(adapter, method)([1, 2], [[1, 1]], [1])
        self.assertEqual(result.status, utils.STATUS_OPTIMAL)
        self.assertEqual(result.value, expected_value)

    @parameterized.expand([
        param('infeasible', [0, 0], [[1, 1]], [-1], exceptions.Infeasible),
        param('unbounded', [-1, 0], [[1, -1]], [0], exceptions.Unbounded),
    ])
    def test_raise_for_status(self, label, objective, matrix, rhs, raises):
        adapter = adapters.ExactSimplexAdapter()
        with self.assertRaises(raises):
            adapter.minimize(objective, matrix, rhs)

    def test_infeasible_carries_certificate(self):
        adapter = adapters.ExactSimplexAdapter()
        with self.assertRaises(exceptions.Infeasible) as context:
            adapter.minimize([0, 0], [[1, 1]], [-1])
        self.assertEqual(context.exception.certificate, [-1])

    @parameterized.expand([
        param('per call', {}, {'raise_exception': False}),
        param('per adapter', {'ignore_exceptions': True}, {}),
    ])
    def test_ignore_exceptions(self, label, adapter_kwargs, call_kwargs):
        adapter = adapters.ExactSimplexAdapter(**adapter_kwargs)
        result = adapter.minimize([0, 0], [[1, 1]], [-1], **call_kwargs)
        self.assertEqual(result.status, utils.STATUS_INFEASIBLE)

    @parameterized.expand([
        param('feasible', [[1, 1]], [1], True),
        param('infeasible', [[1, 1]], [-1], False),
        param('no rows', [], [], True),
    ])
    def test_is_feasible(self, label, matrix, rhs, expected):
        self.assertEqual(
            first=adapters.ExactSimplexAdapter().is_feasible(matrix, rhs),
            second=expected,
        )

    @parameterized.expand([
        param('hybrid', 'hybrid', 50),
        param('bland', 'bland', 7),
    ])
    def test_solver_settings(self, label, pivot_rule, degenerate_limit):
        adapter = adapters.ExactSimplexAdapter(pivot_rule=pivot_rule, degenerate_limit=degenerate_limit)
        outcome = LPResult(utils.STATUS_OPTIMAL, 0, [0], [], None, 0)
        with patch('ctxdegree.adapters.simplex.solve_standard_form', return_value=outcome) as solve:
            adapter.maximize([1], [[1]], [1])
        solve.assert_called_once_with(
            objective=[1],
            matrix=[[1]],
            rhs=[1],
            maximize=True,
            pivot_rule=pivot_rule,
            degenerate_limit=degenerate_limit,
        )

    def test_invalid_pivot_rule(self):
        with self.assertRaises(exceptions.ParamValidationError):
            adapters.ExactSimplexAdapter(pivot_rule='steepest')

    def test_abstract_adapter(self):
        with self.assertRaises(TypeError):
            adapters.Adapter()

    def test_solve_sequence(self):
        adapter = adapters.ExactSimplexAdapter(pivot_rule='bland', degenerate_limit=7)
        outcome = LPResult(utils.STATUS_OPTIMAL, 0, [0], [], None, 0)
        objectives = [([1], False), ([1], True)]
        with patch('ctxdegree.adapters.simplex.solve_standard_form_sequence', return_value=[outcome, outcome]) as solve:
            self.assertEqual(adapter.solve_sequence(objectives, [[1]], [1]), [outcome, outcome])
        solve.assert_called_once_with(
            objectives=objectives,
            matrix=[[1]],
            rhs=[1],
            pivot_rule='bland',
            degenerate_limit=7,
        )

    def test_solve_sequence_values(self):
        results = adapters.ExactSimplexAdapter().solve_sequence([([1, 2], False), ([1, 2], True)], [[1, 1]], [1])
        self.assertEqual([r.value for r in results], [1, 2])

    @parameterized.expand([
        param('raises', {}, True),
        param('ignored', {'ignore_exceptions': True}, False),
    ])
    def test_solve_sequence_infeasible(self, label, adapter_kwargs, raises):
        adapter = adapters.ExactSimplexAdapter(**adapter_kwargs)
        if raises:
            with self.assertRaises(exceptions.Infeasible):
                adapter.solve_sequence([([1, 0], False)], [[1, 1]], [-1])
            return
        results = adapter.solve_sequence([([1, 0], False)], [[1, 1]], [-1])
        self.assertEqual(results[0].status, utils.STATUS_INFEASIBLE)

    def test_default_solve_sequence(self):
        class SingleSolveAdapter(adapters.Adapter):
            def solve(self, objective, matrix, rhs, maximize=False, raise_exception=True):
                return LPResult(utils.STATUS_OPTIMAL, -1 if maximize else 1, None, None, None, 0)

        results = SingleSolveAdapter().solve_sequence([([1], False), ([1], True)], [[1]], [1])
        self.assertEqual([r.value for r in results], [1, -1])
