#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Exact two-phase revised simplex over rationals.

Programs are taken in standard form: minimize (or maximize) ``c.x`` subject to ``A x = b`` and ``x >= 0``. The basis
inverse is kept explicitly as rows of fractions and the constraint matrix is stored column-wise and sparse, which suits
the short and wide programs of this package (a couple dozen rows against a few hundred columns).
"""
import logging
from collections import namedtuple
from fractions import Fraction

from ctxdegree import exceptions, utils
from ctxdegree.constants import client as client_constants

logger = logging.getLogger(__name__)

LPResult = namedtuple('LPResult', ['status', 'value', 'x', 'duals', 'certificate', 'iterations'])
LPResult.__doc__ = """Outcome of a linear program.

``x`` is the primal solution and ``duals`` the row prices ``y`` with ``y A <= c`` at a minimum. For an infeasible
program ``certificate`` holds a Farkas vector ``y`` with ``y A <= 0`` and ``y b > 0``.
"""


class _RevisedSimplex(object):

    def __init__(self, columns, rhs, pivot_rule, degenerate_limit):
        self.columns = columns
        self.n = len(columns)
        self.m = len(rhs)
        self.basis = [self.n + i for i in range(self.m)]
        self.position = {var: r for r, var in enumerate(self.basis)}
        self.binv = [[Fraction(int(i == k)) for k in range(self.m)] for i in range(self.m)]
        self.xb = list(rhs)
        self.bland = pivot_rule == client_constants.PIVOT_RULE_BLAND
        self.degenerate_limit = degenerate_limit
        self.degenerate_streak = 0
        self.iterations = 0
        # integral columns are priced in integers over a common denominator
        if all(v.denominator == 1 for col in columns for _, v in col):
            self.integer_columns = [[(i, v.numerator) for i, v in col] for col in columns]
        else:
            self.integer_columns = None

    def column(self, j):
        if j >= self.n:
            return [(j - self.n, Fraction(1))]
        return self.columns[j]

    def cost_of(self, costs, artificial_cost, var):
        return costs[var] if var < self.n else artificial_cost

    def prices(self, costs, artificial_cost):
        pi = [Fraction(0)] * self.m
        for r, var in enumerate(self.basis):
            weight = self.cost_of(costs, artificial_cost, var)
            if not weight:
                continue
            row = self.binv[r]
            for i in range(self.m):
                if row[i]:
                    pi[i] += weight * row[i]
        return pi

    def direction(self, j):
        col = self.column(j)
        return [sum((row[i] * v for i, v in col), Fraction(0)) for row in self.binv]

    def reduced_costs(self, costs, pi):
        """Reduced costs of the structural columns, all scaled by one positive factor."""
        if self.integer_columns is None:
            return [costs[j] - sum((pi[i] * v for i, v in self.columns[j]), Fraction(0)) for j in range(self.n)]
        scale = utils.lcm_of([p.denominator for p in pi] + [c.denominator for c in costs])
        scaled_pi = [p.numerator * (scale // p.denominator) for p in pi]
        return [
            c.numerator * (scale // c.denominator) - sum(scaled_pi[i] * v for i, v in col)
            for c, col in zip(costs, self.integer_columns)
        ]

    def entering(self, costs, pi):
        best, best_reduced = None, 0
        for j, reduced in enumerate(self.reduced_costs(costs, pi)):
            if reduced >= 0 or j in self.position:
                continue
            if self.bland:
                return j
            if best is None or reduced < best_reduced:
                best, best_reduced = j, reduced
        return best

    def leaving(self, u):
        best, best_ratio = None, None
        for r in range(self.m):
            if self.basis[r] >= self.n and u[r] != 0 and self.xb[r] == 0:
                # artificial at level zero leaves before it can turn positive
                ratio = Fraction(0)
            elif u[r] > 0:
                ratio = self.xb[r] / u[r]
            else:
                continue
            if best is None or ratio < best_ratio or (ratio == best_ratio and self.basis[r] < self.basis[best]):
                best, best_ratio = r, ratio
        return best

    def pivot(self, r, q, u):
        theta = self.xb[r] / u[r]
        pivot_row = [v / u[r] for v in self.binv[r]]
        for k in range(self.m):
            factor = u[k]
            if k == r or not factor:
                continue
            self.binv[k] = [a - factor * b if b else a for a, b in zip(self.binv[k], pivot_row)]
            self.xb[k] -= factor * theta
        self.binv[r] = pivot_row
        self.xb[r] = theta
        del self.position[self.basis[r]]
        self.basis[r] = q
        self.position[q] = r
        self.iterations += 1

        if theta == 0:
            self.degenerate_streak += 1
            if not self.bland and self.degenerate_streak >= self.degenerate_limit:
                logger.debug('%d degenerate pivots in a row, switching to Bland\'s rule', self.degenerate_streak)
                self.bland = True
        else:
            self.degenerate_streak = 0

    def run(self, costs, artificial_cost=0):
        """Pivot to an optimum of ``costs`` over the structural columns from the current feasible basis."""
        while True:
            pi = self.prices(costs, artificial_cost)
            q = self.entering(costs, pi)
            if q is None:
                return utils.STATUS_OPTIMAL, pi
            u = self.direction(q)
            r = self.leaving(u)
            if r is None:
                return utils.STATUS_UNBOUNDED, pi
            self.pivot(r, q, u)

    def drive_out_artificials(self):
        for r in range(self.m):
            if self.basis[r] < self.n:
                continue
            row = self.binv[r]
            for j in range(self.n):
                if j in self.position:
                    continue
                if sum((row[i] * v for i, v in self.columns[j]), Fraction(0)) != 0:
                    self.pivot(r, j, self.direction(j))
                    break


def _phase_one(objectives, matrix, rhs, pivot_rule, degenerate_limit):
    utils.validate_choice_param('pivot_rule', pivot_rule, client_constants.ALLOWED_PIVOT_RULES)
    if not objectives:
        raise exceptions.ParamValidationError('at least one objective is required')
    n = len(objectives[0][0])
    if any(len(objective) != n for objective, _ in objectives):
        raise exceptions.ParamValidationError('objectives differ in length')
    if len(matrix) != len(rhs):
        raise exceptions.ParamValidationError('matrix has {rows} rows but rhs has {entries} entries'.format(
            rows=len(matrix),
            entries=len(rhs),
        ))
    for i, row in enumerate(matrix):
        if len(row) != n:
            raise exceptions.ParamValidationError('row {i} has {got} entries, expected {n}'.format(i=i, got=len(row), n=n))

    signs = [-1 if b < 0 else 1 for b in rhs]
    b = [Fraction(value) * sign for value, sign in zip(rhs, signs)]
    columns = [
        [(i, Fraction(matrix[i][j]) * signs[i]) for i in range(len(matrix)) if matrix[i][j] != 0]
        for j in range(n)
    ]

    solver = _RevisedSimplex(columns, b, pivot_rule=pivot_rule, degenerate_limit=degenerate_limit)
    _, phase_one_prices = solver.run([Fraction(0)] * n, artificial_cost=1)
    infeasibility = sum((solver.xb[r] for r, var in enumerate(solver.basis) if var >= n), Fraction(0))
    if infeasibility > 0:
        certificate = [p * sign for p, sign in zip(phase_one_prices, signs)]
        logger.debug('infeasible after %d pivots', solver.iterations)
        return solver, signs, LPResult(utils.STATUS_INFEASIBLE, None, None, None, certificate, solver.iterations)
    solver.drive_out_artificials()
    return solver, signs, None


def _phase_two(solver, signs, objective, maximize):
    n = solver.n
    original = [Fraction(v) for v in objective]
    costs = [-v for v in original] if maximize else original
    if any(costs):
        status, prices = solver.run(costs)
    else:
        # any feasible basis is optimal for a zero objective
        status, prices = utils.STATUS_OPTIMAL, [Fraction(0)] * solver.m
    logger.debug('%s after %d pivots (%d rows, %d columns)', status, solver.iterations, solver.m, n)
    if status == utils.STATUS_UNBOUNDED:
        return LPResult(status, None, None, None, None, solver.iterations)

    x = [Fraction(0)] * n
    for r, var in enumerate(solver.basis):
        if var < n:
            x[var] = solver.xb[r]
    value = sum((c * v for c, v in zip(original, x)), Fraction(0))
    duals = [p * sign for p, sign in zip(prices, signs)]
    if maximize:
        duals = [-y for y in duals]
    return LPResult(status, value, x, duals, None, solver.iterations)


def solve_standard_form_sequence(objectives, matrix, rhs, pivot_rule=client_constants.DEFAULT_PIVOT_RULE,
                                 degenerate_limit=client_constants.DEFAULT_DEGENERATE_LIMIT):
    """Optimize several objectives over one feasible region ``A x = b``, ``x >= 0``.

    Phase one runs once; each objective then starts from the basis the previous one ended in.

    :param objectives: (objective vector, maximize flag) pairs, all of the same length.
    :type objectives: list[tuple]
    :param matrix: Constraint matrix A as a list of rows.
    :type matrix: list[list]
    :param rhs: Right-hand side b, one entry per row.
    :type rhs: list
    :param pivot_rule: "bland" or "hybrid", as for :py:func:`solve_standard_form`.
    :type pivot_rule: str
    :param degenerate_limit: Degenerate streak length that triggers the fallback of the hybrid rule.
    :type degenerate_limit: int
    :return: One outcome per objective, in order; every outcome is the infeasible one when the region is empty.
    :rtype: list[LPResult]
    """
    objectives = [(list(objective), maximize) for objective, maximize in objectives]
    solver, signs, infeasible = _phase_one(objectives, matrix, rhs, pivot_rule, degenerate_limit)
    if infeasible is not None:
        return [infeasible] * len(objectives)
    return [_phase_two(solver, signs, objective, maximize) for objective, maximize in objectives]


def solve_standard_form(objective, matrix, rhs, maximize=False, pivot_rule=client_constants.DEFAULT_PIVOT_RULE,
                        degenerate_limit=client_constants.DEFAULT_DEGENERATE_LIMIT):
    """Solve ``min/max c.x`` subject to ``A x = b``, ``x >= 0`` exactly.

    :param objective: Cost vector c, one entry per column.
    :type objective: list
    :param matrix: Constraint matrix A as a list of rows.
    :type matrix: list[list]
    :param rhs: Right-hand side b, one entry per row.
    :type rhs: list
    :param maximize: Maximize instead of minimize.
    :type maximize: bool
    :param pivot_rule: "bland" for Bland's rule throughout, or "hybrid" for Dantzig's rule that falls back to Bland's
        rule after ``degenerate_limit`` consecutive degenerate pivots.
    :type pivot_rule: str
    :param degenerate_limit: Degenerate streak length that triggers the fallback of the hybrid rule.
    :type degenerate_limit: int
    :return: The solver outcome.
    :rtype: LPResult
    """
    return solve_standard_form_sequence(
        [(objective, maximize)],
        matrix,
        rhs,
        pivot_rule=pivot_rule,
        degenerate_limit=degenerate_limit,
    )[0]
