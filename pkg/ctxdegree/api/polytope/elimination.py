#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Fourier-Motzkin elimination and LP redundancy removal.

Every linear program here is solved in its dual form through the adapter: maximizing ``c . x`` over
``{A x <= b, E x = e}`` becomes minimizing ``b . y + e . z`` subject to ``A^T y + E^T z = c`` and ``y >= 0``. That
program has one row per coordinate, so it stays small however many rows the system grows to, and its optimal row
prices are a maximizing point ``x``.
"""
import logging
from fractions import Fraction

from ctxdegree import utils
from ctxdegree.adapters import ExactSimplexAdapter
from ctxdegree.api.contextuality_api_base import ContextualityApiBase
from ctxdegree.core.linear_system import LinearSystem

logger = logging.getLogger(__name__)


def tighten_parallel(sys):
    """Keep only the tightest of every group of inequalities with proportional left-hand sides."""
    best = {}
    for coefficients, bound in sys.inequalities:
        divisor = utils.gcd_of(coefficients) or 1
        direction = tuple(c // divisor for c in coefficients)
        scaled = Fraction(bound, divisor)
        if direction not in best or scaled < best[direction]:
            best[direction] = scaled
    if len(best) == len(sys.inequalities):
        return sys
    return LinearSystem(
        sys.coordinates,
        inequalities=list(best.items()),
        equalities=[(coefficients, rhs) for coefficients, rhs in sys.equalities],
    )


def fourier_motzkin_eliminate(sys, var):
    """Project a system onto all coordinates but one.

    Every row bounding ``var`` from below is combined with every row bounding it from above; rows without ``var`` are
    kept. When an equality involves ``var`` it is solved for ``var`` and substituted instead.

    :param sys: The system.
    :type sys: ctxdegree.core.LinearSystem
    :param var: Coordinate to eliminate. A coordinate the system does not declare leaves it unchanged.
    :type var: str
    :return: The projection over the remaining coordinates, with parallel rows tightened.
    :rtype: ctxdegree.core.LinearSystem
    """
    if var not in sys.coordinates:
        return sys
    k = sys.index(var)
    if any(row[0][k] for row in sys.equalities):
        logger.debug('eliminating %s by substitution', var)
        return tighten_parallel(sys.substitute(var))

    upper = [row for row in sys.inequalities if row[0][k] > 0]
    lower = [row for row in sys.inequalities if row[0][k] < 0]
    rows = [row for row in sys.inequalities if row[0][k] == 0]
    for upper_coefficients, upper_bound in upper:
        for lower_coefficients, lower_bound in lower:
            weight_upper, weight_lower = -lower_coefficients[k], upper_coefficients[k]
            rows.append((
                [weight_upper * a + weight_lower * b for a, b in zip(upper_coefficients, lower_coefficients)],
                weight_upper * upper_bound + weight_lower * lower_bound,
            ))

    def drop(row):
        coefficients = list(row[0])
        del coefficients[k]
        return coefficients, row[1]

    result = tighten_parallel(LinearSystem(
        sys.coordinates[:k] + sys.coordinates[k + 1:],
        inequalities=[drop(row) for row in rows],
        equalities=[drop(row) for row in sys.equalities],
    ))
    logger.debug('eliminated %s: %d rows (%d upper x %d lower) -> %d rows', var, len(sys.inequalities), len(upper),
                 len(lower), len(result.inequalities))
    return result


def _solve_dual(adapter, width, rows, equalities, target, with_slack=False):
    """Dual program of ``max target . x`` over ``rows`` and ``equalities``.

    With ``with_slack`` the primal is instead ``max t`` subject to ``a . x + t <= b`` for every row and ``t <= 1``;
    its optimal point is then ``(x, t)``.
    """
    columns, costs = [], []
    for coefficients, bound in rows:
        columns.append(list(coefficients) + ([1] if with_slack else []))
        costs.append(bound)
    for coefficients, rhs in equalities:
        for sign in (1, -1):
            columns.append([sign * c for c in coefficients] + ([0] if with_slack else []))
            costs.append(sign * rhs)
    if with_slack:
        columns.append([0] * width + [1])
        costs.append(1)
        rhs = [0] * width + [1]
    else:
        rhs = list(target)
    matrix = [[column[i] for column in columns] for i in range(len(rhs))]
    return adapter.minimize(costs, matrix, rhs, raise_exception=False)


def _maximize(adapter, width, rows, equalities, target):
    """Maximum of ``target . x`` and a point attaining it, or None when unbounded."""
    result = _solve_dual(adapter, width, rows, equalities, target)
    if result.status != utils.STATUS_OPTIMAL:
        return None
    return result.value, result.duals[:width]


def _interior_point(adapter, width, rows, equalities):
    """Largest common slack ``t <= 1`` of the rows and a point with that slack, or None if the equalities conflict.

    ``t > 0`` gives a point strictly inside every inequality, ``t < 0`` means the system is infeasible.
    """
    result = _solve_dual(adapter, width, rows, equalities, None, with_slack=True)
    if result.status != utils.STATUS_OPTIMAL:
        return None
    return result.value, result.duals[:width]


def _is_feasible(adapter, width, rows, equalities):
    interior = _interior_point(adapter, width, rows, equalities)
    return interior is not None and interior[0] >= 0


def _is_redundant(adapter, width, others, equalities, row):
    optimum = _maximize(adapter, width, others, equalities, row[0])
    return optimum is not None and optimum[0] <= row[1]


def _first_hits(rows, origin, point):
    """Rows first crossed by the ray from ``origin`` through ``point``."""
    direction = [p - o for p, o in zip(point, origin)]
    hits, best = [], None
    for row in rows:
        coefficients, bound = row
        speed = sum((c * d for c, d in zip(coefficients, direction) if c), Fraction(0))
        if speed <= 0:
            continue
        step = (bound - sum((c * o for c, o in zip(coefficients, origin) if c), Fraction(0))) / speed
        if best is None or step < best:
            hits, best = [row], step
        elif step == best:
            hits.append(row)
    return hits


def _ray_shooting(adapter, width, rows, equalities, origin):
    """Irredundant rows of a system with a strictly interior point ``origin``.

    Each LP runs against the rows already confirmed plus the row under test relaxed by one; when the row is not
    implied, the ray from ``origin`` towards the maximizer confirms the first row it crosses.
    """
    remaining = list(rows)
    confirmed, confirmed_set = [], set()
    lp_count = 0
    for row in rows:
        while row not in confirmed_set:
            relaxed = (row[0], row[1] + 1)
            value, point = _maximize(adapter, width, confirmed + [relaxed], equalities, row[0])
            lp_count += 1
            if value <= row[1]:
                remaining.remove(row)
                break
            hits = _first_hits(remaining, origin, point)
            if len(hits) > 1:
                # several rows meet where the ray leaves; decide this row directly
                lp_count += 1
                if _is_redundant(adapter, width, [r for r in remaining if r != row], equalities, row):
                    remaining.remove(row)
                    break
                hits = [row]
            confirmed.append(hits[0])
            confirmed_set.add(hits[0])
    logger.debug('ray shooting kept %d of %d rows with %d LPs', len(remaining), len(rows), lp_count)
    return remaining


def _sequential(adapter, width, rows, equalities):
    """Irredundant rows found by testing each row against all rows still kept."""
    kept = list(rows)
    for row in rows:
        others = [r for r in kept if r != row]
        if _is_redundant(adapter, width, others, equalities, row):
            kept = others
    return kept


def _deletion_filter(adapter, width, rows, equalities):
    """An irreducible infeasible subset of the rows of an infeasible system."""
    kept = list(rows)
    for row in rows:
        trial = [r for r in kept if r != row]
        if not _is_feasible(adapter, width, trial, equalities):
            kept = trial
    return kept


def remove_redundant(sys, adapter=None):
    """Drop every inequality whose removal leaves the feasible set unchanged.

    A feasible system with a strictly interior point is reduced by ray shooting; a feasible system without one has
    each row tested against all others, keeping rows whose LP is unbounded. An infeasible system is reduced to an
    irreducible infeasible subset, a single ``0 <= -1`` row when it carries one. Equalities are always kept.

    :param sys: The system.
    :type sys: ctxdegree.core.LinearSystem
    :param adapter: LP adapter, defaults to an :py:class:`ctxdegree.adapters.ExactSimplexAdapter`.
    :type adapter: ctxdegree.adapters.Adapter
    :return: The reduced system.
    :rtype: ctxdegree.core.LinearSystem
    """
    if adapter is None:
        adapter = ExactSimplexAdapter()
    width = len(sys.coordinates)
    rows = list(sys.inequalities)
    equalities = list(sys.equalities)

    contradictions = [row for row in rows if not any(row[0])]
    if contradictions:
        kept = contradictions[:1]
    else:
        interior = _interior_point(adapter, width, rows, equalities)
        if interior is None or interior[0] < 0:
            logger.debug('system is infeasible, reducing to an infeasible subset')
            kept = _deletion_filter(adapter, width, rows, equalities)
        elif interior[0] > 0:
            kept = _ray_shooting(adapter, width, rows, equalities, interior[1])
        else:
            logger.debug('system has no interior point, testing rows one by one')
            kept = _sequential(adapter, width, rows, equalities)

    result = LinearSystem(sys.coordinates, inequalities=kept, equalities=equalities)
    logger.info('redundancy removal: %d -> %d inequalities', len(rows), len(result.inequalities))
    return result


class Elimination(ContextualityApiBase):
    """Projection and reduction of linear systems with the shared adapter."""

    def eliminate(self, sys, var):
        return fourier_motzkin_eliminate(sys, var)

    def remove_redundant(self, sys):
        return remove_redundant(sys, adapter=self._adapter)

    def project(self, sys, names):
        """Eliminate several coordinates in order, removing redundant rows after each step."""
        for name in names:
            sys = remove_redundant(fourier_motzkin_eliminate(sys, name), adapter=self._adapter)
        return sys
