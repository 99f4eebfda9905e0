#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Linear programs over the atoms of a system.

The programs only use the marginal matrix and the exact simplex behind the adapter; none of the closed-form measures
take part, so their results serve as an independent check of those measures.
"""
import logging
from collections import namedtuple
from fractions import Fraction

from ctxdegree.adapters import ExactSimplexAdapter
from ctxdegree.api.contextuality_api_base import ContextualityApiBase
from ctxdegree.api.polytope.vertices import build_marginal_matrix
from ctxdegree.constants.systems import VALUE_COMBINATIONS
from ctxdegree.core.coupling import Coupling
from ctxdegree.core.observables import validate_connections
from ctxdegree.core.tables import ContextTable

logger = logging.getLogger(__name__)

LPProblem = namedtuple('LPProblem', ['descriptor', 'objective', 'matrix', 'rhs', 'labels'])
LPProblem.__doc__ = """A standard-form program over the atoms of a system: ``objective . q`` subject to
``matrix q = rhs`` and ``q >= 0``. ``labels`` names each row: (pair name, value combination) or "normalization"."""


class CouplingFeasibility(namedtuple('CouplingFeasibility', ['feasible', 'witness'])):
    """Outcome of a feasibility test; truthy iff feasible, with a witness coupling when it is."""
    __slots__ = ()

    def __bool__(self):
        return self.feasible


def observed_probabilities(values, pair):
    """The four probabilities of a pair, in table order, from its product and single expectations.

    :param values: Expectations keyed by coordinate name; must hold the pair's product and both singles.
    :type values: dict
    :param pair: The pair.
    :type pair: ctxdegree.core.PairSpec
    :rtype: tuple[Fraction]
    """
    first, second = pair.singles
    return ContextTable.from_expectations(values[pair.name], values[first], values[second], path=pair.name).cells


def disagreement_counts(d):
    """Number of connections whose two variables differ, for every atom."""
    return [
        sum(1 for pair in d.connection_pairs if d.value(atom, pair.variables[0]) != d.value(atom, pair.variables[1]))
        for atom in range(d.atom_count)
    ]


def build_problem(obs, conn=None):
    """The coupling-cost program of a system.

    :param obs: Observed expectations.
    :type obs: ctxdegree.core.BellObservables | ctxdegree.core.LGObservables
    :param conn: Connection expectations to impose as well.
    :type conn: ctxdegree.core.BellConnections | ctxdegree.core.LGConnections
    :return: One row per observed probability (and per connection probability when ``conn`` is given), then the
        normalization row.
    :rtype: LPProblem
    """
    d = obs.descriptor
    values = obs.coordinates()
    pairs = list(d.observed_pairs)
    if conn is not None:
        validate_connections(obs, conn)
        values.update(conn.coordinates())
        pairs.extend(d.connection_pairs)
    marginal = build_marginal_matrix(d).select(pair.name for pair in pairs)

    probabilities = {pair.name: observed_probabilities(values, pair) for pair in pairs}
    rhs = [probabilities[name][VALUE_COMBINATIONS.index(combination)] for name, combination in marginal.labels]
    matrix = [list(row) for row in marginal.rows] + [[1] * d.atom_count]
    rhs.append(Fraction(1))
    labels = marginal.labels + ('normalization',)
    return LPProblem(d, disagreement_counts(d), matrix, rhs, labels)


def marginals_problem(obs):
    """The coupling-cost program constrained by the single expectations only."""
    d = obs.descriptor
    values = obs.coordinates()
    matrix, rhs, labels = [], [], []
    for variable, single in zip(d.variables, (v.lower() for v in d.variables)):
        matrix.append([int(d.value(atom, variable) == 1) for atom in range(d.atom_count)])
        rhs.append((1 + values[single]) / 2)
        labels.append((single, 1))
    matrix.append([1] * d.atom_count)
    rhs.append(Fraction(1))
    labels.append('normalization')
    return LPProblem(d, disagreement_counts(d), matrix, rhs, tuple(labels))


def _adapter_or_default(adapter):
    return adapter if adapter is not None else ExactSimplexAdapter()


def min_delta_coupling(obs, adapter=None):
    """Minimal coupling cost and a coupling attaining it.

    :raises: ctxdegree.exceptions.Infeasible, with a Farkas certificate, when no coupling matches ``obs``.
    :rtype: (Fraction, ctxdegree.core.Coupling)
    """
    problem = build_problem(obs)
    result = _adapter_or_default(adapter).minimize(problem.objective, problem.matrix, problem.rhs)
    logger.debug('min delta %s after %d pivots', result.value, result.iterations)
    return result.value, Coupling(problem.descriptor, result.x)


def min_delta_lp(obs, adapter=None):
    """Minimal expected number of disagreeing connections over all couplings of the observed pairs.

    :param obs: Observed expectations.
    :type obs: ctxdegree.core.BellObservables | ctxdegree.core.LGObservables
    :param adapter: LP adapter.
    :type adapter: ctxdegree.adapters.Adapter
    :return: The exact minimum.
    :rtype: Fraction
    """
    return min_delta_coupling(obs, adapter=adapter)[0]


def max_delta_lp(obs, adapter=None):
    """Maximal expected number of disagreeing connections over all couplings of the observed pairs."""
    problem = build_problem(obs)
    return _adapter_or_default(adapter).maximize(problem.objective, problem.matrix, problem.rhs).value


def delta_range_lp(obs, adapter=None):
    """Minimal and maximal coupling cost, solved over one shared feasible basis.

    :param obs: Observed expectations.
    :type obs: ctxdegree.core.BellObservables | ctxdegree.core.LGObservables
    :param adapter: LP adapter.
    :type adapter: ctxdegree.adapters.Adapter
    :return: (minimum, maximum) of the expected number of disagreeing connections.
    :rtype: (Fraction, Fraction)
    """
    problem = build_problem(obs)
    low, high = _adapter_or_default(adapter).solve_sequence(
        [(problem.objective, False), (problem.objective, True)],
        problem.matrix,
        problem.rhs,
    )
    logger.debug('delta range [%s, %s] after %d pivots', low.value, high.value, high.iterations)
    return low.value, high.value


def min_delta_marginals_lp(obs, adapter=None):
    """Minimal coupling cost when only the single expectations are imposed."""
    problem = marginals_problem(obs)
    return _adapter_or_default(adapter).minimize(problem.objective, problem.matrix, problem.rhs).value


def coupling_feasible(obs, conn, adapter=None):
    """Whether one coupling matches both the observed and the given connection expectations.

    :param obs: Observed expectations.
    :type obs: ctxdegree.core.BellObservables | ctxdegree.core.LGObservables
    :param conn: Connection expectations of the same system.
    :type conn: ctxdegree.core.BellConnections | ctxdegree.core.LGConnections
    :param adapter: LP adapter.
    :type adapter: ctxdegree.adapters.Adapter
    :return: The outcome, with a witness coupling when feasible.
    :rtype: CouplingFeasibility
    :raises: ctxdegree.exceptions.InvalidObservables when a connection violates its implicit constraint.
    """
    problem = build_problem(obs, conn)
    result = _adapter_or_default(adapter).solve([0] * problem.descriptor.atom_count, problem.matrix, problem.rhs,
                                                raise_exception=False)
    if result.x is None:
        return CouplingFeasibility(False, None)
    return CouplingFeasibility(True, Coupling(problem.descriptor, result.x))


class CouplingLP(ContextualityApiBase):
    """Coupling programs solved with the shared adapter."""

    def min_delta(self, obs):
        return min_delta_lp(obs, adapter=self._adapter)

    def min_delta_coupling(self, obs):
        return min_delta_coupling(obs, adapter=self._adapter)

    def max_delta(self, obs):
        return max_delta_lp(obs, adapter=self._adapter)

    def delta_range(self, obs):
        return delta_range_lp(obs, adapter=self._adapter)

    def min_delta_marginals(self, obs):
        return min_delta_marginals_lp(obs, adapter=self._adapter)

    def coupling_feasible(self, obs, conn):
        return coupling_feasible(obs, conn, adapter=self._adapter)
