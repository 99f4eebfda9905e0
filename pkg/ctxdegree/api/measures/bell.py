#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Closed-form contextuality measures of the Bell (2x2) system."""
import logging
from fractions import Fraction

from ctxdegree import exceptions, utils
from ctxdegree.api.contextuality_api_base import ContextualityApiBase
from ctxdegree.api.measures.reports import BellReport
from ctxdegree.api.measures.signed_sums import s_even, s_odd
from ctxdegree.core.observables import BellConnections, BellObservables

logger = logging.getLogger(__name__)


def _require(obs, cls):
    if not isinstance(obs, cls):
        raise exceptions.ParamValidationError('expected {expected}, got {got}'.format(
            expected=cls.__name__,
            got=type(obs).__name__,
        ))


def connection_singles(obs):
    """(first single, second single) expectations of each connection, in connection order."""
    values = obs.coordinates()
    return [(values[pair.singles[0]], values[pair.singles[1]]) for pair in obs.descriptor.connection_pairs]


def delta0_bell(obs):
    """Smallest coupling cost allowed by the single marginals alone.

    :param obs: Observed expectations.
    :type obs: ctxdegree.core.BellObservables
    :return: 1/2 (|a11 - a12| + |a21 - a22| + |b11 - b21| + |b12 - b22|)
    :rtype: Fraction
    """
    _require(obs, BellObservables)
    return sum((abs(u - v) for u, v in connection_singles(obs)), Fraction(0)) / 2


def delta_chsh(obs):
    """Half the excess of the largest CHSH combination over 2; negative when no CHSH inequality is violated.

    :param obs: Observed expectations.
    :type obs: ctxdegree.core.BellObservables
    :return: s_odd(ab11, ab12, ab21, ab22) / 2 - 1
    :rtype: Fraction
    """
    _require(obs, BellObservables)
    return s_odd(obs.products) / 2 - 1


def delta_min_bell(obs):
    """Minimal coupling cost: max(delta0, delta_chsh)."""
    return max(delta0_bell(obs), delta_chsh(obs))


def chsh_combinations(obs):
    """The four |+/-ab11 +/-ab12 +/-ab21 +/-ab22| with exactly one minus, the minus moving from ab22 to ab11."""
    _require(obs, BellObservables)
    ab11, ab12, ab21, ab22 = obs.products
    return (
        abs(ab11 + ab12 + ab21 - ab22),
        abs(ab11 + ab12 - ab21 + ab22),
        abs(ab11 - ab12 + ab21 + ab22),
        abs(-ab11 + ab12 + ab21 + ab22),
    )


def delta_bounds_bell(obs):
    """Tightest lower and upper bounds on the coupling cost of any coupling of the system.

    :return: (max(-1 + s_odd(ab)/2, delta0), min(5 - s_odd(ab)/2, 4 - sum|u + v|/2)) where (u, v) run over the
        singles of the four connections.
    :rtype: (Fraction, Fraction)
    """
    _require(obs, BellObservables)
    s1 = s_odd(obs.products)
    lower = max(-1 + s1 / 2, delta0_bell(obs))
    upper = min(5 - s1 / 2, 4 - sum((abs(u + v) for u, v in connection_singles(obs)), Fraction(0)) / 2)
    return lower, upper


def marginal_selectivity_bell(obs, tol=0):
    """Whether <A_i1> = <A_i2> and <B_1j> = <B_2j> hold within ``tol``."""
    _require(obs, BellObservables)
    tol = utils.to_rational(tol, 'tol')
    if tol < 0:
        raise exceptions.ParamValidationError('tol must be nonnegative, got {0}'.format(tol))
    return all(abs(u - v) <= tol for u, v in connection_singles(obs))


def connections_compatible_bell(obs, conn):
    """Whether some coupling has both the observed and the given connection expectations.

    Closed form: s_even(ab) <= 6 - s_odd(conn), s_odd(ab) <= 6 - s_even(conn), and each connection admissible for the
    singles of its two variables.

    :type obs: ctxdegree.core.BellObservables
    :type conn: ctxdegree.core.BellConnections
    :rtype: bool
    """
    _require(obs, BellObservables)
    _require(conn, BellConnections)
    for (u, v), value in zip(connection_singles(obs), (conn.aa1, conn.aa2, conn.bb1, conn.bb2)):
        lower, upper = utils.implicit_bounds(u, v)
        if not lower <= value <= upper:
            return False
    connections = (conn.aa1, conn.bb1, conn.aa2, conn.bb2)
    return (s_even(obs.products) <= 6 - s_odd(connections)
            and s_odd(obs.products) <= 6 - s_even(connections))


def contextuality_degree_bell(obs):
    """Full analysis of a Bell system.

    :param obs: Observed expectations.
    :type obs: ctxdegree.core.BellObservables
    :return: The report; its degree is delta_min - delta0.
    :rtype: ctxdegree.api.measures.reports.BellReport
    """
    delta0 = delta0_bell(obs)
    violation = delta_chsh(obs)
    delta_min = max(delta0, violation)
    lower, upper = delta_bounds_bell(obs)
    report = BellReport(
        delta0=delta0,
        delta_chsh=violation,
        delta_min=delta_min,
        degree=delta_min - delta0,
        chsh_lhs=chsh_combinations(obs),
        bound=2 * (1 + delta0),
        marginal_selectivity=delta0 == 0,
        delta_lower=lower,
        delta_upper=upper,
    )
    logger.debug('bell report: %s', report)
    return report


class Bell(ContextualityApiBase):
    """Closed-form measures of the Bell system."""

    def delta0(self, obs):
        return delta0_bell(obs)

    def delta_chsh(self, obs):
        return delta_chsh(obs)

    def delta_min(self, obs):
        return delta_min_bell(obs)

    def delta_bounds(self, obs):
        return delta_bounds_bell(obs)

    def marginal_selectivity(self, obs, tol=0):
        return marginal_selectivity_bell(obs, tol=tol)

    def connections_compatible(self, obs, conn):
        return connections_compatible_bell(obs, conn)

    def contextuality_degree(self, obs):
        return contextuality_degree_bell(obs)
