#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Closed-form contextuality measures of the Leggett-Garg (cyclic-3) system."""
import logging
from fractions import Fraction

from ctxdegree import exceptions, utils
from ctxdegree.api.contextuality_api_base import ContextualityApiBase
from ctxdegree.api.measures.bell import _require, connection_singles
from ctxdegree.api.measures.reports import LGReport
from ctxdegree.api.measures.signed_sums import s_even, s_odd
from ctxdegree.core.observables import LGConnections, LGObservables

logger = logging.getLogger(__name__)

UPPER_FORM_S0 = 's0'
UPPER_FORM_S1 = 's1'


def delta0_lg(obs):
    """Smallest coupling cost allowed by the single marginals alone.

    :param obs: Observed expectations.
    :type obs: ctxdegree.core.LGObservables
    :return: 1/2 (|x12 - x13| + |y12 - y23| + |z13 - z23|)
    :rtype: Fraction
    """
    _require(obs, LGObservables)
    return sum((abs(u - v) for u, v in connection_singles(obs)), Fraction(0)) / 2


def delta_sz(obs):
    """Half the excess of the largest Suppes-Zanotti combination over 1: -1/2 + s_odd(xy, xz, yz) / 2."""
    _require(obs, LGObservables)
    return Fraction(-1, 2) + s_odd(obs.products) / 2


def delta_min_value_lg(obs):
    return max(delta0_lg(obs), delta_sz(obs))


def sz_combinations(obs):
    """The four odd-signed sums of xy, yz and xz bounded by 1 + 2 delta0."""
    _require(obs, LGObservables)
    xy, yz, xz = obs.xy, obs.yz, obs.xz
    return (
        xy + yz - xz,
        xy - yz + xz,
        -xy + yz + xz,
        -xy - yz - xz,
    )


def _singles_upper(obs):
    return 3 - sum((abs(u + v) for u, v in connection_singles(obs)), Fraction(0)) / 2


def delta_bounds_lg(obs):
    """Tightest lower and upper bounds on the coupling cost of any coupling of the system.

    :return: (max(-1/2 + s_odd(p)/2, delta0), min(7/2 - s_even(p)/2, 3 - sum|u + v|/2)) with p = (xy, xz, yz) and
        (u, v) the singles of the three connections.
    :rtype: (Fraction, Fraction)
    """
    _require(obs, LGObservables)
    lower = max(Fraction(-1, 2) + s_odd(obs.products) / 2, delta0_lg(obs))
    upper = min(Fraction(7, 2) - s_even(obs.products) / 2, _singles_upper(obs))
    return lower, upper


def lg_upper_bound_candidates(obs):
    """Upper bound on the coupling cost under both competing product terms.

    "s0" uses 3 - (-1/2 + s_even(p)/2), "s1" uses 3 - (-1/2 - s_odd(p)/2); both are combined with the singles term.

    :rtype: dict
    """
    _require(obs, LGObservables)
    singles = _singles_upper(obs)
    return {
        UPPER_FORM_S0: min(Fraction(7, 2) - s_even(obs.products) / 2, singles),
        UPPER_FORM_S1: min(Fraction(7, 2) + s_odd(obs.products) / 2, singles),
    }


def marginal_selectivity_lg(obs, tol=0):
    """Whether <X12> = <X13>, <Y12> = <Y23> and <Z13> = <Z23> hold within ``tol``."""
    _require(obs, LGObservables)
    tol = utils.to_rational(tol, 'tol')
    if tol < 0:
        raise exceptions.ParamValidationError('tol must be nonnegative, got {0}'.format(tol))
    return all(abs(u - v) <= tol for u, v in connection_singles(obs))


def connections_compatible_lg(obs, conn):
    """Whether some coupling has both the observed and the given connection expectations.

    Closed form: s_odd(xy, xz, yz, xx, yy, zz) <= 4 and each connection admissible for its two singles.

    :type obs: ctxdegree.core.LGObservables
    :type conn: ctxdegree.core.LGConnections
    :rtype: bool
    """
    _require(obs, LGObservables)
    _require(conn, LGConnections)
    connections = (conn.xx, conn.yy, conn.zz)
    for (u, v), value in zip(connection_singles(obs), connections):
        lower, upper = utils.implicit_bounds(u, v)
        if not lower <= value <= upper:
            return False
    return s_odd(obs.products + connections) <= 4


def delta_min_lg(obs):
    """Full analysis of a Leggett-Garg system.

    Besides the four-inequality form the report carries the equivalent two-sided form
    ``-1 - 2 delta0 <= xy + yz + xz <= 1 + 2 delta0 + 2 min(xy, yz, xz)``.

    :param obs: Observed expectations.
    :type obs: ctxdegree.core.LGObservables
    :return: The report; its degree is delta_min - delta0.
    :rtype: ctxdegree.api.measures.reports.LGReport
    """
    delta0 = delta0_lg(obs)
    violation = delta_sz(obs)
    delta_min = max(delta0, violation)
    lower, upper = delta_bounds_lg(obs)
    bound = 1 + 2 * delta0
    combinations = sz_combinations(obs)
    sz_sum = obs.xy + obs.yz + obs.xz
    sz_lower = -1 - 2 * delta0
    sz_upper = 1 + 2 * delta0 + 2 * min(obs.products)
    return LGReport(
        delta0=delta0,
        delta_sz=violation,
        delta_min=delta_min,
        degree=delta_min - delta0,
        sz_lhs=combinations,
        bound=bound,
        marginal_selectivity=delta0 == 0,
        delta_lower=lower,
        delta_upper=upper,
        sz_sum=sz_sum,
        sz_lower=sz_lower,
        sz_upper=sz_upper,
    )


class LeggettGarg(ContextualityApiBase):
    """Closed-form measures of the Leggett-Garg system."""

    def delta0(self, obs):
        return delta0_lg(obs)

    def delta_sz(self, obs):
        return delta_sz(obs)

    def delta_min(self, obs):
        return delta_min_value_lg(obs)

    def delta_bounds(self, obs):
        return delta_bounds_lg(obs)

    def upper_bound_candidates(self, obs):
        return lg_upper_bound_candidates(obs)

    def marginal_selectivity(self, obs, tol=0):
        return marginal_selectivity_lg(obs, tol=tol)

    def connections_compatible(self, obs, conn):
        return connections_compatible_lg(obs, conn)

    def contextuality_degree(self, obs):
        return delta_min_lg(obs)
