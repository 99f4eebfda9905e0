"""Inequality systems written down from their closed forms, and matching of derived systems against them."""
import itertools
import logging
from collections import namedtuple

from ctxdegree import exceptions
from ctxdegree.constants import systems as systems_constants
from ctxdegree.core import descriptors
from ctxdegree.core.linear_system import LinearSystem

logger = logging.getLogger(__name__)

FacetPartition = namedtuple('FacetPartition', ['compatibility', 'implicit'])

UPPER_FORM_S0 = 's0'
UPPER_FORM_S1 = 's1'
UPPER_FORM_MIXED = 'mixed'


def _signed_patterns(length, odd):
    for signs in itertools.product((1, -1), repeat=length):
        if signs.count(-1) % 2 == int(odd):
            yield signs


def implicit_rows(pairs):
    """The four rows of -1 + |u + v| <= c <= 1 - |u - v| for each pair with product c and singles u, v."""
    rows = []
    for pair in pairs:
        c, (u, v) = pair.name, pair.singles
        rows.extend([
            ({c: -1, u: -1, v: -1}, 1),
            ({c: -1, u: 1, v: 1}, 1),
            ({c: 1, u: 1, v: -1}, 1),
            ({c: 1, u: -1, v: 1}, 1),
        ])
    return rows


def compatibility_rows(d):
    """s_odd over all pair products of the cycle bounded by its length minus 2, one row per odd sign pattern."""
    cycle = d.cycle_coordinates
    return [(dict(zip(cycle, signs)), len(cycle) - 2) for signs in _signed_patterns(len(cycle), odd=True)]


def closed_form_compatibility(d):
    """Compatibility system of observed and connection expectations.

    :param d: System descriptor or kind.
    :type d: ctxdegree.core.SystemDescriptor | str
    :return: 128 + 32 rows for Bell, 32 + 24 rows for LG, over the descriptor's coordinates.
    :rtype: ctxdegree.core.LinearSystem
    """
    d = descriptors.get_descriptor(d)
    return LinearSystem(d.coordinates, inequalities=compatibility_rows(d) + implicit_rows(d.pairs))


def closed_form_delta_system(d):
    """Bounds on the coupling cost in terms of the observed expectations.

    With k connections and a cycle of N pairs the rows are, for sign patterns sigma over the products and tau over
    the connections with singles (u, v):

    * ``sigma . p - 2 delta <= N - 2 - k`` for sigma with an odd number of minuses;
    * ``2 delta + sigma . p <= N - 2 + k`` for sigma whose minus count has the parity of k + 1;
    * ``sum tau (u - v) - 2 delta <= 0`` and ``2 delta + sum tau (u + v) <= 2k``;
    * the implicit rows of the observed pairs.

    :param d: System descriptor or kind.
    :type d: ctxdegree.core.SystemDescriptor | str
    :return: 64 rows for Bell, 36 for LG, over products, singles and "delta".
    :rtype: ctxdegree.core.LinearSystem
    """
    d = descriptors.get_descriptor(d)
    delta = systems_constants.DELTA
    k = len(d.connection_pairs)
    cycle_length = len(d.cycle_coordinates)
    rows = []
    for signs in _signed_patterns(len(d.products), odd=True):
        row = dict(zip(d.products, signs))
        row[delta] = -2
        rows.append((row, cycle_length - 2 - k))
    for signs in _signed_patterns(len(d.products), odd=(k + 1) % 2 == 1):
        row = dict(zip(d.products, signs))
        row[delta] = 2
        rows.append((row, cycle_length - 2 + k))
    for taus in itertools.product((1, -1), repeat=k):
        lower, upper = {delta: -2}, {delta: 2}
        for tau, pair in zip(taus, d.connection_pairs):
            u, v = pair.singles
            lower[u], lower[v] = tau, -tau
            upper[u], upper[v] = tau, tau
        rows.append((lower, 0))
        rows.append((upper, 2 * k))
    rows.extend(implicit_rows(d.observed_pairs))
    return LinearSystem(d.observable_coordinates + (delta,), inequalities=rows)


def classify_upper_form(system, d):
    """Parity of the product sign patterns in the rows bounding delta from above through products alone.

    :return: "s0" when every such row has an even number of minus signs, "s1" when every such row has an odd number,
        "mixed" otherwise.
    :rtype: str
    """
    d = descriptors.get_descriptor(d)
    allowed = set(d.products) | {systems_constants.DELTA}
    parities = set()
    for row in system.inequalities:
        coefficients = system.as_dict(row)
        if coefficients.get(systems_constants.DELTA, 0) <= 0 or not set(coefficients) <= allowed:
            continue
        if len(coefficients) == 1:
            continue
        parities.add(sum(1 for name in d.products if coefficients.get(name, 0) < 0) % 2)
    if parities == {0}:
        return UPPER_FORM_S0
    if parities == {1}:
        return UPPER_FORM_S1
    return UPPER_FORM_MIXED


def match_closed_form(facets, d):
    """Partition enumerated facets into compatibility rows and implicit rows.

    :param facets: Output of :py:func:`ctxdegree.api.polytope.facets.facet_enumeration` over the descriptor's
        coordinates (in any order).
    :type facets: ctxdegree.core.LinearSystem
    :param d: System descriptor or kind.
    :type d: ctxdegree.core.SystemDescriptor | str
    :return: The matched rows of ``facets``, in facet order.
    :rtype: FacetPartition
    :raises: ctxdegree.exceptions.FacetMismatch listing unmatched facets and missing closed-form rows.
    """
    d = descriptors.get_descriptor(d)
    if set(facets.coordinates) != set(d.coordinates):
        raise exceptions.FacetMismatch('facet coordinates {0} differ from {1}'.format(
            ', '.join(facets.coordinates),
            ', '.join(d.coordinates),
        ))
    compatibility = LinearSystem(d.coordinates, inequalities=compatibility_rows(d))
    implicit = LinearSystem(d.coordinates, inequalities=implicit_rows(d.pairs))
    compatibility_keys = {compatibility.row_key(row): row for row in compatibility.inequalities}
    implicit_keys = {implicit.row_key(row): row for row in implicit.inequalities}

    matched_compatibility, matched_implicit, unmatched = [], [], []
    for row in facets.inequalities:
        key = facets.row_key(row)
        if key in compatibility_keys:
            matched_compatibility.append(row)
        elif key in implicit_keys:
            matched_implicit.append(row)
        else:
            unmatched.append(facets.render_row(row))
    unmatched.extend(facets.render_row(row, '==') for row in facets.equalities)

    found = set(facets.row_key(row) for row in facets.inequalities)
    missing = [compatibility.render_row(row) for key, row in compatibility_keys.items() if key not in found]
    missing += [implicit.render_row(row) for key, row in implicit_keys.items() if key not in found]

    if unmatched or missing:
        raise exceptions.FacetMismatch(
            '{0} unmatched and {1} missing facets'.format(len(unmatched), len(missing)),
            path=d.kind,
            unmatched=unmatched,
            missing=missing,
        )
    logger.info('%s facets: %d compatibility + %d implicit', d.kind, len(matched_compatibility), len(matched_implicit))
    return FacetPartition(tuple(matched_compatibility), tuple(matched_implicit))
