"""Derivation of the coupling-cost system from the compatibility polytope."""
import logging
from fractions import Fraction

from ctxdegree.api.contextuality_api_base import ContextualityApiBase
from ctxdegree.api.polytope.closed_forms import classify_upper_form, closed_form_delta_system
from ctxdegree.api.polytope.elimination import fourier_motzkin_eliminate, remove_redundant
from ctxdegree.api.polytope.facets import facet_enumeration
from ctxdegree.api.polytope.vertices import enumerate_vertices
from ctxdegree.constants import systems as systems_constants
from ctxdegree.core import descriptors

logger = logging.getLogger(__name__)


def delta_equation(d):
    """``2 delta + sum of connection products == number of connections``.

    Each connection contributes Pr[V != W] = (1 - <VW>) / 2 to the coupling cost.

    :rtype: tuple
    """
    d = descriptors.get_descriptor(d)
    coefficients = {name: 1 for name in d.connections}
    coefficients[systems_constants.DELTA] = 2
    return coefficients, len(d.connections)


def derive_delta_system(d, facets=None, adapter=None):
    """Project the compatibility polytope, amended with the coupling cost, onto the observables and the cost.

    The cost equation is solved for the first connection and substituted; the remaining connections are eliminated in
    declaration order, removing redundant rows after each step.

    :param d: System descriptor or kind.
    :type d: ctxdegree.core.SystemDescriptor | str
    :param facets: Facet system of the compatibility polytope; enumerated when not given.
    :type facets: ctxdegree.core.LinearSystem
    :param adapter: LP adapter used for redundancy removal.
    :type adapter: ctxdegree.adapters.Adapter
    :return: The system over products, singles and "delta".
    :rtype: ctxdegree.core.LinearSystem
    """
    d = descriptors.get_descriptor(d)
    if facets is None:
        facets = facet_enumeration(enumerate_vertices(d))
    system = facets.with_coordinates(d.coordinates + (systems_constants.DELTA,))
    system = system.extend(equalities=[delta_equation(d)])

    first = d.connections[0]
    system = system.substitute(first)
    logger.info('%s: substituted %s, %d rows', d.kind, first, len(system.inequalities))
    for name in d.connections[1:]:
        system = fourier_motzkin_eliminate(system, name)
        logger.info('%s: eliminated %s, %d rows before redundancy removal', d.kind, name, len(system.inequalities))
        system = remove_redundant(system, adapter=adapter)
    return system.with_coordinates(d.observable_coordinates + (systems_constants.DELTA,))


def delta_interval(system, obs):
    """Tightest bounds a system over observables and "delta" puts on the coupling cost of one system.

    :param system: Output of :py:func:`derive_delta_system` or :py:func:`ctxdegree.api.polytope.closed_form_delta_system`.
    :type system: ctxdegree.core.LinearSystem
    :param obs: Observed expectations.
    :type obs: ctxdegree.core.BellObservables | ctxdegree.core.LGObservables
    :return: (lower, upper); either is None when no row bounds that side.
    :rtype: tuple
    """
    delta = systems_constants.DELTA
    point = obs.coordinates()
    point[delta] = 0
    k = system.index(delta)
    lower, upper = None, None
    for row in system.inequalities:
        coefficient = row[0][k]
        if not coefficient:
            continue
        value = Fraction(row[1] - system.lhs(row, point)) / coefficient
        if coefficient > 0:
            upper = value if upper is None else min(upper, value)
        else:
            lower = value if lower is None else max(lower, value)
    return lower, upper


class Derivation(ContextualityApiBase):
    """Coupling-cost systems, derived and written down."""

    def delta_system(self, kind, facets=None):
        return derive_delta_system(kind, facets=facets, adapter=self._adapter)

    def closed_form(self, kind):
        return closed_form_delta_system(kind)

    def upper_form(self, system, kind):
        return classify_upper_form(system, kind)

    def interval(self, system, obs):
        return delta_interval(system, obs)
