"""Compatibility polytope of a system: vertices, facets and their closed forms."""
import logging

from ctxdegree.api.contextuality_api_base import ContextualityApiBase
from ctxdegree.api.polytope.closed_forms import closed_form_compatibility, match_closed_form
from ctxdegree.api.polytope.facets import facet_enumeration, tight_vertex_count
from ctxdegree.api.polytope.vertices import build_marginal_matrix, enumerate_vertices

logger = logging.getLogger(__name__)


class Hull(ContextualityApiBase):
    """Vertex and facet descriptions of the polytope of all couplings of a system."""

    def marginal_matrix(self, kind):
        return build_marginal_matrix(kind)

    def vertices(self, kind):
        return enumerate_vertices(kind)

    def facets(self, kind):
        """Enumerate the facets of a system's polytope.

        :param kind: "bell" or "lg".
        :type kind: str
        :return: 160 rows for Bell, 56 for LG.
        :rtype: ctxdegree.core.LinearSystem
        """
        return facet_enumeration(enumerate_vertices(kind))

    def closed_form(self, kind):
        return closed_form_compatibility(kind)

    def match(self, facets, kind):
        return match_closed_form(facets, kind)

    def tight_vertex_counts(self, facets, kind):
        return tight_vertex_count(facets, enumerate_vertices(kind))
