"""Correlation-polytope derivations in exact arithmetic."""
import logging

from ctxdegree.api.contextuality_api_category import ContextualityApiCategory
from ctxdegree.api.polytope.closed_forms import (
    FacetPartition,
    classify_upper_form,
    closed_form_compatibility,
    closed_form_delta_system,
    match_closed_form,
)
from ctxdegree.api.polytope.derivation import Derivation, delta_equation, delta_interval, derive_delta_system
from ctxdegree.api.polytope.elimination import Elimination, fourier_motzkin_eliminate, remove_redundant, tighten_parallel
from ctxdegree.api.polytope.facets import double_description, facet_enumeration, tight_vertex_count
from ctxdegree.api.polytope.hull import Hull
from ctxdegree.api.polytope.vertices import MarginalMatrix, VertexSet, build_marginal_matrix, enumerate_vertices

__all__ = (
    'Derivation',
    'Elimination',
    'FacetPartition',
    'Hull',
    'MarginalMatrix',
    'Polytope',
    'VertexSet',
    'build_marginal_matrix',
    'classify_upper_form',
    'closed_form_compatibility',
    'closed_form_delta_system',
    'delta_equation',
    'delta_interval',
    'derive_delta_system',
    'double_description',
    'enumerate_vertices',
    'facet_enumeration',
    'fourier_motzkin_eliminate',
    'match_closed_form',
    'remove_redundant',
    'tight_vertex_count',
    'tighten_parallel',
)

logger = logging.getLogger(__name__)


class Polytope(ContextualityApiCategory):
    """Polytope category class."""
    implemented_classes = [
        Hull,
        Elimination,
        Derivation,
    ]
