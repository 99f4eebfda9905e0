"""Collection of contextuality API classes."""
from ctxdegree.api.contextuality_api_base import ContextualityApiBase
from ctxdegree.api.contextuality_api_category import ContextualityApiCategory
from ctxdegree.api.measures import Measures
from ctxdegree.api.oracle import Oracle
from ctxdegree.api.polytope import Polytope

__all__ = (
    'ContextualityApiBase',
    'ContextualityApiCategory',
    'Measures',
    'Oracle',
    'Polytope',
)
