"""Closed-form contextuality measures."""
import logging

from ctxdegree.api.contextuality_api_category import ContextualityApiCategory
from ctxdegree.api.measures.bell import (
    Bell,
    connections_compatible_bell,
    contextuality_degree_bell,
    delta0_bell,
    delta_bounds_bell,
    delta_chsh,
    delta_min_bell,
    marginal_selectivity_bell,
)
from ctxdegree.api.measures.leggett_garg import (
    LeggettGarg,
    connections_compatible_lg,
    delta0_lg,
    delta_bounds_lg,
    delta_min_lg,
    delta_min_value_lg,
    delta_sz,
    lg_upper_bound_candidates,
    marginal_selectivity_lg,
)
from ctxdegree.api.measures.reports import BellReport, LGReport
from ctxdegree.api.measures.signed_sums import s_even, s_odd, s_parity
from ctxdegree.api.measures.transforms import recode, recode_input, relabel_inputs
from ctxdegree.core.observables import BellObservables

__all__ = (
    'Bell',
    'BellReport',
    'LGReport',
    'LeggettGarg',
    'Measures',
    'analyze',
    'connections_compatible',
    'connections_compatible_bell',
    'connections_compatible_lg',
    'contextuality_degree_bell',
    'delta0_bell',
    'delta0_lg',
    'delta_bounds',
    'delta_bounds_bell',
    'delta_bounds_lg',
    'delta_chsh',
    'delta_min',
    'delta_min_bell',
    'delta_min_lg',
    'delta_min_value_lg',
    'delta_sz',
    'lg_upper_bound_candidates',
    'marginal_selectivity_bell',
    'marginal_selectivity_lg',
    'recode',
    'recode_input',
    'relabel_inputs',
    's_even',
    's_odd',
    's_parity',
)

logger = logging.getLogger(__name__)


def analyze(obs):
    """Report for either system: a BellReport for Bell observables, an LGReport otherwise."""
    if isinstance(obs, BellObservables):
        return contextuality_degree_bell(obs)
    return delta_min_lg(obs)


def delta_min(obs):
    """Minimal coupling cost of either system."""
    if isinstance(obs, BellObservables):
        return delta_min_bell(obs)
    return delta_min_value_lg(obs)


def delta_bounds(obs):
    if isinstance(obs, BellObservables):
        return delta_bounds_bell(obs)
    return delta_bounds_lg(obs)


def connections_compatible(obs, conn):
    if isinstance(obs, BellObservables):
        return connections_compatible_bell(obs, conn)
    return connections_compatible_lg(obs, conn)


class Measures(ContextualityApiCategory):
    """Measures category class."""
    implemented_classes = [
        Bell,
        LeggettGarg,
    ]

    def analyze(self, obs):
        return analyze(obs)
