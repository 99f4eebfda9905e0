"""Coupling programs used as ground truth for the closed-form measures."""
import logging

from ctxdegree.api.contextuality_api_category import ContextualityApiCategory
from ctxdegree.api.oracle.coupling_lp import (
    CouplingFeasibility,
    CouplingLP,
    LPProblem,
    build_problem,
    coupling_feasible,
    delta_range_lp,
    max_delta_lp,
    min_delta_coupling,
    min_delta_lp,
    min_delta_marginals_lp,
)
from ctxdegree.api.oracle.sampling import Sampling, random_connections, random_system
from ctxdegree.api.oracle.verification import InstanceResult, Verification, VerificationReport, check_instance, verify_equivalence

__all__ = (
    'CouplingFeasibility',
    'CouplingLP',
    'InstanceResult',
    'LPProblem',
    'Oracle',
    'Sampling',
    'Verification',
    'VerificationReport',
    'build_problem',
    'check_instance',
    'coupling_feasible',
    'delta_range_lp',
    'max_delta_lp',
    'min_delta_coupling',
    'min_delta_lp',
    'min_delta_marginals_lp',
    'random_connections',
    'random_system',
    'verify_equivalence',
)

logger = logging.getLogger(__name__)


class Oracle(ContextualityApiCategory):
    """Oracle category class."""
    implemented_classes = [
        CouplingLP,
        Sampling,
        Verification,
    ]
