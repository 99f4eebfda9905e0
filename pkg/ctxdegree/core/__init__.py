"""Exact domain types shared by all other modules."""
from ctxdegree.core.coupling import Coupling, coupling_marginal
from ctxdegree.core.descriptors import BELL, LG, PairSpec, SystemDescriptor, get_descriptor
from ctxdegree.core.linear_system import LinearSystem
from ctxdegree.core.observables import (
    BellConnections,
    BellObservables,
    LGConnections,
    LGObservables,
    connections_class,
    observables_class,
    validate_connections,
)
from ctxdegree.core.tables import ContextTable, expectations_from_table, validate_context

__all__ = (
    'BELL',
    'LG',
    'BellConnections',
    'BellObservables',
    'ContextTable',
    'Coupling',
    'LGConnections',
    'LGObservables',
    'LinearSystem',
    'PairSpec',
    'SystemDescriptor',
    'connections_class',
    'coupling_marginal',
    'expectations_from_table',
    'get_descriptor',
    'observables_class',
    'validate_connections',
    'validate_context',
)
