from ctxdegree.v1 import Client

__all__ = (
    'Client',
)
