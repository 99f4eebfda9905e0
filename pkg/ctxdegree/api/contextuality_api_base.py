"""Base class used by all ctxdegree "api" classes."""
import logging
from abc import ABCMeta

from ctxdegree.adapters import ExactSimplexAdapter

logger = logging.getLogger(__name__)


class ContextualityApiBase(metaclass=ABCMeta):
    """Base class for API classes."""

    def __init__(self, adapter=None):
        """Default api class constructor.

        :param adapter: Instance of :py:class:`ctxdegree.adapters.Adapter`; used for solving linear programs. Defaults
            to a fresh :py:class:`ctxdegree.adapters.ExactSimplexAdapter`.
        :type adapter: ctxdegree.adapters.Adapter
        """
        self._adapter = adapter if adapter is not None else ExactSimplexAdapter()

    @property
    def adapter(self):
        return self._adapter

    @adapter.setter
    def adapter(self, adapter):
        self._adapter = adapter
