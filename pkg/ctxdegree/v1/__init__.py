#!/usr/bin/env python
# -*- coding: utf-8 -*-
import logging

from ctxdegree import adapters, api, io
from ctxdegree.constants import client as client_constants

logger = logging.getLogger(__name__)


class Client(object):
    """The ctxdegree Client class for Bell and Leggett-Garg systems."""

    def __init__(self, adapter=adapters.ExactSimplexAdapter, pivot_rule=client_constants.DEFAULT_PIVOT_RULE,
                 degenerate_limit=client_constants.DEFAULT_DEGENERATE_LIMIT, **kwargs):
        """Creates a new ctxdegree client instance.

        :param adapter: Optional class used for solving linear programs. If none is provided, defaults to
            ctxdegree.adapters.ExactSimplexAdapter
        :type adapter: ctxdegree.adapters.Adapter
        :param pivot_rule: Entering-variable rule of the simplex, "hybrid" or "bland".
        :type pivot_rule: str
        :param degenerate_limit: Consecutive degenerate pivots after which the hybrid rule falls back to Bland's rule.
        :type degenerate_limit: int
        :param kwargs: Additional parameters to pass to the adapter constructor.
        :type kwargs: dict
        """
        self._adapter = adapter(pivot_rule=pivot_rule, degenerate_limit=degenerate_limit, **kwargs)

        self._measures = api.Measures(adapter=self._adapter)
        self._polytope = api.Polytope(adapter=self._adapter)
        self._oracle = api.Oracle(adapter=self._adapter)

    @property
    def adapter(self):
        return self._adapter

    @adapter.setter
    def adapter(self, adapter):
        self._adapter = adapter
        for category in (self._measures, self._polytope, self._oracle):
            category.adapter = adapter

    @property
    def measures(self):
        """Accessor for the closed-form measures. Provided via the :py:class:`ctxdegree.api.Measures` class.

        :return: This Client instance's associated Measures instance.
        :rtype: ctxdegree.api.Measures
        """
        return self._measures

    @property
    def polytope(self):
        """Accessor for hull, elimination and derivation methods.
        Provided via the :py:class:`ctxdegree.api.Polytope` class.

        :rtype: ctxdegree.api.Polytope
        """
        return self._polytope

    @property
    def oracle(self):
        """Accessor for the coupling programs and verification runs. Provided via the :py:class:`ctxdegree.api.Oracle` class.

        :rtype: ctxdegree.api.Oracle
        """
        return self._oracle

    def analyze(self, obs):
        """Report of the closed-form measures of a system.

        :param obs: Observed expectations.
        :type obs: ctxdegree.core.BellObservables | ctxdegree.core.LGObservables
        :rtype: ctxdegree.api.measures.BellReport | ctxdegree.api.measures.LGReport
        """
        return self._measures.analyze(obs)

    def analyze_document(self, path):
        return self.analyze(io.load_document(path).observables)
