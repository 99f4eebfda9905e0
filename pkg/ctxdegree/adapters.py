# coding=utf-8
"""
Linear Programming Adapters

"""
import logging
from abc import ABCMeta, abstractmethod

from ctxdegree import simplex, utils
from ctxdegree.constants import client as client_constants

logger = logging.getLogger(__name__)


class Adapter(metaclass=ABCMeta):
    """Abstract base class used when constructing adapters for use with the Client class."""

    def __init__(self, pivot_rule=client_constants.DEFAULT_PIVOT_RULE,
                 degenerate_limit=client_constants.DEFAULT_DEGENERATE_LIMIT, ignore_exceptions=False):
        """Create a new solver adapter instance.

        :param pivot_rule: Entering-variable rule, "hybrid" (Dantzig with a Bland fallback) or "bland".
        :type pivot_rule: str
        :param degenerate_limit: Consecutive degenerate pivots after which the hybrid rule falls back to Bland's rule.
        :type degenerate_limit: int
        :param ignore_exceptions: If True, _always_ return the solver result for a given program. I.e., don't raise an
            exception for infeasible or unbounded programs.
        :type ignore_exceptions: bool
        """
        utils.validate_choice_param('pivot_rule', pivot_rule, client_constants.ALLOWED_PIVOT_RULES)
        self.pivot_rule = pivot_rule
        self.degenerate_limit = degenerate_limit
        self.ignore_exceptions = ignore_exceptions

    def minimize(self, objective, matrix, rhs, **kwargs):
        """Minimize ``objective.x`` subject to ``matrix x = rhs`` and ``x >= 0``.

        :param objective: Cost vector, one entry per column.
        :type objective: list
        :param matrix: Equality constraint rows.
        :type matrix: list[list]
        :param rhs: Right-hand side, one entry per row.
        :type rhs: list
        :param kwargs: Additional keyword arguments to include in the solver call.
        :type kwargs: dict
        :return: The solver outcome.
        :rtype: ctxdegree.simplex.LPResult
        """
        return self.solve(objective, matrix, rhs, maximize=False, **kwargs)

    def maximize(self, objective, matrix, rhs, **kwargs):
        """Maximize ``objective.x`` subject to ``matrix x = rhs`` and ``x >= 0``.

        :param objective: Gain vector, one entry per column.
        :type objective: list
        :param matrix: Equality constraint rows.
        :type matrix: list[list]
        :param rhs: Right-hand side, one entry per row.
        :type rhs: list
        :param kwargs: Additional keyword arguments to include in the solver call.
        :type kwargs: dict
        :return: The solver outcome.
        :rtype: ctxdegree.simplex.LPResult
        """
        return self.solve(objective, matrix, rhs, maximize=True, **kwargs)

    def is_feasible(self, matrix, rhs):
        """Whether ``matrix x = rhs`` has a nonnegative solution.

        :param matrix: Equality constraint rows.
        :type matrix: list[list]
        :param rhs: Right-hand side, one entry per row.
        :type rhs: list
        :return: True if a nonnegative solution exists.
        :rtype: bool
        """
        width = len(matrix[0]) if matrix else 0
        result = self.solve([0] * width, matrix, rhs, maximize=False, raise_exception=False)
        return result.status == utils.STATUS_OPTIMAL

    def solve_sequence(self, objectives, matrix, rhs, raise_exception=True):
        """Optimize several objectives over the same constraints.

        Solves each objective on its own; adapters able to share work between the programs override this.

        :param objectives: (objective vector, maximize flag) pairs.
        :type objectives: list[tuple]
        :param matrix: Equality constraint rows.
        :type matrix: list[list]
        :param rhs: Right-hand side, one entry per row.
        :type rhs: list
        :param raise_exception: If True, raise an exception via utils.raise_for_status() for the first failed program.
        :type raise_exception: bool
        :return: One solver outcome per objective.
        :rtype: list[ctxdegree.simplex.LPResult]
        """
        return [
            self.solve(objective, matrix, rhs, maximize=maximize, raise_exception=raise_exception)
            for objective, maximize in objectives
        ]

    @abstractmethod
    def solve(self, objective, matrix, rhs, maximize=False, raise_exception=True):
        """Solve a standard-form program.

        Intended to be implemented by subclasses.

        :param objective: Objective vector, one entry per column.
        :type objective: list
        :param matrix: Equality constraint rows.
        :type matrix: list[list]
        :param rhs: Right-hand side, one entry per row.
        :type rhs: list
        :param maximize: Maximize instead of minimize.
        :type maximize: bool
        :param raise_exception: If True, raise an exception via utils.raise_for_status(). Set this parameter to False to
            bypass this functionality.
        :type raise_exception: bool
        :return: The solver outcome.
        :rtype: ctxdegree.simplex.LPResult
        """
        raise NotImplementedError


class ExactSimplexAdapter(Adapter):
    """Exact rational simplex adapter.

    Programs are solved over fractions, so optimal values compare exactly. The default "hybrid" pivot rule picks the
    most negative reduced cost (Dantzig) and switches to Bland's lowest-index rule for the rest of the solve once
    ``degenerate_limit`` pivots in a row leave the objective unchanged; Bland's rule cannot cycle, so every solve
    terminates. Pass ``pivot_rule="bland"`` to use Bland's rule from the first pivot.
    """

    def solve(self, objective, matrix, rhs, maximize=False, raise_exception=True):
        """Solve a standard-form program with :py:func:`ctxdegree.simplex.solve_standard_form`.

        :param objective: Objective vector, one entry per column.
        :type objective: list
        :param matrix: Equality constraint rows.
        :type matrix: list[list]
        :param rhs: Right-hand side, one entry per row.
        :type rhs: list
        :param maximize: Maximize instead of minimize.
        :type maximize: bool
        :param raise_exception: If True, raise an exception via utils.raise_for_status(). Set this parameter to False to
            bypass this functionality.
        :type raise_exception: bool
        :return: The solver outcome.
        :rtype: ctxdegree.simplex.LPResult
        """
        result = simplex.solve_standard_form(
            objective=objective,
            matrix=matrix,
            rhs=rhs,
            maximize=maximize,
            pivot_rule=self.pivot_rule,
            degenerate_limit=self.degenerate_limit,
        )
        if not self.ignore_exceptions and raise_exception:
            utils.raise_for_status(result.status, certificate=result.certificate)
        return result

    def solve_sequence(self, objectives, matrix, rhs, raise_exception=True):
        """Optimize several objectives with :py:func:`ctxdegree.simplex.solve_standard_form_sequence`.

        Phase one of the simplex runs once for all objectives.

        :param objectives: (objective vector, maximize flag) pairs.
        :type objectives: list[tuple]
        :param matrix: Equality constraint rows.
        :type matrix: list[list]
        :param rhs: Right-hand side, one entry per row.
        :type rhs: list
        :param raise_exception: If True, raise an exception via utils.raise_for_status() for the first failed program.
        :type raise_exception: bool
        :return: One solver outcome per objective.
        :rtype: list[ctxdegree.simplex.LPResult]
        """
        results = simplex.solve_standard_form_sequence(
            objectives=objectives,
            matrix=matrix,
            rhs=rhs,
            pivot_rule=self.pivot_rule,
            degenerate_limit=self.degenerate_limit,
        )
        if not self.ignore_exceptions and raise_exception:
            for result in results:
                utils.raise_for_status(result.status, certificate=result.certificate)
        return results
