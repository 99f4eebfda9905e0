"""Joint distributions of two +/-1 variables and their expectations."""
import logging
from dataclasses import dataclass, fields
from fractions import Fraction

from ctxdegree import exceptions, utils
from ctxdegree.constants import client as client_constants

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ContextTable:
    """Probabilities of (+1, +1), (+1, -1), (-1, +1) and (-1, -1) for an ordered pair of variables."""
    p_pp: Fraction
    p_pm: Fraction
    p_mp: Fraction
    p_mm: Fraction

    def __post_init__(self):
        for field in fields(self):
            object.__setattr__(self, field.name, utils.to_rational(getattr(self, field.name), field.name))

    @classmethod
    def from_values(cls, p_pp, p_pm, p_mp, p_mm, tolerance=client_constants.TABLE_SUM_TOLERANCE, path=None):
        """Build and validate a table.

        :param tolerance: Accepted distance of the cell sum from 1; the cells are kept as given.
        :type tolerance: Fraction
        :param path: Location of the table in its source document, for error messages.
        :type path: str
        :return: The validated table.
        :rtype: ContextTable
        """
        table = cls(p_pp, p_pm, p_mp, p_mm)
        table.validate(tolerance=tolerance, path=path)
        return table

    @classmethod
    def from_counts(cls, n_pp, n_pm, n_mp, n_mm, path=None):
        """Exact relative frequencies n/N of four nonnegative counts."""
        counts = (n_pp, n_pm, n_mp, n_mm)
        for name, count in zip(('n_pp', 'n_pm', 'n_mp', 'n_mm'), counts):
            if isinstance(count, bool) or not isinstance(count, int):
                raise exceptions.InvalidTable('count must be an integer, got {0!r}'.format(count), path=_join(path, name))
            if count < 0:
                raise exceptions.InvalidTable('negative count {0}'.format(count), path=_join(path, name))
        total = sum(counts)
        if total == 0:
            raise exceptions.InvalidTable('counts sum to zero', path=path)
        return cls(*(Fraction(count, total) for count in counts))

    @classmethod
    def from_expectations(cls, ab, a, b, path=None):
        """The unique table with the given product and single expectations: p = (1 +/- a +/- b +/- ab) / 4.

        :raises: ctxdegree.exceptions.InvalidObservables when the expectations violate the implicit constraint.
        """
        ab, a, b = (utils.to_rational(v, name) for v, name in ((ab, 'ab'), (a, 'a'), (b, 'b')))
        if not validate_context(ab, a, b):
            raise exceptions.InvalidObservables(
                'expectations (ab={0}, a={1}, b={2}) admit no joint distribution'.format(ab, a, b),
                path=path,
            )
        return cls(
            (1 + a + b + ab) / 4,
            (1 + a - b - ab) / 4,
            (1 - a + b - ab) / 4,
            (1 - a - b + ab) / 4,
        )

    @property
    def cells(self):
        return self.p_pp, self.p_pm, self.p_mp, self.p_mm

    @property
    def total(self):
        return sum(self.cells)

    def validate(self, tolerance=client_constants.TABLE_SUM_TOLERANCE, path=None):
        """Check that all cells are nonnegative and sum to 1 within ``tolerance``.

        :raises: ctxdegree.exceptions.InvalidTable naming the offending field.
        """
        for field in fields(self):
            if getattr(self, field.name) < 0:
                raise exceptions.InvalidTable('negative probability', path=_join(path, field.name))
        if abs(self.total - 1) > tolerance:
            raise exceptions.InvalidTable('table sum out of tolerance ({0})'.format(self.total), path=path)
        if self.total != 1:
            logger.warning('table%s sums to %s, accepted within tolerance %s',
                           '' if path is None else ' at {0}'.format(path), self.total, tolerance)

    def swapped(self):
        """The same distribution with the two variables exchanged."""
        return ContextTable(self.p_pp, self.p_mp, self.p_pm, self.p_mm)


def _join(path, name):
    return name if path is None else '{0}.{1}'.format(path, name)


def expectations_from_table(t, tolerance=client_constants.TABLE_SUM_TOLERANCE):
    """Product and single expectations of a table.

    :param t: The table.
    :type t: ContextTable
    :param tolerance: Accepted distance of the cell sum from 1.
    :type tolerance: Fraction
    :return: (ab, a, b) computed from the raw cells.
    :rtype: (Fraction, Fraction, Fraction)
    """
    t.validate(tolerance=tolerance)
    ab = t.p_pp - t.p_pm - t.p_mp + t.p_mm
    a = t.p_pp + t.p_pm - t.p_mp - t.p_mm
    b = t.p_pp - t.p_pm + t.p_mp - t.p_mm
    return ab, a, b


def validate_context(ab, a, b):
    """Whether some joint distribution of two +/-1 variables has these expectations.

    :return: True iff all three lie in [-1, 1] and -1 + |a + b| <= ab <= 1 - |a - b|.
    :rtype: bool
    """
    ab, a, b = (utils.to_rational(v) for v in (ab, a, b))
    if not all(-1 <= v <= 1 for v in (ab, a, b)):
        return False
    lower, upper = utils.implicit_bounds(a, b)
    return lower <= ab <= upper
