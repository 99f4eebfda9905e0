"""Canonical systems of linear equalities and inequalities over named coordinates."""
import logging
import re
from collections import OrderedDict
from collections.abc import Mapping
from fractions import Fraction

from ctxdegree import exceptions, utils

logger = logging.getLogger(__name__)

LESS_EQUAL = '<='
EQUAL = '=='
COORDINATES_HEADER = '# coordinates:'

TERM_REGEX = re.compile(r'^(-?\d+)\*([A-Za-z_][A-Za-z0-9_]*)$')


def _integer_row(vector, rhs):
    values = [utils.to_rational(v) for v in vector] + [utils.to_rational(rhs)]
    scale = utils.lcm_of(v.denominator for v in values)
    integers = [int(v * scale) for v in values]
    divisor = utils.gcd_of(integers) or 1
    integers = [v // divisor for v in integers]
    return tuple(integers[:-1]), integers[-1]


def canonical_inequality(vector, rhs):
    """Canonical form of ``vector . x <= rhs``.

    :return: (integer coefficients, integer bound), or None for a row without coefficients that always holds. A row
        without coefficients that never holds becomes ``0 <= -1``.
    :rtype: tuple | None
    """
    coefficients, bound = _integer_row(vector, rhs)
    if not any(coefficients):
        return None if bound >= 0 else (coefficients, -1)
    return coefficients, bound


def canonical_equality(vector, rhs):
    """Canonical form of ``vector . x == rhs`` with a positive leading coefficient.

    :return: (integer coefficients, integer right-hand side), or None for ``0 == 0``. An unsatisfiable row without
        coefficients becomes ``0 == 1``.
    :rtype: tuple | None
    """
    coefficients, bound = _integer_row(vector, rhs)
    if not any(coefficients):
        return None if bound == 0 else (coefficients, 1)
    leading = next(c for c in coefficients if c)
    if leading < 0:
        coefficients, bound = tuple(-c for c in coefficients), -bound
    return coefficients, bound


class LinearSystem(object):
    """Equalities and inequalities ``a . x (<=|==) b`` over a declared, ordered set of coordinates.

    Rows are stored canonically: integer coefficients and bound divided by their gcd, equalities with a positive
    leading coefficient, duplicates dropped, rows sorted by coefficient vector then bound. Two systems over the same
    coordinates are equal iff their canonical rows are.
    """

    def __init__(self, coordinates, inequalities=(), equalities=()):
        """Build a canonical system.

        :param coordinates: Coordinate names, in the order used for coefficient vectors and sorting.
        :type coordinates: list[str]
        :param inequalities: (coefficients, bound) rows meaning ``coefficients . x <= bound``. Coefficients are either a
            mapping from coordinate name to value or a sequence aligned with ``coordinates``.
        :type inequalities: list
        :param equalities: (coefficients, rhs) rows meaning ``coefficients . x == rhs``.
        :type equalities: list
        """
        self.coordinates = tuple(coordinates)
        if len(set(self.coordinates)) != len(self.coordinates):
            raise exceptions.ParamValidationError('duplicate coordinate names in {0}'.format(self.coordinates))
        self._index = {name: k for k, name in enumerate(self.coordinates)}

        rows = (canonical_inequality(self._vector(c), b) for c, b in inequalities)
        self.inequalities = tuple(sorted(set(row for row in rows if row is not None)))
        rows = (canonical_equality(self._vector(c), b) for c, b in equalities)
        self.equalities = tuple(sorted(set(row for row in rows if row is not None)))

    def _vector(self, coefficients):
        if isinstance(coefficients, Mapping):
            unknown = [name for name in coefficients if name not in self._index]
            if unknown:
                raise exceptions.ParamValidationError('unknown coordinates {0}, declared: {1}'.format(
                    ', '.join(unknown),
                    ', '.join(self.coordinates),
                ))
            return [coefficients.get(name, 0) for name in self.coordinates]
        coefficients = list(coefficients)
        if len(coefficients) != len(self.coordinates):
            raise exceptions.ParamValidationError('expected {0} coefficients, got {1}'.format(
                len(self.coordinates),
                len(coefficients),
            ))
        return coefficients

    def __eq__(self, other):
        return (isinstance(other, LinearSystem) and self.coordinates == other.coordinates
                and self.inequalities == other.inequalities and self.equalities == other.equalities)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.coordinates, self.inequalities, self.equalities))

    def __repr__(self):
        return 'LinearSystem({0} coordinates, {1} inequalities, {2} equalities)'.format(
            len(self.coordinates),
            len(self.inequalities),
            len(self.equalities),
        )

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise exceptions.ParamValidationError('unknown coordinate "{0}"'.format(name))

    def as_dict(self, row):
        """Nonzero coefficients of a row keyed by coordinate name."""
        coefficients, _ = row
        return OrderedDict((name, c) for name, c in zip(self.coordinates, coefficients) if c)

    def row_key(self, row):
        """Coordinate-order independent identity of a row."""
        return frozenset(self.as_dict(row).items()), row[1]

    def involves(self, name):
        k = self.index(name)
        return any(row[0][k] for row in self.inequalities + self.equalities)

    def lhs(self, row, point):
        """Left-hand side of a row at a point given as a mapping from coordinate name to value."""
        coefficients, _ = row
        return sum((c * utils.to_rational(point[name]) for name, c in zip(self.coordinates, coefficients) if c), Fraction(0))

    def evaluate(self, point):
        """Left-hand side of every inequality at a point, in row order.

        :param point: Values keyed by coordinate name.
        :type point: dict
        :rtype: list[Fraction]
        """
        return [self.lhs(row, point) for row in self.inequalities]

    def violated_rows(self, point):
        """Rows not satisfied at a point.

        :return: (inequalities, equalities) lists of violated rows.
        :rtype: tuple
        """
        return (
            [row for row in self.inequalities if self.lhs(row, point) > row[1]],
            [row for row in self.equalities if self.lhs(row, point) != row[1]],
        )

    def satisfied_by(self, point):
        inequalities, equalities = self.violated_rows(point)
        return not inequalities and not equalities

    def tight_rows(self, point):
        return [row for row in self.inequalities if self.lhs(row, point) == row[1]]

    def extend(self, inequalities=(), equalities=()):
        """A new system with additional rows over the same coordinates."""
        return LinearSystem(
            self.coordinates,
            inequalities=list(self.inequalities) + list(inequalities),
            equalities=list(self.equalities) + list(equalities),
        )

    def with_coordinates(self, coordinates):
        """The same rows over a reordered, extended or reduced coordinate list.

        :raises: ctxdegree.exceptions.ParamValidationError when a dropped coordinate carries a coefficient.
        """
        coordinates = tuple(coordinates)
        for name in self.coordinates:
            if name not in coordinates and self.involves(name):
                raise exceptions.ParamValidationError('coordinate "{0}" is still in use'.format(name))
        return LinearSystem(
            coordinates,
            inequalities=[(self.as_dict(row), row[1]) for row in self.inequalities],
            equalities=[(self.as_dict(row), row[1]) for row in self.equalities],
        )

    def restrict(self, names):
        """Keep only the rows supported on ``names``, over those coordinates."""
        names = [name for name in self.coordinates if name in set(names)]
        keep = set(names)
        return LinearSystem(
            names,
            inequalities=[(self.as_dict(row), row[1]) for row in self.inequalities if set(self.as_dict(row)) <= keep],
            equalities=[(self.as_dict(row), row[1]) for row in self.equalities if set(self.as_dict(row)) <= keep],
        )

    def substitute(self, name, equality=None):
        """Eliminate a coordinate using an equality that involves it.

        :param name: Coordinate to eliminate.
        :type name: str
        :param equality: The (coefficients, rhs) row to solve; defaults to the first stored equality involving ``name``.
            The row is consumed.
        :type equality: tuple
        :return: A system over the remaining coordinates.
        :rtype: LinearSystem
        """
        k = self.index(name)
        if equality is None:
            candidates = [row for row in self.equalities if row[0][k]]
            if not candidates:
                raise exceptions.ParamValidationError('no equality involves "{0}"'.format(name))
            equality = candidates[0]
        coefficients, rhs = equality
        pivot = coefficients[k]
        if not pivot:
            raise exceptions.ParamValidationError('equality does not involve "{0}"'.format(name))
        # scale rows by |pivot| so inequality directions survive
        sign = 1 if pivot > 0 else -1

        def eliminate(row):
            row_coefficients, bound = row
            factor = row_coefficients[k] * sign
            new = [abs(pivot) * a - factor * e for a, e in zip(row_coefficients, coefficients)]
            del new[k]
            return new, abs(pivot) * bound - factor * rhs

        remaining = self.coordinates[:k] + self.coordinates[k + 1:]
        return LinearSystem(
            remaining,
            inequalities=[eliminate(row) for row in self.inequalities],
            equalities=[eliminate(row) for row in self.equalities if tuple(row) != tuple(equality)],
        )

    def render_row(self, row, relation=LESS_EQUAL):
        terms = ['{0}*{1}'.format(c, name) for name, c in self.as_dict(row).items()]
        return '{lhs} {relation} {rhs}'.format(lhs=' + '.join(terms) or '0', relation=relation, rhs=row[1])

    def dumps(self):
        """Text rendering: a coordinates header, then one row per line in canonical order, equalities first."""
        lines = ['{0} {1}'.format(COORDINATES_HEADER, ', '.join(self.coordinates))]
        lines.extend(self.render_row(row, EQUAL) for row in self.equalities)
        lines.extend(self.render_row(row, LESS_EQUAL) for row in self.inequalities)
        return '\n'.join(lines) + '\n'

    @classmethod
    def loads(cls, text, coordinates=None):
        """Parse the text rendering produced by :py:meth:`dumps`.

        :param text: The rendering.
        :type text: str
        :param coordinates: Coordinate order, required when the text has no coordinates header.
        :type coordinates: list[str]
        :rtype: LinearSystem
        """
        inequalities, equalities = [], []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if line.startswith(COORDINATES_HEADER):
                coordinates = [name.strip() for name in line[len(COORDINATES_HEADER):].split(',') if name.strip()]
                continue
            if not line or line.startswith('#'):
                continue
            for relation, rows in ((EQUAL, equalities), (LESS_EQUAL, inequalities)):
                if ' {0} '.format(relation) in line:
                    lhs, rhs = line.split(' {0} '.format(relation))
                    break
            else:
                raise exceptions.ParamValidationError('no relation in row', path='line {0}'.format(number))
            coefficients = {}
            if lhs.strip() != '0':
                for term in lhs.split(' + '):
                    match = TERM_REGEX.match(term.strip())
                    if match is None:
                        raise exceptions.ParamValidationError('malformed term "{0}"'.format(term), path='line {0}'.format(number))
                    coefficients[match.group(2)] = coefficients.get(match.group(2), 0) + int(match.group(1))
            try:
                bound = int(rhs)
            except ValueError:
                raise exceptions.ParamValidationError('malformed bound "{0}"'.format(rhs), path='line {0}'.format(number))
            rows.append((coefficients, bound))
        if coordinates is None:
            raise exceptions.ParamValidationError('coordinates are neither given nor declared in the text')
        return cls(coordinates, inequalities=inequalities, equalities=equalities)
