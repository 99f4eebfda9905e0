"""Marginal matrix and vertex set of a system."""
import logging
from collections import namedtuple
from fractions import Fraction

from ctxdegree import exceptions, utils
from ctxdegree.constants import systems as systems_constants
from ctxdegree.core import descriptors

logger = logging.getLogger(__name__)


class MarginalMatrix(namedtuple('MarginalMatrix', ['descriptor', 'labels', 'rows'])):
    """Binary matrix M with p = M q.

    Row r is labelled (pair name, (first value, second value)); ``rows[r][c]`` is 1 iff atom c gives the pair those
    values. Observed pairs come first, then connections, each with its four value combinations in table order.
    """
    __slots__ = ()

    @property
    def shape(self):
        return len(self.rows), self.descriptor.atom_count

    def apply(self, atoms):
        """The pair probabilities M q of a coupling or an atom vector."""
        atoms = getattr(atoms, 'atoms', atoms)
        return [sum((value for value, bit in zip(atoms, row) if bit), Fraction(0)) for row in self.rows]

    def select(self, pair_names):
        """Rows of the given pairs only, in matrix order."""
        keep = set(pair_names)
        picked = [(label, row) for label, row in zip(self.labels, self.rows) if label[0] in keep]
        return MarginalMatrix(self.descriptor, tuple(p[0] for p in picked), tuple(p[1] for p in picked))


def build_marginal_matrix(d):
    """Build the marginal matrix of a system.

    :param d: System descriptor or kind.
    :type d: ctxdegree.core.SystemDescriptor | str
    :return: 32 x 256 for Bell, 24 x 64 for LG.
    :rtype: MarginalMatrix
    """
    d = descriptors.get_descriptor(d)
    labels, rows = [], []
    for pair in d.pairs:
        first, second = pair.variables
        for combination in systems_constants.VALUE_COMBINATIONS:
            labels.append((pair.name, combination))
            rows.append(tuple(
                int((d.value(atom, first), d.value(atom, second)) == combination)
                for atom in range(d.atom_count)
            ))
    logger.debug('marginal matrix of %s: %d x %d', d.kind, len(rows), d.atom_count)
    return MarginalMatrix(d, tuple(labels), tuple(rows))


class VertexSet(object):
    """Points in named coordinates; the vertex set of a polytope when built by :py:func:`enumerate_vertices`."""

    def __init__(self, coordinates, points, descriptor=None):
        self.coordinates = tuple(coordinates)
        self.points = tuple(tuple(utils.to_rational(v, 'points') for v in point) for point in points)
        self.descriptor = descriptor
        for index, point in enumerate(self.points):
            if len(point) != len(self.coordinates):
                raise exceptions.ParamValidationError('point has {0} entries, expected {1}'.format(
                    len(point),
                    len(self.coordinates),
                ), path='points[{0}]'.format(index))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def as_dict(self, point):
        return dict(zip(self.coordinates, point))


def enumerate_vertices(d):
    """Images of all atoms in expectation coordinates, in atom order.

    :param d: System descriptor or kind.
    :type d: ctxdegree.core.SystemDescriptor | str
    :return: 256 points in 16 coordinates for Bell, 64 points in 12 coordinates for LG.
    :rtype: VertexSet
    """
    d = descriptors.get_descriptor(d)
    return VertexSet(d.coordinates, [d.atom_point(atom) for atom in range(d.atom_count)], descriptor=d)
