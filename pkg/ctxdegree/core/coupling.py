"""Couplings: joint distributions over all variables of a system."""
import logging
from fractions import Fraction

from ctxdegree import exceptions, utils
from ctxdegree.constants import systems as systems_constants
from ctxdegree.core import descriptors
from ctxdegree.core.tables import ContextTable

logger = logging.getLogger(__name__)


class Coupling(object):
    """Probability vector over the atoms of a system.

    Atom ``k`` assigns to the i-th variable the value +1 iff bit ``len(variables) - 1 - i`` of ``k`` is set.
    """

    def __init__(self, descriptor, atoms):
        """Coupling constructor.

        :param descriptor: System the atoms refer to, or its kind.
        :type descriptor: ctxdegree.core.descriptors.SystemDescriptor | str
        :param atoms: One probability per atom.
        :type atoms: list
        """
        self.descriptor = descriptors.get_descriptor(descriptor)
        atoms = tuple(utils.to_rational(value, 'atoms') for value in atoms)
        if len(atoms) != self.descriptor.atom_count:
            raise exceptions.ParamValidationError('expected {expected} atoms, got {got}'.format(
                expected=self.descriptor.atom_count,
                got=len(atoms),
            ))
        for index, value in enumerate(atoms):
            if value < 0:
                raise exceptions.ParamValidationError('negative probability {0}'.format(value), path='atoms[{0}]'.format(index))
        if sum(atoms) != 1:
            raise exceptions.ParamValidationError('atoms sum to {0}, expected 1'.format(sum(atoms)))
        self.atoms = atoms

    def __eq__(self, other):
        return isinstance(other, Coupling) and self.descriptor == other.descriptor and self.atoms == other.atoms

    def __hash__(self):
        return hash((self.descriptor, self.atoms))

    def __repr__(self):
        support = {k: v for k, v in enumerate(self.atoms) if v}
        return 'Coupling({0!r}, support={1!r})'.format(self.descriptor.kind, support)

    @classmethod
    def uniform(cls, descriptor):
        descriptor = descriptors.get_descriptor(descriptor)
        return cls(descriptor, [Fraction(1, descriptor.atom_count)] * descriptor.atom_count)

    @classmethod
    def point_mass(cls, descriptor, atom):
        descriptor = descriptors.get_descriptor(descriptor)
        return cls(descriptor, [Fraction(int(k == atom)) for k in range(descriptor.atom_count)])

    @classmethod
    def mixture(cls, weighted):
        """Convex combination of couplings of one system.

        :param weighted: (weight, coupling) pairs with weights summing to 1.
        :type weighted: list
        """
        weighted = list(weighted)
        descriptor = weighted[0][1].descriptor
        atoms = [Fraction(0)] * descriptor.atom_count
        for weight, coupling in weighted:
            for k, value in enumerate(coupling.atoms):
                atoms[k] += utils.to_rational(weight) * value
        return cls(descriptor, atoms)

    def expectation(self, coordinate):
        """Expectation of a coordinate (product or single) under this coupling."""
        index = self.descriptor.coordinates.index(coordinate)
        return sum((value * self.descriptor.atom_point(k)[index] for k, value in enumerate(self.atoms) if value), Fraction(0))


def coupling_marginal(q, variable_pair):
    """Exact 2-marginal of a coupling.

    :param q: The coupling.
    :type q: Coupling
    :param variable_pair: An observed or connection pair, by coordinate name ("ab11", "bb2") or by variable names
        (("A12", "B12")). The first listed variable is the first variable of the table.
    :type variable_pair: str | tuple
    :return: The marginal table.
    :rtype: ctxdegree.core.tables.ContextTable
    """
    pair = q.descriptor.pair(variable_pair)
    first, second = pair.variables
    cells = dict.fromkeys(systems_constants.VALUE_COMBINATIONS, Fraction(0))
    for atom, value in enumerate(q.atoms):
        if value:
            cells[(q.descriptor.value(atom, first), q.descriptor.value(atom, second))] += value
    return ContextTable(*(cells[combination] for combination in systems_constants.VALUE_COMBINATIONS))
