"""Descriptors of the Bell and Leggett-Garg systems: variables, pairs and expectation coordinates."""
import logging
from collections import namedtuple

from ctxdegree import exceptions, utils
from ctxdegree.constants import systems as systems_constants

logger = logging.getLogger(__name__)


class PairSpec(namedtuple('PairSpec', ['name', 'variables', 'singles'])):
    """A named pair of variables and the single-expectation coordinates of its two members."""
    __slots__ = ()

    def reversed(self):
        return PairSpec(self.name, self.variables[::-1], self.singles[::-1])


class SystemDescriptor(object):
    """Fixed layout of one system.

    Atoms index joint assignments of ``variables``: the first variable is the most significant bit and a set bit means
    +1. Expectation coordinates are the products of the observed pairs, then the singles, then the products of the
    connection pairs.
    """

    def __init__(self, kind, variables, observed_pairs, connection_pairs, singles):
        """Descriptor constructor.

        :param kind: "bell" or "lg".
        :type kind: str
        :param variables: Variable names in atom order.
        :type variables: tuple[str]
        :param observed_pairs: (coordinate name, (first variable, second variable)) for each observed pair.
        :type observed_pairs: tuple
        :param connection_pairs: (coordinate name, (first variable, second variable)) for each connection.
        :type connection_pairs: tuple
        :param singles: Single-expectation coordinate names, one per variable (its lower-cased name).
        :type singles: tuple[str]
        """
        utils.validate_choice_param('kind', kind, systems_constants.ALLOWED_KINDS)
        self.kind = kind
        self.variables = tuple(variables)
        self.singles = tuple(singles)
        self.observed_pairs = tuple(self._pair_spec(name, pair) for name, pair in observed_pairs)
        self.connection_pairs = tuple(self._pair_spec(name, pair) for name, pair in connection_pairs)
        self._bit = {name: len(self.variables) - 1 - k for k, name in enumerate(self.variables)}

        names = self.coordinates + self.variables
        if len(set(names)) != len(names):
            raise exceptions.ParamValidationError('coordinate and variable names must be distinct')
        if sorted(self.singles) != sorted(v.lower() for v in self.variables):
            raise exceptions.ParamValidationError('every variable needs exactly one single coordinate')

    def _pair_spec(self, name, pair):
        for variable in pair:
            if variable not in self.variables:
                raise exceptions.UnknownPair('unknown variable "{0}"'.format(variable), path=name)
        return PairSpec(name, tuple(pair), tuple(v.lower() for v in pair))

    def __repr__(self):
        return 'SystemDescriptor(kind={0!r})'.format(self.kind)

    def __eq__(self, other):
        return isinstance(other, SystemDescriptor) and self.kind == other.kind

    def __hash__(self):
        return hash(self.kind)

    @property
    def atom_count(self):
        return 2 ** len(self.variables)

    @property
    def products(self):
        return tuple(pair.name for pair in self.observed_pairs)

    @property
    def connections(self):
        return tuple(pair.name for pair in self.connection_pairs)

    @property
    def pairs(self):
        return self.observed_pairs + self.connection_pairs

    @property
    def coordinates(self):
        return self.products + self.singles + self.connections

    @property
    def observable_coordinates(self):
        return self.products + self.singles

    @property
    def cycle_coordinates(self):
        """Product coordinates of all pairs; the pairs chain the variables into a single cycle."""
        return self.products + self.connections

    def pair(self, identifier):
        """Look up an observed or connection pair.

        :param identifier: Coordinate name such as "ab12", or a tuple of two variable names in either order. A tuple
            in reverse order yields the pair with its members swapped.
        :type identifier: str | tuple
        :return: The pair.
        :rtype: PairSpec
        """
        if isinstance(identifier, str):
            for pair in self.pairs:
                if identifier == pair.name:
                    return pair
        else:
            key = tuple(identifier)
            for pair in self.pairs:
                if key == pair.variables:
                    return pair
                if key == pair.variables[::-1]:
                    return pair.reversed()
        raise exceptions.UnknownPair('unknown pair {0!r}'.format(identifier), path=self.kind)

    def value(self, atom, variable):
        """The +/-1 value of one variable in an atom."""
        return 1 if (atom >> self._bit[variable]) & 1 else -1

    def atom_values(self, atom):
        """Values of all variables in an atom, in variable order."""
        return tuple(self.value(atom, variable) for variable in self.variables)

    def atom_point(self, atom):
        """Image of an atom in expectation coordinates.

        :param atom: Atom index.
        :type atom: int
        :return: One +/-1 entry per coordinate, in coordinate order.
        :rtype: tuple[int]
        """
        point = [self.value(atom, pair.variables[0]) * self.value(atom, pair.variables[1]) for pair in self.observed_pairs]
        point.extend(self.value(atom, variable) for variable in self._variables_of_singles())
        point.extend(self.value(atom, pair.variables[0]) * self.value(atom, pair.variables[1]) for pair in self.connection_pairs)
        return tuple(point)

    def _variables_of_singles(self):
        by_single = {v.lower(): v for v in self.variables}
        return [by_single[single] for single in self.singles]


BELL = SystemDescriptor(
    kind=systems_constants.KIND_BELL,
    variables=systems_constants.BELL_VARIABLES,
    observed_pairs=systems_constants.BELL_OBSERVED_PAIRS,
    connection_pairs=systems_constants.BELL_CONNECTION_PAIRS,
    singles=systems_constants.BELL_SINGLES,
)

LG = SystemDescriptor(
    kind=systems_constants.KIND_LG,
    variables=systems_constants.LG_VARIABLES,
    observed_pairs=systems_constants.LG_OBSERVED_PAIRS,
    connection_pairs=systems_constants.LG_CONNECTION_PAIRS,
    singles=systems_constants.LG_SINGLES,
)


def get_descriptor(kind):
    """Descriptor for a system kind.

    :param kind: "bell" or "lg", or a descriptor which is returned as-is.
    :type kind: str | SystemDescriptor
    :return: The descriptor.
    :rtype: SystemDescriptor
    """
    if isinstance(kind, SystemDescriptor):
        return kind
    utils.validate_choice_param('kind', kind, systems_constants.ALLOWED_KINDS)
    return BELL if kind == systems_constants.KIND_BELL else LG
