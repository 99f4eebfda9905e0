"""Observed and connection expectations of the Bell and Leggett-Garg systems."""
import logging
from collections import OrderedDict
from dataclasses import dataclass, fields
from fractions import Fraction

from ctxdegree import exceptions, utils
from ctxdegree.core import descriptors
from ctxdegree.core.tables import expectations_from_table

logger = logging.getLogger(__name__)


class _Expectations(object):
    """Shared behaviour of the frozen expectation records below."""

    descriptor = None

    def __post_init__(self):
        for field in fields(self):
            value = utils.to_rational(getattr(self, field.name), field.name)
            utils.validate_unit_interval(field.name, value)
            object.__setattr__(self, field.name, value)

    def coordinates(self):
        """Values keyed by coordinate name, in field order.

        :rtype: collections.OrderedDict
        """
        return OrderedDict((field.name, getattr(self, field.name)) for field in fields(self))

    def replace(self, **changes):
        values = self.coordinates()
        values.update(changes)
        return type(self)(**values)

    @classmethod
    def from_floats(cls, **values):
        """Build from floats, each converted exactly through its binary representation."""
        return cls(**{name: Fraction(value) for name, value in values.items()})


class _Observables(_Expectations):

    def __post_init__(self):
        super(_Observables, self).__post_init__()
        values = self.coordinates()
        for pair in self.descriptor.observed_pairs:
            lower, upper = utils.implicit_bounds(values[pair.singles[0]], values[pair.singles[1]])
            if not lower <= values[pair.name] <= upper:
                raise exceptions.InvalidObservables(
                    'product expectation {value} outside [{lower}, {upper}]'.format(
                        value=values[pair.name],
                        lower=lower,
                        upper=upper,
                    ),
                    path=pair.name,
                )

    def context(self, name):
        """(product, first single, second single) of an observed pair."""
        pair = self.descriptor.pair(name)
        return getattr(self, pair.name), getattr(self, pair.singles[0]), getattr(self, pair.singles[1])

    @classmethod
    def from_contexts(cls, contexts):
        """Build from per-pair expectation triples.

        :param contexts: Maps each observed pair name (e.g. "ab12" or "xz") to (product, first single, second single).
        :type contexts: dict
        """
        values = {}
        for pair in cls.descriptor.observed_pairs:
            if pair.name not in contexts:
                raise exceptions.InvalidObservables('missing context', path=pair.name)
            values[pair.name], values[pair.singles[0]], values[pair.singles[1]] = contexts[pair.name]
        return cls(**values)

    @classmethod
    def from_tables(cls, tables):
        """Build from per-pair contingency tables keyed by observed pair name."""
        return cls.from_contexts({name: expectations_from_table(table) for name, table in tables.items()})

    @classmethod
    def zeros(cls):
        return cls(**{name: Fraction(0) for name in cls.descriptor.observable_coordinates})


@dataclass(frozen=True)
class BellObservables(_Observables):
    """Observed expectations of the Bell system: ab_ij = <A_ij B_ij>, a_ij = <A_ij>, b_ij = <B_ij>."""
    ab11: Fraction
    ab12: Fraction
    ab21: Fraction
    ab22: Fraction
    a11: Fraction
    a12: Fraction
    a21: Fraction
    a22: Fraction
    b11: Fraction
    b12: Fraction
    b21: Fraction
    b22: Fraction

    descriptor = descriptors.BELL

    def ab(self, i, j):
        return getattr(self, 'ab{0}{1}'.format(i, j))

    def a(self, i, j):
        return getattr(self, 'a{0}{1}'.format(i, j))

    def b(self, i, j):
        return getattr(self, 'b{0}{1}'.format(i, j))

    @property
    def products(self):
        return self.ab11, self.ab12, self.ab21, self.ab22


@dataclass(frozen=True)
class LGObservables(_Observables):
    """Observed expectations of the Leggett-Garg system.

    xy = <X12 Y12>, xz = <X13 Z13>, yz = <Y23 Z23>; the singles are named after their variable (x12 = <X12>).
    """
    xy: Fraction
    xz: Fraction
    yz: Fraction
    x12: Fraction
    x13: Fraction
    y12: Fraction
    y23: Fraction
    z13: Fraction
    z23: Fraction

    descriptor = descriptors.LG

    @property
    def products(self):
        return self.xy, self.xz, self.yz


@dataclass(frozen=True)
class BellConnections(_Expectations):
    """Connection expectations of the Bell system: aa1 = <A11 A12>, aa2 = <A21 A22>, bb1 = <B11 B21>, bb2 = <B12 B22>."""
    aa1: Fraction
    aa2: Fraction
    bb1: Fraction
    bb2: Fraction

    descriptor = descriptors.BELL


@dataclass(frozen=True)
class LGConnections(_Expectations):
    """Connection expectations of the Leggett-Garg system: xx = <X12 X13>, yy = <Y12 Y23>, zz = <Z13 Z23>."""
    xx: Fraction
    yy: Fraction
    zz: Fraction

    descriptor = descriptors.LG


def observables_class(kind):
    """BellObservables or LGObservables for a system kind or descriptor."""
    return BellObservables if descriptors.get_descriptor(kind) is descriptors.BELL else LGObservables


def connections_class(kind):
    """BellConnections or LGConnections for a system kind or descriptor."""
    return BellConnections if descriptors.get_descriptor(kind) is descriptors.BELL else LGConnections


def validate_connections(obs, conn):
    """Check that each connection expectation is admissible for the singles of its two variables.

    :raises: ctxdegree.exceptions.InvalidObservables naming the connection.
    """
    if obs.descriptor is not conn.descriptor:
        raise exceptions.ParamValidationError('observables and connections belong to different systems')
    values = obs.coordinates()
    for pair in obs.descriptor.connection_pairs:
        lower, upper = utils.implicit_bounds(values[pair.singles[0]], values[pair.singles[1]])
        if not lower <= getattr(conn, pair.name) <= upper:
            raise exceptions.InvalidObservables(
                'connection expectation {value} outside [{lower}, {upper}]'.format(
                    value=getattr(conn, pair.name),
                    lower=lower,
                    upper=upper,
                ),
                path=pair.name,
            )
