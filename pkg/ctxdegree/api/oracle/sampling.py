"""Seeded random systems for property testing."""
import logging
import random
from fractions import Fraction

from ctxdegree import exceptions, utils
from ctxdegree.api.contextuality_api_base import ContextualityApiBase
from ctxdegree.core import descriptors
from ctxdegree.core.observables import connections_class, observables_class
from ctxdegree.core.tables import ContextTable, expectations_from_table

logger = logging.getLogger(__name__)

RANDOM_BITS = 32
DENOMINATOR = 2 ** RANDOM_BITS


def _unit(rng):
    """Uniform rational in [0, 1) with denominator 2**32."""
    return Fraction(rng.getrandbits(RANDOM_BITS), DENOMINATOR)


def _within(rng, lower, upper):
    return lower + (upper - lower) * _unit(rng)


def random_table(rng):
    """Four random 32-bit counts over their total, redrawn while all are zero."""
    while True:
        counts = [rng.getrandbits(RANDOM_BITS) for _ in range(4)]
        if any(counts):
            return ContextTable.from_counts(*counts)


def random_system(kind, seed, marginal_selectivity=False, zero_singles=False):
    """A valid system drawn deterministically from a seed.

    :param kind: "bell" or "lg".
    :type kind: str
    :param seed: Seed of the generator; equal seeds give equal systems.
    :type seed: int
    :param marginal_selectivity: Give both variables of every connection the same single expectation, uniform in
        [-1, 1), and draw each product uniformly within its implicit range.
    :type marginal_selectivity: bool
    :param zero_singles: Set every single expectation to 0 and draw each product uniformly in [-1, 1).
    :type zero_singles: bool
    :return: The observables; every context is a random table when neither option is set.
    :rtype: ctxdegree.core.BellObservables | ctxdegree.core.LGObservables
    """
    if marginal_selectivity and zero_singles:
        raise exceptions.ParamValidationError('marginal_selectivity and zero_singles are exclusive')
    d = descriptors.get_descriptor(kind)
    cls = observables_class(d)
    rng = random.Random(seed)

    if not (marginal_selectivity or zero_singles):
        return cls.from_contexts({
            pair.name: expectations_from_table(random_table(rng)) for pair in d.observed_pairs
        })

    values = {}
    for pair in d.connection_pairs:
        single = Fraction(0) if zero_singles else 2 * _unit(rng) - 1
        values[pair.singles[0]] = values[pair.singles[1]] = single
    for pair in d.observed_pairs:
        values[pair.name] = _within(rng, *utils.implicit_bounds(values[pair.singles[0]], values[pair.singles[1]]))
    return cls(**values)


def _endpoint(rng, lower, upper):
    return upper if rng.getrandbits(1) else lower


def random_connections(obs, seed, boundary=False):
    """Connection expectations drawn within the implicit range of each connection.

    :param obs: Observed expectations supplying the singles.
    :type obs: ctxdegree.core.BellObservables | ctxdegree.core.LGObservables
    :param seed: Seed of the generator.
    :type seed: int
    :param boundary: Put each connection at the lower or the upper end of its range with equal odds instead of
        drawing it uniformly. With zero singles the connections are then +/-1.
    :type boundary: bool
    :rtype: ctxdegree.core.BellConnections | ctxdegree.core.LGConnections
    """
    rng = random.Random(seed)
    draw = _endpoint if boundary else _within
    values = obs.coordinates()
    return connections_class(obs.descriptor)(**{
        pair.name: draw(rng, *utils.implicit_bounds(values[pair.singles[0]], values[pair.singles[1]]))
        for pair in obs.descriptor.connection_pairs
    })


class Sampling(ContextualityApiBase):
    """Seeded random systems."""

    def system(self, kind, seed, marginal_selectivity=False, zero_singles=False):
        return random_system(kind, seed, marginal_selectivity=marginal_selectivity, zero_singles=zero_singles)

    def connections(self, obs, seed, boundary=False):
        return random_connections(obs, seed, boundary=boundary)
