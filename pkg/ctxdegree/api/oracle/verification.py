#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Agreement of the closed-form measures with the coupling programs on seeded random systems."""
import logging
from collections import Counter, namedtuple
from concurrent.futures import ProcessPoolExecutor

from ctxdegree import exceptions, utils
from ctxdegree.adapters import ExactSimplexAdapter
from ctxdegree.api.contextuality_api_base import ContextualityApiBase
from ctxdegree.api.measures import analyze, connections_compatible, delta_bounds, delta_min, lg_upper_bound_candidates
from ctxdegree.api.oracle.coupling_lp import coupling_feasible, delta_range_lp, min_delta_marginals_lp
from ctxdegree.api.oracle.sampling import random_connections, random_system
from ctxdegree.constants import client as client_constants
from ctxdegree.constants import systems as systems_constants
from ctxdegree.core.coupling import coupling_marginal
from ctxdegree.core.tables import ContextTable

logger = logging.getLogger(__name__)

SCHEME_GENERAL = 'general'
SCHEME_MARGINAL_SELECTIVITY = 'marginal_selectivity'
SCHEME_ZERO_SINGLES = 'zero_singles'
SCHEMES = (SCHEME_GENERAL, SCHEME_MARGINAL_SELECTIVITY, SCHEME_ZERO_SINGLES)

SEED_STRIDE = 100003
PROGRESS_EVERY = 100

InstanceResult = namedtuple('InstanceResult', [
    'index',
    'scheme',
    'observables',
    'connections',
    'delta_lp',
    'delta_closed',
    'delta0',
    'feasible_lp',
    'feasible_closed',
    'bounds',
    'max_lp',
    'upper_forms',
    'failures',
])
InstanceResult.__doc__ = """Outcome of every check on one random system; ``failures`` lists the failed checks."""


def instance_seed(seed, index):
    return seed * SEED_STRIDE + index


def instance_scheme(index):
    """Instances cycle through general, marginal-selective and zero-singles systems."""
    return SCHEMES[index % len(SCHEMES)]


def _instance_system(kind, seed, scheme):
    return random_system(
        kind,
        seed,
        marginal_selectivity=scheme == SCHEME_MARGINAL_SELECTIVITY,
        zero_singles=scheme == SCHEME_ZERO_SINGLES,
    )


def _witness_matches(witness, obs, conn):
    values = obs.coordinates()
    values.update(conn.coordinates())
    for pair in obs.descriptor.pairs:
        expected = ContextTable.from_expectations(values[pair.name], values[pair.singles[0]], values[pair.singles[1]])
        if coupling_marginal(witness, pair.name) != expected:
            return False
    return True


def check_instance(kind, index, seed, adapter=None):
    """Run every check on the random system with the given index.

    :param kind: "bell" or "lg".
    :type kind: str
    :param index: Instance index; selects the sampling scheme.
    :type index: int
    :param seed: Seed of the whole run.
    :type seed: int
    :param adapter: LP adapter.
    :type adapter: ctxdegree.adapters.Adapter
    :rtype: InstanceResult
    """
    if adapter is None:
        adapter = ExactSimplexAdapter()
    scheme = instance_scheme(index)
    obs = _instance_system(kind, instance_seed(seed, index), scheme)
    # connections sit on their range boundary unless the system is general
    conn = random_connections(obs, instance_seed(seed, index) + 1, boundary=scheme != SCHEME_GENERAL)
    failures = []

    delta_lp, max_lp = delta_range_lp(obs, adapter=adapter)
    delta_closed = delta_min(obs)
    if delta_lp != delta_closed:
        failures.append('min_delta_lp {0} != closed form {1}'.format(delta_lp, delta_closed))

    report = analyze(obs)
    delta0_lp = min_delta_marginals_lp(obs, adapter=adapter)
    if delta0_lp != report.delta0:
        failures.append('delta0 from marginals {0} != closed form {1}'.format(delta0_lp, report.delta0))

    feasibility = coupling_feasible(obs, conn, adapter=adapter)
    feasible_closed = connections_compatible(obs, conn)
    if feasibility.feasible != feasible_closed:
        failures.append('coupling_feasible {0} != closed form {1}'.format(feasibility.feasible, feasible_closed))
    if feasibility.feasible and not _witness_matches(feasibility.witness, obs, conn):
        failures.append('witness coupling does not reproduce the inputs')

    lower, upper = delta_bounds(obs)
    if not lower <= delta_lp <= upper:
        failures.append('bounds [{0}, {1}] do not bracket {2}'.format(lower, upper, delta_lp))
    if lower != delta_lp:
        failures.append('lower bound {0} is not attained ({1})'.format(lower, delta_lp))
    if upper != max_lp:
        failures.append('upper bound {0} != max_delta_lp {1}'.format(upper, max_lp))

    upper_forms = ()
    if kind == systems_constants.KIND_LG:
        candidates = lg_upper_bound_candidates(obs)
        upper_forms = tuple(sorted(form for form, value in candidates.items() if value == max_lp))

    return InstanceResult(
        index=index,
        scheme=scheme,
        observables=obs,
        connections=conn,
        delta_lp=delta_lp,
        delta_closed=delta_closed,
        delta0=report.delta0,
        feasible_lp=feasibility.feasible,
        feasible_closed=feasible_closed,
        bounds=(lower, upper),
        max_lp=max_lp,
        upper_forms=upper_forms,
        failures=tuple(failures),
    )


class VerificationReport(namedtuple('VerificationReport', ['kind', 'seed', 'results'])):
    """Per-instance results of a verification run, ordered by instance index."""
    __slots__ = ()

    @property
    def n_instances(self):
        return len(self.results)

    @property
    def failures(self):
        return [result for result in self.results if result.failures]

    @property
    def passed(self):
        return self.n_instances - len(self.failures)

    @property
    def ok(self):
        return not self.failures

    @property
    def counterexample(self):
        """First failing instance, or None."""
        failures = self.failures
        return failures[0] if failures else None

    @property
    def contextual(self):
        """Number of instances whose minimal coupling cost exceeds delta0."""
        return sum(1 for result in self.results if result.delta_lp > result.delta0)

    @property
    def feasible(self):
        return sum(1 for result in self.results if result.feasible_lp)

    @property
    def upper_form_matches(self):
        """For LG runs, how many instances each candidate upper bound matched the maximal coupling cost on."""
        counts = Counter()
        for result in self.results:
            counts.update(result.upper_forms)
        return dict(counts)

    @property
    def resolved_upper_form(self):
        """The LG upper-bound candidate that matched on every instance, or None."""
        matches = self.upper_form_matches
        forms = [form for form, count in sorted(matches.items()) if count == self.n_instances]
        return forms[0] if len(forms) == 1 else None

    def summary(self):
        """One line per fact, starting with "passed/total instances: closed form = LP oracle"."""
        lines = ['{0}/{1} instances: closed form = LP oracle'.format(self.passed, self.n_instances)]
        lines.append('contextual instances: {0}'.format(self.contextual))
        lines.append('feasible connections: {0}'.format(self.feasible))
        if self.kind == systems_constants.KIND_LG:
            matches = self.upper_form_matches
            for form in ('s0', 's1'):
                lines.append('upper bound {0} attained: {1}/{2}'.format(form, matches.get(form, 0), self.n_instances))
        counterexample = self.counterexample
        if counterexample is not None:
            lines.append('first counterexample: instance {0} ({1} scheme)'.format(
                counterexample.index,
                counterexample.scheme,
            ))
            lines.append('  observables: {0}'.format(', '.join(
                '{0}={1}'.format(name, value) for name, value in counterexample.observables.coordinates().items()
            )))
            lines.append('  connections: {0}'.format(', '.join(
                '{0}={1}'.format(name, value) for name, value in counterexample.connections.coordinates().items()
            )))
            lines.extend('  {0}'.format(failure) for failure in counterexample.failures)
        return '\n'.join(lines)


def _check_star(arguments):
    return check_instance(*arguments)


def verify_equivalence(kind, n_instances, seed=client_constants.DEFAULT_SEED, workers=None, adapter=None):
    """Check closed forms against the coupling programs on ``n_instances`` random systems.

    :param kind: "bell" or "lg".
    :type kind: str
    :param n_instances: Number of random systems, at least 1.
    :type n_instances: int
    :param seed: Seed of the run; instance ``i`` uses its own seed derived from it.
    :type seed: int
    :param workers: Worker processes. Defaults to :py:func:`ctxdegree.utils.get_workers_from_env`.
    :type workers: int
    :param adapter: LP adapter, copied into every worker.
    :type adapter: ctxdegree.adapters.Adapter
    :return: Results merged by instance index; failures are report content, not exceptions.
    :rtype: VerificationReport
    """
    utils.validate_choice_param('kind', kind, systems_constants.ALLOWED_KINDS)
    if isinstance(n_instances, bool) or not isinstance(n_instances, int) or n_instances < 1:
        raise exceptions.ParamValidationError('n_instances must be a positive integer, got {0!r}'.format(n_instances))
    if workers is None:
        workers = utils.get_workers_from_env()
    if adapter is None:
        adapter = ExactSimplexAdapter()

    arguments = [(kind, index, seed, adapter) for index in range(n_instances)]
    results = []
    if workers <= 1:
        for argument in arguments:
            results.append(_check_star(argument))
            if len(results) % PROGRESS_EVERY == 0:
                logger.info('%s: %d/%d instances checked', kind, len(results), n_instances)
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            chunksize = max(1, n_instances // (workers * 4))
            for result in executor.map(_check_star, arguments, chunksize=chunksize):
                results.append(result)
                if len(results) % PROGRESS_EVERY == 0:
                    logger.info('%s: %d/%d instances checked', kind, len(results), n_instances)

    results.sort(key=lambda result: result.index)
    report = VerificationReport(kind, seed, tuple(results))
    for failure in report.failures:
        logger.warning('instance %d disagrees: %s', failure.index, '; '.join(failure.failures))
    logger.info('%s: %d/%d instances passed', kind, report.passed, n_instances)
    return report


class Verification(ContextualityApiBase):
    """Seeded agreement runs with the shared adapter."""

    def verify(self, kind, n_instances, seed=client_constants.DEFAULT_SEED, workers=None):
        return verify_equivalence(kind, n_instances, seed=seed, workers=workers, adapter=self._adapter)

    def check_instance(self, kind, index, seed=client_constants.DEFAULT_SEED):
        return check_instance(kind, index, seed, adapter=self._adapter)
