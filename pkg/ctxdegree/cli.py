#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Command-line interface.

Exit codes: 0 on success, 1 on invalid arguments or input, 2 when two independent computations disagree.
"""
import argparse
import logging
import sys

from ctxdegree import exceptions, io, utils
from ctxdegree.adapters import ExactSimplexAdapter
from ctxdegree.api.measures import analyze, delta_min
from ctxdegree.api.oracle import min_delta_lp, verify_equivalence
from ctxdegree.api.polytope import (
    classify_upper_form,
    closed_form_delta_system,
    derive_delta_system,
    enumerate_vertices,
    facet_enumeration,
    match_closed_form,
)
from ctxdegree.constants import client as client_constants
from ctxdegree.constants import systems as systems_constants

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MISMATCH = 2

WHAT_FACETS = 'facets'
WHAT_DELTA_SYSTEM = 'delta-system'

LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'


class UsageError(exceptions.ContextualityError):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """Reports malformed arguments as a :py:class:`UsageError` instead of exiting with status 2."""

    def error(self, message):
        self.print_usage(self._stderr)
        raise UsageError(message)

    def print_help(self, file=None):
        super(ArgumentParser, self).print_help(file if file is not None else getattr(self, '_stdout', None))

    def exit(self, status=0, message=None):
        if message:
            self._print_message(message, self._stderr)
        raise SystemExit(status)


def _nonnegative_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError('must be nonnegative, got {0}'.format(value))
    return value


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError('must be positive, got {0}'.format(value))
    return value


def build_parser(stdout=None, stderr=None):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--precision', type=_nonnegative_int, default=None,
                        help='digits after the decimal point (default: ${0} or {1})'.format(
                            client_constants.PRECISION_ENV_VAR, client_constants.DEFAULT_PRECISION))
    common.add_argument('-v', '--verbose', action='count', default=0, help='log progress (-vv for debug output)')

    parser = ArgumentParser(prog='ctxdegree', description='Contextuality measures of Bell and Leggett-Garg systems.')
    parser._stdout, parser._stderr = stdout, stderr
    subparsers = parser.add_subparsers(dest='command', parser_class=ArgumentParser)
    subparsers.required = True

    def add(name, help_text):
        subparser = subparsers.add_parser(name, parents=[common], help=help_text, description=help_text)
        subparser._stdout, subparser._stderr = stdout, stderr
        return subparser

    analyze_parser = add('analyze', 'analyze an input document')
    analyze_parser.add_argument('--input', '-i', required=True, help='input document (JSON)')
    analyze_parser.add_argument('--format', '-f', choices=client_constants.ALLOWED_REPORT_FORMATS,
                                default=client_constants.REPORT_FORMAT_TEXT)

    derive_parser = add('derive', 'derive an inequality system of the compatibility polytope')
    derive_parser.add_argument('--system', '-s', choices=systems_constants.ALLOWED_KINDS, required=True)
    derive_parser.add_argument('--what', '-w', choices=[WHAT_FACETS, WHAT_DELTA_SYSTEM], default=WHAT_FACETS)
    derive_parser.add_argument('--output', '-o', help='file for the system text (default: standard output)')

    verify_parser = add('verify', 'check closed forms against the LP oracle on random systems')
    verify_parser.add_argument('--system', '-s', choices=systems_constants.ALLOWED_KINDS, required=True)
    verify_parser.add_argument('--n', '-n', type=_positive_int, default=1000, help='number of random systems')
    verify_parser.add_argument('--seed', type=int, default=client_constants.DEFAULT_SEED)
    verify_parser.add_argument('--workers', type=_positive_int, default=None,
                               help='worker processes (default: ${0} or the CPU count)'.format(client_constants.WORKERS_ENV_VAR))

    oracle_parser = add('oracle', 'compare the closed-form minimal coupling cost with the LP oracle')
    oracle_parser.add_argument('--input', '-i', required=True, help='input document (JSON)')
    return parser


def configure_logging(verbosity, stream):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(stream=stream, level=level, format=LOG_FORMAT, force=True)


def _analyze(args, out):
    document = io.load_document(args.input)
    report = analyze(document.observables)
    out.write(io.serialize_report(report, format=args.format, precision=args.precision))
    return EXIT_OK


def _write_system(system, args, out):
    text = io.serialize_system(system)
    if args.output:
        with open(args.output, 'w', encoding='utf-8') as output:
            output.write(text)
    else:
        out.write(text)


def _derive(args, out):
    facets = facet_enumeration(enumerate_vertices(args.system))
    partition = match_closed_form(facets, args.system)
    if args.what == WHAT_FACETS:
        out.write('{0} facets ({1} compatibility + {2} implicit)\n'.format(
            len(facets.inequalities),
            len(partition.compatibility),
            len(partition.implicit),
        ))
        _write_system(facets, args, out)
        return EXIT_OK

    system = derive_delta_system(args.system, facets=facets)
    expected = closed_form_delta_system(args.system)
    if system != expected:
        raise exceptions.FacetMismatch(
            'derived system differs from the closed form',
            path=args.system,
            unmatched=[system.render_row(row) for row in system.inequalities if row not in expected.inequalities],
            missing=[expected.render_row(row) for row in expected.inequalities if row not in system.inequalities],
        )
    out.write('{0} inequalities, upper form {1}: derived system = closed form\n'.format(
        len(system.inequalities),
        classify_upper_form(system, args.system),
    ))
    _write_system(system, args, out)
    return EXIT_OK


def _verify(args, out):
    report = verify_equivalence(args.system, args.n, seed=args.seed, workers=args.workers)
    out.write(report.summary() + '\n')
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _oracle(args, out):
    document = io.load_document(args.input)
    obs = document.observables
    lp_value = min_delta_lp(obs, adapter=ExactSimplexAdapter())
    closed = delta_min(obs)
    out.write('Delta_min (LP oracle): {0} ({1})\n'.format(utils.format_decimal(lp_value, args.precision),
                                                          utils.format_fraction(lp_value)))
    out.write('Delta_min (closed form): {0} ({1})\n'.format(utils.format_decimal(closed, args.precision),
                                                            utils.format_fraction(closed)))
    if lp_value != closed:
        out.write('DISAGREEMENT\n')
        logger.warning('LP oracle %s disagrees with closed form %s', lp_value, closed)
        return EXIT_MISMATCH
    out.write('agreement: yes\n')
    return EXIT_OK


COMMANDS = {
    'analyze': _analyze,
    'derive': _derive,
    'verify': _verify,
    'oracle': _oracle,
}


def _print_mismatch(error, err):
    err.write('error: {0}\n'.format(error))
    for row in getattr(error, 'unmatched', []):
        err.write('  unmatched: {0}\n'.format(row))
    for row in getattr(error, 'missing', []):
        err.write('  missing: {0}\n'.format(row))
    counterexample = getattr(error, 'counterexample', None)
    if counterexample is not None:
        err.write('  counterexample: {0!r}\n'.format(counterexample))


def run(argv=None, stdout=None, stderr=None):
    """Run one command.

    :param argv: Arguments without the program name; defaults to ``sys.argv[1:]``.
    :type argv: list[str]
    :param stdout: Stream for results.
    :param stderr: Stream for usage text, errors and logs.
    :return: The exit code.
    :rtype: int
    """
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser(stdout=out, stderr=err)
    try:
        args = parser.parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as error:
        err.write('{0}: error: {1}\n'.format(parser.prog, error))
        return EXIT_INVALID
    except SystemExit as exit_request:
        # --help
        return exit_request.code or EXIT_OK

    configure_logging(args.verbose, err)
    try:
        if args.precision is None:
            args.precision = utils.get_precision_from_env()
        return COMMANDS[args.command](args, out)
    except exceptions.MismatchError as error:
        _print_mismatch(error, err)
        return EXIT_MISMATCH
    except exceptions.ContextualityError as error:
        err.write('error: {0}\n'.format(error))
        return EXIT_INVALID
    except OSError as error:
        err.write('error: {0}\n'.format(error))
        return EXIT_INVALID


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
