#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Input documents and report rendering.

Input documents are JSON::

    {"kind": "bell",
     "contexts": {"a1b1": {"table": {"pp": ".049", "pm": ".630", "mp": ".259", "mm": ".062"}}, ...}}

Each context carries one payload: ``counts`` (nonnegative integers), ``table`` (probabilities) or ``expectations``
(``ab``, ``a`` and ``b``). Numbers are read exactly, whether written as strings or as JSON numbers. An LG context may
name its singles with ``s1``/``s2``; naming them in reverse order swaps the two variables of the payload.
"""
import json
import logging
import os
from collections import OrderedDict
from dataclasses import dataclass, field
from decimal import Decimal

from ctxdegree import exceptions, utils
from ctxdegree.constants import client as client_constants
from ctxdegree.constants import documents as documents_constants
from ctxdegree.constants import systems as systems_constants
from ctxdegree.core import descriptors
from ctxdegree.core.observables import observables_class
from ctxdegree.core.tables import ContextTable, expectations_from_table

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InputDocument:
    """A validated input document.

    ``contexts`` maps each observed pair name to its (product, first single, second single) expectations, oriented as
    the pair is declared.
    """
    kind: str
    payload: str
    contexts: OrderedDict
    observables: object
    labels: dict = field(default=None, compare=False)


def context_keys(kind):
    """Document context keys paired with the observed pair each one describes."""
    d = descriptors.get_descriptor(kind)
    keys = systems_constants.BELL_CONTEXT_KEYS if d.kind == systems_constants.KIND_BELL else systems_constants.LG_CONTEXT_KEYS
    return list(zip(keys, d.observed_pairs))


def _require_mapping(value, path):
    if not isinstance(value, dict):
        raise exceptions.InvalidDocument('expected an object, got {0}'.format(type(value).__name__), path=path)
    return value


def _number(value, path):
    if isinstance(value, bool) or not isinstance(value, (str, int, Decimal)):
        raise exceptions.InvalidDocument('expected a number or a decimal string, got {0!r}'.format(value), path=path)
    try:
        return utils.to_rational(value, path)
    except exceptions.ParamValidationError as error:
        raise exceptions.InvalidDocument(str(error.args[0]), path=path)


def _fields(payload, keys, path):
    missing = [key for key in keys if key not in payload]
    if missing:
        raise exceptions.InvalidDocument('missing field', path='{0}.{1}'.format(path, missing[0]))
    unknown = sorted(set(payload) - set(keys))
    if unknown:
        raise exceptions.InvalidDocument('unknown field', path='{0}.{1}'.format(path, unknown[0]))
    return [payload[key] for key in keys]


def _orientation(context, pair, path):
    """Whether the context lists the pair's singles in reverse order."""
    names = [context.get(key) for key in documents_constants.SINGLE_NAME_KEYS]
    if names == [None, None]:
        return False
    if tuple(names) == pair.singles:
        return False
    if tuple(names) == pair.singles[::-1]:
        return True
    raise exceptions.InvalidDocument('singles {0} do not belong to {1}'.format(
        ', '.join(str(name) for name in names),
        pair.name,
    ), path=path)


def _context_expectations(payload_kind, payload, path, tolerance):
    payload_path = '{0}.{1}'.format(path, payload_kind)
    payload = _require_mapping(payload, payload_path)
    if payload_kind == documents_constants.PAYLOAD_COUNTS:
        counts = _fields(payload, documents_constants.CELL_KEYS, payload_path)
        table = ContextTable.from_counts(*counts, path=payload_path)
        return expectations_from_table(table, tolerance=tolerance)
    if payload_kind == documents_constants.PAYLOAD_TABLE:
        cells = [_number(value, '{0}.{1}'.format(payload_path, key))
                 for key, value in zip(documents_constants.CELL_KEYS, _fields(payload, documents_constants.CELL_KEYS, payload_path))]
        table = ContextTable.from_values(*cells, tolerance=tolerance, path=payload_path)
        return expectations_from_table(table, tolerance=tolerance)
    ab, a, b = [_number(value, '{0}.{1}'.format(payload_path, key))
                for key, value in zip(documents_constants.EXPECTATION_KEYS, _fields(payload, documents_constants.EXPECTATION_KEYS, payload_path))]
    ContextTable.from_expectations(ab, a, b, path=payload_path)
    return ab, a, b


def parse_document(data, tolerance=client_constants.TABLE_SUM_TOLERANCE):
    """Validate a decoded input document.

    :param data: The decoded JSON object.
    :type data: dict
    :param tolerance: Accepted distance of a table sum from 1.
    :type tolerance: Fraction
    :return: The document.
    :rtype: InputDocument
    :raises: ctxdegree.exceptions.InvalidDocument | ctxdegree.exceptions.InvalidTable |
        ctxdegree.exceptions.InvalidObservables, each naming the offending path.
    """
    data = _require_mapping(data, '$')
    kind = data.get('kind')
    if kind not in systems_constants.ALLOWED_KINDS:
        raise exceptions.InvalidDocument('kind must be one of {0}, got {1!r}'.format(
            ', '.join(systems_constants.ALLOWED_KINDS),
            kind,
        ), path='kind')
    contexts = _require_mapping(data.get('contexts'), 'contexts')
    keys = context_keys(kind)
    unknown = sorted(set(contexts) - set(key for key, _ in keys))
    if unknown:
        raise exceptions.InvalidDocument('unknown context', path='contexts.{0}'.format(unknown[0]))

    payload_kind = None
    expectations = OrderedDict()
    for key, pair in keys:
        path = 'contexts.{0}'.format(key)
        if key not in contexts:
            raise exceptions.InvalidDocument('missing context', path=path)
        context = _require_mapping(contexts[key], path)
        found = [name for name in documents_constants.ALLOWED_PAYLOADS if name in context]
        if len(found) != 1:
            raise exceptions.InvalidDocument('expected exactly one of {0}'.format(
                ', '.join(documents_constants.ALLOWED_PAYLOADS),
            ), path=path)
        if payload_kind is None:
            payload_kind = found[0]
        elif found[0] != payload_kind:
            raise exceptions.InvalidDocument('mixed payload kinds ({0} and {1})'.format(payload_kind, found[0]), path=path)

        ab, first, second = _context_expectations(payload_kind, context[payload_kind], path, tolerance)
        if _orientation(context, pair, path):
            first, second = second, first
        expectations[pair.name] = (ab, first, second)

    labels = data.get('labels')
    if labels is not None:
        _require_mapping(labels, 'labels')
    observables = observables_class(kind).from_contexts(expectations)
    logger.debug('parsed %s document with %s payloads', kind, payload_kind)
    return InputDocument(kind=kind, payload=payload_kind, contexts=expectations, observables=observables, labels=labels)


def parse_input(text, tolerance=client_constants.TABLE_SUM_TOLERANCE):
    """Parse and validate an input document.

    :param text: JSON text.
    :type text: str | bytes
    :param tolerance: Accepted distance of a table sum from 1.
    :type tolerance: Fraction
    :return: The document.
    :rtype: InputDocument
    """
    if isinstance(text, bytes):
        text = text.decode('utf-8')
    try:
        data = json.loads(text, parse_float=Decimal)
    except ValueError as error:
        raise exceptions.InvalidDocument('malformed JSON: {0}'.format(error))
    return parse_document(data, tolerance=tolerance)


def load_document(path, tolerance=client_constants.TABLE_SUM_TOLERANCE):
    """Read and parse an input document from a file."""
    with open(path, encoding='utf-8') as document:
        return parse_input(document.read(), tolerance=tolerance)


def fixture_path(name=documents_constants.AERTS_FIXTURE):
    """Path of a bundled fixture, "aerts.json" (printed table) or "aerts_counts.json" (counts out of 81)."""
    return os.path.join(os.path.dirname(os.path.abspath(__file__)), documents_constants.FIXTURE_DIRECTORY, name)


def load_fixture(name=documents_constants.AERTS_FIXTURE):
    return load_document(fixture_path(name))


def _value(value, precision):
    return OrderedDict((('exact', utils.format_fraction(value)), ('decimal', utils.format_decimal(value, precision))))


def report_as_dict(r, precision=None):
    """JSON-ready form of a report: every number as its exact fraction and its decimal rendering."""
    data = OrderedDict()
    data['kind'] = r.kind
    data['degree'] = _value(r.degree, precision)
    data['delta0'] = _value(r.delta0, precision)
    data[r.violation_name.lower()] = _value(r.violation, precision)
    data['delta_min'] = _value(r.delta_min, precision)
    data['delta_lower'] = _value(r.delta_lower, precision)
    data['delta_upper'] = _value(r.delta_upper, precision)
    data['marginal_selectivity'] = r.marginal_selectivity
    data['inequalities'] = [
        OrderedDict((
            ('label', label),
            ('lhs', _value(lhs, precision)),
            ('bound', _value(r.bound, precision)),
            ('holds', lhs <= r.bound),
        ))
        for label, lhs in zip(r.inequality_labels, r.inequality_lhs)
    ]
    if r.kind == systems_constants.KIND_LG:
        data['sz_sum'] = _value(r.sz_sum, precision)
        data['sz_lower'] = _value(r.sz_lower, precision)
        data['sz_upper'] = _value(r.sz_upper, precision)
    return data


def _report_text(r, precision):
    def decimal(value):
        return utils.format_decimal(value, precision)

    lines = [
        'system: {0}'.format(r.kind),
        'contextuality degree: {0}'.format(decimal(r.degree)),
        'Delta0: {0}'.format(decimal(r.delta0)),
        '{0}: {1}'.format(r.violation_name, decimal(r.violation)),
        'Delta_min: {0}'.format(decimal(r.delta_min)),
        'Delta bounds: [{0}, {1}]'.format(decimal(r.delta_lower), decimal(r.delta_upper)),
        'marginal selectivity: {0}'.format('yes' if r.marginal_selectivity else 'no'),
    ]
    if r.kind == systems_constants.KIND_LG:
        lines.append('xy + yz + xz: {0} in [{1}, {2}]'.format(decimal(r.sz_sum), decimal(r.sz_lower), decimal(r.sz_upper)))
    width = max(len(label) for label in r.inequality_labels)
    lines.append('')
    lines.append('{0}  {1:>12}  {2:>12}  {3}'.format('inequality'.ljust(width), 'lhs', 'bound', 'verdict'))
    for label, lhs in zip(r.inequality_labels, r.inequality_lhs):
        lines.append('{0}  {1:>12}  {2:>12}  {3}'.format(
            label.ljust(width),
            decimal(lhs),
            decimal(r.bound),
            'holds' if lhs <= r.bound else 'violated',
        ))
    return '\n'.join(lines) + '\n'


def serialize_report(r, format=client_constants.REPORT_FORMAT_TEXT, precision=None):
    """Render a report.

    :param r: The report.
    :type r: ctxdegree.api.measures.BellReport | ctxdegree.api.measures.LGReport
    :param format: "text" or "json".
    :type format: str
    :param precision: Digits after the decimal point. Defaults to :py:func:`ctxdegree.utils.get_precision_from_env`.
    :type precision: int
    :return: The rendering; equal reports render to equal text.
    :rtype: str
    """
    utils.validate_choice_param('format', format, client_constants.ALLOWED_REPORT_FORMATS)
    if precision is None:
        precision = utils.get_precision_from_env()
    if format == client_constants.REPORT_FORMAT_JSON:
        return json.dumps(report_as_dict(r, precision), indent=4, sort_keys=True) + '\n'
    return _report_text(r, precision)


def serialize_system(sys):
    """Text rendering of a linear system, see :py:meth:`ctxdegree.core.LinearSystem.dumps`."""
    return sys.dumps()
