#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Constants related to input documents."""

PAYLOAD_COUNTS = 'counts'
PAYLOAD_TABLE = 'table'
PAYLOAD_EXPECTATIONS = 'expectations'
ALLOWED_PAYLOADS = [
    PAYLOAD_COUNTS,
    PAYLOAD_TABLE,
    PAYLOAD_EXPECTATIONS,
]

CELL_KEYS = ('pp', 'pm', 'mp', 'mm')
EXPECTATION_KEYS = ('ab', 'a', 'b')

# Optional keys of an LG context naming its first and second single.
SINGLE_NAME_KEYS = ('s1', 's2')

FIXTURE_DIRECTORY = 'data'
AERTS_FIXTURE = 'aerts.json'
AERTS_COUNTS_FIXTURE = 'aerts_counts.json'
