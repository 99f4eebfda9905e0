#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Constants related to the two supported systems: Bell (2x2) and Leggett-Garg (cyclic-3).

Variables are listed in atom order: the first variable is the most significant bit of an atom index and a set bit
means the value +1.
"""

KIND_BELL = 'bell'
KIND_LG = 'lg'
ALLOWED_KINDS = [
    KIND_BELL,
    KIND_LG,
]

DELTA = 'delta'

BELL_VARIABLES = ('A11', 'B11', 'A12', 'B12', 'A21', 'B21', 'A22', 'B22')

# (coordinate name, (first variable, second variable)); each variable also owns the single named after it in lower case.
BELL_OBSERVED_PAIRS = (
    ('ab11', ('A11', 'B11')),
    ('ab12', ('A12', 'B12')),
    ('ab21', ('A21', 'B21')),
    ('ab22', ('A22', 'B22')),
)
BELL_CONNECTION_PAIRS = (
    ('aa1', ('A11', 'A12')),
    ('aa2', ('A21', 'A22')),
    ('bb1', ('B11', 'B21')),
    ('bb2', ('B12', 'B22')),
)
BELL_SINGLES = ('a11', 'a12', 'a21', 'a22', 'b11', 'b12', 'b21', 'b22')

LG_VARIABLES = ('X12', 'Y12', 'X13', 'Z13', 'Y23', 'Z23')
LG_OBSERVED_PAIRS = (
    ('xy', ('X12', 'Y12')),
    ('xz', ('X13', 'Z13')),
    ('yz', ('Y23', 'Z23')),
)
LG_CONNECTION_PAIRS = (
    ('xx', ('X12', 'X13')),
    ('yy', ('Y12', 'Y23')),
    ('zz', ('Z13', 'Z23')),
)
LG_SINGLES = ('x12', 'x13', 'y12', 'y23', 'z13', 'z23')

# Input document context keys in document order.
BELL_CONTEXT_KEYS = ('a1b1', 'a1b2', 'a2b1', 'a2b2')
LG_CONTEXT_KEYS = ('xy', 'xz', 'yz')

# Value combinations of a pair, in ContextTable field order.
VALUE_COMBINATIONS = ((1, 1), (1, -1), (-1, 1), (-1, -1))
