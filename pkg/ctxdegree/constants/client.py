#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Constants related to the ctxdegree Client and its defaults."""
from fractions import Fraction

DEFAULT_PRECISION = 6

# Rounded published tables may miss 1 by this much; they are accepted as-is.
TABLE_SUM_TOLERANCE = Fraction(2, 1000)

PIVOT_RULE_BLAND = 'bland'
PIVOT_RULE_HYBRID = 'hybrid'
ALLOWED_PIVOT_RULES = [
    PIVOT_RULE_BLAND,
    PIVOT_RULE_HYBRID,
]
DEFAULT_PIVOT_RULE = PIVOT_RULE_HYBRID

# Consecutive degenerate pivots after which the hybrid rule switches to Bland's rule for good.
DEFAULT_DEGENERATE_LIMIT = 50

DEFAULT_SEED = 42

WORKERS_ENV_VAR = 'CTXDEGREE_WORKERS'
PRECISION_ENV_VAR = 'CTXDEGREE_PRECISION'

REPORT_FORMAT_JSON = 'json'
REPORT_FORMAT_TEXT = 'text'
ALLOWED_REPORT_FORMATS = [
    REPORT_FORMAT_TEXT,
    REPORT_FORMAT_JSON,
]
