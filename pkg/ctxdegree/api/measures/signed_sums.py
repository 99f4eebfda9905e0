"""Maximal signed sums with a prescribed parity of minus signs."""
import itertools
import logging
from fractions import Fraction

from ctxdegree import exceptions, utils

logger = logging.getLogger(__name__)

PARITY_EVEN = 'even'
PARITY_ODD = 'odd'
ALLOWED_PARITIES = [
    PARITY_EVEN,
    PARITY_ODD,
]


def s_parity_enumerated(values, parity):
    """Maximum of +/-v1 +/-v2 ... over all sign patterns whose number of minuses has the given parity, by enumeration."""
    values = [utils.to_rational(v, 'values') for v in values]
    wanted = 0 if parity == PARITY_EVEN else 1
    return max(
        sum((sign * v for sign, v in zip(signs, values)), Fraction(0))
        for signs in itertools.product((1, -1), repeat=len(values))
        if signs.count(-1) % 2 == wanted
    )


def s_parity(values, parity, check=False):
    """Maximum of +/-v1 +/-v2 ... +/-vk over sign patterns whose number of minuses has the given parity.

    The unconstrained maximum is the sum of absolute values, reached by giving every negative value a minus. When that
    pattern has the wrong parity the cheapest fix flips the sign of the smallest magnitude.

    :param values: The values v1..vk.
    :type values: list
    :param parity: "even" or "odd".
    :type parity: str
    :param check: Also evaluate all 2^(k-1) admissible patterns and fail loudly on disagreement.
    :type check: bool
    :return: The maximum.
    :rtype: Fraction
    """
    utils.validate_choice_param('parity', parity, ALLOWED_PARITIES)
    values = [utils.to_rational(v, 'values') for v in values]
    if not values:
        raise exceptions.ParamValidationError('s_parity needs at least one value')

    negatives = sum(1 for v in values if v < 0)
    total = sum(abs(v) for v in values)
    if negatives % 2 != (0 if parity == PARITY_EVEN else 1):
        total -= 2 * min(abs(v) for v in values)

    if check:
        enumerated = s_parity_enumerated(values, parity)
        if enumerated != total:
            raise exceptions.OracleMismatch(
                's_parity closed form {0} differs from enumeration {1}'.format(total, enumerated),
                counterexample=(values, parity),
            )
    return total


def s_even(values, check=False):
    return s_parity(values, PARITY_EVEN, check=check)


def s_odd(values, check=False):
    return s_parity(values, PARITY_ODD, check=check)
