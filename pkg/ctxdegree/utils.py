"""
Misc utility functions and constants
"""
import math
import numbers
import os
from decimal import Decimal
from fractions import Fraction
from functools import reduce

from ctxdegree import exceptions
from ctxdegree.constants import client as client_constants

Rational = Fraction

STATUS_OPTIMAL = 'optimal'
STATUS_INFEASIBLE = 'infeasible'
STATUS_UNBOUNDED = 'unbounded'


def to_rational(value, param_name='value'):
    """Convert a number or a decimal string to an exact fraction.

    Floats convert through their binary representation, so ``0.1`` becomes ``3602879701896397/36028797018963968``.
    Strings are parsed exactly: ``".049"`` becomes ``49/1000`` and ``"4/81"`` stays ``4/81``.

    :param value: The value to convert.
    :type value: Fraction | int | float | Decimal | str
    :param param_name: Name of the parameter being converted. Used in any resulting exception messages.
    :type param_name: str
    :return: The exact value.
    :rtype: Fraction
    """
    if isinstance(value, bool):
        raise exceptions.ParamValidationError('unsupported {param} argument provided "{arg}" (bool)'.format(
            param=param_name,
            arg=value,
        ))
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            raise exceptions.ParamValidationError('non-finite {param} argument provided "{arg}"'.format(
                param=param_name,
                arg=value,
            ))
        return Fraction(value)
    if isinstance(value, (Decimal, numbers.Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise exceptions.ParamValidationError('unparsable {param} argument provided "{arg}"'.format(
                param=param_name,
                arg=value,
            ))
    raise exceptions.ParamValidationError('unsupported {param} argument provided "{arg}" ({arg_type})'.format(
        param=param_name,
        arg=value,
        arg_type=type(value),
    ))


def validate_choice_param(param_name, param_argument, allowed):
    """Validate that an argument is one of the allowed values.

    :param param_name: The name of the parameter being validated. Used in any resulting exception messages.
    :type param_name: str
    :param param_argument: The argument to validate.
    :type param_argument: str
    :param allowed: The accepted values.
    :type allowed: list
    """
    if param_argument not in allowed:
        error_msg = 'invalid {param} argument provided "{arg}", supported values: "{allowed}"'
        raise exceptions.ParamValidationError(error_msg.format(
            param=param_name,
            arg=param_argument,
            allowed=', '.join(str(a) for a in allowed),
        ))


def validate_unit_interval(param_name, value):
    """Validate that an expectation lies in [-1, 1].

    :param param_name: The name of the value being validated. Used in any resulting exception messages.
    :type param_name: str
    :param value: The value to validate.
    :type value: Fraction
    """
    if not -1 <= value <= 1:
        raise exceptions.InvalidObservables(
            'expectation {value} outside [-1, 1]'.format(value=value),
            path=param_name,
        )


def implicit_bounds(first, second):
    """Range of the product expectation of two +/-1 variables with the given single expectations.

    :param first: Expectation of the first variable.
    :type first: Fraction
    :param second: Expectation of the second variable.
    :type second: Fraction
    :return: The lower and upper bound on the product expectation.
    :rtype: (Fraction, Fraction)
    """
    return -1 + abs(first + second), 1 - abs(first - second)


def gcd_of(values):
    """Greatest common divisor of a sequence of integers, 0 for an all-zero sequence."""
    return reduce(math.gcd, (abs(v) for v in values), 0)


def lcm_of(values):
    """Least common multiple of a sequence of positive integers."""
    return reduce(lambda x, y: x * y // math.gcd(x, y), values, 1)


def format_decimal(value, precision=None):
    """Render an exact value as a decimal string, rounding half to even.

    :param value: The value to render.
    :type value: Fraction | int
    :param precision: Number of digits after the decimal point. Defaults to :py:func:`get_precision_from_env`.
    :type precision: int
    :return: The decimal rendering, e.g. "0.414214".
    :rtype: str
    """
    if precision is None:
        precision = get_precision_from_env()
    if precision < 0:
        raise exceptions.ParamValidationError('precision must be nonnegative, got {0}'.format(precision))
    scaled = round(to_rational(value) * 10 ** precision)
    sign = '-' if scaled < 0 else ''
    digits = str(abs(scaled)).rjust(precision + 1, '0')
    if precision == 0:
        return sign + digits
    return '{sign}{whole}.{fraction}'.format(sign=sign, whole=digits[:-precision], fraction=digits[-precision:])


def format_fraction(value):
    """Render an exact value as "p/q" (or "p" for integers)."""
    return str(to_rational(value))


def _int_from_env(env_var, default, minimum):
    raw = os.getenv(env_var)
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise exceptions.ParamValidationError('{var} must be an integer, got "{raw}"'.format(var=env_var, raw=raw))
    if value < minimum:
        raise exceptions.ParamValidationError('{var} must be at least {minimum}, got {value}'.format(
            var=env_var,
            minimum=minimum,
            value=value,
        ))
    return value


def get_workers_from_env():
    """Get the verification worker count from env var, CTXDEGREE_WORKERS.

    :return: The worker count if set, else one worker per CPU.
    :rtype: int
    """
    return _int_from_env(client_constants.WORKERS_ENV_VAR, os.cpu_count() or 1, 1)


def get_precision_from_env():
    """Get the decimal rendering precision from env var, CTXDEGREE_PRECISION.

    :return: The precision if set, else the default.
    :rtype: int
    """
    return _int_from_env(client_constants.PRECISION_ENV_VAR, client_constants.DEFAULT_PRECISION, 0)


def raise_for_status(status, message=None, certificate=None):
    """Helper method to raise exceptions based on the status of a linear program.

    :param status: Status reported by the solver.
    :type status: str
    :param message: Optional message to include in a resulting exception.
    :type message: str
    :param certificate: Farkas certificate of an infeasible program.
    :type certificate: list
    :raises: ctxdegree.exceptions.Infeasible | ctxdegree.exceptions.Unbounded
    """
    if status == STATUS_INFEASIBLE:
        raise exceptions.Infeasible(message or 'linear program is infeasible', certificate=certificate)
    elif status == STATUS_UNBOUNDED:
        raise exceptions.Unbounded(message or 'linear program is unbounded')
