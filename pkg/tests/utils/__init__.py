"""Collection of methods used by various ctxdegree test cases."""
import logging
import os
from fractions import Fraction

from ctxdegree.core import BellObservables, LGObservables

logger = logging.getLogger(__name__)

INSTANCES_ENV_VAR = 'CTXDEGREE_TEST_INSTANCES'
DEFAULT_INSTANCES = 1000

# 1/sqrt(2) as the nearest double, kept exact from here on
TSIRELSON_CORRELATION = Fraction(0.7071067811865475)


def get_config_file_path(filename):
    """Get the path to a config file under the "tests/config_files" directory.

    I.e., the directory containing this module's parent directory.

    :param filename: Name of the config file.
    :type filename: str
    :return: The absolute path to the config file.
    :rtype: str
    """
    test_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    return os.path.join(test_dir, 'config_files', filename)


def load_config_file(filename):
    """Read a file under the "tests/config_files" directory.

    :param filename: Name of the config file.
    :type filename: str
    :return: The file's contents.
    :rtype: str
    """
    with open(get_config_file_path(filename)) as config_file:
        return config_file.read()


def get_instance_count(default=DEFAULT_INSTANCES):
    """Number of random systems per sweep, from CTXDEGREE_TEST_INSTANCES.

    :param default: Count used when the variable is unset.
    :type default: int
    :rtype: int
    """
    raw = os.getenv(INSTANCES_ENV_VAR)
    if not raw:
        return default
    return max(1, int(raw))


def aerts_observables():
    """Expectations of the printed Aerts et al. tables, computed by hand."""
    return BellObservables(
        ab11=Fraction('-0.778'), ab12=Fraction('0.358'), ab21=Fraction('0.655'), ab22=Fraction('0.630'),
        a11=Fraction('0.358'), a12=Fraction('0.236'), a21=Fraction('0.729'), a22=Fraction('-0.532'),
        b11=Fraction('-0.384'), b12=Fraction('0.778'), b21=Fraction('0.729'), b22=Fraction('-0.506'),
    )


def bell_system(products, singles=None):
    """Bell observables from (ab11, ab12, ab21, ab22) and optional singles (a11, a12, a21, a22, b11, b12, b21, b22)."""
    singles = singles or (0,) * 8
    names = ('a11', 'a12', 'a21', 'a22', 'b11', 'b12', 'b21', 'b22')
    values = dict(zip(('ab11', 'ab12', 'ab21', 'ab22'), products))
    values.update(zip(names, singles))
    return BellObservables(**values)


def lg_system(products, singles=None):
    """LG observables from (xy, xz, yz) and optional singles (x12, x13, y12, y23, z13, z23)."""
    singles = singles or (0,) * 6
    values = dict(zip(('xy', 'xz', 'yz'), products))
    values.update(zip(('x12', 'x13', 'y12', 'y23', 'z13', 'z23'), singles))
    return LGObservables(**values)


def tsirelson_observables():
    r = TSIRELSON_CORRELATION
    return bell_system((r, r, r, -r))


def pr_box_observables():
    return bell_system((1, 1, 1, -1))
