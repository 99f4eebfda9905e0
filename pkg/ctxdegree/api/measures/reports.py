"""Analysis reports of the Bell and Leggett-Garg measures."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from ctxdegree.constants import systems as systems_constants


@dataclass(frozen=True)
class BellReport:
    delta0: Fraction
    delta_chsh: Fraction
    delta_min: Fraction
    degree: Fraction
    chsh_lhs: Tuple[Fraction, Fraction, Fraction, Fraction]
    bound: Fraction
    marginal_selectivity: bool
    delta_lower: Fraction
    delta_upper: Fraction

    kind = systems_constants.KIND_BELL
    violation_name = 'Delta_CHSH'
    inequality_labels = (
        '|+ab11 +ab12 +ab21 -ab22|',
        '|+ab11 +ab12 -ab21 +ab22|',
        '|+ab11 -ab12 +ab21 +ab22|',
        '|-ab11 +ab12 +ab21 +ab22|',
    )

    @property
    def violation(self):
        return self.delta_chsh

    @property
    def inequality_lhs(self):
        return self.chsh_lhs


@dataclass(frozen=True)
class LGReport:
    delta0: Fraction
    delta_sz: Fraction
    delta_min: Fraction
    degree: Fraction
    sz_lhs: Tuple[Fraction, Fraction, Fraction, Fraction]
    bound: Fraction
    marginal_selectivity: bool
    delta_lower: Fraction
    delta_upper: Fraction
    sz_sum: Fraction
    sz_lower: Fraction
    sz_upper: Fraction

    kind = systems_constants.KIND_LG
    violation_name = 'Delta_SZ'
    inequality_labels = (
        '+xy +yz -xz',
        '+xy -yz +xz',
        '-xy +yz +xz',
        '-xy -yz -xz',
    )

    @property
    def violation(self):
        return self.delta_sz

    @property
    def inequality_lhs(self):
        return self.sz_lhs
