"""Counting identities for flip weights and flip-weighted volumes.

Two families of integers are computed along independent routes and
compared exactly:

  D(n) = sum of flip counts over all balanced words of length 2n,
         closed form 2(2n-1) C(2n-2, n-1), the coefficients of
         2z (1-4z)^(-3/2);

  N(n) = sum of flip count times volume over the same words,
         closed form 16 c_{n-3} + 4 c_{n-2} + 2 c_{n-1} with
         c_k = C(k+2, 2) 4^k, the coefficients of
         (16 z^3 + 4 z^2 + 2 z)(1-4z)^(-3).

N(n)/D(n) is the flip-weighted mean volume, which grows like
(sqrt(pi)/2) n^(3/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

BRUTE_FORCE_LIMIT = 10


@lru_cache(maxsize=None)
def _enumeration_sums(n: int) -> tuple[int, int]:
    """(sum of flip counts, sum of flip count * volume) over words of length 2n.

    Volumes are accumulated doubled to stay integral, then halved at the
    end; the total is always even because each word's volume is integral.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"refusing to enumerate beyond n = {BRUTE_FORCE_LIMIT}")
    length = 2 * n
    total_flips = 0
    total_flip_volume_doubled = 0
    for ones in combinations(range(length), n):
        letters = [-1] * length
        for i in ones:
            letters[i] = 1
        mismatches = 0
        doubled_area = 0
        h = 0
        prev = None
        for step in letters:
            if step == prev:
                mismatches += 1
            doubled_area += abs(2 * h + step)
            h += step
            prev = step
        flips = (length - 1) - mismatches
        total_flips += flips
        total_flip_volume_doubled += flips * doubled_area
    assert total_flip_volume_doubled % 2 == 0
    return total_flips, total_flip_volume_doubled // 2


def flip_count_coefficient(n: int) -> int:
    """Closed form for D(n), the total flip count over words of length 2n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    k = n - 1
    return 2 * (2 * k + 1) * math.comb(2 * k, k)


def _inv_cube_coefficient(k: int) -> int:
    """Coefficient of z^k in (1-4z)^(-3): C(k+2, 2) 4^k, zero for k < 0."""
    if k < 0:
        return 0
    return math.comb(k + 2, 2) * 4**k


def flip_volume_coefficient(n: int) -> int:
    """Closed form for N(n), the total flip-weighted volume at length 2n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return (
        16 * _inv_cube_coefficient(n - 3)
        + 4 * _inv_cube_coefficient(n - 2)
        + 2 * _inv_cube_coefficient(n - 1)
    )


@dataclass(frozen=True)
class CoefficientPair:
    """A coefficient computed by enumeration and by closed form."""

    n: int
    brute: int
    closed: int

    @property
    def ok(self) -> bool:
        return self.brute == self.closed


def flip_count_identity(n: int) -> CoefficientPair:
    """Compare the enumerated and closed-form D(n); raise on mismatch."""
    brute = _enumeration_sums(n)[0]
    closed = flip_count_coefficient(n)
    if brute != closed:
        raise AssertionError(
            f"flip-count identity fails at n={n}: enumeration {brute}, "
            f"closed form {closed}"
        )
    return CoefficientPair(n, brute, closed)


def flip_volume_identity(n: int) -> CoefficientPair:
    """Compare the enumerated and closed-form N(n); raise on mismatch."""
    brute = _enumeration_sums(n)[1]
    closed = flip_volume_coefficient(n)
    if brute != closed:
        raise AssertionError(
            f"flip-volume identity fails at n={n}: enumeration {brute}, "
            f"closed form {closed}"
        )
    return CoefficientPair(n, brute, closed)


def natural_volume_ratio(n: int) -> Fraction:
    """Mean volume under the flip-weighted distribution, exact, any n >= 1."""
    return Fraction(flip_volume_coefficient(n), flip_count_coefficient(n))


@dataclass(frozen=True)
class VolumeAsymptotic:
    """The exact flip-weighted mean volume next to its growth law."""

    n: int
    exact: float
    predicted: float

    @property
    def relative_deviation(self) -> float:
        return abs(self.exact - self.predicted) / self.predicted


def natural_volume_asymptotic(n: int) -> VolumeAsymptotic:
    """Compare N(n)/D(n) with (sqrt(pi)/2) n^(3/2)."""
    exact = float(natural_volume_ratio(n))
    predicted = math.sqrt(math.pi) / 2.0 * n**1.5
    return VolumeAsymptotic(n, exact, predicted)
