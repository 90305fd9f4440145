"""Balanced two-letter words viewed as lattice bridges.

A configuration is a word over the alphabet {1, 2} containing as many 1s
as 2s.  Reading the letters left to right while stepping up for a 1 and
down for a 2 traces a path that starts and ends at height zero; the
quantities this package cares about (mismatch energy, area, Dyck-factor
decomposition, the concave variant built on it) are statements about
that path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

__all__ = [
    "Configuration",
    "DyckFactor",
    "Sign",
    "VariantParams",
    "alpha_value",
    "dyck_decompose",
    "energy",
    "parse_configuration",
    "path_profile",
    "tuned_alpha",
    "variant_bound",
    "variant_phi",
    "volume",
    "volume_doubled",
]


@dataclass(frozen=True)
class Configuration:
    """An immutable balanced word over {1, 2}.

    The empty configuration is allowed; it is trivially mismatch-free.
    Construction validates both the alphabet and the letter balance, so
    any held instance is a genuine balanced word.
    """

    letters: tuple[int, ...]

    def __post_init__(self):
        ones = self.letters.count(1)
        twos = self.letters.count(2)
        if ones + twos != len(self.letters):
            bad = sorted(set(self.letters) - {1, 2})
            raise ValueError(f"letters must be 1 or 2, got {bad}")
        if ones != twos:
            oddness = " (odd length)" if len(self.letters) % 2 else ""
            raise ValueError(
                f"unbalanced configuration: {ones} ones vs {twos} twos{oddness}"
            )

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(map(str, self.letters))

    @property
    def half_length(self) -> int:
        return len(self.letters) // 2


def parse_configuration(text: str) -> Configuration:
    """Parse a string of '1' and '2' characters into a Configuration.

    Surrounding whitespace (for example a trailing newline from a file)
    is ignored.  Any other character, or an imbalance between the two
    letters, raises ValueError with a message naming the problem.
    """
    text = text.strip()
    bad = sorted(set(text) - {"1", "2"})
    if bad:
        raise ValueError(f"configuration may contain only '1' and '2', got {bad!r}")
    return Configuration(tuple(1 if c == "1" else 2 for c in text))


def energy(w: Configuration) -> int:
    """Number of mismatches: adjacent positions carrying equal letters."""
    letters = w.letters
    return sum(1 for a, b in zip(letters, letters[1:]) if a == b)


def path_profile(w: Configuration) -> tuple[int, ...]:
    """Heights h_0..h_L of the path of ``w``; h_k counts 1s minus 2s in w_1..w_k."""
    heights = [0]
    h = 0
    for a in w.letters:
        h += 1 if a == 1 else -1
        heights.append(h)
    return tuple(heights)


def volume_doubled(w: Configuration) -> int:
    """Twice the area enclosed between the path of ``w`` and the axis.

    Each letter contributes |h_{k-1} + h_k|, the doubled trapezoid area of
    its step; consecutive heights differ by one, so no step straddles the
    axis and the pieces add up to the full unsigned area.  The doubled
    value is kept integral so callers can stay in exact arithmetic.
    """
    total = 0
    h = 0
    for a in w.letters:
        nh = h + 1 if a == 1 else h - 1
        s = h + nh
        total += s if s >= 0 else -s
        h = nh
    return total


def volume(w: Configuration) -> Fraction:
    """Area between the path of ``w`` and the axis, as an exact rational."""
    return Fraction(volume_doubled(w), 2)


class Sign(Enum):
    """Side of its base height that a Dyck factor stays on."""

    POSITIVE = 1
    NEGATIVE = -1


@dataclass(frozen=True)
class DyckFactor:
    """A maximal balanced factor staying weakly on one side of its base height.

    ``start``/``end`` index letters 0-based with ``end`` exclusive; they
    coincide with the path vertices at which the factor begins and ends,
    both at height ``height``.  A positive factor never dips below that
    height, a negative one never rises above it.  Maximality means no
    other factor with the same base height strictly contains it.  ``ones``
    counts the letter 1s inside, which sets the factor's variant weight.
    """

    start: int
    end: int
    height: int
    sign: Sign
    ones: int


def _one_sided_factors(heights) -> list[tuple[int, int, int]]:
    """Maximal positive-side factors for a height profile.

    Returns (start, end, base) triples, end exclusive.  A factor at base
    height h >= 0 opens at the first up-step leaving h while no factor at
    h is open, tracks the latest return to h, and closes when the path
    drops below h (or at the end of the word).  Open factors always form
    a stack of strictly increasing base heights, so each step touches at
    most the top entry.
    """
    out = []
    open_factors: list[list[int]] = []  # [base, first vertex at base, latest one]
    for k in range(1, len(heights)):
        prev = heights[k - 1]
        cur = heights[k]
        if cur > prev:
            if prev >= 0 and not (open_factors and open_factors[-1][0] == prev):
                open_factors.append([prev, k - 1, k - 1])
        else:
            if open_factors and open_factors[-1][0] == prev:
                base, first, last = open_factors.pop()
                if last > first:
                    out.append((first, last, base))
            if open_factors and open_factors[-1][0] == cur:
                open_factors[-1][2] = k
    for base, first, last in open_factors:
        if last > first:
            out.append((first, last, base))
    return out


def dyck_decompose(w: Configuration) -> list[DyckFactor]:
    """All maximal Dyck factors of ``w``, every base height, both signs.

    The factors at height zero tile the word into alternating positive and
    negative blocks; factors at higher (or, mirrored, lower) bases nest
    strictly inside them.  Sorted by start position, outermost first.
    """
    heights = path_profile(w)
    factors = [
        DyckFactor(a, b, h, Sign.POSITIVE, (b - a) // 2)
        for a, b, h in _one_sided_factors(heights)
    ]
    mirrored = tuple(-h for h in heights)
    factors += [
        DyckFactor(a, b, -h, Sign.NEGATIVE, (b - a) // 2)
        for a, b, h in _one_sided_factors(mirrored)
    ]
    factors.sort(key=lambda f: (f.start, -f.end, abs(f.height)))
    return factors


@dataclass(frozen=True)
class VariantParams:
    """Exponent of the concave per-factor weight (1 + ones) ** alpha.

    ``alpha`` must lie strictly inside (0, 1): at either endpoint the
    drift constant alpha * (1 - alpha) degenerates and the time bound
    built from the variant becomes vacuous.
    """

    alpha: float

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must lie strictly in (0, 1), got {self.alpha}")


def alpha_value(alpha: float | VariantParams) -> float:
    """Normalize a bare float or VariantParams to a validated exponent."""
    if isinstance(alpha, VariantParams):
        return alpha.alpha
    return VariantParams(float(alpha)).alpha


def variant_phi(w: Configuration, alpha: float | VariantParams) -> float:
    """Sum of (1 + ones) ** alpha over the maximal Dyck factors of ``w``.

    Undefined on the empty configuration (it has no factors and the
    bounds tied to the variant assume at least one letter pair).
    """
    a = alpha_value(alpha)
    if len(w) == 0:
        raise ValueError("variant is undefined on the empty configuration")
    return sum((1 + f.ones) ** a for f in dyck_decompose(w))


def variant_bound(w: Configuration, alpha: float | VariantParams) -> float:
    """Upper bound on the expected cooling time when starting from ``w``.

    The variant drops in expectation by at least alpha*(1-alpha)/2 *
    (L/2)**(alpha-2) per step while mismatches remain, and can fall by at
    most its initial value before hitting its floor, which gives
    variant_phi(w) * 2 * (L/2)**(2-alpha) / (alpha*(1-alpha)).
    """
    a = alpha_value(alpha)
    if len(w) == 0:
        raise ValueError("bound is undefined on the empty configuration")
    n = len(w) // 2
    return variant_phi(w, a) * 2.0 * n ** (2.0 - a) / (a * (1.0 - a))


def tuned_alpha(half_length: int) -> float:
    """The exponent 1 - 1/ln(m) that optimizes the variant-based time bound.

    Only meaningful for half-length m >= 3, where it lies inside (0, 1).
    """
    if half_length < 3:
        raise ValueError(f"tuned exponent needs half-length >= 3, got {half_length}")
    return 1.0 - 1.0 / math.log(half_length)
