"""Exact small-instance computations: hitting times and inequality sweeps.

Everything here enumerates all C(L, L/2) balanced words, so lengths are
capped (14 for the linear solves, i.e. 3432 words).  The verifiers
distinguish hard failures, which raise, from quantities that are merely
reported so a caller can decide what counts as a violation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .dynamics import allowed_flips, apply_flip
from .words import Configuration, energy, variant_bound, variant_phi, volume

_ENUMERATION_CAP = 10**6
_SOLVE_MAX_LENGTH = 14
_ARGMAX_MAX_LENGTH = 14


def enumerate_configurations(length: int) -> list[Configuration]:
    """All balanced words of the given even length, lexicographic order."""
    if length < 2 or length % 2:
        raise ValueError(f"need a positive even length, got {length}")
    if math.comb(length, length // 2) > _ENUMERATION_CAP:
        raise ValueError(f"refusing to enumerate {length}-letter words")
    out = []
    for ones in combinations(range(length), length // 2):
        letters = [2] * length
        for i in ones:
            letters[i] = 1
        out.append(Configuration(tuple(letters)))
    return out


@dataclass
class HittingTimeTable:
    """Exact expected steps to a ground state for every word of one length."""

    length: int
    times: dict[Configuration, float]
    max_residual: float

    def __getitem__(self, w: Configuration) -> float:
        return self.times[w]

    def items(self):
        return self.times.items()

    def __len__(self) -> int:
        return len(self.times)


def expected_convergence_exact(length: int) -> HittingTimeTable:
    """Solve E[T] exactly (to linear-solver accuracy) for all words.

    Cooling never increases the mismatch count, so the words split into
    levels by energy and each level's linear system only references the
    level itself and already-solved lower levels:

        t(w) = 1 + mean over allowed flips w->w' of t(w')

    with t = 0 on the mismatch-free words.  Each level is solved densely;
    the largest residual across levels is recorded and checked.
    """
    if length > _SOLVE_MAX_LENGTH:
        raise ValueError(
            f"exact solve supports lengths up to {_SOLVE_MAX_LENGTH}, got {length}"
        )
    words = enumerate_configurations(length)
    by_level: dict[int, list[Configuration]] = {}
    for w in words:
        by_level.setdefault(energy(w), []).append(w)

    times: dict[Configuration, float] = {w: 0.0 for w in by_level.get(0, [])}
    max_residual = 0.0
    for level in sorted(by_level):
        if level == 0:
            continue
        block = by_level[level]
        index = {w: i for i, w in enumerate(block)}
        m = len(block)
        a = np.zeros((m, m))
        rhs = np.ones(m)
        for w, i in index.items():
            moves = allowed_flips(w)
            share = 1.0 / len(moves)
            for move in moves:
                succ = apply_flip(w, move.position)
                j = index.get(succ)
                if j is None:
                    rhs[i] += share * times[succ]
                else:
                    a[i, j] += share
        x = np.linalg.solve(np.eye(m) - a, rhs)
        residual = float(np.max(np.abs((np.eye(m) - a) @ x - rhs)))
        max_residual = max(max_residual, residual)
        for w, i in index.items():
            times[w] = float(x[i])
    if max_residual > 1e-10:
        raise ArithmeticError(
            f"linear solve residual {max_residual:.3e} exceeds 1e-10 at length {length}"
        )
    return HittingTimeTable(length, times, max_residual)


def worst_case_argmax(
    length: int, table: HittingTimeTable | None = None
) -> tuple[list[Configuration], float]:
    """The words maximising exact E[T], with ties within 1e-9 of the max."""
    if length > _ARGMAX_MAX_LENGTH:
        raise ValueError(f"argmax supports lengths up to {_ARGMAX_MAX_LENGTH}")
    if table is None:
        table = expected_convergence_exact(length)
    best = max(table.times.values())
    winners = [w for w, t in table.items() if t >= best - 1e-9]
    return winners, best


def expected_variant_drift(w: Configuration, alpha: float) -> float:
    """Exact one-step expected change of the variant from ``w``.

    Defined only away from ground states, where the chain moves.
    """
    if energy(w) == 0:
        raise ValueError("drift is undefined at a ground state (no move is made)")
    moves = allowed_flips(w)
    here = variant_phi(w, alpha)
    terms = [variant_phi(apply_flip(w, f.position), alpha) - here for f in moves]
    return math.fsum(terms) / len(moves)


@dataclass(frozen=True)
class DriftReport:
    """Outcome of an exhaustive drift sweep at one length and alpha.

    ``bound`` is the required ceiling -alpha(1-alpha)/2 * (L/2)^(alpha-2);
    ``violations`` lists words whose exact drift exceeds it beyond the
    tolerance.  ``worst_drift`` is the largest drift seen anywhere.
    """

    length: int
    alpha: float
    bound: float
    checked: int
    worst_drift: float
    worst_word: Configuration
    violations: tuple[tuple[Configuration, float], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def strictly_negative(self) -> bool:
        return self.worst_drift < 0.0


def verify_drift_bound(
    length: int, alpha: float, tolerance: float = 1e-9
) -> DriftReport:
    """Exhaustively compare every excited word's drift against the ceiling."""
    half = length // 2
    bound = -alpha * (1.0 - alpha) / 2.0 * half ** (alpha - 2.0)
    worst = -math.inf
    worst_word = None
    violations = []
    checked = 0
    for w in enumerate_configurations(length):
        if energy(w) == 0:
            continue
        drift = expected_variant_drift(w, alpha)
        checked += 1
        if drift > worst:
            worst = drift
            worst_word = w
        if drift > bound + tolerance:
            violations.append((w, drift))
    return DriftReport(
        length, alpha, bound, checked, worst, worst_word, tuple(violations)
    )


@dataclass(frozen=True)
class VariantBoundsReport:
    """Envelope check: (1 + L/2)^alpha <= variant <= L^(alpha+1) for all words."""

    length: int
    alpha: float
    lower: float
    upper: float
    checked: int
    min_value: float
    max_value: float
    equality_words: tuple[Configuration, ...]


def verify_variant_bounds(
    length: int, alpha: float, equality_tolerance: float = 1e-12
) -> VariantBoundsReport:
    """Check the variant envelope; raises on any word outside it.

    Also verifies the lower bound is attained exactly on the two
    mismatch-free words and nowhere else.
    """
    lower = (1.0 + length / 2.0) ** alpha
    upper = float(length) ** (alpha + 1.0)
    min_value = math.inf
    max_value = -math.inf
    equality_words = []
    checked = 0
    for w in enumerate_configurations(length):
        value = variant_phi(w, alpha)
        checked += 1
        min_value = min(min_value, value)
        max_value = max(max_value, value)
        if value < lower - equality_tolerance:
            raise AssertionError(
                f"variant {value!r} of {w} below lower envelope {lower!r}"
            )
        if value > upper + equality_tolerance:
            raise AssertionError(
                f"variant {value!r} of {w} above upper envelope {upper!r}"
            )
        at_equality = abs(value - lower) <= equality_tolerance
        if at_equality:
            equality_words.append(w)
        if at_equality != (energy(w) == 0):
            raise AssertionError(
                f"lower-envelope equality should hold exactly at ground states, "
                f"but {w} (energy {energy(w)}) has variant {value!r}"
            )
    return VariantBoundsReport(
        length,
        alpha,
        lower,
        upper,
        checked,
        min_value,
        max_value,
        tuple(equality_words),
    )


@dataclass(frozen=True)
class VolumeDominationReport:
    """Comparison of the variant against the path volume over all words.

    ``violations`` holds words with variant > volume; ``max_ratio`` is the
    largest variant/volume seen, a useful diagnostic either way.
    """

    length: int
    alpha: float
    checked: int
    max_ratio: float
    max_ratio_word: Configuration
    violations: tuple[tuple[Configuration, float, float], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_variant_volume(length: int, alpha: float) -> VolumeDominationReport:
    """Exhaustively compare variant_phi(w) against volume(w); report excesses."""
    max_ratio = -math.inf
    max_word = None
    violations = []
    checked = 0
    for w in enumerate_configurations(length):
        phi = variant_phi(w, alpha)
        vol = float(volume(w))
        checked += 1
        ratio = phi / vol
        if ratio > max_ratio:
            max_ratio = ratio
            max_word = w
        if phi > vol + 1e-12:
            violations.append((w, phi, vol))
    return VolumeDominationReport(
        length, alpha, checked, max_ratio, max_word, tuple(violations)
    )


@dataclass(frozen=True)
class HittingBoundReport:
    """Check that exact E[T] <= variant_bound(w, alpha) word by word."""

    length: int
    alpha: float
    checked: int
    min_slack: float
    min_slack_word: Configuration
    violations: tuple[tuple[Configuration, float, float], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_hitting_bound(
    length: int, alpha: float, table: HittingTimeTable | None = None
) -> HittingBoundReport:
    """Compare every word's exact expected convergence time to its ceiling."""
    if table is None:
        table = expected_convergence_exact(length)
    min_slack = math.inf
    min_word = None
    violations = []
    checked = 0
    for w, t in table.items():
        ceiling = variant_bound(w, alpha)
        slack = ceiling - t
        checked += 1
        if slack < min_slack:
            min_slack = slack
            min_word = w
        if t > ceiling + 1e-9:
            violations.append((w, t, ceiling))
    return HittingBoundReport(
        table.length, alpha, checked, min_slack, min_word, tuple(violations)
    )
