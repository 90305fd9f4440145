"""Shared test oracles, written independently of the library internals.

The functions here recompute quantities straight from their definitions
(quartic scans, whole-state-space solves, exact rational series) so the
optimized library code has something dumb and trustworthy to agree with.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import strategies as st

from flipcool.words import Configuration


def brute_dyck_factors(w: Configuration) -> set[tuple[int, int, int, int]]:
    """All maximal Dyck factors by definition: (start, end, height, sign).

    A candidate is any balanced factor w[i:j] whose base height h equals
    the prefix height at i, staying weakly on one side of h (and on the
    correct side of the axis for that sign).  Maximal means no candidate
    of the same height and sign strictly contains it.
    """
    heights = [0]
    for letter in w.letters:
        heights.append(heights[-1] + (1 if letter == 1 else -1))
    n = len(w.letters)
    candidates = set()
    for i in range(n):
        for j in range(i + 1, n + 1):
            h = heights[i]
            if heights[j] != h:
                continue
            inner = heights[i : j + 1]
            if h >= 0 and all(x >= h for x in inner):
                candidates.add((i, j, h, +1))
            if h <= 0 and all(x <= h for x in inner):
                candidates.add((i, j, h, -1))
    maximal = set()
    for i, j, h, s in candidates:
        contained = any(
            (a < i and j <= b) or (a <= i and j < b)
            for a, b, hh, ss in candidates
            if (hh, ss) == (h, s)
        )
        if not contained:
            maximal.add((i, j, h, s))
    return maximal


def brute_hitting_times(words, successors) -> dict:
    """Expected absorption times by one dense solve over the whole space.

    ``successors(w)`` yields the equally likely next states of an excited
    word.  No energy-level structure is used, so this is an independent
    check of the level-by-level solver.
    """
    excited = [w for w in words if successors(w)]
    index = {w: i for i, w in enumerate(excited)}
    m = len(excited)
    a = np.zeros((m, m))
    for w, i in index.items():
        succ = successors(w)
        share = 1.0 / len(succ)
        for s in succ:
            j = index.get(s)
            if j is not None:
                a[i, j] += share
    t = np.linalg.solve(np.eye(m) - a, np.ones(m))
    out = {w: 0.0 for w in words if w not in index}
    out.update({w: float(t[i]) for w, i in index.items()})
    return out


def binomial_series_coefficient(exponent: Fraction, k: int) -> Fraction:
    """[x^k] (1 + x)^exponent as an exact rational, by the binomial series."""
    num = Fraction(1)
    for i in range(k):
        num *= exponent - i
    return num / math.factorial(k)


def series_coefficient_inv_sqrt_cubed(k: int) -> Fraction:
    """[z^k] (1 - 4z)^{-3/2}, exact."""
    return binomial_series_coefficient(Fraction(-3, 2), k) * (-4) ** k


def series_coefficient_inv_cubed(k: int) -> Fraction:
    """[z^k] (1 - 4z)^{-3}, exact."""
    return binomial_series_coefficient(Fraction(-3), k) * (-4) ** k


def balanced_letter_lists(max_half: int = 6):
    """Hypothesis strategy for balanced letter tuples of length 2..2*max_half."""
    return (
        st.integers(min_value=1, max_value=max_half)
        .flatmap(lambda h: st.permutations([1] * h + [2] * h))
        .map(tuple)
    )


@pytest.fixture
def balanced_words():
    return balanced_letter_lists()
