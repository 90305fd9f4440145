"""Initial-condition samplers: worst case, ground states, uniform, natural.

The natural distribution weights each balanced word by its number of
performable flips, (L-1) - energy(w).  It is sampled exactly by rejection
from the uniform distribution; the acceptance test compares an integer
uniform on 0..L-2 against the flip count, so no floating-point thresholds
are involved.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate

from .words import Configuration, energy

# Above this length, tabulating all C(L, L/2) words is no longer sensible.
ENUMERATION_LIMIT = 20

_SAMPLER_KINDS = ("worst", "ground", "uniform", "natural", "natural-table")


def _check_length(length: int) -> int:
    if length < 2 or length % 2:
        raise ValueError(f"need a positive even length, got {length}")
    return length


def worst_case_config(length: int) -> Configuration:
    """The block word 1^{L/2} 2^{L/2}, the empirically slowest start."""
    half = _check_length(length) // 2
    return Configuration((1,) * half + (2,) * half)


def ground_state(length: int, flipped: bool = False) -> Configuration:
    """An alternating word, (12)^{L/2} or with ``flipped`` (21)^{L/2}."""
    half = _check_length(length) // 2
    pair = (2, 1) if flipped else (1, 2)
    return Configuration(pair * half)


def sample_uniform(length: int, rng) -> Configuration:
    """A uniform balanced word of the given length."""
    half = _check_length(length) // 2
    letters = [1] * half + [2] * half
    rng.shuffle(letters)
    return Configuration(tuple(letters))


def flip_weight(w: Configuration) -> int:
    """Number of performable flips of ``w``: adjacent pairs minus mismatches."""
    return max(len(w) - 1, 0) - energy(w)


def sample_natural_with_rounds(length: int, rng) -> tuple[Configuration, int]:
    """Exact flip-weighted sample plus the number of rejection rounds used.

    A uniform word is accepted with probability flip_weight / (L-1), which
    is exact because the threshold draw is an integer.  The expected number
    of rounds is below 2 for every length.
    """
    _check_length(length)
    rounds = 0
    while True:
        rounds += 1
        w = sample_uniform(length, rng)
        if rng.randrange(length - 1) < flip_weight(w):
            return w, rounds


def sample_natural(length: int, rng) -> Configuration:
    return sample_natural_with_rounds(length, rng)[0]


def exact_natural_distribution(length: int) -> dict[Configuration, Fraction]:
    """The flip-weighted distribution as exact rationals, by enumeration."""
    from .oracle import enumerate_configurations

    _check_length(length)
    weights = {w: flip_weight(w) for w in enumerate_configurations(length)}
    total = sum(weights.values())
    return {w: Fraction(v, total) for w, v in weights.items()}


@dataclass(frozen=True)
class SamplerSpec:
    """A named initial-condition source usable across worker processes.

    ``kind`` is one of worst, ground, uniform, natural, natural-table;
    the last one draws from the exactly tabulated flip-weighted
    distribution and is limited to short words.
    """

    kind: str
    length: int

    def __post_init__(self):
        if self.kind not in _SAMPLER_KINDS:
            raise ValueError(f"unknown sampler kind {self.kind!r}")
        _check_length(self.length)
        if self.kind == "natural-table" and self.length > ENUMERATION_LIMIT:
            raise ValueError(
                f"natural-table is limited to length {ENUMERATION_LIMIT}, "
                f"got {self.length}"
            )

    def draw(self, rng) -> Configuration:
        if self.kind == "worst":
            return worst_case_config(self.length)
        if self.kind == "ground":
            return ground_state(self.length)
        if self.kind == "uniform":
            return sample_uniform(self.length, rng)
        if self.kind == "natural":
            return sample_natural(self.length, rng)
        words, cumulative = _natural_table(self.length)
        ticket = rng.randrange(cumulative[-1])
        return words[bisect_right(cumulative, ticket)]


_TABLE_CACHE: dict[int, tuple[list[Configuration], list[int]]] = {}


def _natural_table(length: int):
    cached = _TABLE_CACHE.get(length)
    if cached is None:
        from .oracle import enumerate_configurations

        words = enumerate_configurations(length)
        cumulative = list(accumulate(flip_weight(w) for w in words))
        cached = _TABLE_CACHE[length] = (words, cumulative)
    return cached
