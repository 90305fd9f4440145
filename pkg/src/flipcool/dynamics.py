"""Flip moves and the cooling Markov chain over balanced words.

A flip exchanges two adjacent different letters, which moves one interior
vertex of the path up or down by two.  The cooling chain repeatedly picks
a flip uniformly among those that do not increase the mismatch count and
stops once the word is mismatch-free.  The melt walk picks uniformly
among all flips and never stops.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .words import Configuration, energy, variant_phi

DEFAULT_STEP_CAP = 10**10


class FlipClass(Enum):
    IRREVERSIBLE = "irreversible"  # strictly lowers the mismatch count
    REVERSIBLE = "reversible"      # keeps the mismatch count unchanged
    FORBIDDEN = "forbidden"        # would raise it; cooling never performs these


def classify_delta(delta_e: int) -> FlipClass:
    if delta_e < 0:
        return FlipClass.IRREVERSIBLE
    if delta_e == 0:
        return FlipClass.REVERSIBLE
    return FlipClass.FORBIDDEN


@dataclass(frozen=True)
class FlipMove:
    """A performable flip at 1-based ``position``: letters position, position+1.

    ``height`` is the path height just before the flipped pair and
    ``delta_e`` the mismatch-count change the flip would cause.
    """

    position: int
    height: int
    delta_e: int

    @property
    def flip_class(self) -> FlipClass:
        return classify_delta(self.delta_e)


def _delta_e(letters, p: int) -> int:
    # Only the adjacencies on either side of the swapped pair can change,
    # and each one toggles its mismatch state.
    d = 0
    if p > 0:
        d += -1 if letters[p - 1] == letters[p] else 1
    if p + 2 < len(letters):
        d += -1 if letters[p + 1] == letters[p + 2] else 1
    return d


def enumerate_flips(w: Configuration) -> list[FlipMove]:
    """Every performable flip of ``w`` (all classes), in position order.

    There are exactly (L-1) - energy(w) of them: each adjacent pair either
    carries a mismatch or supports a flip.
    """
    letters = w.letters
    flips = []
    h = 0
    for p in range(len(letters) - 1):
        if letters[p] != letters[p + 1]:
            flips.append(FlipMove(p + 1, h, _delta_e(letters, p)))
        h += 1 if letters[p] == 1 else -1
    return flips


def allowed_flips(w: Configuration) -> list[FlipMove]:
    """Flips the cooling chain may perform: those with delta_e <= 0."""
    return [f for f in enumerate_flips(w) if f.delta_e <= 0]


def _checked_flip_index(letters, position: int) -> int:
    p = position - 1
    if not 0 <= p < len(letters) - 1:
        raise ValueError(
            f"flip position {position} out of range 1..{len(letters) - 1}"
        )
    if letters[p] == letters[p + 1]:
        raise ValueError(f"no flip at position {position}: adjacent letters are equal")
    return p


def apply_flip(w: Configuration, position: int) -> Configuration:
    """Exchange the letters at ``position`` and ``position + 1`` (1-based)."""
    p = _checked_flip_index(w.letters, position)
    swapped = list(w.letters)
    swapped[p], swapped[p + 1] = swapped[p + 1], swapped[p]
    return Configuration(tuple(swapped))


def classify_flip(w: Configuration, position: int) -> FlipClass:
    """Class of the flip at ``position``: irreversible, reversible or forbidden."""
    p = _checked_flip_index(w.letters, position)
    return classify_delta(_delta_e(w.letters, p))


class CoolingState:
    """Mutable chain state with an O(1) allowed-flip structure.

    Holds the word as a letter list plus the cached mismatch count and the
    set of positions whose flip would not increase it.  The set is stored
    as a dense list with a slot table mapping positions to list indices,
    so membership updates and uniform sampling are constant time; removal
    swaps the removed entry with the last one.  A flip at position p can
    only change the status of positions p-2..p+2.

    Not thread-safe; run independent chains on independent states.
    """

    __slots__ = ("letters", "energy", "_dense", "_slot")

    def __init__(self, config: Configuration):
        self.letters = list(config.letters)
        self.energy = energy(config)
        n_pos = max(len(self.letters) - 1, 0)
        self._slot = [-1] * n_pos
        self._dense: list[int] = []
        for p in range(n_pos):
            if self.letters[p] != self.letters[p + 1] and _delta_e(self.letters, p) <= 0:
                self._slot[p] = len(self._dense)
                self._dense.append(p)

    @property
    def configuration(self) -> Configuration:
        return Configuration(tuple(self.letters))

    @property
    def allowed(self) -> frozenset[int]:
        """1-based positions whose flip would not increase the mismatch count."""
        return frozenset(p + 1 for p in self._dense)

    def _refresh(self, p: int) -> None:
        if not 0 <= p < len(self.letters) - 1:
            return
        letters = self.letters
        ok = letters[p] != letters[p + 1] and _delta_e(letters, p) <= 0
        s = self._slot[p]
        if ok:
            if s < 0:
                self._slot[p] = len(self._dense)
                self._dense.append(p)
        elif s >= 0:
            moved = self._dense.pop()
            if moved != p:
                self._dense[s] = moved
                self._slot[moved] = s
            self._slot[p] = -1

    def apply(self, position: int) -> None:
        """Perform the flip at the 1-based ``position`` and repair the caches."""
        letters = self.letters
        p = _checked_flip_index(letters, position)
        self.energy += _delta_e(letters, p)
        letters[p], letters[p + 1] = letters[p + 1], letters[p]
        for q in range(p - 2, p + 3):
            self._refresh(q)


def cooling_step(state: CoolingState, rng) -> CoolingState:
    """One step of the cooling chain, mutating ``state`` in place.

    Mismatch-free states are fixed points: they are returned unchanged and
    no randomness is consumed.  Otherwise a uniformly chosen allowed flip
    is performed (one rng.random() call).
    """
    if state.energy == 0:
        return state
    dense = state._dense
    if not dense:
        raise AssertionError("mismatches present but no allowed flip; state corrupted")
    p = dense[int(rng.random() * len(dense))]
    state.apply(p + 1)
    return state


@dataclass(frozen=True)
class CoolingRun:
    """Outcome of a cooling run: steps to the ground state, optional traces."""

    steps: int
    energies: tuple[int, ...] | None = None
    variants: tuple[float, ...] | None = None


class StepCapError(RuntimeError):
    """Raised when a cooling run exceeds its step cap before converging."""


def run_cooling(
    w0: Configuration,
    rng,
    *,
    trace: bool = False,
    alpha: float | None = None,
    step_cap: int = DEFAULT_STEP_CAP,
) -> CoolingRun:
    """Run the cooling chain from ``w0`` until no mismatch remains.

    With ``trace`` the energy after every step is recorded (starting with
    the initial value); passing ``alpha`` additionally records the variant
    along the trajectory.  Exceeding ``step_cap`` raises StepCapError so a
    stuck run is never silently reported as converged.  The untraced path
    below is a flattened copy of cooling_step that consumes randomness
    identically, one rng.random() call per step.
    """
    if trace or alpha is not None:
        return _run_traced(w0, rng, alpha, step_cap)

    state = CoolingState(w0)
    letters = state.letters
    dense = state._dense
    slot = state._slot
    e = state.energy
    last = len(letters) - 2
    rand = rng.random
    steps = 0
    while e > 0:
        if steps >= step_cap:
            raise StepCapError(f"no ground state within {steps} steps from {w0}")
        if not dense:
            raise AssertionError("mismatches present but no allowed flip")
        p = dense[int(rand() * len(dense))]
        a = letters[p]
        b = letters[p + 1]
        d = 0
        if p > 0:
            d += -1 if letters[p - 1] == a else 1
        if p < last:
            d += -1 if letters[p + 2] == b else 1
        letters[p] = b
        letters[p + 1] = a
        e += d
        steps += 1
        if e == 0:
            break
        lo = p - 2 if p > 2 else 0
        hi = p + 2 if p + 2 < last else last
        for q in range(lo, hi + 1):
            x = letters[q]
            y = letters[q + 1]
            if x != y:
                dd = 0
                if q > 0:
                    dd += -1 if letters[q - 1] == x else 1
                if q < last:
                    dd += -1 if letters[q + 2] == y else 1
                ok = dd <= 0
            else:
                ok = False
            s = slot[q]
            if ok:
                if s < 0:
                    slot[q] = len(dense)
                    dense.append(q)
            elif s >= 0:
                moved = dense.pop()
                if moved != q:
                    dense[s] = moved
                    slot[moved] = s
                slot[q] = -1
    return CoolingRun(steps)


def _run_traced(w0, rng, alpha, step_cap):
    state = CoolingState(w0)
    energies = [state.energy]
    variants = [variant_phi(state.configuration, alpha)] if alpha is not None else None
    steps = 0
    while state.energy > 0:
        if steps >= step_cap:
            raise StepCapError(f"no ground state within {steps} steps from {w0}")
        cooling_step(state, rng)
        steps += 1
        energies.append(state.energy)
        if variants is not None:
            variants.append(variant_phi(state.configuration, alpha))
    return CoolingRun(
        steps,
        tuple(energies),
        tuple(variants) if variants is not None else None,
    )


def melt_step(w: Configuration, rng) -> Configuration:
    """One step of the unrestricted walk: a uniformly random flip, any class."""
    letters = w.letters
    if len(letters) < 2:
        raise ValueError("melt step needs a nonempty configuration")
    positions = [p for p in range(len(letters) - 1) if letters[p] != letters[p + 1]]
    p = positions[int(rng.random() * len(positions))]
    return apply_flip(w, p + 1)
