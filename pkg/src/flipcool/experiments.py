"""Replicated cooling experiments with deterministic output.

Each replicate gets its own seed derived by hashing (master seed, length,
replicate index), so a record does not depend on scheduling: running with
one worker or many, or re-running a single replicate in isolation,
produces identical rows.  For the same reason wall-clock time is not
recorded per row (it would break byte-for-byte reproducibility); timing
belongs on stderr.
"""

from __future__ import annotations

import csv
import json
import math
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from hashlib import sha256
from random import Random

import numpy as np

from .dynamics import run_cooling
from .samplers import SamplerSpec
from .words import Configuration

MODES = ("worst", "uniform", "natural", "word")
CSV_HEADER = ("n", "mode", "replicate", "seed", "T", "wall_time_s")


@dataclass(frozen=True)
class RunRecord:
    """One cooling run: word length, start mode, replicate index, seed, steps."""

    n: int
    mode: str
    replicate: int
    seed: int
    T: int
    wall_time_s: float = 0.0


def replicate_seed(master_seed: int, n: int, replicate: int) -> int:
    """A 63-bit seed tied to (master, n, replicate) and nothing else."""
    digest = sha256(f"{master_seed}:{n}:{replicate}".encode()).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def _sampler_for(mode: str, n: int, word: Configuration | None) -> SamplerSpec | None:
    if mode == "word":
        return None
    kind = {"worst": "worst", "uniform": "uniform", "natural": "natural"}[mode]
    return SamplerSpec(kind, n)


def run_replicate(
    mode: str,
    n: int,
    replicate: int,
    master_seed: int,
    word: Configuration | None = None,
) -> RunRecord:
    """Draw a start, cool it to the ground state, report the step count."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "word" and word is None:
        raise ValueError("word mode needs an explicit configuration")
    seed = replicate_seed(master_seed, n, replicate)
    rng = Random(seed)
    if mode == "word":
        start = word
    else:
        start = _sampler_for(mode, n, word).draw(rng)
    result = run_cooling(start, rng)
    return RunRecord(n, mode, replicate, seed, result.steps)


def _run_batch(args) -> list[RunRecord]:
    mode, n, replicates, master_seed, word = args
    return [run_replicate(mode, n, r, master_seed, word) for r in replicates]


def run_experiment(
    mode: str,
    n_list: list[int],
    reps: int,
    master_seed: int,
    word: Configuration | None = None,
    workers: int = 1,
) -> list[RunRecord]:
    """All (n, replicate) runs, sorted by (n, replicate) regardless of workers."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if reps < 1:
        raise ValueError(f"need at least one replicate, got {reps}")
    if mode == "word":
        if word is None:
            raise ValueError("word mode needs an explicit configuration")
        n_list = [len(word)]
    if not n_list:
        raise ValueError("need at least one length")
    for n in n_list:
        if n < 2 or n % 2:
            raise ValueError(f"need positive even lengths, got {n}")

    if workers <= 1:
        records = [
            run_replicate(mode, n, r, master_seed, word)
            for n in n_list
            for r in range(reps)
        ]
    else:
        # Chunk by replicate blocks so large n values spread across workers.
        block = max(1, math.ceil(reps / (2 * workers)))
        tasks = [
            (mode, n, range(lo, min(lo + block, reps)), master_seed, word)
            for n in n_list
            for lo in range(0, reps, block)
        ]
        records = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for batch in pool.map(_run_batch, tasks, chunksize=1):
                records.extend(batch)
    records.sort(key=lambda rec: (rec.n, rec.replicate))
    return records


def summarize(records: list[RunRecord]) -> list[dict]:
    """Per-length sample statistics of T, in increasing n."""
    by_n: dict[int, list[int]] = {}
    for rec in records:
        by_n.setdefault(rec.n, []).append(rec.T)
    out = []
    for n in sorted(by_n):
        ts = by_n[n]
        mean = statistics.fmean(ts)
        std = statistics.stdev(ts) if len(ts) > 1 else 0.0
        out.append(
            {
                "n": n,
                "reps": len(ts),
                "mean_T": mean,
                "std_T": std,
                "stderr_T": std / math.sqrt(len(ts)),
            }
        )
    return out


def write_csv(path, records: list[RunRecord]) -> None:
    """Write records with a fixed header, LF line endings, six-decimal times."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for rec in records:
            writer.writerow(
                [
                    rec.n,
                    rec.mode,
                    rec.replicate,
                    rec.seed,
                    rec.T,
                    f"{rec.wall_time_s:.6f}",
                ]
            )


def read_csv(path) -> list[RunRecord]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = tuple(next(reader))
        if header != CSV_HEADER:
            raise ValueError(f"unexpected header {header!r}, want {CSV_HEADER!r}")
        return [
            RunRecord(int(n), mode, int(rep), int(seed), int(t), float(wall))
            for n, mode, rep, seed, t, wall in reader
        ]


def write_summary(path, records: list[RunRecord]) -> None:
    with open(path, "w") as fh:
        json.dump(summarize(records), fh, indent=2)
        fh.write("\n")


# Growth models are parameterized by the half-length m = n/2 (the number
# of 1s), the variable in which the cubic worst-case constant is ~0.17:
# a length-2m block word needs ~0.17 m^3 flips.
MODEL_PREDICTORS = {
    "cubic": lambda n: (n / 2.0) ** 3,
    "n52log": lambda n: (n / 2.0) ** 2.5 * math.log(n / 2.0),
}


@dataclass(frozen=True)
class ScalingFit:
    """Least-squares fit of mean T against one predictor, through the origin.

    ``residual`` is the root-mean-square relative misfit across lengths;
    ``loglog_slope`` is an independent check of the growth exponent.
    """

    model: str
    c: float
    points: tuple[tuple[int, float], ...]
    residual: float
    loglog_slope: float


def mean_points(records: list[RunRecord]) -> list[tuple[int, float]]:
    return [(row["n"], row["mean_T"]) for row in summarize(records)]


def fit_scaling(records: list[RunRecord], model: str) -> ScalingFit:
    """Fit mean T = c * predictor(n) over the distinct lengths present."""
    if model not in MODEL_PREDICTORS:
        raise ValueError(f"unknown model {model!r}; have {sorted(MODEL_PREDICTORS)}")
    points = mean_points(records)
    if len(points) < 3:
        raise ValueError(f"need at least 3 distinct lengths, got {len(points)}")
    if any(mean <= 0 for _, mean in points):
        raise ValueError("all mean step counts must be positive to fit")
    predictor = MODEL_PREDICTORS[model]
    x = np.array([predictor(n) for n, _ in points])
    y = np.array([mean for _, mean in points])
    c = float(x @ y / (x @ x))
    residual = float(np.sqrt(np.mean(((y - c * x) / y) ** 2)))
    ns = np.array([n for n, _ in points], dtype=float)
    slope = float(np.polyfit(np.log(ns), np.log(y), 1)[0])
    return ScalingFit(model, c, tuple(points), residual, slope)
