"""The (1+1) evolutionary algorithm with mutation rate p = c/n, minimizing.

Each iteration flips every bit independently with probability p and keeps
the offspring iff its function value is less than or equal to the parent's
(strictly less under ``strict``).  The optimum is the all-zero string.

Randomness comes from counter-based Philox streams.  A batch derives the
stream for run ``r`` from ``(master_seed, r)`` alone, so results do not
depend on scheduling or on how work is divided among threads.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .linear_models import BitString, Kind, LinearFunction, MutationParams

__all__ = [
    "RunResult",
    "RunStats",
    "BitZeroEstimates",
    "accepts",
    "batch_runs",
    "batch_runtime",
    "bit_zero_probabilities",
    "default_cap",
    "mutate",
    "run",
    "step",
    "substream",
    "uniform_start",
]

# Fixed block width for the vectorized occupancy estimator; part of the
# deterministic contract (block index selects the RNG substream).
_BLOCK = 4096

_Z95 = 1.959963984540054


def substream(master_seed: int, index: int) -> np.random.Generator:
    """Independent generator for unit-of-work ``index`` under a master seed."""
    ss = np.random.SeedSequence(master_seed, spawn_key=(index,))
    return np.random.Generator(np.random.Philox(ss))


def default_cap(n: int) -> int:
    """Iteration budget: max(10^6, ceil(50 n ln n))."""
    return max(10**6, math.ceil(50 * n * math.log(n))) if n > 1 else 10**6


def uniform_start(n: int, rng: np.random.Generator) -> BitString:
    bits = rng.integers(0, 2, size=n, dtype=np.uint8)
    return BitString(n, _pack(bits.astype(bool)))


def _pack(flips: np.ndarray) -> int:
    """Bool vector (position order) -> integer mask."""
    return int.from_bytes(np.packbits(flips, bitorder="little").tobytes(), "little")


def mutate(x: BitString, params: MutationParams, rng: np.random.Generator) -> BitString:
    """Flip each bit independently with probability p; one draw of n uniforms."""
    flips = rng.random(x.n) < params.p
    return BitString(x.n, x.value ^ _pack(flips))


def _accept_mask(f: LinearFunction, x_value: int, mask: int, strict: bool) -> bool:
    """Acceptance decision for the offspring x XOR mask, on integer masks."""
    if mask == 0:
        return not strict
    if f.kind is Kind.ONEMAX:
        lost = (mask & x_value).bit_count()
        gained = mask.bit_count() - lost
        return gained < lost if strict else gained <= lost
    if f.kind is Kind.BINVAL:
        # the highest flipped position decides; accept iff it goes 1 -> 0
        return bool((x_value >> (mask.bit_length() - 1)) & 1)
    diff = math.fsum(
        w if not (x_value >> j) & 1 else -w
        for j, w in enumerate(f.weights)
        if (mask >> j) & 1
    )
    return diff < 0 if strict else diff <= 0


def accepts(f: LinearFunction, y: BitString, x: BitString, strict: bool = False) -> bool:
    """Would the algorithm replace parent x by offspring y?"""
    f._check_arg(y)
    f._check_arg(x)
    return _accept_mask(f, x.value, x.value ^ y.value, strict)


def step(
    x: BitString,
    f: LinearFunction,
    params: MutationParams,
    rng: np.random.Generator,
    strict: bool = False,
) -> BitString:
    """One iteration: mutate, then select.  Consumes exactly one draw."""
    y = mutate(x, params, rng)
    return y if accepts(f, y, x, strict) else x


@dataclass(frozen=True, slots=True)
class RunResult:
    """Outcome of a single run.

    ``iterations`` counts iterations until the all-zero string is first
    selected (0 if the start is already optimal); a censored run stopped at
    the cap without reaching it.  ``trajectory``, when recorded, holds
    (t, number of ones) at t=0 and at every change of that count.
    """

    iterations: int
    censored: bool
    seed: int
    trajectory: Optional[tuple[tuple[int, int], ...]] = None


@dataclass(frozen=True, slots=True)
class RunStats:
    """Aggregate over a batch.  Censored runs are counted, never averaged."""

    reps: int
    mean_T: float
    std_T: float
    ci95_halfwidth: float
    censored_count: int

    def to_json_dict(self, f: LinearFunction, params: MutationParams) -> dict:
        none_if_nan = lambda v: None if math.isnan(v) else v
        return {
            "n": params.n,
            "c": params.c,
            "f_kind": f.kind.value,
            "reps": self.reps,
            "mean_T": none_if_nan(self.mean_T),
            "std_T": none_if_nan(self.std_T),
            "ci95": none_if_nan(self.ci95_halfwidth),
            "censored": self.censored_count,
        }


def run(
    f: LinearFunction,
    params: MutationParams,
    seed: int | np.random.SeedSequence,
    cap: Optional[int] = None,
    strict: bool = False,
    start: Optional[BitString] = None,
    record_trajectory: bool = False,
) -> RunResult:
    """Run to the optimum or to the iteration cap.

    ``start`` overrides the uniform random initial point.  The result is a
    pure function of (f, params, seed, cap, strict, start).
    """
    if f.n != params.n:
        raise ValueError(f"function n={f.n} does not match params n={params.n}")
    if not f.is_monotone:
        raise ValueError("run requires monotone weights")
    if cap is None:
        cap = default_cap(params.n)
    if cap <= 0:
        raise ValueError(f"cap must be positive, got {cap}")

    if start is not None and start.n != params.n:
        raise ValueError(f"start length {start.n} does not match n={params.n}")

    ss = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    seed_id = int(ss.generate_state(1, dtype=np.uint64)[0])
    rng = np.random.Generator(np.random.Philox(ss))

    n, p = params.n, params.p
    x = start.value if start is not None else uniform_start(n, rng).value

    traj: Optional[list[tuple[int, int]]] = None
    if record_trajectory:
        traj = [(0, x.bit_count())]

    t = 0
    while x != 0 and t < cap:
        mask = _pack(rng.random(n) < p)
        if mask and _accept_mask(f, x, mask, strict):
            x ^= mask
            if traj is not None and traj[-1][1] != x.bit_count():
                traj.append((t + 1, x.bit_count()))
        t += 1

    return RunResult(
        iterations=t,
        censored=x != 0,
        seed=seed_id,
        trajectory=tuple(traj) if traj is not None else None,
    )


def batch_runs(
    f: LinearFunction,
    params: MutationParams,
    reps: int,
    master_seed: int,
    cap: Optional[int] = None,
    strict: bool = False,
    threads: int = 1,
    record_trajectory: bool = False,
) -> list[RunResult]:
    """Independent runs r = 0..reps-1, each on its (master_seed, r) stream."""
    if reps < 1:
        raise ValueError(f"reps must be >= 1, got {reps}")

    def one(r: int) -> RunResult:
        ss = np.random.SeedSequence(master_seed, spawn_key=(r,))
        return run(f, params, ss, cap=cap, strict=strict,
                   record_trajectory=record_trajectory)

    if threads <= 1:
        return [one(r) for r in range(reps)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(one, range(reps)))


def batch_runtime(
    f: LinearFunction,
    params: MutationParams,
    reps: int,
    master_seed: int,
    cap: Optional[int] = None,
    strict: bool = False,
    threads: int = 1,
) -> RunStats:
    """Mean/std/CI of the hitting time over the uncensored runs of a batch."""
    results = batch_runs(f, params, reps, master_seed, cap=cap, strict=strict,
                         threads=threads)
    return summarize_runs(results)


def summarize_runs(results: list[RunResult]) -> RunStats:
    times = [r.iterations for r in results if not r.censored]
    censored = len(results) - len(times)
    if not times:
        nan = float("nan")
        return RunStats(len(results), nan, nan, nan, censored)
    m = len(times)
    mean = sum(times) / m
    std = math.sqrt(sum((t - mean) ** 2 for t in times) / (m - 1)) if m > 1 else 0.0
    return RunStats(len(results), mean, std, _Z95 * std / math.sqrt(m), censored)


@dataclass(frozen=True, slots=True)
class BitZeroEstimates:
    """Per-position estimates of Pr[bit is 0] after t iterations."""

    t: int
    reps: int
    probabilities: tuple[float, ...]
    stderr: tuple[float, ...]


def bit_zero_probabilities(
    f: LinearFunction,
    params: MutationParams,
    t: int,
    reps: int,
    master_seed: int,
) -> BitZeroEstimates:
    """Monte Carlo estimate of Pr[x_i^(t) = 0] for every position i.

    Runs advance in fixed-size blocks, vectorized across the block; block b
    owns the (master_seed, b) stream, so the estimate is independent of how
    blocks would be scheduled.
    """
    if f.n != params.n:
        raise ValueError(f"function n={f.n} does not match params n={params.n}")
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    if reps < 1:
        raise ValueError(f"reps must be >= 1, got {reps}")

    n, p = params.n, params.p
    accept_rows = _row_acceptor(f)
    zero_counts = np.zeros(n, dtype=np.int64)

    for b, lo in enumerate(range(0, reps, _BLOCK)):
        size = min(_BLOCK, reps - lo)
        rng = substream(master_seed, b)
        x = rng.integers(0, 2, size=(size, n), dtype=np.uint8).astype(bool)
        for _ in range(t):
            flips = rng.random((size, n)) < p
            y = x ^ flips
            acc = accept_rows(x, y, flips)
            x = np.where(acc[:, None], y, x)
        zero_counts += (~x).sum(axis=0)

    phat = zero_counts / reps
    stderr = np.sqrt(phat * (1.0 - phat) / reps)
    return BitZeroEstimates(t, reps, tuple(phat.tolist()), tuple(stderr.tolist()))


def _row_acceptor(f: LinearFunction) -> Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]:
    """Vectorized weak-acceptance predicate over rows of bool matrices."""
    if f.kind is Kind.ONEMAX:
        return lambda x, y, flips: y.sum(axis=1) <= x.sum(axis=1)
    if f.kind is Kind.BINVAL:
        def acc(x: np.ndarray, y: np.ndarray, flips: np.ndarray) -> np.ndarray:
            touched = flips.any(axis=1)
            # column index of the highest flipped position per row
            hi = flips.shape[1] - 1 - np.argmax(flips[:, ::-1], axis=1)
            rows = np.arange(flips.shape[0])
            return ~touched | x[rows, hi]
        return acc
    w = np.asarray(f.weights, dtype=np.float64)
    return lambda x, y, flips: y @ w <= x @ w
