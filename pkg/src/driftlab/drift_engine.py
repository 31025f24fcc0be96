"""Exact and Monte Carlo drift computation for the (1+1) EA.

The drift of a weight profile g at a point x, against an objective f, is
the expected one-step decrease of g (or of ln(1+g)) when the offspring is
kept only if f does not increase:

    E[ (h(x) - h(x XOR Y)) * 1{f(x XOR Y) <= f(x)} ],

with Y the random flip mask and h either g itself or ln(1+g).  Small
instances are enumerated exactly over all 2^n masks; special points admit
closed forms; everything else is sampled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .linear_models import BitString, Kind, LinearFunction, MutationParams

__all__ = [
    "ENUM_LIMIT",
    "DriftFunction",
    "DriftReport",
    "Method",
    "PointDistribution",
    "Setting",
    "Term",
    "Transform",
    "Witness",
    "binval_unit_log_lower_term",
    "counterexample_search",
    "drift_binval_unit",
    "drift_distribution",
    "drift_enum",
    "drift_mc",
    "drift_onemax_unit",
    "log_lower_terms",
]

ENUM_LIMIT = 20

_MC_CHUNK = 1 << 16


class Transform(Enum):
    IDENTITY = "identity"
    LOG1P = "log1p"


class Method(Enum):
    ENUM = "enum"
    CLOSED_FORM = "closed_form"
    MONTE_CARLO = "monte_carlo"


class Setting(Enum):
    """Which family of certified statements a profile is measured against."""

    MULTIPLICATIVE = "multiplicative"
    ADDITIVE = "additive"
    DISTRIBUTION = "distribution"


@dataclass(frozen=True, slots=True)
class DriftFunction:
    """A monotone weight profile g with 1 = g_1 <= ... <= g_n.

    ``transform`` selects whether drift statements are about g or ln(1+g).
    """

    weights: tuple[float, ...]
    transform: Transform = Transform.IDENTITY

    def __post_init__(self) -> None:
        if not self.weights:
            raise ValueError("empty weight profile")
        if self.weights[0] != 1.0:
            raise ValueError(f"g_1 must equal 1, got {self.weights[0]}")
        if any(a > b for a, b in zip(self.weights, self.weights[1:])):
            raise ValueError("weights must be nondecreasing")

    @property
    def n(self) -> int:
        return len(self.weights)

    @classmethod
    def ones(cls, n: int, transform: Transform = Transform.IDENTITY) -> "DriftFunction":
        return cls((1.0,) * n, transform)

    @classmethod
    def random_monotone(
        cls,
        n: int,
        rng: np.random.Generator,
        transform: Transform = Transform.IDENTITY,
    ) -> "DriftFunction":
        """Random nondecreasing profile with g_1 = 1; ties appear with
        probability 1/4 per step so equal-weight cases get exercised."""
        steps = rng.random(n - 1) * 2.0
        steps[rng.random(n - 1) < 0.25] = 0.0
        w = np.concatenate(([1.0], 1.0 + np.cumsum(steps)))
        return cls(tuple(w.tolist()), transform)

    def value(self, x: BitString) -> float:
        if x.n != self.n:
            raise ValueError(f"argument length {x.n} does not match n={self.n}")
        return math.fsum(w for w, b in zip(self.weights, x.bits) if b)

    def transformed_value(self, x: BitString) -> float:
        v = self.value(x)
        return math.log1p(v) if self.transform is Transform.LOG1P else v


@dataclass(frozen=True, slots=True)
class PointDistribution:
    """A finite distribution over bit strings of a common length."""

    support: tuple[tuple[BitString, float], ...]

    def __post_init__(self) -> None:
        if not self.support:
            raise ValueError("empty support")
        n = self.support[0][0].n
        if any(x.n != n for x, _ in self.support):
            raise ValueError("support points differ in length")
        if any(not (pr > 0) for _, pr in self.support):
            raise ValueError("probabilities must be strictly positive")
        total = math.fsum(pr for _, pr in self.support)
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"probabilities sum to {total}, not 1")

    @property
    def n(self) -> int:
        return self.support[0][0].n

    @classmethod
    def uniform_units(cls, n: int, k: int) -> "PointDistribution":
        """Uniform over the unit vectors at positions 1..k."""
        if not 1 <= k <= n:
            raise ValueError(f"k={k} out of range 1..{n}")
        return cls(tuple((BitString.unit(n, i), 1.0 / k) for i in range(1, k + 1)))

    def zero_probabilities(self) -> tuple[float, ...]:
        """Pr[position i is 0] for i = 1..n."""
        out = []
        for i in range(1, self.n + 1):
            out.append(math.fsum(pr for x, pr in self.support if x.bit(i) == 0))
        return tuple(out)

    def is_unit_support(self) -> bool:
        return all(x.popcount() == 1 for x, _ in self.support)


@dataclass(frozen=True, slots=True)
class Term:
    """One event in a closed-form breakdown."""

    label: str
    probability: float
    conditional_change: float


@dataclass(frozen=True, slots=True)
class DriftReport:
    value: float
    method: Method
    stderr: Optional[float] = None
    terms: Optional[tuple[Term, ...]] = None

    def __post_init__(self) -> None:
        if self.method is Method.MONTE_CARLO and self.stderr is None:
            raise ValueError("Monte Carlo reports require a standard error")

    def to_json_dict(self) -> dict:
        d: dict = {"value": self.value, "method": self.method.value}
        if self.stderr is not None:
            d["stderr"] = self.stderr
        if self.terms is not None:
            d["terms"] = [
                {"event": t.label, "probability": t.probability,
                 "conditional_change": t.conditional_change}
                for t in self.terms
            ]
        return d


def _pow1m(p: float, m: int) -> float:
    """(1-p)^m, stable for large m."""
    if m == 0:
        return 1.0
    if p == 1.0:
        return 0.0
    if m <= 64:
        return (1.0 - p) ** m
    return math.exp(m * math.log1p(-p))


def _h_vector(g: DriftFunction) -> np.ndarray:
    w = np.asarray(g.weights, dtype=np.float64)
    return np.log1p(w) if g.transform is Transform.LOG1P else w


# ---------------------------------------------------------------------------
# exact enumeration

_TABLE_CACHE: dict[int, tuple[np.ndarray, np.ndarray, np.ndarray]] = {}


def _mask_table(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(masks, popcounts, bit matrix) for all 2^n masks; cached per n."""
    cached = _TABLE_CACHE.get(n)
    if cached is not None:
        return cached
    masks = np.arange(1 << n, dtype=np.uint32)
    bits = ((masks[:, None] >> np.arange(n, dtype=np.uint32)) & 1).astype(np.uint8)
    pops = bits.sum(axis=1, dtype=np.uint8)
    _TABLE_CACHE[n] = (masks, pops, bits)
    return masks, pops, bits


def drift_enum(
    g: DriftFunction,
    f: LinearFunction,
    x: BitString,
    params: MutationParams,
    limit: int = ENUM_LIMIT,
) -> DriftReport:
    """Exact drift at x by summation over all 2^n flip masks.

    Every mask contributes weight p^|Y| (1-p)^(n-|Y|); the contributions are
    combined with compensated summation.
    """
    n = params.n
    if n > limit:
        raise ValueError(f"enumeration limited to n <= {limit}, got n={n}")
    if g.n != n or f.n != n or x.n != n:
        raise ValueError("g, f, x and params must share one n")

    masks, pops, bits = _mask_table(n)
    p = params.p
    count_w = np.power(p, np.arange(n + 1.0)) * np.power(1.0 - p, n - np.arange(n + 1.0))

    gv = bits @ np.asarray(g.weights, dtype=np.float64)
    hv = np.log1p(gv) if g.transform is Transform.LOG1P else gv
    h_x = float(hv[x.value])

    if f.kind is Kind.ONEMAX:
        accept = pops <= pops[x.value]
    elif f.kind is Kind.BINVAL:
        accept = masks <= np.uint32(x.value)
    else:
        fv = bits @ np.asarray(f.weights, dtype=np.float64)
        accept = fv <= fv[x.value]

    sel = np.flatnonzero(accept)
    weights = count_w[pops[masks[sel] ^ np.uint32(x.value)]]
    contrib = weights * (h_x - hv[sel])
    return DriftReport(value=math.fsum(contrib), method=Method.ENUM)


# ---------------------------------------------------------------------------
# closed forms at unit vectors

def drift_binval_unit(g: DriftFunction, i: int, params: MutationParams) -> DriftReport:
    """Exact drift at the i-th unit vector against BINVAL (identity scale).

    The only accepted mask families are the empty mask and those flipping
    position i downward with no higher position touched; the latter has
    probability p (1-p)^(n-i) and expected change g_i - p * sum_{j<i} g_j.
    """
    if g.transform is not Transform.IDENTITY:
        raise ValueError("closed form requires the identity transform")
    n = params.n
    if g.n != n:
        raise ValueError(f"profile length {g.n} does not match n={n}")
    if not 1 <= i <= n:
        raise ValueError(f"i={i} out of range 1..{n}")
    p = params.p
    pr = p * _pow1m(p, n - i)
    change = g.weights[i - 1] - p * math.fsum(g.weights[: i - 1])
    terms = (
        Term("no_flip", _pow1m(p, n), 0.0),
        Term("flip_i_no_higher", pr, change),
    )
    return DriftReport(value=pr * change, method=Method.CLOSED_FORM, terms=terms)


def binval_unit_log_lower_term(i: int, params: MutationParams) -> float:
    """Lower-bound term for the log-scale drift at the i-th unit vector.

    Equals E[ln(1 + K)] with K ~ Binomial(i-1, p): conditioned on the
    accepting flip at position i, K lower positions rise from 0 to 1, and
    each carries weight at least 1.  Any profile with nonnegative log-scale
    drift at that point must satisfy ln(1+g_i) >= this value.
    """
    if i < 1:
        raise ValueError(f"i must be >= 1, got {i}")
    p = params.p
    if i == 1:
        return 0.0
    if p == 1.0:
        return math.log(i)
    q = 1.0 - p
    t = q ** (i - 1)
    if t > 0.0 and i <= 500:
        # iterate the term ratio C(i-1,j+1)/C(i-1,j) * p/q
        parts = []
        for j in range(1, i):
            t *= (i - j) / j * (p / q)
            parts.append(t * math.log1p(j))
        return math.fsum(parts)
    # log-space fallback for deep tails
    js = np.arange(1, i, dtype=np.float64)
    log_terms = (
        (i - 1) * math.log1p(-p)
        + np.cumsum(np.log((i - js) / js))
        + js * (math.log(p) - math.log1p(-p))
    )
    return math.fsum(np.exp(log_terms) * np.log1p(js))


def log_lower_terms(n: int, params: MutationParams) -> np.ndarray:
    """Vector of the log-scale lower-bound terms for i = 1..n.

    Maintains the Binomial(i-1, p) mass function incrementally, truncated
    where the tail mass is negligible; the discarded mass is tracked and
    kept below 1e-13 of the largest possible term.
    """
    p = params.p
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    mean = n * p
    sd = math.sqrt(max(n * p * (1.0 - p), 0.0))
    width = min(n, int(math.ceil(mean + 12.0 * sd + 30.0)))
    ln_table = np.log1p(np.arange(width, dtype=np.float64))
    pmf = np.zeros(width, dtype=np.float64)
    pmf[0] = 1.0
    out = np.empty(n, dtype=np.float64)
    for i in range(1, n + 1):
        out[i - 1] = float(pmf @ ln_table)
        if i < n:
            shifted = pmf[:-1] * p
            pmf *= 1.0 - p
            pmf[1:] += shifted
    lost = 1.0 - float(pmf.sum())
    if lost * math.log1p(n) > 1e-13:
        raise AssertionError(f"truncated pmf mass too large: {lost}")
    return out


def drift_onemax_unit(
    g: DriftFunction, params: MutationParams, i: int = 1
) -> DriftReport:
    """Exact drift at the i-th unit vector against ONEMAX, either transform.

    Accepted masks: the empty one, the single flip at i (change h_i), and
    each swap {i, j} (change h_i - h_j).  Everything else raises the number
    of ones and is rejected.
    """
    n = params.n
    if g.n != n:
        raise ValueError(f"profile length {g.n} does not match n={n}")
    if not 1 <= i <= n:
        raise ValueError(f"i={i} out of range 1..{n}")
    p = params.p
    h = _h_vector(g)
    h_i = float(h[i - 1])
    swap_sum = math.fsum(h_i - float(h[j]) for j in range(n) if j != i - 1)
    pr_single = p * _pow1m(p, n - 1)
    pr_swap_each = p * p * _pow1m(p, n - 2) if n >= 2 else 0.0
    value = pr_single * h_i + pr_swap_each * swap_sum
    terms = (
        Term("no_flip", _pow1m(p, n), 0.0),
        Term("flip_i_only", pr_single, h_i),
        Term("swap_i_with_other", (n - 1) * pr_swap_each,
             swap_sum / (n - 1) if n > 1 else 0.0),
    )
    return DriftReport(value=value, method=Method.CLOSED_FORM, terms=terms)


# ---------------------------------------------------------------------------
# distributions

def drift_distribution(
    g: DriftFunction,
    f: LinearFunction,
    d: PointDistribution,
    params: MutationParams,
) -> DriftReport:
    """Drift averaged over a start distribution.

    Unit-vector supports against BINVAL (identity) or ONEMAX use the exact
    closed forms; any other combination enumerates, which requires small n.
    """
    n = params.n
    if g.n != n or f.n != n or d.n != n:
        raise ValueError("g, f, D and params must share one n")

    if d.is_unit_support():
        positions = [(x.value.bit_length(), pr) for x, pr in d.support]
        if f.kind is Kind.ONEMAX:
            parts = [pr * drift_onemax_unit(g, params, i).value for i, pr in positions]
            return DriftReport(value=math.fsum(parts), method=Method.CLOSED_FORM)
        if f.kind is Kind.BINVAL and g.transform is Transform.IDENTITY:
            parts = [pr * drift_binval_unit(g, i, params).value for i, pr in positions]
            return DriftReport(value=math.fsum(parts), method=Method.CLOSED_FORM)
    if n <= ENUM_LIMIT:
        parts = [pr * drift_enum(g, f, x, params).value for x, pr in d.support]
        return DriftReport(value=math.fsum(parts), method=Method.ENUM)
    raise ValueError(
        "no closed form for this combination and n exceeds the enumeration limit"
    )


# ---------------------------------------------------------------------------
# Monte Carlo

def drift_mc(
    g: DriftFunction,
    f: LinearFunction,
    x: BitString,
    params: MutationParams,
    samples: int,
    seed: int,
) -> DriftReport:
    """Sample mean of the one-step change of h at x, with standard error."""
    n = params.n
    if g.n != n or f.n != n or x.n != n:
        raise ValueError("g, f, x and params must share one n")
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")

    p = params.p
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))
    x_bits = np.array(x.bits, dtype=bool)
    gw = np.asarray(g.weights, dtype=np.float64)
    log_scale = g.transform is Transform.LOG1P
    # same dot-product path as the per-sample values, so a no-flip sample
    # yields an exactly zero change
    gx = float(x_bits @ gw)
    h_x = math.log1p(gx) if log_scale else gx
    fw = None if f.kind is not Kind.GENERIC else np.asarray(f.weights, dtype=np.float64)

    total = 0.0
    total_sq = 0.0
    done = 0
    while done < samples:
        m = min(_MC_CHUNK, samples - done)
        flips = rng.random((m, n)) < p
        acc = _accept_rows_fixed_x(f, x_bits, fw, flips)
        gy = (flips ^ x_bits) @ gw
        hy = np.log1p(gy) if log_scale else gy
        delta = np.where(acc, h_x - hy, 0.0)
        total += float(delta.sum())
        total_sq += float((delta * delta).sum())
        done += m

    mean = total / samples
    if samples > 1:
        var = max(total_sq - samples * mean * mean, 0.0) / (samples - 1)
        stderr = math.sqrt(var / samples)
    else:
        stderr = float("nan")
    return DriftReport(value=mean, method=Method.MONTE_CARLO, stderr=stderr)


def _accept_rows_fixed_x(
    f: LinearFunction,
    x_bits: np.ndarray,
    fw: Optional[np.ndarray],
    flips: np.ndarray,
) -> np.ndarray:
    if f.kind is Kind.ONEMAX:
        lost = (flips & x_bits).sum(axis=1)
        gained = flips.sum(axis=1) - lost
        return gained <= lost
    if f.kind is Kind.BINVAL:
        touched = flips.any(axis=1)
        hi = flips.shape[1] - 1 - np.argmax(flips[:, ::-1], axis=1)
        return ~touched | x_bits[hi]
    signs = np.where(x_bits, -1.0, 1.0)
    return (flips * signs) @ fw <= 0.0


# ---------------------------------------------------------------------------
# witness search

@dataclass(frozen=True, slots=True)
class Witness:
    """A start point (or start distribution) where the drift goes negative.

    ``value`` is the exact drift when ``exact`` is set, otherwise a sound
    upper bound on it (so a negative value still certifies negativity).
    """

    setting: Setting
    f_kind: Kind
    point: str
    index: int
    value: float
    exact: bool


def counterexample_search(
    g: DriftFunction, params: MutationParams, setting: Setting
) -> Optional[Witness]:
    """Scan the standard witness family for negative drift under g.

    The family consists of every unit vector against BINVAL, the first unit
    vector against ONEMAX and, in the distribution setting, the uniform
    unit-vector mixtures.  Returns the most negative find, or None.
    """
    n = params.n
    if g.n != n:
        raise ValueError(f"profile length {g.n} does not match n={n}")
    p = params.p
    w = np.asarray(g.weights, dtype=np.float64)
    prefix = np.concatenate(([0.0], np.cumsum(w)[:-1]))
    if p < 1.0:
        decay = np.exp((n - np.arange(1.0, n + 1.0)) * math.log1p(-p))
    else:
        decay = np.zeros(n)
        decay[-1] = 1.0

    candidates: list[Witness] = []
    if setting in (Setting.MULTIPLICATIVE, Setting.DISTRIBUTION):
        unit_vals = p * decay * (w - p * prefix)
        mix_vals = np.cumsum(unit_vals) / np.arange(1.0, n + 1.0)
        if setting is Setting.MULTIPLICATIVE:
            i = int(np.argmin(unit_vals))
            candidates.append(Witness(setting, Kind.BINVAL, f"e_{i + 1}", i + 1,
                                      float(unit_vals[i]), True))
        k = int(np.argmin(mix_vals))
        candidates.append(Witness(setting, Kind.BINVAL, f"D_{k + 1}", k + 1,
                                  float(mix_vals[k]), True))
        onemax_g = DriftFunction(g.weights, Transform.IDENTITY)
    else:
        lw = np.log1p(w)
        bounds = p * decay * (lw - log_lower_terms(n, params))
        i = int(np.argmin(bounds))
        candidates.append(Witness(setting, Kind.BINVAL, f"e_{i + 1}", i + 1,
                                  float(bounds[i]), False))
        onemax_g = DriftFunction(g.weights, Transform.LOG1P)

    candidates.append(Witness(
        setting, Kind.ONEMAX, "e_1", 1,
        drift_onemax_unit(onemax_g, params).value, True,
    ))

    best = min(candidates, key=lambda wit: wit.value)
    return best if best.value < 0.0 else None
