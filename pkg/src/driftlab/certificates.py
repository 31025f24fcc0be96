"""Non-existence certificates for universal linear drift functions.

Each certificate evaluates, for a concrete (n, c), a chain of inequalities
that any universal monotone weight profile would have to satisfy, and
reports whether the chain's lower bound strictly exceeds its upper bound.
A true verdict means no such profile can exist at that (n, c); the verdict
is data, and a false verdict makes no claim either way.

Three settings are covered: drift of g itself at unit vectors
(multiplicative), drift of ln(1+g) (additive), and drift averaged over
uniform unit-vector mixtures (distribution).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .drift_engine import DriftFunction, Setting, Transform, log_lower_terms
from .linear_models import MutationParams

__all__ = [
    "Certificate",
    "STRICT_MARGIN",
    "ScanResult",
    "certify",
    "certify_additive",
    "certify_distribution",
    "certify_multiplicative",
    "distribution_lower_recursion",
    "distribution_profile_bound",
    "multiplicative_limit_margin",
    "multiplicative_lower_profile",
    "s_threshold",
    "scan_threshold",
]

# Verdicts require lower > upper + this margin, so floating-point noise can
# never flip a tight comparison to a false positive.
STRICT_MARGIN = 1e-9


@dataclass(frozen=True, slots=True)
class Certificate:
    """Outcome of one bound-chain evaluation at a fixed (n, c).

    ``verdict`` is true iff ``lower_bound_value`` exceeds
    ``upper_bound_value`` by more than the strictness margin (and, for the
    distribution setting, both case branches do).  ``auxiliary`` holds every
    intermediate quantity needed to recheck the chain by hand.
    """

    setting: Setting
    n: int
    c: float
    lower_bound_value: float
    upper_bound_value: float
    verdict: bool
    auxiliary: dict = field(default_factory=dict)
    reason: Optional[str] = None

    def to_json_dict(self) -> dict:
        return {
            "setting": self.setting.value,
            "n": self.n,
            "c": self.c,
            "lower_bound_value": self.lower_bound_value,
            "upper_bound_value": self.upper_bound_value,
            "verdict": self.verdict,
            "auxiliary": dict(self.auxiliary),
            "reason": self.reason,
        }


def _validate(n: int, c: float) -> MutationParams:
    return MutationParams(n, c)


def _ceil_snap(x: float) -> int:
    """Ceiling that forgives float noise just below an integer."""
    r = round(x)
    if abs(x - r) <= 1e-9 * max(1.0, abs(x)):
        return int(r)
    return math.ceil(x)


def _pow1p(a: float, m: int) -> float:
    """(1+a)^m, stable for large m."""
    if m == 0:
        return 1.0
    return math.exp(m * math.log1p(a)) if abs(m) > 64 else (1.0 + a) ** m


def multiplicative_lower_profile(n: int, c: float) -> DriftFunction:
    """The minimal weight profile any universal g must dominate (identity scale).

    Flat at 1 through k = ceil(n/c), then forced geometric growth:
    position k+l carries at least (1+c/n)^(l-1).
    """
    params = _validate(n, c)
    if c <= 1:
        raise ValueError(f"the growth floor requires c > 1, got c={c}")
    k = _ceil_snap(n / c)
    p = params.p
    w = np.ones(n)
    grow = np.arange(n - k) * math.log1p(p)
    w[k:] = np.exp(grow)
    return DriftFunction(tuple(w.tolist()), Transform.IDENTITY)


def multiplicative_limit_margin(c: float) -> float:
    """Large-n limit of the multiplicative chain's margin term: e^(c-1) - c."""
    return math.exp(c - 1.0) - c


def certify_multiplicative(n: int, c: float) -> Certificate:
    """Compare the two weight-sum chains for the identity-scale setting.

    Any universal profile must sum to at most (1 - p + n p)/p (drift at the
    first unit vector against ONEMAX) yet at least k + ((1+p)^(n-k) - 1)/p
    (the geometric floor).  Subtracting the common parts reduces the clash
    to L := (1+p)^(n-k) + p(1-n) > 1, which is what the verdict checks.
    """
    params = _validate(n, c)
    p = params.p
    k = _ceil_snap(n / c)
    growth = _pow1p(p, n - k)
    lower = growth + p * (1.0 - n)
    sum_upper = (1.0 - p + n * p) / p
    sum_lower = k + (growth - 1.0) / p
    return Certificate(
        setting=Setting.MULTIPLICATIVE,
        n=n,
        c=c,
        lower_bound_value=lower,
        upper_bound_value=1.0,
        verdict=lower > 1.0 + STRICT_MARGIN,
        auxiliary={
            "k": k,
            "growth_term": growth,
            "weight_sum_lower": sum_lower,
            "weight_sum_upper": sum_upper,
            "limit_margin": multiplicative_limit_margin(c),
        },
    )


def certify_additive(n: int, c: float) -> Certificate:
    """Compare the log-scale weight-sum chains.

    Summing the per-position floors E[ln(1 + Binomial(i-1, p))] must stay
    below ln(2)(1 + np - p)/p, the log-scale sum cap; a certified (n, c) is
    one where the floor total exceeds the cap.
    """
    params = _validate(n, c)
    p = params.p
    terms = log_lower_terms(n, params)
    lhs = math.fsum(terms)
    rhs_over_ln2 = (1.0 + n * p - p) / p
    rhs = math.log(2.0) * rhs_over_ln2
    return Certificate(
        setting=Setting.ADDITIVE,
        n=n,
        c=c,
        lower_bound_value=lhs,
        upper_bound_value=rhs,
        verdict=lhs > rhs + STRICT_MARGIN,
        auxiliary={"rhs_over_ln2": rhs_over_ln2, "largest_term": float(terms[-1])},
    )


def s_threshold(n: int, c: float) -> int:
    """Smallest positive i with (1-p)^i < 1/2, by guess plus direct check."""
    params = _validate(n, c)
    p = params.p
    if p == 1.0:
        return 1
    q = 1.0 - p
    guess = max(1, math.floor(math.log(0.5) / math.log1p(-p)) - 2)
    i = guess
    while q**i >= 0.5:
        i += 1
    while i > 1 and q ** (i - 1) < 0.5:
        i -= 1
    return i


def distribution_lower_recursion(n: int, c: float, k_max: int) -> np.ndarray:
    """Iterate the mixture-drift recursion b_k = k - s - n/c + b_(k-1)(s+1-2n/c).

    Starts from the floor b_0 = 1 and returns (b_1, ..., b_k_max).  This is
    the raw chain; it is informative where the coefficient s + 1 - 2n/c is
    negative and the previous value is a known upper bound.
    """
    _validate(n, c)
    if c <= 1:
        raise ValueError(f"the recursion requires c > 1, got c={c}")
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    s = s_threshold(n, c)
    coeff = s + 1.0 - 2.0 * n / c
    out = np.empty(k_max)
    prev = 1.0
    for k in range(1, k_max + 1):
        prev = k - s - n / c + prev * coeff
        out[k - 1] = prev
    return out


def distribution_profile_bound(
    weights: Sequence[float], k: int, n: int, c: float
) -> float:
    """Pre-simplification mixture bound at k: sum_{i<k} g_i (1 - 2(1-p)^(k-i)).

    Nonnegative average drift of g over the uniform unit-vector mixtures
    forces g_k to be at least this value.
    """
    params = _validate(n, c)
    if not 1 <= k <= len(weights):
        raise ValueError(f"k={k} out of range 1..{len(weights)}")
    p = params.p
    return math.fsum(
        weights[i - 1] * (1.0 - 2.0 * (1.0 - p) ** (k - i)) for i in range(1, k)
    )


def certify_distribution(n: int, c: float) -> Certificate:
    """Two-branch clash for the mixture setting.

    With l = ceil(6n/c), either g_l < 2, and the recursion pushes g_(l+1)
    up enough that the weight sum reaches (n-1) + n/c + s + 3, or g_l >= 2,
    and the tail alone gives 2n - 6n/c.  Both must beat the mixture-drift
    cap n - 1 + n/c for a certificate.  Small n (l+1 > n) or a nonnegative
    recursion coefficient make the chain inapplicable, never an error.
    """
    _validate(n, c)
    s = s_threshold(n, c)
    ell = _ceil_snap(6.0 * n / c)
    coeff = s + 1.0 - 2.0 * n / c
    upper = n - 1.0 + n / c
    aux = {"s": s, "ell": ell, "recursion_coeff": coeff}

    if ell + 1 > n:
        return Certificate(
            setting=Setting.DISTRIBUTION, n=n, c=c,
            lower_bound_value=float("nan"), upper_bound_value=upper,
            verdict=False, auxiliary=aux,
            reason=f"inapplicable: mixture horizon l+1 = {ell + 1} exceeds n",
        )
    if coeff >= 0.0:
        return Certificate(
            setting=Setting.DISTRIBUTION, n=n, c=c,
            lower_bound_value=float("nan"), upper_bound_value=upper,
            verdict=False, auxiliary=aux,
            reason="inapplicable: recursion coefficient s + 1 - 2n/c is not negative",
        )

    branch1 = (n - 1.0) + n / c + s + 3.0
    branch2 = 2.0 * n - 6.0 * n / c
    aux.update({"branch1_lb": branch1, "branch2_lb": branch2})
    verdict = branch1 > upper + STRICT_MARGIN and branch2 > upper + STRICT_MARGIN
    return Certificate(
        setting=Setting.DISTRIBUTION, n=n, c=c,
        lower_bound_value=min(branch1, branch2), upper_bound_value=upper,
        verdict=verdict, auxiliary=aux,
    )


_CERTIFIERS = {
    Setting.MULTIPLICATIVE: certify_multiplicative,
    Setting.ADDITIVE: certify_additive,
    Setting.DISTRIBUTION: certify_distribution,
}


def certify(setting: Setting, n: int, c: float) -> Certificate:
    return _CERTIFIERS[setting](n, c)


@dataclass(frozen=True, slots=True)
class ScanResult:
    """Grid evaluation of one certificate family over c."""

    setting: Setting
    n: int
    entries: tuple[Certificate, ...]
    flips: tuple[tuple[float, float], ...]
    smallest_certified: Optional[float]

    def to_json_dict(self) -> dict:
        return {
            "setting": self.setting.value,
            "n": self.n,
            "entries": [
                {"c": e.c, "verdict": e.verdict,
                 "lower": e.lower_bound_value, "upper": e.upper_bound_value}
                for e in self.entries
            ],
            "flips": [list(f) for f in self.flips],
            "smallest_certified": self.smallest_certified,
        }


def scan_threshold(
    n: int, setting: Setting, c_lo: float, c_hi: float, step: float
) -> ScanResult:
    """Evaluate the certificate on the grid c_lo, c_lo+step, ..., c_hi.

    No monotonicity in c is assumed: every verdict flip along the grid is
    reported, together with the smallest certified c (if any).
    """
    if not c_lo < c_hi:
        raise ValueError(f"need c_lo < c_hi, got {c_lo} >= {c_hi}")
    if not step > 0:
        raise ValueError(f"step must be positive, got {step}")
    fn = _CERTIFIERS[setting]
    count = int(math.floor((c_hi - c_lo) / step + 1e-9)) + 1
    entries = tuple(fn(n, c_lo + i * step) for i in range(count))
    flips = tuple(
        (a.c, b.c) for a, b in zip(entries, entries[1:]) if a.verdict != b.verdict
    )
    certified = [e.c for e in entries if e.verdict]
    return ScanResult(
        setting=setting,
        n=n,
        entries=entries,
        flips=flips,
        smallest_certified=min(certified) if certified else None,
    )
