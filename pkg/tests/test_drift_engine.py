"""Drift engine: enumeration, closed forms, Monte Carlo, witness search."""

import math

import numpy as np
import pytest
from scipy import stats

from driftlab.drift_engine import (
    DriftFunction,
    Method,
    PointDistribution,
    Setting,
    Transform,
    binval_unit_log_lower_term,
    counterexample_search,
    drift_binval_unit,
    drift_distribution,
    drift_enum,
    drift_mc,
    drift_onemax_unit,
    log_lower_terms,
)
from driftlab.certificates import multiplicative_lower_profile
from driftlab.linear_models import (
    BitString,
    Kind,
    MutationParams,
    make_binval,
    make_generic,
    make_onemax,
)


# ---------------------------------------------------------------------------
# profile and distribution types

def test_drift_function_validation():
    with pytest.raises(ValueError):
        DriftFunction(())
    with pytest.raises(ValueError):
        DriftFunction((2.0, 3.0))
    with pytest.raises(ValueError):
        DriftFunction((1.0, 2.0, 1.5))
    g = DriftFunction.ones(4)
    assert g.n == 4 and g.transform is Transform.IDENTITY
    assert DriftFunction.ones(4, Transform.LOG1P).transform is Transform.LOG1P


def test_random_monotone_profiles_are_valid():
    for seed in range(20):
        rng = np.random.default_rng(seed)
        g = DriftFunction.random_monotone(7, rng)
        assert g.weights[0] == 1.0
        assert all(a <= b for a, b in zip(g.weights, g.weights[1:]))
        assert g.n == 7


def test_drift_function_values():
    g = DriftFunction((1.0, 2.0, 4.0), Transform.LOG1P)
    x = BitString.from_string("101")
    assert g.value(x) == 5.0
    assert g.transformed_value(x) == math.log1p(5.0)
    with pytest.raises(ValueError):
        g.value(BitString.zeros(2))


def test_point_distribution_validation():
    e1, e2 = BitString.unit(3, 1), BitString.unit(3, 2)
    with pytest.raises(ValueError):
        PointDistribution(())
    with pytest.raises(ValueError):
        PointDistribution(((e1, 0.5), (e2, 0.6)))
    with pytest.raises(ValueError):
        PointDistribution(((e1, 1.0), (e2, 0.0)))
    with pytest.raises(ValueError):
        PointDistribution(((e1, 0.5), (BitString.unit(4, 1), 0.5)))
    PointDistribution(((e1, 0.5), (e2, 0.5)))


def test_uniform_units_zero_probabilities_nondecreasing():
    """D_k has Pr[x_i = 0] = 1 - 1/k up to position k, then 1."""
    d = PointDistribution.uniform_units(8, 5)
    probs = d.zero_probabilities()
    for i, pr in enumerate(probs, start=1):
        expected = 1.0 - 1.0 / 5 if i <= 5 else 1.0
        assert abs(pr - expected) < 1e-12
    assert all(a <= b + 1e-12 for a, b in zip(probs, probs[1:]))
    assert d.is_unit_support()
    mixed = PointDistribution(((BitString.from_string("011"), 1.0),))
    assert not mixed.is_unit_support()
    with pytest.raises(ValueError):
        PointDistribution.uniform_units(4, 5)


# ---------------------------------------------------------------------------
# exact enumeration

def _brute_drift(g: DriftFunction, f, x: BitString, params: MutationParams):
    """Independent mask-loop oracle using exact function evaluation."""
    n, p = params.n, params.p

    def hval(v: int) -> float:
        s = math.fsum(w for j, w in enumerate(g.weights) if (v >> j) & 1)
        return math.log1p(s) if g.transform is Transform.LOG1P else s

    hx = hval(x.value)
    fx = f.evaluate(x)
    parts = []
    for y in range(1 << n):
        if f.evaluate(BitString(n, y)) <= fx:
            k = bin(y ^ x.value).count("1")
            parts.append(p**k * (1.0 - p) ** (n - k) * (hx - hval(y)))
    return math.fsum(parts)


def _dyadic_monotone(n: int, rng) -> tuple:
    """Nondecreasing weights on a 1/64 grid; sums are exact in binary."""
    steps = rng.integers(0, 65, size=n - 1) / 64.0
    return tuple(np.concatenate(([1.0], 1.0 + np.cumsum(steps))).tolist())


def test_drift_enum_hand_enumeration_quarter():
    # n=2, c=1: of the four masks only Y=e_1 is accepted with a change,
    # weight (1/2)^2, change 1
    r = drift_enum(DriftFunction.ones(2), make_onemax(2),
                   BitString.unit(2, 1), MutationParams(2, 1.0))
    assert r.value == 0.25
    assert r.method is Method.ENUM


def test_drift_enum_zero_at_optimum():
    n = 6
    for f in (make_onemax(n), make_binval(n),
              make_generic([0.5, 1.0, 1.5, 2.0, 2.5, 3.0])):
        r = drift_enum(DriftFunction.ones(n), f, BitString.zeros(n),
                       MutationParams(n, 2.0))
        assert r.value == 0.0


def test_drift_enum_self_drift_nonnegative():
    n = 5
    rng = np.random.default_rng(3)
    w = _dyadic_monotone(n, rng)
    f = make_generic(w)
    g = DriftFunction(w)
    params = MutationParams(n, 2.0)
    for xv in range(1 << n):
        assert drift_enum(g, f, BitString(n, xv), params).value >= 0.0


def test_drift_enum_matches_bruteforce_oracle():
    rng = np.random.default_rng(11)
    for n in (1, 2, 3, 4, 5, 6):
        w = _dyadic_monotone(n, rng)
        fs = [make_onemax(n), make_binval(n), make_generic(w)]
        for c in (0.5, 1.0, min(2.2, n), float(n)):
            params = MutationParams(n, c)
            for transform in Transform:
                g = DriftFunction(w, transform)
                for _ in range(3):
                    x = BitString(n, int(rng.integers(0, 1 << n)))
                    for f in fs:
                        got = drift_enum(g, f, x, params).value
                        want = _brute_drift(g, f, x, params)
                        assert abs(got - want) < 1e-12


def test_drift_enum_input_validation():
    with pytest.raises(ValueError):
        drift_enum(DriftFunction.ones(21), make_onemax(21),
                   BitString.zeros(21), MutationParams(21, 1.0))
    with pytest.raises(ValueError):
        drift_enum(DriftFunction.ones(3), make_onemax(4),
                   BitString.zeros(4), MutationParams(4, 1.0))


# ---------------------------------------------------------------------------
# closed forms

def test_binval_unit_first_position():
    params = MutationParams(12, 1.0)
    p = params.p
    r = drift_binval_unit(DriftFunction.ones(12), 1, params)
    assert abs(r.value - p * (1 - p) ** 11) < 1e-15
    labels = [t.label for t in r.terms]
    assert labels == ["no_flip", "flip_i_no_higher"]


def test_binval_unit_negative_spot_value():
    # g=1, n=100, c=4, i=100: p(1 - 99p) = 0.04 * (1 - 3.96) = -0.1184
    r = drift_binval_unit(DriftFunction.ones(100), 100, MutationParams(100, 4.0))
    assert abs(r.value - (-0.1184)) < 1e-12


def test_binval_unit_rejects_bad_inputs():
    g = DriftFunction.ones(5, Transform.LOG1P)
    with pytest.raises(ValueError):
        drift_binval_unit(g, 1, MutationParams(5, 1.0))
    with pytest.raises(ValueError):
        drift_binval_unit(DriftFunction.ones(5), 0, MutationParams(5, 1.0))
    with pytest.raises(ValueError):
        drift_binval_unit(DriftFunction.ones(5), 6, MutationParams(5, 1.0))


def test_log_lower_term_base_cases():
    params = MutationParams(10, 2.0)
    assert binval_unit_log_lower_term(1, params) == 0.0
    # i=2 has the single term j=1: p * ln 2
    got = binval_unit_log_lower_term(2, params)
    assert abs(got - params.p * math.log(2.0)) < 1e-15
    # p=1 collapses to ln(i): all i-1 low bits flip surely
    assert abs(binval_unit_log_lower_term(7, MutationParams(7, 7.0))
               - math.log(7.0)) < 1e-12


@pytest.mark.parametrize("i,n,c", [
    (2, 100, 4.0), (5, 100, 4.0), (17, 100, 4.0), (50, 100, 4.0),
    (100, 1000, 2.0), (400, 1000, 2.0), (501, 1000, 2.0), (777, 1000, 4.0),
])
def test_log_lower_term_matches_scipy(i, n, c):
    """E[ln(1 + Binomial(i-1, p))] via scipy pmf as an independent oracle."""
    params = MutationParams(n, c)
    ks = np.arange(i)
    want = float(stats.binom.pmf(ks, i - 1, params.p) @ np.log1p(ks))
    assert abs(binval_unit_log_lower_term(i, params) - want) < 1e-12


def test_log_lower_terms_vector_matches_per_index():
    params = MutationParams(100, 4.0)
    vec = log_lower_terms(100, params)
    assert vec.shape == (100,)
    for i in (1, 2, 3, 50, 99, 100):
        assert abs(vec[i - 1] - binval_unit_log_lower_term(i, params)) < 1e-12
    # the sliding-pmf path with truncation, against the direct per-i sums
    params = MutationParams(3000, 3.0)
    vec = log_lower_terms(3000, params)
    for i in (1, 2, 500, 501, 2999, 3000):
        assert abs(vec[i - 1] - binval_unit_log_lower_term(i, params)) < 1e-12


def test_onemax_unit_constant_profile():
    params = MutationParams(9, 2.0)
    p = params.p
    for i in range(1, 10):
        r = drift_onemax_unit(DriftFunction.ones(9), params, i)
        # swaps exchange equal weights, only the lone flip contributes
        assert abs(r.value - p * (1 - p) ** 8) < 1e-15
    labels = [t.label for t in r.terms]
    assert labels == ["no_flip", "flip_i_only", "swap_i_with_other"]


def test_onemax_unit_matches_displayed_first_position_form():
    rng = np.random.default_rng(5)
    for n in (2, 5, 9):
        w = _dyadic_monotone(n, rng)
        for c in (1.0, 2.0):
            params = MutationParams(n, c)
            p = params.p
            for transform in Transform:
                g = DriftFunction(w, transform)
                h = [math.log1p(v) if transform is Transform.LOG1P else v
                     for v in w]
                want = (1 - p) ** (n - 2) * p * (
                    (1 - p) * h[0] + p * math.fsum(h[0] - h[j] for j in range(1, n))
                )
                got = drift_onemax_unit(g, params).value
                assert abs(got - want) < 1e-14


def test_onemax_unit_sign_flips_past_weight_sum_cap():
    # sum g_j > (1 + np - p)/p forces negative drift at e_1
    params = MutationParams(10, 1.0)
    cap = (1 + 10 * 0.1 - 0.1) / 0.1
    g = DriftFunction((1.0,) + (3.0,) * 9)
    assert sum(g.weights) > cap
    assert drift_onemax_unit(g, params).value < 0.0
    assert drift_onemax_unit(DriftFunction.ones(10), params).value > 0.0


# ---------------------------------------------------------------------------
# distributions

def test_distribution_d1_onemax_equals_unit_closed_form():
    params = MutationParams(30, 2.0)
    g = DriftFunction((1.0,) * 10 + (2.0,) * 20, Transform.LOG1P)
    d1 = PointDistribution.uniform_units(30, 1)
    got = drift_distribution(g, make_onemax(30), d1, params)
    assert got.method is Method.CLOSED_FORM
    assert abs(got.value - drift_onemax_unit(g, params, 1).value) < 1e-15


def test_distribution_dk_binval_is_mean_of_units():
    params = MutationParams(50, 4.0)
    g = multiplicative_lower_profile(50, 4.0)
    for k in (1, 5, 50):
        d = PointDistribution.uniform_units(50, k)
        got = drift_distribution(g, make_binval(50), d, params).value
        want = math.fsum(
            drift_binval_unit(g, i, params).value for i in range(1, k + 1)
        ) / k
        assert abs(got - want) < 1e-15


def test_distribution_enum_fallback():
    n = 6
    params = MutationParams(n, 1.0)
    g = DriftFunction.ones(n, Transform.LOG1P)
    f = make_binval(n)
    support = ((BitString.from_string("010110"), 0.25),
               (BitString.unit(n, 3), 0.75))
    d = PointDistribution(support)
    got = drift_distribution(g, f, d, params)
    assert got.method is Method.ENUM
    want = math.fsum(pr * drift_enum(g, f, x, params).value for x, pr in support)
    assert abs(got.value - want) < 1e-15


def test_distribution_rejects_unsupported_combination():
    n = 25
    params = MutationParams(n, 1.0)
    two_ones = BitString(n, 0b11)
    d = PointDistribution(((two_ones, 1.0),))
    with pytest.raises(ValueError):
        drift_distribution(DriftFunction.ones(n), make_onemax(n), d, params)
    with pytest.raises(ValueError):
        drift_distribution(DriftFunction.ones(4), make_onemax(5),
                           PointDistribution.uniform_units(5, 2),
                           MutationParams(5, 1.0))


# ---------------------------------------------------------------------------
# Monte Carlo

def test_drift_mc_agrees_with_enum():
    n = 12
    params = MutationParams(n, 2.0)
    rng = np.random.default_rng(2)
    configs = [
        (DriftFunction.ones(n, Transform.LOG1P), make_binval(n)),
        (DriftFunction(_dyadic_monotone(n, rng)), make_onemax(n)),
        (DriftFunction(_dyadic_monotone(n, rng), Transform.LOG1P),
         make_generic(_dyadic_monotone(n, rng))),
    ]
    for seed, (g, f) in enumerate(configs):
        x = BitString(n, int(rng.integers(1, 1 << n)))
        exact = drift_enum(g, f, x, params).value
        est = drift_mc(g, f, x, params, samples=60_000, seed=seed)
        assert est.method is Method.MONTE_CARLO
        assert abs(est.value - exact) <= 4.0 * est.stderr


def test_drift_mc_zero_variance_at_optimum():
    n = 10
    r = drift_mc(DriftFunction.ones(n), make_onemax(n), BitString.zeros(n),
                 MutationParams(n, 1.0), samples=5000, seed=0)
    assert r.value == 0.0 and r.stderr == 0.0


def test_drift_mc_edge_samples():
    n = 4
    g, f = DriftFunction.ones(n), make_onemax(n)
    params = MutationParams(n, 1.0)
    one = drift_mc(g, f, BitString.ones(n), params, samples=1, seed=9)
    assert math.isnan(one.stderr)
    with pytest.raises(ValueError):
        drift_mc(g, f, BitString.ones(n), params, samples=0, seed=9)
    a = drift_mc(g, f, BitString.ones(n), params, samples=2000, seed=4)
    b = drift_mc(g, f, BitString.ones(n), params, samples=2000, seed=4)
    assert a == b


# ---------------------------------------------------------------------------
# witness search

def test_search_finds_large_index_binval_witness():
    w = counterexample_search(DriftFunction.ones(100), MutationParams(100, 4.0),
                              Setting.MULTIPLICATIVE)
    assert w is not None and w.exact
    assert w.f_kind is Kind.BINVAL
    assert w.point == "e_100" and w.index == 100
    assert abs(w.value - (-0.1184)) < 1e-12


def test_search_may_return_none_at_small_rates():
    assert counterexample_search(DriftFunction.ones(6), MutationParams(6, 0.5),
                                 Setting.MULTIPLICATIVE) is None
    assert counterexample_search(DriftFunction.ones(6), MutationParams(6, 0.5),
                                 Setting.ADDITIVE) is None


def test_search_on_minimal_profile_hits_onemax_first_unit():
    n, c = 10**4, 2.5
    g = multiplicative_lower_profile(n, c)
    w = counterexample_search(g, MutationParams(n, c), Setting.MULTIPLICATIVE)
    assert w is not None
    assert w.f_kind is Kind.ONEMAX and w.point == "e_1"
    assert w.value < 0.0 and w.exact


def test_search_additive_bound_is_sound():
    """The additive witness value upper-bounds the true log-scale drift."""
    n = 10
    params = MutationParams(n, 2.0)
    rng = np.random.default_rng(8)
    g = DriftFunction(_dyadic_monotone(n, rng), Transform.LOG1P)
    terms = log_lower_terms(n, params)
    f = make_binval(n)
    p = params.p
    for i in range(1, n + 1):
        bound = (p * (1 - p) ** (n - i)
                 * (math.log1p(g.weights[i - 1]) - terms[i - 1]))
        exact = drift_enum(g, f, BitString.unit(n, i), params).value
        assert exact <= bound + 1e-12


def test_search_additive_witness_on_flat_profile():
    w = counterexample_search(DriftFunction.ones(100), MutationParams(100, 4.0),
                              Setting.ADDITIVE)
    assert w is not None and not w.exact
    assert w.f_kind is Kind.BINVAL and w.point.startswith("e_")
    assert w.value < 0.0


def test_search_distribution_witness_is_a_mixture():
    w = counterexample_search(DriftFunction.ones(200), MutationParams(200, 4.0),
                              Setting.DISTRIBUTION)
    assert w is not None
    assert w.f_kind is Kind.BINVAL and w.point.startswith("D_")
    assert w.value < 0.0


def test_search_validates_profile_length():
    with pytest.raises(ValueError):
        counterexample_search(DriftFunction.ones(5), MutationParams(6, 1.0),
                              Setting.MULTIPLICATIVE)
