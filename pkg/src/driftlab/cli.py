"""Command-line front end.

Subcommands: simulate, drift, certify, scan, verify-monotone, oracle-check,
predict.  Every output file embeds the tool version, the mathematical
configuration and a content hash, so reruns are verifiable; JSON is the
canonical format and CSV the delimited alternative, with figures rendered
alongside when an output path is given.

Exit code 0 iff the requested computation completed; certificate verdicts
and statistical PASS/FAIL outcomes are data, never exit codes.  Invalid
configuration exits 2.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .certificates import (
    certify,
    multiplicative_lower_profile,
    scan_threshold,
)
from .drift_engine import (
    ENUM_LIMIT,
    DriftFunction,
    Setting,
    Transform,
    drift_binval_unit,
    drift_distribution,
    drift_enum,
    drift_mc,
    drift_onemax_unit,
    PointDistribution,
)
from .ea_sim import (
    batch_runs,
    bit_zero_probabilities,
    default_cap,
    substream,
    summarize_runs,
)
from .linear_models import (
    BitString,
    Kind,
    LinearFunction,
    MutationParams,
    make_binval,
    make_generic,
    make_onemax,
)
from .report import build_payload, canonical_json, write_csv, write_json
from .runtime_bounds import (
    BoundPrediction,
    additive_time_bound,
    multiplicative_time_bound,
    onemax_drift_lower,
)

__all__ = ["main"]

SEED_ENV_VAR = "DRIFTLAB_SEED"

PROFILE_NAMES = ("ones", "geometric", "five-fourths", "log-onemax")

ORACLE_CHECK_CS = (1.0, 2.2, 4.0, 7.0)

DEFAULT_MC_SAMPLES = 1_000_000


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV_VAR, "0")
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}")


# ---------------------------------------------------------------------------
# argument parsing helpers

def parse_function(spec: str, n: int) -> LinearFunction:
    """'onemax', 'binval', or a file of whitespace-separated weights."""
    if spec == "onemax":
        return make_onemax(n)
    if spec == "binval":
        return make_binval(n)
    path = Path(spec[1:] if spec.startswith("@") else spec)
    if path.is_file():
        weights = [float(tok) for tok in path.read_text().split()]
        if len(weights) != n:
            raise ValueError(f"weight file holds {len(weights)} weights, need n={n}")
        return make_generic(weights)
    raise ValueError(
        f"unknown function {spec!r}: expected onemax, binval, or a weight file path"
    )


def parse_profile(
    spec: str, n: int, c: float, transform: Optional[str]
) -> DriftFunction:
    """Named profile or a file of weights, with the transform resolved.

    The named profiles are: 'ones' (all weights 1), 'geometric' (flat then
    geometrically growing floor; needs c > 1), 'five-fourths' (1 on the low
    half, 5/4 above), and 'log-onemax' (all weights 1 on the log scale).
    """
    if spec == "log-onemax":
        if transform == "identity":
            raise ValueError("log-onemax is defined on the log1p scale")
        return DriftFunction.ones(n, Transform.LOG1P)
    tf = Transform(transform) if transform is not None else Transform.IDENTITY
    if spec == "ones":
        return DriftFunction.ones(n, tf)
    if spec == "geometric":
        base = multiplicative_lower_profile(n, c)
        return DriftFunction(base.weights, tf)
    if spec == "five-fourths":
        return DriftFunction(
            tuple(1.0 if j <= n / 2 else 1.25 for j in range(1, n + 1)), tf
        )
    path = Path(spec[1:] if spec.startswith("@") else spec)
    if path.is_file():
        weights = tuple(float(tok) for tok in path.read_text().split())
        if len(weights) != n:
            raise ValueError(f"profile file holds {len(weights)} weights, need n={n}")
        return DriftFunction(weights, tf)
    raise ValueError(
        f"unknown profile {spec!r}: expected one of {', '.join(PROFILE_NAMES)} "
        "or a weight file path"
    )


def parse_point(spec: str, n: int) -> BitString:
    """'e:i' (unit vector), 'zero', 'ones', or a literal 0/1 string."""
    if spec.startswith("e:"):
        try:
            i = int(spec[2:])
        except ValueError:
            raise ValueError(f"bad unit-vector spec {spec!r}: expected e:<index>")
        return BitString.unit(n, i)
    if spec in ("zero", "zeros"):
        return BitString.zeros(n)
    if spec == "ones":
        return BitString.ones(n)
    x = BitString.from_string(spec)
    if x.n != n:
        raise ValueError(f"bit string length {x.n} does not match n={n}")
    return x


def parse_crange(spec: str) -> tuple[float, float, float]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError(f"bad range {spec!r}: expected lo:hi:step")
    lo, hi, step = (float(s) for s in parts)
    return lo, hi, step


# ---------------------------------------------------------------------------
# output plumbing

def _emit(args, subcommand: str, config: dict, result: dict,
          csv_spec=None, figure_fn=None) -> None:
    """Write the payload per --out/--format, or print JSON to stdout."""
    payload = build_payload(subcommand, config, result)
    out = getattr(args, "out", None)
    if out is None:
        print(json.dumps(payload, indent=2, sort_keys=True, default=_json_default))
        return
    base = Path(out)
    if base.suffix in (".json", ".csv", ".png"):
        base = base.with_suffix("")
    if args.format == "csv" and csv_spec is not None:
        schema, columns, rows = csv_spec()
        write_csv(base.with_suffix(".csv"), schema, config, columns, rows)
    else:
        write_json(base.with_suffix(".json"), payload)
    if figure_fn is not None and not args.no_plot:
        figure_fn(base.with_suffix(".png"), config)


def _json_default(obj):
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    raise TypeError(f"not JSON serializable: {obj!r}")


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", default=None, metavar="BASE",
                   help="output base path; writes BASE.json or BASE.csv"
                        " (+ BASE.png where a figure applies)")
    p.add_argument("--format", choices=("json", "csv"), default="json",
                   help="file format for --out (JSON is canonical)")
    p.add_argument("--no-plot", action="store_true",
                   help="skip figure rendering")


def _seed_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=None,
                   help=f"master seed (default: ${SEED_ENV_VAR} or 0)")


def _resolve_seed(args) -> int:
    return args.seed if args.seed is not None else _default_seed()


# ---------------------------------------------------------------------------
# subcommands

def cmd_simulate(args) -> None:
    f = parse_function(args.f, args.n)
    params = MutationParams(args.n, args.c)
    seed = _resolve_seed(args)
    cap = args.cap if args.cap is not None else default_cap(args.n)
    results = batch_runs(
        f, params, args.reps, seed, cap=cap, strict=args.strict,
        threads=args.threads, record_trajectory=args.trajectory,
    )
    stats = summarize_runs(results)
    # --threads is deliberately not part of the config echo: results are
    # scheduling-independent, so the payload must not depend on it
    config = {
        "f": args.f, "n": args.n, "c": args.c, "reps": args.reps,
        "seed": seed, "cap": cap, "strict": args.strict,
        "trajectory": args.trajectory,
    }
    runs = [
        {"iterations": r.iterations, "censored": r.censored, "seed": r.seed}
        for r in results
    ]
    if args.trajectory:
        for d, r in zip(runs, results):
            d["trajectory"] = [list(pair) for pair in r.trajectory]
    result = {"stats": stats.to_json_dict(f, params), "runs": runs}

    def csv_spec():
        if args.trajectory:
            rows = [
                [rep, t, ones]
                for rep, r in enumerate(results)
                for t, ones in r.trajectory
            ]
            return ("trajectory-v1", ["rep", "t", "ones"], rows)
        s = result["stats"]
        row = [s["n"], s["c"], s["f_kind"], s["reps"], s["mean_T"],
               s["std_T"], s["ci95"], s["censored"]]
        return ("runstats-v1",
                ["n", "c", "f_kind", "reps", "mean_T", "std_T", "ci95", "censored"],
                [row])

    figure_fn = None
    if args.trajectory:
        def figure_fn(path, config):
            from .figures import trajectory_figure
            trajs = [r.trajectory for r in results[:12] if r.trajectory]
            trajectory_figure(trajs, config, path)

    _emit(args, "simulate", config, result, csv_spec, figure_fn)


def cmd_drift(args) -> None:
    params = MutationParams(args.n, args.c)
    f = parse_function(args.f, args.n)
    g = parse_profile(args.g, args.n, args.c, args.transform)
    x = parse_point(args.x, args.n)
    seed = _resolve_seed(args)

    # method auto-selection: closed form, else enumeration, else Monte Carlo
    unit_index = x.value.bit_length() if x.popcount() == 1 else None
    samples = args.mc
    if samples is None and unit_index is not None and f.kind is Kind.ONEMAX:
        report = drift_onemax_unit(g, params, unit_index)
    elif (samples is None and unit_index is not None and f.kind is Kind.BINVAL
          and g.transform is Transform.IDENTITY):
        report = drift_binval_unit(g, unit_index, params)
    elif samples is None and args.n <= ENUM_LIMIT:
        report = drift_enum(g, f, x, params)
    else:
        if samples is None:
            samples = DEFAULT_MC_SAMPLES
        report = drift_mc(g, f, x, params, samples=samples, seed=seed)

    mc_used = report.method.value == "monte_carlo"
    config = {
        "g": args.g, "f": args.f, "x": args.x, "n": args.n, "c": args.c,
        "transform": g.transform.value,
        "mc": samples if mc_used else None,
        "seed": seed if mc_used else None,
    }
    result = dict(report.to_json_dict())
    result.update({"f_kind": f.kind.value, "point": str(x), "n": args.n,
                   "c": args.c, "transform": g.transform.value})

    def csv_spec():
        row = [result["f_kind"], args.x, args.n, args.c,
               result["transform"], result["method"],
               result["value"], result.get("stderr")]
        return ("drift-v1",
                ["f_kind", "point", "n", "c", "transform", "method",
                 "value", "stderr"],
                [row])

    _emit(args, "drift", config, result, csv_spec)


def _print_certificate(cert) -> None:
    hdr = f"certificate: {cert.setting.value}  n={cert.n}  c={cert.c}"
    print(hdr)
    aux = cert.auxiliary
    if cert.setting is Setting.MULTIPLICATIVE:
        print(f"  flat prefix length   k = ceil(n/c) = {aux['k']}")
        print(f"  growth term          (1+p)^(n-k) = {aux['growth_term']:.9g}")
        print(f"  weight-sum floor     k + ((1+p)^(n-k) - 1)/p = "
              f"{aux['weight_sum_lower']:.9g}")
        print(f"  weight-sum cap       (1 - p + np)/p = {aux['weight_sum_upper']:.9g}")
        print(f"  reduced clash        (1+p)^(n-k) + p(1-n) = "
              f"{cert.lower_bound_value:.9g}  vs  {cert.upper_bound_value:.9g}")
        print(f"  large-n margin       e^(c-1) - c = {aux['limit_margin']:.9g}")
    elif cert.setting is Setting.ADDITIVE:
        print(f"  log-scale floor sum  sum_i E[ln(1 + Bin(i-1, p))] = "
              f"{cert.lower_bound_value:.9g}")
        print(f"  log-scale cap        ln(2) * (1 + np - p)/p = ln(2) * "
              f"{aux['rhs_over_ln2']:.9g} = {cert.upper_bound_value:.9g}")
    else:
        print(f"  half-life            s = {aux['s']}")
        print(f"  horizon              l = ceil(6n/c) = {aux['ell']}")
        print(f"  recursion coeff      s + 1 - 2n/c = {aux['recursion_coeff']:.9g}")
        if cert.reason is None:
            print(f"  branch (g_l < 2)     n - 1 + n/c + s + 3 = "
                  f"{aux['branch1_lb']:.9g}")
            print(f"  branch (g_l >= 2)    2n - 6n/c = {aux['branch2_lb']:.9g}")
            print(f"  mixture cap          n - 1 + n/c = {cert.upper_bound_value:.9g}")
    if cert.reason is not None:
        print(f"  note                 {cert.reason}")
    print(f"  verdict              {'CERTIFIED' if cert.verdict else 'not certified'}")


def cmd_certify(args) -> None:
    setting = Setting(args.setting)
    cert = certify(setting, args.n, args.c)
    _print_certificate(cert)
    config = {"setting": args.setting, "n": args.n, "c": args.c}
    result = cert.to_json_dict()

    def csv_spec():
        row = [result["setting"], args.n, args.c, result["lower_bound_value"],
               result["upper_bound_value"], result["verdict"], result["reason"]]
        return ("certificate-v1",
                ["setting", "n", "c", "lower_bound", "upper_bound",
                 "verdict", "reason"],
                [row])

    _emit(args, "certify", config, result, csv_spec)


def cmd_scan(args) -> None:
    setting = Setting(args.setting)
    lo, hi, step = parse_crange(args.c_range)
    res = scan_threshold(args.n, setting, lo, hi, step)
    config = {"setting": args.setting, "n": args.n, "c_range": args.c_range}
    result = res.to_json_dict()
    for a, b in res.flips:
        print(f"verdict flips between c={a:.10g} and c={b:.10g}")
    if res.smallest_certified is not None:
        print(f"smallest certified c on the grid: {res.smallest_certified:.10g}")
    else:
        print("no certified c on the grid")

    def csv_spec():
        rows = [
            [e["c"], e["lower"], e["upper"], e["verdict"]]
            for e in result["entries"]
        ]
        return ("scan-v1", ["c", "lower_bound", "upper_bound", "verdict"], rows)

    def figure_fn(path, config):
        from .figures import scan_figure
        cs = [e["c"] for e in result["entries"]]
        margins = [
            (e["lower"] - e["upper"]) if e["lower"] is not None else math.nan
            for e in result["entries"]
        ]
        verdicts = [e["verdict"] for e in result["entries"]]
        scan_figure(cs, margins, verdicts, config, path)

    _emit(args, "scan", config, result, csv_spec, figure_fn)


def cmd_verify_monotone(args) -> None:
    f = parse_function(args.f, args.n)
    params = MutationParams(args.n, args.c)
    seed = _resolve_seed(args)
    est = bit_zero_probabilities(f, params, args.t, args.reps, seed)
    worst_z = 0.0
    ok = True
    for i in range(args.n - 1):
        gap = est.probabilities[i + 1] - est.probabilities[i]
        sigma = math.hypot(est.stderr[i], est.stderr[i + 1])
        if gap < 0 and sigma > 0:
            z = -gap / sigma
            worst_z = max(worst_z, z)
            if z > 3.0:
                ok = False
        elif gap < 0 and sigma == 0:
            ok = False
    config = {"f": args.f, "n": args.n, "c": args.c, "t": args.t,
              "reps": args.reps, "seed": seed}
    result = {
        "t": est.t, "reps": est.reps,
        "positions": list(range(1, args.n + 1)),
        "p_zero": list(est.probabilities),
        "stderr": list(est.stderr),
        "monotone_within_3_sigma": ok,
        "worst_violation_sigmas": worst_z,
    }
    status = "PASS" if ok else "FAIL"
    print(f"{status} per-position zero probabilities nondecreasing "
          f"(worst violation {worst_z:.2f} sigma)")

    def csv_spec():
        rows = [
            [i + 1, est.probabilities[i], est.stderr[i]] for i in range(args.n)
        ]
        return ("monotone-v1", ["position", "p_zero", "stderr"], rows)

    def figure_fn(path, config):
        from .figures import monotone_figure
        monotone_figure(result["positions"], result["p_zero"],
                        result["stderr"], config, path)

    _emit(args, "verify-monotone", config, result, csv_spec, figure_fn)


def _oracle_battery(n_max: int, per_n: int, master_seed: int) -> dict:
    """Closed forms vs enumeration on random monotone profiles.

    For each n, profile and admissible c: unit-vector drifts against ONEMAX
    (both transforms) and BINVAL (identity), and the uniform unit-mixture
    averages, all checked against exact enumeration.
    """
    max_dev = 0.0
    cases = 0
    per_n_rows = []
    for n in range(4, n_max + 1):
        n_dev = 0.0
        for gi in range(per_n):
            rng = substream(master_seed, n * 10_000 + gi)
            base = DriftFunction.random_monotone(n, rng)
            for c in ORACLE_CHECK_CS:
                if c > n:
                    continue
                params = MutationParams(n, c)
                onemax, binval = make_onemax(n), make_binval(n)
                for tf in (Transform.IDENTITY, Transform.LOG1P):
                    g = DriftFunction(base.weights, tf)
                    enum_units = [
                        drift_enum(g, onemax, BitString.unit(n, i), params).value
                        for i in range(1, n + 1)
                    ]
                    for i in range(1, n + 1):
                        closed = drift_onemax_unit(g, params, i).value
                        n_dev = max(n_dev, abs(closed - enum_units[i - 1]))
                        cases += 1
                    running = 0.0
                    for k in range(1, n + 1):
                        running += enum_units[k - 1]
                        d = PointDistribution.uniform_units(n, k)
                        closed = drift_distribution(g, onemax, d, params).value
                        n_dev = max(n_dev, abs(closed - running / k))
                        cases += 1
                g = DriftFunction(base.weights, Transform.IDENTITY)
                for i in range(1, n + 1):
                    closed = drift_binval_unit(g, i, params).value
                    enum = drift_enum(g, binval, BitString.unit(n, i), params).value
                    n_dev = max(n_dev, abs(closed - enum))
                    cases += 1
        per_n_rows.append((n, n_dev))
        max_dev = max(max_dev, n_dev)
    return {"max_abs_dev": max_dev, "cases": cases,
            "per_n": [{"n": n, "max_abs_dev": d} for n, d in per_n_rows]}


def cmd_oracle_check(args) -> None:
    if args.n_max < 4:
        raise ValueError(f"--n-max must be >= 4, got {args.n_max}")
    if args.n_max > ENUM_LIMIT:
        raise ValueError(f"--n-max must be <= {ENUM_LIMIT}, got {args.n_max}")
    if args.per_n < 1:
        raise ValueError(f"--per-n must be >= 1, got {args.per_n}")
    seed = _resolve_seed(args)
    battery = _oracle_battery(args.n_max, args.per_n, seed)
    ok = battery["max_abs_dev"] <= args.tol
    battery["tol"] = args.tol
    battery["pass"] = ok
    status = "PASS" if ok else "FAIL"
    print(f"{status} {battery['cases']} closed-form-vs-enumeration checks, "
          f"max absolute deviation {battery['max_abs_dev']:.3e} "
          f"(tolerance {args.tol:.1e})")
    config = {"n_max": args.n_max, "per_n": args.per_n, "seed": seed,
              "tol": args.tol}

    def csv_spec():
        rows = [[d["n"], d["max_abs_dev"]] for d in battery["per_n"]]
        return ("oracle-v1", ["n", "max_abs_dev"], rows)

    _emit(args, "oracle-check", config, battery, csv_spec)


def cmd_predict(args) -> None:
    if args.kind == "additive":
        if args.initial is None or args.delta is None:
            raise ValueError("predict --kind additive needs --initial and --delta")
        inputs = {"initial": args.initial, "delta": args.delta}
        bound = additive_time_bound(args.initial, args.delta)
    elif args.onemax_n is not None:
        n = args.onemax_n
        delta = onemax_drift_lower(1, n)
        inputs = {"onemax_n": n, "s0": float(n), "s_min": 1.0, "delta": delta}
        bound = multiplicative_time_bound(float(n), 1.0, delta)
    else:
        if args.s0 is None or args.s_min is None or args.delta is None:
            raise ValueError(
                "predict --kind multiplicative needs --s0, --s-min and --delta "
                "(or --onemax-n)"
            )
        inputs = {"s0": args.s0, "s_min": args.s_min, "delta": args.delta}
        bound = multiplicative_time_bound(args.s0, args.s_min, args.delta)
    pred = BoundPrediction(args.kind, inputs, bound)
    config = dict(inputs, kind=args.kind)
    result = pred.to_json_dict()

    def csv_spec():
        return ("predict-v1", ["kind", "inputs", "bound"],
                [[args.kind, canonical_json(inputs), bound]])

    _emit(args, "predict", config, result, csv_spec)


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="driftlab",
        description="Drift-analysis laboratory for the (1+1) evolutionary "
                    "algorithm on linear pseudo-Boolean functions.",
    )
    parser.add_argument("--version", action="version",
                        version=f"driftlab {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("simulate", help="batch hitting-time runs")
    p.add_argument("--f", required=True, help="onemax | binval | weight file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--reps", type=int, default=100)
    p.add_argument("--cap", type=int, default=None,
                   help="iteration cap (default: max(1e6, 50 n ln n))")
    p.add_argument("--strict", action="store_true",
                   help="accept only strict improvements")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--trajectory", action="store_true",
                   help="record ones-count trajectories (enables the figure)")
    _seed_flag(p)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_simulate)

    p = sub.add_parser("drift", help="drift of a weight profile at a point")
    p.add_argument("--g", required=True,
                   help="profile: " + " | ".join(PROFILE_NAMES) + " | weight file")
    p.add_argument("--f", required=True, help="onemax | binval | weight file")
    p.add_argument("--x", required=True,
                   help="point: e:<i> | zero | ones | 0/1 string")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--transform", choices=("identity", "log1p"), default=None)
    p.add_argument("--mc", type=int, default=None, metavar="SAMPLES",
                   help="force Monte Carlo with this many samples")
    _seed_flag(p)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_drift)

    p = sub.add_parser("certify", help="evaluate a non-existence certificate")
    p.add_argument("--setting", required=True,
                   choices=("multiplicative", "additive", "distribution"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float, required=True)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_certify)

    p = sub.add_parser("scan", help="certificate verdicts over a c grid")
    p.add_argument("--setting", required=True,
                   choices=("multiplicative", "additive", "distribution"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c-range", required=True, metavar="LO:HI:STEP")
    _add_output_flags(p)
    p.set_defaults(handler=cmd_scan)

    p = sub.add_parser("verify-monotone",
                       help="per-position convergence probabilities")
    p.add_argument("--f", required=True, help="onemax | binval | weight file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--t", type=int, required=True, help="iterations to advance")
    p.add_argument("--reps", type=int, default=100_000)
    _seed_flag(p)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_verify_monotone)

    p = sub.add_parser("oracle-check",
                       help="closed forms vs exact enumeration battery")
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--per-n", type=int, default=20,
                   help="random profiles per n")
    p.add_argument("--tol", type=float, default=1e-10)
    _seed_flag(p)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_oracle_check)

    p = sub.add_parser("predict", help="drift-theorem hitting-time bounds")
    p.add_argument("--kind", required=True, choices=("additive", "multiplicative"))
    p.add_argument("--initial", type=float, default=None)
    p.add_argument("--delta", type=float, default=None)
    p.add_argument("--s0", type=float, default=None)
    p.add_argument("--s-min", type=float, default=None)
    p.add_argument("--onemax-n", type=int, default=None,
                   help="shortcut: s0=n, s_min=1, delta=(e-2)/(e n)")
    _add_output_flags(p)
    p.set_defaults(handler=cmd_predict)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
