"""Command line interface.

    stripgaf analytic  --measure M.json --a A --b B [--kmax K] [--out DIR]
    stripgaf simulate  --measure M.json --a A --b B --T 25 --T 50 [--reps N] [--seed S]
                       [--modes N] [--out FILE] [--format csv|json]
    stripgaf classify  --measure M.json --a A --b B
    stripgaf compare   --measure M.json --a A --b B --T ... [--reps N] [--tol 0.15]
    stripgaf selftest

The measure file may also carry harness fields (a, b, T_list, replications,
n_modes, base_seed, k_max); flags override them.  Exit codes: 0 success,
1 failed comparison or self test, 2 bad arguments, 3 configuration or file
errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import analytics as an
from .errors import CondL2Error, ConfigError, DomainError, StripGafError
from .harness import ExperimentConfig, compare_to_analytic, run_ensemble
from .spectral import dumps_json, measure_from_dict

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CONFIG = 0, 1, 2, 3

DEFAULTS = {"replications": 200, "n_modes": 1024, "base_seed": 0, "k_max": an.DEFAULT_KMAX}


def _read_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path} is not valid JSON: {exc}") from exc


def _load(args, need_T: bool = False):
    """(measure, settings dict) from the measure file and flags."""
    spec = _read_json(args.measure)
    measure = measure_from_dict(spec.get("measure", spec))
    st = {k: spec[k] for k in ("a", "b", "T_list", *DEFAULTS) if k in spec}
    for key, flag in (("a", "a"), ("b", "b"), ("T_list", "T"), ("replications", "reps"),
                      ("base_seed", "seed"), ("k_max", "kmax"), ("n_modes", "modes")):
        val = getattr(args, flag, None)
        if val is not None:
            st[key] = val
    for key, val in DEFAULTS.items():
        st.setdefault(key, val)
    missing = [k for k in ("a", "b") if k not in st]
    if need_T and "T_list" not in st:
        missing.append("T")
    if missing:
        raise ConfigError("missing " + ", ".join("--" + k for k in missing))
    return measure, st


def _config(measure, st) -> ExperimentConfig:
    return ExperimentConfig(measure=measure, a=st["a"], b=st["b"], T_list=st["T_list"],
                            replications=st["replications"], n_modes=st["n_modes"],
                            base_seed=st["base_seed"], k_max=st["k_max"])


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise ConfigError(f"cannot write {path}: {exc}") from exc


def cmd_classify(args) -> int:
    m, st = _load(args)
    rep = an.classify_regime(m, st["a"], st["b"], with_limits=False)
    print(rep.line())
    return EXIT_OK


def cmd_analytic(args) -> int:
    m, st = _load(args)
    a, b = st["a"], st["b"]
    rep = an.classify_regime(m, a, b, k_max=st["k_max"])
    ys = np.linspace(a, b, 101)
    rows = ["y,L"]
    for y in ys:
        rows.append(f"{format(float(y), '.17g')},{format(an.mean_density(m, float(y)), '.17g')}")
    profile = "\n".join(rows) + "\n"
    if args.out:
        try:
            os.makedirs(args.out, exist_ok=True)
        except OSError as exc:
            raise ConfigError(f"cannot create {args.out}: {exc}") from exc
        _write(rep.to_json(), os.path.join(args.out, "regime.json"))
        _write(profile, os.path.join(args.out, "density_profile.csv"))
    else:
        sys.stdout.write(rep.to_json())
    L1 = "-" if rep.L1 is None else f"{rep.L1:.6g}"
    L2 = "-" if rep.L2 is None else f"{rep.L2:.6g}"
    print(f"{rep.line()}  L1={L1} L2={L2} tail_bound={rep.tail_bound:.3g}", file=sys.stderr)
    return EXIT_OK


def cmd_simulate(args) -> int:
    m, st = _load(args, need_T=True)
    stats = run_ensemble(_config(m, st))
    text = stats.to_json() if args.format == "json" else stats.to_csv()
    _write(text, args.out)
    return EXIT_OK


def cmd_compare(args) -> int:
    m, st = _load(args, need_T=True)
    cfg = _config(m, st)
    rep = an.classify_regime(m, cfg.a, cfg.b, k_max=cfg.k_max)
    stats = run_ensemble(cfg)
    res = compare_to_analytic(stats, rep, args.tol)
    print(res.summary())
    if args.out:
        _write(dumps_json(res.to_dict()), args.out)
    return EXIT_OK if res.passed else EXIT_FAIL


def cmd_selftest(args) -> int:
    from .identities import run_identity_suite

    checks = run_identity_suite()
    for c in checks:
        print(c.line())
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stripgaf", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, T=False, mc=False):
        sp.add_argument("--measure", required=True, help="measure descriptor JSON (may hold harness fields)")
        sp.add_argument("--a", type=float, help="lower height of the window")
        sp.add_argument("--b", type=float, help="upper height of the window")
        sp.add_argument("--kmax", type=int, help=f"series truncation (default {an.DEFAULT_KMAX})")
        if T:
            sp.add_argument("--T", type=float, action="append",
                            help="window length; repeat for several (increasing)")
        if mc:
            sp.add_argument("--reps", type=int, help=f"replications (default {DEFAULTS['replications']})")
            sp.add_argument("--seed", type=int, help="base seed (default 0)")
            sp.add_argument("--modes", type=int, help=f"number of modes (default {DEFAULTS['n_modes']})")

    sp = sub.add_parser("analytic", help="regime report and mean density profile")
    common(sp)
    sp.add_argument("--out", help="directory for regime.json and density_profile.csv (default: stdout)")
    sp.set_defaults(func=cmd_analytic)

    sp = sub.add_parser("simulate", help="Monte Carlo count statistics")
    common(sp, T=True, mc=True)
    sp.add_argument("--out", help="output file (default: stdout)")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("classify", help="print the variance growth regime")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("compare", help="Monte Carlo against the analytic limit")
    common(sp, T=True, mc=True)
    sp.add_argument("--tol", type=float, default=0.15, help="relative tolerance (default 0.15)")
    sp.add_argument("--out", help="write the comparison report as JSON")
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("selftest", help="run the numerical identity suite")
    sp.set_defaults(func=cmd_selftest)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (ConfigError, DomainError, CondL2Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except StripGafError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
