"""Monte Carlo ensembles of zero counts and their comparison with theory.

Replication i uses the seed splitmix64(base_seed + (i + 1) * GOLDEN) (the
splitmix64 output function applied to a Weyl sequence), so any replication can
be reproduced on its own.  All windows [0, T] x [a, b] of one replication are
counted on the same realization.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
import os
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .analytics import DEFAULT_KMAX, RegimeReport
from .errors import ConfigError, DomainError, InsufficientDataError, StripGafError
from .gafsim import discretize_measure, sample_realization
from .spectral import SpectralMeasure, dumps_json, measure_from_dict
from .zeros import count_zeros_nested

log = logging.getLogger(__name__)

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(x: int) -> int:
    z = x & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def seed_for(base_seed: int, i: int) -> int:
    """64-bit seed of replication i."""
    return splitmix64((base_seed + (i + 1) * GOLDEN) & MASK64)


HARNESS_FIELDS = ("a", "b", "T_list", "replications", "n_modes", "base_seed", "k_max",
                  "discretization")


@dataclass
class ExperimentConfig:
    measure: SpectralMeasure
    a: float
    b: float
    T_list: tuple[float, ...]
    replications: int = 200
    n_modes: int = 1024
    base_seed: int = 0
    k_max: int = DEFAULT_KMAX
    discretization: str = "uniform"
    measure_ref: str = ""

    def __post_init__(self):
        self.T_list = tuple(float(t) for t in self.T_list)
        if not self.T_list or any(t <= 0 for t in self.T_list):
            raise ConfigError("T_list must hold positive reals")
        if any(t2 <= t1 for t1, t2 in zip(self.T_list, self.T_list[1:])):
            raise ConfigError("T_list must be increasing")
        if self.replications < 2:
            raise ConfigError("need at least 2 replications")
        delta = self.measure.strip_half_width
        if not -delta < self.a < self.b < delta:
            raise ConfigError(f"need -delta < a < b < delta, got a={self.a}, b={self.b}")
        if self.discretization not in ("uniform", "equal_mass"):
            raise ConfigError(f"unknown discretization {self.discretization!r}")

    @classmethod
    def from_dict(cls, spec: dict, **overrides) -> "ExperimentConfig":
        """Measure descriptor fields plus harness fields in one JSON object."""
        kw = {k: spec[k] for k in HARNESS_FIELDS if k in spec}
        kw.update({k: v for k, v in overrides.items() if v is not None})
        if "measure" not in kw:
            inner = spec.get("measure", spec)
            kw["measure"] = measure_from_dict(inner)
        missing = [k for k in ("a", "b", "T_list") if k not in kw]
        if missing:
            raise ConfigError(f"config lacks {', '.join(missing)}")
        try:
            return cls(**kw)
        except TypeError as exc:
            raise ConfigError(str(exc)) from exc

    @classmethod
    def from_file(cls, path: str | os.PathLike, **overrides) -> "ExperimentConfig":
        try:
            with open(path, "r", encoding="utf-8") as fh:
                spec = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path} is not valid JSON: {exc}") from exc
        return cls.from_dict(spec, measure_ref=str(path), **overrides)


def _jackknife_var_se(x: np.ndarray) -> np.ndarray:
    """Leave-one-out jackknife SE of the unbiased variance, per column of x."""
    n = x.shape[0]
    s1 = x.sum(axis=0)
    s2 = (x * x).sum(axis=0)
    # variance of the sample without row i
    m_i = (s1 - x) / (n - 1)
    v_i = ((s2 - x * x) - (n - 1) * m_i**2) / (n - 2) if n > 2 else np.zeros_like(x, dtype=float)
    vbar = v_i.mean(axis=0)
    return np.sqrt((n - 1) / n * ((v_i - vbar) ** 2).sum(axis=0))


@dataclass
class EnsembleStats:
    T: np.ndarray
    mean: np.ndarray
    var: np.ndarray
    var_se: np.ndarray
    reps: int
    counts: np.ndarray | None = None
    a: float | None = None
    b: float | None = None
    measure_name: str = ""

    @classmethod
    def from_counts(cls, T: Sequence[float], counts: np.ndarray, **kw) -> "EnsembleStats":
        c = np.asarray(counts, dtype=float)
        if c.ndim != 2 or c.shape[1] != len(T):
            raise DomainError("counts must have shape (replications, len(T))")
        n = c.shape[0]
        if n < 2:
            raise InsufficientDataError("need at least 2 replications")
        return cls(
            T=np.asarray(T, dtype=float),
            mean=c.mean(axis=0),
            var=c.var(axis=0, ddof=1),
            var_se=_jackknife_var_se(c) if n > 2 else np.zeros(c.shape[1]),
            reps=n,
            counts=np.asarray(counts),
            **kw,
        )

    @property
    def mean_se(self) -> np.ndarray:
        return np.sqrt(self.var / self.reps)

    @property
    def var_over_T(self) -> np.ndarray:
        return self.var / self.T

    @property
    def var_over_T2(self) -> np.ndarray:
        return self.var / self.T**2

    def rows(self) -> list[dict]:
        return [
            {"T": float(t), "mean": float(m), "var": float(v), "var_se": float(s), "reps": self.reps}
            for t, m, v, s in zip(self.T, self.mean, self.var, self.var_se)
        ]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["T", "mean", "var", "var_se", "reps"])
        for r in self.rows():
            w.writerow([format(r["T"], ".17g"), format(r["mean"], ".17g"),
                        format(r["var"], ".17g"), format(r["var_se"], ".17g"), r["reps"]])
        return buf.getvalue()

    def to_json(self) -> str:
        return dumps_json({"a": self.a, "b": self.b, "measure": self.measure_name,
                           "rows": self.rows()})


def run_ensemble(cfg: ExperimentConfig, seeds: Sequence[int] | None = None) -> EnsembleStats:
    """Zero counts in [0, T] x [a, b] for every T and replication.

    ``seeds`` overrides the derived per-replication seeds (testing aid).
    """
    m = cfg.measure
    if m.is_single_atom:
        counts = np.zeros((cfg.replications, len(cfg.T_list)), dtype=np.int64)
        return EnsembleStats.from_counts(cfg.T_list, counts, a=cfg.a, b=cfg.b, measure_name=m.name)
    ms = discretize_measure(m, cfg.n_modes, cfg.discretization)
    if ms.spacing is not None:
        corr = 10.0  # windows must stay well inside one kernel period
        if cfg.T_list[-1] + corr > ms.period:
            log.warning("largest window %.3g is close to the kernel period %.3g; "
                        "increase n_modes", cfg.T_list[-1], ms.period)
    if seeds is None:
        seeds = [seed_for(cfg.base_seed, i) for i in range(cfg.replications)]
    elif len(seeds) != cfg.replications:
        raise ConfigError("one seed per replication is required")
    counts = np.empty((cfg.replications, len(cfg.T_list)), dtype=np.int64)
    for i, s in enumerate(seeds):
        g = sample_realization(ms, s)
        try:
            counts[i] = count_zeros_nested(g, cfg.a, cfg.b, cfg.T_list)
        except StripGafError as exc:
            raise type(exc)(f"replication {i} (seed {s}, T_list {cfg.T_list}): {exc}") from exc
    return EnsembleStats.from_counts(cfg.T_list, counts, a=cfg.a, b=cfg.b, measure_name=m.name)


@dataclass(frozen=True)
class GrowthFit:
    exponent: float
    linear_coeff: float
    quadratic_coeff: float
    exponent_se: float = math.nan
    linear_se: float = math.nan
    quadratic_se: float = math.nan

    def __iter__(self):
        return iter((self.exponent, self.linear_coeff, self.quadratic_coeff))


def _slope(logT: np.ndarray, logV: np.ndarray) -> float:
    return float(np.polyfit(logT, logV, 1)[0])


def fit_growth(stats: EnsembleStats) -> GrowthFit:
    """Log-log slope of V(T) and the V/T, V/T^2 coefficients at the largest T.

    SEs come from the jackknife over replications when counts are available;
    the windows share realizations, so the exponent SE is only indicative.
    """
    T = np.asarray(stats.T, dtype=float)
    V = np.asarray(stats.var, dtype=float)
    if T.size < 3 or T.max() / T.min() < 4:
        raise InsufficientDataError("need at least 3 window sizes spanning a factor of 4")
    if np.any(V <= 0):
        raise InsufficientDataError("variance is zero for some window")
    logT = np.log(T)
    expo = _slope(logT, np.log(V))
    lin = V[-1] / T[-1]
    quad = V[-1] / T[-1] ** 2
    e_se = math.nan
    if stats.counts is not None and stats.reps > 2:
        c = np.asarray(stats.counts, dtype=float)
        n = c.shape[0]
        s1, s2 = c.sum(axis=0), (c * c).sum(axis=0)
        m_i = (s1 - c) / (n - 1)
        v_i = ((s2 - c * c) - (n - 1) * m_i**2) / (n - 2)
        if np.all(v_i > 0):
            slopes = np.polyfit(logT, np.log(v_i).T, 1)[0]
            e_se = float(math.sqrt((n - 1) / n * np.sum((slopes - slopes.mean()) ** 2)))
    return GrowthFit(expo, lin, quad, e_se, stats.var_se[-1] / T[-1], stats.var_se[-1] / T[-1] ** 2)


@dataclass
class ComparisonRow:
    T: float
    empirical: float
    analytic: float | None
    ratio: float | None
    passed: bool | None
    quantity: str = ""
    note: str = ""


@dataclass
class ComparisonReport:
    regime: str
    fired_condition: str
    analytic: float | None
    growth: GrowthFit | None
    rows: list[ComparisonRow] = field(default_factory=list)
    tol: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows if r.passed is not None)

    def to_dict(self) -> dict:
        return {
            "regime": self.regime,
            "fired_condition": self.fired_condition,
            "analytic": self.analytic,
            "tol": self.tol,
            "growth": None if self.growth is None else {
                "exponent": self.growth.exponent, "exponent_se": self.growth.exponent_se,
                "linear_coeff": self.growth.linear_coeff,
                "quadratic_coeff": self.growth.quadratic_coeff},
            "rows": [r.__dict__ for r in self.rows],
            "passed": self.passed,
        }

    def summary(self) -> str:
        lines = [f"regime: {self.regime} ({self.fired_condition})"]
        if self.growth is not None:
            lines.append(f"growth exponent: {self.growth.exponent:.4f}")
        for r in self.rows:
            status = {True: "PASS", False: "FAIL", None: "-"}[r.passed]
            ana = "-" if r.analytic is None else f"{r.analytic:.6g}"
            rat = "-" if r.ratio is None else f"{r.ratio:.4f}"
            lines.append(f"T={r.T:<8g} {r.quantity:<8} empirical={r.empirical:.6g} "
                         f"analytic={ana} ratio={rat} {status} {r.note}".rstrip())
        lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def compare_to_analytic(stats: EnsembleStats, report: RegimeReport, tol: float) -> ComparisonReport:
    """Check the empirical variance against the regime's limit at the largest T.

    Smaller windows are reported for information only.
    """
    try:
        growth = fit_growth(stats)
    except InsufficientDataError:
        growth = None
    out = ComparisonReport(report.regime, report.fired_condition, None, growth, tol=tol)
    mismatch = (report.a is not None and stats.a is not None
                and (not math.isclose(report.a, stats.a) or not math.isclose(report.b, stats.b)))
    if mismatch:
        out.rows = [ComparisonRow(float(t), math.nan, None, None, False, "",
                                  f"ConfigMismatch: report (a,b)=({report.a},{report.b}) "
                                  f"vs ensemble ({stats.a},{stats.b})") for t in stats.T]
        return out
    if report.regime == "Linear" and report.L1 is not None and math.isfinite(report.L1):
        target, emp, qty = report.L1, stats.var_over_T, "V/T"
    elif report.regime == "Quadratic" and report.L2:
        target, emp, qty = report.L2, stats.var_over_T2, "V/T^2"
    else:
        target, emp, qty = None, stats.var_over_T, "V/T"
    out.analytic = None if target is None else float(target)
    last = len(stats.T) - 1
    for i, (t, e) in enumerate(zip(stats.T, emp)):
        if target is None:
            out.rows.append(ComparisonRow(float(t), float(e), None, None, None, qty, "exponent only"))
            continue
        ratio = float(e / target)
        passed = bool(abs(e - target) <= tol * target) if i == last else None
        out.rows.append(ComparisonRow(float(t), float(e), float(target), ratio, passed, qty))
    return out
