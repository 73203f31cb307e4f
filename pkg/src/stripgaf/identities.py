"""Numerical identity checks used by ``stripgaf selftest``.

Each check returns a Check with a pass flag and a one-line detail.  They are
fast (a few seconds in total) and deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from . import analytics as an
from . import spectral as sp


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.detail}"


def test_measures() -> dict[str, sp.SpectralMeasure]:
    return {
        "gaussian": sp.gaussian(),
        "uniform": sp.uniform(),
        "shifted_gaussian": sp.gaussian(center=0.3),
    }


def parseval_checks() -> list[Check]:
    out = []
    cases = [("gaussian", sp.gaussian(), 1.0), ("uniform", sp.uniform(), 1.5),
             ("shifted_gaussian", sp.gaussian(center=0.3), 0.75), ("two_atom", sp.two_atom(), 2.0)]
    for name, m, T in cases:
        lhs, rhs = an.fejer_parseval_check(m, T)
        scale = max(abs(rhs), 2 * T * m.total_mass * 1e-3) if name == "two_atom" else abs(rhs)
        res = abs(lhs - rhs) / scale
        out.append(Check(f"parseval[{name}, T={T:g}]", res < 1e-6, f"relative residual {res:.2e}"))
    return out


def q_checks(a: float = -0.2, b: float = 0.15) -> list[Check]:
    out = []
    ts = np.linspace(-0.25, 0.25, 5)
    xs = np.linspace(-3.0, 3.0, 61)
    for name, m in test_measures().items():
        diag = max(abs(an.q_func(m, 0.0, t, t) - 1.0) for t in ts)
        qa = max(abs(an.q_func(m, 0.0, t, t, "d1")) for t in ts)
        lo, hi = 1.0, 0.0
        for y1 in ts:
            for y2 in ts:
                q = an.q_func(m, xs, y1, y2)
                lo, hi = min(lo, q.min()), max(hi, q.max())
        sup_off = float(np.max(an.q_func(m, np.linspace(-10, 10, 2001), a, b)))
        ok = diag < 1e-12 and qa < 1e-8 and lo >= -1e-15 and hi <= 1 + 1e-12 and sup_off < 1
        out.append(Check(f"q-properties[{name}]", ok,
                         f"|q(0,t,t)-1|={diag:.1e} |q_a(0,t,t)|={qa:.1e} range=[{lo:.3g},{hi:.6g}] "
                         f"sup_x q(x,{a},{b})={sup_off:.6f}"))
    return out


def h1_root_check(a: float = -0.2, b: float = 0.2) -> Check:
    m = sp.gaussian()
    lam = np.linspace(-20, 20, 40001)
    diff = an.l_k(m, a, 1, lam) * np.exp(2 * np.pi * a * lam) - an.l_k(m, b, 1, lam) * np.exp(2 * np.pi * b * lam)
    changes = int(np.count_nonzero(np.diff(np.sign(diff)) != 0))
    z1, z2 = an.h1_real_zeros(m, a, b)
    return Check("h1-two-roots[gaussian]", changes == 2,
                 f"{changes} sign changes; roots {z1:.8f}, {z2:.8f}")


def log_cov_checks(theta: float = 0.5, n: int = 1_000_000, seed: int = 0) -> list[Check]:
    series = an.log_cov_series(theta)
    ref = 0.25 * float(special.spence(1 - theta * theta))
    rng = np.random.Generator(np.random.Philox(key=seed))
    xi = (rng.standard_normal(n) + 1j * rng.standard_normal(n)) * math.sqrt(0.5)
    ze = (rng.standard_normal(n) + 1j * rng.standard_normal(n)) * math.sqrt(0.5)
    eta = theta * xi + math.sqrt(1 - theta * theta) * ze
    u, v = np.log(np.abs(xi)), np.log(np.abs(eta))
    prod = (u - u.mean()) * (v - v.mean())
    cov = prod.sum() / (n - 1)
    se = prod.std(ddof=1) / math.sqrt(n)
    return [
        Check("log-cov-series[dilog]", abs(series - ref) < 1e-14, f"{series:.12f} vs {ref:.12f}"),
        Check("log-cov-series[mc]", abs(cov - series) < 4 * se,
              f"MC {cov:.5f} +- {se:.5f} vs series {series:.5f}"),
    ]


def clt_check() -> Check:
    seq = an.clt_decay_check(sp.gaussian().density, 64)
    dev = max(abs(v - 1.0) for _, v in seq)
    return Check("clt-decay[gaussian]", dev < 1e-6, f"max |sqrt(m) int |F|^m - 1| = {dev:.1e}")


def ball_energy_check() -> Check:
    res = an.mu_ball_energy_limit(sp.uniform(), [0.1, 0.03, 0.01, 0.003])
    vals = res.values
    mono = all(v2 >= v1 - 1e-12 for v1, v2 in zip(vals, vals[1:]))
    close = abs(vals[-1] - res.energy) <= 0.01 * res.energy
    bounded = max(vals) <= res.energy + 1e-6
    return Check("ball-energy[uniform]", mono and close and bounded,
                 f"values {', '.join(f'{v:.5f}' for v in vals)} -> energy {res.energy:.5f}")


def run_identity_suite() -> list[Check]:
    checks = parseval_checks() + q_checks() + [h1_root_check()] + log_cov_checks()
    checks += [clt_check(), ball_energy_check()]
    return checks
