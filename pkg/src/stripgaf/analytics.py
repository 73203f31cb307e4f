"""Closed-form and series quantities for zeros in a strip.

Notation.  For a spectral measure rho and a height y,

    m_j(y) = integral of lam^j exp(4 pi y lam) d rho,     r(2iy) = m_0(y),

and mu(y) = m_1/m_0 is the mean of the tilted law.  The mean zero density is
L(y) = 4 pi (m_0 m_2 - m_1^2) / m_0^2, i.e. 4 pi times the tilted variance.

Variance of counts.  Write V(T) for the variance of the number of zeros in
[0, T] x [a, b].  Expanding the covariance of log|f| in powers of the
normalized kernel and applying the argument principle gives

    V(T) / T ~ (1 / 16 pi^2) sum_k k^-2 iint K_T(lam - tau) h_k(lam + tau)
                                          d rho^{*k}(lam) d rho^{*k}(tau),

with the Fejer kernel K_T(u) = T sinc^2(pi T u) (its integral is one), and in
the limit T -> oo

    L1 = lim V(T) / T = (1 / 16 pi^2) sum_k k^-2 integral p_k(lam)^2 h_k(2 lam) d lam.

Everything is evaluated through the normalized tilted laws
g_c = exp(2 pi c lam) rho / r(ic) and their convolution powers, which keeps
the exponential weights out of the arithmetic.  The summands decay like
k^(-3/2) (local limit theorem), and the tail beyond k_max is extrapolated
from the last term with a Hurwitz zeta sum.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy import integrate, optimize, special
from scipy.signal import fftconvolve

from .errors import CondL2Error, ConvergenceError, DomainError, NumericError
from .spectral import (
    TWO_PI,
    GridDensity,
    SpectralMeasure,
    check_cond_L2,
    density_powers,
    dumps_json,
    eval_r,
    fourier_density,
    moments,
    normalized,
    tilt,
)

DEFAULT_KMAX = 24
POWER_TRIM = 1e-16
NORM = 1.0 / (16.0 * math.pi**2)


def _check_height(m: SpectralMeasure, y: float) -> None:
    if not abs(y) < m.strip_half_width:
        raise DomainError(f"y = {y} outside the strip |y| < {m.strip_half_width}")


def _tilted_stats(m: SpectralMeasure, y: float) -> tuple[float, float, float]:
    """(m_0, mean, variance) of exp(4 pi y lam) d rho, variance computed centred."""
    _check_height(m, y)
    locs, masses = m.nodes()
    with np.errstate(divide="ignore"):
        logw = np.log(masses) + 2 * TWO_PI * y * locs
    shift = float(np.max(logw))
    w = np.exp(logw - shift)
    s = math.fsum(w)
    mean = math.fsum(w * locs) / s
    var = math.fsum(w * (locs - mean) ** 2) / s
    return s * math.exp(shift), mean, var


# ------------------------------------------------------------------ mean density

def mean_density(m: SpectralMeasure, y: float) -> float:
    """Expected number of zeros per unit length at height y.

    Atoms are allowed: the formula then gives the first intensity of the
    (random) limiting zero distribution.
    """
    moments(m, y)  # domain and truncation checks
    _, _, var = _tilted_stats(m, y)
    return 4.0 * math.pi * var


def expected_count(m: SpectralMeasure, rect, rtol: float = 1e-8) -> float:
    """(t1 - t0) times the integral of L(y) over [a, b]."""
    if rect.a == rect.b:
        return 0.0
    _check_height(m, rect.a)
    _check_height(m, rect.b)
    val, _ = integrate.quad(lambda y: mean_density(m, y), rect.a, rect.b,
                            epsabs=0.0, epsrel=rtol, limit=200)
    return (rect.t1 - rect.t0) * val


# ------------------------------------------------------------------ q, l_k, h_k

def q_func(m: SpectralMeasure, x, y1: float, y2: float, deriv: str = "none"):
    """q(x, y1, y2) = |r(x + i(y1 + y2))|^2 / (r(2 i y1) r(2 i y2)) or a y-derivative.

    ``deriv`` is one of "none", "d1", "d2", "d12".
    """
    if deriv not in ("none", "d1", "d2", "d12"):
        raise DomainError(f"unknown derivative {deriv!r}")
    _check_height(m, y1)
    _check_height(m, y2)
    xa = np.asarray(x, dtype=float)
    z = xa + 1j * (y1 + y2)
    R = eval_r(m, z, 0)
    N = np.abs(R) ** 2
    D1 = eval_r(m, 2j * y1).real
    D2 = eval_r(m, 2j * y2).real
    if deriv == "none":
        out = N / (D1 * D2)
    else:
        R1 = eval_r(m, z, 1)
        Ns = 2.0 * np.real(1j * R1 * np.conj(R))  # d/ds |r(x + is)|^2
        dD1 = np.real(2j * eval_r(m, 2j * y1, 1))
        dD2 = np.real(2j * eval_r(m, 2j * y2, 1))
        if deriv == "d1":
            out = Ns / (D1 * D2) - N * dD1 / (D1**2 * D2)
        elif deriv == "d2":
            out = Ns / (D1 * D2) - N * dD2 / (D1 * D2**2)
        else:
            R2 = eval_r(m, z, 2)
            Nss = 2.0 * np.real(-R2 * np.conj(R)) + 2.0 * np.abs(R1) ** 2
            out = (Nss / (D1 * D2) - Ns * dD2 / (D1 * D2**2) - Ns * dD1 / (D1**2 * D2)
                   + N * dD1 * dD2 / (D1**2 * D2**2))
    return float(out) if np.ndim(x) == 0 else out


def _drift(m: SpectralMeasure, y: float) -> tuple[float, float]:
    """(r(2iy), -i r'(2iy) / r(2iy)); the second is real, equal to -2 pi mu(y)."""
    r0 = eval_r(m, 2j * y)
    r1 = eval_r(m, 2j * y, 1)
    c = -1j * r1 / r0
    if abs(c.imag) > 1e-10 * (1.0 + abs(c.real)) or abs(r0.imag) > 1e-10 * abs(r0.real):
        raise NumericError(f"kernel derivative at 2i*{y} is not purely imaginary")
    return r0.real, c.real


def l_k(m: SpectralMeasure, y: float, k: int, lam):
    """l^y_k(lam) = (2 / r(2iy)^k) (-i k r'(2iy) / r(2iy) + pi lam)."""
    _check_height(m, y)
    r0, c = _drift(m, y)
    lam = np.asarray(lam, dtype=float)
    out = 2.0 / r0**k * (k * c + math.pi * lam)
    return float(out) if out.ndim == 0 else out


def h_k(m: SpectralMeasure, a: float, b: float, k: int, lam):
    """(l^a_k(lam) exp(2 pi a lam) - l^b_k(lam) exp(2 pi b lam))^2."""
    lam = np.asarray(lam, dtype=float)
    out = (l_k(m, a, k, lam) * np.exp(TWO_PI * a * lam)
           - l_k(m, b, k, lam) * np.exp(TWO_PI * b * lam)) ** 2
    return float(out) if out.ndim == 0 else out


def psi(m: SpectralMeasure, y: float) -> float:
    """Zero of lam -> l^y_1(lam), namely 2 mu(y)."""
    _, mean, _ = _tilted_stats(m, y)
    return 2.0 * mean


def h1_real_zeros(m: SpectralMeasure, a: float, b: float) -> tuple[float, float]:
    """The two real roots z1 < psi(a) < psi(b) < z2 of h^{a,b}_1."""
    if not a < b:
        raise DomainError("need a < b")
    if m.is_single_atom:
        raise DomainError("degenerate measure")
    m0a, mua, _ = _tilted_stats(m, a)
    m0b, mub, _ = _tilted_stats(m, b)
    pa, pb = 2 * mua, 2 * mub
    A, B = TWO_PI / m0a, TWO_PI / m0b
    gap = TWO_PI * (b - a)
    # the difference of the two terms, rescaled by exp(-2 pi a lam) or exp(-2 pi b lam)
    left = lambda t: A * (t - pa) - B * (t - pb) * math.exp(gap * t)
    right = lambda t: A * (t - pa) * math.exp(-gap * t) - B * (t - pb)

    def bracket(fun, start, direction):
        step = max(1.0, abs(start))
        while step < 1e6 + abs(start):
            t = start + direction * step
            if fun(t) < 0:
                return t
            step *= 2
        raise ConvergenceError("could not bracket a root of h_1")

    lo = bracket(left, pa, -1)
    hi = bracket(right, pb, +1)
    z1 = optimize.brentq(left, lo, pa, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=500)
    z2 = optimize.brentq(right, pb, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=500)
    return z1, z2


# ------------------------------------------------------------------ variance series

@dataclass(frozen=True)
class SeriesTerm:
    k: int
    value: float
    method: str = "grid_quadrature"


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms: tuple[SeriesTerm, ...]
    tail_bound: float
    partial_sum: float

    def __iter__(self):
        # unpacks as (value, terms, tail_bound)
        return iter((self.value, list(self.terms), self.tail_bound))


class _TiltedLaw:
    """Normalized tilted density exp(2 pi c lam) p / r(ic) with its convolution powers."""

    def __init__(self, m: SpectralMeasure, c: float, k_max: int):
        t = normalized(tilt(m, c))
        self.mean = _tilted_stats(m, c / 2)[1]
        self.mass = eval_r(m, 1j * c).real
        self.powers = [g for _, g in density_powers(t.density, k_max, trim=POWER_TRIM)]

    def power(self, k: int) -> GridDensity:
        return self.powers[k - 1]


def _require_density(m: SpectralMeasure, a: float, b: float) -> None:
    if m.has_atoms:
        raise DomainError("the variance series needs an atom-free measure")
    if m.singular_flag or m.density is None:
        raise DomainError("the variance series needs a measure with a density")
    if not a < b:
        raise DomainError("need a < b")
    _check_height(m, a)
    _check_height(m, b)


def _tail(last_k: int, last_value: float) -> float:
    """Sum over k > last_k of c k^(-3/2), with c fitted to the last term."""
    c = last_value * last_k**1.5
    return float(c * special.zeta(1.5, last_k + 1))


def _aligned(g1: GridDensity, g2: GridDensity):
    """Both densities on the union of their (common-lattice) grids."""
    h = g1.h
    o = int(round((g2.grid_min - g1.grid_min) / h))
    lo = min(0, o)
    hi = max(g1.n, o + g2.n)
    v1 = np.zeros(hi - lo)
    v2 = np.zeros(hi - lo)
    v1[-lo : -lo + g1.n] = g1.values
    v2[o - lo : o - lo + g2.n] = g2.values
    mids = g1.grid_min + (np.arange(lo, hi) + 0.5) * h
    return mids, v1, v2


def linear_limit_L1(m: SpectralMeasure, a: float, b: float, k_max: int = DEFAULT_KMAX,
                    extrapolate: bool = True) -> tuple[float, float]:
    """lim V(T)/T for the window [0, T] x [a, b]; returns (L1, tail_bound)."""
    res = _linear_limit_series(m, a, b, k_max, extrapolate)
    return res.value, res.tail_bound


def _linear_limit_series(m, a, b, k_max, extrapolate=True) -> SeriesResult:
    if m.density is None or m.singular_flag:
        raise CondL2Error("the measure has no square-integrable density")
    for y in (a, b):
        chk = check_cond_L2(m, y)
        if not chk:
            raise CondL2Error(f"square-integrability fails at y={y}: {chk.diagnostic}")
    _require_density(m, a, b)
    la = _TiltedLaw(m, 2 * a, k_max)
    lb = _TiltedLaw(m, 2 * b, k_max)
    terms = []
    for k in range(1, k_max + 1):
        lam, ga, gb = _aligned(la.power(k), lb.power(k))
        # L_y(2 lam) = 4 pi (lam - k mu(y)) is l^y_k(2 lam) r(2iy)^k
        diff = 4 * math.pi * ((lam - k * la.mean) * ga - (lam - k * lb.mean) * gb)
        val = NORM * math.fsum(diff**2) * la.power(k).h / k**2
        terms.append(SeriesTerm(k, val))
    return _finish(terms, extrapolate)


def _finish(terms: list[SeriesTerm], extrapolate: bool) -> SeriesResult:
    partial = math.fsum(t.value for t in terms)
    tail = _tail(terms[-1].k, terms[-1].value)
    value = partial + tail if extrapolate else partial
    return SeriesResult(value, tuple(terms), tail, partial)


class _FejerCellKernel:
    """Cell-pair integrals of K_T(u) = T sinc^2(pi T u) on a grid of spacing h.

    kc[d] = integral of K_T(u) max(h - |u - d h|, 0) du, so that for piecewise
    constant densities iint K_T(lam - tau) phi(lam) psi(tau) equals
    sum_ij phi_i psi_j kc[i - j].
    """

    def __init__(self, T: float, h: float):
        self.T, self.h = T, h
        n = 16 + 8 * math.ceil(T * h)
        x, w = np.polynomial.legendre.leggauss(n)
        # nodes on [0, 1] for each half of the triangle
        self.x = 0.5 * (x + 1.0)
        self.w = 0.5 * w
        self.kc = np.zeros(0)

    def get(self, n: int) -> np.ndarray:
        """kc[d] for d = -(n-1)..(n-1)."""
        if self.kc.size < n:
            d = np.arange(max(n, 2 * self.kc.size))[:, None]
            h, T = self.h, self.T
            # left half u = (d - 1 + x) h with weight x h; right half u = (d + x) h, weight (1 - x) h
            ul = (d - 1 + self.x[None, :]) * h
            ur = (d + self.x[None, :]) * h
            kl = T * np.sinc(T * ul) ** 2
            kr = T * np.sinc(T * ur) ** 2
            self.kc = h * h * ((kl * self.x) @ self.w + (kr * (1 - self.x)) @ self.w)
        half = self.kc[:n]
        return np.concatenate([half[:0:-1], half])

    def form(self, phi: np.ndarray, psi: np.ndarray) -> float:
        """sum_ij phi_i psi_j kc[i - j] for arrays on the same grid."""
        n = phi.size
        conv = fftconvolve(psi, self.get(n))
        return float(np.dot(phi, conv[n - 1 : 2 * n - 1]))


def _centered_square_form(K: _FejerCellKernel, g: GridDensity, centre: float,
                          alpha: float, beta: float) -> float:
    """iint K (w + alpha)(w + beta) g(lam) g(tau), w = (lam - centre) + (tau - centre)."""
    u = g.midpoints - centre
    G, uG, u2G = g.values, u * g.values, u * u * g.values
    p00 = K.form(G, G)
    p10 = K.form(uG, G)
    p11 = K.form(uG, uG)
    p20 = K.form(u2G, G)
    w2 = 2 * p20 + 2 * p11
    w1 = 2 * p10
    return w2 + (alpha + beta) * w1 + alpha * beta * p00


def v_asymptotic(m: SpectralMeasure, a: float, b: float, T: float,
                 k_max: int = DEFAULT_KMAX, extrapolate: bool = True) -> SeriesResult:
    """Series prediction of V(T)/T for the window [0, T] x [a, b].

    Unpacks as (value, terms, tail_bound).
    """
    _require_density(m, a, b)
    if not T > 0:
        raise DomainError("T must be positive")
    la = _TiltedLaw(m, 2 * a, k_max)
    lb = _TiltedLaw(m, 2 * b, k_max)
    lab = _TiltedLaw(m, a + b, k_max)
    q0 = lab.mass**2 / (la.mass * lb.mass)
    K = _FejerCellKernel(T, m.density.h)
    c4 = 4 * math.pi**2
    terms = []
    for k in range(1, k_max + 1):
        aa = c4 * _centered_square_form(K, la.power(k), k * la.mean, 0.0, 0.0)
        bb = c4 * _centered_square_form(K, lb.power(k), k * lb.mean, 0.0, 0.0)
        # L_a(s) L_b(s) with s = 2 k mu_ab + w
        alpha = 2 * k * (lab.mean - la.mean)
        beta = 2 * k * (lab.mean - lb.mean)
        ab = c4 * _centered_square_form(K, lab.power(k), k * lab.mean, alpha, beta)
        val = aa + bb - 2 * q0**k * ab
        if val < 0:
            if val < -1e-10 * (aa + bb):
                raise NumericError(f"negative series term {val} at k={k}")
            val = 0.0
        terms.append(SeriesTerm(k, NORM * val / k**2))
    return _finish(terms, extrapolate)


# ------------------------------------------------------------------ quadratic regime

@dataclass(frozen=True)
class QuadraticEstimate:
    value: float
    se: float
    closed_form: float | None = None

    def __float__(self) -> float:
        return self.value


def two_atom_L2(m: SpectralMeasure, a: float, b: float) -> float:
    """Variance of the limiting zero density for a purely two-atom measure.

    With atoms (l1, w1), (l2, w2), l1 < l2, all zeros lie on the line
    y* = -(log(w2/w1)/2 + log|xi2/xi1|) / (2 pi (l2 - l1)), spaced 1/(l2 - l1).
    Since log(|xi2|^2/|xi1|^2) is standard logistic, P(a < y* < b) is a
    difference of logistic functions, and the limit Z = (l2 - l1) 1{a < y* < b}.
    """
    if len(m.atoms) != 2 or m.density is not None or m.singular_flag:
        raise DomainError("closed form needs exactly two atoms and nothing else")
    (l1, w1), (l2, w2) = sorted(m.atoms)
    gap = l2 - l1
    shift = math.log(w2 / w1)
    u_hi = -2 * TWO_PI * gap * a - shift
    u_lo = -2 * TWO_PI * gap * b - shift
    p = special.expit(u_hi) - special.expit(u_lo)
    return float(gap**2 * p * (1 - p))


def quadratic_coeff_estimate(m: SpectralMeasure, a: float, b: float,
                             T_list: Sequence[float] = (25.0, 50.0, 100.0),
                             replications: int = 1000, base_seed: int = 0,
                             n_modes: int = 1024) -> QuadraticEstimate:
    """lim V(T)/T^2 by Monte Carlo with a first-order extrapolation in 1/T.

    V(T)/T^2 = L2 + c/T + ..., so the two largest windows give
    L2 ~ (T2 q2 - T1 q1) / (T2 - T1).  Atom-free measures return 0.
    """
    if not m.has_atoms or m.is_single_atom:
        return QuadraticEstimate(0.0, 0.0, 0.0)
    from .harness import ExperimentConfig, run_ensemble

    cfg = ExperimentConfig(measure=m, a=a, b=b, T_list=tuple(T_list),
                           replications=replications, n_modes=n_modes, base_seed=base_seed)
    st = run_ensemble(cfg)
    T1, T2 = st.T[-2], st.T[-1]
    q1, q2 = st.var[-2] / T1**2, st.var[-1] / T2**2
    s1, s2 = st.var_se[-2] / T1**2, st.var_se[-1] / T2**2
    val = (T2 * q2 - T1 * q1) / (T2 - T1)
    se = math.hypot(T2 * s2, T1 * s1) / (T2 - T1)
    closed = None
    if len(m.atoms) == 2 and m.density is None:
        closed = two_atom_L2(m, a, b)
    return QuadraticEstimate(max(val, 0.0), se, closed)


# ------------------------------------------------------------------ classification

REGIMES = ("Quadratic", "Linear", "Superlinear", "Undetermined")


@dataclass
class RegimeReport:
    regime: str
    fired_condition: str
    L1: float | None = None
    L2: float | None = None
    k_truncation: int = DEFAULT_KMAX
    tail_bound: float = 0.0
    a: float | None = None
    b: float | None = None
    note: str = ""

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return dumps_json(self.to_dict())

    def line(self) -> str:
        return f"{self.regime} ({self.fired_condition})"


def classify_regime(m: SpectralMeasure, a: float, b: float,
                    k_max: int = DEFAULT_KMAX, with_limits: bool = True) -> RegimeReport:
    """Decide the variance growth regime of counts in [0, T] x [a, b]."""
    if m.is_single_atom or m.degenerate:
        raise DomainError("degenerate measure: the function has no zeros")
    if not a < b:
        raise DomainError("need a < b")
    _check_height(m, a)
    _check_height(m, b)
    rep = RegimeReport("Undetermined", "Remark:gap", k_truncation=k_max, a=a, b=b)
    if m.has_atoms:
        rep.regime, rep.fired_condition = "Quadratic", "Thm1:atom"
        if with_limits and len(m.atoms) == 2 and m.density is None and not m.singular_flag:
            rep.L2 = two_atom_L2(m, a, b)
        return rep
    if m.singular_flag or m.density is None:
        rep.regime, rep.fired_condition = "Superlinear", "Thm3:no-density"
        rep.L1 = math.inf
        return rep
    if check_cond_L2(m, a) and check_cond_L2(m, b):
        rep.regime, rep.fired_condition = "Linear", "Thm2:condL2"
        if with_limits:
            rep.L1, rep.tail_bound = linear_limit_L1(m, a, b, k_max)
        return rep
    # non-L2 behaviour that survives removing any two small intervals
    bad_points = {loc for loc, alpha in m.density.singularities if alpha >= 0.5}
    if len(bad_points) >= 3:
        rep.regime, rep.fired_condition = "Superlinear", "Thm3:condInf"
        rep.L1 = math.inf
        rep.note = ("superlinear except possibly for finitely many heights a, b; "
                    "the exceptional set is not characterized")
        return rep
    rep.note = "neither the square-integrability nor the localization condition decides this case"
    return rep


# ------------------------------------------------------------------ identities

def dilog(x: float) -> float:
    """Li_2(x) for 0 <= x < 1 via the power series and Euler's reflection."""
    if not 0.0 <= x < 1.0:
        raise DomainError("dilog argument must lie in [0, 1)")
    if x > 0.5:
        y = 1.0 - x
        return math.pi**2 / 6 - math.log(x) * math.log(y) - dilog(y)
    terms = []
    p = x
    k = 1
    while p > 0:
        t = p / (k * k)
        terms.append(t)
        if t < 1e-18 * terms[0]:
            break
        k += 1
        p *= x
    return math.fsum(terms)


def log_cov_series(theta: float) -> float:
    """cov(log|xi|, log|eta|) = (1/4) sum theta^(2k)/k^2 for |E xi conj(eta)| = theta."""
    if not 0.0 <= theta < 1.0:
        raise DomainError("theta must lie in [0, 1)")
    return 0.25 * dilog(theta * theta)


def _panels(lo: float, hi: float, length: float, n: int = 32):
    x, w = np.polynomial.legendre.leggauss(n)
    k = max(1, math.ceil((hi - lo) / length))
    edges = np.linspace(lo, hi, k + 1)
    half = 0.5 * np.diff(edges)[:, None]
    mid = 0.5 * (edges[1:] + edges[:-1])[:, None]
    return (mid + half * x).ravel(), (half * w).ravel()


def fejer_parseval_check(gamma: SpectralMeasure, T: float) -> tuple[float, float]:
    """Both sides of  int (1 - |x|/2T) Re F[gamma](x) dx = int 2T sinc^2(2 pi T xi) d gamma."""
    locs, masses = gamma.nodes()
    lam_max = float(np.max(np.abs(locs))) if locs.size else 0.0
    x, w = _panels(0.0, 2 * T, min(0.5, 0.25 / max(lam_max, 1e-3)))
    F = fourier_density(gamma, x).real
    lhs = 2.0 * math.fsum(w * (1 - x / (2 * T)) * F)
    rhs = math.fsum(masses * 2 * T * np.sinc(2 * T * locs) ** 2)
    return lhs, rhs


@dataclass(frozen=True)
class BallEnergy:
    values: list
    energy: float
    infinite: bool

    def __iter__(self):
        return iter((self.values, self.energy))


def _band_kernel(eps: float, h: float, dmax: int) -> np.ndarray:
    """Cell-pair integrals of 1{|u| < eps} on a grid of spacing h, d = -dmax..dmax."""

    def F(v):  # antiderivative of the triangle max(h - |v|, 0)
        v = np.clip(v, -h, h)
        return np.where(v <= 0, 0.5 * (v + h) ** 2, h * h - 0.5 * (h - v) ** 2)

    d = np.arange(-dmax, dmax + 1) * h
    return F(eps - d) - F(-eps - d)


def mu_ball_energy_limit(mu: SpectralMeasure, eps_list: Iterable[float]) -> BallEnergy:
    """(1/2eps) int mu(tau - eps, tau + eps) d mu(tau) for each eps, and int |F[mu]|^2.

    The density is read as piecewise constant on its cells, for which the
    energy is sum p_i^2 h exactly (Plancherel).  Atoms make the energy
    infinite.
    """
    eps = [float(e) for e in eps_list]
    if any(e <= 0 for e in eps) or any(e2 >= e1 for e1, e2 in zip(eps, eps[1:])):
        raise DomainError("eps_list must be decreasing positive reals")
    d = mu.density
    al, aw = mu.atom_locations, mu.atom_masses
    values = []
    for e in eps:
        tot = 0.0
        if d is not None:
            dmax = min(d.n - 1, math.ceil(e / d.h) + 1)
            kc = _band_kernel(e, d.h, dmax)
            conv = np.convolve(d.values, kc, mode="same") if d.n >= kc.size else \
                np.convolve(d.values, kc)[dmax : dmax + d.n]
            tot += float(np.dot(d.values, conv))
        if al.size:
            diff = np.abs(al[:, None] - al[None, :])
            tot += float(np.sum(np.outer(aw, aw)[diff < e]))
            if d is not None:
                edges = d.grid_min + d.h * np.arange(d.n + 1)
                cdf = np.concatenate([[0.0], np.cumsum(d.masses)])
                near = np.interp(al + e, edges, cdf) - np.interp(al - e, edges, cdf)
                tot += 2.0 * float(np.dot(aw, near))
        values.append(tot / (2 * e))
    if al.size:
        return BallEnergy(values, math.inf, True)
    energy = float(math.fsum(d.values**2) * d.h) if d is not None else 0.0
    return BallEnergy(values, energy, False)


def clt_decay_check(g, m_max: int = 64) -> list[tuple[int, float]]:
    """sqrt(m) int |F[g]|^m dx for m = 2..m_max, g normalized to mass one.

    F is taken for the midpoint-atom reading of the grid, which is periodic
    with period 1/h; the integral runs over one period (the grid bandwidth),
    where the trapezoid rule is spectrally accurate.
    """
    if isinstance(g, SpectralMeasure):
        g = g.density
    if g is None:
        raise DomainError("need a grid density")
    masses = g.masses / g.mass
    n_pad = 1
    while n_pad < max(8 * g.n, 5 * math.sqrt(m_max) / g.h):
        n_pad *= 2
    F = np.abs(np.fft.fft(masses, n_pad))
    dx = 1.0 / (n_pad * g.h)
    out = []
    for m in range(2, m_max + 1):
        out.append((m, math.sqrt(m) * float(np.sum(F**m)) * dx))
    return out
