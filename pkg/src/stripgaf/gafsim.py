"""Sampling stationary Gaussian analytic functions in a strip.

A realization is a finite random-wave sum

    f(z) = sum_j sqrt(w_j) xi_j exp(-2 pi i lam_j z),

with i.i.d. standard complex Gaussians xi_j, so that
E f(z) conj(f(w)) = sum_j w_j exp(-2 pi i lam_j (z - conj w)) = r(z - conj w).

Two discretizations of a density are offered.  "equal_mass" bins the density
into cells of equal mass and puts one mode at each cell centroid.
"uniform" keeps every s-th grid midpoint with weight p(lam) * s * h; the
resulting kernel is exactly periodic in x with period 1/(s h), which makes
the process exact in law on windows shorter than that period (minus the
correlation length), and lets a horizontal line be evaluated with one FFT.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .spectral import TWO_PI, SpectralMeasure

# cells of a trimmed density below this fraction of the peak get no mode
UNIFORM_TRIM = 1e-16


@dataclass(frozen=True, eq=False)
class ModeSet:
    frequencies: np.ndarray
    weights: np.ndarray
    source: SpectralMeasure | None = None
    spacing: float | None = None  # lattice step when the modes sit on a uniform lattice
    strip_half_width: float = math.inf

    def __post_init__(self):
        f = np.ascontiguousarray(self.frequencies, dtype=float)
        w = np.ascontiguousarray(self.weights, dtype=float)
        if f.shape != w.shape or f.ndim != 1:
            raise DomainError("frequencies and weights must be 1-d arrays of equal length")
        if np.any(w <= 0) or not np.all(np.isfinite(w)):
            raise DomainError("mode weights must be positive and finite")
        f.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "frequencies", f)
        object.__setattr__(self, "weights", w)

    @property
    def n(self) -> int:
        return self.frequencies.size

    @property
    def period(self) -> float:
        """Spatial period of the kernel for lattice mode sets (inf otherwise)."""
        return 1.0 / self.spacing if self.spacing else math.inf


@dataclass(frozen=True, eq=False)
class GafRealization:
    modes: ModeSet
    coefficients: np.ndarray
    seed: int

    @property
    def amplitudes(self) -> np.ndarray:
        """sqrt(w_j) xi_j."""
        return np.sqrt(self.modes.weights) * self.coefficients


def _equal_mass_bins(grid_min: float, h: float, values: np.ndarray, n_bins: int):
    """Centroids and masses of n_bins equal-mass cells of a piecewise-constant density."""
    cell_mass = values * h
    edges = grid_min + h * np.arange(values.size + 1)
    cdf = np.concatenate([[0.0], np.cumsum(cell_mass)])
    # first moment of each cell, cumulated: int lam p(lam) dlam
    cell_m1 = values * 0.5 * (edges[1:] ** 2 - edges[:-1] ** 2)
    m1 = np.concatenate([[0.0], np.cumsum(cell_m1)])
    total = cdf[-1]
    q = total * np.arange(n_bins + 1) / n_bins
    q[-1] = total

    def first_moment_at(qq):
        # locate the cell containing cumulative mass qq, then integrate linearly inside it
        i = np.clip(np.searchsorted(cdf, qq, side="right") - 1, 0, values.size - 1)
        p = values[i]
        with np.errstate(divide="ignore", invalid="ignore"):
            x = np.where(p > 0, edges[i] + (qq - cdf[i]) / np.where(p > 0, p, 1.0), edges[i])
        x = np.minimum(x, edges[i + 1])
        return m1[i] + p * 0.5 * (x**2 - edges[i] ** 2)

    mq = first_moment_at(q)
    mass = np.diff(q)
    centroid = np.diff(mq) / mass
    return centroid, mass


def discretize_measure(m: SpectralMeasure, n_modes: int, scheme: str = "equal_mass") -> ModeSet:
    """Turn a measure into a finite mode set with the same total mass."""
    if m.singular_flag:
        raise DomainError("singular continuous parts cannot be sampled")
    if n_modes < 1:
        raise DomainError("n_modes must be positive")
    freqs = [m.atom_locations]
    weights = [m.atom_masses]
    spacing = None
    d = m.density
    if d is not None:
        n_avail = n_modes - len(m.atoms)
        if n_avail < 1:
            raise DomainError(f"n_modes={n_modes} leaves no modes for the density")
        if scheme == "equal_mass":
            c, w = _equal_mass_bins(d.grid_min, d.h, d.values, n_avail)
            keep = w > 0
            freqs.append(c[keep])
            weights.append(w[keep])
        elif scheme == "uniform":
            v = d.values
            live = np.nonzero(v > UNIFORM_TRIM * v.max())[0]
            i0, i1 = int(live[0]), int(live[-1])
            stride = max(1, math.ceil((i1 - i0 + 1) / n_avail))
            # anchor the lattice at the cell nearest the density's centre of mass
            mids = d.midpoints
            centre = int(np.clip(np.round((np.dot(mids, v) / v.sum() - d.grid_min) / d.h - 0.5), i0, i1))
            idx = np.arange(centre - stride * ((centre - i0) // stride), i1 + 1, stride)
            while idx.size > n_avail:
                idx = idx[1:] if v[idx[0]] <= v[idx[-1]] else idx[:-1]
            idx = idx[v[idx] > 0]
            w = v[idx] * d.h * stride
            w *= d.mass / w.sum()
            freqs.append(mids[idx])
            weights.append(w)
            if not m.has_atoms:
                spacing = stride * d.h
        else:
            raise DomainError(f"unknown discretization scheme {scheme!r}")
    f = np.concatenate(freqs)
    w = np.concatenate(weights)
    order = np.argsort(f, kind="stable")
    return ModeSet(f[order], w[order], source=m, spacing=spacing,
                   strip_half_width=m.strip_half_width)


def coefficients_for_seed(n: int, seed: int) -> np.ndarray:
    """xi_j for j < n from a Philox stream keyed by seed; prefix-consistent in n."""
    bits = np.random.Philox(key=int(seed) % 2**64)
    z = np.random.Generator(bits).standard_normal(2 * n)
    return (z[0::2] + 1j * z[1::2]) * math.sqrt(0.5)


def sample_realization(ms: ModeSet, seed: int) -> GafRealization:
    return GafRealization(ms, coefficients_for_seed(ms.n, seed), int(seed) % 2**64)


def _check_domain(g: GafRealization, y) -> None:
    lim = g.modes.strip_half_width
    if np.size(y) and not float(np.max(np.abs(y))) < lim:
        raise DomainError(f"|Im z| must be below the strip half-width {lim}")


def eval_f(g: GafRealization, z, order: int = 0):
    """f(z) or f'(z) at scalar or array z."""
    if order not in (0, 1):
        raise DomainError("order must be 0 or 1")
    za = np.asarray(z, dtype=complex)
    _check_domain(g, za.imag)
    lam = g.modes.frequencies
    amp = g.amplitudes
    if order:
        amp = amp * (-1j * TWO_PI * lam)
    flat = za.ravel()
    out = np.empty(flat.size, dtype=complex)
    step = max(1, 2**21 // max(1, lam.size))
    for s in range(0, flat.size, step):
        out[s : s + step] = np.exp(-1j * TWO_PI * flat[s : s + step, None] * lam[None, :]) @ amp
    return complex(out[0]) if np.ndim(z) == 0 else out.reshape(za.shape)


def line_fft_size(ms: ModeSet, max_dx: float) -> int:
    """Smallest power-of-two FFT length whose sample spacing is at most max_dx."""
    if ms.spacing is None:
        raise DomainError("FFT line evaluation needs a lattice mode set")
    span = np.ptp(ms.frequencies) / ms.spacing + 1
    m = 1
    while m < span or ms.period / m > max_dx:
        m *= 2
    return m


def eval_line_fft(g: GafRealization, y: float, m: int) -> tuple[np.ndarray, np.ndarray]:
    """f(x + iy) on x = n * P / m, n = 0..m-1, where P is the kernel period.

    One FFT of length m; requires a lattice mode set and m >= lattice span.
    """
    ms = g.modes
    if ms.spacing is None:
        raise DomainError("FFT line evaluation needs a lattice mode set")
    _check_domain(g, np.array([y]))
    lam = ms.frequencies
    j = np.rint((lam - lam[0]) / ms.spacing).astype(np.int64)
    offset = lam[0]
    if j[-1] + 1 > m:
        raise DomainError("FFT length shorter than the mode lattice")
    buf = np.zeros(m, dtype=complex)
    np.add.at(buf, j % m, g.amplitudes * np.exp(TWO_PI * y * lam))
    vals = np.fft.fft(buf)
    x = np.arange(m) * (ms.period / m)
    if offset != 0.0:
        vals = vals * np.exp(-1j * TWO_PI * offset * x)
    return x, vals
