"""Spectral measures and the measure-level primitives built on them.

A spectral measure is stored as a finite list of atoms plus an optional
density sampled at the midpoints of a uniform grid.  The covariance kernel
of the associated process is

    r(z) = integral of exp(-2 pi i z lam) d rho(lam),

so that r(2iy) = integral of exp(4 pi y lam) d rho is real and positive.
Quadrature over the density is the midpoint rule: every grid cell acts as a
point mass values[i] * h sitting at its midpoint.  Symbolic annotations on the
density (local singular exponents, tail class) are carried alongside the
samples because L2 membership cannot be read off a finite grid.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, replace
from typing import Any, Iterable, Sequence

import numpy as np
from scipy.signal import fftconvolve

from .errors import ConfigError, DomainError, NumericError, SizeError

TWO_PI = 2.0 * math.pi
DEFAULT_H = 1.0 / 256.0
MAX_GRID_CELLS = 2**22
MAX_ATOMS = 100_000
TAIL_CLASSES = ("gaussian", "exponential", "compact")

# evaluation is chunked so that a (points x nodes) block stays below this size
_BLOCK = 2**22


@dataclass(frozen=True, eq=False)
class GridDensity:
    """Midpoint samples of a density on [grid_min, grid_min + h*len(values)].

    ``singularities`` holds (location, exponent) pairs meaning the density
    behaves like |lam - loc|^(-exponent) nearby.  ``tail`` is one of
    "gaussian", "exponential" (with ``tail_rate``), "compact" or None; None
    means the grid is taken to cover the whole support.
    """

    grid_min: float
    h: float
    values: np.ndarray
    singularities: tuple[tuple[float, float], ...] = ()
    tail: str | None = None
    tail_rate: float | None = None

    def __post_init__(self):
        vals = np.ascontiguousarray(self.values, dtype=float)
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)
        object.__setattr__(
            self,
            "singularities",
            tuple((float(a), float(b)) for a, b in self.singularities),
        )
        if not (self.h > 0 and math.isfinite(self.h)):
            raise DomainError(f"grid spacing must be positive, got {self.h}")
        if vals.ndim != 1 or vals.size == 0:
            raise DomainError("density values must be a non-empty 1-d array")
        if not np.all(np.isfinite(vals)) or np.any(vals < 0):
            raise DomainError("density values must be finite and non-negative")
        for loc, alpha in self.singularities:
            if not 0.0 < alpha < 1.0:
                raise DomainError(f"singular exponent {alpha} at {loc} not in (0, 1)")
        if self.tail is not None and self.tail not in TAIL_CLASSES:
            raise DomainError(f"unknown tail class {self.tail!r}")
        if self.tail == "exponential":
            if self.tail_rate is None or not self.tail_rate > 0:
                raise DomainError("exponential tail needs a positive rate")

    @property
    def n(self) -> int:
        return self.values.size

    @property
    def grid_max(self) -> float:
        return self.grid_min + self.h * self.n

    @property
    def midpoints(self) -> np.ndarray:
        return self.grid_min + (np.arange(self.n) + 0.5) * self.h

    @property
    def masses(self) -> np.ndarray:
        return self.values * self.h

    @property
    def mass(self) -> float:
        return float(math.fsum(self.masses))

    @property
    def truncated(self) -> bool:
        """True when the grid cuts off an infinite tail."""
        return self.tail in ("gaussian", "exponential")

    def with_values(self, values: np.ndarray, grid_min: float | None = None) -> "GridDensity":
        return replace(
            self,
            values=values,
            grid_min=self.grid_min if grid_min is None else grid_min,
        )


@dataclass(frozen=True, eq=False)
class SpectralMeasure:
    """Atoms plus an optional grid density; the spectral measure rho."""

    atoms: tuple[tuple[float, float], ...] = ()
    density: GridDensity | None = None
    singular_flag: bool = False
    strip_half_width: float = math.inf
    degenerate: bool = False
    name: str = ""

    def __post_init__(self):
        atoms = tuple((float(l), float(w)) for l, w in self.atoms)
        object.__setattr__(self, "atoms", atoms)
        locs = [l for l, _ in atoms]
        if any(not math.isfinite(l) for l in locs):
            raise DomainError("atom locations must be finite")
        if any(not (w > 0 and math.isfinite(w)) for _, w in atoms):
            raise DomainError("atom masses must be positive and finite")
        if len(set(locs)) != len(locs):
            raise DomainError("atom locations must be distinct")
        if not self.strip_half_width > 0:
            raise DomainError("strip half-width must be positive")
        if self.total_mass <= 0 and not self.singular_flag:
            raise DomainError("measure has zero total mass")
        if self.is_single_atom and not self.degenerate:
            raise DomainError("a single-atom measure must be flagged degenerate")
        d = self.density
        if d is not None and d.tail == "exponential":
            # finite exponential moments for every |y| < delta
            if 4.0 * math.pi * self.strip_half_width > d.tail_rate * (1 + 1e-12):
                raise DomainError(
                    f"exponential tail rate {d.tail_rate} too small for strip "
                    f"half-width {self.strip_half_width}"
                )

    @property
    def atom_locations(self) -> np.ndarray:
        return np.array([l for l, _ in self.atoms], dtype=float)

    @property
    def atom_masses(self) -> np.ndarray:
        return np.array([w for _, w in self.atoms], dtype=float)

    @property
    def has_atoms(self) -> bool:
        return len(self.atoms) > 0

    @property
    def is_single_atom(self) -> bool:
        return len(self.atoms) == 1 and self.density is None and not self.singular_flag

    @property
    def total_mass(self) -> float:
        total = math.fsum(w for _, w in self.atoms)
        if self.density is not None:
            total += self.density.mass
        return float(total)

    def nodes(self) -> tuple[np.ndarray, np.ndarray]:
        """All quadrature nodes (locations, masses): atoms then density cells."""
        locs = [self.atom_locations]
        masses = [self.atom_masses]
        if self.density is not None:
            locs.append(self.density.midpoints)
            masses.append(self.density.masses)
        return np.concatenate(locs), np.concatenate(masses)


# ---------------------------------------------------------------- builtins

def gaussian(h: float = DEFAULT_H, half_width: float = 6.0, delta: float = math.inf,
             center: float = 0.0) -> SpectralMeasure:
    """Density exp(-pi (lam - center)^2); r(z) = exp(-pi z^2 - 2 pi i center z)."""
    n = 2 * int(round(half_width / h))
    grid_min = center - 0.5 * n * h
    mids = grid_min + (np.arange(n) + 0.5) * h
    dens = GridDensity(grid_min, h, np.exp(-math.pi * (mids - center) ** 2), tail="gaussian")
    return SpectralMeasure(density=dens, strip_half_width=delta, name="gaussian")


def uniform(h: float = DEFAULT_H, delta: float = math.inf) -> SpectralMeasure:
    """Density 1/2 on [-1, 1]."""
    n = 2 * int(round(1.0 / h))
    dens = GridDensity(-1.0, 2.0 / n, np.full(n, 0.5), tail="compact")
    return SpectralMeasure(density=dens, strip_half_width=delta, name="uniform")


def inv_sqrt(h: float = DEFAULT_H, delta: float = math.inf) -> SpectralMeasure:
    """Density |lam|^(-1/2) on [-1, 1], sampled by exact cell averages."""
    n = 2 * int(round(1.0 / h))
    hh = 2.0 / n
    edges = -1.0 + hh * np.arange(n + 1)
    prim = 2.0 * np.sign(edges) * np.sqrt(np.abs(edges))
    vals = np.diff(prim) / hh
    dens = GridDensity(-1.0, hh, vals, singularities=((0.0, 0.5),), tail="compact")
    return SpectralMeasure(density=dens, strip_half_width=delta, name="inv_sqrt")


def atomic(atoms: Iterable[tuple[float, float]], delta: float = math.inf, **kw) -> SpectralMeasure:
    return SpectralMeasure(atoms=tuple(atoms), strip_half_width=delta, **kw)


def two_atom(delta: float = math.inf) -> SpectralMeasure:
    """The measure (delta_{-1} + delta_{1}) / 2, with r(z) = cos(2 pi z)."""
    return atomic([(-1.0, 0.5), (1.0, 0.5)], delta=delta, name="two_atom")


BUILTINS = {"gaussian": gaussian, "uniform": uniform, "inv_sqrt": inv_sqrt}


# ---------------------------------------------------------------- checks

def _check_strip(y: float, limit: float, what: str) -> None:
    if not abs(y) < limit:
        raise DomainError(f"{what} = {y} outside the allowed range (|.| < {limit})")


def _check_truncation(m: SpectralMeasure, y: float) -> None:
    """Refuse weights exp(2 pi y lam) that push mass onto a truncated grid edge."""
    d = m.density
    if d is None or not d.truncated or d.n < 8:
        return
    logw = np.log(np.maximum(d.values, 1e-300)) + TWO_PI * y * d.midpoints
    logw[d.values == 0] = -np.inf
    top = logw.max()
    edge = max(logw[:2].max(), logw[-2:].max())
    if edge - top > math.log(1e-12):
        raise NumericError(
            f"exponential weight at y={y} moves mass to the edge of the truncated grid "
            f"[{d.grid_min}, {d.grid_max}]; widen the grid"
        )


def _fourier_sum(locs: np.ndarray, masses: np.ndarray, z: np.ndarray, order: int) -> np.ndarray:
    """sum_j masses_j (-2 pi i lam_j)^order exp(-2 pi i z lam_j) for every z."""
    z = np.asarray(z, dtype=complex)
    flat = z.ravel()
    out = np.empty(flat.size, dtype=complex)
    with np.errstate(divide="ignore"):
        logm = np.log(masses)
    coef = (-1j * TWO_PI * locs) ** order if order else None
    step = max(1, _BLOCK // max(1, locs.size))
    for s in range(0, flat.size, step):
        zz = flat[s : s + step, None]
        expo = logm[None, :] - 1j * TWO_PI * zz * locs[None, :]
        with np.errstate(over="ignore", invalid="ignore"):
            terms = np.exp(expo)
            if coef is not None:
                terms = terms * coef[None, :]
            out[s : s + step] = terms.sum(axis=1)
    if not np.all(np.isfinite(out)):
        raise NumericError("non-finite value in spectral quadrature")
    return out.reshape(z.shape)


# ---------------------------------------------------------------- operations

def eval_r(m: SpectralMeasure, z, order: int = 0):
    """r^(order)(z) for scalar or array z with |Im z| < 2*delta."""
    if order not in (0, 1, 2):
        raise DomainError("order must be 0, 1 or 2")
    if m.singular_flag and m.total_mass == 0:
        raise DomainError("cannot evaluate the kernel of a purely singular measure")
    za = np.asarray(z, dtype=complex)
    if za.size:
        ymax = float(np.max(np.abs(za.imag)))
        _check_strip(ymax, 2 * m.strip_half_width, "|Im z|")
        _check_truncation(m, float(np.max(za.imag)))
        _check_truncation(m, float(np.min(za.imag)))
    locs, masses = m.nodes()
    out = _fourier_sum(locs, masses, za, order)
    return complex(out) if np.ndim(z) == 0 else out


def fourier_density(m: SpectralMeasure, x_grid) -> np.ndarray:
    """F[rho](x) = integral of exp(-2 pi i x lam) d rho at real x."""
    x = np.asarray(x_grid, dtype=float)
    locs, masses = m.nodes()
    return _fourier_sum(locs, masses, x.astype(complex), 0)


def exp_moment(m: SpectralMeasure, y: float, j: int) -> float:
    """m_j(y) = integral of lam^j exp(4 pi y lam) d rho."""
    if j not in (0, 1, 2):
        raise DomainError("moment order must be 0, 1 or 2")
    _check_strip(2 * y, 2 * m.strip_half_width, "2y")
    _check_truncation(m, 2 * y)
    locs, masses = m.nodes()
    with np.errstate(divide="ignore"):
        logw = np.log(masses) + 2 * TWO_PI * y * locs
    shift = float(np.max(logw))
    w = np.exp(logw - shift)
    val = math.fsum(w * locs**j) * math.exp(shift)
    if not math.isfinite(val):
        raise NumericError(f"moment m_{j}({y}) is not finite")
    return val


def moments(m: SpectralMeasure, y: float) -> tuple[float, float, float]:
    """(m0, m1, m2) at height y, computed in one pass."""
    _check_strip(2 * y, 2 * m.strip_half_width, "2y")
    _check_truncation(m, 2 * y)
    locs, masses = m.nodes()
    with np.errstate(divide="ignore"):
        logw = np.log(masses) + 2 * TWO_PI * y * locs
    shift = float(np.max(logw))
    w = np.exp(logw - shift)
    scale = math.exp(shift)
    out = (math.fsum(w) * scale, math.fsum(w * locs) * scale, math.fsum(w * locs**2) * scale)
    if not all(math.isfinite(v) for v in out):
        raise NumericError(f"moments at y={y} are not finite")
    return out


def tilt(m: SpectralMeasure, y: float) -> SpectralMeasure:
    """The reweighted measure exp(2 pi y lam) d rho(lam)."""
    _check_strip(y, 2 * m.strip_half_width, "y")
    if y == 0:
        return m
    _check_truncation(m, y)
    atoms = tuple((l, w * math.exp(TWO_PI * y * l)) for l, w in m.atoms)
    density = None
    if m.density is not None:
        d = m.density
        density = d.with_values(d.values * np.exp(TWO_PI * y * d.midpoints))
    delta = m.strip_half_width - abs(y) / 2 if math.isfinite(m.strip_half_width) else math.inf
    return replace(m, atoms=atoms, density=density, strip_half_width=delta)


def normalized(m: SpectralMeasure) -> SpectralMeasure:
    """Rescale to total mass one."""
    c = 1.0 / m.total_mass
    atoms = tuple((l, w * c) for l, w in m.atoms)
    density = None if m.density is None else m.density.with_values(m.density.values * c)
    return replace(m, atoms=atoms, density=density)


def _density_power_step(acc: GridDensity, base: GridDensity, max_cells: int) -> GridDensity:
    """One more convolution with ``base``; both grids share the spacing h."""
    n_out = acc.n + base.n - 1
    if n_out > max_cells:
        raise SizeError(f"convolution grid of {n_out} cells exceeds {max_cells}")
    target = acc.mass * base.mass
    vals = fftconvolve(acc.values, base.values) * base.h
    np.maximum(vals, 0.0, out=vals)
    s = math.fsum(vals) * base.h
    if s > 0:
        vals *= target / s
    # midpoints add, so the first cell midpoint is the sum of the first midpoints
    grid_min = acc.grid_min + base.grid_min + 0.5 * base.h
    return acc.with_values(vals, grid_min=grid_min)


def density_powers(d: GridDensity, k_max: int, trim: float = 0.0,
                   max_cells: int = MAX_GRID_CELLS):
    """Yield (k, d^{*k}) for k = 1..k_max.

    With ``trim`` > 0 cells below trim * max are dropped from both ends after
    each step; this keeps high powers affordable when tails are negligible.
    """
    acc = d
    for k in range(1, k_max + 1):
        if k > 1:
            acc = _density_power_step(acc, d, max_cells)
            if trim > 0:
                acc = trim_density(acc, trim)
        yield k, acc


def trim_density(d: GridDensity, rel: float) -> GridDensity:
    """Drop leading/trailing cells whose value is below rel * max."""
    v = d.values
    keep = np.nonzero(v > rel * v.max())[0]
    if keep.size == 0:
        return d
    i0, i1 = int(keep[0]), int(keep[-1]) + 1
    if i0 == 0 and i1 == d.n:
        return d
    return d.with_values(v[i0:i1].copy(), grid_min=d.grid_min + i0 * d.h)


def _atom_power(atoms: Sequence[tuple[float, float]], k: int) -> list[dict]:
    """Atom parts of A^{*j} for j = 0..k as {location: mass} dicts."""
    out = [{0.0: 1.0}]
    for _ in range(k):
        nxt: dict[float, float] = {}
        for l0, w0 in out[-1].items():
            for l1, w1 in atoms:
                key = l0 + l1
                nxt[key] = nxt.get(key, 0.0) + w0 * w1
        if len(nxt) > MAX_ATOMS:
            raise SizeError(f"atom convolution produced more than {MAX_ATOMS} atoms")
        out.append(nxt)
    return out


def _resample(d: GridDensity, shift: float, grid_min: float, n: int) -> np.ndarray:
    """Values of d translated by ``shift`` on the grid (grid_min, d.h, n)."""
    src = d.midpoints + shift
    dst = grid_min + (np.arange(n) + 0.5) * d.h
    vals = np.interp(dst, src, d.values, left=0.0, right=0.0)
    s = vals.sum() * d.h
    if s > 0:
        vals *= d.mass / s
    return vals


def convolve_power(m: SpectralMeasure, k: int, max_cells: int = MAX_GRID_CELLS) -> SpectralMeasure:
    """The k-fold convolution rho^{*k}, renormalized to total mass mass^k."""
    if k < 1:
        raise DomainError("k must be a positive integer")
    if m.singular_flag:
        raise DomainError("convolution powers of singular parts are not supported")
    if k == 1:
        return m
    apow = _atom_power(m.atoms, k) if m.has_atoms else None
    atoms: list[tuple[float, float]] = []
    if apow is not None:
        atoms = sorted(apow[k].items())
    density = None
    if m.density is not None:
        d = m.density
        dpow = {kk: g for kk, g in density_powers(d, k, max_cells=max_cells)}
        top = dpow[k]
        if apow is None:
            density = top
        else:
            # mixed terms C(k,j) A^{*j} * D^{*(k-j)} are shifted copies of D^{*(k-j)}
            pieces = [(1.0, 0.0, top)]
            for j in range(1, k):
                c = math.comb(k, j)
                for loc, w in apow[j].items():
                    pieces.append((c * w, loc, dpow[k - j]))
            lo = min(p[1] + p[2].grid_min for p in pieces)
            hi = max(p[1] + p[2].grid_max for p in pieces)
            h = d.h
            i_lo = math.floor((lo - top.grid_min) / h)
            i_hi = math.ceil((hi - top.grid_min) / h)
            n = i_hi - i_lo
            if n > max_cells:
                raise SizeError(f"convolution grid of {n} cells exceeds {max_cells}")
            gmin = top.grid_min + i_lo * h
            vals = np.zeros(n)
            for c, shift, g in pieces:
                vals += c * _resample(g, shift, gmin, n)
            density = top.with_values(vals, grid_min=gmin)
    delta = m.strip_half_width
    return replace(m, atoms=tuple(atoms), density=density, strip_half_width=delta,
                   degenerate=m.degenerate or len(atoms) == 1 and density is None)


@dataclass(frozen=True)
class CondCheck:
    """Outcome of an integrability test; truthy iff the condition holds."""

    ok: bool
    diagnostic: str

    def __bool__(self) -> bool:
        return self.ok


def check_cond_L2(m: SpectralMeasure, y: float) -> CondCheck:
    """Whether (1 + lam^2) exp(4 pi y lam) p(lam) is square integrable.

    The decision is made from the annotations, not from the samples.
    """
    if m.density is None:
        raise DomainError("measure has no density part")
    _check_strip(y, m.strip_half_width, "y")
    if m.singular_flag:
        return CondCheck(False, "singular continuous part declared")
    if m.has_atoms:
        return CondCheck(False, "atoms present")
    d = m.density
    for loc, alpha in d.singularities:
        if alpha >= 0.5:
            return CondCheck(False, f"singularity at {loc:g} with exponent {alpha:g} >= 1/2")
    if d.tail == "exponential" and not 4 * math.pi * abs(y) < d.tail_rate:
        return CondCheck(False, f"exponential tail rate {d.tail_rate:g} <= 4 pi |y|")
    return CondCheck(True, "ok")


# ---------------------------------------------------------------- JSON I/O

def _num(x: Any) -> float:
    if isinstance(x, str):
        return float(x)
    return float(x)


def measure_from_dict(spec: dict) -> SpectralMeasure:
    """Build a measure from a descriptor dict (see README for the format)."""
    if not isinstance(spec, dict):
        raise ConfigError("measure descriptor must be a JSON object")
    try:
        delta = _num(spec.get("delta", math.inf))
        atoms = tuple((_num(l), _num(w)) for l, w in spec.get("atoms", []) or [])
        density = None
        dspec = spec.get("density")
        if dspec:
            sing = tuple((_num(a), _num(b)) for a, b in dspec.get("singularities", []) or [])
            tail = dspec.get("tail")
            rate = None
            if isinstance(tail, dict):
                (tail, rate), = tail.items()
                rate = _num(rate)
            if "builtin" in dspec:
                name = dspec["builtin"]
                if name not in BUILTINS:
                    raise ConfigError(f"unknown builtin density {name!r}")
                kw = {k: _num(dspec[k]) for k in ("h", "half_width") if k in dspec}
                density = BUILTINS[name](**kw).density
                if sing:
                    density = replace(density, singularities=sing)
                if tail is not None:
                    density = replace(density, tail=tail, tail_rate=rate)
            else:
                vals = np.array([_num(v) for v in dspec["values"]], dtype=float)
                h = _num(dspec["h"])
                gmin = _num(dspec["grid_min"])
                if "grid_max" in dspec:
                    n_expect = round((_num(dspec["grid_max"]) - gmin) / h)
                    if n_expect != vals.size:
                        raise ConfigError(
                            f"grid [{gmin}, {dspec['grid_max']}] with h={h} needs "
                            f"{n_expect} values, got {vals.size}"
                        )
                density = GridDensity(gmin, h, vals, singularities=sing, tail=tail, tail_rate=rate)
        return SpectralMeasure(
            atoms=atoms,
            density=density,
            singular_flag=bool(spec.get("singular_flag", False)),
            strip_half_width=delta,
            degenerate=bool(spec.get("degenerate", False)),
            name=str(spec.get("name", "")),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, DomainError):
            raise ConfigError(str(exc)) from exc
        raise ConfigError(f"malformed measure descriptor: {exc}") from exc


def measure_to_dict(m: SpectralMeasure) -> dict:
    out: dict[str, Any] = {"atoms": [[l, w] for l, w in m.atoms]}
    if m.density is not None:
        d = m.density
        dd: dict[str, Any] = {
            "grid_min": d.grid_min,
            "grid_max": d.grid_max,
            "h": d.h,
            "values": d.values.tolist(),
            "singularities": [list(s) for s in d.singularities],
        }
        if d.tail == "exponential":
            dd["tail"] = {"exponential": d.tail_rate}
        elif d.tail is not None:
            dd["tail"] = d.tail
        out["density"] = dd
    out["singular_flag"] = m.singular_flag
    out["delta"] = m.strip_half_width
    if m.degenerate:
        out["degenerate"] = True
    if m.name:
        out["name"] = m.name
    return out


def _encode(obj: Any, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1)) if indent else ""
    end = " " * (indent * level) if indent else ""
    nl = "\n" if indent else ""
    sep = "," + nl if indent else ", "
    if isinstance(obj, (bool, np.bool_)) or obj is None:
        return json.dumps(None if obj is None else bool(obj))
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if math.isfinite(x):
            return format(x, ".17g")
        return json.dumps(str(x))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [pad + json.dumps(str(k)) + ": " + _encode(v, indent, level + 1) for k, v in obj.items()]
        return "{" + nl + sep.join(items) + nl + end + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        seq = list(obj)
        if not seq:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple, np.ndarray)) for v in seq):
            return "[" + ", ".join(_encode(v, 0, 0) for v in seq) + "]"
        items = [pad + _encode(v, indent, level + 1) for v in seq]
        return "[" + nl + sep.join(items) + nl + end + "]"
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps_json(obj: Any, indent: int = 2) -> str:
    """JSON text with every float written to 17 significant digits."""
    return _encode(obj, indent, 0) + "\n"


def load_measure(path: str | os.PathLike) -> SpectralMeasure:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            spec = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read measure file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"measure file {path} is not valid JSON: {exc}") from exc
    return measure_from_dict(spec)


def dump_measure(m: SpectralMeasure, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_json(measure_to_dict(m)))
