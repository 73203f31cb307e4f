"""Zero counting by the argument principle.

The boundary of a rectangle is walked counterclockwise.  Along each side the
argument of f is tracked through samples; any step whose phase change is at
least pi/2 is bisected until every step is below that threshold, so the
continuous branch of arg f is unambiguous.  Counts are for the closed
rectangle (a zero on the boundary raises instead of being assigned a side).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import BoundaryZeroError, DomainError, NumericError, RefinementLimitError
from .gafsim import GafRealization, eval_f, eval_line_fft, line_fft_size

EPS_BDRY = 1e-12
MAX_DEPTH = 24
PHASE_STEP = math.pi / 2
N_RETRIES = 3
RETRY_SHIFT = 1e-7


@dataclass(frozen=True)
class Rectangle:
    t0: float
    t1: float
    a: float
    b: float

    def __post_init__(self):
        if not self.t0 < self.t1:
            raise DomainError(f"need t0 < t1, got {self.t0}, {self.t1}")
        if not self.a <= self.b:
            raise DomainError(f"need a <= b, got {self.a}, {self.b}")

    def shifted(self, dy: float) -> "Rectangle":
        return Rectangle(self.t0, self.t1, self.a + dy, self.b + dy)

    def corners(self) -> list[complex]:
        """Counterclockwise from the bottom-left corner."""
        return [complex(self.t0, self.a), complex(self.t1, self.a),
                complex(self.t1, self.b), complex(self.t0, self.b)]


@dataclass(frozen=True)
class WindingResult:
    count: int
    total_arg_increment: float
    segments_used: int
    min_boundary_modulus: float


@dataclass
class PhaseTrack:
    """Refined samples along a path: parameters s, values f, per-step increments."""

    s: np.ndarray
    f: np.ndarray
    steps: np.ndarray

    @property
    def total(self) -> float:
        return float(math.fsum(self.steps))

    def cumulative(self) -> np.ndarray:
        return np.concatenate([[0.0], np.cumsum(self.steps)])


def track_phase(zfun: Callable[[np.ndarray], np.ndarray],
                func: Callable[[np.ndarray], np.ndarray],
                s: np.ndarray, f: np.ndarray | None = None,
                eps_bdry: float = EPS_BDRY, max_depth: int = MAX_DEPTH) -> PhaseTrack:
    """Refine samples at parameters s (increasing) until all phase steps < pi/2.

    ``zfun`` maps parameters to points, ``func`` evaluates the function on an
    array of points.  ``f`` may carry precomputed values at s.
    """
    s = np.asarray(s, dtype=float)
    f = func(zfun(s)) if f is None else np.asarray(f, dtype=complex)
    depth = np.zeros(s.size - 1, dtype=np.int64)
    while True:
        mod = np.abs(f)
        if mod.min() < eps_bdry:
            i = int(np.argmin(mod))
            raise BoundaryZeroError(f"|f| = {mod[i]:.3g} on the contour near {zfun(s[i:i + 1])[0]}")
        steps = np.angle(f[1:] / f[:-1])
        bad = np.abs(steps) >= PHASE_STEP
        if not bad.any():
            return PhaseTrack(s, f, steps)
        if depth[bad].max() >= max_depth:
            raise RefinementLimitError(f"contour subdivision exceeded depth {max_depth}")
        idx = np.nonzero(bad)[0]
        sm = 0.5 * (s[idx] + s[idx + 1])
        fm = func(zfun(sm))
        s = np.insert(s, idx + 1, sm)
        f = np.insert(f, idx + 1, fm)
        depth = np.repeat(depth + bad, np.where(bad, 2, 1))


def _segment(func, z0: complex, z1: complex, n: int, eps_bdry: float, max_depth: int) -> PhaseTrack:
    dz = z1 - z0
    return track_phase(lambda s: z0 + s * dz, func, np.linspace(0.0, 1.0, n + 1),
                       eps_bdry=eps_bdry, max_depth=max_depth)


def _round_count(total: float) -> int:
    c = total / (2 * math.pi)
    n = int(round(c))
    if abs(c - n) >= 1e-3:
        raise NumericError(f"winding number {c} is not integer-consistent")
    return n


def winding_number(func: Callable, rect: Rectangle, eps_bdry: float = EPS_BDRY,
                   max_depth: int = MAX_DEPTH, max_step: float | None = None,
                   n_min: int = 64) -> WindingResult:
    """Number of zeros of ``func`` in the closed rectangle, with multiplicity.

    ``func`` takes an array of complex points.  Each side starts with at
    least ``n_min`` steps, and steps no longer than ``max_step`` if given.
    """
    corners = rect.corners()
    tracks = []
    for z0, z1 in zip(corners, corners[1:] + corners[:1]):
        length = abs(z1 - z0)
        if length == 0:
            continue
        n = n_min if max_step is None else max(n_min, math.ceil(length / max_step))
        tracks.append(_segment(func, z0, z1, n, eps_bdry, max_depth))
    total = math.fsum(t.total for t in tracks)
    count = _round_count(total)
    if count < 0:
        raise NumericError(f"negative winding number {count}: function is not analytic inside")
    return WindingResult(
        count=count,
        total_arg_increment=total,
        segments_used=sum(t.steps.size for t in tracks),
        min_boundary_modulus=float(min(np.abs(t.f).min() for t in tracks)),
    )


def default_step(g: GafRealization, scale: float = 1.0) -> float:
    """Initial sample spacing: each mode turns by at most pi/4 per step."""
    lam = float(np.max(np.abs(g.modes.frequencies))) if g.modes.n else 0.0
    return scale / 16 if lam == 0 else min(scale / 16, 1.0 / (8.0 * lam))


def count_zeros_result(g: GafRealization, rect: Rectangle, **kw) -> WindingResult:
    """Winding result for a realization, retrying on boundary zeros."""
    func = lambda z: eval_f(g, z)
    kw.setdefault("max_step", default_step(g, rect.t1 - rect.t0))
    kw.setdefault("n_min", 16)
    r = rect
    for attempt in range(N_RETRIES + 1):
        try:
            return winding_number(func, r, **kw)
        except BoundaryZeroError:
            if attempt == N_RETRIES:
                raise
            r = r.shifted(RETRY_SHIFT * max(rect.b - rect.a, 1e-300))
    raise AssertionError("unreachable")


def count_zeros(g: GafRealization, rect: Rectangle, **kw) -> int:
    """Zeros of one realization in a closed rectangle."""
    if rect.a == rect.b:
        return 0
    return count_zeros_result(g, rect, **kw).count


def arg_increment_line(g: GafRealization, t0: float, t1: float, y: float,
                       eps_bdry: float = EPS_BDRY, max_depth: int = MAX_DEPTH) -> float:
    """Increment of a continuous branch of arg f along [t0, t1] at height y."""
    if t0 == t1:
        return 0.0
    dx = default_step(g, abs(t1 - t0))
    n = max(16, math.ceil(abs(t1 - t0) / dx))
    func = lambda z: eval_f(g, z)
    return _segment(func, complex(t0, y), complex(t1, y), n, eps_bdry, max_depth).total


# ------------------------------------------------------------------ nested counts

def _line_track(g: GafRealization, y: float, x_stops: np.ndarray, dx: float,
                use_fft: bool) -> PhaseTrack:
    """Phase track of f(x + iy) on [0, max(x_stops)] that samples every stop."""
    func = lambda z: eval_f(g, z)
    zfun = lambda s: s + 1j * y
    x_max = float(x_stops.max())
    if use_fft:
        m = line_fft_size(g.modes, dx)
        xg, fg = eval_line_fft(g, y, m)
        period = g.modes.period
        reps = math.ceil(x_max / period) + 1
        xs = (xg[None, :] + period * np.arange(reps)[:, None]).ravel()
        # f(x + P) = exp(-2 pi i lam_0 P) f(x) when lam_j = lam_0 + j / P
        lam0 = g.modes.frequencies[0]
        phase = np.exp(-2j * math.pi * lam0 * period * np.arange(reps))
        fs = (phase[:, None] * fg[None, :]).ravel()
        keep = xs <= x_max
        xs, fs = xs[keep], fs[keep]
        extra = np.setdiff1d(x_stops, xs)
        if extra.size:
            xs = np.concatenate([xs, extra])
            fs = np.concatenate([fs, func(zfun(extra))])
            order = np.argsort(xs, kind="stable")
            xs, fs = xs[order], fs[order]
        return track_phase(zfun, func, xs, fs)
    n = max(16, math.ceil(x_max / dx))
    xs = np.union1d(np.linspace(0.0, x_max, n + 1), x_stops)
    return track_phase(zfun, func, xs)


def _nested_once(g: GafRealization, a: float, b: float, T: np.ndarray, dx: float,
                 use_fft: bool) -> np.ndarray:
    stops = np.concatenate([[0.0], T])
    bottom = _line_track(g, a, stops, dx, use_fft)
    top = _line_track(g, b, stops, dx, use_fft)
    cb = bottom.cumulative()[np.searchsorted(bottom.s, T)]
    ct = top.cumulative()[np.searchsorted(top.s, T)]
    func = lambda z: eval_f(g, z)
    nv = max(8, math.ceil((b - a) / dx))
    vert = [_segment(func, complex(x, a), complex(x, b), nv, EPS_BDRY, MAX_DEPTH).total
            for x in stops]
    totals = cb + np.array(vert[1:]) - ct - vert[0]
    counts = np.array([_round_count(t) for t in totals], dtype=np.int64)
    if np.any(counts < 0):
        raise NumericError("negative zero count")
    return counts


def count_zeros_nested(g: GafRealization, a: float, b: float, T_list: Sequence[float],
                       dx: float | None = None, use_fft: bool | None = None) -> np.ndarray:
    """Counts in the nested rectangles [0, T] x [a, b] for every T in T_list.

    Both horizontal sides are tracked once up to max(T); the vertical sides at
    x = 0 and x = T close each rectangle.  On a boundary zero the whole strip
    [a, b] is nudged upwards, as for single rectangles.
    """
    T = np.asarray(T_list, dtype=float)
    if T.ndim != 1 or T.size == 0 or np.any(T <= 0) or np.any(np.diff(T) <= 0):
        raise DomainError("T_list must be increasing positive reals")
    if a == b:
        return np.zeros(T.size, dtype=np.int64)
    if dx is None:
        dx = default_step(g, float(T[0]))
    if use_fft is None:
        use_fft = g.modes.spacing is not None
    shift = RETRY_SHIFT * (b - a)
    for attempt in range(N_RETRIES + 1):
        try:
            return _nested_once(g, a + attempt * shift, b + attempt * shift, T, dx, use_fft)
        except BoundaryZeroError:
            if attempt == N_RETRIES:
                raise
    raise AssertionError("unreachable")
