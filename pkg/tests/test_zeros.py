import math

import numpy as np
import pytest
from scipy import stats

from stripgaf import spectral as sp
from stripgaf import zeros as zr
from stripgaf.errors import BoundaryZeroError, DomainError, RefinementLimitError
from stripgaf.gafsim import ModeSet, discretize_measure, eval_f, sample_realization
from stripgaf.zeros import (Rectangle, arg_increment_line, count_zeros, count_zeros_nested,
                            count_zeros_result, winding_number)


def poly(roots):
    roots = np.asarray(roots)
    return lambda z: np.prod(np.asarray(z)[..., None] - roots, axis=-1)


# ------------------------------------------------------------------ deterministic functions

def test_simple_zero():
    r = winding_number(lambda z: z - (0.5 + 0.25j), Rectangle(0, 1, 0, 0.5))
    assert r.count == 1
    assert abs(r.total_arg_increment - 2 * math.pi) < 1e-9


def test_exp_has_no_zeros():
    assert winding_number(np.exp, Rectangle(-3, 2, -1, 4)).count == 0


@pytest.mark.parametrize("k", [1, 2, 3, 5, 8])
def test_power_multiplicity(k):
    assert winding_number(lambda z: z**k, Rectangle(-1, 1, -1, 1)).count == k


def test_random_polynomials():
    rng = np.random.default_rng(3)
    checked = 0
    while checked < 100:
        roots = rng.uniform(-2, 2, 6) + 1j * rng.uniform(-2, 2, 6)
        t0, t1 = np.sort(rng.uniform(-2.5, 2.5, 2))
        a, b = np.sort(rng.uniform(-2.5, 2.5, 2))
        if t1 - t0 < 0.1 or b - a < 0.1:
            continue
        # keep roots clear of the boundary
        gap = np.min(np.minimum.reduce([abs(roots.real - t0), abs(roots.real - t1),
                                        abs(roots.imag - a), abs(roots.imag - b)]))
        if gap < 1e-3:
            continue
        inside = np.sum((roots.real > t0) & (roots.real < t1) & (roots.imag > a) & (roots.imag < b))
        assert winding_number(poly(roots), Rectangle(t0, t1, a, b)).count == inside
        checked += 1


def test_repeated_linear_factors():
    f = poly([0.1 + 0.1j] * 3 + [-0.3j] * 2 + [2.0])
    assert winding_number(f, Rectangle(-1, 1, -1, 1)).count == 5


def test_boundary_zero_detected():
    with pytest.raises(BoundaryZeroError):
        winding_number(lambda z: z - 0.5, Rectangle(0, 1, 0, 1))


def test_refinement_limit():
    # 3 pi / 4 per initial step: one bisection would be needed
    f = lambda z: np.exp(-2j * math.pi * 1.5 * z)
    with pytest.raises(RefinementLimitError):
        winding_number(f, Rectangle(0, 1, -0.1, 0.1), max_depth=0, n_min=4)
    assert winding_number(f, Rectangle(0, 1, -0.1, 0.1), max_depth=1, n_min=4).count == 0


def test_rectangle_validation():
    with pytest.raises(DomainError):
        Rectangle(1, 0, 0, 1)
    with pytest.raises(DomainError):
        Rectangle(0, 1, 0.5, 0.1)


# ------------------------------------------------------------------ realizations

@pytest.fixture(scope="module")
def gauss_modes(gauss):
    return discretize_measure(gauss, 256, "uniform")


def test_single_atom_has_no_zeros():
    ms = discretize_measure(sp.atomic([(0.4, 1.0)], degenerate=True), 1)
    for seed in range(10):
        g = sample_realization(ms, seed)
        assert count_zeros(g, Rectangle(-5, 5, -0.4, 0.4)) == 0


def test_single_mode_line_increment():
    ms = ModeSet(np.array([0.7]), np.array([1.0]))
    g = sample_realization(ms, 5)
    # f = xi exp(-2 pi i lam z): the phase falls linearly
    assert arg_increment_line(g, 0.0, 3.0, 0.1) == pytest.approx(-2 * math.pi * 0.7 * 3.0, rel=1e-12)
    ms0 = ModeSet(np.array([0.0]), np.array([1.0]))
    assert eval_f(sample_realization(ms0, 1), 2.5 + 0.3j) == sample_realization(ms0, 1).coefficients[0]


def test_reversal_and_four_segments(gauss_modes):
    g = sample_realization(gauss_modes, 21)
    t0, t1, a, b = 0.0, 6.0, -0.2, 0.25
    fwd = arg_increment_line(g, t0, t1, a)
    assert arg_increment_line(g, t1, t0, a) == pytest.approx(-fwd, abs=1e-9)
    # close the rectangle with vertical sides walked by the generic tracker
    func = lambda z: eval_f(g, z)
    right = zr._segment(func, complex(t1, a), complex(t1, b), 64, 1e-12, 24).total
    left = zr._segment(func, complex(t0, b), complex(t0, a), 64, 1e-12, 24).total
    total = fwd + right - arg_increment_line(g, t0, t1, b) + left
    n = count_zeros(g, Rectangle(t0, t1, a, b))
    assert abs(total - 2 * math.pi * n) < 1e-3


def test_additivity(gauss_modes):
    rng = np.random.default_rng(0)
    for seed in range(100):
        g = sample_realization(gauss_modes, seed)
        t1 = rng.uniform(1, 4)
        whole = count_zeros(g, Rectangle(0, 5, -0.2, 0.2))
        parts = count_zeros(g, Rectangle(0, t1, -0.2, 0.2)) + count_zeros(g, Rectangle(t1, 5, -0.2, 0.2))
        assert whole == parts


def test_nested_matches_direct(gauss_modes):
    T = [5.0, 12.5, 25.0]
    for seed in range(5):
        g = sample_realization(gauss_modes, seed)
        direct = [count_zeros(g, Rectangle(0, t, -0.2, 0.2)) for t in T]
        assert list(count_zeros_nested(g, -0.2, 0.2, T)) == direct
        assert list(count_zeros_nested(g, -0.2, 0.2, T, use_fft=False)) == direct


def test_nested_validation(gauss_modes):
    g = sample_realization(gauss_modes, 0)
    with pytest.raises(DomainError):
        count_zeros_nested(g, -0.2, 0.2, [5.0, 2.0])
    assert list(count_zeros_nested(g, 0.1, 0.1, [1.0, 2.0])) == [0, 0]


def test_count_result_invariants(gauss_modes):
    r = count_zeros_result(sample_realization(gauss_modes, 4), Rectangle(0, 10, -0.3, 0.1))
    assert abs(r.total_arg_increment / (2 * math.pi) - r.count) < 1e-3
    assert r.min_boundary_modulus > 0 and r.segments_used > 0


def test_retry_on_boundary_zero(gauss_modes, monkeypatch):
    g = sample_realization(gauss_modes, 2)
    rect = Rectangle(0, 5, -0.2, 0.2)
    expected = count_zeros(g, rect.shifted(1e-7 * 0.4))
    real = zr.winding_number
    calls = []

    def flaky(func, r, **kw):
        calls.append(r)
        if len(calls) == 1:
            raise BoundaryZeroError("forced")
        return real(func, r, **kw)

    monkeypatch.setattr(zr, "winding_number", flaky)
    assert count_zeros(g, rect) == expected
    assert calls[1].a == pytest.approx(rect.a + 1e-7 * 0.4, abs=1e-15)

    def always(func, r, **kw):
        raise BoundaryZeroError("forced")

    monkeypatch.setattr(zr, "winding_number", always)
    with pytest.raises(BoundaryZeroError):
        count_zeros(g, rect)


def test_two_atom_lattice(two_atom):
    ms = discretize_measure(two_atom, 2)
    for seed in range(30):
        g = sample_realization(ms, seed)
        xi1, xi2 = g.coefficients
        y_star = -math.log(abs(xi2 / xi1)) / (4 * math.pi)
        if abs(y_star) > 0.3:
            continue
        a, b = y_star - 0.05, y_star + 0.05
        n = count_zeros(g, Rectangle(0.1, 7.3, a, b))
        assert abs(n - 2 * 7.2) <= 1
        off = count_zeros(g, Rectangle(0.1, 7.3, y_star + 0.02, y_star + 0.1))
        assert off == 0


def test_translation_invariance_in_law(gauss_modes):
    c0, c1 = [], []
    for seed in range(400):
        g = sample_realization(gauss_modes, seed)
        c0.append(count_zeros(g, Rectangle(0, 4, -0.2, 0.2)))
        c1.append(count_zeros(g, Rectangle(37.3, 41.3, -0.2, 0.2)))
    assert stats.ks_2samp(c0, c1).pvalue > 0.01
