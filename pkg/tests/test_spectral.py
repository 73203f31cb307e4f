import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from stripgaf import spectral as sp
from stripgaf.errors import ConfigError, DomainError, NumericError, SizeError


def point(loc=0.0, mass=1.0):
    return sp.atomic([(loc, mass)], degenerate=True)


@st.composite
def measures(draw):
    """Small random measures: a few atoms and/or a coarse positive density."""
    n_atoms = draw(st.integers(0, 3))
    locs = draw(st.lists(st.floats(-2, 2), min_size=n_atoms, max_size=n_atoms, unique=True))
    masses = draw(st.lists(st.floats(0.05, 2), min_size=n_atoms, max_size=n_atoms))
    density = None
    if n_atoms < 2 or draw(st.booleans()):
        n = draw(st.integers(4, 40))
        vals = np.array(draw(st.lists(st.floats(0.0, 3.0), min_size=n, max_size=n)))
        vals[n // 2] += 0.1
        gmin = draw(st.floats(-2.0, 0.0))
        density = sp.GridDensity(gmin, 1.0 / 32, vals, tail="compact")
    return sp.SpectralMeasure(atoms=tuple(zip(locs, masses)), density=density)


# ------------------------------------------------------------------ eval_r

def test_eval_r_two_atom_quarter(two_atom):
    assert abs(sp.eval_r(two_atom, 0.25)) < 1e-15


def test_eval_r_at_zero_is_total_mass(gauss, unif, two_atom):
    for m in (gauss, unif, two_atom):
        assert sp.eval_r(m, 0.0) == pytest.approx(m.total_mass, rel=1e-14)
    assert sp.eval_r(gauss, 0.0).real == pytest.approx(1.0, rel=1e-12)


def test_eval_r_gaussian_imaginary(gauss):
    assert sp.eval_r(gauss, 2j * 0.25) == pytest.approx(math.exp(math.pi / 4), rel=1e-12)


def test_eval_r_gaussian_closed_form(gauss):
    z = np.array([0.3 + 0.1j, -1.2 + 0.45j, 2.0 - 0.7j])
    assert np.allclose(sp.eval_r(gauss, z), np.exp(-math.pi * z**2), rtol=1e-11, atol=1e-14)
    # derivatives of exp(-pi z^2)
    assert np.allclose(sp.eval_r(gauss, z, 1), -2 * math.pi * z * np.exp(-math.pi * z**2), rtol=1e-10)
    d2 = (4 * math.pi**2 * z**2 - 2 * math.pi) * np.exp(-math.pi * z**2)
    assert np.allclose(sp.eval_r(gauss, z, 2), d2, rtol=1e-10)


def test_eval_r_domain():
    m = sp.gaussian(delta=0.5)
    sp.eval_r(m, 0.99j)
    with pytest.raises(DomainError):
        sp.eval_r(m, 1.0j)
    with pytest.raises(DomainError):
        sp.eval_r(m, 0.0, order=3)


def test_eval_r_truncated_grid_refused(gauss):
    with pytest.raises(NumericError):
        sp.eval_r(gauss, 6j)


def test_r_at_2iy_real_positive(gauss, unif, two_atom):
    for m in (gauss, unif, two_atom):
        for y in (-0.3, 0.0, 0.2):
            v = sp.eval_r(m, 2j * y)
            assert abs(v.imag) < 1e-12 * v.real and v.real > 0


# ------------------------------------------------------------------ tilt

def test_tilt_zero_is_identity(gauss):
    assert sp.tilt(gauss, 0.0) is gauss


def test_tilt_single_atom():
    t = sp.tilt(point(1.0), 0.3)
    assert t.atoms[0][1] == pytest.approx(math.exp(2 * math.pi * 0.3), rel=1e-15)


@pytest.mark.parametrize("y", [-0.4, 0.1, 0.25])
def test_tilt_two_atom_mass(two_atom, y):
    assert sp.tilt(two_atom, y).total_mass == pytest.approx(math.cosh(2 * math.pi * y), rel=1e-14)


def test_tilt_mass_matches_kernel(gauss, unif):
    for m in (gauss, unif):
        for y in (-0.5, 0.3):
            assert sp.tilt(m, y).total_mass == pytest.approx(sp.eval_r(m, 1j * y).real, rel=1e-12)


def test_tilt_preserves_annotations():
    m = sp.inv_sqrt()
    t = sp.tilt(m, 0.2)
    assert t.density.singularities == m.density.singularities
    assert t.density.tail == m.density.tail


def test_tilt_domain():
    with pytest.raises(DomainError):
        sp.tilt(sp.gaussian(delta=0.25), 0.5)


@settings(max_examples=40, deadline=None)
@given(measures(), st.floats(-0.4, 0.4), st.floats(-0.4, 0.4))
def test_tilt_composition(m, y1, y2):
    a = sp.tilt(sp.tilt(m, y1), y2).total_mass
    b = sp.tilt(m, y1 + y2).total_mass
    assert a == pytest.approx(b, rel=1e-12)


# ------------------------------------------------------------------ convolution powers

def test_convolve_power_dirac():
    c = sp.convolve_power(point(0.7), 5)
    assert len(c.atoms) == 1
    assert c.atoms[0][0] == pytest.approx(3.5, abs=1e-14)
    assert c.atoms[0][1] == pytest.approx(1.0, rel=1e-15)


def test_convolve_power_uniform_triangle(unif):
    c = sp.convolve_power(unif, 2).density
    lam = c.midpoints
    tri = np.clip(0.25 * (2 - np.abs(lam)), 0, None)
    i0 = np.argmin(np.abs(lam))
    assert lam[i0] == pytest.approx(0.0, abs=1e-12)
    assert c.values[i0] == pytest.approx(0.5, rel=1e-10)
    assert np.max(np.abs(c.values - tri)) < 1e-3  # cell-level resolution of the kink
    assert c.grid_min >= -2 - 1e-12 and c.grid_max <= 2 + 1e-12


def test_convolve_power_gaussian(gauss):
    c = sp.convolve_power(gauss, 2).density
    exact = np.exp(-math.pi * c.midpoints**2 / 2) / math.sqrt(2)
    assert np.max(np.abs(c.values - exact)) < 1e-6


def test_convolve_power_two_atom(two_atom):
    c = sp.convolve_power(two_atom, 3)
    assert dict(c.atoms) == pytest.approx({-3.0: 0.125, -1.0: 0.375, 1.0: 0.375, 3.0: 0.125})


def test_convolve_power_mixed_mean():
    dens = sp.gaussian(half_width=4, h=1 / 64).density
    m = sp.SpectralMeasure(atoms=((0.5, 0.3),), density=dens)
    c = sp.convolve_power(m, 3)
    locs, masses = c.nodes()
    assert c.total_mass == pytest.approx(m.total_mass**3, rel=1e-10)
    mean = np.dot(locs, masses) / masses.sum()
    assert mean == pytest.approx(3 * 0.3 * 0.5 / 1.3, abs=1e-3)


def test_convolve_power_errors(gauss):
    with pytest.raises(SizeError):
        sp.convolve_power(gauss, 4, max_cells=5000)
    sing = sp.SpectralMeasure(singular_flag=True)
    with pytest.raises(DomainError):
        sp.convolve_power(sing, 2)


@settings(max_examples=25, deadline=None)
@given(measures(), st.integers(1, 8))
def test_convolve_power_mass(m, k):
    c = sp.convolve_power(m, k)
    assert abs(c.total_mass - m.total_mass**k) / m.total_mass**k < 1e-8
    assert c.density is None or np.all(c.density.values >= 0)


@settings(max_examples=25, deadline=None)
@given(measures(), st.integers(1, 5), st.floats(-0.3, 0.3))
def test_tilt_convolution_commute(m, k, y):
    lhs = sp.tilt(sp.convolve_power(m, k), y).total_mass
    rhs = sp.eval_r(m, 1j * y).real ** k
    # mixed atom x density pieces are interpolated onto the common grid
    rel = 2e-2 if m.has_atoms and m.density is not None else 1e-8
    assert lhs == pytest.approx(rhs, rel=rel)


# ------------------------------------------------------------------ moments

@pytest.mark.parametrize("y", [-0.2, 0.0, 0.13])
def test_exp_moment_two_atom(two_atom, y):
    assert sp.exp_moment(two_atom, y, 0) == pytest.approx(math.cosh(4 * math.pi * y), rel=1e-14)
    assert sp.exp_moment(two_atom, y, 1) == pytest.approx(math.sinh(4 * math.pi * y), rel=1e-14, abs=1e-16)


def test_exp_moment_point():
    m = point(0.0)
    assert sp.exp_moment(m, 0.3, 0) == 1.0
    assert sp.exp_moment(m, 0.3, 1) == 0.0
    assert sp.exp_moment(m, 0.3, 2) == 0.0


@pytest.mark.parametrize("y", [-0.4, 0.1, 0.3])
def test_exp_moment_gaussian(gauss, y):
    m0 = math.exp(4 * math.pi * y * y)
    assert sp.exp_moment(gauss, y, 0) == pytest.approx(m0, rel=1e-8)
    # the tilted law is normal with mean 2y and variance 1/(2 pi)
    assert sp.exp_moment(gauss, y, 1) == pytest.approx(2 * y * m0, rel=1e-8, abs=1e-12)
    assert sp.exp_moment(gauss, y, 2) == pytest.approx((4 * y * y + 1 / (2 * math.pi)) * m0, rel=1e-8)


def test_exp_moment_domain():
    with pytest.raises(DomainError):
        sp.exp_moment(sp.gaussian(delta=0.3), 0.3, 0)


# ------------------------------------------------------------------ kernel properties

@settings(max_examples=30, deadline=None)
@given(measures())
def test_positive_definite_bound(m):
    x = np.linspace(-5, 5, 201)
    assert np.all(np.abs(sp.eval_r(m, x)) <= sp.eval_r(m, 0.0).real * (1 + 1e-12))


@settings(max_examples=30, deadline=None)
@given(measures())
def test_log_convexity(m):
    ys = np.linspace(-0.4, 0.4, 41)
    lr = np.log(sp.eval_r(m, 2j * ys).real)
    assert np.all(lr[2:] - 2 * lr[1:-1] + lr[:-2] >= -1e-8)


# ------------------------------------------------------------------ L2 condition

def test_cond_L2_examples(gauss, unif):
    assert sp.check_cond_L2(gauss, 0.3)
    assert sp.check_cond_L2(unif, 0.0)
    res = sp.check_cond_L2(sp.inv_sqrt(), 0.0)
    assert not res and "singularity" in res.diagnostic


def test_cond_L2_exponential_tail():
    dens = sp.GridDensity(-5.0, 1 / 64, np.exp(-10 * np.abs(np.linspace(-5, 5, 640))),
                          tail="exponential", tail_rate=10.0)
    m = sp.SpectralMeasure(density=dens, strip_half_width=0.7)
    assert sp.check_cond_L2(m, 0.5)
    with pytest.raises(DomainError):
        sp.SpectralMeasure(density=dens, strip_half_width=0.9)


def test_cond_L2_needs_density(two_atom):
    with pytest.raises(DomainError):
        sp.check_cond_L2(two_atom, 0.0)
    mixed = sp.SpectralMeasure(atoms=((3.0, 1.0),), density=sp.uniform().density)
    assert not sp.check_cond_L2(mixed, 0.0)


# ------------------------------------------------------------------ Fourier transform

def test_fourier_examples(gauss, two_atom):
    x = np.linspace(-3, 3, 121)
    assert np.allclose(sp.fourier_density(point(0.0), x), 1.0)
    assert np.allclose(sp.fourier_density(two_atom, x), np.cos(2 * math.pi * x), atol=1e-15)
    assert np.max(np.abs(sp.fourier_density(gauss, x) - np.exp(-math.pi * x**2))) < 1e-6


def test_fourier_matches_eval_r(unif):
    x = np.linspace(-4, 4, 81)
    assert np.max(np.abs(sp.fourier_density(unif, x) - sp.eval_r(unif, x))) < 1e-10


# ------------------------------------------------------------------ invariants and JSON

def test_invariants():
    with pytest.raises(DomainError):
        sp.SpectralMeasure(atoms=((0.0, -1.0), (1.0, 1.0)))
    with pytest.raises(DomainError):
        sp.SpectralMeasure(atoms=((0.0, 1.0), (0.0, 1.0)))
    with pytest.raises(DomainError):
        sp.atomic([(0.0, 1.0)])
    with pytest.raises(DomainError):
        sp.GridDensity(0.0, 0.1, np.array([1.0, -1.0]))
    with pytest.raises(DomainError):
        sp.GridDensity(0.0, 0.1, np.ones(3), singularities=((0.0, 1.0),))


def test_json_roundtrip_bit_exact(tmp_path, gauss):
    m = sp.SpectralMeasure(atoms=((0.1, 1 / 3), (-0.7, math.pi)), density=gauss.density,
                           strip_half_width=0.75)
    path = tmp_path / "m.json"
    sp.dump_measure(m, path)
    m2 = sp.load_measure(path)
    assert m2.atoms == m.atoms
    assert np.array_equal(m2.density.values, m.density.values)
    assert m2.density.grid_min == m.density.grid_min and m2.density.h == m.density.h
    assert m2.strip_half_width == 0.75 and m2.density.tail == "gaussian"
    text = path.read_text()
    assert "0.33333333333333331" in text  # 17 significant digits


def test_json_builtins_and_errors(tmp_path):
    m = sp.measure_from_dict({"density": {"builtin": "uniform"}, "delta": "inf"})
    assert m.total_mass == pytest.approx(1.0)
    with pytest.raises(ConfigError):
        sp.measure_from_dict({"density": {"builtin": "nope"}})
    with pytest.raises(ConfigError):
        sp.measure_from_dict({"density": {"grid_min": 0, "grid_max": 1, "h": 0.25, "values": [1, 2]}})
    with pytest.raises(ConfigError):
        sp.measure_from_dict({"atoms": [[0.0, 1.0]]})  # single atom without the flag
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ConfigError):
        sp.load_measure(bad)


def test_inv_sqrt_mass():
    # cell averages integrate |lam|^(-1/2) exactly
    assert sp.inv_sqrt().total_mass == pytest.approx(4.0, rel=1e-13)
