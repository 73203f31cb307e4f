"""Zeros of stationary Gaussian analytic functions in a horizontal strip.

The package simulates such functions from their spectral measure, counts
their zeros in rectangles with the argument principle, and evaluates the
analytic quantities that govern the counts: the mean zero density, the
asymptotic variance series, and the classification of variance growth as
linear, quadratic or faster than linear.

Modules
-------
spectral   spectral measures, the kernel r(z), tilts, convolution powers
gafsim     finite mode sets and random realizations
zeros      winding numbers and zero counts
analytics  mean density, variance series, regime classification, identities
harness    Monte Carlo ensembles, growth fits, comparisons
cli        the ``stripgaf`` command line tool
"""

from .errors import (
    BoundaryZeroError,
    CondL2Error,
    ConfigError,
    ConvergenceError,
    DomainError,
    InsufficientDataError,
    NumericError,
    RefinementLimitError,
    SizeError,
    StripGafError,
)
from .spectral import (
    GridDensity,
    SpectralMeasure,
    check_cond_L2,
    convolve_power,
    eval_r,
    exp_moment,
    fourier_density,
    load_measure,
    tilt,
)
from .gafsim import GafRealization, ModeSet, discretize_measure, eval_f, sample_realization
from .zeros import Rectangle, WindingResult, arg_increment_line, count_zeros, winding_number

__version__ = "0.1.0"
