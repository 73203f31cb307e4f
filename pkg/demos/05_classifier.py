"""Which growth regime applies to a given spectral measure?

Atoms give quadratic growth, a square-integrable density gives linear
growth, a measure without density gives faster than linear growth, and some
densities (such as |lam|^(-1/2) on [-1, 1]) are not decided by any of the
available criteria.
"""

import numpy as np

from stripgaf import analytics, spectral

measures = {
    "two atoms": spectral.two_atom(),
    "gaussian": spectral.gaussian(),
    "uniform on [-1,1]": spectral.uniform(),
    "|lam|^(-1/2) on [-1,1]": spectral.inv_sqrt(),
    "singular continuous": spectral.SpectralMeasure(singular_flag=True, name="singular"),
    "three hard singularities": spectral.SpectralMeasure(density=spectral.GridDensity(
        -2.0, 0.01, np.ones(400), singularities=((-1.0, 0.6), (0.0, 0.5), (1.0, 0.7)))),
}

for name, m in measures.items():
    rep = analytics.classify_regime(m, -0.1, 0.1)
    extra = ""
    if rep.L1 is not None:
        extra = f"  L1 = {rep.L1:.4f}"
    if rep.L2 is not None:
        extra = f"  L2 = {rep.L2:.4f}"
    print(f"{name:<26} {rep.line()}{extra}")
