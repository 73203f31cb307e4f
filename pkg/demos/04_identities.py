"""Numerical identities behind the variance formulas.

Each line is one check: Fejér/Parseval, properties of q, the two real zeros
of h_1, the log-covariance series, the CLT decay of |F[g]|^m and the energy
of a measure seen through small balls.
"""

from stripgaf import analytics, spectral
from stripgaf.identities import run_identity_suite

for check in run_identity_suite():
    print(check.line())

# the same quantities by hand
g = spectral.gaussian()
print("\nfejer/parseval for the Gaussian, T = 1:", analytics.fejer_parseval_check(g, 1.0))
print("roots of h_1 for (a, b) = (-0.2, 0.2):", analytics.h1_real_zeros(g, -0.2, 0.2))
print("cov(log|xi|, log|eta|) at theta = 0.5:", analytics.log_cov_series(0.5))
seq = analytics.clt_decay_check(spectral.uniform().density, 64)
print("sqrt(m) int |F[g]|^m for the uniform law, m = 2, 16, 64:",
      [round(v, 5) for m, v in seq if m in (2, 16, 64)])
