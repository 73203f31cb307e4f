"""Quadratic variance growth when the spectral measure has atoms.

With rho = (delta_{-1} + delta_1) / 2 the function is a random combination of
exp(2 pi i z) and exp(-2 pi i z).  Its zeros sit on a single horizontal line
at a random height, two per unit length, so a window either catches about 2T
zeros or none.  V(T)/T^2 then tends to 4 p (1 - p), where p is the chance
that the line falls between a and b.
"""

from stripgaf import analytics, spectral
from stripgaf.harness import ExperimentConfig, fit_growth, run_ensemble

m = spectral.two_atom()
a, b = -0.05, 0.05

report = analytics.classify_regime(m, a, b)
print(report.line(), f"L2 = {report.L2:.5f}")

stats = run_ensemble(ExperimentConfig(m, a, b, (25.0, 50.0, 100.0), replications=1000))
for T, q in zip(stats.T, stats.var_over_T2):
    print(f"T = {T:5.0f}   V/T^2 = {q:.4f}")
print(f"growth exponent {fit_growth(stats).exponent:.3f}")

est = analytics.quadratic_coeff_estimate(m, a, b, replications=500)
print(f"extrapolated L2 = {est.value:.4f} +- {est.se:.4f} (closed form {est.closed_form:.4f})")
