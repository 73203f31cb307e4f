"""Mean density of zeros: theory against a small ensemble.

For the Gaussian spectral measure exp(-pi lam^2) the zeros have density 2
per unit length at every height.  A two-atom measure instead puts all zeros
on one random horizontal line, so its first intensity peaks near y = 0.
"""

import numpy as np

from stripgaf import analytics, spectral
from stripgaf.harness import ExperimentConfig, run_ensemble
from stripgaf.zeros import Rectangle

gauss = spectral.gaussian()
two = spectral.two_atom()

print("  y     L(y) gaussian   L(y) two atoms")
for y in np.linspace(-0.2, 0.2, 9):
    print(f"{y:+.2f}   {analytics.mean_density(gauss, y):10.6f}   {analytics.mean_density(two, y):12.6f}")

rect = Rectangle(0, 50, -0.2, 0.2)
expected = analytics.expected_count(gauss, rect)

cfg = ExperimentConfig(gauss, rect.a, rect.b, (rect.t1,), replications=300, n_modes=512)
stats = run_ensemble(cfg)
print(f"\nzeros in [0,50]x[-0.2,0.2]: expected {expected:.3f}, "
      f"simulated {stats.mean[0]:.3f} +- {stats.mean_se[0]:.3f} ({stats.reps} realizations)")
