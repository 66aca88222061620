"""Estimate how much landscape each threshold leaves standing.

Deterministic Halton samples probe the floored 2-D Schwefel surface at a
ladder of thresholds. The fraction of samples that land above the floor,
p_above = 1 - n_on_floor / n_samples, estimates the probability of sampling
inside the surviving peaks' footprints. It decays monotonically toward zero
as the floor approaches the global maximum: at zero the floor IS the maximum
and all location information is gone.
"""

import numpy as np

from dtopt.floorscan import sample_threshold_floor
from dtopt.objectives import DecisionSpace, schwefel226

space = DecisionSpace.cube(2, -500.0, 500.0)
n_samples = 8192

print(f"{n_samples} Halton samples per threshold\n")
print("threshold    on_floor    p_above")
for threshold in np.linspace(-800.0, 837.9, 15):
    stats = sample_threshold_floor(schwefel226, space, float(threshold), n_samples)
    print(f"{threshold:>9.1f}    {stats.n_on_floor:>8d}    {stats.p_above:.4f}")
