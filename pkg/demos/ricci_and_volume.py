"""
Ricci curvature of the penalty metric
=====================================

And the volume bound it feeds.
"""

from critcover import curvature as cv
from critcover.metric_geometry import theorem_bound

# one qubit is a round sphere, and b = 1 is Einstein
print(cv.ricci_extremes(1, 4), cv.ricci_extremes(3, 1))

for N in (1, 2, 3):
    ric = cv.ricci_tensor(N, 4)
    print(N, ric.by_weight())

# N = 3 has negative directions, so the comparison space is hyperbolic
for N in (2, 3):
    ric = cv.ricci_tensor(N, 4)
    for k in range(1, N + 1):
        bg = cv.bishop_gromov_bound(N, 4, 4.0**k, spectrum=ric)
        print(N, k, bg.model, round(bg.log_bound_floored, 3), theorem_bound(N, k, 4))
