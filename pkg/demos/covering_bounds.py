"""
Covering bounds for the penalised unitary group
===============================================

Diameters of the nested Cartan tori and the covering-number bounds they give.
"""

import math

from critcover.metric_geometry import covering_report, torus_diameter, torus_radicand

# four qubits, penalty base 4: the weight-2 torus has diameter exactly 40 pi
print(torus_radicand(4, 2, 4), torus_diameter(4, 2, 4) / math.pi)

# one report per torus level
for k in range(1, 5):
    r = covering_report(4, k, 4)
    print(k, r.lemma_bound, r.theorem_bound, round(r.trivial_bound, 3))

# a larger system goes through the log path, but the floor is still exact
r = covering_report(100, 5, 4)
print(r.log_domain, r.theorem_bound, r.ratio_exact * math.pi / r.ratio_approx)

# a user-supplied critical diameter replaces the torus proxy
print(covering_report(4, 2, 4, d_c="1000").theorem_bound)
