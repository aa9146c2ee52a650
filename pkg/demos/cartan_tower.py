"""
X-type tori are totally geodesic
================================
"""

from critcover import pauli_algebra as pa
from critcover.metric_geometry import PenaltyMetric

tower = pa.cartan_tower(3, 2)
print([str(w) for w in tower.basis], tower.all_commute())

# bracketing a tower element with anything leaves no X-type part
h = pa.HermExpansion.from_dict({"1XX": 1, "X1X": "1/2"})
c = pa.bracket_expand(h, pa.PauliWord.from_str("XYX"))
print(c.as_dict(), pa.xtype_component(c).as_dict())

# so the geodesic equation right-hand side vanishes for every penalty base
for b in (2, 4):
    print(b, pa.arnold_kheshin_rhs(h, "XYX", PenaltyMetric(b, 3)))

# random sampling over the whole tower
print(pa.verify_totally_geodesic(4, 2, samples=200, seed=1))

# a mixed element is not protected
h2 = pa.HermExpansion.from_dict({"X1": 1, "YX": 1})
print(pa.arnold_kheshin_rhs(h2, "ZX", PenaltyMetric(2, 2)))
