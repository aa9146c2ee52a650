"""
Searching for anticommuting Majorana codes
==========================================
"""

from critcover import code_search as cs
from critcover.pauli_algebra import MajoranaString, jordan_wigner

# gamma_1 gamma_2 on one mode is i Z
print(jordan_wigner(MajoranaString.from_str("11")))

# the two predicates disagree on odd-weight pairs
a, b = MajoranaString.from_str("10"), MajoranaString.from_str("01")
print(cs.anticommute_clifford(a, b), cs.anticommute_paper(a, b))

for predicate in cs.PREDICATES:
    best = cs.search_exhaustive(3, predicate)[0]
    print(predicate, best.k, best.distance, best.code.generator_strings())

# greedy runs can be split into shards and merged afterwards
shards = [cs.search_greedy(6, "clifford", seed=2, iterations=50, start=s) for s in (0, 50)]
print(cs.best_result(shards).as_dict())
