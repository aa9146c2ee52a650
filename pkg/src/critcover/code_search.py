"""Linear codes in F_2^{2n} whose nonzero Majorana codewords pairwise anticommute.

Two pair conditions are supported:

``"clifford"``
    the true commutation rule of Majorana monomials,
    gamma_x gamma_y = (-1)^(|x||y| - |x & y|) gamma_y gamma_x.
``"paper"``
    the sum-parity rule ``|x| + |y| - |x & y|`` odd.

They agree when both strings have even weight and differ otherwise; two
disjoint single Majoranas anticommute physically but fail the sum-parity rule.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .pauli_algebra import DimensionError, MajoranaString

__all__ = [
    "CapacityError",
    "LinearCode",
    "CodeSearchResult",
    "PREDICATES",
    "anticommute_paper",
    "anticommute_clifford",
    "code_valid",
    "code_distance",
    "code_distance_gray",
    "rref",
    "search_exhaustive",
    "search_greedy",
    "best_result",
    "DISTANCE_CAP",
    "EXHAUSTIVE_MAX_N",
]

DISTANCE_CAP = 24
EXHAUSTIVE_MAX_N = 4
_GREEDY_FULL_SHUFFLE = 1 << 12


class CapacityError(ValueError):
    """The request exceeds what exhaustive enumeration is allowed to attempt."""


def _popcount(v: int) -> int:
    return bin(v).count("1")


def _check_pair(x: MajoranaString, y: MajoranaString) -> None:
    if x.n_modes != y.n_modes:
        raise DimensionError(f"{x.n_modes} vs {y.n_modes} modes")


def _sum_parity_bits(x: int, y: int) -> bool:
    return (_popcount(x) + _popcount(y) - _popcount(x & y)) % 2 == 1


def _clifford_bits(x: int, y: int) -> bool:
    return (_popcount(x) * _popcount(y) - _popcount(x & y)) % 2 == 1


_BIT_PREDICATES: dict[str, Callable[[int, int], bool]] = {
    "paper": _sum_parity_bits,
    "clifford": _clifford_bits,
}
PREDICATES = tuple(_BIT_PREDICATES)


def _predicate(name: str) -> Callable[[int, int], bool]:
    try:
        return _BIT_PREDICATES[name]
    except KeyError:
        raise ValueError(f"unknown predicate {name!r}; choose from {PREDICATES}") from None


def anticommute_paper(x: MajoranaString, y: MajoranaString) -> bool:
    """Sum-parity condition: w(x) + w(y) - overlap(x, y) is odd."""
    _check_pair(x, y)
    return _sum_parity_bits(x.bits, y.bits)


def anticommute_clifford(x: MajoranaString, y: MajoranaString) -> bool:
    """Whether the Majorana monomials for x and y anticommute."""
    _check_pair(x, y)
    return _clifford_bits(x.bits, y.bits)


def _to_str(bits: int, length: int) -> str:
    return "".join("1" if (bits >> j) & 1 else "0" for j in range(length))


def rref(rows: Iterable[int], length: int) -> list[int]:
    """Reduced row-echelon basis over F_2, pivots taken left to right in text order.

    Dependent rows are dropped.  Rows come back sorted by pivot position.
    """
    basis: list[int] = []
    pivots: list[int] = []
    for r in rows:
        for b, p in zip(basis, pivots):
            if (r >> p) & 1:
                r ^= b
        if r == 0:
            continue
        p = (r & -r).bit_length() - 1
        for i, b in enumerate(basis):
            if (b >> p) & 1:
                basis[i] = b ^ r
        basis.append(r)
        pivots.append(p)
    order = sorted(range(len(basis)), key=lambda i: pivots[i])
    return [basis[i] for i in order]


def _span(generators: Sequence[int]) -> list[int]:
    words = [0]
    for g in generators:
        words += [w ^ g for w in words]
    return words


@dataclass(frozen=True)
class LinearCode:
    """Binary linear code spanned by independent Majorana strings."""

    n_modes: int
    generators: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        length = 2 * self.n_modes
        for g in gens:
            if not 0 < g < (1 << length):
                raise ValueError(f"generator {g:#x} is zero or does not fit in {length} bits")
        if len(rref(gens, length)) != len(gens):
            raise ValueError("generators are linearly dependent")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "LinearCode":
        strings = [MajoranaString.from_str(r) for r in rows]
        if not strings:
            raise ValueError("need at least one generator")
        n = strings[0].n_modes
        if any(s.n_modes != n for s in strings):
            raise DimensionError("generators have different lengths")
        return cls(n, tuple(s.bits for s in strings))

    @property
    def k(self) -> int:
        return len(self.generators)

    @property
    def length(self) -> int:
        return 2 * self.n_modes

    def codewords(self) -> list[int]:
        """All 2^k codewords, zero first."""
        return _span(self.generators)

    def canonical(self) -> "LinearCode":
        return LinearCode(self.n_modes, tuple(rref(self.generators, self.length)))

    def generator_strings(self) -> list[str]:
        return [_to_str(g, self.length) for g in self.generators]


def code_valid(code: LinearCode, predicate: str = "clifford") -> bool:
    """Predicate holds on every unordered pair of distinct nonzero codewords."""
    pred = _predicate(predicate)
    words = code.codewords()[1:]
    return all(pred(x, y) for x, y in itertools.combinations(words, 2))


def code_distance(code: LinearCode, cap: int = DISTANCE_CAP) -> int:
    """Minimum weight over the 2^k - 1 nonzero codewords, by enumeration."""
    if code.k > cap:
        raise CapacityError(f"k = {code.k} exceeds the enumeration cap {cap}")
    return min(_popcount(w) for w in code.codewords()[1:])


def code_distance_gray(code: LinearCode, cap: int = DISTANCE_CAP) -> int:
    """Same minimum as :func:`code_distance`, walking codewords in Gray-code order."""
    if code.k > cap:
        raise CapacityError(f"k = {code.k} exceeds the enumeration cap {cap}")
    word, best = 0, None
    for step in range(1, 1 << code.k):
        # bit flipped between consecutive Gray codes
        word ^= code.generators[(step & -step).bit_length() - 1]
        w = _popcount(word)
        best = w if best is None else min(best, w)
    return best


@dataclass(frozen=True)
class CodeSearchResult:
    code: LinearCode
    predicate: str
    distance: int
    valid: bool
    method: str
    seed: int | None = None

    @property
    def k(self) -> int:
        return self.code.k

    @property
    def rate(self) -> Fraction:
        """k over the blocklength 2n."""
        return Fraction(self.code.k, 2 * self.code.n_modes)

    @property
    def rate_paper(self) -> Fraction:
        """k over the number of modes n."""
        return Fraction(self.code.k, self.code.n_modes)

    def sort_key(self) -> tuple:
        return (-self.k, -self.distance, tuple(self.code.generator_strings()))

    def as_dict(self) -> dict:
        return {
            "predicate": self.predicate,
            "method": self.method,
            "n": self.code.n_modes,
            "k": self.k,
            "rate": str(self.rate),
            "rate_paper": str(self.rate_paper),
            "distance": self.distance,
            "valid": self.valid,
            "generators": self.code.generator_strings(),
            "seed": self.seed,
        }


def _result(code: LinearCode, predicate: str, method: str, seed=None) -> CodeSearchResult:
    code = code.canonical()
    return CodeSearchResult(
        code=code,
        predicate=predicate,
        distance=code_distance(code),
        valid=code_valid(code, predicate),
        method=method,
        seed=seed,
    )


def search_exhaustive(n: int, predicate: str = "clifford") -> list[CodeSearchResult]:
    """Every maximal valid subspace of F_2^{2n}, one per subspace, best first.

    Valid subspaces are grown one dimension at a time; a subspace is reported
    when no vector extends it to a larger valid one.
    """
    pred = _predicate(predicate)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return []
    if n > EXHAUSTIVE_MAX_N:
        raise CapacityError(
            f"exhaustive search is limited to n <= {EXHAUSTIVE_MAX_N}; use search_greedy for n = {n}"
        )
    length = 2 * n
    size = 1 << length
    table = [[pred(x, y) for y in range(size)] for x in range(size)]

    maximal: list[tuple[int, ...]] = []
    level = {(v,): {0, v} for v in range(1, size)}
    while level:
        nxt: dict[tuple[int, ...], set[int]] = {}
        for basis, words in level.items():
            extended = False
            for v in range(1, size):
                if v in words:
                    continue
                new = [v ^ w for w in words]
                if not all(table[a][b] for a in new for b in words if b):
                    continue
                if not all(table[a][b] for a, b in itertools.combinations(new, 2)):
                    continue
                extended = True
                key = tuple(rref(basis + (v,), length))
                if key not in nxt:
                    nxt[key] = words.union(new)
            if not extended:
                maximal.append(basis)
        level = nxt

    results = [_result(LinearCode(n, b), predicate, "exhaustive") for b in maximal]
    return sorted(results, key=CodeSearchResult.sort_key)


def _greedy_once(n: int, predicate: str, rng: random.Random) -> LinearCode:
    length = 2 * n
    size = 1 << length
    if size - 1 <= _GREEDY_FULL_SHUFFLE:
        candidates = list(range(1, size))
        rng.shuffle(candidates)
    else:
        candidates = [rng.randrange(1, size) for _ in range(_GREEDY_FULL_SHUFFLE)]
    pred = _predicate(predicate)
    gens: list[int] = []
    words = [0]
    for v in candidates:
        if v in words:
            continue
        new = [v ^ w for w in words]
        if all(pred(a, b) for a in new for b in words[1:]) and all(
            pred(a, b) for a, b in itertools.combinations(new, 2)
        ):
            gens.append(v)
            words += new
    return LinearCode(n, tuple(gens))


def search_greedy(
    n: int,
    predicate: str = "clifford",
    seed: int = 0,
    iterations: int = 100,
    start: int = 0,
) -> CodeSearchResult:
    """Best of ``iterations`` randomized greedy constructions.

    Iteration ``i`` draws its candidate order from a generator seeded by
    ``(seed, i)``, so a run over ``range(start, start + iterations)`` can be
    split into shards and recombined with :func:`best_result`.
    """
    _predicate(predicate)
    if n < 1:
        raise ValueError("greedy search needs n >= 1")
    if iterations < 1:
        raise ValueError("iterations must be positive")
    results = []
    for i in range(start, start + iterations):
        rng = random.Random(f"{seed}:{i}")
        results.append(_result(_greedy_once(n, predicate, rng), predicate, "greedy", seed))
    return best_result(results)


def best_result(results: Iterable[CodeSearchResult]) -> CodeSearchResult:
    """Winner under (larger k, larger distance, smaller generator matrix)."""
    return min(results, key=CodeSearchResult.sort_key)
