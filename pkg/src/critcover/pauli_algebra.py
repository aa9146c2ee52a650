"""Exact algebra of N-qubit Pauli words and Majorana strings.

Words use the two-bitmask symplectic encoding: bit ``q`` of ``x`` and ``z``
describes qubit ``q + 1`` (the leftmost letter of the text form), with
``(x, z)`` = 00, 10, 11, 01 meaning 1, X, Y, Z.  Products carry an exact
power of ``i`` and all linear combinations use :class:`fractions.Fraction`
coefficients, so the bracket identities below hold with zero tolerance.

Sign conventions
----------------
A :class:`HermExpansion` ``{P: c}`` stands for the Hermitian operator
``sum c P``; the corresponding element of su(2^N) is ``i`` times it.  For
Hermitian ``H`` and ``K`` the commutator ``[H, K]`` is anti-Hermitian, and
:func:`bracket_expand` returns the Hermitian ``C`` with ``[H, K] = i C``.
:func:`arnold_kheshin_rhs` evaluates ``i <H, [H, K]>`` with the inner product
conjugate-linear in its first slot, which is ``-<H, C>``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping

from .metric_geometry import PenaltyMetric

__all__ = [
    "DimensionError",
    "PauliWord",
    "PhasedPauli",
    "HermExpansion",
    "CartanTower",
    "MajoranaString",
    "weight",
    "commutes",
    "product",
    "bracket",
    "bracket_expand",
    "cartan_tower",
    "xtype_component",
    "metric_inner",
    "arnold_kheshin_rhs",
    "jordan_wigner",
    "all_words",
    "random_tower_element",
    "random_expansion",
    "verify_totally_geodesic",
]

_LETTER_BITS = {"1": (0, 0), "I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_LETTER = {(0, 0): "1", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}


class DimensionError(ValueError):
    """Operands live on different numbers of qubits or modes."""


def _popcount(v: int) -> int:
    return bin(v).count("1")


@dataclass(frozen=True, order=True)
class PauliWord:
    n_qubits: int
    x_bits: int
    z_bits: int

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("a Pauli word needs at least one qubit")
        limit = 1 << self.n_qubits
        if not (0 <= self.x_bits < limit and 0 <= self.z_bits < limit):
            raise ValueError(f"bitmasks do not fit in {self.n_qubits} qubits")

    @classmethod
    def from_str(cls, text: str) -> "PauliWord":
        """Parse e.g. ``"11ZX1Y"``; ``1`` and ``I`` both mean identity."""
        text = text.strip().upper()
        if not text:
            raise ValueError("empty Pauli word")
        x = z = 0
        for q, letter in enumerate(text):
            try:
                xb, zb = _LETTER_BITS[letter]
            except KeyError:
                raise ValueError(f"bad Pauli letter {letter!r} in {text!r}") from None
            x |= xb << q
            z |= zb << q
        return cls(len(text), x, z)

    @classmethod
    def identity(cls, n_qubits: int) -> "PauliWord":
        return cls(n_qubits, 0, 0)

    def letter(self, q: int) -> str:
        return _BITS_LETTER[((self.x_bits >> q) & 1, (self.z_bits >> q) & 1)]

    def __str__(self) -> str:
        return "".join(self.letter(q) for q in range(self.n_qubits))

    def __repr__(self) -> str:
        return f"PauliWord({str(self)!r})"

    @property
    def weight(self) -> int:
        return _popcount(self.x_bits | self.z_bits)

    @property
    def is_xtype(self) -> bool:
        """True for words made only of the letters 1 and X."""
        return self.z_bits == 0

    def sort_key(self) -> tuple:
        return (self.weight, str(self))


def weight(p: PauliWord) -> int:
    """Number of non-identity letters."""
    return p.weight


def _same_size(p, q) -> None:
    if p.n_qubits != q.n_qubits:
        raise DimensionError(f"{p.n_qubits} vs {q.n_qubits} qubits")


def commutes(p: PauliWord, q: PauliWord) -> bool:
    """Symplectic form: words commute iff they anticommute on an even number of sites."""
    _same_size(p, q)
    return _popcount((p.x_bits & q.z_bits) ^ (p.z_bits & q.x_bits)) % 2 == 0


@dataclass(frozen=True)
class PhasedPauli:
    """The operator ``coefficient * i**phase_exp * word``.

    Kept canonical: the coefficient is nonnegative (a sign is moved into the
    phase) and the zero element is ``0 * identity`` with phase 0.
    """

    word: PauliWord
    phase_exp: int = 0
    coefficient: Fraction = Fraction(1)

    def __post_init__(self):
        c = Fraction(self.coefficient)
        phase = self.phase_exp % 4
        word = self.word
        if c == 0:
            word, phase = PauliWord.identity(word.n_qubits), 0
        elif c < 0:
            c, phase = -c, (phase + 2) % 4
        object.__setattr__(self, "coefficient", c)
        object.__setattr__(self, "phase_exp", phase)
        object.__setattr__(self, "word", word)

    @property
    def is_zero(self) -> bool:
        return self.coefficient == 0

    def __neg__(self) -> "PhasedPauli":
        return PhasedPauli(self.word, self.phase_exp + 2, self.coefficient)

    def __mul__(self, other: "PhasedPauli") -> "PhasedPauli":
        if not isinstance(other, PhasedPauli):
            return NotImplemented
        pq = product(self.word, other.word)
        return PhasedPauli(
            pq.word,
            self.phase_exp + other.phase_exp + pq.phase_exp,
            self.coefficient * other.coefficient,
        )

    def scaled(self, factor) -> "PhasedPauli":
        return PhasedPauli(self.word, self.phase_exp, self.coefficient * Fraction(factor))

    def complex_coefficient(self) -> complex:
        return complex(float(self.coefficient)) * (1j**self.phase_exp)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        phase = ("", "i*", "-", "-i*")[self.phase_exp]
        coef = "" if self.coefficient == 1 else f"{self.coefficient}*"
        return f"{phase}{coef}{self.word}"


def product(p: PauliWord, q: PauliWord) -> PhasedPauli:
    """Operator product ``p q`` as a phased word.

    With each letter written ``i^(xz) X^x Z^z``, moving ``Z^z1`` past ``X^x2``
    costs ``(-1)^(z1 x2)``, giving the phase
    ``|x1&z1| + |x2&z2| + 2|z1&x2| - |x3&z3|  (mod 4)``.
    """
    _same_size(p, q)
    x3 = p.x_bits ^ q.x_bits
    z3 = p.z_bits ^ q.z_bits
    phase = (
        _popcount(p.x_bits & p.z_bits)
        + _popcount(q.x_bits & q.z_bits)
        + 2 * _popcount(p.z_bits & q.x_bits)
        - _popcount(x3 & z3)
    )
    return PhasedPauli(PauliWord(p.n_qubits, x3, z3), phase % 4)


def bracket(p: PauliWord, q: PauliWord) -> PhasedPauli:
    """Commutator ``[p, q]``: zero, or ``2 p q`` when the words anticommute."""
    if commutes(p, q):
        return PhasedPauli(PauliWord.identity(p.n_qubits), 0, Fraction(0))
    return product(p, q).scaled(2)


@dataclass(frozen=True)
class HermExpansion:
    """Real linear combination of Pauli words with exact coefficients."""

    n_qubits: int
    terms: Mapping[PauliWord, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for word, c in self.terms.items():
            if word.n_qubits != self.n_qubits:
                raise DimensionError(f"word {word} does not have {self.n_qubits} qubits")
            c = Fraction(c)
            if c != 0:
                clean[word] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items(), key=lambda t: t[0].sort_key())))

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> "HermExpansion":
        """Build from ``{"1XX": 1, "XYX": "1/2"}``; needs at least one entry."""
        words = {PauliWord.from_str(w): Fraction(c) for w, c in data.items()}
        if not words:
            raise ValueError("cannot infer n_qubits from an empty mapping")
        n = next(iter(words)).n_qubits
        return cls(n, words)

    @classmethod
    def of(cls, word: PauliWord, coefficient=1) -> "HermExpansion":
        return cls(word.n_qubits, {word: Fraction(coefficient)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[PauliWord]:
        return iter(self.terms)

    def __getitem__(self, word) -> Fraction:
        if isinstance(word, str):
            word = PauliWord.from_str(word)
        return self.terms.get(word, Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, HermExpansion):
            return NotImplemented
        return self.n_qubits == other.n_qubits and self.terms == other.terms

    def __hash__(self):
        return hash((self.n_qubits, tuple(self.terms.items())))

    def __add__(self, other: "HermExpansion") -> "HermExpansion":
        _same_size(self, other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return HermExpansion(self.n_qubits, out)

    def __neg__(self) -> "HermExpansion":
        return HermExpansion(self.n_qubits, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "HermExpansion") -> "HermExpansion":
        return self + (-other)

    def as_dict(self) -> dict[str, str]:
        return {str(w): str(c) for w, c in self.terms.items()}


def _as_expansion(k) -> HermExpansion:
    if isinstance(k, PauliWord):
        return HermExpansion.of(k)
    if isinstance(k, str):
        return HermExpansion.of(PauliWord.from_str(k))
    return k


def bracket_expand(h: HermExpansion, k) -> HermExpansion:
    """Hermitian ``C`` with ``[h, k] = i C``, extended bilinearly.

    ``k`` may be a single :class:`PauliWord` or a :class:`HermExpansion`.
    Anticommuting words have ``p q = +-i r``, so every coefficient of ``C`` is
    real and rational.
    """
    k = _as_expansion(k)
    _same_size(h, k)
    out: dict[PauliWord, Fraction] = {}
    for p, a in h.terms.items():
        for q, c in k.terms.items():
            if commutes(p, q):
                continue
            pq = product(p, q)
            # phase is odd; i^phase = i * (+1 or -1)
            sign = 1 if pq.phase_exp == 1 else -1
            out[pq.word] = out.get(pq.word, 0) + 2 * sign * a * c
    return HermExpansion(h.n_qubits, out)


def xtype_component(e: HermExpansion) -> HermExpansion:
    """Restriction of ``e`` to words built from 1 and X."""
    return HermExpansion(e.n_qubits, {w: c for w, c in e.terms.items() if w.is_xtype})


def metric_inner(a: HermExpansion, b: HermExpansion, metric: PenaltyMetric) -> Fraction:
    """Penalty inner product: sum over shared words of ``a_I b_I b^(2 w(I))``."""
    _same_size(a, b)
    if metric.n_qubits != a.n_qubits:
        raise DimensionError(f"metric is on {metric.n_qubits} qubits, operands on {a.n_qubits}")
    total = Fraction(0)
    for w, c in a.terms.items():
        other = b.terms.get(w)
        if other is not None:
            total += c * other * metric.squared_length(w.weight)
    return total


def arnold_kheshin_rhs(h: HermExpansion, k, metric: PenaltyMetric) -> Fraction:
    """Right-hand side ``i <H, [H, K]>`` of the geodesic equation, exactly.

    Equals ``-<H, C>`` for ``C = bracket_expand(H, K)``.  It is zero whenever
    ``H`` lies in a commutative X-type span, for every diagonal metric.
    """
    k = _as_expansion(k)
    return -metric_inner(h, bracket_expand(h, k), metric)


@dataclass(frozen=True)
class CartanTower:
    n_qubits: int
    level: int
    basis: tuple[PauliWord, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def all_commute(self) -> bool:
        return all(commutes(p, q) for p, q in itertools.combinations(self.basis, 2))


def cartan_tower(N: int, k: int) -> CartanTower:
    """X-type words of weight 1..k on N qubits, ordered by weight then site set.

    Sites are enumerated with :func:`itertools.combinations`, so weight one
    runs ``X11..1, 1X1..1, ...`` and each level extends the previous one.
    """
    if N < 1:
        raise ValueError("N must be positive")
    if not 1 <= k <= N:
        raise ValueError(f"k must lie in [1, {N}], got {k}")
    basis = []
    for w in range(1, k + 1):
        for sites in itertools.combinations(range(N), w):
            basis.append(PauliWord(N, sum(1 << s for s in sites), 0))
    return CartanTower(N, k, tuple(basis))


def all_words(N: int, include_identity: bool = False) -> list[PauliWord]:
    """Every Pauli word on N qubits, ordered by (weight, text)."""
    words = [PauliWord(N, x, z) for x in range(1 << N) for z in range(1 << N)]
    if not include_identity:
        words = [w for w in words if w.x_bits or w.z_bits]
    return sorted(words, key=PauliWord.sort_key)


@dataclass(frozen=True)
class MajoranaString:
    """Product of gamma matrices selected by a length-2n bit string.

    Bit ``j`` of ``bits`` (text position ``j``) selects gamma_{j+1}.
    """

    n_modes: int
    bits: int

    def __post_init__(self):
        if self.n_modes < 0:
            raise ValueError("n_modes must be nonnegative")
        if not 0 <= self.bits < (1 << (2 * self.n_modes)):
            raise ValueError(f"bits do not fit in {2 * self.n_modes} positions")

    @classmethod
    def from_str(cls, text: str) -> "MajoranaString":
        text = text.strip()
        if len(text) % 2 or set(text) - {"0", "1"}:
            raise ValueError(f"Majorana string must be an even-length 0/1 string: {text!r}")
        return cls(len(text) // 2, sum(1 << j for j, ch in enumerate(text) if ch == "1"))

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> j) & 1 else "0" for j in range(2 * self.n_modes))

    def __repr__(self) -> str:
        return f"MajoranaString({str(self)!r})"

    @property
    def weight(self) -> int:
        return _popcount(self.bits)

    def indices(self) -> list[int]:
        """1-based indices of the gamma matrices in the monomial."""
        return [j + 1 for j in range(2 * self.n_modes) if (self.bits >> j) & 1]


def _gamma(n: int, index: int) -> PhasedPauli:
    # gamma_{2m-1} = Z^(m-1) X 1..., gamma_{2m} = Z^(m-1) Y 1...
    m, odd = divmod(index - 1, 2)
    z = (1 << m) - 1
    x = 1 << m
    if odd:
        z |= 1 << m
    word = PauliWord(n, x, z)
    # PauliWord with x=z=1 on a site is Y with no extra phase
    return PhasedPauli(word)


def jordan_wigner(m: MajoranaString) -> PhasedPauli:
    """Qubit image of the ordered monomial gamma_{j1} gamma_{j2} ... (j1 < j2 < ...).

    ``n_modes = 0`` has no qubits to host an operator and is rejected.
    """
    if m.n_modes < 1:
        raise ValueError("Jordan-Wigner needs at least one mode")
    out = PhasedPauli(PauliWord.identity(m.n_modes))
    for j in m.indices():
        out = out * _gamma(m.n_modes, j)
    return out



def random_tower_element(tower: CartanTower, rng: random.Random, max_num: int = 7,
                         max_den: int = 5) -> HermExpansion:
    """Random nonzero rational combination of a tower's basis words."""
    while True:
        terms = {
            w: Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
            for w in tower.basis
            if rng.random() < 0.6
        }
        h = HermExpansion(tower.n_qubits, terms)
        if h:
            return h


def random_expansion(N: int, rng: random.Random, n_terms: int = 3) -> HermExpansion:
    """Random rational combination of up to ``n_terms`` distinct non-identity words."""
    n_terms = min(n_terms, 4**N - 1)
    terms = {}
    while len(terms) < n_terms:
        x, z = rng.randrange(1 << N), rng.randrange(1 << N)
        if x or z:
            terms[PauliWord(N, x, z)] = Fraction(rng.randint(1, 9), rng.randint(1, 4))
    return HermExpansion(N, terms)


def verify_totally_geodesic(N: int, k: int, samples: int, seed: int = 0,
                            bases=(2, 4)) -> dict:
    """Sample H in the level-k tower span and random K; count exact passes.

    A sample passes when the bracket has no X-type component and the
    geodesic-equation right-hand side vanishes for every base in ``bases``.
    """
    tower = cartan_tower(N, k)
    metrics = [PenaltyMetric(b, N) for b in bases]
    rng = random.Random(seed)
    xtype_ok = rhs_ok = 0
    for _ in range(samples):
        h = random_tower_element(tower, rng)
        kk = random_expansion(N, rng, n_terms=rng.randint(1, 4))
        if not xtype_component(bracket_expand(h, kk)):
            xtype_ok += 1
        if all(arnold_kheshin_rhs(h, kk, m) == 0 for m in metrics):
            rhs_ok += 1
    return {"samples": samples, "xtype_exclusion_passes": xtype_ok, "rhs_zero_passes": rhs_ok}
