"""Dense-matrix oracles shared by the tests.

Everything here is built from explicit 2x2 matrices and Kronecker products,
never from the bit-level routines under test.
"""

from functools import reduce

import numpy as np
import pytest

SINGLE = {
    "1": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def dense(word: str) -> np.ndarray:
    """Matrix of a Pauli word; leftmost letter is the leftmost tensor factor."""
    return reduce(np.kron, [SINGLE[c] for c in word.replace("I", "1")])


def dense_expansion(terms: dict, n: int) -> np.ndarray:
    out = np.zeros((2**n, 2**n), dtype=complex)
    for word, c in terms.items():
        out += float(c) * dense(word)
    return out


def pauli_coefficients(m: np.ndarray, n: int) -> dict:
    """Decompose a matrix in the Pauli basis: c_P = trace(P M) / 2^n."""
    import itertools

    out = {}
    for letters in itertools.product("1XYZ", repeat=n):
        w = "".join(letters)
        c = np.trace(dense(w) @ m) / 2**n
        if abs(c) > 1e-12:
            out[w] = c
    return out


def gamma_dense(n: int, index: int) -> np.ndarray:
    """gamma_{2m-1} = Z..Z X 1..1 and gamma_{2m} = Z..Z Y 1..1 (m-1 Z factors)."""
    m, odd = divmod(index - 1, 2)
    letters = ["Z"] * m + ["Y" if odd else "X"] + ["1"] * (n - m - 1)
    return dense("".join(letters))


def majorana_dense(bits: str) -> np.ndarray:
    n = len(bits) // 2
    out = np.eye(2**n, dtype=complex)
    for j, ch in enumerate(bits):
        if ch == "1":
            out = out @ gamma_dense(n, j + 1)
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20261017)


_ACCEPTANCE: dict[str, str] = {}
_NOTES: list[str] = []


@pytest.fixture
def note():
    """Record a line for the acceptance summary (printed even when the test passes)."""
    return _NOTES.append


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_ACCEPTANCE.items(), key=lambda t: int(t[0].split("_")[1][1:])):
        terminalreporter.write_line(f"{outcome}  {name}")
    for line in _NOTES:
        terminalreporter.write_line(f"note: {line}")
