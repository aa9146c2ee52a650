"""Covering-number bounds and curvature for exponential penalty metrics on SU(2^N)."""

from . import code_search, curvature, metric_geometry, pauli_algebra
from .code_search import LinearCode, search_exhaustive, search_greedy
from .curvature import bishop_gromov_bound, ricci_tensor
from .metric_geometry import PenaltyMetric, covering_report, theorem_bound, torus_diameter
from .pauli_algebra import HermExpansion, MajoranaString, PauliWord, bracket, cartan_tower

__version__ = "0.1.0"

__all__ = [
    "code_search",
    "curvature",
    "metric_geometry",
    "pauli_algebra",
    "LinearCode",
    "search_exhaustive",
    "search_greedy",
    "bishop_gromov_bound",
    "ricci_tensor",
    "PenaltyMetric",
    "covering_report",
    "theorem_bound",
    "torus_diameter",
    "HermExpansion",
    "MajoranaString",
    "PauliWord",
    "bracket",
    "cartan_tower",
]
