"""Data models for hermdig"""

from .census import Census, CensusRow, CospectralClass, SuiteReport
from .digraph import Digraph, PairState
from .spectral import CharPoly, GaussianInt, HermitianMatrix, Spectrum
from .structures import Phase, QuaternaryPartition, SwitchReport

__all__ = [
    "Census",
    "CensusRow",
    "CharPoly",
    "CospectralClass",
    "Digraph",
    "GaussianInt",
    "HermitianMatrix",
    "PairState",
    "Phase",
    "QuaternaryPartition",
    "Spectrum",
    "SuiteReport",
    "SwitchReport",
]
