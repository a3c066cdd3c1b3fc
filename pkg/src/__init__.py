"""
hermdig - Hermitian adjacency spectra of mixed graphs (digraphs with digons)
"""

from .codec import decode, encode
from .core import HermDig, init
from .event import Event, EventType
from .eventbus import Eventbus
from .families import family
from .hermitian import hermitian_char_poly, hermitian_matrix, spectrum
from .models import (
    CharPoly,
    Digraph,
    PairState,
    QuaternaryPartition,
    Spectrum,
)

__version__ = "0.1.0"
__all__ = [
    "HermDig",
    "init",
    "Event",
    "EventType",
    "Eventbus",
    "CharPoly",
    "Digraph",
    "PairState",
    "QuaternaryPartition",
    "Spectrum",
    "decode",
    "encode",
    "family",
    "hermitian_char_poly",
    "hermitian_matrix",
    "spectrum",
]
