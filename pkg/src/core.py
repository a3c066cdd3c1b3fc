"""
HermDig Core - facade over the spectral engine, the event bus and the census store.

Usage:
    from hermdig import HermDig, decode

    hd = HermDig("/path/to/project")

    # Spectrum of a single digraph
    report = hd.spectrum_report(decode("Cb"))

    # Census of all digraphs of order 4
    result = hd.census(4)
    print(result.row.distinct_charpolys)

    # Listen to suite failures
    hd.on(EventType.CHECK_FAILED, print)

    hd.close()
"""

import logging
from pathlib import Path
from typing import Any, Callable, Dict, Optional

from .codec import encode
from .config import Settings
from .digraphs import cartesian_product
from .enumeration import LARGE_ORDER, census as run_census
from .event import Event, EventType
from .eventbus import Eventbus
from .hermitian import (
    adjacency_char_poly,
    all_ones_eigenvector,
    hermitian_char_poly,
    spectral_stats,
    spectrum,
    underlying_char_poly,
    underlying_edge_count,
)
from .models.census import Census
from .models.digraph import Digraph
from .models.spectral import CharPoly
from .sachs import sachs_coefficients, triangle_census, trace_identities
from .storage.census_store import CensusStore
from .tracer import Tracer

logger = logging.getLogger(__name__)

_CHAR_POLYS = {
    "H": hermitian_char_poly,
    "A": adjacency_char_poly,
    "G": underlying_char_poly,
}


class HermDig:
    """
    Main interface for hermdig.

    This class wires together:
    - Settings (tolerance, worker count, large-run opt-in)
    - Event bus and tracer for verification and census progress
    - A census store, opened on first use, for large census runs
    """

    def __init__(self, work_dir: str = ".", hd_dir: str = ".hermdig", settings: Optional[Settings] = None):
        """
        Args:
            work_dir: Directory the storage directory lives in
            hd_dir: Name of the storage directory (default: .hermdig)
            settings: Runtime settings; read from the environment when omitted.
                When given, its work_dir and hd_dir win over the arguments
        """
        self.settings = settings or Settings.from_env(work_dir=work_dir, hd_dir=hd_dir)
        self.work_dir = Path(self.settings.work_dir).resolve()
        self.hd_path = self.work_dir / self.settings.hd_dir
        self._store: Optional[CensusStore] = None

        self.eventbus = Eventbus()
        self.tracer = Tracer()
        self.eventbus.subscribe_all(self.tracer.handle_event)

    # ─── Event Subscription ────────────────────────────────────────

    def on(self, event_type: EventType, callback: Callable[[Event], None]):
        """Subscribe to a specific event type."""
        self.eventbus.subscribe(event_type, callback)

    def on_all(self, callback: Callable[[Event], None]):
        """Subscribe to all event types."""
        self.eventbus.subscribe_all(callback)

    def emit(self, event: Event):
        self.eventbus.publish(event)

    # ─── Single Digraph Reports ────────────────────────────────────

    def charpoly(self, X: Digraph, matrix: str = "H") -> CharPoly:
        """Exact characteristic polynomial of H (default), A or the underlying graph (G)."""
        try:
            return _CHAR_POLYS[matrix](X)
        except KeyError:
            raise ValueError(f"matrix must be one of {sorted(_CHAR_POLYS)}, got {matrix!r}") from None

    def spectrum_report(self, X: Digraph) -> Dict[str, Any]:
        tol = self.settings.tolerance
        spec = spectrum(X, tol)
        stats = spectral_stats(X, tol)
        cp = hermitian_char_poly(X)
        ones = all_ones_eigenvector(X)
        return {
            "hd6": encode(X),
            "n": X.n,
            "charpoly": list(cp.coeffs),
            "plain": str(cp),
            "eigenvalues": spec.values(),
            "distinct_eigenvalues": list(spec.eigenvalues),
            "multiplicities": list(spec.multiplicities),
            "zero_multiplicity": cp.zero_multiplicity,
            "lambda1": stats.lambda1,
            "lambda_n": stats.lambda_n,
            "rho": stats.rho,
            "eta_plus": stats.eta_plus,
            "eta_minus": stats.eta_minus,
            "symmetric_about_zero": stats.symmetric_about_zero,
            "all_ones_eigenvalue": ones.eigenvalue if ones.exact else None,
            "underlying_edges": underlying_edge_count(X),
        }

    def sachs_report(self, X: Digraph) -> Dict[str, Any]:
        coeffs = sachs_coefficients(X)
        traces = trace_identities(X)
        return {
            "hd6": encode(X),
            "coefficients": list(coeffs),
            "matches_charpoly": CharPoly(coeffs) == hermitian_char_poly(X),
            "triangles": triangle_census(X).as_tuple(),
            "trace_identities": traces.ok,
        }

    def product(self, X: Digraph, Y: Digraph) -> Digraph:
        return cartesian_product(X, Y)

    # ─── Census ────────────────────────────────────────────────────

    @property
    def store(self) -> CensusStore:
        if self._store is None:
            self.hd_path.mkdir(parents=True, exist_ok=True)
            self._store = CensusStore(str(self.hd_path / "census.sqlite"))
        return self._store

    def census(self, n: int, matrix: str = "H") -> Census:
        """Census of every digraph of order n. Large orders stream classes through the store."""
        s = self.settings
        self.emit(Event(type=EventType.CENSUS_START, n=n, metadata={"matrix": matrix}))

        def on_level(order: int, count: int):
            self.emit(Event(type=EventType.CENSUS_LEVEL, n=order, detail=count))

        result = run_census(
            n,
            matrix=matrix,
            jobs=s.jobs,
            progress=s.progress,
            large=s.large,
            store=self.store if n >= LARGE_ORDER else None,
            on_level=on_level,
        )
        self.emit(Event(type=EventType.CENSUS_END, n=n, detail=result.row.to_dict()))
        return result

    def close(self):
        if self._store is not None:
            self._store.close()
            self._store = None


def init(work_dir: str = ".", **settings) -> HermDig:
    """Quick-start: a HermDig rooted at work_dir with settings read from the environment."""
    return HermDig(work_dir, settings=Settings.from_env(work_dir=work_dir, **settings))
