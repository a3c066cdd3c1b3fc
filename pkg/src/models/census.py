"""Census and verification report records."""

from dataclasses import asdict, dataclass, field
from datetime import datetime
from typing import Any, Dict, Iterable, List, Optional

from .spectral import CharPoly


@dataclass(frozen=True)
class CensusRow:
    n: int
    matrix: str
    digraph_count: int
    distinct_charpolys: int
    irreducible_classes: int
    squarefree_classes: int
    max_class_size: int
    determined_by_spectrum: int
    classes_no_graphs: int
    classes_only_graphs: int
    classes_mixed: int
    irreducible_digraphs: int = 0
    squarefree_digraphs: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class CospectralClass:
    key: CharPoly
    members: List[str]
    contains_graph: bool
    all_graphs: bool

    @property
    def size(self) -> int:
        return len(self.members)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "charpoly": list(self.key.coeffs),
            "plain": str(self.key),
            "size": self.size,
            "members": self.members,
            "contains_graph": self.contains_graph,
            "all_graphs": self.all_graphs,
        }


@dataclass
class Census:
    row: CensusRow
    # a list, or a view re-read from the census store on each pass
    classes: Iterable[CospectralClass]


@dataclass
class Counterexample:
    check: str
    hd6: Optional[str]
    detail: Dict[str, Any] = field(default_factory=dict)


@dataclass
class CheckTally:
    check: str
    passed: int = 0
    failed: int = 0
    counterexamples: List[Counterexample] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class SuiteReport:
    suite: str
    n: int
    started_at: datetime = field(default_factory=datetime.now)
    finished_at: Optional[datetime] = None
    checks: Dict[str, CheckTally] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(t.ok for t in self.checks.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "n": self.n,
            "status": "PASS" if self.ok else "FAIL",
            "checks": [
                {
                    "check": t.check,
                    "passed": t.passed,
                    "failed": t.failed,
                    "counterexamples": [
                        {"hd6": c.hd6, "detail": c.detail} for c in t.counterexamples
                    ],
                }
                for t in self.checks.values()
            ],
        }


@dataclass
class ClassificationReport:
    """Outcome of the exhaustive classification checks for one order."""
    n: int
    checks: Dict[str, bool] = field(default_factory=dict)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())
