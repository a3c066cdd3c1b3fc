import json
import sqlite3
from datetime import datetime
from pathlib import Path
from typing import Iterable, Iterator, Optional, Tuple

from ..models.census import CensusRow, CospectralClass
from ..models.spectral import CharPoly


def _sort_text(cp: CharPoly) -> str:
    """Text key whose string order matches CharPoly.sort_key order for degree <= 99."""
    parts = [f"{cp.degree:02d}"]
    for c in reversed(cp.coeffs):
        # offset keeps negative coefficients ordered as plain strings
        parts.append(f"{c + 10 ** 17:018d}")
    return ".".join(parts)


class CensusStore:
    """Append-only census members in SQLite. Loads schema.sql on init."""

    def __init__(self, db_path: str):
        self.db_path = db_path
        self.conn = sqlite3.connect(db_path, check_same_thread=False)
        self._init_schema()

    def _init_schema(self):
        schema_path = Path(__file__).parent / "schema.sql"
        with open(schema_path) as f:
            self.conn.executescript(f.read())
        self.conn.commit()

    # ─── Runs ─────────────────────────────────────────────────────

    def begin_run(self, n: int, matrix: str) -> int:
        """Open a census run and return its INTEGER id."""
        cursor = self.conn.execute(
            "INSERT INTO runs (n, matrix, started_at) VALUES (?, ?, ?)",
            (n, matrix, int(datetime.now().timestamp())),
        )
        self.conn.commit()
        return cursor.lastrowid

    def finish_run(self, run_id: int, row: CensusRow):
        self.conn.execute(
            "UPDATE runs SET finished_at = ?, row_json = ? WHERE run_id = ?",
            (int(datetime.now().timestamp()), json.dumps(row.to_dict()), run_id),
        )
        self.conn.commit()

    def get_row(self, run_id: int) -> Optional[CensusRow]:
        row = self.conn.execute("SELECT row_json FROM runs WHERE run_id = ?", (run_id,)).fetchone()
        if not row or row[0] is None:
            return None
        return CensusRow(**json.loads(row[0]))

    # ─── Members ──────────────────────────────────────────────────

    def append_members(self, run_id: int, rows: Iterable[Tuple[str, CharPoly, bool]]) -> int:
        """Append (hd6, charpoly, is_graph) rows; returns how many were written."""
        batch = [(run_id, cp.key(), _sort_text(cp), hd6, int(is_graph)) for hd6, cp, is_graph in rows]
        self.conn.executemany(
            "INSERT INTO members (run_id, charpoly, sort_key, hd6, is_graph) VALUES (?, ?, ?, ?, ?)",
            batch,
        )
        self.conn.commit()
        return len(batch)

    def member_count(self, run_id: int) -> int:
        return self.conn.execute("SELECT COUNT(*) FROM members WHERE run_id = ?", (run_id,)).fetchone()[0]

    def duplicate_members(self, run_id: int) -> int:
        """Members whose hd6 already appears earlier in the same run."""
        return self.conn.execute(
            "SELECT COUNT(*) - COUNT(DISTINCT hd6) FROM members WHERE run_id = ?", (run_id,)
        ).fetchone()[0]

    def iter_classes(self, run_id: int) -> Iterator[CospectralClass]:
        """Classes in characteristic polynomial order, members sorted by hd6."""
        cursor = self.conn.execute(
            "SELECT charpoly, hd6, is_graph FROM members WHERE run_id = ? ORDER BY sort_key, hd6",
            (run_id,),
        )
        current = None
        for key, hd6, is_graph in cursor:
            if current is None or current[0] != key:
                if current is not None:
                    yield self._to_class(*current)
                current = (key, [], [])
            current[1].append(hd6)
            current[2].append(bool(is_graph))
        if current is not None:
            yield self._to_class(*current)

    def _to_class(self, key: str, members, graph_flags) -> CospectralClass:
        return CospectralClass(
            key=CharPoly.from_key(key),
            members=members,
            contains_graph=any(graph_flags),
            all_graphs=all(graph_flags),
        )

    def close(self):
        self.conn.close()


class StoredClasses:
    """Classes of one stored run. Every iteration streams them from the database."""

    def __init__(self, store: CensusStore, run_id: int):
        self.store = store
        self.run_id = run_id

    def __iter__(self) -> Iterator[CospectralClass]:
        return self.store.iter_classes(self.run_id)
