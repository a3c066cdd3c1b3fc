"""
Tracer - Subscribes to verification and census events and tallies them into reports.
"""

import logging
from datetime import datetime
from typing import Dict, Optional

from .event import Event, EventType
from .models.census import CheckTally, Counterexample, SuiteReport

logger = logging.getLogger(__name__)

# counterexamples kept per check; failures beyond this are only counted
MAX_COUNTEREXAMPLES = 20


class Tracer:
    """Listens to events and builds one SuiteReport per suite run."""

    def __init__(self):
        self.reports: Dict[str, SuiteReport] = {}
        self.census_levels: Dict[int, int] = {}

    def handle_event(self, event: Event):
        handlers = {
            EventType.SUITE_START: self._on_suite_start,
            EventType.CHECK_PASSED: self._on_check_passed,
            EventType.CHECK_FAILED: self._on_check_failed,
            EventType.SUITE_END: self._on_suite_end,
            EventType.CENSUS_START: self._on_census_start,
            EventType.CENSUS_LEVEL: self._on_census_level,
            EventType.CENSUS_END: self._on_census_end,
            EventType.SWITCH_APPLIED: self._on_switch_applied,
        }
        handler = handlers.get(event.type)
        if handler:
            handler(event)

    def report(self, suite: str) -> Optional[SuiteReport]:
        return self.reports.get(suite)

    # ─── Suites ────────────────────────────────────────────────────

    def _on_suite_start(self, event: Event):
        self.reports[event.suite] = SuiteReport(suite=event.suite, n=event.n or 0)
        logger.info("suite %s started (n=%s)", event.suite, event.n)

    def _on_check_passed(self, event: Event):
        self._tally(event).passed += 1

    def _on_check_failed(self, event: Event):
        tally = self._tally(event)
        tally.failed += 1
        if len(tally.counterexamples) < MAX_COUNTEREXAMPLES:
            tally.counterexamples.append(
                Counterexample(check=tally.check, hd6=event.hd6, detail=dict(event.detail or {}))
            )
        logger.warning("%s/%s failed on %s: %s", event.suite, event.check, event.hd6, event.detail)

    def _on_suite_end(self, event: Event):
        report = self.reports.get(event.suite)
        if report is None:
            return
        report.finished_at = datetime.now()
        logger.info(
            "suite %s finished: %s",
            event.suite,
            "PASS" if report.ok else "FAIL",
        )

    def _tally(self, event: Event) -> CheckTally:
        report = self.reports.get(event.suite)
        if report is None:
            report = self.reports[event.suite] = SuiteReport(suite=event.suite, n=event.n or 0)
        if event.check not in report.checks:
            report.checks[event.check] = CheckTally(check=event.check)
        return report.checks[event.check]

    # ─── Census ────────────────────────────────────────────────────

    def _on_census_start(self, event: Event):
        self.census_levels = {}
        logger.info("census started: n=%s matrix=%s", event.n, event.metadata.get("matrix"))

    def _on_census_level(self, event: Event):
        self.census_levels[event.n] = event.detail
        logger.debug("order %s: %s classes", event.n, event.detail)

    def _on_census_end(self, event: Event):
        logger.info("census finished: n=%s %s", event.n, event.detail)

    def _on_switch_applied(self, event: Event):
        logger.debug("switch %s applied to %s", event.check, event.hd6)
