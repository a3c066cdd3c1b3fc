from enum import Enum
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Optional


class EventType(Enum):
    SUITE_START = "suite_start"
    CHECK_PASSED = "check_passed"
    CHECK_FAILED = "check_failed"
    SUITE_END = "suite_end"
    CENSUS_START = "census_start"
    CENSUS_LEVEL = "census_level"
    CENSUS_END = "census_end"
    SWITCH_APPLIED = "switch_applied"


@dataclass
class Event:
    """Payload for every event in the system."""
    type: EventType
    timestamp: datetime = field(default_factory=datetime.now)
    suite: Optional[str] = None
    check: Optional[str] = None
    n: Optional[int] = None
    hd6: Optional[str] = None
    detail: Any = None
    metadata: dict = field(default_factory=dict)
