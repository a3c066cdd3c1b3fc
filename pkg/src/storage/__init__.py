"""Storage backends for hermdig"""

from .census_store import CensusStore, StoredClasses

__all__ = [
    "CensusStore",
    "StoredClasses",
]
