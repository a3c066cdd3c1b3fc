"""Helper tools for hermdig"""

from .switch_tools import SwitchTools
from .verify_tools import VerifyTools

__all__ = [
    "SwitchTools",
    "VerifyTools",
]
