from .app import ServiceSettings, create_app
from .store import CapacityExceededError, Match, MatchStore

__all__ = [
    "ServiceSettings",
    "create_app",
    "CapacityExceededError",
    "Match",
    "MatchStore",
]
