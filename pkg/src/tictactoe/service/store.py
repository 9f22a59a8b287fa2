"""In-memory match store: creation, lookup, seat bookkeeping, idle eviction.

A match's ``lock`` serializes every message touching that match; the store
itself only needs the single-threaded event loop. Nothing survives a
process restart by design.
"""

from __future__ import annotations

import asyncio
import secrets
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from ..board import Player
from ..session import GameSession, new_session


class CapacityExceededError(Exception):
    """The live-match limit is reached."""


@dataclass
class Match:
    match_id: str
    session: GameSession
    created_at: float
    last_active: float
    seats: dict[Player, Optional[object]] = field(
        default_factory=lambda: {Player.X: None, Player.O: None}
    )
    lock: asyncio.Lock = field(default_factory=asyncio.Lock)

    def seat_of(self, connection: object) -> Optional[Player]:
        for player, occupant in self.seats.items():
            if occupant is connection:
                return player
        return None

    def free_seat(self) -> Optional[Player]:
        """The seat a new joiner gets: X when free, else O, else None."""
        if self.seats[Player.X] is None:
            return Player.X
        if self.seats[Player.O] is None:
            return Player.O
        return None

    def occupants(self) -> list[object]:
        return [ws for ws in self.seats.values() if ws is not None]


class MatchStore:
    def __init__(
        self,
        max_matches: int = 1024,
        ttl_seconds: float = 3600.0,
        clock: Callable[[], float] = time.monotonic,
    ):
        self.max_matches = max_matches
        self.ttl_seconds = ttl_seconds
        self._clock = clock
        self._matches: dict[str, Match] = {}

    def __len__(self) -> int:
        return len(self._matches)

    def create(self) -> Match:
        """A new match with a fresh session and both seats empty.

        Raises CapacityExceededError at the live-match limit; run
        ``evict_idle`` first to reclaim stale matches.
        """
        if len(self._matches) >= self.max_matches:
            raise CapacityExceededError(
                f"live-match limit of {self.max_matches} reached"
            )
        while True:
            match_id = secrets.token_hex(4)
            if match_id not in self._matches:
                break
        now = self._clock()
        match = Match(
            match_id=match_id,
            session=new_session(match_id),
            created_at=now,
            last_active=now,
        )
        self._matches[match_id] = match
        return match

    def get(self, match_id: str) -> Optional[Match]:
        return self._matches.get(match_id)

    def touch(self, match: Match) -> None:
        match.last_active = self._clock()

    def evict_idle(self) -> list[Match]:
        """Drop matches idle longer than the TTL; returns what was removed
        so the caller can close any lingering connections."""
        now = self._clock()
        stale = [
            m for m in self._matches.values() if now - m.last_active > self.ttl_seconds
        ]
        for match in stale:
            del self._matches[match.match_id]
        return stale
