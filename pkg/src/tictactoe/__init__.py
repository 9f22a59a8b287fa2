"""Two-player tic-tac-toe: rules engine, verification oracle, match service."""

from .board import (
    Board,
    Draw,
    GameStatus,
    InProgress,
    LineKind,
    Mark,
    Player,
    WinLine,
    Won,
    empty_board,
    format_board,
    parse_board,
    status_of,
    winner,
)
from .session import GameSession, MoveError, new_session, replay

__version__ = "0.1.0"

__all__ = [
    "Board",
    "Draw",
    "GameSession",
    "GameStatus",
    "InProgress",
    "LineKind",
    "Mark",
    "MoveError",
    "Player",
    "WinLine",
    "Won",
    "empty_board",
    "format_board",
    "new_session",
    "parse_board",
    "replay",
    "status_of",
    "winner",
    "__version__",
]
