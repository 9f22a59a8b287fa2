"""Game-in-progress state machine: move validation, turn alternation,
terminal locking, reset, and replay.

Sessions are immutable values: every operation returns a new session and
leaves its input untouched, including on error. Callers sharing a session
across threads must serialize their own updates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .board import (
    Board,
    Draw,
    GameStatus,
    InProgress,
    Mark,
    Player,
    Won,
    empty_board,
    status_of,
)


class MoveError(Exception):
    """A rejected move. ``code`` is the stable machine-readable name;
    ``ply`` is set by replay to the 1-based index of the failing move."""

    code = "move_error"

    def __init__(self, message: str, ply: Optional[int] = None):
        super().__init__(message)
        self.ply = ply


class GameOverError(MoveError):
    code = "game_over"


class OutOfTurnError(MoveError):
    code = "out_of_turn"


class CellOccupiedError(MoveError):
    code = "cell_occupied"


class OutOfBoundsError(MoveError):
    code = "out_of_bounds"


@dataclass(frozen=True)
class MoveRecord:
    player: Player
    row: int
    col: int
    ply: int


@dataclass(frozen=True)
class GameSession:
    """A board plus its status and the move history that produced it."""

    id: str
    board: Board
    status: GameStatus
    history: tuple[MoveRecord, ...] = ()

    def apply_move(self, player: Player, row: int, col: int) -> "GameSession":
        """Place ``player``'s mark at (row, col), returning the next session.

        Raises GameOverError after a win or draw, OutOfTurnError when it is
        not ``player``'s turn, OutOfBoundsError for coordinates outside 0..2,
        and CellOccupiedError for a non-empty target cell.
        """
        if not isinstance(self.status, InProgress):
            raise GameOverError("game over")
        if player is not self.status.turn:
            raise OutOfTurnError("out of turn")
        if not (0 <= row <= 2 and 0 <= col <= 2):
            raise OutOfBoundsError("out of bounds")
        if self.board.cell(row, col) is not Mark.EMPTY:
            raise CellOccupiedError("cell occupied")
        next_board = self.board.with_cell(row, col, player.mark)
        record = MoveRecord(player=player, row=row, col=col, ply=len(self.history) + 1)
        return GameSession(
            id=self.id,
            board=next_board,
            status=status_of(next_board, player.opponent),
            history=self.history + (record,),
        )

    def reset(self) -> "GameSession":
        """A fresh game under the same id; legal in any state."""
        return new_session(self.id)


def new_session(session_id: str) -> GameSession:
    """An empty board with X to move and no history."""
    return GameSession(
        id=session_id,
        board=empty_board(),
        status=InProgress(turn=Player.X),
    )


def replay(session_id: str, moves: Iterable[tuple[Player, int, int]]) -> GameSession:
    """Fold apply_move over a fresh session.

    On a rejected move the apply_move error propagates with ``ply`` set to
    the 1-based index of the offending move.
    """
    session = new_session(session_id)
    for i, (player, row, col) in enumerate(moves, start=1):
        try:
            session = session.apply_move(player, row, col)
        except MoveError as err:
            err.ply = i
            raise
    return session


__all__ = [
    "MoveError",
    "GameOverError",
    "OutOfTurnError",
    "CellOccupiedError",
    "OutOfBoundsError",
    "MoveRecord",
    "GameSession",
    "new_session",
    "replay",
    "Draw",
    "GameStatus",
    "InProgress",
    "Won",
]
