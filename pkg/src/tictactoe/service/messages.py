"""Wire protocol models for the match service.

One JSON object per text frame. Server-to-client state frames always carry
the full board string; optional fields are omitted (not null) when absent,
so both players can be sent byte-identical payloads.
"""

from __future__ import annotations

from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, Field, TypeAdapter, ValidationError

from ..board import Draw, InProgress, Won, format_board
from ..session import GameSession


class JoinMessage(BaseModel):
    type: Literal["join"]


class PlaceMarkMessage(BaseModel):
    type: Literal["place_mark"]
    row: int
    col: int


class NewGameMessage(BaseModel):
    type: Literal["new_game"]


ClientMessage = Union[JoinMessage, PlaceMarkMessage, NewGameMessage]

_client_message_adapter: TypeAdapter[ClientMessage] = TypeAdapter(
    Annotated[ClientMessage, Field(discriminator="type")]
)


def parse_client_message(text: str) -> Optional[ClientMessage]:
    """Decode one inbound frame; None when the frame is not a known message."""
    try:
        return _client_message_adapter.validate_json(text)
    except ValidationError:
        return None


ErrorCode = Literal[
    "match_not_found",
    "match_full",
    "already_seated",
    "not_seated",
    "game_over",
    "out_of_turn",
    "cell_occupied",
    "out_of_bounds",
]


class JoinedMessage(BaseModel):
    type: Literal["joined"] = "joined"
    seat: Literal["X", "O"]
    match_id: str


class LinePayload(BaseModel):
    kind: Literal["row", "col", "main_diag", "anti_diag"]
    index: int = Field(ge=0, le=2)


class StateMessage(BaseModel):
    type: Literal["state"] = "state"
    board: str
    status: Literal["in_progress", "won", "draw"]
    turn: Optional[Literal["X", "O"]] = None
    winner: Optional[Literal["X", "O"]] = None
    line: Optional[LinePayload] = None
    ply: int = Field(ge=0, le=9)


class ErrorMessage(BaseModel):
    type: Literal["error"] = "error"
    code: ErrorCode
    message: str


class OpponentLeftMessage(BaseModel):
    type: Literal["opponent_left"] = "opponent_left"


ServerMessage = Union[JoinedMessage, StateMessage, ErrorMessage, OpponentLeftMessage]


def serialize_message(message: ServerMessage) -> str:
    return message.model_dump_json(exclude_none=True)


def state_message(session: GameSession) -> StateMessage:
    """Project a session onto the wire: board string, status, and the
    status-dependent fields (turn / winner+line)."""
    board_text = format_board(session.board)
    ply = len(session.history)
    status = session.status
    if isinstance(status, InProgress):
        return StateMessage(
            board=board_text, status="in_progress", turn=status.turn.value, ply=ply
        )
    if isinstance(status, Won):
        return StateMessage(
            board=board_text,
            status="won",
            winner=status.winner.value,
            line=LinePayload(kind=status.line.kind.value, index=status.line.index),
            ply=ply,
        )
    assert isinstance(status, Draw)
    return StateMessage(board=board_text, status="draw", ply=ply)


class CreateMatchResponse(BaseModel):
    match_id: str


class HealthResponse(BaseModel):
    status: Literal["ok"] = "ok"
