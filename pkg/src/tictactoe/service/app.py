"""FastAPI application for networked two-player matches.

HTTP creates matches and reports liveness; all play happens over the
WebSocket endpoint, one connection per player. Moves on a match are applied
strictly in arrival order under the match lock, and every successful move
is pushed to both seats as one identical state frame — the server is the
single source of truth for what is on the board.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from fastapi import FastAPI, HTTPException, WebSocket, WebSocketDisconnect
from fastapi.middleware.cors import CORSMiddleware

from ..board import Player
from ..session import MoveError
from .messages import (
    CreateMatchResponse,
    ErrorCode,
    ErrorMessage,
    HealthResponse,
    JoinedMessage,
    JoinMessage,
    NewGameMessage,
    OpponentLeftMessage,
    PlaceMarkMessage,
    ServerMessage,
    parse_client_message,
    serialize_message,
    state_message,
)
from .store import CapacityExceededError, Match, MatchStore

logger = logging.getLogger("tictactoe.service")


@dataclass(frozen=True)
class ServiceSettings:
    host: str = "127.0.0.1"
    port: int = 8080
    max_matches: int = 1024
    match_ttl_seconds: float = 3600.0


async def _send(websocket: WebSocket, message: ServerMessage) -> None:
    await websocket.send_text(serialize_message(message))


async def _send_error(websocket: WebSocket, code: ErrorCode, message: str) -> None:
    await _send(websocket, ErrorMessage(code=code, message=message))


async def _broadcast_state(match: Match) -> None:
    """Push the current session state to both seats as one identical frame."""
    payload = serialize_message(state_message(match.session))
    for websocket in match.occupants():
        try:
            await websocket.send_text(payload)  # type: ignore[attr-defined]
        except Exception:
            # A dying socket is handled by its own disconnect path.
            logger.debug("state push failed on match %s", match.match_id, exc_info=True)


def create_app(settings: ServiceSettings | None = None) -> FastAPI:
    settings = settings or ServiceSettings()
    app = FastAPI(title="tictactoe-match", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = MatchStore(
        max_matches=settings.max_matches, ttl_seconds=settings.match_ttl_seconds
    )
    app.state.store = store
    app.state.settings = settings

    @app.post("/matches", status_code=201, response_model=CreateMatchResponse)
    async def create_match() -> CreateMatchResponse:
        for stale in store.evict_idle():
            logger.info("evicted idle match %s", stale.match_id)
            for websocket in stale.occupants():
                try:
                    await websocket.close()  # type: ignore[attr-defined]
                except Exception:
                    pass
        try:
            match = store.create()
        except CapacityExceededError as err:
            raise HTTPException(status_code=503, detail=str(err))
        logger.info("created match %s (%d live)", match.match_id, len(store))
        return CreateMatchResponse(match_id=match.match_id)

    @app.get("/healthz", response_model=HealthResponse)
    async def healthz() -> HealthResponse:
        return HealthResponse()

    @app.websocket("/ws/{match_id}")
    async def match_socket(websocket: WebSocket, match_id: str) -> None:
        await websocket.accept()
        seat: Player | None = None
        try:
            while True:
                text = await websocket.receive_text()
                message = parse_client_message(text)
                if message is None:
                    logger.warning(
                        "ignoring malformed frame on match %s: %.100s", match_id, text
                    )
                    continue
                match = store.get(match_id)
                if match is None:
                    await _send_error(
                        websocket, "match_not_found", f"no match '{match_id}'"
                    )
                    continue
                async with match.lock:
                    store.touch(match)
                    if isinstance(message, JoinMessage):
                        seat = await _handle_join(match, websocket, seat)
                    elif isinstance(message, PlaceMarkMessage):
                        await _handle_place_mark(match, websocket, seat, message)
                    elif isinstance(message, NewGameMessage):
                        await _handle_new_game(match, websocket, seat)
        except WebSocketDisconnect:
            pass
        finally:
            if seat is not None:
                match = store.get(match_id)
                if match is not None:
                    async with match.lock:
                        await _handle_leave(match, websocket, seat)

    return app


async def _handle_join(
    match: Match, websocket: WebSocket, seat: Player | None
) -> Player | None:
    """Seat the connection (X first, then O) and sync it with the game.

    The joiner always gets a state frame right away; once the second seat
    fills, both players get one.
    """
    if seat is not None:
        await _send_error(websocket, "already_seated", f"already seated as {seat.value}")
        return seat
    free = match.free_seat()
    if free is None:
        await _send_error(websocket, "match_full", "both seats are taken")
        return None
    match.seats[free] = websocket
    await _send(websocket, JoinedMessage(seat=free.value, match_id=match.match_id))
    logger.info("match %s: seat %s joined", match.match_id, free.value)
    if match.free_seat() is None:
        await _broadcast_state(match)
    else:
        await websocket.send_text(serialize_message(state_message(match.session)))
    return free


async def _handle_place_mark(
    match: Match, websocket: WebSocket, seat: Player | None, message: PlaceMarkMessage
) -> None:
    """Apply the move for the connection's seat; a success is broadcast to
    both players, a rejection goes only to the offender."""
    if seat is None:
        await _send_error(websocket, "not_seated", "join the match before playing")
        return
    try:
        match.session = match.session.apply_move(seat, message.row, message.col)
    except MoveError as err:
        await _send_error(websocket, err.code, str(err))
        return
    await _broadcast_state(match)


async def _handle_new_game(
    match: Match, websocket: WebSocket, seat: Player | None
) -> None:
    """Reset the match's game (allowed in any state) and sync both seats."""
    if seat is None:
        await _send_error(websocket, "not_seated", "join the match before resetting")
        return
    match.session = match.session.reset()
    logger.info("match %s: new game", match.match_id)
    await _broadcast_state(match)


async def _handle_leave(match: Match, websocket: WebSocket, seat: Player) -> None:
    """Free the seat, keep the game state, and tell the other player."""
    if match.seats.get(seat) is not websocket:
        return
    match.seats[seat] = None
    logger.info("match %s: seat %s left", match.match_id, seat.value)
    other = match.seats[seat.opponent]
    if other is not None:
        try:
            await other.send_text(serialize_message(OpponentLeftMessage()))  # type: ignore[attr-defined]
        except Exception:
            pass
