"""``ttt`` command line: hot-seat play, rules verification, match service.

Exit codes: 0 success, 1 verification failure, 2 startup or usage failure.
"""

from __future__ import annotations

import argparse
import logging
import os
import socket
import sys
from typing import IO, Optional, Sequence

from . import oracle
from .board import Board, InProgress, Won, format_board
from .session import MoveError, new_session
from .service import ServiceSettings, create_app

logger = logging.getLogger("tictactoe.cli")

_CENSUS_FIELDS = (
    "total_games",
    "x_wins",
    "o_wins",
    "draws",
    "legal_positions",
    "earliest_win_ply",
)


def render_board(board: Board) -> str:
    """Three lines of three cell characters separated by spaces; stripping
    the whitespace gives back the 9-character board string."""
    text = format_board(board)
    return "\n".join(" ".join(text[3 * r: 3 * r + 3]) for r in range(3))


def run_play(stdin: Optional[IO[str]] = None, stdout: Optional[IO[str]] = None) -> int:
    """Interactive two-player loop: moves are typed as ``row col``,
    zero-based. Bad input re-prompts; EOF quits."""
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    session = new_session("local")
    while True:
        print(render_board(session.board), file=stdout)
        status = session.status
        if isinstance(status, InProgress):
            print(f"Turn {status.turn.value}", file=stdout)
            line = stdin.readline()
            if line == "":
                return 0
            parts = line.split()
            if len(parts) != 2:
                continue
            try:
                row, col = int(parts[0]), int(parts[1])
            except ValueError:
                continue
            try:
                session = session.apply_move(status.turn, row, col)
            except MoveError as err:
                print(str(err), file=stdout)
        else:
            if isinstance(status, Won):
                print(f"Winner {status.winner.value}", file=stdout)
            else:
                print("Draw", file=stdout)
            print("New game? [y/n]", file=stdout)
            line = stdin.readline()
            if line == "" or line.strip().lower() not in ("y", "yes"):
                return 0
            session = session.reset()


def run_verify(full: bool, stdout: Optional[IO[str]] = None) -> int:
    """Exhaustive checker-equivalence scan, plus the game-tree census when
    ``full``. Nonzero exit on any mismatch or census drift."""
    stdout = stdout if stdout is not None else sys.stdout
    equivalence = oracle.verify_equivalence()
    ok = equivalence.mismatches == 0
    if full:
        census = oracle.enumerate_games()
        for name in _CENSUS_FIELDS:
            print(f"{name}: {getattr(census, name)}", file=stdout)
        if census != oracle.GOLDEN_CENSUS:
            ok = False
            print("census: MISMATCH against frozen constants", file=stdout)
    print(f"mismatches: {equivalence.mismatches}", file=stdout)
    if equivalence.first_mismatch is not None:
        print(f"first_mismatch: {equivalence.first_mismatch}", file=stdout)
    return 0 if ok else 1


def run_serve(settings: ServiceSettings, log_level: str = "info") -> int:
    """Run the match service until interrupted; exit 2 when the address
    cannot be bound."""
    import uvicorn

    try:
        probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((settings.host, settings.port))
        probe.close()
    except OSError as err:
        print(
            f"cannot bind {settings.host}:{settings.port}: {err}", file=sys.stderr
        )
        return 2
    app = create_app(settings)
    logger.info("listening on http://%s:%d", settings.host, settings.port)
    uvicorn.run(app, host=settings.host, port=settings.port, log_level=log_level)
    return 0


def _log_level_from_env() -> str:
    level = os.environ.get("TTT_LOG", "info").lower()
    if level not in ("critical", "error", "warning", "info", "debug", "trace"):
        level = "info"
    return level


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ttt",
        description="Two-player tic-tac-toe: play locally, verify the rules, or serve matches.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("play", help="hot-seat game in the terminal")
    verify = sub.add_parser("verify", help="exhaustive verification of the rules engine")
    verify.add_argument(
        "--full", action="store_true", help="also enumerate the complete game tree"
    )
    serve = sub.add_parser("serve", help="run the networked match service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8080)
    serve.add_argument("--max-matches", type=int, default=1024)
    serve.add_argument("--match-ttl-seconds", type=float, default=3600.0)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    level = _log_level_from_env()
    logging.basicConfig(level=getattr(logging, level.upper(), logging.INFO))
    if args.command == "play":
        return run_play()
    if args.command == "verify":
        return run_verify(full=args.full)
    settings = ServiceSettings(
        host=args.host,
        port=args.port,
        max_matches=args.max_matches,
        match_ttl_seconds=args.match_ttl_seconds,
    )
    return run_serve(settings, log_level=level)


if __name__ == "__main__":
    sys.exit(main())
