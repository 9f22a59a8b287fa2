"""Independent verification of the rules engine.

``brute_force_lines`` rechecks a board with an explicit scan of the eight
hardcoded cell triples, deliberately sharing no code path with the
transpose-based checker in ``board``. ``verify_equivalence`` compares the
two over every one of the 3**9 boards, and ``enumerate_games`` walks the
complete game tree for census counts that are frozen as regression values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Optional

from .board import (
    ALL_WIN_LINES,
    Board,
    Mark,
    Player,
    WinLine,
    format_board,
    winner,
)

# The 8 winning triples as flat cell indexes, paired with their line, in the
# reporting priority order: rows 0-2, columns 0-2, main diagonal, anti-diagonal.
WIN_TRIPLES: tuple[tuple[WinLine, tuple[int, int, int]], ...] = (
    (ALL_WIN_LINES[0], (0, 1, 2)),
    (ALL_WIN_LINES[1], (3, 4, 5)),
    (ALL_WIN_LINES[2], (6, 7, 8)),
    (ALL_WIN_LINES[3], (0, 3, 6)),
    (ALL_WIN_LINES[4], (1, 4, 7)),
    (ALL_WIN_LINES[5], (2, 5, 8)),
    (ALL_WIN_LINES[6], (0, 4, 8)),
    (ALL_WIN_LINES[7], (2, 4, 6)),
)

_PLAYER_FOR_MARK = {Mark.X: Player.X, Mark.O: Player.O}


@dataclass(frozen=True)
class LineScanResult:
    """All winning lines found on one board by the direct triple scan."""

    winning_lines: frozenset[tuple[Player, WinLine]]


def _scan(cells: tuple[Mark, ...]) -> list[tuple[Player, WinLine]]:
    """Winning (player, line) pairs in priority order."""
    found = []
    for line, (a, b, c) in WIN_TRIPLES:
        mark = cells[a]
        if mark is not Mark.EMPTY and mark is cells[b] and mark is cells[c]:
            found.append((_PLAYER_FOR_MARK[mark], line))
    return found


def brute_force_lines(board: Board) -> LineScanResult:
    """Scan each of the 8 triples directly; no transpose, no composition."""
    return LineScanResult(winning_lines=frozenset(_scan(board.cells)))


@dataclass(frozen=True)
class EquivalenceReport:
    boards_checked: int
    mismatches: int
    first_mismatch: Optional[str] = None


WinnerCheck = Callable[[Board], Optional[tuple[Player, WinLine]]]


def verify_equivalence(check: WinnerCheck = winner) -> EquivalenceReport:
    """Compare ``check`` against the direct triple scan on all 19683 boards.

    A board mismatches when ``check`` disagrees with the scan about whether
    a win exists, or reports a different line than the scan's priority-first
    one. Mismatches are data in the report, not exceptions; a correct build
    reports zero.
    """
    mismatches = 0
    first_mismatch: Optional[str] = None
    boards_checked = 0
    marks = (Mark.EMPTY, Mark.X, Mark.O)
    for cells in itertools.product(marks, repeat=9):
        boards_checked += 1
        board = Board(cells)
        scanned = _scan(cells)
        expected = scanned[0] if scanned else None
        if check(board) != expected:
            mismatches += 1
            if first_mismatch is None:
                first_mismatch = format_board(board)
    return EquivalenceReport(
        boards_checked=boards_checked,
        mismatches=mismatches,
        first_mismatch=first_mismatch,
    )


@dataclass(frozen=True)
class EnumerationReport:
    """Census of the complete game tree under legal play, X first.

    Games are distinct move sequences, not distinct final boards;
    ``legal_positions`` counts distinct reachable boards including the empty
    and terminal ones.
    """

    total_games: int
    x_wins: int
    o_wins: int
    draws: int
    legal_positions: int
    earliest_win_ply: int


# Triples through each cell, for the incremental win check during traversal.
_TRIPLES_THROUGH: tuple[tuple[tuple[int, int, int], ...], ...] = tuple(
    tuple(t for _, t in WIN_TRIPLES if i in t) for i in range(9)
)


def enumerate_games() -> EnumerationReport:
    """Depth-first walk of every legal move sequence from the empty board.

    Each branch stops at its terminal status: a completed line ends the
    game immediately, a full board without one is a draw. Deterministic
    across runs (fixed cell visiting order).
    """
    x_wins = 0
    o_wins = 0
    draws = 0
    earliest_win_ply = 10
    cells: list[Mark] = [Mark.EMPTY] * 9
    seen: set[tuple[Mark, ...]] = {tuple(cells)}

    def walk(ply: int) -> None:
        nonlocal x_wins, o_wins, draws, earliest_win_ply
        mover = Mark.X if ply % 2 == 0 else Mark.O
        for i in range(9):
            if cells[i] is not Mark.EMPTY:
                continue
            cells[i] = mover
            seen.add(tuple(cells))
            won = any(
                cells[a] is mover and cells[b] is mover and cells[c] is mover
                for a, b, c in _TRIPLES_THROUGH[i]
            )
            if won:
                if mover is Mark.X:
                    x_wins += 1
                else:
                    o_wins += 1
                if ply + 1 < earliest_win_ply:
                    earliest_win_ply = ply + 1
            elif ply + 1 == 9:
                draws += 1
            else:
                walk(ply + 1)
            cells[i] = Mark.EMPTY

    walk(0)
    return EnumerationReport(
        total_games=x_wins + o_wins + draws,
        x_wins=x_wins,
        o_wins=o_wins,
        draws=draws,
        legal_positions=len(seen),
        earliest_win_ply=earliest_win_ply,
    )


# Machine-derived census, frozen after a depth-first sequence walk and an
# independent breadth-first position walk with multiplicity accounting agreed
# exactly. Regression values: any change here means the rules changed.
GOLDEN_CENSUS = EnumerationReport(
    total_games=255168,
    x_wins=131184,
    o_wins=77904,
    draws=46080,
    legal_positions=5478,
    earliest_win_ply=5,
)
