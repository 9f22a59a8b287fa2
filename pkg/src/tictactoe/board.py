"""Pure tic-tac-toe rules: board values, line checks, winner and draw detection.

Everything here is a pure function over immutable values; nothing mutates
its input, so the whole module is safe to call from any thread.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional


class Mark(Enum):
    """Content of one cell: empty, a cross, or a nought."""

    EMPTY = "."
    X = "X"
    O = "O"


class Player(Enum):
    """One of the two players. Never empty."""

    X = "X"
    O = "O"

    @property
    def mark(self) -> Mark:
        return Mark.X if self is Player.X else Mark.O

    @property
    def opponent(self) -> "Player":
        return Player.O if self is Player.X else Player.X


_MARK_FOR_PLAYER = {Player.X: Mark.X, Player.O: Mark.O}
_PLAYER_FOR_MARK = {Mark.X: Player.X, Mark.O: Player.O}


def encode_mark(mark: Mark) -> int:
    """Numeric cell encoding: X is 1, O is 0, empty is -1.

    The -1 sentinel keeps empty distinct from both players, so a line of
    empty cells can never register as a win.
    """
    if mark is Mark.X:
        return 1
    if mark is Mark.O:
        return 0
    return -1


class LineKind(Enum):
    ROW = "row"
    COLUMN = "col"
    MAIN_DIAGONAL = "main_diag"
    ANTI_DIAGONAL = "anti_diag"


@dataclass(frozen=True)
class WinLine:
    """One of the 8 possible winning lines: 3 rows, 3 columns, 2 diagonals.

    ``index`` selects the row or column; diagonals only admit index 0, so
    exactly eight distinct values are constructible.
    """

    kind: LineKind
    index: int = 0

    def __post_init__(self) -> None:
        if self.kind in (LineKind.ROW, LineKind.COLUMN):
            if self.index not in (0, 1, 2):
                raise ValueError(f"{self.kind.value} index must be 0..2, got {self.index}")
        elif self.index != 0:
            raise ValueError(f"{self.kind.value} index must be 0, got {self.index}")

    @property
    def coords(self) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
        """The ordered (row, col) cells of this line."""
        if self.kind is LineKind.ROW:
            return ((self.index, 0), (self.index, 1), (self.index, 2))
        if self.kind is LineKind.COLUMN:
            return ((0, self.index), (1, self.index), (2, self.index))
        if self.kind is LineKind.MAIN_DIAGONAL:
            return ((0, 0), (1, 1), (2, 2))
        return ((0, 2), (1, 1), (2, 0))


ALL_WIN_LINES: tuple[WinLine, ...] = (
    WinLine(LineKind.ROW, 0),
    WinLine(LineKind.ROW, 1),
    WinLine(LineKind.ROW, 2),
    WinLine(LineKind.COLUMN, 0),
    WinLine(LineKind.COLUMN, 1),
    WinLine(LineKind.COLUMN, 2),
    WinLine(LineKind.MAIN_DIAGONAL),
    WinLine(LineKind.ANTI_DIAGONAL),
)


@dataclass(frozen=True)
class Board:
    """An immutable 3x3 grid of marks, stored row-major."""

    cells: tuple[Mark, ...] = (Mark.EMPTY,) * 9

    def __post_init__(self) -> None:
        if len(self.cells) != 9:
            raise ValueError(f"board needs exactly 9 cells, got {len(self.cells)}")
        for cell in self.cells:
            if not isinstance(cell, Mark):
                raise TypeError(f"cell must be a Mark, got {cell!r}")

    def cell(self, row: int, col: int) -> Mark:
        return self.cells[3 * row + col]

    def with_cell(self, row: int, col: int, mark: Mark) -> "Board":
        """A new board with one cell replaced; the original is untouched."""
        i = 3 * row + col
        return Board(self.cells[:i] + (mark,) + self.cells[i + 1:])

    def row(self, r: int) -> tuple[Mark, Mark, Mark]:
        return self.cells[3 * r: 3 * r + 3]  # type: ignore[return-value]


@dataclass(frozen=True)
class InProgress:
    turn: Player


@dataclass(frozen=True)
class Won:
    winner: Player
    line: WinLine


@dataclass(frozen=True)
class Draw:
    pass


GameStatus = InProgress | Won | Draw


def empty_board() -> Board:
    return Board()


def transpose(board: Board) -> Board:
    """Mirror the board across the main diagonal: cell (r, c) becomes (c, r)."""
    c = board.cells
    return Board((c[0], c[3], c[6], c[1], c[4], c[7], c[2], c[5], c[8]))


def check_rows(board: Board) -> Optional[tuple[Player, int]]:
    """The lowest-index row holding three equal non-empty marks, if any."""
    cells = board.cells
    for r in range(3):
        first = cells[3 * r]
        if first is not Mark.EMPTY and first is cells[3 * r + 1] and first is cells[3 * r + 2]:
            return _PLAYER_FOR_MARK[first], r
    return None


def check_diagonals(board: Board) -> Optional[tuple[Player, WinLine]]:
    """A filled diagonal, main diagonal checked before the anti-diagonal."""
    cells = board.cells
    center = cells[4]
    if center is not Mark.EMPTY:
        if center is cells[0] and center is cells[8]:
            return _PLAYER_FOR_MARK[center], WinLine(LineKind.MAIN_DIAGONAL)
        if center is cells[2] and center is cells[6]:
            return _PLAYER_FOR_MARK[center], WinLine(LineKind.ANTI_DIAGONAL)
    return None


def winner(board: Board) -> Optional[tuple[Player, WinLine]]:
    """The winning player and line, or None if no line of three is filled.

    Rows are checked directly, columns by running the row check on the
    transposed board (a column win is a row win of the transpose with the
    same index), then the two diagonals. The first hit in that fixed order
    (rows 0-2, columns 0-2, main diagonal, anti-diagonal) is reported, which
    makes the result deterministic when one move completes several lines.
    """
    row_win = check_rows(board)
    if row_win is not None:
        player, index = row_win
        return player, WinLine(LineKind.ROW, index)
    col_win = check_rows(transpose(board))
    if col_win is not None:
        player, index = col_win
        return player, WinLine(LineKind.COLUMN, index)
    return check_diagonals(board)


def is_full(board: Board) -> bool:
    return Mark.EMPTY not in board.cells


def status_of(board: Board, next_turn: Player) -> GameStatus:
    """Game status of a board: a win beats a draw, a full board is a draw,
    otherwise play continues with ``next_turn``."""
    win = winner(board)
    if win is not None:
        return Won(winner=win[0], line=win[1])
    if is_full(board):
        return Draw()
    return InProgress(turn=next_turn)


def is_legal_position(board: Board) -> bool:
    """Whether the board is consistent with alternating play, X first,
    stopping at a completed line.

    Rejects boards where the mark counts break alternation, where a player
    holds a line although the counts say they did not move last, and where
    both players hold lines at once.
    """
    x_count = sum(1 for c in board.cells if c is Mark.X)
    o_count = sum(1 for c in board.cells if c is Mark.O)
    diff = x_count - o_count
    if diff not in (0, 1):
        return False
    x_wins = _has_line(board, Mark.X)
    o_wins = _has_line(board, Mark.O)
    if x_wins and o_wins:
        return False
    if x_wins and diff == 0:
        return False
    if o_wins and diff == 1:
        return False
    return True


_LINE_INDEX_TRIPLES: tuple[tuple[int, int, int], ...] = (
    (0, 1, 2), (3, 4, 5), (6, 7, 8),
    (0, 3, 6), (1, 4, 7), (2, 5, 8),
    (0, 4, 8), (2, 4, 6),
)


def _has_line(board: Board, mark: Mark) -> bool:
    cells = board.cells
    return any(
        cells[a] is mark and cells[b] is mark and cells[c] is mark
        for a, b, c in _LINE_INDEX_TRIPLES
    )


class BoardParseError(ValueError):
    """A string does not describe a board."""


class BadLengthError(BoardParseError):
    pass


class BadCharError(BoardParseError):
    pass


_MARK_FOR_CHAR = {"X": Mark.X, "O": Mark.O, ".": Mark.EMPTY}


def parse_board(text: str) -> Board:
    """Decode a 9-character row-major board string over the alphabet X, O, '.'.

    Raises BadLengthError or BadCharError; never returns a partial board.
    """
    if len(text) != 9:
        raise BadLengthError(f"board string must have 9 characters, got {len(text)}")
    cells = []
    for i, ch in enumerate(text):
        mark = _MARK_FOR_CHAR.get(ch)
        if mark is None:
            raise BadCharError(f"bad character {ch!r} at position {i}; expected X, O or .")
        cells.append(mark)
    return Board(tuple(cells))


def format_board(board: Board) -> str:
    """Encode a board as the 9-character string accepted by parse_board."""
    return "".join(cell.value for cell in board.cells)
