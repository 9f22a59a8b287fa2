"""Oracle checks: the naive scan against the engine, and the game-tree
census against an independent breadth-first traversal."""

from typing import Optional

import pytest

from tictactoe.board import (
    Board,
    InProgress,
    LineKind,
    Mark,
    Player,
    WinLine,
    format_board,
    is_legal_position,
    parse_board,
    winner,
)
from tictactoe.oracle import (
    GOLDEN_CENSUS,
    WIN_TRIPLES,
    brute_force_lines,
    enumerate_games,
    verify_equivalence,
)
from tictactoe.session import new_session
from tictactoe import session as session_module

TRIPLES = tuple(t for _, t in WIN_TRIPLES)


def bfs_census():
    """Breadth-first position walk with multiplicity accounting.

    Structurally independent of enumerate_games: levels of distinct boards
    keyed by string, each carrying the number of move sequences reaching it;
    terminal boards bank their multiplicity instead of expanding.
    """

    def wins(key: str, mark: str) -> bool:
        return any(
            key[a] == mark and key[b] == mark and key[c] == mark for a, b, c in TRIPLES
        )

    level = {".........": 1}
    positions = {"........."}
    x_wins = o_wins = draws = 0
    earliest: Optional[int] = None
    terminal_plies = set()
    for ply in range(9):
        mover = "X" if ply % 2 == 0 else "O"
        next_level: dict[str, int] = {}
        for key, multiplicity in level.items():
            for i in range(9):
                if key[i] != ".":
                    continue
                child = key[:i] + mover + key[i + 1:]
                positions.add(child)
                if wins(child, mover):
                    terminal_plies.add(ply + 1)
                    if mover == "X":
                        x_wins += multiplicity
                    else:
                        o_wins += multiplicity
                    if earliest is None:
                        earliest = ply + 1
                elif ply + 1 == 9:
                    terminal_plies.add(9)
                    draws += multiplicity
                else:
                    next_level[child] = next_level.get(child, 0) + multiplicity
        level = next_level
    return {
        "total_games": x_wins + o_wins + draws,
        "x_wins": x_wins,
        "o_wins": o_wins,
        "draws": draws,
        "legal_positions": len(positions),
        "earliest_win_ply": earliest,
        "positions": positions,
        "terminal_plies": terminal_plies,
    }


@pytest.fixture(scope="module")
def census():
    return enumerate_games()


@pytest.fixture(scope="module")
def independent_census():
    return bfs_census()


class TestBruteForceLines:
    def test_empty_board_no_lines(self):
        assert brute_force_lines(Board()).winning_lines == frozenset()

    def test_all_x_board_wins_every_line(self):
        board = Board((Mark.X,) * 9)
        result = brute_force_lines(board).winning_lines
        assert len(result) == 8
        assert all(player is Player.X for player, _ in result)

    def test_single_row_win(self):
        result = brute_force_lines(parse_board("XXX.OO.O."))
        assert result.winning_lines == frozenset(
            {(Player.X, WinLine(LineKind.ROW, 0))}
        )

    def test_lines_actually_carry_the_mark(self):
        board = parse_board("XOXXO.XO.")
        for player, line in brute_force_lines(board).winning_lines:
            for row, col in line.coords:
                assert board.cell(row, col) is player.mark


class TestVerifyEquivalence:
    def test_correct_build_has_zero_mismatches(self):
        report = verify_equivalence()
        assert report.boards_checked == 3**9 == 19683
        assert report.mismatches == 0
        assert report.first_mismatch is None

    def test_binary_encoding_fault_is_caught(self):
        # cells collapsed to two values, as if empty were encoded as zero:
        # a line of three empty cells then looks like a nought win
        def faulty_winner(board):
            codes = [1 if c is Mark.X else 0 for c in board.cells]
            for line, (a, b, c) in WIN_TRIPLES:
                if codes[a] == codes[b] == codes[c]:
                    player = Player.X if codes[a] == 1 else Player.O
                    return player, line
            return None

        report = verify_equivalence(faulty_winner)
        assert report.mismatches > 0
        first = parse_board(report.first_mismatch)
        empty_line_exists = any(
            all(first.cells[i] is Mark.EMPTY for i in triple) for triple in TRIPLES
        )
        assert empty_line_exists
        player, _ = faulty_winner(first)
        assert player is Player.O

    def test_draw_board_agreement(self):
        board = parse_board("XOXXOOOXX")
        assert winner(board) is None
        assert brute_force_lines(board).winning_lines == frozenset()


class TestCensus:
    def test_matches_frozen_constants(self, census):
        assert census == GOLDEN_CENSUS

    def test_outcomes_partition_games(self, census):
        assert census.x_wins + census.o_wins + census.draws == census.total_games

    def test_earliest_win_ply(self, census):
        assert census.earliest_win_ply == 5

    def test_deterministic(self, census):
        assert enumerate_games() == census

    def test_independent_traversal_agrees_exactly(self, census, independent_census):
        for name in (
            "total_games",
            "x_wins",
            "o_wins",
            "draws",
            "legal_positions",
            "earliest_win_ply",
        ):
            assert getattr(census, name) == independent_census[name], name

    def test_game_lengths_bounded(self, independent_census):
        assert independent_census["terminal_plies"] <= set(range(5, 10))
        assert min(independent_census["terminal_plies"]) == 5
        assert max(independent_census["terminal_plies"]) == 9

    def test_every_reachable_position_is_legal(self, independent_census):
        for key in independent_census["positions"]:
            assert is_legal_position(parse_board(key)), key

    def test_no_reachable_position_has_two_winners(self, independent_census):
        for key in independent_census["positions"]:
            players = {p for p, _ in brute_force_lines(parse_board(key)).winning_lines}
            assert len(players) <= 1, key

    def test_unreachable_boards_are_not_counted(self, independent_census):
        assert "XXX......" not in independent_census["positions"]
        assert format_board(Board((Mark.O,) * 9)) not in independent_census["positions"]


class TestLegalPositionInvariant:
    def test_no_legal_board_has_two_winners(self):
        """Over all 19683 boards, any board passing the legality predicate
        has winning lines for at most one player."""
        import itertools

        for cells in itertools.product(tuple(Mark), repeat=9):
            board = Board(cells)
            if is_legal_position(board):
                players = {p for p, _ in brute_force_lines(board).winning_lines}
                assert len(players) <= 1, format_board(board)


class TestSessionAgreement:
    def test_every_enumerated_game_replays_identically(self, census):
        """Walk the complete game tree through the session layer and
        reproduce the census, proving every enumerated game replays with
        the same terminal status."""
        outcomes = {"x": 0, "o": 0, "draw": 0}

        def walk(session):
            status = session.status
            if not isinstance(status, InProgress):
                if isinstance(status, session_module.Won):
                    outcomes["x" if status.winner is Player.X else "o"] += 1
                else:
                    outcomes["draw"] += 1
                return
            for row in range(3):
                for col in range(3):
                    if session.board.cell(row, col) is Mark.EMPTY:
                        walk(session.apply_move(status.turn, row, col))

        walk(new_session("tree"))
        assert outcomes["x"] == census.x_wins
        assert outcomes["o"] == census.o_wins
        assert outcomes["draw"] == census.draws
