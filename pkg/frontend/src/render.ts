// Projection of the client view state onto a paintable view model.
// Pure and DOM-free; the page layer copies it onto elements verbatim.

import { lineCellIndexes } from "./protocol.js";
import { ClientViewState, headerTextFor, inputEnabled, seatOf } from "./viewState.js";

export interface CellPaint {
  /** "X", "O", or "" for a blank cell. */
  text: string;
  /** Part of the winning line. */
  highlighted: boolean;
  /** Click could produce a move right now. */
  clickable: boolean;
}

export interface ViewModel {
  /** One of the five header strings, or "" before the first state frame. */
  header: string;
  /** Connection banner, independent of the game header. */
  banner: string | null;
  youAre: string | null;
  cells: CellPaint[];
  newGameProminent: boolean;
  newGameEnabled: boolean;
  notice: string | null;
  showRetry: boolean;
}

function bannerFor(state: ClientViewState): string | null {
  switch (state.phase.kind) {
    case "connecting":
      return "Connecting…";
    case "opponent_left":
      return "Opponent left — the seat is open for a rejoin";
    case "closed":
      if (state.phase.reason === "match_full") return "Match full";
      if (state.phase.reason === "not_found") return "Match not found";
      return "Connection lost";
    case "seated":
      return null;
  }
}

export function buildViewModel(state: ClientViewState): ViewModel {
  const seat = seatOf(state);
  const last = state.lastState;
  const board = last ? last.board : ".........";
  const highlighted = new Set(
    last && last.status === "won" && last.line ? lineCellIndexes(last.line) : [],
  );
  const clickEnabled = inputEnabled(state);
  const cells: CellPaint[] = [...board].map((ch, i) => ({
    text: ch === "." ? "" : ch,
    highlighted: highlighted.has(i),
    clickable: clickEnabled && ch === ".",
  }));
  const finished = last !== null && last.status !== "in_progress";
  return {
    header: last ? headerTextFor(last) : "",
    banner: bannerFor(state),
    youAre: seat ? `You are ${seat}` : null,
    cells,
    newGameProminent: finished,
    newGameEnabled: seat !== null,
    notice: state.notice,
    showRetry: state.phase.kind === "closed" && state.phase.reason === "transport",
  };
}
