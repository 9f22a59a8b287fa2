// Client view state: what was last heard from the server, nothing more.
// The grid is always painted from the last state message received; the
// client never predicts a mark locally.

import {
  PlaceMarkMessage,
  Seat,
  ServerMessage,
  StateMessage,
} from "./protocol.js";

export type Phase =
  | { kind: "connecting" }
  | { kind: "seated"; seat: Seat }
  | { kind: "opponent_left"; seat: Seat }
  | { kind: "closed"; reason: "match_full" | "not_found" | "transport" };

export interface ClientViewState {
  phase: Phase;
  /** Last state frame received; the single source of truth for the grid. */
  lastState: StateMessage | null;
  /** A move was sent and its state (or error) has not come back yet. */
  pending: boolean;
  /** Short-lived feedback from a rejected action. */
  notice: string | null;
}

export function initialViewState(): ClientViewState {
  return { phase: { kind: "connecting" }, lastState: null, pending: false, notice: null };
}

export function seatOf(state: ClientViewState): Seat | null {
  if (state.phase.kind === "seated" || state.phase.kind === "opponent_left") {
    return state.phase.seat;
  }
  return null;
}

/** Whether cell clicks may produce a move right now: seated, game running,
 * this client's turn, and no move already in flight. */
export function inputEnabled(state: ClientViewState): boolean {
  const seat = seatOf(state);
  return (
    seat !== null &&
    state.lastState !== null &&
    state.lastState.status === "in_progress" &&
    state.lastState.turn === seat &&
    !state.pending
  );
}

export type HeaderText = "Turn X" | "Turn O" | "Winner X" | "Winner O" | "Draw";

/** Header text is a pure function of a state message; these five strings
 * are the only possible values. */
export function headerTextFor(state: StateMessage): HeaderText {
  if (state.status === "in_progress") return `Turn ${state.turn!}` as HeaderText;
  if (state.status === "won") return `Winner ${state.winner!}` as HeaderText;
  return "Draw";
}

export function applyServerMessage(
  state: ClientViewState,
  message: ServerMessage,
): ClientViewState {
  switch (message.type) {
    case "joined":
      return {
        ...state,
        phase: { kind: "seated", seat: message.seat },
        notice: null,
      };
    case "state": {
      // A state frame while the opponent-left banner shows and no own move
      // is in flight means the seats are in sync again.
      const phase =
        state.phase.kind === "opponent_left" && !state.pending
          ? ({ kind: "seated", seat: state.phase.seat } as Phase)
          : state.phase;
      return { phase, lastState: message, pending: false, notice: null };
    }
    case "error":
      if (message.code === "match_full" && seatOf(state) === null) {
        return { ...state, phase: { kind: "closed", reason: "match_full" } };
      }
      if (message.code === "match_not_found") {
        return { ...state, phase: { kind: "closed", reason: "not_found" } };
      }
      return { ...state, pending: false, notice: message.message };
    case "opponent_left": {
      const seat = seatOf(state);
      if (seat === null) return state;
      return { ...state, phase: { kind: "opponent_left", seat } };
    }
  }
}

export function applyTransportClosed(state: ClientViewState): ClientViewState {
  if (state.phase.kind === "closed") return state;
  return { ...state, phase: { kind: "closed", reason: "transport" }, pending: false };
}

/** The outbound message for a cell click, or null when the click must be
 * ignored (input disabled, or the cell is not blank). */
export function cellClickMessage(
  state: ClientViewState,
  row: number,
  col: number,
): PlaceMarkMessage | null {
  if (!inputEnabled(state)) return null;
  if (row < 0 || row > 2 || col < 0 || col > 2) return null;
  if (state.lastState!.board[3 * row + col] !== ".") return null;
  return { type: "place_mark", row, col };
}
