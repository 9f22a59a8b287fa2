// Wire protocol types for the match service: one JSON object per text frame.

export type Seat = "X" | "O";

export type LineKind = "row" | "col" | "main_diag" | "anti_diag";

export interface LinePayload {
  kind: LineKind;
  index: number;
}

export interface JoinedMessage {
  type: "joined";
  seat: Seat;
  match_id: string;
}

export interface StateMessage {
  type: "state";
  board: string;
  status: "in_progress" | "won" | "draw";
  turn?: Seat;
  winner?: Seat;
  line?: LinePayload;
  ply: number;
}

export type ErrorCode =
  | "match_not_found"
  | "match_full"
  | "already_seated"
  | "not_seated"
  | "game_over"
  | "out_of_turn"
  | "cell_occupied"
  | "out_of_bounds";

export interface ErrorMessage {
  type: "error";
  code: ErrorCode;
  message: string;
}

export interface OpponentLeftMessage {
  type: "opponent_left";
}

export type ServerMessage =
  | JoinedMessage
  | StateMessage
  | ErrorMessage
  | OpponentLeftMessage;

export interface JoinMessage {
  type: "join";
}

export interface PlaceMarkMessage {
  type: "place_mark";
  row: number;
  col: number;
}

export interface NewGameMessage {
  type: "new_game";
}

export type ClientMessage = JoinMessage | PlaceMarkMessage | NewGameMessage;

const SEATS = new Set(["X", "O"]);
const STATUSES = new Set(["in_progress", "won", "draw"]);
const LINE_KINDS = new Set(["row", "col", "main_diag", "anti_diag"]);
const ERROR_CODES = new Set([
  "match_not_found",
  "match_full",
  "already_seated",
  "not_seated",
  "game_over",
  "out_of_turn",
  "cell_occupied",
  "out_of_bounds",
]);

function isBoardString(value: unknown): value is string {
  return (
    typeof value === "string" &&
    value.length === 9 &&
    [...value].every((ch) => ch === "X" || ch === "O" || ch === ".")
  );
}

/** Decode one inbound frame; null when it is not a well-formed server message. */
export function parseServerMessage(text: string): ServerMessage | null {
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch {
    return null;
  }
  if (typeof raw !== "object" || raw === null) return null;
  const msg = raw as Record<string, unknown>;
  switch (msg.type) {
    case "joined":
      if (SEATS.has(msg.seat as string) && typeof msg.match_id === "string") {
        return { type: "joined", seat: msg.seat as Seat, match_id: msg.match_id };
      }
      return null;
    case "state": {
      if (!isBoardString(msg.board)) return null;
      if (!STATUSES.has(msg.status as string)) return null;
      if (typeof msg.ply !== "number" || msg.ply < 0 || msg.ply > 9) return null;
      const state: StateMessage = {
        type: "state",
        board: msg.board,
        status: msg.status as StateMessage["status"],
        ply: msg.ply,
      };
      if (msg.status === "in_progress") {
        if (!SEATS.has(msg.turn as string)) return null;
        state.turn = msg.turn as Seat;
      }
      if (msg.status === "won") {
        if (!SEATS.has(msg.winner as string)) return null;
        const line = msg.line as Record<string, unknown> | undefined;
        if (
          !line ||
          !LINE_KINDS.has(line.kind as string) ||
          typeof line.index !== "number"
        ) {
          return null;
        }
        state.winner = msg.winner as Seat;
        state.line = { kind: line.kind as LineKind, index: line.index };
      }
      return state;
    }
    case "error":
      if (ERROR_CODES.has(msg.code as string) && typeof msg.message === "string") {
        return { type: "error", code: msg.code as ErrorCode, message: msg.message };
      }
      return null;
    case "opponent_left":
      return { type: "opponent_left" };
    default:
      return null;
  }
}

/** Flat cell indexes (0..8, row-major) covered by a winning line. */
export function lineCellIndexes(line: LinePayload): number[] {
  switch (line.kind) {
    case "row":
      return [3 * line.index, 3 * line.index + 1, 3 * line.index + 2];
    case "col":
      return [line.index, line.index + 3, line.index + 6];
    case "main_diag":
      return [0, 4, 8];
    case "anti_diag":
      return [2, 4, 6];
  }
}
