import { describe, expect, it } from "vitest";

import { parseServerMessage, StateMessage } from "../src/protocol.js";
import {
  applyServerMessage,
  applyTransportClosed,
  cellClickMessage,
  ClientViewState,
  headerTextFor,
  initialViewState,
  inputEnabled,
  seatOf,
} from "../src/viewState.js";

const state = (overrides: Partial<StateMessage>): StateMessage => ({
  type: "state",
  board: ".........",
  status: "in_progress",
  turn: "X",
  ply: 0,
  ...overrides,
});

function seated(seat: "X" | "O", last: StateMessage | null): ClientViewState {
  return { phase: { kind: "seated", seat }, lastState: last, pending: false, notice: null };
}

describe("headerTextFor", () => {
  it("produces exactly the five header strings", () => {
    expect(headerTextFor(state({ turn: "X" }))).toBe("Turn X");
    expect(headerTextFor(state({ turn: "O" }))).toBe("Turn O");
    expect(
      headerTextFor(
        state({
          status: "won",
          turn: undefined,
          winner: "X",
          line: { kind: "row", index: 0 },
          board: "XXXOO....",
          ply: 5,
        }),
      ),
    ).toBe("Winner X");
    expect(
      headerTextFor(
        state({
          status: "won",
          turn: undefined,
          winner: "O",
          line: { kind: "row", index: 1 },
          board: "XX.OOOX..",
          ply: 6,
        }),
      ),
    ).toBe("Winner O");
    expect(
      headerTextFor(
        state({ status: "draw", turn: undefined, board: "XOXXOOOXX", ply: 9 }),
      ),
    ).toBe("Draw");
  });
});

describe("phase transitions", () => {
  it("joins out of connecting", () => {
    const next = applyServerMessage(initialViewState(), {
      type: "joined",
      seat: "X",
      match_id: "m1",
    });
    expect(next.phase).toEqual({ kind: "seated", seat: "X" });
    expect(seatOf(next)).toBe("X");
  });

  it("match_full before seating closes with the match-full screen", () => {
    const next = applyServerMessage(initialViewState(), {
      type: "error",
      code: "match_full",
      message: "both seats are taken",
    });
    expect(next.phase).toEqual({ kind: "closed", reason: "match_full" });
  });

  it("transport failure closes with retry", () => {
    const next = applyTransportClosed(seated("X", state({})));
    expect(next.phase).toEqual({ kind: "closed", reason: "transport" });
  });

  it("transport close does not mask the match-full screen", () => {
    const full = applyServerMessage(initialViewState(), {
      type: "error",
      code: "match_full",
      message: "both seats are taken",
    });
    expect(applyTransportClosed(full).phase).toEqual({
      kind: "closed",
      reason: "match_full",
    });
  });

  it("opponent_left flags the phase and keeps the board", () => {
    const before = seated("X", state({ board: "X........", turn: "O", ply: 1 }));
    const next = applyServerMessage(before, { type: "opponent_left" });
    expect(next.phase).toEqual({ kind: "opponent_left", seat: "X" });
    expect(next.lastState).toBe(before.lastState);
  });

  it("an unsolicited state after opponent_left means the seats are synced again", () => {
    const alone = applyServerMessage(
      seated("X", state({ board: "X........", turn: "O", ply: 1 })),
      { type: "opponent_left" },
    );
    const next = applyServerMessage(alone, state({ board: "X........", turn: "O", ply: 1 }));
    expect(next.phase).toEqual({ kind: "seated", seat: "X" });
  });

  it("the echo of an own in-flight move keeps the opponent-left banner", () => {
    const alone = applyServerMessage(
      seated("X", state({ board: ".........", turn: "X", ply: 0 })),
      { type: "opponent_left" },
    );
    const moving = { ...alone, pending: true };
    const next = applyServerMessage(moving, state({ board: "X........", turn: "O", ply: 1 }));
    expect(next.phase).toEqual({ kind: "opponent_left", seat: "X" });
    expect(next.pending).toBe(false);
  });
});

describe("inputEnabled", () => {
  const inProgressTurnX = state({ turn: "X" });

  it("requires a seat", () => {
    const unseated: ClientViewState = {
      ...initialViewState(),
      lastState: inProgressTurnX,
    };
    expect(inputEnabled(unseated)).toBe(false);
  });

  it("requires this seat's turn", () => {
    expect(inputEnabled(seated("X", inProgressTurnX))).toBe(true);
    expect(inputEnabled(seated("O", inProgressTurnX))).toBe(false);
  });

  it("requires a running game", () => {
    const won = state({
      status: "won",
      turn: undefined,
      winner: "X",
      line: { kind: "row", index: 0 },
      board: "XXXOO....",
      ply: 5,
    });
    expect(inputEnabled(seated("X", won))).toBe(false);
    const draw = state({ status: "draw", turn: undefined, board: "XOXXOOOXX", ply: 9 });
    expect(inputEnabled(seated("X", draw))).toBe(false);
  });

  it("is off while a move is pending", () => {
    const pending = { ...seated("X", inProgressTurnX), pending: true };
    expect(inputEnabled(pending)).toBe(false);
  });

  it("is off before the first state frame", () => {
    expect(inputEnabled(seated("X", null))).toBe(false);
  });
});

describe("cellClickMessage", () => {
  const midGame = state({ board: "XO.......", turn: "X", ply: 2 });

  it("produces a move for a blank cell on own turn", () => {
    expect(cellClickMessage(seated("X", midGame), 1, 1)).toEqual({
      type: "place_mark",
      row: 1,
      col: 1,
    });
  });

  it("ignores clicks on occupied cells", () => {
    expect(cellClickMessage(seated("X", midGame), 0, 0)).toBeNull();
    expect(cellClickMessage(seated("X", midGame), 0, 1)).toBeNull();
  });

  it("ignores clicks during the opponent's turn", () => {
    expect(cellClickMessage(seated("O", midGame), 1, 1)).toBeNull();
  });

  it("ignores clicks while pending", () => {
    const pending = { ...seated("X", midGame), pending: true };
    expect(cellClickMessage(pending, 1, 1)).toBeNull();
  });
});

describe("error replies", () => {
  it("clear pending and surface a transient notice", () => {
    const pending = { ...seated("X", state({})), pending: true };
    const next = applyServerMessage(pending, {
      type: "error",
      code: "cell_occupied",
      message: "cell occupied",
    });
    expect(next.pending).toBe(false);
    expect(next.notice).toBe("cell occupied");
    expect(next.phase).toEqual({ kind: "seated", seat: "X" });
  });

  it("a state frame clears the notice and pending", () => {
    const noticed = { ...seated("X", state({})), pending: true, notice: "out of turn" };
    const next = applyServerMessage(noticed, state({ board: "X........", turn: "O", ply: 1 }));
    expect(next.pending).toBe(false);
    expect(next.notice).toBeNull();
  });
});

describe("parseServerMessage", () => {
  it("accepts every server frame shape", () => {
    expect(parseServerMessage('{"type":"joined","seat":"X","match_id":"m"}')).toEqual({
      type: "joined",
      seat: "X",
      match_id: "m",
    });
    expect(
      parseServerMessage(
        '{"type":"state","board":"XXXOO....","status":"won","winner":"X","line":{"kind":"row","index":0},"ply":5}',
      ),
    ).toMatchObject({ status: "won", winner: "X" });
    expect(parseServerMessage('{"type":"opponent_left"}')).toEqual({
      type: "opponent_left",
    });
    expect(
      parseServerMessage('{"type":"error","code":"game_over","message":"game over"}'),
    ).toMatchObject({ code: "game_over" });
  });

  it("rejects malformed frames", () => {
    expect(parseServerMessage("not json")).toBeNull();
    expect(parseServerMessage('{"type":"mystery"}')).toBeNull();
    expect(parseServerMessage('{"type":"state","board":"short","status":"draw","ply":9}')).toBeNull();
    expect(parseServerMessage('{"type":"state","board":"XXXOO....","status":"won","ply":5}')).toBeNull();
    expect(parseServerMessage('{"type":"joined","seat":"Q","match_id":"m"}')).toBeNull();
  });
});
