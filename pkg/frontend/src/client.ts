// Connection glue: one socket per match, join on open, reduce every frame
// into the view state, and notify the page to repaint.

import { parseServerMessage } from "./protocol.js";
import {
  ClientViewState,
  applyServerMessage,
  applyTransportClosed,
  cellClickMessage,
  initialViewState,
  seatOf,
} from "./viewState.js";

export interface MatchSocket {
  send(text: string): void;
  close(): void;
}

export interface SocketHandlers {
  onOpen(): void;
  onMessage(text: string): void;
  onClose(): void;
}

export type SocketFactory = (matchId: string, handlers: SocketHandlers) => MatchSocket;

export class MatchClient {
  private socket: MatchSocket | null = null;
  private state: ClientViewState = initialViewState();

  constructor(
    private readonly socketFactory: SocketFactory,
    private readonly listener: (state: ClientViewState) => void,
  ) {}

  getState(): ClientViewState {
    return this.state;
  }

  connect(matchId: string): void {
    this.setState(initialViewState());
    this.socket = this.socketFactory(matchId, {
      onOpen: () => this.socket?.send(JSON.stringify({ type: "join" })),
      onMessage: (text) => this.handleFrame(text),
      onClose: () => this.setState(applyTransportClosed(this.state)),
    });
  }

  disconnect(): void {
    this.socket?.close();
    this.socket = null;
  }

  /** Send a move if input is enabled and the cell is blank; otherwise a no-op. */
  clickCell(row: number, col: number): void {
    const message = cellClickMessage(this.state, row, col);
    if (message === null || this.socket === null) return;
    this.socket.send(JSON.stringify(message));
    this.setState({ ...this.state, pending: true });
  }

  /** Ask for a fresh game; only meaningful while seated. */
  clickNewGame(): void {
    if (seatOf(this.state) === null || this.socket === null) return;
    this.socket.send(JSON.stringify({ type: "new_game" }));
  }

  private handleFrame(text: string): void {
    const message = parseServerMessage(text);
    if (message === null) {
      console.warn("ignoring malformed server frame:", text.slice(0, 100));
      return; // previous render stays
    }
    this.setState(applyServerMessage(this.state, message));
  }

  private setState(next: ClientViewState): void {
    this.state = next;
    this.listener(next);
  }
}
