// Browser-only layer: element lookups, event wiring, and applying a view
// model to the page. Everything game-related stays in the pure modules.

import { MatchClient, SocketFactory } from "./client.js";
import { ViewModel } from "./render.js";

export interface PageElements {
  banner: HTMLElement;
  youAre: HTMLElement;
  header: HTMLElement;
  cells: HTMLButtonElement[];
  newGame: HTMLButtonElement;
  notice: HTMLElement;
  retry: HTMLButtonElement;
}

export function collectPageElements(doc: Document): PageElements {
  const grid = doc.getElementById("grid")!;
  const cells: HTMLButtonElement[] = [];
  for (let i = 0; i < 9; i++) {
    const button = doc.createElement("button");
    button.className = "cell";
    button.dataset.index = String(i);
    grid.appendChild(button);
    cells.push(button);
  }
  return {
    banner: doc.getElementById("banner")!,
    youAre: doc.getElementById("you-are")!,
    header: doc.getElementById("header")!,
    cells,
    newGame: doc.getElementById("new-game") as HTMLButtonElement,
    notice: doc.getElementById("notice")!,
    retry: doc.getElementById("retry") as HTMLButtonElement,
  };
}

export function applyViewModel(vm: ViewModel, page: PageElements): void {
  page.header.textContent = vm.header;
  page.banner.textContent = vm.banner ?? "";
  page.banner.hidden = vm.banner === null;
  page.youAre.textContent = vm.youAre ?? "";
  vm.cells.forEach((cell, i) => {
    const button = page.cells[i];
    button.textContent = cell.text;
    button.disabled = !cell.clickable;
    button.classList.toggle("win-cell", cell.highlighted);
    button.classList.toggle("mark-x", cell.text === "X");
    button.classList.toggle("mark-o", cell.text === "O");
  });
  page.newGame.disabled = !vm.newGameEnabled;
  page.newGame.classList.toggle("prominent", vm.newGameProminent);
  page.notice.textContent = vm.notice ?? "";
  page.retry.hidden = !vm.showRetry;
}

export function wirePage(
  page: PageElements,
  client: MatchClient,
  matchId: string,
): void {
  page.cells.forEach((button, i) => {
    button.addEventListener("click", () =>
      client.clickCell(Math.floor(i / 3), i % 3),
    );
  });
  page.newGame.addEventListener("click", () => client.clickNewGame());
  page.retry.addEventListener("click", () => client.connect(matchId));
}

/** Socket factory backed by the browser WebSocket. */
export function browserSocketFactory(wsBaseUrl: string): SocketFactory {
  return (matchId, handlers) => {
    const socket = new WebSocket(`${wsBaseUrl}/ws/${matchId}`);
    socket.onopen = () => handlers.onOpen();
    socket.onmessage = (event) => handlers.onMessage(String(event.data));
    socket.onclose = () => handlers.onClose();
    return {
      send: (text) => socket.send(text),
      close: () => socket.close(),
    };
  };
}
