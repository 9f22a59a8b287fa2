// Page entry: the landing screen creates or joins a match, the game screen
// runs one MatchClient against the service.

import { MatchClient } from "./client.js";
import { buildViewModel } from "./render.js";
import {
  applyViewModel,
  browserSocketFactory,
  collectPageElements,
  wirePage,
} from "./dom.js";

// Overridable at build time or per page load with ?api=http://host:port
const DEFAULT_API_BASE = "http://127.0.0.1:8080";

function apiBase(params: URLSearchParams): string {
  return (params.get("api") ?? DEFAULT_API_BASE).replace(/\/$/, "");
}

function wsBase(api: string): string {
  return api.replace(/^http/, "ws");
}

function matchIdFrom(text: string): string | null {
  const trimmed = text.trim();
  if (trimmed === "") return null;
  try {
    const url = new URL(trimmed);
    return url.searchParams.get("match");
  } catch {
    return trimmed; // a bare match id
  }
}

function shareLink(matchId: string, params: URLSearchParams): string {
  const link = new URL(window.location.href);
  link.searchParams.set("match", matchId);
  const api = params.get("api");
  if (api) link.searchParams.set("api", api);
  return link.toString();
}

function showLanding(params: URLSearchParams): void {
  const landing = document.getElementById("landing")!;
  landing.hidden = false;
  const createButton = document.getElementById("create-match") as HTMLButtonElement;
  const share = document.getElementById("share")!;
  const shareAnchor = document.getElementById("share-link") as HTMLAnchorElement;
  const joinForm = document.getElementById("join-form") as HTMLFormElement;
  const joinInput = document.getElementById("join-input") as HTMLInputElement;

  createButton.addEventListener("click", async () => {
    createButton.disabled = true;
    try {
      const response = await fetch(`${apiBase(params)}/matches`, { method: "POST" });
      if (!response.ok) throw new Error(`create failed: ${response.status}`);
      const body = (await response.json()) as { match_id: string };
      const link = shareLink(body.match_id, params);
      shareAnchor.href = link;
      shareAnchor.textContent = link;
      share.hidden = false;
    } catch (err) {
      shareAnchor.textContent = String(err);
      share.hidden = false;
    } finally {
      createButton.disabled = false;
    }
  });

  joinForm.addEventListener("submit", (event) => {
    event.preventDefault();
    const matchId = matchIdFrom(joinInput.value);
    if (matchId) {
      window.location.href = shareLink(matchId, params);
    }
  });
}

function showGame(params: URLSearchParams, matchId: string): void {
  document.getElementById("game")!.hidden = false;
  const page = collectPageElements(document);
  const client = new MatchClient(
    browserSocketFactory(wsBase(apiBase(params))),
    (state) => applyViewModel(buildViewModel(state), page),
  );
  wirePage(page, client, matchId);
  client.connect(matchId);
}

const params = new URLSearchParams(window.location.search);
const matchId = params.get("match");
if (matchId) {
  showGame(params, matchId);
} else {
  showLanding(params);
}
