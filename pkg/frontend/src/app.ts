/**
 * DOM wiring: create a game, render block windows, submit moves, trigger
 * engine replies, and overlay what-if analysis on hover.  All state shown
 * comes from the last server responses (session + analysis); at most one
 * mutation request is in flight at a time.
 */

import { ApiError, GameClient } from "./api.js";
import type { Analysis, Session } from "./api.js";
import { buildBoardView, isSelectableSource } from "./model.js";
import type { UiState } from "./model.js";

const client = new GameClient("");

let session: Session | null = null;
let analysis: Analysis | null = null;
const ui: UiState = { selected: null, extents: {}, whatIf: {} };
let busy = false;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function setError(message: string) {
  el<HTMLDivElement>("error").textContent = message;
}

async function hoverWhatIf(target: string) {
  if (!session || !ui.selected || busy) return;
  try {
    const result = await client.analysis(session.id, [{ from: ui.selected, to: target }]);
    const entry = result.what_if[0];
    ui.whatIf = { [target]: entry.legal ? `value ${entry.value}` : entry.reason ?? "illegal" };
  } catch {
    ui.whatIf = {};
  }
  render();
}

async function submitMove(from: string, to: string) {
  if (!session || busy) return;
  busy = true;
  try {
    session = await client.postMove(session.id, from, to);
    setError("");
    ui.selected = null;
    ui.whatIf = {};
    analysis = await client.analysis(session.id);
    render();
    if (session.status === "ongoing" && session.to_move === "engine") {
      session = await client.engineMove(session.id);
      analysis = await client.analysis(session.id);
    }
  } catch (err) {
    // rejected moves leave all state untouched; just surface the reason
    setError(err instanceof ApiError ? `rejected: ${err.reason}` : String(err));
  } finally {
    busy = false;
    render();
  }
}

function onSquareClick(label: string) {
  if (!session || session.status !== "ongoing" || session.to_move !== "human") return;
  if (isSelectableSource(session, label)) {
    ui.selected = ui.selected === label ? null : label;
    ui.whatIf = {};
    render();
    return;
  }
  if (ui.selected) {
    void submitMove(ui.selected, label);
  }
}

function render() {
  const board = el<HTMLDivElement>("board");
  const bannerNode = el<HTMLDivElement>("banner");
  const statusNode = el<HTMLDivElement>("status");
  board.replaceChildren();
  if (!session || !analysis) {
    bannerNode.textContent = "";
    statusNode.textContent = "create a game to start";
    return;
  }
  const view = buildBoardView(session, analysis, ui);
  bannerNode.textContent = view.banner;
  statusNode.textContent = view.statusLine;

  for (const block of view.blocks) {
    const windowNode = document.createElement("details");
    windowNode.open = true;
    windowNode.className = "block";
    const title = document.createElement("summary");
    title.textContent = `block lambda = ${block.lambda}`;
    windowNode.appendChild(title);

    const row = document.createElement("div");
    row.className = "squares";
    for (const square of block.squares) {
      const cell = document.createElement("button");
      cell.className = "square";
      if (square.occupied) cell.classList.add("occupied");
      if (square.selected) cell.classList.add("selected");
      if (square.winningTarget) cell.classList.add("winning");
      cell.textContent = square.occupied ? "●" : String(square.m);
      cell.title = square.label;
      if (square.whatIf) {
        const tag = document.createElement("span");
        tag.className = "whatif";
        tag.textContent = square.whatIf;
        cell.appendChild(tag);
      }
      cell.addEventListener("click", () => onSquareClick(square.label));
      cell.addEventListener("mouseenter", () => {
        if (ui.selected && !square.occupied) void hoverWhatIf(square.label);
      });
      row.appendChild(cell);
    }
    const expand = document.createElement("button");
    expand.className = "expand";
    expand.textContent = "more →";
    expand.addEventListener("click", () => {
      ui.extents[block.lambda] = block.extent + 8;
      render();
    });
    row.appendChild(expand);
    windowNode.appendChild(row);
    board.appendChild(windowNode);
  }

  const movesNode = el<HTMLUListElement>("winning");
  movesNode.replaceChildren();
  for (const move of analysis.winning_moves) {
    const item = document.createElement("li");
    item.textContent = `${move.from} → ${move.to}`;
    movesNode.appendChild(item);
  }
}

async function createGame() {
  const positionText = el<HTMLTextAreaElement>("position").value;
  const humanFirst = el<HTMLInputElement>("human-first").checked;
  const position = positionText.split(/[\s,]+/).filter((t) => t.length > 0);
  busy = true;
  try {
    session = await client.createGame("welter", position, humanFirst);
    setError("");
    ui.selected = null;
    ui.extents = {};
    ui.whatIf = {};
    analysis = await client.analysis(session.id);
    render();
    if (session.status === "ongoing" && session.to_move === "engine") {
      session = await client.engineMove(session.id);
      analysis = await client.analysis(session.id);
    }
  } catch (err) {
    setError(err instanceof ApiError ? `rejected: ${err.reason}` : String(err));
  } finally {
    busy = false;
    render();
  }
}

async function moveByText() {
  const from = el<HTMLInputElement>("from-text").value.trim();
  const to = el<HTMLInputElement>("to-text").value.trim();
  if (from && to) {
    await submitMove(from, to);
  }
}

export function start() {
  el<HTMLButtonElement>("create").addEventListener("click", () => void createGame());
  el<HTMLButtonElement>("move-text").addEventListener("click", () => void moveByText());
  render();
}

if (typeof document !== "undefined" && document.getElementById("board")) {
  start();
}
