/**
 * View-model for the transfinite board.
 *
 * The infinite belt is rendered as one finite window per nonempty block
 * (plus the finite block, always), each showing its occupied squares and
 * a margin of empty ones with an expandable extent.  Everything here is
 * derived from the last server responses; the client never re-derives
 * game rules, it only displays them (the lone "rule" it applies is the
 * pre-filter that move sources must be occupied squares).
 */

import type { Analysis, BlockRow, MoveRef, Session } from "./api.js";

export interface UiState {
  /** Ordinal string of the currently selected coin, if any. */
  selected: string | null;
  /** Per-lambda window extents chosen by the user (expand clicks). */
  extents: Record<string, number>;
  /** Hover overlay: target label -> value-after-move (or rejection reason). */
  whatIf: Record<string, string>;
}

export interface SquareView {
  m: number;
  /** Full ordinal string addressing this square. */
  label: string;
  occupied: boolean;
  selected: boolean;
  /** True when some winning move lands here (restricted to the selected
   *  coin's moves while a coin is selected). */
  winningTarget: boolean;
  whatIf?: string;
}

export interface BlockWindow {
  lambda: string;
  prefix: string;
  extent: number;
  squares: SquareView[];
}

export interface BoardView {
  banner: string;
  statusLine: string;
  blocks: BlockWindow[];
  canMove: boolean;
}

export const DEFAULT_EXTENT = 8;
export const MARGIN = 4;

export function squareLabel(prefix: string, m: number): string {
  if (prefix === "") {
    return String(m);
  }
  return m > 0 ? `${prefix}+${m}` : prefix;
}

export function occupiedLabels(session: Session): Set<string> {
  return new Set(session.position);
}

/** The move-source pre-filter: only occupied squares are selectable. */
export function isSelectableSource(session: Session, label: string): boolean {
  return session.status === "ongoing" && occupiedLabels(session).has(label);
}

export function smallestFreeFinite(session: Session): number {
  const occupied = occupiedLabels(session);
  let m = 0;
  while (occupied.has(String(m))) {
    m += 1;
  }
  return m;
}

export function banner(analysis: Analysis): string {
  return `value ${analysis.value} (${analysis.p_position ? "P-position" : "N-position"})`;
}

function statusLine(session: Session): string {
  switch (session.status) {
    case "human_won":
      return "game over: you win";
    case "engine_won":
      return "game over: engine wins";
    default:
      return session.to_move === "human" ? "your move" : "engine to move";
  }
}

function windowRows(analysis: Analysis): BlockRow[] {
  const rows = (analysis.blocks ?? []).slice();
  if (!rows.some((r) => r.lambda === "0")) {
    rows.unshift({ lambda: "0", prefix: "", squares: [] });
  }
  return rows;
}

function winningTargets(moves: MoveRef[], selected: string | null): Set<string> {
  const relevant = selected ? moves.filter((m) => m.from === selected) : moves;
  return new Set(relevant.map((m) => m.to));
}

/** The finite part a label denotes inside a block, or null if the label
 *  does not address this block.  Pure string matching on the prefix. */
export function finitePartInBlock(prefix: string, label: string): number | null {
  if (prefix === "") {
    return /^\d+$/.test(label) ? parseInt(label, 10) : null;
  }
  if (label === prefix) {
    return 0;
  }
  if (label.startsWith(`${prefix}+`)) {
    const rest = label.slice(prefix.length + 1);
    return /^\d+$/.test(rest) ? parseInt(rest, 10) : null;
  }
  return null;
}

export function buildBoardView(session: Session, analysis: Analysis, ui: UiState): BoardView {
  const occupied = occupiedLabels(session);
  const targets = winningTargets(analysis.winning_moves, ui.selected);
  // windows stay wide enough to show every winning target and overlay,
  // independent of the current selection, so they never jump around
  const interesting = [
    ...analysis.winning_moves.map((m) => m.to),
    ...Object.keys(ui.whatIf),
  ];
  const blocks = windowRows(analysis).map((row) => {
    const largest = row.squares.length > 0 ? Math.max(...row.squares) : -1;
    let extent = Math.max(DEFAULT_EXTENT, largest + 1 + MARGIN, ui.extents[row.lambda] ?? 0);
    for (const label of interesting) {
      const m = finitePartInBlock(row.prefix, label);
      if (m !== null) {
        extent = Math.max(extent, m + 2);
      }
    }
    const squares: SquareView[] = [];
    for (let m = 0; m < extent; m += 1) {
      const label = squareLabel(row.prefix, m);
      const view: SquareView = {
        m,
        label,
        occupied: occupied.has(label),
        selected: ui.selected === label,
        winningTarget: targets.has(label),
      };
      const overlay = ui.whatIf[label];
      if (overlay !== undefined) {
        view.whatIf = overlay;
      }
      squares.push(view);
    }
    return { lambda: row.lambda, prefix: row.prefix, extent, squares };
  });
  return {
    banner: banner(analysis),
    statusLine: statusLine(session),
    blocks,
    canMove: session.status === "ongoing" && session.to_move === "human",
  };
}

/** Every occupied square must appear in some rendered window. */
export function coversPosition(view: BoardView, session: Session): boolean {
  const rendered = new Set(
    view.blocks.flatMap((b) => b.squares.filter((s) => s.occupied).map((s) => s.label)),
  );
  return session.position.every((coin) => rendered.has(coin));
}
