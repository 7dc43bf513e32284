import { describe, expect, it } from "vitest";

import type { Analysis, Session } from "../src/api.js";
import {
  buildBoardView,
  coversPosition,
  isSelectableSource,
  occupiedLabels,
  smallestFreeFinite,
  squareLabel,
} from "../src/model.js";
import type { UiState } from "../src/model.js";

// fixtures mirror real server responses for the five-coin opening
const session: Session = {
  id: "abc123",
  game: "welter",
  position: ["1", "w*2+4", "w*2+9", "w^2+w*4+16", "w^2+w*5+25"],
  to_move: "human",
  status: "ongoing",
  human_first: true,
  history: [],
};

const analysis: Analysis = {
  value: "w+4",
  p_position: false,
  winning_moves: [{ from: "w^2+w*5+25", to: "w^2+w*4+30" }],
  what_if: [],
  blocks: [
    { lambda: "0", prefix: "", squares: [1] },
    { lambda: "2", prefix: "w*2", squares: [4, 9] },
    { lambda: "w+4", prefix: "w^2+w*4", squares: [16] },
    { lambda: "w+5", prefix: "w^2+w*5", squares: [25] },
  ],
};

const ui: UiState = { selected: null, extents: {}, whatIf: {} };

describe("squareLabel", () => {
  it("addresses finite squares directly", () => {
    expect(squareLabel("", 7)).toBe("7");
    expect(squareLabel("", 0)).toBe("0");
  });

  it("composes block squares from the prefix", () => {
    expect(squareLabel("w*2", 4)).toBe("w*2+4");
    expect(squareLabel("w^2+w*4", 30)).toBe("w^2+w*4+30");
    expect(squareLabel("w*2", 0)).toBe("w*2");
  });
});

describe("source pre-filter", () => {
  it("only occupied squares are selectable", () => {
    expect(isSelectableSource(session, "w^2+w*5+25")).toBe(true);
    expect(isSelectableSource(session, "w^2+w*5+24")).toBe(false);
    expect(isSelectableSource(session, "0")).toBe(false);
  });

  it("nothing is selectable once the game is over", () => {
    const done = { ...session, status: "engine_won" as const };
    expect(isSelectableSource(done, "w^2+w*5+25")).toBe(false);
  });

  it("occupied set mirrors the server position", () => {
    expect(occupiedLabels(session)).toEqual(new Set(session.position));
  });
});

describe("buildBoardView", () => {
  it("shows the analysis value in the banner", () => {
    const view = buildBoardView(session, analysis, ui);
    expect(view.banner).toBe("value w+4 (N-position)");
  });

  it("renders one window per nonempty block", () => {
    const view = buildBoardView(session, analysis, ui);
    expect(view.blocks.map((b) => b.lambda)).toEqual(["0", "2", "w+4", "w+5"]);
  });

  it("always includes the finite window even when empty", () => {
    const transfinite: Session = { ...session, position: ["w", "w+1"] };
    const bare: Analysis = {
      value: "1",
      p_position: false,
      winning_moves: [],
      what_if: [],
      blocks: [{ lambda: "1", prefix: "w", squares: [0, 1] }],
    };
    const view = buildBoardView(transfinite, bare, ui);
    expect(view.blocks[0].lambda).toBe("0");
    expect(view.blocks[0].squares.every((s) => !s.occupied)).toBe(true);
  });

  it("covers every occupied square with some window", () => {
    const view = buildBoardView(session, analysis, ui);
    expect(coversPosition(view, session)).toBe(true);
  });

  it("extends windows past the last occupied square", () => {
    const view = buildBoardView(session, analysis, ui);
    const block2 = view.blocks.find((b) => b.lambda === "2")!;
    expect(block2.extent).toBeGreaterThan(9);
    expect(block2.squares.filter((s) => s.occupied).map((s) => s.m)).toEqual([4, 9]);
  });

  it("honors user-expanded extents", () => {
    const expanded = buildBoardView(session, analysis, { ...ui, extents: { "0": 40 } });
    expect(expanded.blocks[0].extent).toBe(40);
  });

  it("marks winning targets, narrowing to the selected coin", () => {
    const anyView = buildBoardView(session, analysis, ui);
    const row = anyView.blocks.find((b) => b.lambda === "w+4")!;
    expect(row.squares.find((s) => s.m === 30)?.winningTarget).toBe(true);

    const selectedElsewhere = buildBoardView(session, analysis, {
      ...ui,
      selected: "w*2+9",
    });
    const narrowed = selectedElsewhere.blocks.find((b) => b.lambda === "w+4")!;
    expect(narrowed.squares.find((s) => s.m === 30)?.winningTarget).toBe(false);
  });

  it("attaches what-if overlays to their squares", () => {
    const hover = buildBoardView(session, analysis, {
      ...ui,
      selected: "w^2+w*5+25",
      whatIf: { "w^2+w*4+30": "value 0" },
    });
    const row = hover.blocks.find((b) => b.lambda === "w+4")!;
    expect(row.squares.find((s) => s.m === 30)?.whatIf).toBe("value 0");
  });

  it("reflects turn state", () => {
    const view = buildBoardView(session, analysis, ui);
    expect(view.canMove).toBe(true);
    expect(view.statusLine).toBe("your move");
    const theirs = buildBoardView({ ...session, to_move: "engine" }, analysis, ui);
    expect(theirs.canMove).toBe(false);
  });
});

describe("smallestFreeFinite", () => {
  it("walks past occupied finite squares", () => {
    expect(smallestFreeFinite(session)).toBe(0);
    const crowded = { ...session, position: ["0", "1", "2", "5"] };
    expect(smallestFreeFinite(crowded)).toBe(3);
  });
});
