// Pure view-model builders. Everything rendered derives from the last
// fetched server document; nothing here re-implements game rules.

import type { DebugDoc, LegalMove, SessionDoc } from "./api.js";

export interface ElementView {
  element: number;
  label: string;
  colors: number[];
  done: boolean;
  legalColors: number[];
}

export interface BlockView {
  title: string;
  elements: ElementView[];
  // hub blocks carry a row/column grid parsed from their c_i_j labels
  grid?: { rows: number; cols: number };
}

export interface BoardView {
  blocks: BlockView[];
  classLists: { color: number; elements: string[] }[];
  banner: string;
  humanTurn: boolean;
}

function elementViews(doc: SessionDoc, legal: LegalMove[]): ElementView[] {
  const legalByElement = new Map<number, number[]>();
  for (const mv of legal) {
    const got = legalByElement.get(mv.element) ?? [];
    got.push(mv.color);
    legalByElement.set(mv.element, got);
  }
  return doc.state.labels.map((label, e) => {
    const colors = doc.state.classes
      .map((cls, i) => (cls.includes(e) ? i : -1))
      .filter((i) => i >= 0);
    return {
      element: e,
      label,
      colors,
      done: doc.state.counts[e] >= doc.multiplicity,
      legalColors: legalByElement.get(e) ?? [],
    };
  });
}

// Group by label scheme: c_i_j labels form a grid block, d_i_a labels one
// block per a; anything else is a single flat block.
export function groupElements(views: ElementView[]): BlockView[] {
  const hub: ElementView[] = [];
  const dBlocks = new Map<number, ElementView[]>();
  const plain: ElementView[] = [];
  let rows = 0;
  let cols = 0;
  for (const v of views) {
    const mc = /^c_(\d+)_(\d+)$/.exec(v.label);
    const md = /^d_(\d+)_(\d+)$/.exec(v.label);
    if (mc) {
      hub.push(v);
      rows = Math.max(rows, parseInt(mc[1], 10));
      cols = Math.max(cols, parseInt(mc[2], 10));
    } else if (md) {
      const a = parseInt(md[2], 10);
      const block = dBlocks.get(a) ?? [];
      block.push(v);
      dBlocks.set(a, block);
    } else plain.push(v);
  }
  const blocks: BlockView[] = [];
  if (hub.length) blocks.push({ title: "C", elements: hub, grid: { rows, cols } });
  for (const a of [...dBlocks.keys()].sort((x, y) => x - y)) {
    blocks.push({ title: `D${a}`, elements: dBlocks.get(a)! });
  }
  if (plain.length) {
    blocks.push({ title: blocks.length ? "other" : "elements", elements: plain });
  }
  return blocks;
}

export function banner(doc: SessionDoc): string {
  switch (doc.state.status) {
    case "alice":
      return "Alice wins: every element holds its colors";
    case "bob":
      return "Bob wins: no admissible move remains";
    default:
      return doc.state.mover === doc.humanSide
        ? `your move (${doc.humanSide})`
        : `engine thinking (${doc.state.mover})`;
  }
}

export function buildBoard(doc: SessionDoc, legal: LegalMove[]): BoardView {
  const views = elementViews(doc, legal);
  const classLists = doc.state.classes.map((cls, color) => ({
    color,
    elements: cls.map((e) => doc.state.labels[e]),
  }));
  return {
    blocks: groupElements(views),
    classLists,
    banner: banner(doc),
    humanTurn:
      doc.state.status === "ongoing" && doc.state.mover === doc.humanSide,
  };
}

export interface PanelRow {
  label: string;
  values: (string | number)[];
}

// Invariant panel rows from the engine's debug snapshot: the covering
// strategy exposes reserve sets and the parity table, the blocker its
// d / c / eps counters.
export function invariantPanel(debug: DebugDoc): PanelRow[] {
  const snap = debug.snapshot as Record<string, unknown>;
  const rows: PanelRow[] = [];
  if (Array.isArray(snap["reserve_sets"])) {
    const sets = snap["reserve_sets"] as number[][];
    rows.push({
      label: "reserve set sizes",
      values: sets.map((s) => s.length),
    });
  }
  if (Array.isArray(snap["w"])) {
    rows.push({ label: "w(e)", values: snap["w"] as number[] });
  }
  const counters = snap["counters"] as
    | { d: number[]; c: number[]; eps: number[] }
    | undefined;
  if (counters) {
    rows.push({ label: "d_i", values: counters.d });
    rows.push({ label: "c_i", values: counters.c });
    rows.push({ label: "eps_i", values: counters.eps });
    rows.push({
      label: "slack d-(c+eps-1)",
      values: counters.d.map((d, i) => d - (counters.c[i] + counters.eps[i] - 1)),
    });
  }
  if (Array.isArray(snap["pairs"])) {
    rows.push({
      label: "designated pairs",
      values: (snap["pairs"] as number[][]).map((p) => `D${p[0]}+D${p[1]}`),
    });
  }
  return rows;
}
