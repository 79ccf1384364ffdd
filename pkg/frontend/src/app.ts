// DOM wiring: new-game form, click-to-move, panels. All state shown comes
// from the server documents; a click merely posts and re-renders whatever
// comes back (including its rejection reason).

import { SessionApi, type SessionDoc } from "./api.js";
import { buildBoard, invariantPanel } from "./model.js";
import { PRESETS } from "./presets.js";

const api = new SessionApi("");
const COLOR_SWATCH = [
  "#e05252", "#4a90d9", "#56a556", "#c9a227",
  "#9265c8", "#d97b2f", "#3aa6a6", "#b05c9e",
];

let session: SessionDoc | null = null;
let pendingElement: number | null = null;

function el<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

function swatch(color: number): string {
  return COLOR_SWATCH[color % COLOR_SWATCH.length];
}

async function refresh(doc?: SessionDoc): Promise<void> {
  if (doc) session = doc;
  if (!session) return;
  const legal = await api.getLegal(session.id);
  const board = buildBoard(session, legal);
  el<HTMLDivElement>("banner").textContent = board.banner;

  const blocksRoot = el<HTMLDivElement>("board");
  blocksRoot.replaceChildren();
  for (const block of board.blocks) {
    const div = document.createElement("div");
    div.className = "block";
    const title = document.createElement("h3");
    title.textContent = block.title;
    div.appendChild(title);
    if (block.grid) {
      div.style.display = "grid";
      div.style.gridTemplateColumns = `auto repeat(${block.grid.cols}, max-content)`;
    }
    for (const v of block.elements) {
      const chip = document.createElement("button");
      chip.className = "chip";
      chip.textContent = v.label;
      if (v.colors.length) {
        chip.style.background = swatch(v.colors[0]);
        chip.style.color = "white";
      }
      if (v.done) chip.classList.add("done");
      if (pendingElement === v.element) chip.classList.add("selected");
      if (board.humanTurn && v.legalColors.length) chip.classList.add("playable");
      chip.onclick = () => pickElement(v.element, v.legalColors);
      div.appendChild(chip);
    }
    blocksRoot.appendChild(div);
  }

  const palette = el<HTMLDivElement>("palette");
  palette.replaceChildren();
  if (pendingElement !== null) {
    const hint = legal
      .filter((m) => m.element === pendingElement)
      .map((m) => m.color);
    for (let c = 0; c < session.colors; c++) {
      const btn = document.createElement("button");
      btn.className = "color";
      btn.style.background = swatch(c);
      btn.textContent = `${c}`;
      if (!hint.includes(c)) btn.classList.add("dim");
      btn.onclick = () => submitMove(pendingElement!, c);
      palette.appendChild(btn);
    }
  }

  const classes = el<HTMLDivElement>("classes");
  classes.replaceChildren();
  for (const cls of board.classLists) {
    const row = document.createElement("div");
    const dot = document.createElement("span");
    dot.className = "dot";
    dot.style.background = swatch(cls.color);
    row.appendChild(dot);
    row.appendChild(
      document.createTextNode(
        ` color ${cls.color}: ${cls.elements.join(", ") || "(empty)"}`,
      ),
    );
    classes.appendChild(row);
  }

  const debug = await api.getDebug(session.id);
  const panel = el<HTMLDivElement>("panel");
  panel.replaceChildren();
  for (const row of invariantPanel(debug)) {
    const line = document.createElement("div");
    line.textContent = `${row.label}: ${row.values.join("  ")}`;
    panel.appendChild(line);
  }
}

function pickElement(element: number, legalColors: number[]): void {
  pendingElement = element;
  if (legalColors.length === 1) {
    void submitMove(element, legalColors[0]);
    return;
  }
  void refresh();
}

async function submitMove(element: number, color: number): Promise<void> {
  if (!session) return;
  const result = await api.postMove(session.id, element, color);
  const message = el<HTMLDivElement>("message");
  if (result.ok) {
    message.textContent = "";
    pendingElement = null;
    await refresh(result.session);
  } else {
    message.textContent = `rejected: ${result.reason}`;
    await refresh();
  }
}

async function newGame(): Promise<void> {
  const presetKey = el<HTMLSelectElement>("preset").value;
  const side = el<HTMLSelectElement>("side").value as "alice" | "bob";
  const engine = el<HTMLSelectElement>("engine").value;
  const preset = PRESETS[presetKey]();
  el<HTMLDivElement>("message").textContent = "";
  pendingElement = null;
  try {
    const doc = await api.createSession(preset.config, side, engine);
    await refresh(doc);
  } catch (err) {
    el<HTMLDivElement>("message").textContent = String(err);
  }
}

export function init(): void {
  el<HTMLButtonElement>("new-game").onclick = () => void newGame();
}

if (typeof document !== "undefined" && document.getElementById("new-game")) {
  init();
}
