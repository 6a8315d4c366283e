/** Graph screen: the argument graph as SVG. Support edges are solid,
 * attack edges dashed; selecting a node opens its detail panel. */

import type { SessionStore } from "../store.js";
import { el, fmt, svgEl } from "../ui.js";

const CELL = 88;
const PAD = 48;

export function renderGraphView(store: SessionStore, rerender: () => void): HTMLElement {
  const graph = store.graph;
  if (!graph) return el("div", { class: "empty" }, "no session loaded");

  const ids = graph.arguments.map((a) => a.arg_id).sort();
  const cols = Math.max(1, Math.ceil(Math.sqrt(ids.length)));
  const pos = new Map<string, { x: number; y: number }>();
  ids.forEach((id, i) => {
    pos.set(id, {
      x: PAD + (i % cols) * CELL,
      y: PAD + Math.floor(i / cols) * CELL,
    });
  });
  const rows = Math.max(1, Math.ceil(ids.length / cols));
  const width = PAD * 2 + (cols - 1) * CELL;
  const height = PAD * 2 + (rows - 1) * CELL;

  const svg = svgEl("svg", {
    viewBox: `0 0 ${width} ${height}`,
    class: "graph-svg",
    role: "img",
  });

  for (const rel of graph.relations) {
    const s = pos.get(rel.source);
    const t = pos.get(rel.target);
    if (!s || !t) continue;
    const line = svgEl("line", {
      x1: String(s.x),
      y1: String(s.y),
      x2: String(t.x),
      y2: String(t.y),
      class: `edge edge-${rel.polarity}`,
      "data-polarity": rel.polarity,
    });
    if (rel.polarity === "attack") line.setAttribute("stroke-dasharray", "6 4");
    svg.append(line);
  }

  const degrees = store.summary?.degrees?.degrees ?? null;
  for (const arg of graph.arguments) {
    const p = pos.get(arg.arg_id);
    if (!p) continue;
    const f = degrees === null ? null : degrees[arg.arg_id] ?? null;
    const r = 7 + (f ?? arg.tau) * 7;
    const circle = svgEl("circle", {
      cx: String(p.x),
      cy: String(p.y),
      r: String(r),
      class:
        `node node-${arg.stance}` +
        (arg.tau_pinned ? " node-pinned" : "") +
        (store.selectedArg === arg.arg_id ? " node-selected" : ""),
      "data-node-id": arg.arg_id,
    });
    circle.addEventListener("click", () => {
      store.selectedArg = arg.arg_id;
      rerender();
    });
    svg.append(circle);
  }

  const selected = graph.arguments.find((a) => a.arg_id === store.selectedArg) ?? null;
  const detail = el("aside", { class: "card detail", "data-role": "node-detail" });
  if (selected) {
    const f = degrees === null ? null : degrees[selected.arg_id] ?? null;
    detail.append(
      el("h2", { class: "mono" }, selected.arg_id),
      el("p", {}, selected.content),
      el("div", { class: "stat-row" }, el("span", { class: "stat-label" }, "role"),
        el("span", {}, selected.role)),
      el("div", { class: "stat-row" }, el("span", { class: "stat-label" }, "stance"),
        el("span", {}, selected.stance)),
      el("div", { class: "stat-row" }, el("span", { class: "stat-label" }, "status"),
        el("span", {}, selected.status)),
      el("div", { class: "stat-row" }, el("span", { class: "stat-label" }, "τ"),
        el("span", { class: "mono" }, fmt(selected.tau) + (selected.tau_pinned ? " (pinned)" : ""))),
      el("div", { class: "stat-row" }, el("span", { class: "stat-label" }, "degree"),
        el("span", { class: "mono" }, store.summary?.degrees_stale ? "stale" : fmt(f))),
      el("div", { class: "stat-row" }, el("span", { class: "stat-label" }, "option"),
        el("span", { class: "mono" }, selected.target_option)),
      el("div", { class: "stat-row" }, el("span", { class: "stat-label" }, "citations"),
        el("span", { class: "mono" }, selected.cited_evidence.join(", ") || "none")),
    );
  } else {
    detail.append(el("div", { class: "empty" }, "select a node"));
  }

  const legend = el(
    "div",
    { class: "legend" },
    el("span", { class: "legend-item legend-support" }, "support (solid)"),
    el("span", { class: "legend-item legend-attack" }, "attack (dashed)"),
    el("span", { class: "muted" }, ` ${graph.arguments.length} arguments, ${graph.relations.length} relations`),
  );

  return el(
    "div",
    { class: "graph-wrap", "data-view": "graph" },
    el("div", { class: "card graph-card" }, legend, svg),
    detail,
  );
}
