/** Debate screen: per-option argument columns with tau and degree badges,
 * expandable evidence citations, and the participation summary chart. */

import type { SessionStore } from "../store.js";
import type { ArgumentDoc } from "../types.js";
import { el, fmt, scoreBadge } from "../ui.js";

function argCard(store: SessionStore, arg: ArgumentDoc): HTMLElement {
  const degrees = store.summary?.degrees;
  const f = degrees === null || degrees === undefined ? null : degrees.degrees[arg.arg_id] ?? null;
  const badges = el(
    "span",
    { class: "badges" },
    scoreBadge("τ", arg.tau, arg.tau_pinned ? "pinned" : ""),
    store.summary?.degrees_stale
      ? el("span", { class: "badge stale" }, "f=stale")
      : scoreBadge("f", f, "degree"),
  );
  const citations =
    arg.cited_evidence.length > 0
      ? el(
          "details",
          { class: "citations" },
          el("summary", {}, `${arg.cited_evidence.length} citation(s)`),
          el("ul", {}, ...arg.cited_evidence.map((d) => el("li", { class: "mono" }, d))),
        )
      : null;
  return el(
    "article",
    { class: `arg arg-${arg.stance}`, "data-arg-id": arg.arg_id },
    el(
      "header",
      {},
      el("span", { class: "mono muted" }, arg.role),
      badges,
      el("span", { class: `status status-${arg.status}` }, arg.status),
    ),
    el("p", {}, arg.content),
    citations,
  );
}

function participationChart(store: SessionStore): HTMLElement {
  const rows = Object.entries(store.participation ?? {});
  const max = Math.max(1, ...rows.map(([, c]) => Math.max(c.support_count, c.challenge_count)));
  const chart = el("div", { class: "chart", "data-role": "participation" });
  for (const [role, counts] of rows) {
    // bar widths are presentation only; the counts shown are the data
    const supportPct = (counts.support_count / max) * 100;
    const challengePct = (counts.challenge_count / max) * 100;
    chart.append(
      el(
        "div",
        { class: "chart-row", "data-chart-role": role },
        el("span", { class: "chart-label" }, role),
        el(
          "span",
          { class: "chart-bars" },
          el("span", { class: "bar bar-support", style: `width:${supportPct}%` }),
          el("span", { class: "bar bar-challenge", style: `width:${challengePct}%` }),
        ),
        el("span", { class: "chart-counts mono" },
          `${counts.support_count} / ${counts.challenge_count}`),
      ),
    );
  }
  return chart;
}

export function renderDebateView(store: SessionStore): HTMLElement {
  const root = el("div", { "data-view": "debate" });
  const graph = store.graph;
  if (!graph) return el("div", { class: "empty" }, "no session loaded");

  const scores = store.summary?.degrees?.option_scores ?? null;
  const byOption = new Map<string, ArgumentDoc[]>();
  for (const arg of graph.arguments) {
    const list = byOption.get(arg.target_option) ?? [];
    list.push(arg);
    byOption.set(arg.target_option, list);
  }

  for (const option of graph.options) {
    const args = byOption.get(option.option_id) ?? [];
    const byRole = (stance: string) =>
      args.filter((a) => a.stance === stance).sort((a, b) => a.role.localeCompare(b.role));
    const score = scores === null ? null : scores[option.option_id] ?? null;
    root.append(
      el(
        "section",
        { class: "card option", "data-option-id": option.option_id },
        el(
          "header",
          { class: "option-head" },
          el("h2", {}, option.title),
          store.summary?.degrees_stale
            ? el("span", { class: "badge stale", "data-role": "option-score" }, "score stale")
            : el(
                "span",
                { class: "badge score", "data-role": "option-score" },
                fmt(score),
              ),
          el("span", { class: "muted" }, option.category),
        ),
        el("p", { class: "muted" }, option.description),
        el(
          "div",
          { class: "columns" },
          el("div", { class: "col" }, el("h3", {}, "support"), ...byRole("support").map((a) => argCard(store, a))),
          el("div", { class: "col" }, el("h3", {}, "challenge"), ...byRole("challenge").map((a) => argCard(store, a))),
        ),
      ),
    );
  }

  root.append(
    el("section", { class: "card" }, el("h2", {}, "Participation"), participationChart(store)),
  );
  return root;
}
