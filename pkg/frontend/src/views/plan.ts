/** Plan screen: tiered entries and scheduled tasks, rendered in the order
 * the service emitted them (highest tier first). */

import type { SessionStore } from "../store.js";
import { el, scoreBadge } from "../ui.js";

type Act = (fn: () => Promise<unknown>) => void;

function citationList(label: string, ids: string[]): HTMLElement {
  if (ids.length === 0) return el("span", {});
  return el(
    "details",
    { class: "citations" },
    el("summary", {}, `${label} (${ids.length})`),
    el("ul", {}, ...ids.map((id) => el("li", { class: "mono" }, id))),
  );
}

export function renderPlanView(store: SessionStore, act: Act): HTMLElement {
  const root = el("div", { "data-view": "plan" });
  const plan = store.plan;

  if (!plan) {
    root.append(
      el(
        "section",
        { class: "card" },
        el("h2", {}, "Care plan"),
        el("p", { class: "muted" }, "no plan generated for this session yet"),
        store.phase === "approved"
          ? el("button", {
              "data-action": "create-plan",
              onclick: () => act(() => store.createPlan()),
            }, "generate plan")
          : el("p", { class: "muted" }, "the session must be approved before planning"),
      ),
    );
    return root;
  }

  const entries = el("section", { class: "card" }, el("h2", {}, `Plan ${plan.plan_id}`));
  for (const entry of plan.entries) {
    entries.append(
      el(
        "article",
        { class: "plan-entry", "data-plan-option": entry.option.option_id },
        el(
          "header",
          {},
          el("span", { class: `tier tier-${entry.tier}`, "data-role": "tier" }, entry.tier),
          el("strong", {}, entry.option.title),
          scoreBadge("score", entry.score, "score"),
          el("span", { class: "muted", "data-role": "assigned-role" }, entry.assigned_role),
        ),
        el("p", { class: "muted" }, entry.option.description),
        entry.mitigation_notes.length > 0
          ? el("ul", { class: "mitigations" },
              ...entry.mitigation_notes.map((n) => el("li", {}, n)))
          : el("span", {}),
        citationList("supporting", entry.supporting_citations),
        citationList("challenging", entry.challenging_citations),
        citationList("evidence", entry.evidence_citations),
      ),
    );
  }
  root.append(entries);

  const body = el("tbody", {});
  for (const task of plan.tasks) {
    body.append(
      el(
        "tr",
        { class: `task-${task.status}`, "data-task": task.task_id },
        el("td", { class: "mono" }, task.task_id),
        el("td", {}, task.option_id),
        el("td", {}, task.provider_role),
        el("td", { class: "mono" }, `${task.duration_minutes} min`),
        el("td", {}, task.status),
        el("td", { class: "mono" }, task.booked_date ? `${task.booked_date} ${task.booked_start ?? ""}` : "—"),
      ),
    );
  }
  root.append(
    el(
      "section",
      { class: "card" },
      el("h2", {}, "Scheduled tasks"),
      plan.tasks.length === 0
        ? el("div", { class: "empty" }, "no bookable entries")
        : el(
            "table",
            { "data-role": "task-table" },
            el("thead", {}, el("tr", {},
              el("th", {}, "task"), el("th", {}, "option"), el("th", {}, "provider"),
              el("th", {}, "duration"), el("th", {}, "status"), el("th", {}, "booked"))),
            body,
          ),
    ),
  );
  return root;
}
