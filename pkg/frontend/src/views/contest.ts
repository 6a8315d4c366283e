/** Contest screen: the Phase-3 edit surface. Every action posts one edit
 * through the store; with auto-revalidate on, the service re-solves right
 * after and the score diff shows exactly what moved. */

import type { SessionStore } from "../store.js";
import type { ArgumentDoc } from "../types.js";
import { PROVIDER_ROLES } from "../types.js";
import { arrow, arrowClass, el, fmt } from "../ui.js";

type Act = (fn: () => Promise<unknown>) => void;

function diffTable(title: string, rows: { id: string; before: number | null; after: number | null }[],
  kind: string): HTMLElement {
  const section = el("div", { class: "diff-section", "data-diff": kind });
  section.append(el("h3", {}, title));
  if (rows.length === 0) {
    section.append(el("div", { class: "empty", "data-diff-empty": kind }, "no changes"));
    return section;
  }
  const body = el("tbody", {});
  for (const row of rows) {
    body.append(
      el(
        "tr",
        { class: arrowClass(row.before, row.after), "data-diff-id": row.id },
        el("td", { class: "mono" }, row.id),
        el("td", { class: "mono" }, fmt(row.before)),
        el("td", { class: "mono" }, fmt(row.after)),
        el("td", { class: "diff-arrow" }, arrow(row.before, row.after)),
      ),
    );
  }
  section.append(
    el(
      "table",
      {},
      el("thead", {}, el("tr", {}, el("th", {}, "id"), el("th", {}, "before"),
        el("th", {}, "after"), el("th", {}, ""))),
      body,
    ),
  );
  return section;
}

function argRow(store: SessionStore, arg: ArgumentDoc, act: Act): HTMLElement {
  const modifyArea = el("textarea", { rows: "3" }) as HTMLTextAreaElement;
  modifyArea.value = arg.content;
  const pinInput = el("input", {
    type: "number", step: "0.05", min: "0", max: "1", value: String(arg.tau),
  }) as HTMLInputElement;

  return el(
    "article",
    { class: `arg arg-${arg.stance}`, "data-contest-arg": arg.arg_id },
    el(
      "header",
      {},
      el("span", { class: "mono" }, arg.arg_id),
      el("span", { class: `status status-${arg.status}` }, arg.status),
      el("span", { class: "badge" }, `τ=${fmt(arg.tau)}${arg.tau_pinned ? " pinned" : ""}`),
    ),
    el("p", {}, arg.content),
    el(
      "div",
      { class: "actions" },
      el("button", {
        "data-action": "accept",
        onclick: () => act(() => store.applyEdit({ kind: "accept", target: arg.arg_id, payload: {} })),
      }, "accept"),
      el("button", {
        "data-action": "reject",
        class: "danger",
        onclick: () => act(() => store.applyEdit({ kind: "reject", target: arg.arg_id, payload: {} })),
      }, "reject"),
      el(
        "details",
        { class: "inline-form" },
        el("summary", {}, "modify"),
        modifyArea,
        el("button", {
          "data-action": "modify",
          onclick: () =>
            act(() =>
              store.applyEdit({
                kind: "modify",
                target: arg.arg_id,
                payload: { content: modifyArea.value },
              }),
            ),
        }, "save content"),
      ),
      el(
        "details",
        { class: "inline-form" },
        el("summary", {}, "pin τ"),
        pinInput,
        el("button", {
          "data-action": "pin-tau",
          onclick: () =>
            act(() =>
              store.applyEdit({
                kind: "pin_tau",
                target: arg.arg_id,
                payload: { tau: Number(pinInput.value) },
              }),
            ),
        }, "pin"),
      ),
    ),
  );
}

function addArgumentForm(store: SessionStore, act: Act): HTMLElement {
  const graph = store.graph!;
  const optionSel = el("select", { "data-field": "option" }) as HTMLSelectElement;
  for (const o of graph.options) optionSel.append(el("option", { value: o.option_id }, o.option_id));
  const stanceSel = el("select", { "data-field": "stance" }) as HTMLSelectElement;
  stanceSel.append(el("option", { value: "support" }, "support"));
  stanceSel.append(el("option", { value: "challenge" }, "challenge"));
  const roleSel = el("select", { "data-field": "role" }) as HTMLSelectElement;
  for (const r of PROVIDER_ROLES) roleSel.append(el("option", { value: r }, r));
  const content = el("textarea", { rows: "3", "data-field": "content" }) as HTMLTextAreaElement;
  const cited = el("input", {
    type: "text", placeholder: "doc ids, comma separated", "data-field": "cited",
  }) as HTMLInputElement;

  return el(
    "details",
    { class: "card inline-form", "data-form": "add-argument" },
    el("summary", {}, "Add argument"),
    el("label", {}, "option ", optionSel),
    el("label", {}, "stance ", stanceSel),
    el("label", {}, "argued as ", roleSel),
    el("label", {}, "content ", content),
    el("label", {}, "citations ", cited),
    el("button", {
      "data-action": "add-argument",
      onclick: () =>
        act(() =>
          store.applyEdit({
            kind: "add",
            payload: {
              argument: {
                content: content.value,
                stance: stanceSel.value,
                role: roleSel.value,
                target_option: optionSel.value,
                cited_evidence: cited.value
                  .split(",")
                  .map((s) => s.trim())
                  .filter((s) => s.length > 0),
              },
            },
          }),
        ),
    }, "add"),
  );
}

function addRelationForm(store: SessionStore, act: Act): HTMLElement {
  const graph = store.graph!;
  const ids = graph.arguments.map((a) => a.arg_id).sort();
  const sourceSel = el("select", { "data-field": "source" }) as HTMLSelectElement;
  const targetSel = el("select", { "data-field": "target" }) as HTMLSelectElement;
  for (const id of ids) {
    sourceSel.append(el("option", { value: id }, id));
    targetSel.append(el("option", { value: id }, id));
  }
  const polaritySel = el("select", { "data-field": "polarity" }) as HTMLSelectElement;
  polaritySel.append(el("option", { value: "support" }, "support"));
  polaritySel.append(el("option", { value: "attack" }, "attack"));
  const weight = el("input", {
    type: "number", step: "0.05", min: "0", value: "0.5", "data-field": "weight",
  }) as HTMLInputElement;

  return el(
    "details",
    { class: "card inline-form", "data-form": "add-relation" },
    el("summary", {}, "Add relation"),
    el("label", {}, "source ", sourceSel),
    el("label", {}, "target ", targetSel),
    el("label", {}, "polarity ", polaritySel),
    el("label", {}, "weight ", weight),
    el("button", {
      "data-action": "add-relation",
      onclick: () =>
        act(() =>
          store.applyEdit({
            kind: "add_relation",
            payload: {
              relation: {
                source: sourceSel.value,
                target: targetSel.value,
                polarity: polaritySel.value,
                weight: Number(weight.value),
              },
            },
          }),
        ),
    }, "link"),
  );
}

export function renderContestView(store: SessionStore, act: Act): HTMLElement {
  const root = el("div", { "data-view": "contest" });
  const graph = store.graph;
  if (!graph || !store.summary) return el("div", { class: "empty" }, "no session loaded");

  if (store.frozen) {
    root.append(
      el("div", { class: "banner frozen", "data-role": "frozen-banner" },
        `session is ${store.phase}; the graph is frozen and editing is closed`),
    );
  }

  const toggle = el("input", { type: "checkbox", "data-role": "auto-revalidate" }) as HTMLInputElement;
  toggle.checked = store.autoRevalidate;
  toggle.addEventListener("change", () => {
    store.autoRevalidate = toggle.checked;
  });

  const controls = el(
    "div",
    { class: "card controls" },
    el("label", { class: "toggle" }, toggle, " revalidate after every edit"),
    el("button", {
      "data-action": "revalidate",
      onclick: () => act(() => store.revalidateNow()),
      disabled: store.frozen,
    }, "revalidate now"),
    el(
      "span",
      { class: "muted", "data-role": "staleness" },
      store.summary.degrees_stale
        ? "degrees are stale; revalidate to refresh"
        : "degrees are fresh",
    ),
  );
  root.append(controls);

  const diff = store.lastDiff;
  const diffCard = el("section", { class: "card", "data-role": "score-diff" },
    el("h2", {}, "Score diff (last revalidation)"));
  if (diff === null) {
    diffCard.append(el("div", { class: "empty" }, "no revalidation recorded yet"));
  } else {
    diffCard.append(
      diffTable("Option scores", diff.optionScores, "option-scores"),
      diffTable("Degrees", diff.degrees, "degrees"),
    );
  }
  root.append(diffCard);

  if (!store.frozen) {
    root.append(addArgumentForm(store, act), addRelationForm(store, act));
    const byOption = el("div", {});
    for (const option of graph.options) {
      const args = graph.arguments
        .filter((a) => a.target_option === option.option_id)
        .sort((a, b) => a.arg_id.localeCompare(b.arg_id));
      byOption.append(
        el(
          "section",
          { class: "card option", "data-contest-option": option.option_id },
          el("h2", {}, option.title),
          ...args.map((a) => argRow(store, a, act)),
        ),
      );
    }
    root.append(byOption);
  }

  return root;
}
