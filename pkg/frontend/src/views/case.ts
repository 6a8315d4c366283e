/** Case & team screen: who the patient is, how complex the case scored,
 * and which roles were recruited with the rule that pulled each one in. */

import type { SessionStore } from "../store.js";
import { el } from "../ui.js";

function statRow(label: string, value: string): HTMLElement {
  return el(
    "div",
    { class: "stat-row" },
    el("span", { class: "stat-label" }, label),
    el("span", { class: "stat-value" }, value),
  );
}

export function renderCaseView(store: SessionStore): HTMLElement {
  const root = el("div", { class: "grid", "data-view": "case" });
  const caseDoc = store.caseDoc;
  const record = store.summary?.session;
  if (!caseDoc || !record) return el("div", { class: "empty" }, "no session loaded");

  const patient = el(
    "section",
    { class: "card", "data-card": "patient" },
    el("h2", {}, "Patient case"),
    statRow("case id", caseDoc.case_id),
    statRow("age", String(caseDoc.age)),
    statRow("conditions", caseDoc.conditions.join(", ") || "none"),
    statRow("medications", `${caseDoc.medications.length} active`),
    statRow("ADL / IADL impairments", `${caseDoc.adl_impairments} / ${caseDoc.iadl_impairments}`),
    statRow("falls, last 90 days", String(caseDoc.falls_90d)),
    statRow("hospitalizations, last 90 days", String(caseDoc.hospitalizations_90d)),
    statRow("flags", caseDoc.flags.join(", ") || "none"),
    statRow("assessment source", caseDoc.assessment_source),
    el("p", { class: "narrative" }, caseDoc.narrative),
  );

  const complexity = record.complexity;
  const complexityCard = el(
    "section",
    { class: "card", "data-card": "complexity" },
    el("h2", {}, "Complexity"),
    complexity
      ? el(
          "div",
          {},
          el("span", { class: `badge level-${complexity.level}`, "data-role": "complexity-level" },
            complexity.level),
          el("span", { class: "muted" }, ` rubric score ${complexity.raw_score}`),
        )
      : el("div", { class: "empty" }, "not assessed"),
  );

  const roster = record.roster;
  const rosterRows = (roster?.roles ?? []).map((role) =>
    el(
      "tr",
      { "data-roster-role": role },
      el("td", {}, role),
      el("td", { class: "muted" }, roster?.triggers[role] ?? ""),
    ),
  );
  const rosterCard = el(
    "section",
    { class: "card", "data-card": "roster" },
    el("h2", {}, "Recruited team"),
    el(
      "table",
      {},
      el("thead", {}, el("tr", {}, el("th", {}, "role"), el("th", {}, "recruited by"))),
      el("tbody", {}, ...rosterRows),
    ),
  );

  root.append(patient, complexityCard, rosterCard);
  return root;
}
