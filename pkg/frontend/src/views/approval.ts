/** Approval screen: the gate between contestation and planning. */

import type { SessionStore } from "../store.js";
import { el } from "../ui.js";

type Act = (fn: () => Promise<unknown>) => void;

export function renderApprovalView(store: SessionStore, act: Act, rerender: () => void): HTMLElement {
  const root = el("div", { "data-view": "approval" });
  const summary = store.summary;
  if (!summary) return el("div", { class: "empty" }, "no session loaded");

  if (store.frozen) {
    root.append(
      el(
        "div",
        { class: "banner frozen", "data-role": "frozen-banner" },
        `phase is ${store.phase}: the session is approved and frozen`,
      ),
      el("div", { class: "card" },
        el("p", {}, "No further edits are accepted. Continue to the plan screen."),
      ),
    );
    return root;
  }

  const pending = summary.pending_count;
  root.append(
    el(
      "section",
      { class: "card" },
      el("h2", {}, "Approval gate"),
      el(
        "p",
        {},
        "Pending arguments: ",
        el("strong", { "data-role": "pending-count" }, String(pending)),
      ),
      el(
        "p",
        { class: "muted" },
        pending > 0
          ? "every argument must be accepted, rejected, or modified before approval; " +
            "force approval bulk-accepts the remainder under your name"
          : "nothing is pending; the session can be approved",
      ),
      summary.degrees_stale
        ? el("p", { class: "warn", "data-role": "stale-note" },
            "degrees are stale; approval will revalidate first")
        : el("span", {}),
    ),
  );

  const approveBtn = el("button", {
    "data-action": "approve",
    onclick: () => act(() => store.approve(false)),
  }, "approve");

  const confirmBox = el("div", { class: "confirm hidden", "data-role": "force-confirm" },
    el("p", {}, `Force approval will bulk-accept ${pending} pending argument(s). Proceed?`),
    el("button", {
      class: "danger",
      "data-action": "force-approve-confirm",
      onclick: () => act(() => store.approve(true)),
    }, "yes, force approve"),
    el("button", {
      "data-action": "force-approve-cancel",
      onclick: () => {
        confirmBox.classList.add("hidden");
        rerender();
      },
    }, "cancel"),
  );

  const forceBtn = el("button", {
    class: "danger",
    "data-action": "force-approve",
    onclick: () => confirmBox.classList.remove("hidden"),
  }, "force approve…");

  root.append(el("section", { class: "card actions" }, approveBtn, forceBtn, confirmBox));
  return root;
}
