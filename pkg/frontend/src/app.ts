/** Application shell: screen routing, banners, and the drift poller.
 * All state lives in the SessionStore; this file only renders it. */

import { ApiError, Client } from "./api.js";
import { SessionStore } from "./store.js";
import type { HumanRole, SessionRow } from "./types.js";
import { HUMAN_ROLES } from "./types.js";
import { el } from "./ui.js";
import { renderApprovalView } from "./views/approval.js";
import { renderCaseView } from "./views/case.js";
import { renderContestView } from "./views/contest.js";
import { renderDebateView } from "./views/debate.js";
import { renderGraphView } from "./views/graph.js";
import { renderPlanView } from "./views/plan.js";

export type ViewName = "case" | "debate" | "graph" | "contest" | "approval" | "plan";
const VIEWS: ViewName[] = ["case", "debate", "graph", "contest", "approval", "plan"];

export interface AppOptions {
  baseUrl?: string;
  /** Audit-drift poll interval; 0 disables the timer. */
  pollMs?: number;
}

export interface App {
  store: SessionStore;
  currentView: ViewName;
  navigate(view: ViewName): void;
  enterSession(sessionId: string, actor: HumanRole): Promise<void>;
  leaveSession(): void;
  refresh(): Promise<void>;
  render(): void;
  /** Awaits every queued user action; test hook. */
  settle(): Promise<void>;
  dispose(): void;
}

export function createApp(root: HTMLElement, opts: AppOptions = {}): App {
  const client = new Client(opts.baseUrl ?? "");
  const store = new SessionStore(client);
  let sessions: SessionRow[] = [];
  let fatalError: string | null = null;
  let pending: Promise<unknown> = Promise.resolve();

  const app: App = {
    store,
    currentView: "case",
    navigate(view: ViewName) {
      app.currentView = view;
      render();
    },
    async enterSession(sessionId: string, actor: HumanRole) {
      await store.enter(sessionId, actor);
      app.currentView = "case";
      render();
    },
    leaveSession() {
      store.sessionId = "";
      store.summary = null;
      store.plan = null;
      render();
    },
    async refresh() {
      if (store.sessionId) {
        await store.reload();
      } else {
        sessions = await client.listSessions();
      }
      render();
    },
    async settle() {
      await pending;
    },
    dispose() {
      if (timer !== null) clearInterval(timer);
    },
    render,
  };

  /** Queues a user action; actions run in click order and each one
   * re-renders when it finishes. */
  const act = (fn: () => Promise<unknown>): void => {
    pending = pending
      .then(() => fn())
      .catch((err: unknown) => {
        if (err instanceof ApiError) {
          store.lastError = err;
        } else {
          fatalError = err instanceof Error ? err.message : String(err);
        }
      })
      .then(() => render());
  };

  const timer =
    (opts.pollMs ?? 5000) > 0
      ? setInterval(() => {
          if (store.sessionId && store.summary) {
            void store.checkDrift().then((drifted) => {
              if (drifted) render();
            });
          }
        }, opts.pollMs ?? 5000)
      : null;

  function banners(): HTMLElement {
    const box = el("div", { class: "banners" });
    if (fatalError !== null) {
      box.append(el("div", { class: "banner error", "data-role": "fatal-banner" }, fatalError));
    }
    if (store.lastError !== null) {
      const err = store.lastError;
      box.append(
        el(
          "div",
          { class: "banner error", "data-role": "error-banner" },
          el("strong", { "data-role": "error-code" }, err.code),
          " ",
          el("span", { "data-role": "error-message" }, err.message),
          el("button", {
            "data-action": "dismiss-error",
            onclick: () => {
              store.lastError = null;
              render();
            },
          }, "dismiss"),
        ),
      );
    }
    if (store.residualWarning !== null) {
      box.append(
        el("div", { class: "banner warn", "data-role": "residual-banner" }, store.residualWarning),
      );
    }
    if (store.driftDetected) {
      box.append(
        el(
          "div",
          { class: "banner warn", "data-role": "drift-banner" },
          "this session changed on the server since it was loaded; refresh before editing",
          el("button", {
            "data-action": "drift-refresh",
            onclick: () => act(() => app.refresh()),
          }, "refresh"),
        ),
      );
    }
    return box;
  }

  function entryScreen(): HTMLElement {
    const actorSel = el("select", { "data-role": "actor-picker" }) as HTMLSelectElement;
    for (const role of HUMAN_ROLES) actorSel.append(el("option", { value: role }, role));
    const list = el("div", { class: "session-list" });
    if (sessions.length === 0) {
      list.append(el("div", { class: "empty" }, "no sessions on the server; run a case first"));
    }
    for (const row of sessions) {
      list.append(
        el(
          "div",
          { class: "session-row", "data-session-row": row.session_id },
          el("span", { class: "mono" }, row.session_id),
          el("span", { class: "muted" }, row.case_id),
          el("span", { class: `phase phase-${row.phase}` }, row.phase),
          el("button", {
            "data-action": "enter-session",
            onclick: () =>
              act(() => app.enterSession(row.session_id, actorSel.value as HumanRole)),
          }, "open"),
        ),
      );
    }
    return el(
      "div",
      { "data-view": "entry" },
      el("h1", {}, "canoe console"),
      el("section", { class: "card" },
        el("label", {}, "acting as ", actorSel),
        el("button", { "data-action": "reload-sessions", onclick: () => act(() => app.refresh()) },
          "reload"),
        list),
    );
  }

  function sessionScreen(): HTMLElement {
    const summary = store.summary!;
    const nav = el("nav", { class: "tabs" });
    for (const view of VIEWS) {
      nav.append(
        el("button", {
          class: view === app.currentView ? "tab active" : "tab",
          "data-nav": view,
          onclick: () => app.navigate(view),
        }, view),
      );
    }
    const header = el(
      "header",
      { class: "session-header" },
      el("span", { class: "mono", "data-role": "session-id" }, store.sessionId),
      el("span", { class: `phase phase-${store.phase}`, "data-role": "phase" }, store.phase),
      el("span", { class: "muted", "data-role": "acting-as" }, `acting as ${store.actor}`),
      el("span", { class: "muted", "data-role": "audit-length" },
        `audit ${summary.audit_length}`),
      el("button", { "data-action": "leave-session", onclick: () => app.leaveSession() }, "sessions"),
    );

    let body: HTMLElement;
    switch (app.currentView) {
      case "case":
        body = renderCaseView(store);
        break;
      case "debate":
        body = renderDebateView(store);
        break;
      case "graph":
        body = renderGraphView(store, render);
        break;
      case "contest":
        body = renderContestView(store, act);
        break;
      case "approval":
        body = renderApprovalView(store, act, render);
        break;
      case "plan":
        body = renderPlanView(store, act);
        break;
    }
    return el("div", { class: "session-screen" }, header, nav, body);
  }

  function render(): void {
    root.replaceChildren(banners(), store.sessionId && store.summary ? sessionScreen() : entryScreen());
  }

  render();
  return app;
}
