/** Unit tests for the score diff and the error plumbing. The diff is the
 * one invariant the console owns: it must list exactly the ids whose
 * value changed between two degree documents, nothing else. */

import { afterEach, describe, expect, it, vi } from "vitest";
import { ApiError, Client } from "../src/api.js";
import { computeDiff, SessionStore } from "../src/store.js";
import type { DegreesDoc, SummaryDoc } from "../src/types.js";

function degreesDoc(degrees: Record<string, number>, scores: Record<string, number>): DegreesDoc {
  return {
    format_version: 1,
    degrees,
    option_scores: scores,
    iterations_used: 3,
    residual: 0,
    graph_fingerprint: "0".repeat(64),
  };
}

function summaryDoc(overrides: Partial<SummaryDoc>): SummaryDoc {
  return {
    session: {
      format_version: 1,
      session_id: "sess-x",
      case_id: "x",
      phase: "contesting",
      created_at: "2026-08-18T12:00:00Z",
      complexity: { level: "high", raw_score: 9 },
      roster: { roles: [], triggers: {} },
      configs: {},
    },
    degrees_stale: false,
    degrees: null,
    pending_count: 0,
    audit_length: 0,
    ...overrides,
  };
}

function jsonResponse(status: number, doc: unknown): Response {
  return new Response(JSON.stringify(doc), {
    status,
    headers: { "content-type": "application/json" },
  });
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("computeDiff", () => {
  it("is empty when nothing changed", () => {
    const a = degreesDoc({ s1: 0.5, c1: 0.4 }, { opt: 0.55 });
    const b = degreesDoc({ s1: 0.5, c1: 0.4 }, { opt: 0.55 });
    const diff = computeDiff(a, b);
    expect(diff.degrees).toEqual([]);
    expect(diff.optionScores).toEqual([]);
  });

  it("lists exactly the changed ids, sorted, and nothing else", () => {
    const a = degreesDoc({ s1: 0.5, c1: 0.4, c2: 0.3 }, { opt: 0.55, other: 0.5 });
    const b = degreesDoc({ s1: 0.5, c1: 0.45, c2: 0.2 }, { opt: 0.61, other: 0.5 });
    const diff = computeDiff(a, b);
    expect(diff.degrees).toEqual([
      { id: "c1", before: 0.4, after: 0.45 },
      { id: "c2", before: 0.3, after: 0.2 },
    ]);
    expect(diff.optionScores).toEqual([{ id: "opt", before: 0.55, after: 0.61 }]);
  });

  it("reports ids present on only one side as added or removed", () => {
    const a = degreesDoc({ s1: 0.5, gone: 0.4 }, { opt: 0.5 });
    const b = degreesDoc({ s1: 0.5, fresh: 0.7 }, { opt: 0.5 });
    const diff = computeDiff(a, b);
    expect(diff.degrees).toEqual([
      { id: "fresh", before: null, after: 0.7 },
      { id: "gone", before: 0.4, after: null },
    ]);
  });

  it("treats a null before-document as all-new", () => {
    const b = degreesDoc({ s1: 0.5 }, { opt: 0.5 });
    const diff = computeDiff(null, b);
    expect(diff.degrees).toEqual([{ id: "s1", before: null, after: 0.5 }]);
    expect(diff.optionScores).toEqual([{ id: "opt", before: null, after: 0.5 }]);
  });

  it("uses strict inequality, no tolerance", () => {
    const a = degreesDoc({ s1: 0.5 }, {});
    const b = degreesDoc({ s1: 0.5000001 }, {});
    expect(computeDiff(a, b).degrees).toHaveLength(1);
    expect(computeDiff(a, a).degrees).toHaveLength(0);
  });
});

describe("ApiError mapping", () => {
  it("keeps the service's code, message, and detail verbatim", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn(async () =>
        jsonResponse(409, {
          code: "conflict",
          message: "3 arguments still pending",
          detail: { pending: ["a", "b", "c"] },
        }),
      ),
    );
    const client = new Client("http://service");
    const err = await client.approve("sess-x", "human_care_planner", false).catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.code).toBe("conflict");
    expect(err.message).toBe("3 arguments still pending");
    expect(err.detail.pending).toEqual(["a", "b", "c"]);
    expect(err.status).toBe(409);
  });

  it("falls back to the HTTP status for non-JSON error bodies", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn(async () => new Response("boom", { status: 502 })),
    );
    const client = new Client("http://service");
    const err = await client.health().catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.code).toBe("unknown");
    expect(err.status).toBe(502);
  });
});

describe("SessionStore", () => {
  it("raises the residual warning on non_convergence and keeps the error", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn(async () =>
        jsonResponse(500, {
          code: "non_convergence",
          message: "solver did not settle",
          detail: { residual: 0.25, iterations: 200 },
        }),
      ),
    );
    const store = new SessionStore(new Client("http://service"));
    store.sessionId = "sess-x";
    store.summary = summaryDoc({});
    const ok = await store.revalidateNow();
    expect(ok).toBe(false);
    expect(store.lastError?.code).toBe("non_convergence");
    expect(store.residualWarning).toContain("0.25");
  });

  it("auto-revalidates after an edit and diffs old against new degrees", async () => {
    const before = degreesDoc({ s1: 0.5, c1: 0.4 }, { opt: 0.55 });
    const after = degreesDoc({ s1: 0.5 }, { opt: 0.61 });
    const bodies: Record<string, unknown> = {};
    vi.stubGlobal(
      "fetch",
      vi.fn(async (url: string, init?: RequestInit) => {
        if (url.endsWith("/edits")) {
          bodies.edit = JSON.parse(String(init?.body));
          return jsonResponse(200, summaryDoc({ degrees_stale: true, audit_length: 1 }));
        }
        if (url.endsWith("/revalidate")) {
          bodies.revalidate = JSON.parse(String(init?.body));
          return jsonResponse(200, summaryDoc({ degrees: after, audit_length: 2 }));
        }
        if (url.endsWith("/graph")) {
          return jsonResponse(200, { format_version: 1, options: [], arguments: [], relations: [] });
        }
        if (url.endsWith("/participation")) {
          return jsonResponse(200, { participation: {} });
        }
        throw new Error(`unexpected url ${url}`);
      }),
    );
    const store = new SessionStore(new Client("http://service"));
    store.sessionId = "sess-x";
    store.actor = "human_reviewer";
    store.summary = summaryDoc({ degrees: before });

    const ok = await store.applyEdit({ kind: "reject", target: "c1", payload: {} });
    expect(ok).toBe(true);
    expect(bodies.edit).toMatchObject({ kind: "reject", target: "c1", actor: "human_reviewer" });
    expect(bodies.revalidate).toEqual({ actor: "human_reviewer" });
    expect(store.lastDiff).toEqual({
      degrees: [{ id: "c1", before: 0.4, after: null }],
      optionScores: [{ id: "opt", before: 0.55, after: 0.61 }],
    });
  });

  it("leaves degrees stale when auto-revalidate is off", async () => {
    const before = degreesDoc({ s1: 0.5 }, { opt: 0.55 });
    const calls: string[] = [];
    vi.stubGlobal(
      "fetch",
      vi.fn(async (url: string) => {
        calls.push(url);
        if (url.endsWith("/edits")) {
          return jsonResponse(200, summaryDoc({ degrees_stale: true, audit_length: 1 }));
        }
        if (url.endsWith("/graph")) {
          return jsonResponse(200, { format_version: 1, options: [], arguments: [], relations: [] });
        }
        if (url.endsWith("/participation")) {
          return jsonResponse(200, { participation: {} });
        }
        throw new Error(`unexpected url ${url}`);
      }),
    );
    const store = new SessionStore(new Client("http://service"));
    store.sessionId = "sess-x";
    store.summary = summaryDoc({ degrees: before });
    store.autoRevalidate = false;

    await store.applyEdit({ kind: "accept", target: "s1", payload: {} });
    expect(calls.some((u) => u.endsWith("/revalidate"))).toBe(false);
    expect(store.summary?.degrees_stale).toBe(true);
    expect(store.lastDiff).toBeNull();
  });

  it("flags drift when the remote audit length moves", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn(async () => jsonResponse(200, summaryDoc({ audit_length: 7 }))),
    );
    const store = new SessionStore(new Client("http://service"));
    store.sessionId = "sess-x";
    store.summary = summaryDoc({ audit_length: 5 });
    expect(await store.checkDrift()).toBe(true);
    expect(store.driftDetected).toBe(true);
  });
});
