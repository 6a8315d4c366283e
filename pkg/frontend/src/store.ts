/** Client-side session state: a snapshot of what the service said, plus
 * the score diff between the last two degree documents it sent.
 *
 * Hard rule: no semantics are computed here. Degrees, scores, tiers, and
 * staleness all come from the service; the only "math" in this file is
 * strict inequality between numbers the service produced.
 */

import { ApiError, Client } from "./api.js";
import type {
  CaseDoc,
  DegreesDoc,
  EditActionDoc,
  GraphDoc,
  HumanRole,
  ParticipationRow,
  PlanDoc,
  SummaryDoc,
} from "./types.js";

export interface DiffRow {
  id: string;
  before: number | null;
  after: number | null;
}

export interface ScoreDiff {
  degrees: DiffRow[];
  optionScores: DiffRow[];
}

/** Exactly the ids whose value changed between the two documents,
 * including ids present on only one side. Strict !== on the numbers as
 * sent; no tolerance, no rounding. */
export function computeDiff(before: DegreesDoc | null, after: DegreesDoc | null): ScoreDiff {
  const diffMap = (
    a: Record<string, number> | undefined,
    b: Record<string, number> | undefined,
  ): DiffRow[] => {
    const ids = new Set([...Object.keys(a ?? {}), ...Object.keys(b ?? {})]);
    const rows: DiffRow[] = [];
    for (const id of [...ids].sort()) {
      const va = a && id in a ? a[id] : null;
      const vb = b && id in b ? b[id] : null;
      if (va !== vb) rows.push({ id, before: va, after: vb });
    }
    return rows;
  };
  return {
    degrees: diffMap(before?.degrees, after?.degrees),
    optionScores: diffMap(before?.option_scores, after?.option_scores),
  };
}

export class SessionStore {
  readonly client: Client;
  sessionId = "";
  actor: HumanRole = "human_reviewer";

  summary: SummaryDoc | null = null;
  graph: GraphDoc | null = null;
  caseDoc: CaseDoc | null = null;
  participation: Record<string, ParticipationRow> | null = null;
  plan: PlanDoc | null = null;

  lastDiff: ScoreDiff | null = null;
  lastError: ApiError | null = null;
  residualWarning: string | null = null;
  driftDetected = false;
  autoRevalidate = true;
  selectedArg: string | null = null;

  constructor(client: Client) {
    this.client = client;
  }

  get phase(): string {
    return this.summary?.session.phase ?? "";
  }

  get frozen(): boolean {
    return this.phase !== "" && this.phase !== "contesting";
  }

  async enter(sessionId: string, actor: HumanRole): Promise<void> {
    this.sessionId = sessionId;
    this.actor = actor;
    this.lastDiff = null;
    this.lastError = null;
    this.residualWarning = null;
    this.driftDetected = false;
    await this.reload();
  }

  async reload(): Promise<void> {
    this.summary = await this.client.summary(this.sessionId);
    this.graph = await this.client.graph(this.sessionId);
    this.participation = await this.client.participation(this.sessionId);
    this.caseDoc = await this.client.getCase(this.summary.session.case_id);
    this.plan =
      this.summary.session.phase === "planned"
        ? await this.client.getPlan(this.sessionId)
        : null;
    this.driftDetected = false;
  }

  /** Runs a service call, keeping the last error (and any residual
   * warning) for the banners. Returns true when the call succeeded. */
  private async guarded(fn: () => Promise<void>): Promise<boolean> {
    try {
      await fn();
      this.lastError = null;
      return true;
    } catch (err) {
      if (err instanceof ApiError) {
        this.lastError = err;
        if (err.code === "non_convergence") {
          const residual = err.detail["residual"];
          this.residualWarning = `solver did not converge (residual ${String(residual)}); degrees are not trustworthy until a successful revalidate`;
        }
        return false;
      }
      throw err;
    }
  }

  async applyEdit(action: Omit<EditActionDoc, "actor">): Promise<boolean> {
    const before = this.summary?.degrees ?? null;
    return this.guarded(async () => {
      let summary = await this.client.postEdit(this.sessionId, {
        ...action,
        actor: this.actor,
      });
      if (this.autoRevalidate && summary.degrees_stale) {
        summary = await this.client.revalidate(this.sessionId, this.actor);
      }
      this.summary = summary;
      if (summary.degrees !== null) {
        this.lastDiff = computeDiff(before, summary.degrees);
        this.residualWarning = null;
      }
      this.graph = await this.client.graph(this.sessionId);
      this.participation = await this.client.participation(this.sessionId);
    });
  }

  async revalidateNow(): Promise<boolean> {
    const before = this.summary?.degrees ?? null;
    return this.guarded(async () => {
      const summary = await this.client.revalidate(this.sessionId, this.actor);
      this.summary = summary;
      this.lastDiff = computeDiff(before, summary.degrees);
      this.residualWarning = null;
    });
  }

  async approve(force: boolean): Promise<boolean> {
    return this.guarded(async () => {
      this.summary = await this.client.approve(this.sessionId, this.actor, force);
      this.graph = await this.client.graph(this.sessionId);
    });
  }

  async createPlan(): Promise<boolean> {
    return this.guarded(async () => {
      this.plan = await this.client.createPlan(this.sessionId, this.actor);
      this.summary = await this.client.summary(this.sessionId);
    });
  }

  /** Poll hook: compares the service's audit length with the local one
   * and raises the drift flag when someone else moved the session. */
  async checkDrift(): Promise<boolean> {
    if (!this.sessionId || this.summary === null) return false;
    const remote = await this.client.summary(this.sessionId);
    if (remote.audit_length !== this.summary.audit_length) {
      this.driftDetected = true;
    }
    return this.driftDetected;
  }
}
