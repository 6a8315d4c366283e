/** Thin fetch client for the /v1 API. Errors keep the service's code,
 * message, and detail verbatim so every screen can surface them as sent. */

import type {
  AuditEntryDoc,
  CaseDoc,
  EditActionDoc,
  GraphDoc,
  ParticipationRow,
  PlanDoc,
  SessionRow,
  SummaryDoc,
} from "./types.js";

export class ApiError extends Error {
  readonly code: string;
  readonly detail: Record<string, unknown>;
  readonly status: number;

  constructor(code: string, message: string, detail: Record<string, unknown>, status: number) {
    super(message);
    this.name = "ApiError";
    this.code = code;
    this.detail = detail;
    this.status = status;
  }
}

async function parseError(res: Response): Promise<ApiError> {
  let code = "unknown";
  let message = `HTTP ${res.status}`;
  let detail: Record<string, unknown> = {};
  try {
    const doc = await res.json();
    if (doc && typeof doc.code === "string") {
      code = doc.code;
      message = String(doc.message ?? message);
      detail = doc.detail ?? {};
    }
  } catch {
    // non-JSON error body; keep the HTTP fallback
  }
  return new ApiError(code, message, detail, res.status);
}

export class Client {
  constructor(readonly baseUrl: string = "") {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const res = await fetch(this.baseUrl + path, {
      method,
      headers: body === undefined ? {} : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!res.ok) throw await parseError(res);
    return (await res.json()) as T;
  }

  health(): Promise<{ service: string; status: string }> {
    return this.request("GET", "/v1/health");
  }

  createCase(doc: CaseDoc): Promise<CaseDoc> {
    return this.request("POST", "/v1/cases", doc);
  }

  runCase(caseId: string): Promise<SummaryDoc> {
    return this.request("POST", `/v1/cases/${caseId}/run`, {});
  }

  async listSessions(): Promise<SessionRow[]> {
    const doc = await this.request<{ sessions: SessionRow[] }>("GET", "/v1/sessions");
    return doc.sessions;
  }

  summary(sessionId: string): Promise<SummaryDoc> {
    return this.request("GET", `/v1/sessions/${sessionId}`);
  }

  graph(sessionId: string): Promise<GraphDoc> {
    return this.request("GET", `/v1/sessions/${sessionId}/graph`);
  }

  async participation(sessionId: string): Promise<Record<string, ParticipationRow>> {
    const doc = await this.request<{ participation: Record<string, ParticipationRow> }>(
      "GET",
      `/v1/sessions/${sessionId}/participation`,
    );
    return doc.participation;
  }

  async audit(sessionId: string): Promise<AuditEntryDoc[]> {
    const doc = await this.request<{ entries: AuditEntryDoc[] }>(
      "GET",
      `/v1/sessions/${sessionId}/audit`,
    );
    return doc.entries;
  }

  postEdit(sessionId: string, action: EditActionDoc): Promise<SummaryDoc> {
    return this.request("POST", `/v1/sessions/${sessionId}/edits`, action);
  }

  revalidate(sessionId: string, actor: string): Promise<SummaryDoc> {
    return this.request("POST", `/v1/sessions/${sessionId}/revalidate`, { actor });
  }

  approve(sessionId: string, actor: string, force: boolean): Promise<SummaryDoc> {
    return this.request("POST", `/v1/sessions/${sessionId}/approve`, { actor, force });
  }

  createPlan(sessionId: string, actor: string): Promise<PlanDoc> {
    return this.request("POST", `/v1/sessions/${sessionId}/plan`, { actor });
  }

  getPlan(sessionId: string): Promise<PlanDoc> {
    return this.request("GET", `/v1/sessions/${sessionId}/plan`);
  }

  getCase(caseId: string): Promise<CaseDoc> {
    return this.request("GET", `/v1/cases/${caseId}`);
  }
}
