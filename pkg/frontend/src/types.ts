/** Wire types mirroring the /v1 documents. The console renders these
 * verbatim; it never derives a number the service did not send. */

export interface CaseDoc {
  format_version: number;
  case_id: string;
  age: number;
  conditions: string[];
  medications: string[];
  adl_impairments: number;
  iadl_impairments: number;
  falls_90d: number;
  hospitalizations_90d: number;
  flags: string[];
  narrative: string;
  assessment_source: string;
}

export interface OptionDoc {
  option_id: string;
  title: string;
  description: string;
  category: string;
}

export interface ArgumentDoc {
  arg_id: string;
  content: string;
  stance: "support" | "challenge";
  role: string;
  target_option: string;
  cited_evidence: string[];
  tau: number;
  tau_pinned: boolean;
  status: string;
}

export interface RelationDoc {
  source: string;
  target: string;
  polarity: "support" | "attack";
  weight: number;
}

export interface GraphDoc {
  format_version: number;
  options: OptionDoc[];
  arguments: ArgumentDoc[];
  relations: RelationDoc[];
}

export interface DegreesDoc {
  format_version: number;
  degrees: Record<string, number>;
  option_scores: Record<string, number>;
  iterations_used: number;
  residual: number;
  graph_fingerprint?: string;
}

export interface SessionRecord {
  format_version: number;
  session_id: string;
  case_id: string;
  phase: "contesting" | "approved" | "planned";
  created_at: string;
  complexity: { level: string; raw_score: number } | null;
  roster: { roles: string[]; triggers: Record<string, string> } | null;
  configs: Record<string, unknown>;
}

export interface SummaryDoc {
  session: SessionRecord;
  degrees_stale: boolean;
  degrees: DegreesDoc | null;
  pending_count: number;
  audit_length: number;
}

export interface SessionRow {
  session_id: string;
  case_id: string;
  phase: string;
}

export interface AuditEntryDoc {
  seq: number;
  timestamp: string;
  actor: string;
  kind: string;
  target?: string;
  payload: Record<string, unknown>;
  pre_hash: string;
  post_hash: string;
  entry_hash: string;
}

export interface ParticipationRow {
  support_count: number;
  challenge_count: number;
}

export interface PlanEntryDoc {
  option: OptionDoc;
  score: number;
  tier: string;
  assigned_role: string;
  supporting_citations: string[];
  challenging_citations: string[];
  evidence_citations: string[];
  mitigation_notes: string[];
}

export interface TaskDoc {
  task_id: string;
  option_id: string;
  provider_role: string;
  earliest_date: string;
  duration_minutes: number;
  status: string;
  booked_date: string | null;
  booked_start: string | null;
}

export interface PlanDoc {
  format_version: number;
  plan_id: string;
  case_id: string;
  source_session: string;
  generated_at: string;
  entries: PlanEntryDoc[];
  tasks: TaskDoc[];
}

export interface EditActionDoc {
  actor: string;
  kind: string;
  target?: string;
  payload: Record<string, unknown>;
}

export const HUMAN_ROLES = ["human_reviewer", "human_care_planner"] as const;
export type HumanRole = (typeof HUMAN_ROLES)[number];

export const PROVIDER_ROLES = [
  "registered_nurse",
  "pharmacist",
  "general_practitioner",
  "nutritionist",
  "physical_therapist",
  "occupational_therapist",
  "psychiatrist",
  "social_worker",
  "home_health_aide",
  "care_coordinator",
] as const;

export const TIER_ORDER = [
  "recommended_high",
  "recommended",
  "conditional",
  "not_recommended",
] as const;
