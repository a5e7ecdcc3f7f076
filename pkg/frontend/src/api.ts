/**
 * Typed client for the selection service JSON API.
 *
 * Every failure becomes an ApiError carrying the server's problem document
 * `{code, message, details}` plus the HTTP status; network failures use
 * status 0. A 401 additionally triggers the onUnauthorized hook so the app
 * can drop the session and return to the login page.
 */

export interface Problem {
  status: number;
  code: string;
  message: string;
  details?: unknown;
}

export class ApiError extends Error {
  constructor(public problem: Problem) {
    super(problem.message);
    this.name = "ApiError";
  }
}

export interface PeriodInfo {
  year: number;
  kind: string;
  quota: number | null;
  status: string;
  applicants?: number;
}

export interface ApplicantPayload {
  nim: string;
  name: string;
  program: string;
  semester: number;
  period_year: number;
  nilai: number;
  income: number;
  dependents: number;
  kind?: string | null;
}

export interface ApplicantOut extends ApplicantPayload {}

export interface CriterionDoc {
  id: string;
  name: string;
  kind: string;
  weight: number;
  attribute: string;
}

export interface RankedEntry {
  alternative: string;
  score: number;
  rank: number;
}

export interface RunRow {
  nim: string;
  name: string;
  raw: Record<string, number>;
  crisp: number[];
  normalized: number[];
  score: number;
  rank: number;
  recipient: boolean;
}

export interface RecipientRow {
  nim: string;
  name: string;
  score: number;
  rank: number;
}

export interface RunDoc {
  run_id: string | null;
  timestamp: string | null;
  period: { year: number; kind: string } | null;
  criteria: CriterionDoc[];
  weights: number[];
  quota: number | null;
  matrix: { alternatives: string[]; criteria: string[]; rows: number[][] };
  normalized: { alternatives: string[]; criteria: string[]; rows: number[][] };
  scores: number[];
  ranking: { entries: RankedEntry[]; tie_break_applied: boolean[] };
  recipients: RecipientRow[];
  ineligible: { nim: string; criterion: string; reason: string }[];
  rows: RunRow[];
}

export interface RecipientsDoc {
  period: { year: number; kind: string };
  run_id: string;
  recipients: RecipientRow[];
}

export interface WhatIfBody {
  year: number;
  kind?: string | null;
  weights: number[];
  quota?: number | null;
}

const kindQuery = (kind?: string | null): string =>
  kind ? `?kind=${encodeURIComponent(kind)}` : "";

export class ApiClient {
  token: string | null = null;
  onUnauthorized: (() => void) | null = null;

  constructor(public base = "") {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
    auth = false,
    signal?: AbortSignal,
  ): Promise<T> {
    const headers: Record<string, string> = {};
    if (body !== undefined) headers["Content-Type"] = "application/json";
    if (auth && this.token) headers["Authorization"] = `Bearer ${this.token}`;
    let response: Response;
    try {
      response = await fetch(this.base + path, {
        method,
        headers,
        body: body !== undefined ? JSON.stringify(body) : undefined,
        signal,
      });
    } catch (err) {
      if (err instanceof Error && err.name === "AbortError") throw err;
      throw new ApiError({
        status: 0,
        code: "network_error",
        message: "cannot reach the server",
      });
    }
    if (response.status === 204) return undefined as T;
    let doc: any = null;
    try {
      doc = await response.json();
    } catch {
      doc = null;
    }
    if (!response.ok) {
      if (response.status === 401 && this.onUnauthorized) this.onUnauthorized();
      throw new ApiError({
        status: response.status,
        code: doc?.code ?? "error",
        message: doc?.message ?? `HTTP ${response.status}`,
        details: doc?.details,
      });
    }
    return doc as T;
  }

  login(username: string, password: string) {
    return this.request<{ token: string; expires_at: string }>(
      "POST",
      "/api/login",
      { username, password },
    );
  }

  logout() {
    return this.request<void>("POST", "/api/logout", undefined, true);
  }

  listPeriods() {
    return this.request<{ periods: PeriodInfo[] }>("GET", "/api/periods");
  }

  createPeriod(body: { year: number; kind: string; quota?: number | null }) {
    return this.request<PeriodInfo>("POST", "/api/periods", body, true);
  }

  patchPeriod(
    year: number,
    body: { quota?: number | null; status?: string },
    kind?: string | null,
  ) {
    return this.request<PeriodInfo>(
      "PATCH",
      `/api/periods/${year}${kindQuery(kind)}`,
      body,
      true,
    );
  }

  registerApplicant(payload: ApplicantPayload) {
    return this.request<{ applicant: ApplicantOut; period: { year: number; kind: string } }>(
      "POST",
      "/api/applicants",
      payload,
    );
  }

  periodApplicants(year: number, kind?: string | null) {
    return this.request<{ period: PeriodInfo; applicants: ApplicantOut[] }>(
      "GET",
      `/api/periods/${year}/applicants${kindQuery(kind)}`,
      undefined,
      true,
    );
  }

  runSelection(year: number, kind?: string | null, weights?: number[]) {
    return this.request<RunDoc>(
      "POST",
      `/api/periods/${year}/selection${kindQuery(kind)}`,
      weights ? { weights } : undefined,
      true,
    );
  }

  latestSelection(year: number, kind?: string | null) {
    return this.request<RunDoc>(
      "GET",
      `/api/periods/${year}/selection${kindQuery(kind)}`,
      undefined,
      true,
    );
  }

  recipients(year: number, kind?: string | null) {
    return this.request<RecipientsDoc>(
      "GET",
      `/api/periods/${year}/recipients${kindQuery(kind)}`,
    );
  }

  whatIf(body: WhatIfBody, signal?: AbortSignal) {
    return this.request<RunDoc>("POST", "/api/whatif", body, true, signal);
  }
}
