import type {
  ClassResponse,
  HypergraphDoc,
  LayoutDoc,
  MetricsDoc,
  ParamsResponse,
  ResultDoc,
  ThresholdResponse,
  UiParams,
} from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const resp = await fetch(url, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  if (!resp.ok) {
    let detail = resp.statusText;
    try {
      const body = await resp.json();
      if (body && typeof body.detail === "string") detail = body.detail;
    } catch {
      // non-JSON error body: keep the status text
    }
    throw new ApiError(resp.status, detail);
  }
  return (await resp.json()) as T;
}

/** Thin typed client for the session service; one instance per session. */
export class ApiClient {
  constructor(private base: string = "") {}

  async createSession(doc: HypergraphDoc): Promise<string> {
    const body = await request<{ session_id: string }>(`${this.base}/sessions`, {
      method: "POST",
      body: JSON.stringify(doc),
    });
    return body.session_id;
  }

  setParams(sessionId: string, params: UiParams): Promise<ParamsResponse> {
    return request(`${this.base}/sessions/${sessionId}/params`, {
      method: "PUT",
      body: JSON.stringify(params),
    });
  }

  setThreshold(sessionId: string, epsilon: number): Promise<ThresholdResponse> {
    return request(`${this.base}/sessions/${sessionId}/threshold`, {
      method: "PUT",
      body: JSON.stringify({ epsilon }),
    });
  }

  expandBar(sessionId: string, barId: number): Promise<ThresholdResponse> {
    return request(`${this.base}/sessions/${sessionId}/expand`, {
      method: "POST",
      body: JSON.stringify({ bar_id: barId }),
    });
  }

  unexpandBar(sessionId: string, barId: number): Promise<ThresholdResponse> {
    return request(`${this.base}/sessions/${sessionId}/expand/${barId}`, {
      method: "DELETE",
    });
  }

  getLayout(
    sessionId: string,
    view: "original" | "simplified",
    seed = 42,
  ): Promise<{ view: string; layout: LayoutDoc }> {
    return request(
      `${this.base}/sessions/${sessionId}/layout?view=${view}&seed=${seed}`,
    );
  }

  getMetrics(sessionId: string): Promise<{ before: MetricsDoc; after: MetricsDoc }> {
    return request(`${this.base}/sessions/${sessionId}/metrics`);
  }

  getClass(sessionId: string, simplifiedId: number): Promise<ClassResponse> {
    return request(`${this.base}/sessions/${sessionId}/class/${simplifiedId}`);
  }

  getSnapshot(sessionId: string): Promise<ResultDoc> {
    return request(`${this.base}/sessions/${sessionId}/snapshot`);
  }
}
