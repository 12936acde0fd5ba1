/** Typed client for the llotax exchange HTTP API.
 *
 * Every displayed score and manifest byte comes from these calls; the UI
 * never computes or reformats scoring values on its own.
 */

export interface RepoItem {
  id: string;
  course: string;
  filename: string;
  author: string;
  format: string;
  description: string;
  last_modified: number;
  size: number;
  payload_ref: string;
}

export interface ClassifyResponse {
  suggestions: string[];
  selected: null;
}

export interface StagingResponse {
  staging_id: string;
  folder: string | null;
}

export interface ClassificationResponse {
  classification: { code: string; label: string; matched_keywords: string[] };
  suggestions: unknown[];
}

export interface ExportResponse {
  manifest: string;
  files: { name: string; payload_ref: string; size: number }[];
}

export interface ApiErrorBody {
  error: string;
  message: string;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ExchangeClient {
  constructor(
    private readonly baseUrl: string,
    private token: string = '',
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  setToken(token: string): void {
    this.token = token;
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const headers: Record<string, string> = { 'Content-Type': 'application/json' };
    if (this.token) headers['Authorization'] = `Bearer ${this.token}`;
    const response = await this.fetchImpl(this.baseUrl + path, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload = await response.json();
    if (!response.ok) {
      const err = payload as ApiErrorBody;
      throw new ApiError(response.status, err.error ?? 'unknown', err.message ?? 'request failed');
    }
    return payload as T;
  }

  async openSession(domain: string, username: string, password: string): Promise<string> {
    const body = await this.request<{ token: string }>('POST', '/session', {
      domain,
      username,
      password,
    });
    this.token = body.token;
    return body.token;
  }

  searchItems(query: string): Promise<RepoItem[]> {
    return this.request<RepoItem[]>('GET', `/items?q=${encodeURIComponent(query)}`);
  }

  classify(title: string, description: string): Promise<ClassifyResponse> {
    return this.request<ClassifyResponse>('POST', '/classify', { title, description });
  }

  stage(itemIds: string[]): Promise<StagingResponse> {
    return this.request<StagingResponse>('POST', '/staging', { item_ids: itemIds });
  }

  attachClassification(
    stagingId: string,
    title: string,
    description: string,
    chosen: string,
  ): Promise<ClassificationResponse> {
    return this.request<ClassificationResponse>(
      'POST',
      `/staging/${stagingId}/classification`,
      { title, description, chosen },
    );
  }

  save(stagingId: string, lom: object): Promise<{ id: string }> {
    return this.request<{ id: string }>('POST', `/staging/${stagingId}/save`, { lom });
  }

  exportLlo(id: string): Promise<ExportResponse> {
    return this.request<ExportResponse>('GET', `/items/${id}/llo`);
  }
}
