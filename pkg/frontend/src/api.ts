import type {
  AccessLogData,
  AlertList,
  Envelope,
  RevenueReport,
  RevocationReport,
} from './types.js';

const API_KEY_HEADER = 'X-SCP-API-Key';

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  readonly status: number;
  readonly errorType: string;

  constructor(status: number, errorType: string, message: string) {
    super(message);
    this.name = 'ApiError';
    this.status = status;
    this.errorType = errorType;
  }

  get isAuthFailure(): boolean {
    return this.status === 401 || this.status === 403;
  }
}

/**
 * Thin client for the documented REST surface. Every request carries the
 * session key; every displayed number downstream comes straight out of
 * these responses.
 */
export class ConsoleClient {
  readonly baseUrl: string;

  constructor(
    baseUrl: string,
    private readonly apiKey: string,
    private readonly fetchImpl: FetchLike = (...args) => globalThis.fetch(...args),
  ) {
    this.baseUrl = baseUrl.replace(/\/+$/, '');
  }

  private async request<T>(method: 'GET' | 'POST', path: string, body?: unknown): Promise<T> {
    const headers: Record<string, string> = { [API_KEY_HEADER]: this.apiKey };
    let payload: string | undefined;
    if (body !== undefined) {
      headers['Content-Type'] = 'application/json';
      payload = JSON.stringify(body);
    }
    const res = await this.fetchImpl(`${this.baseUrl}${path}`, { method, headers, body: payload });
    if (!res.ok) {
      let errorType = 'HttpError';
      let message = `HTTP ${res.status}`;
      try {
        const doc = await res.json();
        if (doc && typeof doc === 'object' && doc.error) {
          errorType = doc.error.type ?? errorType;
          message = doc.error.message ?? message;
        }
      } catch {
        // non-JSON error body: keep the status-line message
      }
      throw new ApiError(res.status, errorType, message);
    }
    return (await res.json()) as T;
  }

  health(): Promise<{ status: string; protocol: string }> {
    return this.request('GET', '/scp/v1/health');
  }

  accessLog(creatorId: string, since?: string): Promise<Envelope<AccessLogData>> {
    const params: Record<string, string> = { creator_id: creatorId };
    if (since !== undefined) {
      params.since = since;
    }
    return this.request('POST', '/scp/v1/getAccessLog', params);
  }

  revokeConsent(creatorId: string): Promise<RevocationReport> {
    return this.request('POST', `/scp/v1/creators/${encodeURIComponent(creatorId)}/revoke`);
  }

  alerts(creatorId: string): Promise<AlertList> {
    return this.request('GET', `/scp/v1/creators/${encodeURIComponent(creatorId)}/alerts`);
  }

  revenueReport(from: string, to: string, total: number): Promise<RevenueReport> {
    const query = new URLSearchParams({ from, to, total: String(total) });
    return this.request('GET', `/scp/v1/reports/revenue?${query}`);
  }
}
