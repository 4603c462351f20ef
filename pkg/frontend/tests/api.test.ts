import { describe, expect, it } from 'vitest';

import { ApiError, ConsoleClient } from '../src/api.js';
import { jsonResponse } from './helpers.js';

interface Captured {
  url: string;
  method: string | undefined;
  headers: Record<string, string>;
  body: string | undefined;
}

function capturingClient(response: Response, apiKey = 'key-123') {
  const calls: Captured[] = [];
  const client = new ConsoleClient('http://server.test', apiKey, async (url, init) => {
    calls.push({
      url,
      method: init?.method,
      headers: (init?.headers ?? {}) as Record<string, string>,
      body: init?.body as string | undefined,
    });
    return response;
  });
  return { client, calls };
}

describe('ConsoleClient', () => {
  it('sends the API key header on every request', async () => {
    const { client, calls } = capturingClient(jsonResponse(200, { status: 'ok', protocol: 'SCP/1.0' }));
    await client.health();
    expect(calls[0]!.headers['X-SCP-API-Key']).toBe('key-123');
    expect(calls[0]!.method).toBe('GET');
    expect(calls[0]!.url).toBe('http://server.test/scp/v1/health');
  });

  it('strips trailing slashes from the base URL', async () => {
    const calls: string[] = [];
    const client = new ConsoleClient('http://server.test///', 'k', async (url) => {
      calls.push(url);
      return jsonResponse(200, {});
    });
    await client.health();
    expect(calls[0]).toBe('http://server.test/scp/v1/health');
  });

  it('posts getAccessLog with creator_id only when since is absent', async () => {
    const { client, calls } = capturingClient(jsonResponse(200, {}));
    await client.accessLog('cid-001');
    expect(calls[0]!.method).toBe('POST');
    expect(calls[0]!.url).toBe('http://server.test/scp/v1/getAccessLog');
    expect(JSON.parse(calls[0]!.body!)).toEqual({ creator_id: 'cid-001' });
    expect(calls[0]!.headers['Content-Type']).toBe('application/json');
  });

  it('posts getAccessLog with the since cursor when given', async () => {
    const { client, calls } = capturingClient(jsonResponse(200, {}));
    await client.accessLog('cid-001', '2025-07-01T12:00:00Z');
    expect(JSON.parse(calls[0]!.body!)).toEqual({
      creator_id: 'cid-001',
      since: '2025-07-01T12:00:00Z',
    });
  });

  it('builds the revoke path from the creator id', async () => {
    const { client, calls } = capturingClient(
      jsonResponse(200, { creator_id: 'cid-009', revoked_license_count: 0, affected_consumers: [] }),
    );
    await client.revokeConsent('cid-009');
    expect(calls[0]!.url).toBe('http://server.test/scp/v1/creators/cid-009/revoke');
    expect(calls[0]!.method).toBe('POST');
  });

  it('encodes the revenue window and pool as query parameters', async () => {
    const { client, calls } = capturingClient(
      jsonResponse(200, { total_revenue: 10, degenerate: false, rows: [] }),
    );
    await client.revenueReport('2025-01-01T00:00:00Z', '2025-02-01T00:00:00Z', 1000.5);
    const url = new URL(calls[0]!.url);
    expect(url.pathname).toBe('/scp/v1/reports/revenue');
    expect(url.searchParams.get('from')).toBe('2025-01-01T00:00:00Z');
    expect(url.searchParams.get('to')).toBe('2025-02-01T00:00:00Z');
    expect(url.searchParams.get('total')).toBe('1000.5');
  });

  it('turns structured error bodies into ApiError', async () => {
    const { client } = capturingClient(
      jsonResponse(404, { error: { type: 'NotFoundError', message: 'no creator cid-404' } }),
    );
    const err = await client.accessLog('cid-404').catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(404);
    expect(err.errorType).toBe('NotFoundError');
    expect(err.message).toBe('no creator cid-404');
    expect(err.isAuthFailure).toBe(false);
  });

  it('flags 401 and 403 as auth failures', async () => {
    for (const status of [401, 403]) {
      const { client } = capturingClient(
        jsonResponse(status, { error: { type: 'AuthError', message: 'bad key' } }),
      );
      const err = await client.health().catch((e) => e);
      expect(err.isAuthFailure).toBe(true);
    }
  });

  it('falls back to the HTTP status when the error body is not JSON', async () => {
    const client = new ConsoleClient('http://server.test', 'k', async () => {
      return new Response('<html>upstream exploded</html>', { status: 502 });
    });
    const err = await client.health().catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.errorType).toBe('HttpError');
    expect(err.message).toBe('HTTP 502');
  });
});
