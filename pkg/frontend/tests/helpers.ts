import type { FeedSource } from '../src/feed.js';
import type {
  AccessEvent,
  AccessLogData,
  AlertList,
  Envelope,
  GuardrailAlert,
} from '../src/types.js';

let eventCounter = 0;

export function makeEvent(overrides: Partial<AccessEvent> = {}): AccessEvent {
  eventCounter += 1;
  return {
    log_id: `log-${eventCounter.toString().padStart(4, '0')}`,
    timestamp: '2025-07-01T12:00:00Z',
    consumer_id: 'con-alpha',
    consumer_name: 'Alpha Labs',
    consumer_type: 'llm_provider',
    method: 'getCreatorContent',
    content_ids: ['cnt-001'],
    response_size_bytes: 100,
    license_id: `lic-${eventCounter.toString().padStart(4, '0')}`,
    ...overrides,
  };
}

export function envelopeFor(creatorId: string, events: AccessEvent[]): Envelope<AccessLogData> {
  return {
    protocol: 'SCP/1.0',
    method: 'getAccessLog',
    data: { creator_id: creatorId, events },
    attribution: { creator_ids: [creatorId], content_ids: [] },
    license: {
      license_id: 'lic-feed',
      consumer_id: 'con-console',
      terms: {},
      content_fingerprint: '0'.repeat(64),
      issued_at: '2025-07-01T12:00:00Z',
      expires_at: null,
      status: 'active',
    },
    audit_log_id: 'log-feed',
  };
}

/**
 * In-memory stand-in for the server's access-log surface: applies the same
 * inclusive since-filter and newest-first ordering the real endpoint uses.
 */
export class FakeSource implements FeedSource {
  events: AccessEvent[] = [];
  alertList: GuardrailAlert[] = [];
  accessLogCalls: Array<{ creatorId: string; since: string | undefined }> = [];
  failNextWith: Error | null = null;
  hang = false;

  private waiters: Array<() => void> = [];

  async accessLog(creatorId: string, since?: string): Promise<Envelope<AccessLogData>> {
    this.accessLogCalls.push({ creatorId, since });
    if (this.failNextWith !== null) {
      const err = this.failNextWith;
      this.failNextWith = null;
      throw err;
    }
    if (this.hang) {
      await new Promise<void>((resolve) => this.waiters.push(resolve));
    }
    const visible = this.events.filter((e) => since === undefined || e.timestamp >= since);
    const sorted = [...visible].sort((a, b) => b.timestamp.localeCompare(a.timestamp));
    return envelopeFor(creatorId, sorted);
  }

  async alerts(creatorId: string): Promise<AlertList> {
    return { creator_id: creatorId, alerts: [...this.alertList] };
  }

  releaseHanging(): void {
    const pending = this.waiters.splice(0);
    for (const resolve of pending) {
      resolve();
    }
  }
}

export function makeAlert(overrides: Partial<GuardrailAlert> = {}): GuardrailAlert {
  eventCounter += 1;
  return {
    alert_id: `alr-${eventCounter.toString().padStart(4, '0')}`,
    kind: 'aggregation',
    creator_id: 'cid-001',
    consumer_id: 'con-alpha',
    organization_id: 'org-alpha',
    window: { from: '2025-06-30T12:00:00Z', to: '2025-07-01T12:00:00Z' },
    measured: 0.61,
    threshold: 0.5,
    created_at: '2025-07-01T12:00:00Z',
    ...overrides,
  };
}

export function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { 'Content-Type': 'application/json' },
  });
}
