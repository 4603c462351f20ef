import { ApiError } from './api.js';
import type { AccessEvent, AccessLogData, AlertList, Envelope, GuardrailAlert } from './types.js';
import { DEFAULT_POLL_INTERVAL_SECONDS } from './types.js';

/** The slice of the client the feed needs; satisfied by ConsoleClient. */
export interface FeedSource {
  accessLog(creatorId: string, since?: string): Promise<Envelope<AccessLogData>>;
  alerts(creatorId: string): Promise<AlertList>;
}

export type FeedState = 'idle' | 'live' | 'expired';

export interface FeedRow extends AccessEvent {
  /** Denied attempts carry no license; render them distinctly. */
  blocked: boolean;
}

export interface ConsumerTotal {
  consumer_id: string;
  consumer_name: string | null;
  total_bytes: number;
  event_count: number;
}

/**
 * Live access feed: polls getAccessLog with since=last-seen, dedups by
 * log_id, and keeps running per-consumer byte totals plus any aggregation
 * alerts. At most one poll is in flight at a time; an auth failure flips
 * the session to expired and stops the loop instead of silently retrying.
 */
export class AccessFeed {
  rows: FeedRow[] = [];
  totals = new Map<string, ConsumerTotal>();
  aggregationAlerts: GuardrailAlert[] = [];
  state: FeedState = 'idle';
  lastError: string | null = null;

  private seen = new Set<string>();
  private seenAlerts = new Set<string>();
  private since: string | undefined;
  private inFlight = false;
  private timer: ReturnType<typeof setInterval> | null = null;
  private listeners: Array<() => void> = [];

  constructor(
    private readonly source: FeedSource,
    readonly creatorId: string,
    readonly pollIntervalSeconds: number = DEFAULT_POLL_INTERVAL_SECONDS,
  ) {}

  onChange(listener: () => void): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private notify(): void {
    for (const listener of this.listeners) {
      listener();
    }
  }

  start(): void {
    if (this.timer !== null) {
      return;
    }
    this.state = 'live';
    this.notify();
    void this.pollOnce();
    this.timer = setInterval(() => void this.pollOnce(), this.pollIntervalSeconds * 1000);
  }

  stop(): void {
    if (this.timer !== null) {
      clearInterval(this.timer);
      this.timer = null;
    }
  }

  get running(): boolean {
    return this.timer !== null;
  }

  /** Returns the number of new rows appended. */
  async pollOnce(): Promise<number> {
    if (this.inFlight || this.state === 'expired') {
      return 0;
    }
    this.inFlight = true;
    try {
      const envelope = await this.source.accessLog(this.creatorId, this.since);
      const events = envelope.data.events;
      const fresh = events.filter((e) => !this.seen.has(e.log_id));
      for (const event of fresh) {
        this.seen.add(event.log_id);
        this.accumulate(event);
      }
      if (events.length > 0) {
        // Server returns newest first; the window filter is inclusive, so
        // re-seeing the boundary event is expected and deduped above.
        this.since = events[0]!.timestamp;
      }
      if (fresh.length > 0) {
        this.rows = [...fresh.map(asRow), ...this.rows];
      }

      const alertList = await this.source.alerts(this.creatorId);
      for (const alert of alertList.alerts) {
        if (alert.kind === 'aggregation' && !this.seenAlerts.has(alert.alert_id)) {
          this.seenAlerts.add(alert.alert_id);
          this.aggregationAlerts.push(alert);
        }
      }

      this.lastError = null;
      this.notify();
      return fresh.length;
    } catch (err) {
      if (err instanceof ApiError && err.isAuthFailure) {
        this.state = 'expired';
        this.lastError = `session expired: ${err.message}`;
        this.stop();
      } else {
        this.lastError = err instanceof Error ? err.message : String(err);
      }
      this.notify();
      return 0;
    } finally {
      this.inFlight = false;
    }
  }

  private accumulate(event: AccessEvent): void {
    const entry = this.totals.get(event.consumer_id) ?? {
      consumer_id: event.consumer_id,
      consumer_name: event.consumer_name,
      total_bytes: 0,
      event_count: 0,
    };
    entry.total_bytes += event.response_size_bytes;
    entry.event_count += 1;
    if (event.consumer_name) {
      entry.consumer_name = event.consumer_name;
    }
    this.totals.set(event.consumer_id, entry);
  }

  consumerName(consumerId: string): string | null {
    return this.totals.get(consumerId)?.consumer_name ?? null;
  }
}

function asRow(event: AccessEvent): FeedRow {
  return { ...event, blocked: event.license_id === '' };
}
