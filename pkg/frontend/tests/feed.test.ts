import { afterEach, describe, expect, it, vi } from 'vitest';

import { ApiError } from '../src/api.js';
import { AccessFeed } from '../src/feed.js';
import { FakeSource, makeAlert, makeEvent } from './helpers.js';

afterEach(() => {
  vi.useRealTimers();
});

describe('AccessFeed polling', () => {
  it('shows an empty table in live state when there is no activity', async () => {
    vi.useFakeTimers();
    const source = new FakeSource();
    const feed = new AccessFeed(source, 'cid-001', 3);
    feed.start();
    await vi.advanceTimersByTimeAsync(0);
    expect(feed.state).toBe('live');
    expect(feed.rows).toEqual([]);
    expect(feed.running).toBe(true);
    feed.stop();
    expect(feed.running).toBe(false);
  });

  it('picks up a new event on the next poll', async () => {
    const source = new FakeSource();
    const feed = new AccessFeed(source, 'cid-001');
    await feed.pollOnce();
    source.events.push(makeEvent({ method: 'getCreatorProfile', response_size_bytes: 321 }));
    const added = await feed.pollOnce();
    expect(added).toBe(1);
    expect(feed.rows).toHaveLength(1);
    expect(feed.rows[0]!.method).toBe('getCreatorProfile');
    expect(feed.rows[0]!.blocked).toBe(false);
  });

  it('does not duplicate rows when poll windows overlap', async () => {
    const source = new FakeSource();
    const feed = new AccessFeed(source, 'cid-001');
    source.events.push(makeEvent({ timestamp: '2025-07-01T12:00:05Z' }));
    await feed.pollOnce();
    // The since-filter is inclusive, so the boundary event comes back again.
    expect(await feed.pollOnce()).toBe(0);
    expect(feed.rows).toHaveLength(1);

    source.events.push(makeEvent({ timestamp: '2025-07-01T12:00:05Z' }));
    expect(await feed.pollOnce()).toBe(1);
    expect(feed.rows).toHaveLength(2);
  });

  it('passes no cursor on the first poll and the newest timestamp afterwards', async () => {
    const source = new FakeSource();
    const feed = new AccessFeed(source, 'cid-001');
    source.events.push(makeEvent({ timestamp: '2025-07-01T12:00:01Z' }));
    source.events.push(makeEvent({ timestamp: '2025-07-01T12:00:09Z' }));
    await feed.pollOnce();
    await feed.pollOnce();
    expect(source.accessLogCalls[0]!.since).toBeUndefined();
    expect(source.accessLogCalls[1]!.since).toBe('2025-07-01T12:00:09Z');
    expect(source.accessLogCalls.map((c) => c.creatorId)).toEqual(['cid-001', 'cid-001']);
  });

  it('keeps newest rows first as events arrive across polls', async () => {
    const source = new FakeSource();
    const feed = new AccessFeed(source, 'cid-001');
    source.events.push(makeEvent({ timestamp: '2025-07-01T12:00:01Z', method: 'searchCreators' }));
    await feed.pollOnce();
    source.events.push(makeEvent({ timestamp: '2025-07-01T12:00:08Z', method: 'getCreatorScore' }));
    await feed.pollOnce();
    expect(feed.rows.map((r) => r.method)).toEqual(['getCreatorScore', 'searchCreators']);
  });

  it('accumulates cumulative byte totals per consumer', async () => {
    const source = new FakeSource();
    const feed = new AccessFeed(source, 'cid-001');
    source.events.push(
      makeEvent({ consumer_id: 'con-a', consumer_name: 'Alpha', response_size_bytes: 100, timestamp: '2025-07-01T12:00:01Z' }),
      makeEvent({ consumer_id: 'con-b', consumer_name: 'Beta', response_size_bytes: 50, timestamp: '2025-07-01T12:00:02Z' }),
    );
    await feed.pollOnce();
    source.events.push(
      makeEvent({ consumer_id: 'con-a', consumer_name: 'Alpha', response_size_bytes: 250, timestamp: '2025-07-01T12:00:03Z' }),
    );
    await feed.pollOnce();
    expect(feed.totals.get('con-a')).toEqual({
      consumer_id: 'con-a',
      consumer_name: 'Alpha',
      total_bytes: 350,
      event_count: 2,
    });
    expect(feed.totals.get('con-b')!.total_bytes).toBe(50);
    expect(feed.consumerName('con-b')).toBe('Beta');
    expect(feed.consumerName('con-unknown')).toBeNull();
  });

  it('marks license-less denial records as blocked', async () => {
    const source = new FakeSource();
    const feed = new AccessFeed(source, 'cid-001');
    source.events.push(
      makeEvent({ license_id: '', response_size_bytes: 0, timestamp: '2025-07-01T12:00:02Z' }),
      makeEvent({ timestamp: '2025-07-01T12:00:01Z' }),
    );
    await feed.pollOnce();
    expect(feed.rows.map((r) => r.blocked)).toEqual([true, false]);
  });

  it('collects aggregation alerts once and ignores other kinds', async () => {
    const source = new FakeSource();
    const feed = new AccessFeed(source, 'cid-001');
    source.alertList.push(makeAlert({ measured: 0.71 }), makeAlert({ kind: 'budget_exceeded' }));
    await feed.pollOnce();
    await feed.pollOnce();
    expect(feed.aggregationAlerts).toHaveLength(1);
    expect(feed.aggregationAlerts[0]!.measured).toBe(0.71);
  });

  it('coalesces overlapping polls to at most one in flight', async () => {
    vi.useFakeTimers();
    const source = new FakeSource();
    source.hang = true;
    const feed = new AccessFeed(source, 'cid-001', 1);
    feed.start();
    await vi.advanceTimersByTimeAsync(5000);
    expect(source.accessLogCalls).toHaveLength(1);
    source.releaseHanging();
    await vi.advanceTimersByTimeAsync(1000);
    expect(source.accessLogCalls.length).toBeGreaterThanOrEqual(2);
    feed.stop();
  });

  it('expires the session on auth failure and stops polling without retry', async () => {
    vi.useFakeTimers();
    const source = new FakeSource();
    const feed = new AccessFeed(source, 'cid-001', 1);
    source.failNextWith = new ApiError(403, 'AuthError', 'missing or unknown API key');
    feed.start();
    await vi.advanceTimersByTimeAsync(0);
    expect(feed.state).toBe('expired');
    expect(feed.lastError).toContain('session expired');
    expect(feed.running).toBe(false);
    const before = source.accessLogCalls.length;
    await vi.advanceTimersByTimeAsync(10_000);
    expect(source.accessLogCalls.length).toBe(before);
    expect(await feed.pollOnce()).toBe(0);
    expect(source.accessLogCalls.length).toBe(before);
  });

  it('keeps polling through transient non-auth errors', async () => {
    const source = new FakeSource();
    const feed = new AccessFeed(source, 'cid-001');
    source.failNextWith = new Error('connection reset');
    await feed.pollOnce();
    expect(feed.state).not.toBe('expired');
    expect(feed.lastError).toBe('connection reset');
    source.events.push(makeEvent());
    await feed.pollOnce();
    expect(feed.lastError).toBeNull();
    expect(feed.rows).toHaveLength(1);
  });

  it('notifies subscribers and honors unsubscribe', async () => {
    const source = new FakeSource();
    const feed = new AccessFeed(source, 'cid-001');
    let seen = 0;
    const off = feed.onChange(() => (seen += 1));
    await feed.pollOnce();
    expect(seen).toBe(1);
    off();
    await feed.pollOnce();
    expect(seen).toBe(1);
  });
});
