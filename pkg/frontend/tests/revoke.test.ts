import { describe, expect, it } from 'vitest';

import { ApiError } from '../src/api.js';
import { RevokeFlow } from '../src/revoke.js';
import type { RevocationReport } from '../src/types.js';

class FakeRevoker {
  calls: string[] = [];
  failNextWith: Error | null = null;
  report: RevocationReport = {
    creator_id: 'cid-001',
    revoked_license_count: 3,
    affected_consumers: ['con-a', 'con-b'],
  };

  async revokeConsent(creatorId: string): Promise<RevocationReport> {
    this.calls.push(creatorId);
    if (this.failNextWith !== null) {
      const err = this.failNextWith;
      this.failNextWith = null;
      throw err;
    }
    return this.report;
  }
}

describe('RevokeFlow', () => {
  it('walks idle -> confirming -> revoked on a correct typed name', async () => {
    const source = new FakeRevoker();
    const flow = new RevokeFlow(source, 'cid-001', 'Ada Example');
    expect(flow.phase).toBe('idle');
    flow.begin();
    expect(flow.phase).toBe('confirming');
    expect(await flow.confirm('Ada Example')).toBe(true);
    expect(flow.phase).toBe('revoked');
    expect(flow.report).toEqual(source.report);
    expect(source.calls).toEqual(['cid-001']);
  });

  it('tolerates surrounding whitespace in the typed name', async () => {
    const source = new FakeRevoker();
    const flow = new RevokeFlow(source, 'cid-001', 'Ada Example');
    flow.begin();
    expect(await flow.confirm('  Ada Example  ')).toBe(true);
  });

  it('rejects a mismatched name without calling the server', async () => {
    const source = new FakeRevoker();
    const flow = new RevokeFlow(source, 'cid-001', 'Ada Example');
    flow.begin();
    expect(await flow.confirm('ada example')).toBe(false);
    expect(flow.phase).toBe('confirming');
    expect(flow.error).toContain('Ada Example');
    expect(source.calls).toEqual([]);
  });

  it('does nothing when confirm is called outside the confirming step', async () => {
    const source = new FakeRevoker();
    const flow = new RevokeFlow(source, 'cid-001', 'Ada Example');
    expect(await flow.confirm('Ada Example')).toBe(false);
    expect(flow.phase).toBe('idle');
    expect(source.calls).toEqual([]);
  });

  it('cancel returns to idle and clears the error', async () => {
    const source = new FakeRevoker();
    const flow = new RevokeFlow(source, 'cid-001', 'Ada Example');
    flow.begin();
    await flow.confirm('wrong');
    flow.cancel();
    expect(flow.phase).toBe('idle');
    expect(flow.error).toBeNull();
  });

  it('keeps the confirmation step with an actionable message on server error', async () => {
    const source = new FakeRevoker();
    const flow = new RevokeFlow(source, 'cid-001', 'Ada Example');
    flow.begin();
    source.failNextWith = new ApiError(500, 'AuditWriteError', 'audit write failed');
    expect(await flow.confirm('Ada Example')).toBe(false);
    expect(flow.phase).toBe('confirming');
    expect(flow.error).toContain('consent is still active');
    expect(flow.report).toBeNull();

    expect(await flow.confirm('Ada Example')).toBe(true);
    expect(flow.phase).toBe('revoked');
    expect(flow.error).toBeNull();
  });

  it('begin is a no-op once revoked', async () => {
    const source = new FakeRevoker();
    const flow = new RevokeFlow(source, 'cid-001', 'Ada Example');
    flow.begin();
    await flow.confirm('Ada Example');
    flow.begin();
    expect(flow.phase).toBe('revoked');
  });

  it('summarizes a revocation with zero prior access', async () => {
    const source = new FakeRevoker();
    source.report = { creator_id: 'cid-001', revoked_license_count: 0, affected_consumers: [] };
    const flow = new RevokeFlow(source, 'cid-001', 'Ada Example');
    flow.begin();
    await flow.confirm('Ada Example');
    expect(flow.summary()).toBe('0 licenses, no consumers');
  });

  it('lists every affected consumer, preferring display names', async () => {
    const source = new FakeRevoker();
    const flow = new RevokeFlow(source, 'cid-001', 'Ada Example');
    flow.begin();
    await flow.confirm('Ada Example');
    const names: Record<string, string> = { 'con-a': 'Alpha Labs', 'con-b': 'Beta Corp' };
    expect(flow.summary((id) => names[id] ?? null)).toBe(
      '3 licenses revoked, consumers affected: Alpha Labs, Beta Corp',
    );
    expect(flow.summary()).toBe('3 licenses revoked, consumers affected: con-a, con-b');
  });

  it('uses the singular form for one revoked license', async () => {
    const source = new FakeRevoker();
    source.report = { creator_id: 'cid-001', revoked_license_count: 1, affected_consumers: ['con-a'] };
    const flow = new RevokeFlow(source, 'cid-001', 'Ada Example');
    flow.begin();
    await flow.confirm('Ada Example');
    expect(flow.summary()).toBe('1 license revoked, consumers affected: con-a');
  });
});
