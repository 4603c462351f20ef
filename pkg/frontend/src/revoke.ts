import type { RevocationReport } from './types.js';

/** The slice of the client the flow needs; satisfied by ConsoleClient. */
export interface RevokeSource {
  revokeConsent(creatorId: string): Promise<RevocationReport>;
}

export type RevokePhase = 'idle' | 'confirming' | 'submitting' | 'revoked';

/**
 * Two-step revocation: begin() opens the confirmation, then confirm() only
 * submits when the typed text matches the creator's display name exactly.
 * Revocation is one-way, so a server error leaves the flow in the
 * confirmation step with an actionable message instead of guessing state.
 */
export class RevokeFlow {
  phase: RevokePhase = 'idle';
  error: string | null = null;
  report: RevocationReport | null = null;

  constructor(
    private readonly source: RevokeSource,
    readonly creatorId: string,
    readonly creatorName: string,
  ) {}

  begin(): void {
    if (this.phase === 'idle') {
      this.phase = 'confirming';
      this.error = null;
    }
  }

  cancel(): void {
    if (this.phase === 'confirming') {
      this.phase = 'idle';
      this.error = null;
    }
  }

  async confirm(typedName: string): Promise<boolean> {
    if (this.phase !== 'confirming') {
      return false;
    }
    if (typedName.trim() !== this.creatorName) {
      this.error = `type the creator's display name ("${this.creatorName}") to confirm`;
      return false;
    }
    this.phase = 'submitting';
    this.error = null;
    try {
      this.report = await this.source.revokeConsent(this.creatorId);
      this.phase = 'revoked';
      return true;
    } catch (err) {
      const message = err instanceof Error ? err.message : String(err);
      this.phase = 'confirming';
      this.error = `revocation failed (${message}); consent is still active, retry or check the server`;
      return false;
    }
  }

  /** Counts come verbatim from the server's revocation report. */
  summary(nameFor?: (consumerId: string) => string | null): string {
    if (this.report === null) {
      return '';
    }
    const { revoked_license_count: count, affected_consumers: affected } = this.report;
    if (count === 0 && affected.length === 0) {
      return '0 licenses, no consumers';
    }
    const names = affected.map((id) => nameFor?.(id) ?? id);
    const noun = count === 1 ? 'license' : 'licenses';
    return `${count} ${noun} revoked, consumers affected: ${names.join(', ')}`;
  }
}
