// Wire types for the SCP/1.0 REST surface the console consumes.

export interface ConsoleSession {
  baseUrl: string;
  apiKey: string;
  creatorId: string;
  /** Display name the creator must type to confirm revocation. */
  creatorName: string;
  pollIntervalSeconds: number;
}

export const DEFAULT_POLL_INTERVAL_SECONDS = 3;

export interface Attribution {
  creator_ids: string[];
  content_ids: string[];
}

export interface LicenseEnvelope {
  license_id: string;
  consumer_id: string;
  terms: Record<string, unknown>;
  content_fingerprint: string;
  issued_at: string;
  expires_at: string | null;
  status: string;
}

export interface Envelope<T> {
  protocol: string;
  method: string;
  data: T;
  attribution: Attribution;
  license: LicenseEnvelope;
  audit_log_id: string;
}

export interface AccessEvent {
  log_id: string;
  timestamp: string;
  consumer_id: string;
  consumer_name: string | null;
  consumer_type: string | null;
  method: string;
  content_ids: string[];
  response_size_bytes: number;
  /** Empty string on denied attempts: no license was issued. */
  license_id: string;
}

export interface AccessLogData {
  creator_id: string;
  events: AccessEvent[];
}

export interface RevocationReport {
  creator_id: string;
  revoked_license_count: number;
  affected_consumers: string[];
}

export interface GuardrailAlert {
  alert_id: string;
  kind: string;
  creator_id: string | null;
  consumer_id: string;
  organization_id: string;
  window: { from: string; to: string };
  measured: number;
  threshold: number;
  created_at: string;
}

export interface AlertList {
  creator_id: string;
  alerts: GuardrailAlert[];
}

export interface RevenueRow {
  creator_id: string;
  access_count: number;
  weight: number;
  share: number;
}

export interface RevenueReport {
  total_revenue: number;
  degenerate: boolean;
  rows: RevenueRow[];
  period?: { from: string; to: string };
}
