import type { RevenueReport } from './types.js';

/** The slice of the client the panel needs; satisfied by ConsoleClient. */
export interface RevenueSource {
  revenueReport(from: string, to: string, total: number): Promise<RevenueReport>;
}

export interface RevenuePanelView {
  creatorId: string;
  window: { from: string; to: string };
  totalRevenue: number;
  accessCount: number;
  weight: number;
  share: number;
  /** Presentation only: share/total from the server's own numbers. */
  percentOfTotal: number;
  empty: boolean;
}

/**
 * Revenue preview for one creator. The weight and share are displayed
 * exactly as the server reported them; nothing is recomputed client-side.
 */
export class RevenuePanel {
  view: RevenuePanelView | null = null;
  error: string | null = null;

  constructor(
    private readonly source: RevenueSource,
    readonly creatorId: string,
  ) {}

  async load(from: string, to: string, total: number): Promise<RevenuePanelView> {
    let report: RevenueReport;
    try {
      report = await this.source.revenueReport(from, to, total);
    } catch (err) {
      this.error = err instanceof Error ? err.message : String(err);
      throw err;
    }
    this.error = null;
    const row = report.rows.find((r) => r.creator_id === this.creatorId);
    const empty = row === undefined || report.degenerate;
    this.view = {
      creatorId: this.creatorId,
      window: { from, to },
      totalRevenue: report.total_revenue,
      accessCount: empty ? 0 : row!.access_count,
      weight: empty ? 0 : row!.weight,
      share: empty ? 0 : row!.share,
      percentOfTotal:
        empty || report.total_revenue <= 0 ? 0 : (row!.share / report.total_revenue) * 100,
      empty,
    };
    return this.view;
  }
}
