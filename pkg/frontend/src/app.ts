import { ApiError, ConsoleClient } from './api.js';
import { AccessFeed } from './feed.js';
import { RevenuePanel } from './revenue.js';
import { RevokeFlow } from './revoke.js';
import type { ConsoleSession } from './types.js';
import { DEFAULT_POLL_INTERVAL_SECONDS } from './types.js';

// The key lives in this module for the lifetime of the page and nowhere else.
let session: ConsoleSession | null = null;
let client: ConsoleClient | null = null;
let feed: AccessFeed | null = null;
let revoke: RevokeFlow | null = null;
let revenue: RevenuePanel | null = null;

function escapeHtml(value: unknown): string {
  return String(value ?? '')
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

function el<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

function renderLogin(root: HTMLElement): void {
  root.innerHTML = `
    <section class="card">
      <h1>Creator console</h1>
      <form id="login-form">
        <label>Server URL <input id="login-url" value="http://127.0.0.1:8420" required></label>
        <label>Console API key <input id="login-key" type="password" required autocomplete="off"></label>
        <label>Creator ID <input id="login-creator" placeholder="cid-001" required></label>
        <label>Display name <input id="login-name" required></label>
        <button type="submit">Open console</button>
      </form>
      <p id="login-error" class="error"></p>
    </section>
  `;
  el<HTMLFormElement>('login-form').addEventListener('submit', (ev) => {
    ev.preventDefault();
    session = {
      baseUrl: el<HTMLInputElement>('login-url').value,
      apiKey: el<HTMLInputElement>('login-key').value,
      creatorId: el<HTMLInputElement>('login-creator').value.trim(),
      creatorName: el<HTMLInputElement>('login-name').value.trim(),
      pollIntervalSeconds: DEFAULT_POLL_INTERVAL_SECONDS,
    };
    client = new ConsoleClient(session.baseUrl, session.apiKey);
    client.health().then(
      () => openConsole(root),
      (err) => {
        el('login-error').textContent =
          err instanceof ApiError ? `login failed: ${err.message}` : `server unreachable: ${err}`;
      },
    );
  });
}

function openConsole(root: HTMLElement): void {
  if (!session || !client) return;
  feed = new AccessFeed(client, session.creatorId, session.pollIntervalSeconds);
  revoke = new RevokeFlow(client, session.creatorId, session.creatorName);
  revenue = new RevenuePanel(client, session.creatorId);

  root.innerHTML = `
    <header>
      <h1>${escapeHtml(session.creatorName)} <span class="muted">(${escapeHtml(session.creatorId)})</span></h1>
      <span id="live-indicator" class="pill">live</span>
    </header>
    <section class="card" id="alerts"></section>
    <section class="card">
      <h2>Access feed</h2>
      <table id="feed-table">
        <thead><tr><th>Time</th><th>Consumer</th><th>Method</th><th>Content</th><th>Bytes</th><th>License</th></tr></thead>
        <tbody></tbody>
      </table>
      <h3>Per-consumer totals</h3>
      <table id="totals-table">
        <thead><tr><th>Consumer</th><th>Events</th><th>Total bytes</th></tr></thead>
        <tbody></tbody>
      </table>
    </section>
    <section class="card">
      <h2>Consent</h2>
      <div id="revoke-area"></div>
    </section>
    <section class="card">
      <h2>Revenue preview</h2>
      <form id="revenue-form">
        <label>From <input id="rev-from" value="2025-01-01T00:00:00Z"></label>
        <label>To <input id="rev-to" value="2026-01-01T00:00:00Z"></label>
        <label>Pool <input id="rev-total" type="number" min="0" step="0.01" value="1000"></label>
        <button type="submit">Preview</button>
      </form>
      <div id="revenue-panel"></div>
    </section>
  `;
  feed.onChange(() => {
    renderFeed();
    renderAlerts();
  });
  feed.start();
  renderRevoke();
  el<HTMLFormElement>('revenue-form').addEventListener('submit', (ev) => {
    ev.preventDefault();
    loadRevenue();
  });
}

function renderFeed(): void {
  if (!feed) return;
  const indicator = el('live-indicator');
  indicator.textContent = feed.state === 'expired' ? 'session expired' : feed.state;
  indicator.className = `pill ${feed.state}`;
  if (feed.lastError && feed.state !== 'expired') {
    indicator.textContent = `live (last poll failed: ${feed.lastError})`;
  }

  const body = el('feed-table').querySelector('tbody')!;
  body.innerHTML = feed.rows
    .map((row) => {
      const license = row.blocked ? '<strong class="blocked">blocked (revoked)</strong>' : escapeHtml(row.license_id);
      return `<tr class="${row.blocked ? 'blocked' : ''}">
        <td>${escapeHtml(row.timestamp)}</td>
        <td>${escapeHtml(row.consumer_name ?? row.consumer_id)}</td>
        <td>${escapeHtml(row.method)}</td>
        <td>${escapeHtml(row.content_ids.join(', '))}</td>
        <td>${row.response_size_bytes}</td>
        <td>${license}</td>
      </tr>`;
    })
    .join('');

  const totalsBody = el('totals-table').querySelector('tbody')!;
  totalsBody.innerHTML = [...feed.totals.values()]
    .sort((a, b) => b.total_bytes - a.total_bytes)
    .map(
      (t) =>
        `<tr><td>${escapeHtml(t.consumer_name ?? t.consumer_id)}</td><td>${t.event_count}</td><td>${t.total_bytes}</td></tr>`,
    )
    .join('');
}

function renderAlerts(): void {
  if (!feed) return;
  const box = el('alerts');
  if (feed.aggregationAlerts.length === 0) {
    box.innerHTML = '';
    return;
  }
  box.innerHTML = feed.aggregationAlerts
    .map(
      (a) =>
        `<p class="alert">Aggregation alert: ${escapeHtml(a.consumer_id)} has pulled ${(a.measured * 100).toFixed(1)}% of the corpus (threshold ${(a.threshold * 100).toFixed(0)}%).</p>`,
    )
    .join('');
}

function renderRevoke(): void {
  if (!revoke || !feed) return;
  const area = el('revoke-area');
  const error = revoke.error ? `<p class="error">${escapeHtml(revoke.error)}</p>` : '';
  if (revoke.phase === 'idle') {
    area.innerHTML = `<button id="revoke-begin">Revoke consent…</button>${error}`;
    el('revoke-begin').addEventListener('click', () => {
      revoke!.begin();
      renderRevoke();
    });
  } else if (revoke.phase === 'confirming') {
    area.innerHTML = `
      <p>This permanently revokes every active license. Type <strong>${escapeHtml(revoke.creatorName)}</strong> to confirm.</p>
      <input id="revoke-typed" autocomplete="off">
      <button id="revoke-confirm">Revoke</button>
      <button id="revoke-cancel">Cancel</button>
      ${error}
    `;
    el('revoke-confirm').addEventListener('click', () => {
      void revoke!.confirm(el<HTMLInputElement>('revoke-typed').value).then(renderRevoke);
      renderRevoke();
    });
    el('revoke-cancel').addEventListener('click', () => {
      revoke!.cancel();
      renderRevoke();
    });
  } else if (revoke.phase === 'submitting') {
    area.innerHTML = '<p>Revoking…</p>';
  } else {
    area.innerHTML = `<p class="revoked">Consent revoked. ${escapeHtml(revoke.summary((id) => feed!.consumerName(id)))}</p>`;
  }
}

function loadRevenue(): void {
  if (!revenue) return;
  const panel = el('revenue-panel');
  revenue
    .load(
      el<HTMLInputElement>('rev-from').value,
      el<HTMLInputElement>('rev-to').value,
      Number(el<HTMLInputElement>('rev-total').value),
    )
    .then((view) => {
      panel.innerHTML = view.empty
        ? '<p class="muted">No accesses in this window.</p>'
        : `<table>
            <tr><th>Accesses</th><td>${view.accessCount}</td></tr>
            <tr><th>Weight</th><td>${view.weight}</td></tr>
            <tr><th>Share</th><td>${view.share} of ${view.totalRevenue}</td></tr>
            <tr><th>% of pool</th><td>${view.percentOfTotal.toFixed(2)}%</td></tr>
          </table>`;
    })
    .catch(() => {
      panel.innerHTML = `<p class="error">${escapeHtml(revenue!.error)}</p>`;
    });
}

renderLogin(document.getElementById('app')!);
