"""Latency benchmark harness for a running server.

Measures all six methods end-to-end (client-observed round trip over
real HTTP), with content retrieval measured twice: the structured
newest-first path and the semantic topic-ranked path, for seven rows
total. Each row gets a warmup burst then n timed requests; P50/P95/P99
are linear-interpolated percentiles.

The harness issues requests sequentially, matching single-consumer
latency semantics. A --concurrency option exists but its throughput
figure is informational only. Reference columns show a baseline capture
from a single-core 4GB environment for eyeballing, never pass/fail; the
only gate is the headline bound that every row's P99 stays under 100ms.

Note: a benchmark pushes hundreds of requests per minute through one
key, so the target server should be configured with benchmark-friendly
rate and byte limits.
"""

import json
import math
import platform
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any

import httpx
import psutil

P99_GATE_MS = 100.0

# Baseline P50/P95/P99 (ms) captured on a 1-core, 4GB reference host.
REFERENCE_MS = {
    "getCreatorProfile": (19, 22, 23),
    "searchCreators": (29, 45, 45),
    "getCreatorContent (structured)": (22, 24, 30),
    "getCreatorContent (semantic)": (45, 66, 69),
    "getCreatorScore": (20, 36, 41),
    "verifyAuthenticity": (14, 20, 35),
    "getAccessLog": (14, 24, 38),
}


def percentile(sorted_values: list[float], q: float) -> float:
    """Linear-interpolated percentile; input must be sorted ascending."""
    if not sorted_values:
        raise ValueError("no samples")
    if len(sorted_values) == 1:
        return sorted_values[0]
    rank = (len(sorted_values) - 1) * q / 100.0
    lo = math.floor(rank)
    hi = math.ceil(rank)
    if lo == hi:
        return sorted_values[lo]
    frac = rank - lo
    return sorted_values[lo] * (1.0 - frac) + sorted_values[hi] * frac


def environment_info() -> dict[str, Any]:
    memory = psutil.virtual_memory()
    return {
        "cpu_count": psutil.cpu_count(logical=True),
        "memory_total_mb": int(memory.total / (1024 * 1024)),
        "platform": platform.platform(),
        "python": platform.python_version(),
    }


class BenchError(Exception):
    pass


def _timed_call(
    client: httpx.Client, api_key: str, method: str, params: dict[str, Any]
) -> float:
    start = time.perf_counter()
    response = client.post(
        f"/scp/v1/{method}", json=params, headers={"X-SCP-API-Key": api_key}
    )
    response.read()
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    if response.status_code != 200:
        raise BenchError(
            f"{method} returned {response.status_code}: {response.text[:200]}"
        )
    return elapsed_ms


def _bench_rows(client: httpx.Client, api_key: str) -> list[tuple[str, str, dict]]:
    """Resolve row targets against the live corpus (needs one probe call)."""
    probe = client.post(
        "/scp/v1/getCreatorContent",
        json={"creator_id": "cid-001", "limit": 1},
        headers={"X-SCP-API-Key": api_key},
    )
    if probe.status_code != 200:
        raise BenchError(
            f"probe failed ({probe.status_code}); is the server seeded? {probe.text[:200]}"
        )
    items = probe.json()["data"]["items"]
    if not items:
        raise BenchError("cid-001 has no content; seed the server first")
    known_hash = items[0]["content_hash"]
    return [
        ("getCreatorProfile", "getCreatorProfile", {"creator_id": "cid-001"}),
        ("searchCreators", "searchCreators", {"query": "street food tour", "max_results": 5}),
        (
            "getCreatorContent (structured)",
            "getCreatorContent",
            {"creator_id": "cid-001", "limit": 5},
        ),
        (
            "getCreatorContent (semantic)",
            "getCreatorContent",
            {"creator_id": "cid-001", "topic": "budget travel", "limit": 5},
        ),
        ("getCreatorScore", "getCreatorScore", {"creator_id": "cid-001"}),
        ("verifyAuthenticity", "verifyAuthenticity", {"content_hash": known_hash}),
        ("getAccessLog", "getAccessLog", {"creator_id": "cid-001"}),
    ]


def run_bench(
    base_url: str,
    api_key: str,
    n: int = 100,
    warmup: int = 5,
    concurrency: int = 1,
    client: httpx.Client | None = None,
) -> dict[str, Any]:
    """Run the seven-row benchmark; returns the structured report.

    A request failure aborts the run; rows completed so far stay in the
    report and ``completed`` flips to False.
    """
    own_client = client is None
    client = client or httpx.Client(base_url=base_url, timeout=30.0)
    report: dict[str, Any] = {
        "environment": environment_info(),
        "base_url": base_url,
        "n": n,
        "warmup": warmup,
        "rows": [],
        "completed": False,
        "error": None,
    }
    try:
        rows = _bench_rows(client, api_key)
        for label, method, params in rows:
            for _ in range(warmup):
                _timed_call(client, api_key, method, params)
            samples = sorted(
                _timed_call(client, api_key, method, params) for _ in range(n)
            )
            reference = REFERENCE_MS.get(label)
            report["rows"].append(
                {
                    "label": label,
                    "method": method,
                    "n": n,
                    "p50_ms": round(percentile(samples, 50), 3),
                    "p95_ms": round(percentile(samples, 95), 3),
                    "p99_ms": round(percentile(samples, 99), 3),
                    "reference_p50_ms": reference[0] if reference else None,
                    "reference_p95_ms": reference[1] if reference else None,
                    "reference_p99_ms": reference[2] if reference else None,
                }
            )
        if concurrency > 1:
            label, method, params = rows[0]
            started = time.perf_counter()
            with ThreadPoolExecutor(max_workers=concurrency) as pool:
                list(
                    pool.map(
                        lambda _: _timed_call(client, api_key, method, params),
                        range(n),
                    )
                )
            wall = time.perf_counter() - started
            report["concurrency_info"] = {
                "workers": concurrency,
                "method": method,
                "requests": n,
                "throughput_rps": round(n / wall, 1),
            }
        report["completed"] = True
    except (BenchError, httpx.HTTPError) as exc:
        report["error"] = str(exc)
    finally:
        if own_client:
            client.close()
    report["all_under_gate"] = bool(report["rows"]) and all(
        row["p99_ms"] < P99_GATE_MS for row in report["rows"]
    )
    return report


def format_report(report: dict[str, Any]) -> str:
    env = report["environment"]
    lines = [
        f"bench target={report['base_url']} n={report['n']} warmup={report['warmup']}",
        f"host: {env['cpu_count']} cpus, {env['memory_total_mb']} MB RAM, "
        f"python {env['python']}",
        "",
        f"{'row':<32} {'P50':>8} {'P95':>8} {'P99':>8}   {'ref P50/P95/P99':>18}",
    ]
    for row in report["rows"]:
        if row["reference_p50_ms"] is not None:
            ref = (
                f"{row['reference_p50_ms']}/{row['reference_p95_ms']}"
                f"/{row['reference_p99_ms']} ms"
            )
        else:
            ref = "-"
        lines.append(
            f"{row['label']:<32} {row['p50_ms']:>7.1f}ms {row['p95_ms']:>7.1f}ms "
            f"{row['p99_ms']:>7.1f}ms   {ref:>18}"
        )
    if report.get("concurrency_info"):
        info = report["concurrency_info"]
        lines.append(
            f"\nconcurrent (informational): {info['workers']} workers on "
            f"{info['method']}: {info['throughput_rps']} req/s"
        )
    if report["error"]:
        lines.append(f"\nABORTED: {report['error']}")
    else:
        verdict = "PASS" if report["all_under_gate"] else "FAIL"
        lines.append(f"\nP99 < {P99_GATE_MS:.0f}ms gate: {verdict}")
    return "\n".join(lines)


def report_to_json(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2, sort_keys=True)
