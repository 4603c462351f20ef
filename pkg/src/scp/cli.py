"""Command-line client and server launcher.

The client subcommands mirror the six protocol methods plus the admin
surface (revoke, revenue, seed) and the benchmark harness. Every method
subcommand prints the full response envelope: attribution and license
are part of the answer, not debug noise. --json switches from indented
output to the raw single-line wire form.

The API key comes from --api-key or the SCP_API_KEY environment
variable. A failed request exits nonzero after printing the HTTP status
and the server's error message.
"""

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Any

import httpx

from scp.bench import format_report, report_to_json, run_bench
from scp.config import ServerConfig
from scp.datagen import write_corpus

DEFAULT_BASE_URL = "http://127.0.0.1:8420"


def _print_payload(payload: Any, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, separators=(",", ":"), sort_keys=True))
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))


def _request(
    args, method: str, path: str, *, json_body: Any = None, params: dict | None = None
) -> Any:
    """Issue one request; on non-2xx print the error and exit nonzero."""
    if not args.api_key:
        print("error: no API key (use --api-key or set SCP_API_KEY)", file=sys.stderr)
        raise SystemExit(2)
    try:
        response = httpx.request(
            method,
            args.base_url.rstrip("/") + path,
            json=json_body,
            params=params,
            headers={"X-SCP-API-Key": args.api_key},
            timeout=30.0,
        )
    except httpx.HTTPError as exc:
        print(f"error: request failed: {exc}", file=sys.stderr)
        raise SystemExit(1)
    if response.status_code >= 300:
        try:
            detail = response.json().get("error", {})
            message = detail.get("message", response.text)
        except ValueError:
            message = response.text
        print(f"error {response.status_code}: {message}", file=sys.stderr)
        raise SystemExit(1)
    return response.json()


def _call_method(args, method: str, params: dict[str, Any]) -> None:
    envelope = _request(args, "POST", f"/scp/v1/{method}", json_body=params)
    _print_payload(envelope, args.json)


def cmd_profile(args):
    _call_method(args, "getCreatorProfile", {"creator_id": args.creator_id})


def cmd_search(args):
    params: dict[str, Any] = {"query": args.query, "max_results": args.max}
    if args.vertical:
        params["vertical"] = args.vertical
    if args.platform:
        params["platform"] = args.platform
    _call_method(args, "searchCreators", params)


def cmd_content(args):
    params: dict[str, Any] = {"creator_id": args.creator_id, "limit": args.limit}
    if args.topic:
        params["topic"] = args.topic
    if args.platform:
        params["platform"] = args.platform
    _call_method(args, "getCreatorContent", params)


def cmd_score(args):
    _call_method(args, "getCreatorScore", {"creator_id": args.creator_id})


def cmd_verify(args):
    _call_method(args, "verifyAuthenticity", {"content_hash": args.content_hash})


def cmd_log(args):
    params: dict[str, Any] = {"creator_id": args.creator_id}
    if args.since:
        params["since"] = args.since
    if args.until:
        params["until"] = args.until
    _call_method(args, "getAccessLog", params)


def cmd_revoke(args):
    result = _request(args, "POST", f"/scp/v1/creators/{args.creator_id}/revoke")
    _print_payload(result, args.json)
    if not args.json:
        consumers = ", ".join(result["affected_consumers"]) or "no consumers"
        print(
            f"revoked {result['revoked_license_count']} licenses; "
            f"affected: {consumers}",
            file=sys.stderr,
        )


def cmd_revenue(args):
    result = _request(
        args,
        "GET",
        "/scp/v1/reports/revenue",
        params={"from": args.from_ts, "to": args.to_ts, "total": args.total},
    )
    _print_payload(result, args.json)


def cmd_seed(args):
    doc = json.loads(Path(args.file).read_text(encoding="utf-8"))
    result = _request(args, "POST", "/scp/v1/admin/creators", json_body=doc)
    _print_payload(result, args.json)


def cmd_datagen(args):
    doc = write_corpus(args.out, args.seed)
    print(
        f"wrote {args.out}: {len(doc['creators'])} creators, "
        f"{len(doc['platform_accounts'])} accounts, "
        f"{len(doc['content_items'])} content items"
    )


def cmd_bench(args):
    if not args.api_key:
        print("error: no API key (use --api-key or set SCP_API_KEY)", file=sys.stderr)
        raise SystemExit(2)
    report = run_bench(
        args.base_url,
        args.api_key,
        n=args.n,
        warmup=args.warmup,
        concurrency=args.concurrency,
    )
    if args.json:
        print(report_to_json(report))
    else:
        print(format_report(report))
    if report["error"] or not report["all_under_gate"]:
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scp-cli", description=__doc__)
    parser.add_argument("--base-url", default=os.environ.get("SCP_BASE_URL", DEFAULT_BASE_URL))
    parser.add_argument("--api-key", default=os.environ.get("SCP_API_KEY"))
    parser.add_argument("--json", action="store_true", help="emit raw wire-format JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", help="fetch a creator profile")
    p.add_argument("creator_id")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("search", help="search creators by text query")
    p.add_argument("query")
    p.add_argument("--vertical")
    p.add_argument("--platform")
    p.add_argument("--max", type=int, default=10)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("content", help="fetch a creator's content")
    p.add_argument("creator_id")
    p.add_argument("--topic")
    p.add_argument("--platform")
    p.add_argument("--limit", type=int, default=10)
    p.set_defaults(func=cmd_content)

    p = sub.add_parser("score", help="compute value/trust scores")
    p.add_argument("creator_id")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("verify", help="verify a content hash")
    p.add_argument("content_hash")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("log", help="read a creator's access log")
    p.add_argument("creator_id")
    p.add_argument("--since")
    p.add_argument("--until")
    p.set_defaults(func=cmd_log)

    p = sub.add_parser("revoke", help="revoke a creator's consent")
    p.add_argument("creator_id")
    p.set_defaults(func=cmd_revoke)

    p = sub.add_parser("revenue", help="revenue share report for a window")
    p.add_argument("--from", dest="from_ts", required=True)
    p.add_argument("--to", dest="to_ts", required=True)
    p.add_argument("--total", type=float, required=True)
    p.set_defaults(func=cmd_revenue)

    p = sub.add_parser("seed", help="load a seed document into the server")
    p.add_argument("file")
    p.set_defaults(func=cmd_seed)

    p = sub.add_parser("datagen", help="generate a synthetic corpus file")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out", default="seed_data.json")
    p.set_defaults(func=cmd_datagen)

    p = sub.add_parser("bench", help="run the latency benchmark")
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--warmup", type=int, default=5)
    p.add_argument("--concurrency", type=int, default=1)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args.func(args)
    return 0


def server_main(argv: list[str] | None = None) -> int:
    """Launch the HTTP server (config from --config or SCP_CONFIG)."""
    import uvicorn

    from scp.server import create_app

    parser = argparse.ArgumentParser(prog="scp-server")
    parser.add_argument("--config", help="config file path (overrides SCP_CONFIG)")
    parser.add_argument("--host")
    parser.add_argument("--port", type=int)
    args = parser.parse_args(argv)

    if args.config:
        config = ServerConfig.from_file(args.config)
    else:
        config = ServerConfig.from_env()
    if args.host:
        config.host = args.host
    if args.port:
        config.port = args.port

    uvicorn.run(create_app(config), host=config.host, port=config.port, log_level="info")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
