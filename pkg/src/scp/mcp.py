"""JSON-RPC 2.0 stdio adapter exposing the protocol to LLM tool hosts.

Five methods surface as callable tools; the access log surfaces as a
readable resource at scp://audit/{creator_id}. Tool results carry the
server's response envelope verbatim under the "envelope" key: stripping
attribution or license data here would defeat the protocol, so the
adapter never rewrites, caches, or summarizes what the server returned.

The adapter is a thin HTTP client. It holds one API key (from config)
and forwards every call with it; authorization decisions stay on the
server.
"""

import argparse
import json
import os
import re
import sys
from typing import Any

import httpx
import jsonschema

PARSE_ERROR = -32700
INVALID_REQUEST = -32600
METHOD_NOT_FOUND = -32601
INVALID_PARAMS = -32602
SERVER_ERROR = -32000

AUDIT_URI_RE = re.compile(r"^scp://audit/([A-Za-z0-9._-]+)$")

_CREATOR_ID = {"type": "string", "minLength": 1}

TOOLS: list[dict[str, Any]] = [
    {
        "name": "scp_get_profile",
        "method": "getCreatorProfile",
        "description": (
            "Fetch a creator's profile: display name, bio, verticals, linked "
            "platform accounts, and current value/trust scores. Use when you "
            "need background on a specific creator you already have an ID for."
        ),
        "inputSchema": {
            "type": "object",
            "properties": {"creator_id": _CREATOR_ID},
            "required": ["creator_id"],
            "additionalProperties": False,
        },
    },
    {
        "name": "scp_search",
        "method": "searchCreators",
        "description": (
            "Search for creators by free-text topic query, optionally filtered "
            "by vertical or platform. Returns ranked creators with their best "
            "matching content. Use to discover which creators cover a subject."
        ),
        "inputSchema": {
            "type": "object",
            "properties": {
                "query": {"type": "string", "minLength": 1},
                "vertical": {"type": "string", "minLength": 1},
                "platform": {"type": "string", "minLength": 1},
                "max_results": {"type": "integer", "minimum": 1},
            },
            "required": ["query"],
            "additionalProperties": False,
        },
    },
    {
        "name": "scp_get_content",
        "method": "getCreatorContent",
        "description": (
            "Retrieve a creator's content items, newest first, or ranked by "
            "relevance when a topic is given. Each item includes its body, "
            "content hash, and byte size. This is the licensed way to read a "
            "creator's published material."
        ),
        "inputSchema": {
            "type": "object",
            "properties": {
                "creator_id": _CREATOR_ID,
                "platform": {"type": "string", "minLength": 1},
                "topic": {"type": "string", "minLength": 1},
                "limit": {"type": "integer", "minimum": 1},
            },
            "required": ["creator_id"],
            "additionalProperties": False,
        },
    },
    {
        "name": "scp_get_score",
        "method": "getCreatorScore",
        "description": (
            "Compute a creator's value score (reach, engagement, consistency, "
            "cross-platform presence) and trust score (account age, posting "
            "regularity, cross-platform consistency) with a factor breakdown."
        ),
        "inputSchema": {
            "type": "object",
            "properties": {"creator_id": _CREATOR_ID},
            "required": ["creator_id"],
            "additionalProperties": False,
        },
    },
    {
        "name": "scp_verify",
        "method": "verifyAuthenticity",
        "description": (
            "Check whether a SHA-256 content hash matches a registered content "
            "item. Returns the owning creator and publication date when it "
            "does. Use to confirm a piece of text really came from a creator."
        ),
        "inputSchema": {
            "type": "object",
            "properties": {
                "content_hash": {"type": "string", "pattern": "^[0-9a-f]{64}$"}
            },
            "required": ["content_hash"],
            "additionalProperties": False,
        },
    },
]

TOOL_INDEX = {tool["name"]: tool for tool in TOOLS}


class RpcError(Exception):
    def __init__(self, code: int, message: str, data: Any = None):
        super().__init__(message)
        self.code = code
        self.message = message
        self.data = data


class ScpToolAdapter:
    """Bridges JSON-RPC requests to the REST server.

    A preconfigured httpx client may be injected (tests use an in-process
    ASGI transport); otherwise a real network client is built.
    """

    def __init__(self, base_url: str, api_key: str, client: httpx.Client | None = None):
        self.base_url = base_url.rstrip("/")
        self.api_key = api_key
        self.client = client or httpx.Client(base_url=self.base_url, timeout=30.0)

    def close(self) -> None:
        self.client.close()

    def _call_server(self, method: str, params: dict[str, Any]) -> dict[str, Any]:
        try:
            response = self.client.post(
                f"/scp/v1/{method}",
                json=params,
                headers={"X-SCP-API-Key": self.api_key},
            )
        except httpx.HTTPError as exc:
            raise RpcError(SERVER_ERROR, f"transport failure: {exc}") from exc
        body = response.json()
        if response.status_code != 200:
            raise RpcError(
                SERVER_ERROR,
                f"server rejected {method} with status {response.status_code}",
                data={"status": response.status_code, "error": body.get("error")},
            )
        return body

    # -- JSON-RPC methods ------------------------------------------------------

    def initialize(self, params: dict[str, Any]) -> dict[str, Any]:
        return {
            "protocolVersion": "2024-11-05",
            "serverInfo": {"name": "scp-adapter", "version": "1.0"},
            "capabilities": {"tools": {}, "resources": {}},
        }

    def list_tools(self, params: dict[str, Any]) -> dict[str, Any]:
        return {
            "tools": [
                {
                    "name": t["name"],
                    "description": t["description"],
                    "inputSchema": t["inputSchema"],
                }
                for t in TOOLS
            ]
        }

    def call_tool(self, params: dict[str, Any]) -> dict[str, Any]:
        name = params.get("name")
        arguments = params.get("arguments") or {}
        tool = TOOL_INDEX.get(name)
        if tool is None:
            raise RpcError(METHOD_NOT_FOUND, f"unknown tool: {name}")
        try:
            jsonschema.validate(arguments, tool["inputSchema"])
        except jsonschema.ValidationError as exc:
            raise RpcError(INVALID_PARAMS, f"invalid arguments: {exc.message}") from exc
        envelope = self._call_server(tool["method"], arguments)
        return {
            "content": [{"type": "text", "text": json.dumps(envelope)}],
            "envelope": envelope,
        }

    def read_resource(self, params: dict[str, Any]) -> dict[str, Any]:
        uri = params.get("uri", "")
        match = AUDIT_URI_RE.match(uri)
        if not match:
            raise RpcError(INVALID_PARAMS, f"unsupported resource uri: {uri}")
        envelope = self._call_server("getAccessLog", {"creator_id": match.group(1)})
        return {
            "contents": [
                {
                    "uri": uri,
                    "mimeType": "application/json",
                    "text": json.dumps(envelope),
                }
            ],
            "envelope": envelope,
        }

    # -- dispatch --------------------------------------------------------------

    def handle(self, request: dict[str, Any]) -> dict[str, Any] | None:
        """Handle one request object; returns None for notifications."""
        request_id = request.get("id")
        is_notification = "id" not in request
        try:
            if request.get("jsonrpc") != "2.0" or not isinstance(request.get("method"), str):
                raise RpcError(INVALID_REQUEST, "not a JSON-RPC 2.0 request")
            method = request["method"]
            params = request.get("params") or {}
            if method == "initialize":
                result = self.initialize(params)
            elif method == "tools/list":
                result = self.list_tools(params)
            elif method == "tools/call":
                result = self.call_tool(params)
            elif method == "resources/read":
                result = self.read_resource(params)
            else:
                raise RpcError(METHOD_NOT_FOUND, f"unknown method: {method}")
        except RpcError as exc:
            if is_notification:
                return None
            error: dict[str, Any] = {"code": exc.code, "message": exc.message}
            if exc.data is not None:
                error["data"] = exc.data
            return {"jsonrpc": "2.0", "id": request_id, "error": error}
        if is_notification:
            return None
        return {"jsonrpc": "2.0", "id": request_id, "result": result}

    def serve_stdio(self, stdin=None, stdout=None) -> None:
        """Line-delimited request loop; one JSON object per line."""
        stdin = stdin or sys.stdin
        stdout = stdout or sys.stdout
        for line in stdin:
            line = line.strip()
            if not line:
                continue
            try:
                request = json.loads(line)
            except json.JSONDecodeError:
                response = {
                    "jsonrpc": "2.0",
                    "id": None,
                    "error": {"code": PARSE_ERROR, "message": "parse error"},
                }
            else:
                response = self.handle(request)
            if response is not None:
                stdout.write(json.dumps(response) + "\n")
                stdout.flush()


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="scp-mcp", description="JSON-RPC tool adapter for an SCP server"
    )
    parser.add_argument(
        "--base-url",
        default=os.environ.get("SCP_BASE_URL", "http://127.0.0.1:8420"),
        help="SCP server base URL",
    )
    parser.add_argument(
        "--api-key",
        default=os.environ.get("SCP_API_KEY"),
        help="API key forwarded with every call (or set SCP_API_KEY)",
    )
    args = parser.parse_args(argv)
    if not args.api_key:
        parser.error("an API key is required (--api-key or SCP_API_KEY)")
    adapter = ScpToolAdapter(args.base_url, args.api_key)
    try:
        adapter.serve_stdio()
    finally:
        adapter.close()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
