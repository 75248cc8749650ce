"""WebSocket frame service: raw frames in, enhanced frames out.

Endpoint ws://<host>:<port>/frames.  Binary messages carry one frame request
each and are answered in order; the text message "methods" returns the
id/name table as JSON.

Request layout (little-endian):
    offset 0   u8   version, must be 1
    offset 1   u8   method id, 0..6
    offset 2   2B   reserved, must be zero
    offset 4   u32  width
    offset 8   u32  height
    offset 12  3*w*h bytes of interleaved RGB

Response layout (little-endian):
    offset 0   u8   version (1)
    offset 1   u8   method id echoed
    offset 2   u8   status: 0 ok, 1 error
    offset 3   1B   reserved zero
    offset 4   u32  width
    offset 8   u32  height
    offset 12  u64  enhancement time in microseconds (transport excluded)
    offset 20  3*w*h RGB bytes on ok; a UTF-8 reason string on error

Malformed requests get a status=1 response and the connection stays open.
This is a loopback devtool: no TLS, no auth, localhost bind by default.
"""

from __future__ import annotations

import asyncio
import http
import json
import struct
import time

import numpy as np
from websockets.asyncio.server import serve as ws_serve

from .methods import METHOD_NAMES, EnhanceParams, Method, enhance

PROTOCOL_VERSION = 1
HEADER_LEN = 12
RESPONSE_HEADER_LEN = 20
MAX_DIM = 4096
# Large enough for any accepted frame (4096*4096*3 + header) plus room to
# answer moderately oversized declarations with a status=1 reason instead of
# a connection drop.
MAX_MESSAGE_BYTES = 64 * 1024 * 1024

_REQ_DIMS = struct.Struct("<II")
_RESP_HEADER = struct.Struct("<BBBBIIQ")


def methods_json() -> str:
    """The reply to the "methods" text message."""
    return json.dumps([{"id": i, "name": name} for i, name in enumerate(METHOD_NAMES)])


class _BadRequest(Exception):
    def __init__(self, reason: str, method_id: int = 0, width: int = 0, height: int = 0):
        super().__init__(reason)
        self.reason = reason
        self.method_id = method_id
        self.width = width
        self.height = height


def _parse_request(data: bytes) -> tuple[int, np.ndarray]:
    if len(data) < HEADER_LEN:
        raise _BadRequest(f"request shorter than the {HEADER_LEN}-byte header")
    version = data[0]
    method_id = data[1]
    if version != PROTOCOL_VERSION:
        raise _BadRequest(f"unsupported protocol version {version}", method_id)
    if method_id > max(Method):
        raise _BadRequest(f"unknown method id {method_id}")
    if data[2] != 0 or data[3] != 0:
        raise _BadRequest("reserved header bytes must be zero", method_id)
    width, height = _REQ_DIMS.unpack_from(data, 4)
    if width == 0 or height == 0:
        raise _BadRequest("frame dimensions must be >= 1", method_id, width, height)
    if width > MAX_DIM or height > MAX_DIM:
        raise _BadRequest(
            f"frame {width}x{height} exceeds the {MAX_DIM}x{MAX_DIM} limit",
            method_id,
            width,
            height,
        )
    expected = HEADER_LEN + 3 * width * height
    if len(data) != expected:
        raise _BadRequest(
            f"payload length {len(data) - HEADER_LEN} does not match {width}x{height}",
            method_id,
            width,
            height,
        )
    frame = np.frombuffer(data, dtype=np.uint8, offset=HEADER_LEN).reshape(height, width, 3)
    return method_id, frame


def _ok_response(method_id: int, frame: np.ndarray, elapsed_us: int) -> bytes:
    header = _RESP_HEADER.pack(
        PROTOCOL_VERSION, method_id, 0, 0, frame.shape[1], frame.shape[0], elapsed_us
    )
    return header + np.ascontiguousarray(frame).tobytes()


def _error_response(err: _BadRequest) -> bytes:
    header = _RESP_HEADER.pack(
        PROTOCOL_VERSION, err.method_id, 1, 0, err.width, err.height, 0
    )
    return header + err.reason.encode("utf-8")


def process_frame_message(data: bytes, params: EnhanceParams) -> bytes:
    """Handle one binary request, returning the binary response."""
    try:
        method_id, frame = _parse_request(data)
    except _BadRequest as err:
        return _error_response(err)
    t0 = time.perf_counter_ns()
    out = enhance(frame, Method(method_id), params)
    elapsed_us = (time.perf_counter_ns() - t0) // 1000
    return _ok_response(method_id, out, elapsed_us)


def _check_path(connection, request):
    if request.path != "/frames":
        return connection.respond(http.HTTPStatus.NOT_FOUND, "unknown path, connect to /frames\n")
    return None


async def _handle(ws, params: EnhanceParams) -> None:
    # one message at a time: responses leave in request order by construction
    async for message in ws:
        if isinstance(message, str):
            if message == "methods":
                await ws.send(methods_json())
            else:
                await ws.send(json.dumps({"error": f"unknown command {message!r}"}))
        else:
            await ws.send(process_frame_message(message, params))


def make_server(port: int, params: EnhanceParams = EnhanceParams(), host: str = "127.0.0.1"):
    """The configured websocket server as an async context manager.

    Entering it binds the socket; use it directly in async code or via
    :func:`serve` for a blocking run.
    """

    async def handler(ws):
        await _handle(ws, params)

    return ws_serve(
        handler,
        host,
        port,
        process_request=_check_path,
        max_size=MAX_MESSAGE_BYTES,
        compression=None,
    )


def bound_port(server) -> int:
    return server.sockets[0].getsockname()[1]


def serve(port: int = 8765, params: EnhanceParams = EnhanceParams(), host: str = "127.0.0.1") -> None:
    """Run the frame service until interrupted (Ctrl-C)."""

    async def run() -> None:
        async with make_server(port, params, host) as server:
            print(f"frame service listening on ws://{host}:{bound_port(server)}/frames")
            await asyncio.get_running_loop().create_future()

    try:
        asyncio.run(run())
    except KeyboardInterrupt:
        pass
