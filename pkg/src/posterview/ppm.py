"""Binary P6 pixmap codec, the only raster format the toolkit reads or writes.

Writing always emits the canonical header ``P6\\n<w> <h>\\n255\\n`` followed by
raw RGB bytes, so write(read(x)) == x for canonical files and
read(write(f)) == f for every frame.  Reading accepts the general P6 header
grammar (arbitrary whitespace runs and ``#`` comments between tokens).
"""

from __future__ import annotations

import numpy as np

from .core import ensure_frame


class PpmError(ValueError):
    """Base class for P6 parse failures."""


class PpmMagicError(PpmError):
    """The file does not start with the P6 magic."""


class PpmHeaderError(PpmError):
    """Width, height, or maxval is missing or malformed."""


class PpmMaxvalError(PpmError):
    """The maxval is not 255 (the only supported depth)."""


class PpmPayloadError(PpmError):
    """The pixel payload does not match width * height * 3 bytes."""


_WHITESPACE = b" \t\n\r\v\f"


def _next_token(data: bytes, pos: int) -> tuple[bytes, int]:
    """Return the next header token and the offset just past it.

    Skips whitespace and ``#``-to-end-of-line comments.
    """
    n = len(data)
    while pos < n:
        ch = data[pos : pos + 1]
        if ch in (b"#",):
            while pos < n and data[pos : pos + 1] not in (b"\n", b"\r"):
                pos += 1
        elif ch in _WHITESPACE:
            pos += 1
        else:
            break
    start = pos
    while pos < n and data[pos : pos + 1] not in _WHITESPACE and data[pos : pos + 1] != b"#":
        pos += 1
    if start == pos:
        raise PpmHeaderError("unexpected end of header")
    return data[start:pos], pos


def _parse_int(token: bytes, what: str) -> int:
    if not token.isdigit():
        raise PpmHeaderError(f"{what} is not a decimal integer: {token!r}")
    return int(token)


def read_ppm(data: bytes) -> np.ndarray:
    """Decode binary P6 bytes into an RGB frame."""
    if not data.startswith(b"P6"):
        raise PpmMagicError(f"not a P6 pixmap (magic {data[:2]!r})")
    pos = 2
    if pos < len(data) and data[pos : pos + 1] not in _WHITESPACE and data[pos : pos + 1] != b"#":
        raise PpmMagicError("P6 magic must be followed by whitespace")
    tok, pos = _next_token(data, pos)
    width = _parse_int(tok, "width")
    tok, pos = _next_token(data, pos)
    height = _parse_int(tok, "height")
    tok, pos = _next_token(data, pos)
    maxval = _parse_int(tok, "maxval")
    if width < 1 or height < 1:
        raise PpmHeaderError(f"dimensions must be >= 1, got {width}x{height}")
    if maxval != 255:
        raise PpmMaxvalError(f"maxval {maxval} unsupported, only 255")
    # exactly one whitespace byte separates the header from the payload
    if pos >= len(data) or data[pos : pos + 1] not in _WHITESPACE:
        raise PpmHeaderError("missing whitespace after maxval")
    pos += 1
    expected = 3 * width * height
    payload = data[pos:]
    if len(payload) < expected:
        raise PpmPayloadError(f"payload truncated: need {expected} bytes, have {len(payload)}")
    if len(payload) > expected:
        raise PpmPayloadError(f"{len(payload) - expected} trailing bytes after payload")
    frame = np.frombuffer(payload, dtype=np.uint8).reshape(height, width, 3)
    return frame.copy()


def write_ppm(frame: np.ndarray) -> bytes:
    """Encode an RGB frame as canonical binary P6 bytes."""
    ensure_frame(frame)
    height, width = frame.shape[:2]
    header = f"P6\n{width} {height}\n255\n".encode("ascii")
    return header + np.ascontiguousarray(frame).tobytes()
