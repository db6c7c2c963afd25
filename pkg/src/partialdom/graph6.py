"""graph6 reader and writer.

Layout: an order prefix, then the upper triangle of the adjacency matrix in
column order (0,1), (0,2), (1,2), (0,3), ... packed six bits per byte, most
significant bit first, each byte offset by 63.  Orders up to 62 take one
prefix byte; larger orders use ``~`` followed by three bytes (18 bits).
"""

from __future__ import annotations

from typing import Union

from .graph import MAX_ORDER, Graph

HEADER = b">>graph6<<"

Text = Union[bytes, str]


class Graph6Error(ValueError):
    pass


def _as_bytes(text: Text) -> bytes:
    if isinstance(text, str):
        try:
            return text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("graph6 text must be printable ASCII") from exc
    return bytes(text)


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    raise Graph6Error(f"order {n} too large for graph6")


def _bits(body: bytes):
    for byte in body:
        value = byte - 63
        for shift in range(5, -1, -1):
            yield value >> shift & 1


def parse_graph6(text: Text) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` header is accepted)."""
    data = _as_bytes(text).rstrip(b"\r\n")
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if data[:1] in (b":", b"&") or data.startswith((b">>sparse6<<", b">>digraph6<<")):
        raise Graph6Error("sparse6/digraph6 input is not supported, only graph6")
    if not data:
        raise Graph6Error("empty graph6 line")
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} at offset {pos} is not a graph6 character")

    if data[0] != 126:
        n, body = data[0] - 63, data[1:]
    else:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("8-byte order prefix exceeds the supported order")
        if len(data) < 4:
            raise Graph6Error("truncated order prefix")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        if n <= 62:
            raise Graph6Error("non-minimal order prefix")
        body = data[4:]
    if n < 1:
        raise Graph6Error("graph6 order 0 is not a supported graph")
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds the supported maximum {MAX_ORDER}")

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) < expected:
        raise Graph6Error(f"truncated adjacency data: {len(body)} of {expected} bytes")
    if len(body) > expected:
        raise Graph6Error(f"{len(body) - expected} trailing bytes after adjacency data")

    pad = 6 * expected - nbits
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")

    rows = [0] * n
    stream = _bits(body)
    for j in range(1, n):
        for i in range(j):
            if next(stream):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def write_graph6(g: Graph) -> bytes:
    """Canonical graph6 encoding: no header, minimal prefix, zero padding."""
    n = g.n
    bits = []
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            bits.append(col >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = bytearray(_encode_order(n))
    for start in range(0, len(bits), 6):
        value = 0
        for b in bits[start:start + 6]:
            value = value << 1 | b
        out.append(63 + value)
    return bytes(out)


def read_graph6_lines(lines):
    """Yield ``(line_number, stripped_bytes)`` for every non-blank line."""
    for number, raw in enumerate(lines, start=1):
        line = _as_bytes(raw).strip()
        if line:
            yield number, line


__all__ = [
    "Graph6Error",
    "HEADER",
    "parse_graph6",
    "write_graph6",
    "read_graph6_lines",
]
