"""graph6 text codec.

Standard format: the header encodes n (one byte n+63 for n <= 62, or '~'
plus three bytes for 63 <= n <= 258047), followed by the upper-triangle
adjacency bits in column-major order (x01, x02, x12, x03, ...) packed six
bits per character, each character value offset by 63. Unused padding bits
must be zero.
"""

from __future__ import annotations

from .graphs import Graph

__all__ = [
    "Graph6Error",
    "graph6_encode",
    "graph6_decode",
    "read_graph6_lines",
    "write_graph6_lines",
]

_MAX_N = 258047


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the zero-based byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def graph6_encode(g: Graph) -> str:
    n = g.n
    if n <= 62:
        header = chr(n + 63)
    elif n <= _MAX_N:
        header = "~" + "".join(
            chr(((n >> shift) & 0x3F) + 63) for shift in (12, 6, 0)
        )
    else:
        raise ValueError(f"graph too large for graph6 encoding: n={n}")

    chunks = []
    acc = 0
    nbits = 0
    for v in range(1, n):
        for u in range(v):
            acc = (acc << 1) | (1 if g.adjacent(u, v) else 0)
            nbits += 1
            if nbits == 6:
                chunks.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        chunks.append(chr((acc << (6 - nbits)) + 63))
    return header + "".join(chunks)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126", i)

    pos = 0
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise Graph6Error("8-byte order header exceeds supported range", 0)
        if len(s) < 4:
            raise Graph6Error("truncated extended order header", len(s))
        n = 0
        for i in range(1, 4):
            n = (n << 6) | (ord(s[i]) - 63)
        pos = 4
        if n <= 62:
            raise Graph6Error("extended header used for order <= 62", 0)
    else:
        n = ord(s[0]) - 63
        pos = 1

    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = s[pos:]
    if len(body) != nchars:
        raise Graph6Error(
            f"body length {len(body)} != expected {nchars} for order {n}",
            pos + min(len(body), nchars),
        )

    bits = 0
    for ch in body:
        bits = (bits << 6) | (ord(ch) - 63)
    pad = nchars * 6 - nbits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", pos + nchars - 1)
    bits >>= pad

    edges = []
    index = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if (bits >> index) & 1:
                edges.append((u, v))
            index -= 1
    return Graph(n, edges)


def read_graph6_lines(text: str) -> list[Graph]:
    """Decode a newline-delimited multi-graph document."""
    return [graph6_decode(line) for line in text.splitlines() if line.strip()]


def write_graph6_lines(graphs: list[Graph]) -> str:
    return "".join(graph6_encode(g) + "\n" for g in graphs)
