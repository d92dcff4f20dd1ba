"""graph6 codec for graphs on 1..64 vertices.

graph6 is the standard printable-ASCII interchange format for undirected
simple graphs.  A line is a size header followed by the upper triangle
of the adjacency matrix, read column by column (x_{0,1}, x_{0,2},
x_{1,2}, x_{0,3}, ...), packed six bits per character MSB-first, each
six-bit group stored as chr(value + 63).  Sizes up to 62 use the single
header byte chr(n + 63); 63 and 64 use chr(126) followed by three bytes
carrying an 18-bit big-endian value.  Unused trailing bits must be zero.
"""

from __future__ import annotations

from .graphs import Graph

HEADER_PREFIX = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def _payload_len(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def emit_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 line (no trailing newline)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        # 126-prefixed 18-bit size; this codec never needs the 36-bit form
        head = chr(126) + chr((n >> 12) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    out = [head]
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(acc + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line.  Raises Graph6Error on any malformation.

    Accepts an optional ">>graph6<<" prefix and surrounding whitespace.
    Rejects: empty input, characters outside chr(63)..chr(126), truncated
    or overlong payloads, sizes outside 1..64, and nonzero padding bits.
    """
    s = text.strip()
    if s.startswith(HEADER_PREFIX):
        s = s[len(HEADER_PREFIX):]
    if not s:
        raise Graph6Error("empty graph6 string")
    vals = []
    for ch in s:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range")
        vals.append(o - 63)

    if vals[0] < 63:
        n = vals[0]
        data = vals[1:]
    else:
        # chr(126) prefix: next three bytes hold an 18-bit size
        if len(vals) >= 2 and vals[1] == 63:
            raise Graph6Error("graphs beyond 64 vertices are not supported")
        if len(vals) < 4:
            raise Graph6Error("truncated extended size header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        data = vals[4:]
    if n == 0:
        raise Graph6Error("graph6 size 0 is outside the supported range 1..64")
    if n > 64:
        raise Graph6Error(f"graph6 size {n} exceeds the supported maximum 64")

    need = _payload_len(n)
    if len(data) != need:
        raise Graph6Error(f"payload has {len(data)} characters, expected {need} for n={n}")

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (data[k // 6] >> (5 - k % 6)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    # every bit after the triangle must be zero padding
    if need and data[-1] & ((1 << (6 * need - k)) - 1):
        raise Graph6Error("nonzero padding bits")
    return Graph(n, adj)
