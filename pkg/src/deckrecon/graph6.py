"""Bit-exact graph6 encoder/decoder for graphs on up to 62 vertices.

Format: one printable byte ``n + 63``, then the upper-triangle bit vector
x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit groups,
each group + 63, padded with zero bits.
"""

from __future__ import annotations

from .errors import BadChar, OversizeGraph, TrailingGarbage, TruncatedBits
from .graph import Graph


def emit_graph6(g: Graph) -> str:
    """Encode a labeled graph; labels are preserved exactly."""
    n = g.n
    if n > 62:
        raise OversizeGraph("graph6 single-byte size limit is 62 vertices")
    out = [chr(n + 63)]
    group = 0
    nbits = 0
    for j in range(1, n):
        col = g.rows[j]
        for i in range(j):
            group = group << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(group + 63))
                group = 0
                nbits = 0
    if nbits:
        out.append(chr((group << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line into a labeled Graph."""
    if not line:
        raise TruncatedBits("empty graph6 line")
    codes = []
    for ch in line:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise BadChar(f"byte {c!r} outside graph6 range 63..126")
        codes.append(c - 63)
    n = codes[0]
    if n == 63:
        raise BadChar("multi-byte graph6 sizes are not supported (n > 62)")
    if n < 1:
        raise BadChar("graph6 vertex count must be at least 1")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    data = codes[1:]
    if len(data) < need:
        raise TruncatedBits(f"need {need} data bytes for n={n}, got {len(data)}")
    if len(data) > need:
        raise TrailingGarbage(f"{len(data) - need} extra bytes after graph data")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if data[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need and data[-1] & ((1 << (6 * need - nbits)) - 1):
        raise TrailingGarbage("nonzero padding bits")
    return Graph(n, rows)


def read_graph6_file(path) -> list:
    """Parse a file of one graph6 line per graph; blank lines are skipped."""
    graphs = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line.startswith(">>graph6<<"):
                line = line[len(">>graph6<<"):].strip()
            if line:
                graphs.append(parse_graph6(line))
    return graphs
