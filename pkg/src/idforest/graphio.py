"""Graph serialization: the graph6 format (n <= 62) and a plain edge list.

graph6 layout, bit-exact per the published format: one header byte n+63,
then the upper triangle of the adjacency matrix read column by column
(pairs (0,1), (0,2), (1,2), (0,3), ...), packed big-endian six bits per
byte, each byte offset by 63, zero-padded to a byte boundary.

The edge-list format is line oriented: a header line "n m", then m lines
"u v" with 0-indexed endpoints.
"""

from __future__ import annotations

from .errors import Graph6ParseError, SizeLimitError
from .graph import Graph

GRAPH6_MAX_VERTICES = 62


def _pairs(n: int):
    for j in range(1, n):
        for i in range(j):
            yield i, j


def graph6_bytes(g: Graph) -> bytes:
    if g.n > GRAPH6_MAX_VERTICES:
        raise SizeLimitError(
            f"graph6 encoder supports up to {GRAPH6_MAX_VERTICES} vertices, got {g.n}")
    out = [g.n + 63]
    acc = 0
    nbits = 0
    for i, j in _pairs(g.n):
        acc = (acc << 1) | (1 if (i, j) in g.edges else 0)
        nbits += 1
        if nbits == 6:
            out.append(acc + 63)
            acc, nbits = 0, 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def graph6_str(g: Graph) -> str:
    return graph6_bytes(g).decode("ascii")


def graph6_to_graph(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.rstrip(b"\r\n")
    if not data:
        raise Graph6ParseError("empty graph6 input", 0)
    header = data[0]
    if header == 126:
        raise Graph6ParseError("multi-byte graph6 sizes (n > 62) not supported", 0)
    if not (63 <= header <= 125):
        raise Graph6ParseError(f"header byte {header} outside graph6 range", 0)
    n = header - 63
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    if len(data) - 1 != need_bytes:
        raise Graph6ParseError(
            f"expected {need_bytes} payload bytes for n={n}, got {len(data) - 1}",
            min(len(data), need_bytes + 1))
    bits = 0
    for off, byte in enumerate(data[1:], start=1):
        if not (63 <= byte <= 126):
            raise Graph6ParseError(f"payload byte {byte} outside graph6 range", off)
        bits = (bits << 6) | (byte - 63)
    pad = need_bytes * 6 - need_bits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6ParseError("nonzero padding bits", len(data) - 1)
    bits >>= pad
    edges = []
    for k, (i, j) in enumerate(_pairs(n)):
        if (bits >> (need_bits - 1 - k)) & 1:
            edges.append((i, j))
    return Graph(n, edges)


def edge_list_str(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def edge_list_to_graph(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"edge-list header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"edge-list header must be two integers, got {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise ValueError(f"header announces {m} edges but {len(lines) - 1} lines follow")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"edge line must be 'u v', got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)
