"""Bit-exact graph6 encoder/decoder.

Layout: N(n) followed by the upper adjacency triangle read column by
column ((0,1), (0,2), (1,2), (0,3), ...), packed into 6-bit groups,
each group printed as chr(value + 63).
"""

from __future__ import annotations

from .graph import Graph, GraphError

_HEADER = ">>graph6<<"
_MAX_N = 258047  # largest order expressible with the 4-byte size prefix


class Graph6Error(GraphError):
    """Malformed graph6 input; carries the byte offset of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= _MAX_N:
        return "~" + "".join(chr(((n >> s) & 0x3F) + 63) for s in (12, 6, 0))
    raise GraphError(f"graph6 order limit is {_MAX_N}, got {n}")


def encode(g: Graph) -> str:
    out = [_encode_size(g.n)]
    buf = 0
    nbits = 0
    for col in range(1, g.n):
        column = g.adj[col]
        for row in range(col):
            buf = (buf << 1) | (column >> row & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(buf + 63))
                buf = 0
                nbits = 0
    if nbits:
        out.append(chr((buf << (6 - nbits)) + 63))
    return "".join(out)


def decode(line: str) -> Graph:
    s = line.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 line", 0)
    for i, ch in enumerate(s):
        if not (63 <= ord(ch) <= 126):
            raise Graph6Error(f"byte {ord(ch)} outside graph6 range 63..126", i)

    pos = 0
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise Graph6Error("orders beyond 258047 are not supported", 1)
        if len(s) < 4:
            raise Graph6Error("truncated size prefix", len(s))
        n = 0
        for i in range(1, 4):
            n = (n << 6) | (ord(s[i]) - 63)
        pos = 4
    else:
        n = ord(s[0]) - 63
        pos = 1

    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    if len(s) - pos != need_bytes:
        raise Graph6Error(
            f"expected {need_bytes} adjacency bytes for n={n}, found {len(s) - pos}",
            min(pos + need_bytes, len(s)),
        )

    adj = [0] * n
    bit = 0
    for i in range(need_bytes):
        group = ord(s[pos + i]) - 63
        for k in range(5, -1, -1):
            if bit >= need_bits:
                if group >> k & 1:
                    raise Graph6Error("nonzero padding bits", pos + i)
                continue
            if group >> k & 1:
                row, col = _triangle_coords(bit)
                adj[row] |= 1 << col
                adj[col] |= 1 << row
            bit += 1
    return Graph(n, tuple(adj))


def _triangle_coords(bit: int) -> tuple[int, int]:
    # bit index -> (row, col) in column-major upper-triangle order
    col = 1
    base = 0
    while base + col <= bit:
        base += col
        col += 1
    return bit - base, col


def encode_many(graphs) -> str:
    return "".join(encode(g) + "\n" for g in graphs)


def decode_many(text: str) -> list[Graph]:
    return [decode(ln) for ln in text.splitlines() if ln.strip()]
