"""graph6 reading and writing.

Format (McKay): a length field N(n) followed by the upper triangle of the
adjacency matrix, column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...),
packed six bits per byte, most significant first, zero padded, each byte
offset by 63.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import MAX_ORDER, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 text; ``offset`` is the index of the offending byte."""

    def __init__(self, msg: str, offset: int):
        super().__init__(f"{msg} (byte offset {offset})")
        self.offset = offset


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: Graph) -> str:
    n = g.n
    out = bytearray(_encode_n(n))
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", exc.start) from None
    else:
        data = bytes(text)
    data = data.rstrip(b"\r\n")
    pos = 0
    if data.startswith(HEADER.encode()):
        pos = len(HEADER)
    if pos >= len(data):
        raise Graph6Error("empty graph6 string", pos)
    for i in range(pos, len(data)):
        if not 63 <= data[i] <= 126:
            raise Graph6Error(f"byte {data[i]!r} outside 63..126", i)

    if data[pos] < 126:
        n = data[pos] - 63
        pos += 1
    elif pos + 1 < len(data) and data[pos + 1] == 126:
        if pos + 8 > len(data):
            raise Graph6Error("truncated 8-byte order field", len(data))
        n = 0
        for b in data[pos + 2 : pos + 8]:
            n = (n << 6) | (b - 63)
        pos += 8
    else:
        if pos + 4 > len(data):
            raise Graph6Error("truncated 4-byte order field", len(data))
        n = 0
        for b in data[pos + 1 : pos + 4]:
            n = (n << 6) | (b - 63)
        pos += 4
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds {MAX_ORDER}", 0)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = data[pos:]
    if len(payload) < nbytes:
        raise Graph6Error(f"truncated payload: need {nbytes} bytes, have {len(payload)}", len(data))
    if len(payload) > nbytes:
        raise Graph6Error("trailing garbage after payload", pos + nbytes)
    if nbits % 6 and nbytes:
        pad = 6 - nbits % 6
        if (payload[-1] - 63) & ((1 << pad) - 1):
            raise Graph6Error("non-zero padding bits", pos + nbytes - 1)

    adj = [0] * n
    k = 0
    i, j = 0, 1
    for b in payload:
        v = b - 63
        for shift in range(5, -1, -1):
            if k == nbits:
                break
            if (v >> shift) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph(n, adj, check=False)


def read_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse one graph per non-blank line."""
    for line in lines:
        line = line.strip()
        if line:
            yield from_graph6(line)


def write_graph6(graphs: Iterable[Graph], fh: TextIO) -> int:
    count = 0
    for g in graphs:
        fh.write(to_graph6(g))
        fh.write("\n")
        count += 1
    return count
