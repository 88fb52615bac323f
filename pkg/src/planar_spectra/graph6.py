"""graph6 encoding and decoding.

Follows the format description shipped with nauty (``formats.txt``):
a size field ``N(n)`` followed by the upper triangle of the adjacency
matrix, column by column, packed six bits per printable byte.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .errors import Graph6ParseError
from .graph import Graph

HEADER = ">>graph6<<"
_SHORT_MAX = 62
_MEDIUM_MAX = 258047
_LONG_MAX = 68719476735


def _size_field(n: int) -> str:
    if n <= _SHORT_MAX:
        return chr(n + 63)
    if n <= _MEDIUM_MAX:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= _LONG_MAX:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"order {n} too large for graph6")


def graph6_encode(g: Graph) -> str:
    n = g.n
    bits = []
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            bits.append(1 if i in row else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        b = bits[k : k + 6]
        body.append(chr(63 + (b[0] << 5 | b[1] << 4 | b[2] << 3 | b[3] << 2 | b[4] << 1 | b[5])))
    return _size_field(n) + "".join(body)


def graph6_decode(text: str) -> Graph:
    """Parse one graph6 line; an optional ``>>graph6<<`` header is skipped."""
    s = text.rstrip("\n")
    base = 0
    if s.startswith(HEADER):
        base = len(HEADER)
        s = s[base:]
    if not s:
        raise Graph6ParseError("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"invalid graph6 byte {ch!r}", base + i)

    def word(start: int, count: int) -> int:
        if len(s) < start + count:
            raise Graph6ParseError("truncated size field", base + len(s))
        val = 0
        for ch in s[start : start + count]:
            val = (val << 6) | (ord(ch) - 63)
        return val

    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    elif len(s) > 1 and s[1] == "~":
        n, pos = word(2, 6), 8
        if n <= _MEDIUM_MAX:
            raise Graph6ParseError("non-canonical 8-byte size field", base)
    else:
        n, pos = word(1, 3), 4
        if n <= _SHORT_MAX:
            raise Graph6ParseError("non-canonical 4-byte size field", base)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(s) - pos
    if have != need:
        off = base + pos + min(have, need)
        raise Graph6ParseError(f"expected {need} data bytes for n={n}, found {have}", off)

    rows: list[list[int]] = [[] for _ in range(n)]
    k = 0
    i, j = 0, 1
    for byte_index in range(need):
        val = ord(s[pos + byte_index]) - 63
        for shift in range(5, -1, -1):
            bit = (val >> shift) & 1
            if k < nbits:
                if bit:
                    rows[i].append(j)
                    rows[j].append(i)
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif bit:
                raise Graph6ParseError("nonzero padding bits", base + pos + byte_index)
            k += 1
    return Graph(n, tuple(tuple(sorted(r)) for r in rows))


def read_graph6(path: str | Path) -> Iterator[tuple[int, str, Graph | Graph6ParseError]]:
    """Yield ``(line_number, text, graph_or_error)`` for each non-blank line."""
    with open(path, encoding="ascii", errors="surrogateescape") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                continue
            try:
                yield lineno, text, graph6_decode(text)
            except Graph6ParseError as exc:
                yield lineno, text, exc


def write_graph6(path: str | Path, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for g in graphs:
            fh.write(graph6_encode(g) + "\n")
            count += 1
    return count
