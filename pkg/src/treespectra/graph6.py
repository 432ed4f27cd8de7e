"""graph6 encoding of trees and newline-delimited graph6 files."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .trees import Tree, TreeError


class Graph6Error(ValueError):
    pass


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    raise Graph6Error(f"n={n} too large for graph6")


def encode(t: Tree) -> str:
    n = t.n
    bits = []
    for j in range(1, n):
        nbrs = t.adjacency[j]
        for i in range(j):
            bits.append(1 if i in nbrs else 0)
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + sum(b << (5 - k) for k, b in enumerate(bits[p:p + 6]))
        for p in range(0, len(bits), 6)
    )
    return (_encode_n(n) + body).decode("ascii")


def decode(s: str | bytes) -> Tree:
    """Decode one graph6 string into a Tree (raises if the graph is not a tree)."""
    data = s.encode("ascii") if isinstance(s, str) else bytes(s)
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data or any(c < 63 or c > 126 for c in data):
        raise Graph6Error(f"malformed graph6 string {s!r}")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise Graph6Error("unsupported graph6 size header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise Graph6Error(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = [((c - 63) >> (5 - k)) & 1 for c in body for k in range(6)]
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    try:
        return Tree.from_edges(n, edges)
    except TreeError as exc:
        raise Graph6Error(f"graph6 input is not a tree: {exc}") from exc


def write_file(path: str | Path, trees: Iterable[Tree]) -> int:
    count = 0
    with open(path, "w") as fh:
        for t in trees:
            fh.write(encode(t) + "\n")
            count += 1
    return count


def read_file(path: str | Path) -> Iterator[Tree]:
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield decode(line)
