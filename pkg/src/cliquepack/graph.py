"""Immutable simple graphs with bitset adjacency, clique enumeration,
Turan / complete multipartite constructions, and clone-class detection.

Vertices are 0..n-1. Neighborhoods are stored as integer bitmasks, which
keeps clique extension and clone detection cheap at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import GraphParseError


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]  # adj[v] = bitmask of neighbors of v

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & (1 << v):
                raise ValueError(f"self-loop at vertex {v}")
            if mask & ~full:
                raise ValueError(f"neighbor out of range at vertex {v}")
        for v, mask in enumerate(self.adj):
            rest = mask
            while rest:
                u = (rest & -rest).bit_length() - 1
                if not self.adj[u] & (1 << v):
                    raise ValueError(f"asymmetric adjacency {v},{u}")
                rest &= rest - 1

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, tuple(adj))

    @staticmethod
    def complete(n: int) -> "Graph":
        full = (1 << n) - 1
        return Graph(n, tuple(full ^ (1 << v) for v in range(n)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, lexicographic."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append((u, v))
                rest >>= 1
                v += 1
        return out

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def is_clique(self, verts: Sequence[int]) -> bool:
        return all(self.has_edge(u, v) for u, v in combinations(verts, 2))


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def turan_edge_count(n: int, r: int) -> int:
    """Edge count t_r(n) of the complete r-partite graph with balanced parts."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if r < 1:
        raise ValueError("r must be positive")
    q, rem = divmod(n, r)
    sum_sq = rem * (q + 1) ** 2 + (r - rem) * q**2
    return (n * n - sum_sq) // 2


def normalize_profile(parts: Iterable[int]) -> tuple[int, ...]:
    """Validate part sizes and sort non-increasing."""
    p = tuple(sorted((int(x) for x in parts), reverse=True))
    if not p:
        raise ValueError("profile must have at least one part")
    if p[-1] < 1:
        raise ValueError("part sizes must be positive")
    return p


def balanced_profile(n: int, r: int) -> tuple[int, ...]:
    q, rem = divmod(n, r)
    parts = [q + 1] * rem + [q] * (r - rem)
    return normalize_profile(p for p in parts if p > 0)


def complete_multipartite(profile: Iterable[int]) -> Graph:
    """Parts occupy consecutive vertex blocks, largest part first."""
    parts = normalize_profile(profile)
    n = sum(parts)
    full = (1 << n) - 1
    adj = []
    start = 0
    for size in parts:
        block = ((1 << size) - 1) << start
        for _ in range(size):
            adj.append(full ^ block)
        start += size
    return Graph(n, tuple(adj))


def profile_blocks(profile: Sequence[int]) -> list[range]:
    """Vertex ranges of each part under complete_multipartite labeling."""
    out = []
    start = 0
    for size in profile:
        out.append(range(start, start + size))
        start += size
    return out


def enumerate_cliques(g: Graph, r: int) -> list[tuple[int, ...]]:
    """All r-cliques as increasing vertex tuples, lexicographic order.

    Ordered extension: a partial clique is only grown by common neighbors
    with a higher index, so each clique appears exactly once.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    out: list[tuple[int, ...]] = []
    adj = g.adj

    def extend(prefix: tuple[int, ...], cand: int) -> None:
        if len(prefix) == r:
            out.append(prefix)
            return
        rest = cand
        while rest:
            b = rest & -rest
            v = b.bit_length() - 1
            rest ^= b
            extend(prefix + (v,), cand & adj[v] & ~((1 << (v + 1)) - 1))

    for v in range(g.n):
        extend((v,), adj[v] >> (v + 1) << (v + 1))
    return out


def count_cliques(g: Graph, r: int) -> int:
    if r < 2:
        raise ValueError("r must be at least 2")
    adj = g.adj

    def walk(cand: int, depth: int) -> int:
        if depth == r:
            return 1
        total = 0
        rest = cand
        while rest:
            b = rest & -rest
            v = b.bit_length() - 1
            rest ^= b
            total += walk(cand & adj[v] & ~((1 << (v + 1)) - 1), depth + 1)
        return total

    return walk((1 << g.n) - 1, 0)


def clone_classes(g: Graph) -> list[list[int]]:
    """Partition vertices into maximal sets of pairwise clones.

    Two vertices are clones when non-adjacent with identical neighborhoods;
    equal neighborhood bitmasks already force non-adjacency.
    """
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.adj[v], []).append(v)
    return sorted(groups.values())


def is_complete_multipartite(g: Graph) -> bool:
    """True iff every pair of clone classes is fully joined."""
    classes = clone_classes(g)
    masks = [sum(1 << v for v in cls) for cls in classes]
    for i in range(len(classes)):
        rep = classes[i][0]
        for j in range(i + 1, len(classes)):
            if g.adj[rep] & masks[j] != masks[j]:
                return False
    return True


def multipartite_profile(g: Graph) -> tuple[int, ...]:
    if not is_complete_multipartite(g):
        raise ValueError("graph is not complete multipartite")
    return normalize_profile(len(cls) for cls in clone_classes(g))


# --- graph text format: "n m" header, one "u v" line per edge, '#' comments


def parse_graph(text: str) -> Graph:
    tokens: list[str] = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            tokens.extend(line.split())
    if len(tokens) < 2:
        raise GraphParseError("missing 'n m' header")
    try:
        n, m = int(tokens[0]), int(tokens[1])
    except ValueError as exc:
        raise GraphParseError(f"bad header: {exc}") from None
    if n < 0 or m < 0:
        raise GraphParseError("n and m must be nonnegative")
    body = tokens[2:]
    if len(body) != 2 * m:
        raise GraphParseError(f"expected {2 * m} endpoint tokens, got {len(body)}")
    edges = []
    seen = set()
    for i in range(m):
        try:
            u, v = int(body[2 * i]), int(body[2 * i + 1])
        except ValueError as exc:
            raise GraphParseError(f"bad edge line {i}: {exc}") from None
        if u == v:
            raise GraphParseError(f"self-edge {u} {v}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"edge {u} {v} out of range for n={n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"duplicate edge {u} {v}")
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def load_graph(path) -> Graph:
    from pathlib import Path

    return parse_graph(Path(path).read_text())
