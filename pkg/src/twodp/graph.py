"""Simple undirected graphs over dense integer ids, and restricted searches.

Every other module builds on the three search primitives here: components
of ``G - X`` with their incidences to ``X`` (an *X-search*), restricted
paths, and C-paths between non-consecutive vertices of a cycle.
"""

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from . import kernels

FORBIDDEN = -1

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph construction or edit (self-loop, out-of-range id, ...)."""


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the ascending tuple of neighbours of ``v``. Edits return
    new graphs; the search kernel for a graph is built lazily and cached.
    """

    __slots__ = ("adj", "_searcher", "_m")

    def __init__(self, adj: Sequence[Sequence[int]], *, check: bool = True) -> None:
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in adj)
        self._searcher = None
        self._m = -1
        if check:
            self._validate()

    def _validate(self) -> None:
        n = len(self.adj)
        for u, row in enumerate(self.adj):
            prev = -1
            for v in row:
                if not 0 <= v < n:
                    raise GraphError(f"neighbour {v} of {u} out of range")
                if v == u:
                    raise GraphError(f"self-loop at {u}")
                if v <= prev:
                    raise GraphError(f"adjacency of {u} not strictly ascending")
                prev = v
                if not self.has_edge(v, u):
                    raise GraphError(f"edge {u}-{v} not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], *, allow_duplicates: bool = True) -> Graph:
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if v in rows[u] and not allow_duplicates:
                raise GraphError(f"duplicate edge {u}-{v}")
            rows[u].add(v)
            rows[v].add(u)
        return cls([sorted(r) for r in rows], check=False)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls([()] * n, check=False)

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        if self._m < 0:
            self._m = sum(len(r) for r in self.adj) // 2
        return self._m

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adj[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def edges(self) -> list[Edge]:
        return [(u, v) for u, row in enumerate(self.adj) for v in row if u < v]

    @property
    def searcher(self):
        if self._searcher is None:
            self._searcher = kernels.Searcher(self.adj)
        return self._searcher

    def with_edges(self, add: Iterable[Edge]) -> Graph:
        """Return ``G + F``; existing edges are ignored, loops rejected."""
        extra: dict[int, set[int]] = {}
        n = self.n
        for u, v in add:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if self.has_edge(u, v):
                continue
            extra.setdefault(u, set()).add(v)
            extra.setdefault(v, set()).add(u)
        if not extra:
            return self
        adj = list(self.adj)
        for u, vs in extra.items():
            adj[u] = tuple(sorted(vs.union(adj[u])))
        return Graph(adj, check=False)

    def without_edges(self, remove: Iterable[Edge]) -> Graph:
        drop: dict[int, set[int]] = {}
        for u, v in remove:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            drop.setdefault(u, set()).add(v)
            drop.setdefault(v, set()).add(u)
        if not drop:
            return self
        adj = list(self.adj)
        for u, vs in drop.items():
            adj[u] = tuple(w for w in adj[u] if w not in vs)
        return Graph(adj, check=False)

    def subgraph(self, vertices: Iterable[int], drop: Iterable[Edge] = ()) -> tuple[Graph, list[int]]:
        """Induced subgraph on ``vertices`` relabelled by ascending id.

        Returns ``(sub, labels)`` with ``labels[local] = parent id``. Edges in
        ``drop`` (parent ids) are left out.
        """
        labels = sorted(set(vertices))
        local = {v: i for i, v in enumerate(labels)}
        dropped = {norm_edge(u, v) for u, v in drop}
        adj = []
        for v in labels:
            row = []
            for w in self.adj[v]:
                lw = local.get(w)
                if lw is not None and (not dropped or norm_edge(v, w) not in dropped):
                    row.append(lw)
            adj.append(row)
        return Graph(adj, check=False), labels

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def is_path(g: Graph, vertices: Sequence[int]) -> bool:
    if not vertices or len(set(vertices)) != len(vertices):
        return False
    return all(g.has_edge(a, b) for a, b in zip(vertices, vertices[1:]))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph([[w for w in range(n) if w != v] for v in range(n)], check=False)


@dataclass(frozen=True)
class SearchOutcome:
    """Components of ``G - X`` and the forbidden vertices each one touches."""

    component_of: tuple[int, ...]
    incidences: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.incidences)

    def components(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.incidences]
        for v, c in enumerate(self.component_of):
            if c != FORBIDDEN:
                out[c].append(v)
        return out


def x_search(g: Graph, forbidden: Iterable[int]) -> SearchOutcome:
    """Components of ``g - X`` numbered by smallest vertex, with incidences."""
    comp, inc = g.searcher.components(forbidden)
    return SearchOutcome(tuple(comp), tuple(tuple(i) for i in inc))


def is_x_connected(g: Graph, x: int, target: Iterable[int], forbidden: Iterable[int] = ()) -> list[int] | None:
    """An ``x``-``K`` path whose interior avoids ``H``, ``K`` and ``x``, or None."""
    target = list(target)
    blocked = list(forbidden)
    blocked.extend(target)
    return g.searcher.bfs_path((x,), blocked, target)


def cycle_positions(c: Sequence[int]) -> dict[int, int]:
    return {v: i for i, v in enumerate(c)}


def find_c_path(g: Graph, c: Sequence[int]) -> list[int] | None:
    """A C-path joining two non-consecutive vertices of the cycle ``c``.

    Chords win over longer paths; ties go to the smallest end pair, then the
    BFS path with ascending-id tie-breaking.
    """
    k = len(c)
    if k <= 3:
        return None
    pos = cycle_positions(c)

    def apart(u: int, w: int) -> bool:
        d = abs(pos[u] - pos[w])
        return d != 1 and d != k - 1

    for u in sorted(c):
        for w in g.adj[u]:
            if w > u and w in pos and apart(u, w):
                return [u, w]
    _, incidences = g.searcher.components(c)
    best: tuple[int, int] | None = None
    for inc in incidences:
        if len(inc) < 2:
            continue
        for a, u in enumerate(inc):
            if best is not None and u >= best[0]:
                break
            for w in inc[a + 1:]:
                if apart(u, w):
                    if best is None or (u, w) < best:
                        best = (u, w)
                    break
    if best is None:
        return None
    u, w = best
    blocked = [v for v in c if v != w]
    return g.searcher.bfs_path((u,), blocked, (w,))
