"""Brute-force ground truth for small instances.

Nothing here touches the solver or the search kernel: adjacency is
re-encoded as bitmasks and crossings are found by direct enumeration.
"""

from __future__ import annotations

import os
from collections.abc import Iterator, Sequence
from itertools import combinations

from .graph import Graph
from .solver import Crossing

DEFAULT_MAX_N = 14


class OracleRefusal(ValueError):
    """The instance is larger than the configured oracle bound."""


def max_n() -> int:
    return int(os.environ.get("TWODP_ORACLE_MAX_N", DEFAULT_MAX_N))


def _bitmasks(g: Graph) -> list[int]:
    out = []
    for row in g.adj:
        m = 0
        for w in row:
            m |= 1 << w
        out.append(m)
    return out


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _chordless_paths(adj: list[int], start: int, end: int, banned: int) -> Iterator[list[int]]:
    """Induced ``start``-``end`` paths avoiding ``banned``, in lexicographic
    order. A crossing can always shortcut its first path along chords, so
    restricting to induced paths loses nothing."""
    path = [start]

    # shadow: earlier path vertices and their neighbours, excluding the last
    def step(v: int, shadow: int) -> Iterator[list[int]]:
        nbrs = adj[v]
        if nbrs >> end & 1 and not shadow >> end & 1:
            yield path + [end]
        cand = nbrs & ~banned & ~shadow & ~(1 << end)
        inner = shadow | nbrs | (1 << v)
        for w in _bits(cand):
            path.append(w)
            yield from step(w, inner)
            path.pop()

    yield from step(start, 0)


def _bfs(adj: list[int], s: int, t: int, blocked: int) -> list[int] | None:
    """Shortest ``s``-``t`` path through unblocked vertices, smallest ids
    first."""
    parent = {s: -1}
    frontier = [s]
    seen = blocked | (1 << s)
    while frontier:
        nxt = []
        for v in frontier:
            if adj[v] >> t & 1:
                path = [t, v]
                while parent[path[-1]] != -1:
                    path.append(parent[path[-1]])
                return path[::-1]
            for w in _bits(adj[v] & ~seen):
                seen |= 1 << w
                parent[w] = v
                nxt.append(w)
        frontier = nxt
    return None


def _check_size(g: Graph) -> None:
    if g.n > max_n():
        raise OracleRefusal(f"oracle refuses n={g.n} > {max_n()} (set TWODP_ORACLE_MAX_N)")


def oracle_crossed(g: Graph, t: Sequence[int]) -> Crossing | None:
    """First crossing found by scanning index quadruples lexicographically,
    then induced first paths in lexicographic order, then a shortest
    second path; None if ``t`` is crossless."""
    _check_size(g)
    k = len(t)
    if len(set(t)) != k:
        raise ValueError("tuple repeats a vertex")
    adj = _bitmasks(g)
    tmask = 0
    for x in t:
        tmask |= 1 << x
    for i, r, j, s in combinations(range(k), 4):
        xi, xr, xj, xs = t[i], t[r], t[j], t[s]
        for a in _chordless_paths(adj, xi, xj, tmask):
            used = 0
            for v in a:
                used |= 1 << v
            blocked = (tmask & ~((1 << xr) | (1 << xs))) | used
            b = _bfs(adj, xr, xs, blocked)
            if b is not None:
                return Crossing(tuple(a), tuple(b), (i + 1, r + 1, j + 1, s + 1))
    return None


def oracle_maximally_crossless(g: Graph, t: Sequence[int]) -> bool:
    """Crossless, and adding any single non-edge creates a crossing."""
    if oracle_crossed(g, t) is not None:
        return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v) and oracle_crossed(g.with_edges([(u, v)]), t) is None:
                return False
    return True


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every labelled connected simple graph on ``n`` vertices, once each,
    in increasing order of the edge bitmask over pairs ``(u, v)``, u < v."""
    if n > 7:
        raise OracleRefusal("enumeration is limited to n <= 7")
    if n <= 0:
        return
    pairs = list(combinations(range(n), 2))
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for b, (u, v) in enumerate(pairs):
            if mask >> b & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        reach = 1
        frontier = 1
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= adj[v]
            frontier = grow & ~reach
            reach |= grow
        if reach == full:
            yield Graph([list(_bits(m)) for m in adj], check=False)
