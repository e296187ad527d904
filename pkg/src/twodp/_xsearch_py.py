"""Pure-Python restricted search kernel.

Mirrors the compiled ``_xsearch`` extension bit for bit; used when the
extension is unavailable or ``TWODP_PURE_PYTHON`` is set.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence


class Searcher:
    """Breadth-first searches over a fixed adjacency that never traverse a
    forbidden vertex set.

    Scratch arrays are allocated once and invalidated by bumping an epoch
    counter, so each call costs O(n + m) with no reallocation.
    """

    __slots__ = ("_adj", "_n", "_forb", "_seen", "_tgt", "_parent", "_ilast", "_epoch", "_cbase")

    def __init__(self, adj: Sequence[Sequence[int]]) -> None:
        n = len(adj)
        self._adj = adj
        self._n = n
        self._forb = [0] * n
        self._seen = [0] * n
        self._tgt = [0] * n
        self._parent = [-1] * n
        self._ilast = [-1] * n
        self._epoch = 0
        self._cbase = 0

    @property
    def n(self) -> int:
        return self._n

    def _mark(self, forbidden: Iterable[int]) -> int:
        self._epoch += 1
        ep = self._epoch
        forb = self._forb
        for x in forbidden:
            forb[x] = ep
        return ep

    def components(self, forbidden: Iterable[int]) -> tuple[list[int], list[list[int]]]:
        """Label the components of G - X.

        Returns ``(comp, incidences)``: ``comp[v]`` is the component index of
        ``v`` or -1 for forbidden vertices; components are numbered by their
        smallest vertex. ``incidences[c]`` lists, ascending, the forbidden
        vertices adjacent to component ``c``.
        """
        ep = self._mark(forbidden)
        adj, forb, seen, ilast = self._adj, self._forb, self._seen, self._ilast
        n = self._n
        comp = [-1] * n
        incidences: list[list[int]] = []
        base = self._cbase
        queue: list[int] = []
        c = 0
        for s in range(n):
            if forb[s] == ep or seen[s] == ep:
                continue
            key = base + c
            inc: list[int] = []
            seen[s] = ep
            comp[s] = c
            queue.clear()
            queue.append(s)
            head = 0
            while head < len(queue):
                v = queue[head]
                head += 1
                for w in adj[v]:
                    if forb[w] == ep:
                        if ilast[w] != key:
                            ilast[w] = key
                            inc.append(w)
                    elif seen[w] != ep:
                        seen[w] = ep
                        comp[w] = c
                        queue.append(w)
            inc.sort()
            incidences.append(inc)
            c += 1
        self._cbase = base + c
        return comp, incidences

    def bfs_path(
        self, sources: Iterable[int], forbidden: Iterable[int], targets: Iterable[int]
    ) -> list[int] | None:
        """Shortest path from some source to the first target reached.

        Forbidden vertices are never entered; targets are checked before the
        forbidden test, so a target may also be forbidden. Sources are always
        expanded and are never reported as targets.
        """
        ep = self._mark(forbidden)
        tgt = self._tgt
        for x in targets:
            tgt[x] = ep
        adj, forb, seen, parent = self._adj, self._forb, self._seen, self._parent
        queue: list[int] = []
        for s in sources:
            if seen[s] != ep:
                seen[s] = ep
                parent[s] = -1
                queue.append(s)
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in adj[v]:
                if seen[w] == ep:
                    continue
                if tgt[w] == ep:
                    path = [w]
                    while v != -1:
                        path.append(v)
                        v = parent[v]
                    path.reverse()
                    return path
                if forb[w] == ep:
                    continue
                seen[w] = ep
                parent[w] = v
                queue.append(w)
        return None

    def bfs_tree(self, sources: Iterable[int], forbidden: Iterable[int]) -> list[int]:
        """Full multi-source search; returns a parent snapshot where -2 marks
        unreached vertices and -1 marks sources."""
        ep = self._mark(forbidden)
        adj, forb, seen = self._adj, self._forb, self._seen
        parent = [-2] * self._n
        queue: list[int] = []
        for s in sources:
            if seen[s] != ep:
                seen[s] = ep
                parent[s] = -1
                queue.append(s)
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in adj[v]:
                if seen[w] == ep or forb[w] == ep:
                    continue
                seen[w] = ep
                parent[w] = v
                queue.append(w)
        return parent
