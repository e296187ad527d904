"""Two disjoint paths with certificates: a crossing or a web completion.

The recursion picks a C-path ``P`` between non-consecutive frame vertices.
If ``P`` does not separate the two open arcs of the frame it cut off, a
crossing is immediate. Otherwise safe edges are added until every vertex of
a shortcut ``P'`` reaches both arcs, the graph is split along ``P'`` into
two strictly smaller instances, and their answers are lifted or glued.

Recursion runs on an explicit stack of generators, so depth is bounded by
memory rather than the interpreter's recursion limit.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass
from itertools import product

from .graph import Edge, Graph, GraphError, find_c_path, norm_edge
from .web import Triangle, Verdict, WebCertificate, glue, reject, rotation_from_faces, sorted_triangle

# crossing verdict clause ids
PATH_SIMPLE = "PATH_SIMPLE"
PATH_EDGE = "PATH_EDGE"
ENDPOINTS = "ENDPOINTS"
INTERIOR_AVOIDS_FRAME = "INTERIOR_AVOIDS_FRAME"
DISJOINTNESS = "DISJOINTNESS"
INTERLEAVING = "INTERLEAVING"

EdgeHook = Callable[[Graph, Sequence[int], Edge], None]


class SolveInputError(GraphError):
    """The tuple is too short, repeats a vertex or names a missing vertex."""


class LiftError(RuntimeError):
    """An internal invariant of the recursion failed (should be unreachable)."""


@dataclass(frozen=True)
class Crossing:
    """Disjoint T-paths ``x_i..x_j`` and ``x_r..x_s`` with ``i < r < j < s``
    (1-based positions in the tuple)."""

    path_a: tuple[int, ...]
    path_b: tuple[int, ...]
    frame_indices: tuple[int, int, int, int]


@dataclass(frozen=True)
class Crossed:
    crossing: Crossing


@dataclass(frozen=True)
class Crossless:
    cert: WebCertificate


Outcome = Crossed | Crossless


@dataclass
class SolveStats:
    """Counters for one solve.

    ``edges_added`` counts frame edges added by normalisation plus edges
    added by P-completions; ``repairs`` counts crossings that had to be
    rebuilt by self-reduction instead of lifted directly.
    """

    recursive_calls: int = 0
    edges_added: int = 0
    searches: int = 0
    repairs: int = 0


@dataclass(frozen=True)
class PSides:
    """Side flags of each vertex of ``path``; ``witness1[k]`` runs from
    ``path[k]`` to the open first arc (None when the flag is false)."""

    path: tuple[int, ...]
    side1: tuple[bool, ...]
    side2: tuple[bool, ...]
    witness1: tuple[tuple[int, ...] | None, ...]
    witness2: tuple[tuple[int, ...] | None, ...]

    def sides(self, k: int) -> frozenset[int]:
        return frozenset(i for i, on in ((1, self.side1[k]), (2, self.side2[k])) if on)

    def all_both(self) -> bool:
        return all(self.side1) and all(self.side2)

    def witness(self, v: int, side: int) -> tuple[int, ...] | None:
        k = self.path.index(v)
        return (self.witness1 if side == 1 else self.witness2)[k]


@dataclass
class Completion:
    """Working form of a web completion: the outer walk (the frame, in its
    given order), inner triangular faces oriented consistently with it, and
    clique vertices with their triangles."""

    outer: list[int]
    faces: list[list[int]]
    cliques: dict[int, Triangle]

    def relabel(self, labels: Sequence[int]) -> Completion:
        return Completion(
            [labels[v] for v in self.outer],
            [[labels[v] for v in f] for f in self.faces],
            {labels[v]: sorted_triangle(*(labels[x] for x in t)) for v, t in self.cliques.items()},
        )


@dataclass(frozen=True)
class Part:
    """A subinstance: local graph, local frame and local-to-parent labels."""

    graph: Graph
    frame: list[int]
    labels: list[int]


@dataclass
class _Context:
    stats: SolveStats
    decision: bool = False
    on_edge: EdgeHook | None = None


# ---------------------------------------------------------------------------
# crossings
# ---------------------------------------------------------------------------


def crossing_problem(g: Graph, frame: Sequence[int], a: Sequence[int], b: Sequence[int]) -> Verdict:
    """Check that ``(a, b)`` is a crossing of ``frame`` in ``g``, in any
    orientation."""
    pos = {x: i for i, x in enumerate(frame)}
    for path in (a, b):
        if len(path) < 2 or len(set(path)) != len(path):
            return reject(PATH_SIMPLE, f"path {list(path)} is not a simple path with two ends")
        for u, v in zip(path, path[1:]):
            if not 0 <= u < g.n or not 0 <= v < g.n or not g.has_edge(u, v):
                return reject(PATH_EDGE, f"{u}-{v} is not an edge")
        if path[0] not in pos or path[-1] not in pos:
            return reject(ENDPOINTS, f"path {list(path)} does not end on the frame")
        for v in path[1:-1]:
            if v in pos:
                return reject(INTERIOR_AVOIDS_FRAME, f"path {list(path)} passes through frame vertex {v}")
    common = set(a) & set(b)
    if common:
        return reject(DISJOINTNESS, f"paths share vertices {sorted(common)}")
    i, j = sorted((pos[a[0]], pos[a[-1]]))
    r, s = sorted((pos[b[0]], pos[b[-1]]))
    if not (i < r < j < s or r < i < s < j):
        return reject(INTERLEAVING, "path ends do not interleave on the frame")
    return Verdict(True)


def make_crossing(t: Sequence[int], a: Sequence[int], b: Sequence[int]) -> Crossing:
    """Canonical form: ``path_a`` holds the smallest tuple position and both
    paths run from lower to higher position."""
    pos = {x: i for i, x in enumerate(t)}

    def lo_first(path: Sequence[int]) -> tuple[int, ...]:
        return tuple(path) if pos[path[0]] < pos[path[-1]] else tuple(reversed(path))

    a, b = lo_first(a), lo_first(b)
    if pos[b[0]] < pos[a[0]]:
        a, b = b, a
    return Crossing(a, b, (pos[a[0]] + 1, pos[b[0]] + 1, pos[a[-1]] + 1, pos[b[-1]] + 1))


def check_crossing(g: Graph, t: Sequence[int], crossing: Crossing) -> Verdict:
    """Verify a crossing including its reported indices."""
    v = crossing_problem(g, t, crossing.path_a, crossing.path_b)
    if not v:
        return v
    k = len(t)
    i, r, j, s = crossing.frame_indices
    if not all(1 <= x <= k for x in (i, r, j, s)):
        return reject(ENDPOINTS, f"indices {crossing.frame_indices} out of range")
    a, b = crossing.path_a, crossing.path_b
    if (a[0], a[-1], b[0], b[-1]) != (t[i - 1], t[j - 1], t[r - 1], t[s - 1]):
        return reject(ENDPOINTS, "path ends do not match the reported indices")
    if not i < r < j < s:
        return reject(INTERLEAVING, f"indices {crossing.frame_indices} violate i < r < j < s")
    return v


# ---------------------------------------------------------------------------
# normalisation and frame arcs
# ---------------------------------------------------------------------------


def validate_tuple(n: int, t: Sequence[int]) -> None:
    if len(t) < 3:
        raise SolveInputError(f"tuple needs at least 3 vertices, got {len(t)}")
    for x in t:
        if not 0 <= x < n:
            raise SolveInputError(f"tuple vertex {x} out of range for n={n}")
    if len(set(t)) != len(t):
        raise SolveInputError("tuple repeats a vertex")


def normalize_tuple(g: Graph, t: Sequence[int]) -> tuple[Graph, list[int], list[Edge]]:
    """Add the missing edges ``x_u x_{u+1}`` and ``x_k x_1``; these can never
    be used by a crossing, so crossedness is unchanged."""
    validate_tuple(g.n, t)
    k = len(t)
    added = []
    for u in range(k):
        x, y = t[u], t[(u + 1) % k]
        if not g.has_edge(x, y):
            added.append(norm_edge(x, y))
    return g.with_edges(added), list(t), added


def arcs(c: Sequence[int], a: int, b: int) -> tuple[list[int], list[int]]:
    """The two arcs of the cycle ``c`` between ``a`` and ``b``: forward from
    ``a`` to ``b`` and forward from ``b`` to ``a``."""
    k = len(c)
    ia, ib = c.index(a), c.index(b)
    first = [c[(ia + d) % k] for d in range((ib - ia) % k + 1)]
    second = [c[(ib + d) % k] for d in range((ia - ib) % k + 1)]
    return first, second


# ---------------------------------------------------------------------------
# P-sides and P-completion
# ---------------------------------------------------------------------------


def compute_p_sides(g: Graph, c: Sequence[int], p: Sequence[int], stats: SolveStats | None = None) -> PSides:
    """Which open arc each vertex of the C-path ``p`` reaches avoiding C u P."""
    arc1, arc2 = _split_arcs(c, p)
    forbidden = list(c) + list(p)
    flags = []
    witnesses = []
    for interior in (arc1[1:-1], arc2[1:-1]):
        parent = g.searcher.bfs_tree(interior, forbidden)
        if stats is not None:
            stats.searches += 1
        on = []
        wit: list[tuple[int, ...] | None] = []
        for y in p:
            hit = next((w for w in g.adj[y] if parent[w] != -2), None)
            if hit is None:
                on.append(False)
                wit.append(None)
                continue
            chain = [y, hit]
            while parent[chain[-1]] != -1:
                chain.append(parent[chain[-1]])
            on.append(True)
            wit.append(tuple(chain))
        flags.append(tuple(on))
        witnesses.append(tuple(wit))
    return PSides(tuple(p), flags[0], flags[1], witnesses[0], witnesses[1])


def _split_arcs(c: Sequence[int], p: Sequence[int]) -> tuple[list[int], list[int]]:
    return arcs(c, p[0], p[-1])


def next_safe_edge(sides: PSides) -> tuple[int, int]:
    """Indices ``(j, s)`` into the path such that ``y_j y_s`` is safe."""
    L = len(sides.path)
    j = 0
    while j + 1 < L and sides.side1[j + 1] and sides.side2[j + 1]:
        j += 1
    if j == L - 1:
        raise LiftError("every vertex of the path is already on both sides")
    r = j + 1
    while not (sides.side1[r] or sides.side2[r]):
        r += 1
    need = frozenset((1, 2))
    base = sides.sides(r)
    s = r
    while base | sides.sides(s) != need:
        s += 1
    return j, s


@dataclass
class PCompletion:
    """Result of P-completion: ``graph`` = G + ``added``; each
    added edge maps to the path segment it shortcut."""

    graph: Graph
    path: list[int]
    added: list[Edge]
    segments: dict[Edge, list[int]]
    sides: PSides


def p_completion(
    g: Graph,
    c: Sequence[int],
    p: Sequence[int],
    stats: SolveStats | None = None,
    on_edge: EdgeHook | None = None,
) -> PCompletion:
    """Add safe edges and shortcut ``p`` until all its vertices are on both
    sides. ``on_edge(graph_before, c, edge)`` sees every edge added."""
    p = list(p)
    added: list[Edge] = []
    segments: dict[Edge, list[int]] = {}
    while True:
        sides = compute_p_sides(g, c, p, stats)
        if sides.all_both():
            return PCompletion(g, p, added, segments, sides)
        j, s = next_safe_edge(sides)
        e = norm_edge(p[j], p[s])
        if not g.has_edge(*e):
            if on_edge is not None:
                on_edge(g, c, e)
            segments[e] = p[j:s + 1]
            added.append(e)
            g = g.with_edges([e])
        p = p[:j + 1] + p[s:]


def split(g: Graph, c: Sequence[int], p: Sequence[int]) -> tuple[Part, Part]:
    """Cut ``g`` along the separating C-path ``p`` into the two sides.

    Components of ``g - p`` meeting the open second arc form side 2; all
    others, and chords of ``p``, go to side 1.
    """
    arc1, arc2 = _split_arcs(c, p)
    comp, _ = g.searcher.components(p)
    side2 = {comp[x] for x in arc2[1:-1]}
    if any(comp[x] in side2 for x in arc1[1:-1]):
        raise LiftError("path does not separate the two arcs")
    verts1 = list(p)
    verts2 = list(p)
    for v, cv in enumerate(comp):
        if cv == -1:
            continue
        (verts2 if cv in side2 else verts1).append(v)
    idx = {v: k for k, v in enumerate(p)}
    chords = [
        (u, w) for u in p for w in g.adj[u] if u < w and w in idx and abs(idx[u] - idx[w]) > 1
    ]
    g1, lab1 = g.subgraph(verts1)
    g2, lab2 = g.subgraph(verts2, drop=chords)
    rev = list(reversed(p))
    frame1 = arc1 + rev[1:-1]
    frame2 = list(p) + arc2[1:-1]
    loc1 = {v: k for k, v in enumerate(lab1)}
    loc2 = {v: k for k, v in enumerate(lab2)}
    return (
        Part(g1, [loc1[v] for v in frame1], lab1),
        Part(g2, [loc2[v] for v in frame2], lab2),
    )


# ---------------------------------------------------------------------------
# base cases
# ---------------------------------------------------------------------------


def base_crossing(g: Graph, c: Sequence[int], p: Sequence[int]) -> list[int] | None:
    """A path between the open arcs avoiding ``p``, or None if ``p``
    separates them."""
    arc1, arc2 = _split_arcs(c, p)
    return g.searcher.bfs_path(arc1[1:-1], p, arc2[1:-1])


def fan_triangle(k: int, u: int) -> int:
    """Index ``1..k-2`` of the fan triangle used for a single frame vertex."""
    return max(1, u - 1) if u else 1


def base_completion(g: Graph, c: Sequence[int]) -> Completion:
    """Fan the frame from ``c[0]`` and hang every component of ``g - c`` as
    clique vertices on a triangle covering its attachments."""
    k = len(c)
    x0 = c[0]
    faces = [[x0, c[t + 1], c[t]] for t in range(1, k - 1)]
    pos = {x: u for u, x in enumerate(c)}
    comp, incidences = g.searcher.components(c)
    choice = []
    for inc in incidences:
        us = sorted(pos[x] for x in inc)
        if not us or k == 3:
            tri = 1
        elif len(us) == 1:
            tri = fan_triangle(k, us[0])
        elif len(us) == 2 and us[1] - us[0] == 1:
            tri = max(1, min(us[0], k - 2))
        elif len(us) == 2 and us == [0, k - 1]:
            tri = k - 2
        else:
            raise LiftError(f"component attaches to {inc}, which are not consecutive")
        f = faces[tri - 1]
        choice.append(sorted_triangle(*f))
    cliques = {v: choice[cv] for v, cv in enumerate(comp) if cv != -1}
    return Completion(list(c), faces, cliques)


def merge_parts(one: Completion, two: Completion, p: Sequence[int]) -> Completion:
    """Glue two child completions along the shared path ``p``."""
    idx = {v: k for k, v in enumerate(p)}
    for f in one.faces + two.faces:
        for u, v in zip(f, f[1:] + f[:1]):
            if u in idx and v in idx and abs(idx[u] - idx[v]) > 1:
                raise LiftError(f"path is not induced in a child web: chord {u}-{v}")
    outer, faces = glue(one.outer, one.faces, two.outer, two.faces, list(p))
    cliques = dict(one.cliques)
    cliques.update(two.cliques)
    return Completion(outer, faces, cliques)


def merge_completions(cert1: WebCertificate, cert2: WebCertificate, p: Sequence[int]) -> WebCertificate:
    """Union of two web completions that share exactly the path ``p``."""
    outer1, inner1 = cert1.outer_and_inner()
    outer2, inner2 = cert2.outer_and_inner()
    merged = merge_parts(
        Completion(outer1, inner1, dict(cert1.clique_assignment)),
        Completion(outer2, inner2, dict(cert2.clique_assignment)),
        p,
    )
    rotation = rotation_from_faces([merged.outer] + merged.faces)
    return WebCertificate(
        tuple(merged.outer),
        rotation,
        merged.cliques,
        frozenset(cert1.added_edges) | frozenset(cert2.added_edges),
    )


# ---------------------------------------------------------------------------
# lifting crossings from a subinstance
# ---------------------------------------------------------------------------


def _extend(path: Sequence[int], end: int, p: Sequence[int], to_b: bool) -> list[int]:
    """``path`` reoriented to finish at ``end``, then continued along ``p``."""
    path = list(path) if path[-1] == end else list(reversed(path))
    k = p.index(end)
    tail = p[k + 1:] if to_b else list(reversed(p[:k]))
    return path + list(tail)


def _extend_both(path: Sequence[int], p: Sequence[int]) -> list[int]:
    idx = {v: k for k, v in enumerate(p)}
    lo, hi = (path[0], path[-1]) if idx[path[0]] < idx[path[-1]] else (path[-1], path[0])
    out = list(reversed(_extend(path, lo, p, False)))
    return _extend(out, hi, p, True)


def _lift_candidates(
    g: Graph, c: Sequence[int], p: Sequence[int], i: int, q: list[int], r: list[int], sides: PSides
) -> Iterator[tuple[list[int], list[int]]]:
    idx = {v: k for k, v in enumerate(p)}
    other = 3 - i
    on_q = [v for v in (q[0], q[-1]) if v in idx]
    on_r = [v for v in (r[0], r[-1]) if v in idx]
    if len(on_q) <= 1 and len(on_r) <= 1:
        anchored = [(0, v) for v in on_q] + [(1, v) for v in on_r]
        anchored.sort(key=lambda av: idx[av[1]])
        # lower anchor toward p[0], higher toward p[-1] comes first
        options = sorted(product((False, True), repeat=len(anchored)), key=lambda d: d != (False, True))
        for dirs in options:
            paths = [q, r]
            for (which, v), to_b in zip(anchored, dirs):
                paths[which] = _extend(paths[which], v, p, to_b)
            yield paths[0], paths[1]
        return
    if len(on_q) == 2 and len(on_r) == 2:
        arc1, arc2 = _split_arcs(c, p)
        interior = (arc1 if i == 1 else arc2)[1:-1]
        forbidden = list(c) + list(p)
        for targets in (q[1:-1] + r[1:-1], q[1:-1], r[1:-1]):
            if not targets:
                continue
            s = g.searcher.bfs_path(interior, forbidden, targets)
            if s is None:
                continue
            u = s[-1]
            x, y = (q, r) if u in q else (r, q)
            lo, hi = sorted((idx[y[0]], idx[y[-1]]))
            z = next(v for v in (x[0], x[-1]) if lo < idx[v] < hi)
            wit = sides.witness(z, other)
            if wit is None:
                continue
            xs = x if x[-1] == z else list(reversed(x))
            yield s + xs[xs.index(u) + 1:] + list(wit[1:]), _extend_both(y, p)
        for x, y in ((q, r), (r, q)):
            lo, hi = sorted((idx[y[0]], idx[y[-1]]))
            for z in (x[0], x[-1]):
                if lo < idx[z] < hi:
                    w1, w2 = sides.witness(z, i), sides.witness(z, other)
                    if w1 is not None and w2 is not None:
                        yield list(reversed(w1)) + list(w2[1:]), _extend_both(y, p)
        return
    x, y = (q, r) if len(on_q) == 2 else (r, q)
    lo, hi = sorted((idx[x[0]], idx[x[-1]]))
    for z in (y[0], y[-1]):
        if z in idx and lo < idx[z] < hi:
            wit = sides.witness(z, other)
            if wit is not None:
                ys = y if y[-1] == z else list(reversed(y))
                yield ys + list(wit[1:]), _extend_both(x, p)


def lift_crossing(
    g: Graph,
    c: Sequence[int],
    p: Sequence[int],
    i: int,
    child: tuple[Sequence[int], Sequence[int]],
    sides: PSides | None = None,
) -> tuple[list[int], list[int]]:
    """Turn a crossing of the side-``i`` subinstance (in parent ids) into a
    crossing of ``c`` in ``g``. Every candidate is validated; LiftError if
    none survives."""
    if sides is None:
        sides = compute_p_sides(g, c, p)
    q, r = list(child[0]), list(child[1])
    for a, b in _lift_candidates(g, c, p, i, q, r, sides):
        if crossing_problem(g, c, a, b):
            return a, b
    raise LiftError(f"no lift of crossing {q} / {r} along {list(p)}")


# ---------------------------------------------------------------------------
# recursion
# ---------------------------------------------------------------------------

_Pair = tuple[list[int], list[int]]
_Result = bool | _Pair | Completion


def _instance(ctx: _Context, g: Graph, c: list[int]) -> Iterator[tuple[Graph, list[int]]]:
    """One call of the recursion; yields child instances and receives their
    results. Returns a bool in decision mode, else a crossing pair or a
    completion."""
    stats = ctx.stats
    stats.recursive_calls += 1
    stats.searches += 1
    p = find_c_path(g, c)
    if p is None:
        if ctx.decision:
            return False
        stats.searches += 1
        return base_completion(g, c)
    stats.searches += 1
    q = base_crossing(g, c, p)
    if q is not None:
        return True if ctx.decision else (p, q)
    done = p_completion(g, c, p, stats, ctx.on_edge)
    stats.edges_added += len(done.added)
    h, p = done.graph, done.path
    stats.searches += 1
    q = base_crossing(h, c, p)
    if q is not None:
        return True if ctx.decision else _repair(ctx, g, c, done, (p, q))
    stats.searches += 1
    parts = split(h, c, p)
    results = []
    for side, part in enumerate(parts, start=1):
        res = yield part.graph, part.frame
        if ctx.decision:
            if res:
                return True
            continue
        if isinstance(res, Completion):
            results.append(res.relabel(part.labels))
            continue
        lab = part.labels
        child = ([lab[v] for v in res[0]], [lab[v] for v in res[1]])
        try:
            lifted = lift_crossing(h, c, p, side, child, done.sides)
        except LiftError:
            return _self_reduce(ctx, g, c)
        return _repair(ctx, g, c, done, lifted)
    if ctx.decision:
        return False
    return merge_parts(results[0], results[1], p)


def _run(ctx: _Context, g: Graph, c: list[int]) -> _Result:
    stack = [_instance(ctx, g, c)]
    result = None
    while True:
        try:
            child = stack[-1].send(result)
        except StopIteration as stop:
            stack.pop()
            result = stop.value
            if not stack:
                return result
            continue
        result = None
        stack.append(_instance(ctx, *child))


def _loop_erase(path: Sequence[int]) -> list[int]:
    out: list[int] = []
    at: dict[int, int] = {}
    for v in path:
        k = at.get(v)
        if k is not None:
            for w in out[k + 1:]:
                del at[w]
            del out[k + 1:]
            continue
        at[v] = len(out)
        out.append(v)
    return out


def _expand(g: Graph, path: Sequence[int], segments: dict[Edge, list[int]]) -> list[int]:
    """Replace each added edge by the path segment it shortcut."""
    out = [path[0]]
    for u, v in zip(path, path[1:]):
        seg = segments.get(norm_edge(u, v))
        if seg is None or g.has_edge(u, v):
            out.append(v)
            continue
        seg = seg if seg[0] == u else list(reversed(seg))
        out.extend(_expand(g, seg, segments)[1:])
    return _loop_erase(out)


def _repair(ctx: _Context, g: Graph, c: list[int], done: PCompletion, pair: _Pair) -> _Pair:
    """Move a crossing of ``g + F`` back into ``g``."""
    a, b = (_expand(g, x, done.segments) for x in pair)
    if crossing_problem(g, c, a, b):
        return a, b
    return _self_reduce(ctx, g, c)


def _decide(g: Graph, c: list[int], stats: SolveStats) -> bool:
    return bool(_run(_Context(stats, decision=True), g, c))


def _self_reduce(ctx: _Context, g: Graph, c: list[int]) -> _Pair:
    """Find a crossing of ``c`` in ``g`` (known to be crossed) by deleting
    edge chunks while the decision procedure still answers crossed; what
    remains off the frame is exactly two paths."""
    ctx.stats.repairs += 1
    scratch = SolveStats()
    k = len(c)
    frame_edges = {norm_edge(c[u], c[(u + 1) % k]) for u in range(k)}
    keep = [e for e in g.edges() if e not in frame_edges]
    base = Graph.from_edges(g.n, frame_edges)
    if not _decide(g, c, scratch):
        raise LiftError("self-reduction started on a crossless instance")
    chunk = max(1, len(keep) // 2)
    while True:
        start = 0
        while start < len(keep):
            trial = keep[:start] + keep[start + chunk:]
            if _decide(base.with_edges(trial), c, scratch):
                keep = trial
            else:
                start += chunk
        if chunk == 1:
            break
        chunk = max(1, chunk // 2)
    ctx.stats.searches += scratch.searches
    adj: dict[int, list[int]] = {}
    for u, v in keep:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    on_c = set(c)
    paths = []
    used: set[int] = set()
    for x in c:
        if x in adj and x not in used:
            path = [x]
            prev, cur = -1, x
            while True:
                nxt = next(w for w in adj[cur] if w != prev)
                path.append(nxt)
                if nxt in on_c:
                    break
                prev, cur = cur, nxt
            used.update(path)
            paths.append(path)
    if len(paths) != 2 or not crossing_problem(g, c, paths[0], paths[1]):
        raise LiftError("self-reduction did not leave exactly two crossing paths")
    return paths[0], paths[1]


# ---------------------------------------------------------------------------
# entry points
# ---------------------------------------------------------------------------


def _component_of(g: Graph, v: int) -> list[int]:
    parent = g.searcher.bfs_tree((v,), ())
    return [u for u, par in enumerate(parent) if par != -2]


def _certificate(g: Graph, t: Sequence[int], done: Completion) -> WebCertificate:
    rotation = rotation_from_faces([done.outer] + done.faces)
    added = frozenset(
        (u, v) for u in rotation for v in rotation[u] if u < v and not g.has_edge(u, v)
    )
    return WebCertificate(tuple(t), rotation, dict(sorted(done.cliques.items())), added)


def solve(g: Graph, t: Sequence[int], on_edge: EdgeHook | None = None) -> tuple[Outcome, SolveStats]:
    """Return a crossing of ``t`` in ``g`` or a certified web completion.

    ``on_edge(graph, frame, edge)`` is called before each P-completion edge
    is added, with the subinstance graph and frame in local ids.
    """
    h, c, norm = normalize_tuple(g, t)
    stats = SolveStats(edges_added=len(norm))
    k = len(c)
    if k == 3:
        stats.recursive_calls = 1
        tri = sorted_triangle(*c)
        done = Completion(list(c), [[c[0], c[2], c[1]]], {v: tri for v in range(g.n) if v not in tri})
        return Crossless(_certificate(g, t, done)), stats
    verts = _component_of(h, c[0])
    if len(verts) == h.n:
        sub, labels = h, list(range(h.n))
    else:
        sub, labels = h.subgraph(verts)
    local = {v: i for i, v in enumerate(labels)}
    ctx = _Context(stats, on_edge=on_edge)
    res = _run(ctx, sub, [local[x] for x in c])
    if isinstance(res, Completion):
        done = res.relabel(labels)
        first = min(sorted_triangle(*f) for f in done.faces)
        inside = set(verts)
        for v in range(g.n):
            if v not in inside:
                done.cliques[v] = first
        return Crossless(_certificate(g, t, done)), stats
    a, b = ([labels[v] for v in x] for x in res)
    return Crossed(make_crossing(t, a, b)), stats


def decide(g: Graph, t: Sequence[int]) -> bool:
    """True iff ``t`` is crossed in ``g``; skips certificate construction."""
    h, c, _ = normalize_tuple(g, t)
    if len(c) == 3:
        return False
    verts = _component_of(h, c[0])
    sub, labels = h.subgraph(verts) if len(verts) < h.n else (h, list(range(h.n)))
    local = {v: i for i, v in enumerate(labels)}
    return _decide(sub, [local[x] for x in c], SolveStats())


def verify_outcome(g: Graph, t: Sequence[int], outcome: Outcome) -> Verdict:
    """Check either kind of outcome against the instance."""
    from .web import FRAME, verify_certificate

    if isinstance(outcome, Crossed):
        return check_crossing(g, t, outcome.crossing)
    if tuple(outcome.cert.frame) != tuple(t):
        return reject(FRAME, "certificate frame differs from the tuple")
    return verify_certificate(g, outcome.cert)
