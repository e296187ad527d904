"""Webs and ribs as certified combinatorial objects.

A web is stored in O(n): the rib as a rotation system (cyclic neighbour
orders of rib vertices) and every clique vertex as the rib triangle it sits
on. Embeddings are never geometric; faces come from the usual traversal
rule, next edge = successor of the reversed edge in the rotation at its head.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .graph import Edge, Graph, norm_edge

Rotation = dict[int, tuple[int, ...]]
Triangle = tuple[int, int, int]

# verdict clause ids
FRAME = "FRAME"
ROTATION = "ROTATION"
PARTITION = "PARTITION"
FRAME_IN_RIB = "FRAME_IN_RIB"
CONNECTED = "CONNECTED"
EULER = "EULER"
OUTER_FACE = "OUTER_FACE"
INNER_TRIANGLE = "INNER_TRIANGLE"
TRIANGLE_IS_FACE = "TRIANGLE_IS_FACE"
CLIQUE_TRIANGLE = "CLIQUE_TRIANGLE"
RIB_EDGE = "RIB_EDGE"
CLIQUE_ADJACENCY = "CLIQUE_ADJACENCY"
ADDED_DISJOINT = "ADDED_DISJOINT"
ADDED_EXACT = "ADDED_EXACT"


class WebError(ValueError):
    """A web operation received arguments that cannot produce a web."""


@dataclass(frozen=True)
class Verdict:
    ok: bool
    clause: str | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "ACCEPT" if self.ok else f"REJECT {self.clause}: {self.detail}"


ACCEPT = Verdict(True)


def reject(clause: str, detail: str) -> Verdict:
    return Verdict(False, clause, detail)


def sorted_triangle(a: int, b: int, c: int) -> Triangle:
    return tuple(sorted((a, b, c)))  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# rotation systems
# ---------------------------------------------------------------------------


def faces_of(rotation: Mapping[int, Sequence[int]]) -> list[list[int]]:
    """Boundary walks of the embedding, each starting at its least directed
    edge, listed in order of that edge. Every directed edge is used once."""
    index = {v: {u: i for i, u in enumerate(nbrs)} for v, nbrs in rotation.items()}
    used: set[Edge] = set()
    faces = []
    for u in sorted(rotation):
        for v in sorted(rotation[u]):
            if (u, v) in used:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in used:
                used.add((a, b))
                walk.append(a)
                nb = rotation[b]
                a, b = b, nb[(index[b][a] + 1) % len(nb)]
            faces.append(walk)
    return faces


def rotation_from_faces(walks: Iterable[Sequence[int]]) -> Rotation:
    """Rebuild the rotation system whose faces are ``walks``."""
    succ: dict[int, dict[int, int]] = {}
    for walk in walks:
        L = len(walk)
        for i in range(L):
            u, v, w = walk[i - 1], walk[i], walk[(i + 1) % L]
            at = succ.setdefault(v, {})
            if u in at:
                raise WebError(f"directed edge {u}->{v} lies on two faces")
            at[u] = w
    rotation: Rotation = {}
    for v in sorted(succ):
        at = succ[v]
        start = min(at)
        order = [start]
        u = at[start]
        while u != start:
            order.append(u)
            if len(order) > len(at):
                break
            u = at.get(u, start)
        if len(order) != len(at) or set(order) != set(at):
            raise WebError(f"faces around {v} do not close into one disc")
        rotation[v] = tuple(order)
    return rotation


def mirror(rotation: Mapping[int, Sequence[int]]) -> Rotation:
    """The mirror embedding; cyclic orders reversed, still starting at the
    smallest neighbour."""
    out: Rotation = {}
    for v, nbrs in rotation.items():
        rev = list(reversed(nbrs))
        i = rev.index(min(rev))
        out[v] = tuple(rev[i:] + rev[:i])
    return out


def same_cycle(walk: Sequence[int], cycle: Sequence[int]) -> int:
    """1 if ``walk`` traverses ``cycle`` forward, -1 if backward, 0 if not the
    same cyclic sequence."""
    k = len(cycle)
    if len(walk) != k or k == 0:
        return 0
    try:
        s = walk.index(cycle[0])
    except ValueError:
        return 0
    if all(walk[(s + i) % k] == cycle[i] for i in range(k)):
        return 1
    if all(walk[(s - i) % k] == cycle[i] for i in range(k)):
        return -1
    return 0


def rib_triangles(rotation: Mapping[int, Sequence[int]]) -> list[Triangle]:
    """All triangles of the rib graph, by sorted-adjacency intersection."""
    adj = {v: sorted(n) for v, n in rotation.items()}
    sets = {v: set(n) for v, n in adj.items()}
    out = []
    for u in sorted(adj):
        for v in adj[u]:
            if v <= u:
                continue
            for w in adj[v]:
                if w > v and w in sets[u]:
                    out.append((u, v, w))
    return out


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WebCertificate:
    """Proof that ``G + F`` is a web with the given frame.

    ``added_edges`` lists the rib edges missing from G. Edges at clique
    vertices are implied by ``clique_assignment`` and never listed, which
    keeps the certificate O(n) even when the completion has Theta(n^2)
    edges; ``completion_edges`` enumerates them.
    """

    frame: tuple[int, ...]
    rotation: Mapping[int, tuple[int, ...]]
    clique_assignment: Mapping[int, Triangle] = field(default_factory=dict)
    added_edges: frozenset[Edge] = frozenset()

    @property
    def rib_vertices(self) -> list[int]:
        return sorted(self.rotation)

    def rib_edges(self) -> list[Edge]:
        return [(u, v) for u in sorted(self.rotation) for v in sorted(self.rotation[u]) if u < v]

    def faces(self) -> list[list[int]]:
        return faces_of(self.rotation)

    def outer_and_inner(self) -> tuple[list[int], list[list[int]]]:
        """Split faces into the frame face and the rest."""
        faces = self.faces()
        for i, f in enumerate(faces):
            if same_cycle(f, self.frame):
                return f, faces[:i] + faces[i + 1:]
        raise WebError("no face bounded by the frame")

    def cliques(self) -> dict[Triangle, list[int]]:
        out: dict[Triangle, list[int]] = {}
        for v in sorted(self.clique_assignment):
            out.setdefault(self.clique_assignment[v], []).append(v)
        return out

    def web_edges(self) -> list[Edge]:
        """Every edge of the materialised web, sorted."""
        edges = set(self.rib_edges())
        for tri, members in self.cliques().items():
            for i, v in enumerate(members):
                for t in tri:
                    edges.add(norm_edge(v, t))
                for w in members[i + 1:]:
                    edges.add(norm_edge(v, w))
        return sorted(edges)

    def completion_edges(self, g: Graph) -> list[Edge]:
        """The full completion F = E(web) - E(G)."""
        return [e for e in self.web_edges() if not g.has_edge(*e)]


def verify_certificate(g: Graph, cert: WebCertificate) -> Verdict:
    """Check every clause of the web definition for ``G + F``."""
    n = g.n
    frame = tuple(cert.frame)
    k = len(frame)
    if k < 3 or len(set(frame)) != k or any(not 0 <= x < n for x in frame):
        return reject(FRAME, f"frame {frame} is not a tuple of >= 3 distinct vertices of G")
    rot = cert.rotation
    for v, nbrs in rot.items():
        if not 0 <= v < n:
            return reject(ROTATION, f"rib vertex {v} out of range")
        if len(set(nbrs)) != len(nbrs) or v in nbrs:
            return reject(ROTATION, f"rotation at {v} repeats a neighbour or loops")
        for w in nbrs:
            if w not in rot or v not in rot[w]:
                return reject(ROTATION, f"rotation edge {v}-{w} is not symmetric")
    for v, tri in cert.clique_assignment.items():
        if not 0 <= v < n:
            return reject(PARTITION, f"clique vertex {v} out of range")
        if v in rot:
            return reject(PARTITION, f"vertex {v} is both rib and clique vertex")
        if len(set(tri)) != 3 or tuple(sorted(tri)) != tuple(tri):
            return reject(CLIQUE_TRIANGLE, f"clique vertex {v} has malformed triangle {tri}")
    if len(rot) + len(cert.clique_assignment) != n:
        missing = [v for v in range(n) if v not in rot and v not in cert.clique_assignment]
        return reject(PARTITION, f"vertices {missing[:5]} are neither rib nor clique vertices")
    for x in frame:
        if x not in rot:
            return reject(FRAME_IN_RIB, f"frame vertex {x} is not a rib vertex")

    # connectivity of the rib
    start = frame[0]
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in rot[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(rot):
        return reject(CONNECTED, "rib graph is disconnected")

    faces = faces_of(rot)
    edges = sum(len(nb) for nb in rot.values()) // 2
    if len(rot) - edges + len(faces) != 2:
        return reject(EULER, f"V - E + F = {len(rot)} - {edges} + {len(faces)} != 2")
    outer = next((i for i, f in enumerate(faces) if same_cycle(f, frame)), None)
    if outer is None:
        return reject(OUTER_FACE, "no face is bounded by the frame cycle")
    face_set = set()
    for i, f in enumerate(faces):
        if i == outer:
            continue
        if len(f) != 3 or len(set(f)) != 3:
            return reject(INNER_TRIANGLE, f"inner face {f} is not a triangle")
        face_set.add(sorted_triangle(*f))
    for tri in rib_triangles(rot):
        if tri not in face_set:
            return reject(TRIANGLE_IS_FACE, f"triangle {tri} is not a face")
    assign = cert.clique_assignment
    for v, tri in assign.items():
        if tri not in face_set:
            return reject(CLIQUE_TRIANGLE, f"clique vertex {v} sits on {tri}, not an inner face")

    rib_sets = {v: set(nb) for v, nb in rot.items()}
    for u, v in g.edges():
        ru, rv = u in rib_sets, v in rib_sets
        if ru and rv:
            if v not in rib_sets[u]:
                return reject(RIB_EDGE, f"edge {u}-{v} of G joins rib vertices but is not a rib edge")
        elif ru or rv:
            c, r = (v, u) if ru else (u, v)
            if r not in assign[c]:
                return reject(CLIQUE_ADJACENCY, f"clique vertex {c} is adjacent to {r} outside its triangle")
        elif assign[u] != assign[v]:
            return reject(CLIQUE_ADJACENCY, f"clique vertices {u} and {v} sit on different triangles")
    for u, v in cert.added_edges:
        if g.has_edge(u, v):
            return reject(ADDED_DISJOINT, f"added edge {u}-{v} is already in G")
        if u not in rib_sets or v not in rib_sets[u]:
            return reject(ADDED_EXACT, f"added edge {u}-{v} is not a rib edge")
    added = {norm_edge(u, v) for u, v in cert.added_edges}
    for u, v in cert.rib_edges():
        if not g.has_edge(u, v) and (u, v) not in added:
            return reject(ADDED_EXACT, f"rib edge {u}-{v} is neither in G nor added")
    return ACCEPT


# ---------------------------------------------------------------------------
# webs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Web:
    """A web on vertices ``0..n-1`` held in its O(n) form."""

    n: int
    cert: WebCertificate

    @cached_property
    def graph(self) -> Graph:
        return web_to_graph(self)

    @property
    def frame(self) -> tuple[int, ...]:
        return self.cert.frame


def web_to_graph(w: Web) -> Graph:
    """Materialise all rib and clique edges; may be Theta(n^2) edges."""
    return Graph.from_edges(w.n, w.cert.web_edges())


def clique_web(order: int) -> Web:
    """The 3-web K_order with frame (0, 1, 2)."""
    if order < 3:
        raise WebError("a 3-web has at least three vertices")
    rotation = {0: (1, 2), 1: (0, 2), 2: (0, 1)}
    assign = {v: (0, 1, 2) for v in range(3, order)}
    return Web(order, WebCertificate((0, 1, 2), rotation, assign))


def glue(
    outer1: Sequence[int],
    faces1: Sequence[Sequence[int]],
    outer2: Sequence[int],
    faces2: Sequence[Sequence[int]],
    path: Sequence[int],
) -> tuple[list[int], list[list[int]]]:
    """Glue two discs along a shared boundary path.

    Both sides use the same ids on ``path`` and are disjoint elsewhere. The
    second disc is mirrored when needed so the orientations agree. Returns
    the new outer walk and the union of inner faces.
    """
    if same_direction(outer1, path) < 0:
        path = list(reversed(path))
    if same_direction(outer2, path) > 0:
        outer2 = list(reversed(outer2))
        faces2 = [list(reversed(f)) for f in faces2]
    arc1 = boundary_arc(outer1, path[-1], path[0])
    arc2 = boundary_arc(outer2, path[0], path[-1])
    outer = arc1 + arc2[1:-1]
    return outer, [list(f) for f in faces1] + [list(f) for f in faces2]


def same_direction(walk: Sequence[int], path: Sequence[int]) -> int:
    """+1 if ``path`` runs forward along the cyclic ``walk``, -1 if backward."""
    k = len(walk)
    i = walk.index(path[0])
    if walk[(i + 1) % k] == path[1]:
        return 1
    if walk[(i - 1) % k] == path[1]:
        return -1
    raise WebError(f"{list(path)} is not a subpath of the boundary")


def boundary_arc(walk: Sequence[int], a: int, b: int) -> list[int]:
    """The forward arc of the cyclic ``walk`` from ``a`` to ``b``."""
    k = len(walk)
    i = walk.index(a)
    out = [a]
    while walk[i % k] != b:
        i += 1
        out.append(walk[i % k])
    return out


def frame_subpath_ok(cert: WebCertificate, path: Sequence[int]) -> bool:
    """True if ``path`` is an induced proper subpath of the frame."""
    frame = list(cert.frame)
    if len(path) < 2 or len(path) > len(frame) - 1 or len(set(path)) != len(path):
        return False
    try:
        same_direction(frame, path)
    except (WebError, ValueError):
        return False
    k = len(frame)
    pos = {v: i for i, v in enumerate(frame)}
    for a, b in zip(path, path[1:]):
        if b not in pos or (pos[a] - pos[b]) % k not in (1, k - 1):
            return False
    inpath = set(path)
    idx = {v: i for i, v in enumerate(path)}
    for v in path:
        for w in cert.rotation[v]:
            if w in inpath and abs(idx[v] - idx[w]) > 1:
                return False
    return True


def web_compose(w1: Web, w2: Web, p1: Sequence[int], p2: Sequence[int]) -> Web:
    """Parallel composition of two webs along induced frame subpaths.

    ``p2[t]`` is identified with ``p1[t]``; the other vertices of ``w2`` are
    renumbered after those of ``w1`` in ascending order. The result has
    frame ``P_G P_H`` and its certificate verifies by construction.
    """
    if len(p1) != len(p2):
        raise WebError("identified paths must have the same length")
    for w, p in ((w1, p1), (w2, p2)):
        if not frame_subpath_ok(w.cert, p):
            raise WebError(f"{list(p)} is not an induced proper subpath of the frame {w.frame}")
    relabel = {b: a for a, b in zip(p1, p2)}
    nxt = w1.n
    for v in range(w2.n):
        if v not in relabel:
            relabel[v] = nxt
            nxt += 1
    outer1, inner1 = w1.cert.outer_and_inner()
    outer2, inner2 = w2.cert.outer_and_inner()
    outer2 = [relabel[v] for v in outer2]
    inner2 = [[relabel[v] for v in f] for f in inner2]
    outer, inner = glue(outer1, inner1, outer2, inner2, list(p1))
    rotation = rotation_from_faces([outer] + inner)
    assign = dict(w1.cert.clique_assignment)
    for v, tri in w2.cert.clique_assignment.items():
        assign[relabel[v]] = sorted_triangle(*(relabel[t] for t in tri))
    i = outer.index(min(outer))
    frame = tuple(outer[i:] + outer[:i])
    return Web(nxt, WebCertificate(frame, rotation, assign))


def induced_frame_paths(w: Web) -> dict[int, list[list[int]]]:
    """Induced proper frame subpaths grouped by number of edges."""
    frame = list(w.frame)
    k = len(frame)
    out: dict[int, list[list[int]]] = {}
    for length in range(1, k - 1):
        for s in range(k):
            for d in (1, -1):
                path = [frame[(s + d * i) % k] for i in range(length + 1)]
                if frame_subpath_ok(w.cert, path):
                    out.setdefault(length, []).append(path)
    return out


def gen_web(seed: int, steps: int, max_clique: int = 2, partner_cap: int = 6) -> Web:
    """Random web from ``steps`` web compositions, starting from cliques.

    Each step composes the current web with either a fresh clique of order
    ``3..max_clique+3`` or an earlier snapshot of at most ``partner_cap``
    vertices, along random induced frame subpaths of a common length.
    """
    if steps < 0:
        raise WebError("steps must be non-negative")
    rng = random.Random(seed)

    def fresh() -> Web:
        return clique_web(3 + rng.randint(0, max_clique))

    web = fresh()
    pool = [web]
    for _ in range(steps):
        small = [p for p in pool if p.n <= partner_cap]
        partner = rng.choice(small) if small and rng.random() < 0.5 else fresh()
        mine = induced_frame_paths(web)
        theirs = induced_frame_paths(partner)
        length = rng.choice(sorted(set(mine) & set(theirs)))
        web = web_compose(web, partner, rng.choice(mine[length]), rng.choice(theirs[length]))
        pool.append(web)
    return web
