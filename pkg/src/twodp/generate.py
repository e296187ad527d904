"""Seeded random instances."""

from __future__ import annotations

import random

from .graph import Graph, GraphError, norm_edge


def random_connected_graph(rng: random.Random, n: int, m: int) -> Graph:
    """Uniform random spanning tree shape plus random extra edges, ``m``
    edges in total."""
    top = n * (n - 1) // 2
    if n < 1 or not n - 1 <= m <= top:
        raise GraphError(f"no connected simple graph with n={n}, m={m}")
    order = list(range(n))
    rng.shuffle(order)
    edges = {norm_edge(order[i], order[rng.randrange(i)]) for i in range(1, n)}
    if m - len(edges) <= (top - len(edges)) // 2:
        while len(edges) < m:
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v:
                edges.add(norm_edge(u, v))
    else:
        rest = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
        edges.update(rng.sample(rest, m - len(edges)))
    return Graph.from_edges(n, edges)


def random_instance(rng: random.Random, n: int, m: int, k: int) -> tuple[Graph, list[int]]:
    g = random_connected_graph(rng, n, m)
    return g, rng.sample(range(n), k)
