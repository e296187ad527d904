"""Scaling benchmark: solve on random connected graphs, per kernel backend."""

from __future__ import annotations

import random
import statistics
import time
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import kernels
from .generate import random_instance
from .solver import Crossed, solve

HEADER = ("backend", "n", "m", "seeds", "median_wall_s", "max_wall_s", "max_recursive_calls", "median_searches", "crossed")


@dataclass(frozen=True)
class Run:
    backend: str
    n: int
    m: int
    seed: int
    wall: float
    recursive_calls: int
    searches: int
    crossed: bool


@dataclass(frozen=True)
class Row:
    backend: str
    n: int
    m: int
    seeds: int
    median_wall: float
    max_wall: float
    max_recursive_calls: int
    median_searches: float
    crossed: int

    def tsv(self) -> str:
        return "\t".join(
            str(x)
            for x in (
                self.backend,
                self.n,
                self.m,
                self.seeds,
                f"{self.median_wall:.6f}",
                f"{self.max_wall:.6f}",
                self.max_recursive_calls,
                f"{self.median_searches:g}",
                self.crossed,
            )
        )


def one_run(backend: str, n: int, density: float, k: int, seed: int) -> Run:
    kernels.use_backend(backend)
    m = min(int(density * n), n * (n - 1) // 2)
    rng = random.Random(f"{n}:{m}:{k}:{seed}")
    g, t = random_instance(rng, n, m, k)
    start = time.perf_counter()
    outcome, stats = solve(g, t)
    wall = time.perf_counter() - start
    return Run(backend, n, m, seed, wall, stats.recursive_calls, stats.searches, isinstance(outcome, Crossed))


def summarize(runs: Sequence[Run]) -> Row:
    r0 = runs[0]
    return Row(
        r0.backend,
        r0.n,
        r0.m,
        len(runs),
        statistics.median(r.wall for r in runs),
        max(r.wall for r in runs),
        max(r.recursive_calls for r in runs),
        statistics.median(r.searches for r in runs),
        sum(r.crossed for r in runs),
    )


def run_bench(
    sizes: Iterable[int],
    seeds: int = 20,
    density: float = 3.0,
    k: int = 4,
    backends: Sequence[str] = ("compiled", "python"),
    jobs: int = 1,
) -> list[Row]:
    """One row per (backend, size); instances are identical across
    backends for the same size and seed."""
    tasks = [(b, n, density, k, s) for b in backends for n in sizes for s in range(seeds)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            runs = list(pool.map(one_run, *zip(*tasks)))
    else:
        previous = kernels.BACKEND
        try:
            runs = [one_run(*task) for task in tasks]
        finally:
            kernels.use_backend(previous)
    groups: dict[tuple[str, int], list[Run]] = {}
    for r in runs:
        groups.setdefault((r.backend, r.n), []).append(r)
    return [summarize(group) for group in groups.values()]
