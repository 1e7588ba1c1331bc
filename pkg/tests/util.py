"""Shared test helpers: independent oracles and random graph generators.

The oracles here deliberately avoid the library's bitmask/worklist code paths
so that agreement tests actually compare two implementations.
"""

from __future__ import annotations

import itertools
import random

from zeroforcing import Graph


def naive_closure(g: Graph, initial) -> set:
    """Reference derived coloring: rescan every vertex until nothing changes."""
    black = set(initial)
    changed = True
    while changed:
        changed = False
        for u in sorted(black):
            white = [v for v in g.adj[u] if v not in black]
            if len(white) == 1:
                black.add(white[0])
                changed = True
    return black


def naive_zero_forcing_number(g: Graph):
    """Reference Z by scanning every subset in order of size."""
    vertices = list(range(g.n))
    for k in range(1, g.n + 1):
        for combo in itertools.combinations(vertices, k):
            if len(naive_closure(g, combo)) == g.n:
                return k, set(combo)
    raise AssertionError("unreachable: the full set forces")


def brute_force_isomorphic(g: Graph, h: Graph) -> bool:
    """Permutation-check isomorphism; only sensible for n <= 7."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    for perm in itertools.permutations(range(g.n)):
        if all((perm[u], perm[v]) in h.edges or (perm[v], perm[u]) in h.edges
               for u, v in g.edges):
            return True
    return False


def mapping_is_valid(g: Graph, h: Graph, mapping) -> bool:
    """True when mapping preserves adjacency and non-adjacency both ways."""
    if mapping is None or sorted(mapping) != list(range(g.n)):
        return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v) != h.has_edge(mapping[u], mapping[v]):
                return False
    return True


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if g.is_connected():
            return g


def random_cubic_connected(rng: random.Random, n: int) -> Graph:
    """Uniform-ish connected cubic graph by stub pairing with rejection."""
    if n < 4 or n % 2:
        raise ValueError("cubic graphs need even n >= 4")
    while True:
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for u, v in zip(stubs[0::2], stubs[1::2]):
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if not ok:
            continue
        g = Graph(n, edges)
        if g.is_connected():
            return g


def permuted_copy(rng: random.Random, g: Graph) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
