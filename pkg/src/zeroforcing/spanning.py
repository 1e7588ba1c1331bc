"""Layered spanning-tree construction and the tree degree census.

The tree is grown from a root in breadth-first layers; every edge inside a
layer is deleted, and a vertex with several neighbors in the previous layer
keeps only the edge from the neighbor that is maximal under (degree in the
original graph, then vertex id).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph


@dataclass(frozen=True)
class SpanningTree:
    tree: Graph
    root: int
    layers: tuple          # frozensets partitioning the vertices by depth
    deleted: frozenset     # edges of the host graph absent from the tree


@dataclass(frozen=True)
class DegreeCensus:
    """Counts of tree vertices by degree, for trees with maximum degree 3."""

    n1: int
    n2: int
    n3: int


def spanning_tree(g: Graph, root: int) -> SpanningTree:
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} out of range for n={g.n}")
    if not g.is_connected():
        raise ValueError("spanning tree needs a connected graph")

    level = [-1] * g.n
    level[root] = 0
    layers = [[root]]
    frontier = [root]
    while frontier:
        nxt = sorted({v for u in frontier for v in g.adj[u] if level[v] == -1})
        for v in nxt:
            level[v] = len(layers)
        if nxt:
            layers.append(nxt)
        frontier = nxt

    deleted = set()
    for u, v in g.edges:
        if level[u] == level[v]:
            deleted.add((u, v) if u < v else (v, u))
    for layer in layers[1:]:
        for x in layer:
            parents = [u for u in g.adj[x] if level[u] == level[x] - 1]
            if len(parents) > 1:
                keep = max(parents, key=lambda u: (g.degree(u), u))
                for u in parents:
                    if u != keep:
                        deleted.add((u, x) if u < x else (x, u))

    tree = Graph(g.n, g.edges - deleted)
    if len(tree.edges) != g.n - 1:
        raise AssertionError("layer rules did not leave a spanning tree")
    return SpanningTree(tree=tree, root=root,
                        layers=tuple(frozenset(layer) for layer in layers),
                        deleted=frozenset(deleted))


def degree_census(t: SpanningTree) -> DegreeCensus:
    """Exact degree-1/2/3 counts of the tree; rejects trees of higher degree."""
    counts = {1: 0, 2: 0, 3: 0}
    tree = t.tree
    for v in range(tree.n):
        d = tree.degree(v)
        if d not in counts:
            raise ValueError(f"census is defined for maximum degree 3, "
                             f"found degree {d}")
        counts[d] += 1
    census = DegreeCensus(counts[1], counts[2], counts[3])
    n = tree.n
    if census.n1 + census.n2 + census.n3 != n:
        raise AssertionError("degree counts must cover every vertex")
    if census.n1 + 2 * census.n2 + 3 * census.n3 != 2 * n - 2:
        raise AssertionError("tree handshake identity violated")
    return census
