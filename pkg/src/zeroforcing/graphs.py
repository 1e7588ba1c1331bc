"""Immutable simple-graph type plus the small-graph algorithms shared by every module.

Vertices are dense integers 0..n-1.  Adjacency is kept both as frozensets (for
readable code) and as integer bitmasks (for the hot combinatorial loops), so a
graph never exceeds 64 vertices in the solver paths that rely on masks.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass


class Graph:
    """Simple undirected graph: no loops, no parallel edges, vertex ids 0..n-1.

    Instances are immutable value objects; they hash and compare by (n, edges)
    and are safe to share between threads or cache.
    """

    __slots__ = ("n", "edges", "adj", "bits")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            seen.add((u, v) if u < v else (v, u))
        adj = [set() for _ in range(n)]
        bits = [0] * n
        for u, v in seen:
            adj[u].add(v)
            adj[v].add(u)
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(seen))
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in adj))
        object.__setattr__(self, "bits", tuple(bits))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return (isinstance(other, Graph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def degree_sequence(self) -> tuple:
        return tuple(sorted(len(s) for s in self.adj))

    def min_degree(self) -> int:
        return min((len(s) for s in self.adj), default=0)

    def is_cubic(self) -> bool:
        return self.n > 0 and all(len(s) == 3 for s in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def components(self) -> tuple:
        """Connected components as tuples of sorted vertex ids."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = []
            queue = deque([s])
            seen[s] = True
            while queue:
                u = queue.popleft()
                comp.append(u)
                for v in self.adj[u]:
                    if not seen[v]:
                        seen[v] = True
                        queue.append(v)
            out.append(tuple(sorted(comp)))
        return tuple(out)

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def induced(self, vertices) -> "Graph":
        """Induced subgraph relabeled to 0..k-1 in ascending vertex order."""
        vs = sorted(vertices)
        index = {v: i for i, v in enumerate(vs)}
        edges = [(index[u], index[v]) for u, v in self.edges
                 if u in index and v in index]
        return Graph(len(vs), edges)


# --- standard constructions used throughout the tests ---

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None if the graph is acyclic."""
    best = None
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    cyc = dist[u] + dist[v] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


# --- edge connectivity by unit-capacity max-flow ---

def _max_flow_unit(g: Graph, s: int, t: int) -> int:
    """Number of edge-disjoint s-t paths (each undirected edge used once)."""
    cap = [dict.fromkeys(g.adj[u], 1) for u in range(g.n)]
    flow = 0
    while True:
        prev = [-1] * g.n
        prev[s] = s
        queue = deque([s])
        while queue and prev[t] == -1:
            u = queue.popleft()
            for v, c in cap[u].items():
                if c > 0 and prev[v] == -1:
                    prev[v] = u
                    queue.append(v)
        if prev[t] == -1:
            return flow
        v = t
        while v != s:
            u = prev[v]
            cap[u][v] -= 1
            cap[v][u] = cap[v].get(u, 0) + 1
            v = u
        flow += 1


def edge_connectivity(g: Graph) -> int:
    """Minimum number of edges whose removal disconnects g; 0 if already disconnected.

    Computed as the minimum over all t of the s-t max flow from a fixed s,
    which equals the global minimum edge cut.
    """
    if g.n <= 1 or not g.is_connected():
        return 0
    return min(_max_flow_unit(g, 0, t) for t in range(1, g.n))


# --- isomorphism: refinement-guided backtracking with an explicit witness ---

@dataclass(frozen=True)
class IsoWitness:
    """Either a vertex bijection g -> h preserving adjacency, or None."""

    mapping: tuple | None

    @property
    def isomorphic(self) -> bool:
        return self.mapping is not None


def _refine(g: Graph, colors):
    """Iterated neighborhood refinement with canonical color ids."""
    while True:
        keys = [(colors[v], tuple(sorted(colors[u] for u in g.adj[v])))
                for v in range(g.n)]
        remap = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [remap[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def _refine_pair(g: Graph, h: Graph):
    """Refine both graphs against a shared color table; None if histograms split."""
    cg = [g.degree(v) for v in range(g.n)]
    ch = [h.degree(v) for v in range(h.n)]
    while True:
        kg = [(cg[v], tuple(sorted(cg[u] for u in g.adj[v]))) for v in range(g.n)]
        kh = [(ch[v], tuple(sorted(ch[u] for u in h.adj[v]))) for v in range(h.n)]
        if sorted(kg) != sorted(kh):
            return None
        remap = {k: i for i, k in enumerate(sorted(set(kg)))}
        ng = [remap[k] for k in kg]
        nh = [remap[k] for k in kh]
        if ng == cg and nh == ch:
            return cg, ch
        cg, ch = ng, nh


def are_isomorphic(g: Graph, h: Graph) -> IsoWitness:
    """Deterministic isomorphism test; the witness maps g's ids onto h's."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return IsoWitness(None)
    if g.degree_sequence() != h.degree_sequence():
        return IsoWitness(None)
    pair = _refine_pair(g, h)
    if pair is None:
        return IsoWitness(None)
    cg, ch = pair
    cells = {}
    for v in range(h.n):
        cells.setdefault(ch[v], []).append(v)
    # most-constrained g vertices first: small color class, high degree
    order = sorted(range(g.n), key=lambda v: (len(cells.get(cg[v], ())), -g.degree(v), v))
    mapping = [-1] * g.n
    used = [False] * h.n

    def extend(i):
        if i == g.n:
            return True
        u = order[i]
        for w in cells.get(cg[u], ()):
            if used[w]:
                continue
            ok = True
            for x in g.adj[u]:
                mx = mapping[x]
                if mx != -1 and mx not in h.adj[w]:
                    ok = False
                    break
            if ok:
                for x in range(g.n):
                    mx = mapping[x]
                    if mx != -1 and x not in g.adj[u] and mx in h.adj[w]:
                        ok = False
                        break
            if ok:
                mapping[u] = w
                used[w] = True
                if extend(i + 1):
                    return True
                mapping[u] = -1
                used[w] = False
        return False

    if not extend(0):
        return IsoWitness(None)
    return IsoWitness(tuple(mapping))


def canonical_certificate(g: Graph) -> tuple:
    """Canonical form: two graphs have equal certificates iff they are isomorphic.

    Individualization-refinement over the first non-singleton color class,
    taking the minimum adjacency bitstring over all discrete leaves.  Fine for
    the orders this package works at (n up to ~30).
    """
    n = g.n
    if n == 0:
        return (0, 0)
    adjbits = g.bits
    best = None

    def adjacency_key(perm_inv):
        key = 0
        for i in range(n):
            ai = adjbits[perm_inv[i]]
            for j in range(i):
                key = (key << 1) | ((ai >> perm_inv[j]) & 1)
        return key

    def rec(colors):
        nonlocal best
        cells = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        split = [c for c in sorted(cells) if len(cells[c]) > 1]
        if not split:
            perm_inv = [v for _, v in sorted((colors[v], v) for v in range(n))]
            key = adjacency_key(perm_inv)
            if best is None or key < best:
                best = key
            return
        for v in cells[split[0]]:
            nc = [c + 1 if c >= colors[v] else c for c in colors]
            nc[v] = colors[v]
            rec(_refine(g, nc))

    degs = sorted(set(g.degree(v) for v in range(n)))
    rec(_refine(g, [degs.index(g.degree(v)) for v in range(n)]))
    return (n, best)
