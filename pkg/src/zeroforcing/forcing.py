"""Color-change closure and the exact zero forcing solver.

Black sets are manipulated as integer bitmasks; subsets of fixed size are
enumerated in colexicographic order (numeric order of masks), so the witness
the solver reports is the colexicographically least minimum one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph


@dataclass(frozen=True)
class DerivedColoring:
    """Fixpoint of the color-change rule: final black set plus the forces applied."""

    black: frozenset
    trace: tuple  # ordered (forcer, forced) pairs


@dataclass(frozen=True)
class ZeroForcingResult:
    """Solver outcome.  `z` and `witness` are None when the budget ran out,
    in which case `lower_bound` is the best size bound proven so far."""

    z: int | None
    witness: frozenset | None
    lower_bound: int

    @property
    def exact(self) -> bool:
        return self.z is not None


def _check_vertices(g: Graph, vertices):
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")


def _close_mask(bits, black: int, full: int) -> int:
    """Closure on bitmasks: a black vertex with exactly one white neighbor forces it."""
    active = black
    while active:
        low = active & -active
        active ^= low
        white = bits[low.bit_length() - 1] & ~black
        if white and white & (white - 1) == 0:
            black |= white
            if black == full:
                return black
            # the forced vertex and its black neighbors may force next
            active |= (bits[white.bit_length() - 1] & black) | white
    return black


def closure(g: Graph, initial) -> DerivedColoring:
    """Derived coloring of `initial`, with the forces in deterministic order."""
    _check_vertices(g, initial)
    black = 0
    for v in initial:
        black |= 1 << v
    bits = g.bits
    trace = []
    queue = sorted(initial)
    head = 0
    queued = black
    while head < len(queue):
        u = queue[head]
        head += 1
        queued &= ~(1 << u)
        white = bits[u] & ~black
        if white and white & (white - 1) == 0:
            v = white.bit_length() - 1
            black |= white
            trace.append((u, v))
            for w in (v, *(x for x in g.adj[v] if (black >> x) & 1)):
                if not (queued >> w) & 1:
                    queued |= 1 << w
                    queue.append(w)
    final = frozenset(v for v in range(g.n) if (black >> v) & 1)
    return DerivedColoring(black=final, trace=tuple(trace))


def is_zero_forcing_set(g: Graph, vertices) -> bool:
    _check_vertices(g, vertices)
    black = 0
    for v in vertices:
        black |= 1 << v
    full = (1 << g.n) - 1
    return _close_mask(g.bits, black, full) == full


def _subsets_of_size(n: int, k: int):
    """All k-subsets of 0..n-1 as masks, in colex (ascending numeric) order."""
    if k == 0:
        yield 0
        return
    s = (1 << k) - 1
    top = 1 << n
    while s < top:
        yield s
        c = s & -s
        r = s + c
        s = (((r ^ s) >> 2) // c) | r


def _mask_vertices(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _solve_component(g: Graph, comp, max_size: int, prune: bool):
    """Exact Z on one component; returns (z, witness set) or (None, lower bound)."""
    vs = sorted(comp)
    index = {v: i for i, v in enumerate(vs)}
    k = len(vs)
    bits = [0] * k
    for v in vs:
        for u in g.adj[v]:
            bits[index[v]] |= 1 << index[u]
    full = (1 << k) - 1
    lower = max(1, min(bin(b).count("1") for b in bits))
    for size in range(lower, min(k, max_size) + 1):
        for s in _subsets_of_size(k, size):
            if prune and _redundant(bits, s, full):
                continue
            if _close_mask(bits, s, full) == full:
                return size, frozenset(vs[i] for i in _mask_vertices(s))
    if max_size >= k:
        raise AssertionError("the full vertex set always forces")
    return None, min(max_size + 1, k)


def _redundant(bits, s: int, full: int) -> bool:
    """True when some member of s is forced by the rest anyway.

    Safe to skip during increasing-size search: a hit here would imply a
    forcing set one size smaller, which previous rounds already ruled out.
    """
    for v in _mask_vertices(s):
        rest = s & ~(1 << v)
        if (_close_mask(bits, rest, full) >> v) & 1:
            return True
    return False


def zero_forcing_number(g: Graph, budget: int | None = None,
                        prune: bool = False) -> ZeroForcingResult:
    """Exact zero forcing number with the colex-least minimum witness.

    Disconnected graphs are solved per component and summed.  With a budget,
    the search never considers witnesses larger than `budget` in total; an
    exhausted budget yields an inexact result carrying the proven lower bound.
    """
    if g.n == 0:
        raise ValueError("zero forcing number of the empty graph is undefined")
    comps = g.components()
    floor = {c: max(1, min(g.degree(v) for v in c)) for c in comps}
    total = 0
    witness: set = set()
    remaining = sum(floor.values())
    for comp in comps:
        remaining -= floor[comp]
        if budget is None:
            cap = len(comp)
        else:
            cap = budget - total - remaining
            if cap < floor[comp]:
                return ZeroForcingResult(None, None, total + floor[comp] + remaining)
        z, wit = _solve_component(g, comp, cap, prune)
        if z is None:
            return ZeroForcingResult(None, None, total + wit + remaining)
        total += z
        witness |= wit
    return ZeroForcingResult(total, frozenset(witness), total)
