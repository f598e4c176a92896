"""Independent brute-force ground truth for small graphs.

Holds a dense bitmask graph type plus exact maximum-clique and chromatic
number solvers (branch and bound, saturation-guided, deterministic with
ties broken toward the lowest vertex index).  Budgets are counted in node
expansions, never wall time, so results reproduce across machines; an
exhausted budget degrades to a clearly flagged bracket instead of a wrong
answer.

Nothing in this module knows about the colouring construction it is used
to cross-check, which is the point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

from .grassmann import (GrassmannParams, Subspace, adjacent,
                        encode_subspace, enumerate_subspaces)

DEFAULT_VERTEX_CAP = 5000
DEFAULT_BUDGET = 5_000_000


@dataclass(frozen=True)
class DenseGraph:
    """Undirected loop-free graph: labels plus bitmask adjacency rows."""

    labels: tuple[str, ...]
    adj: tuple[int, ...]

    def __post_init__(self):
        n = len(self.labels)
        if len(self.adj) != n:
            raise ValueError("labels and adjacency size disagree")
        for i, row in enumerate(self.adj):
            if row >> n:
                raise ValueError("adjacency bits beyond the vertex range")
            if row & (1 << i):
                raise ValueError(f"loop at vertex {i}")
            mask = row
            while mask:
                j = (mask & -mask).bit_length() - 1
                mask &= mask - 1
                if not self.adj[j] & (1 << i):
                    raise ValueError("adjacency is not symmetric")

    @property
    def num_vertices(self) -> int:
        return len(self.labels)

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()


def dense_graph(labels: Sequence[str], pred: Callable[[int, int], bool]) -> DenseGraph:
    """Build a graph from a symmetric predicate on vertex indices."""
    n = len(labels)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if pred(i, j):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return DenseGraph(tuple(labels), tuple(adj))


def build_graph(params: GrassmannParams, cap: int = DEFAULT_VERTEX_CAP) -> DenseGraph:
    """Materialize J_q(n, m, t) with vertices in canonical order."""
    count = params.vertex_count()
    if count > cap:
        raise ValueError(f"vertex count {count} exceeds the cap {cap}")
    verts: list[Subspace] = list(enumerate_subspaces(params.q, params.n, params.m))
    labels = [encode_subspace(S) for S in verts]
    t = params.t
    return dense_graph(labels, lambda i, j: adjacent(verts[i], verts[j], t))


def johnson_graph(n: int, m: int, t: int) -> DenseGraph:
    """J(n, m, t): m-subsets of [n], adjacent when sharing >= t elements."""
    verts = list(itertools.combinations(range(1, n + 1), m))
    sets = [frozenset(v) for v in verts]
    labels = [",".join(str(x) for x in v) for v in verts]
    return dense_graph(labels, lambda i, j: len(sets[i] & sets[j]) >= t)


# -- greedy colouring ---------------------------------------------------------

def dsatur(adj: Sequence[int]) -> list[int]:
    """Greedy colouring by maximum saturation; ties go to the lowest index."""
    n = len(adj)
    colours = [-1] * n
    neighbour_colours: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        best = -1
        best_sat = -1
        for v in range(n):
            if colours[v] < 0 and len(neighbour_colours[v]) > best_sat:
                best = v
                best_sat = len(neighbour_colours[v])
        c = 0
        while c in neighbour_colours[best]:
            c += 1
        colours[best] = c
        mask = adj[best]
        while mask:
            u = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            if colours[u] < 0:
                neighbour_colours[u].add(c)
    return colours


# -- exact maximum clique -----------------------------------------------------

@dataclass(frozen=True)
class CliqueResult:
    size: int
    witness: tuple[int, ...]
    exact: bool
    nodes: int


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n: int):
        self.left = n

    def spend(self) -> bool:
        self.left -= 1
        return self.left >= 0


def max_clique(g: DenseGraph, budget: int = DEFAULT_BUDGET) -> CliqueResult:
    """Branch and bound with greedy colouring bounds (exact within budget)."""
    n = g.num_vertices
    if n == 0:
        return CliqueResult(0, (), True, 0)
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    adj = [0] * n
    for i, v in enumerate(order):
        mask = g.adj[v]
        while mask:
            u = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            adj[i] |= 1 << pos[u]
    best: list[int] = []
    stack: list[int] = []
    bud = _Budget(budget)
    truncated = False

    def expand(candidates: int) -> None:
        nonlocal best, truncated
        if truncated or not bud.spend():
            truncated = True
            return
        # greedy colour classes give per-vertex bounds
        seq: list[int] = []
        bound: list[int] = []
        colour = 0
        rest = candidates
        while rest:
            colour += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= avail - 1  # drop v
                avail &= ~adj[v]    # and its neighbours, for this colour class
                rest &= ~(1 << v)
                seq.append(v)
                bound.append(colour)
        for i in range(len(seq) - 1, -1, -1):
            if len(stack) + bound[i] <= len(best):
                return
            v = seq[i]
            stack.append(v)
            sub = candidates & adj[v]
            if sub:
                expand(sub)
            elif len(stack) > len(best):
                best = stack[:]
            stack.pop()
            candidates &= ~(1 << v)

    expand((1 << n) - 1)
    witness = tuple(sorted(order[i] for i in best))
    return CliqueResult(len(best), witness, not truncated, budget - max(bud.left, 0))


# -- exact chromatic number ---------------------------------------------------

@dataclass(frozen=True)
class ChromaticResult:
    lower: int
    upper: int
    colouring: tuple[int, ...]
    exact: bool
    nodes: int

    @property
    def value(self) -> int:
        if not self.exact:
            raise ValueError("chromatic number not determined within budget")
        return self.upper


def _k_colourable(g: DenseGraph, k: int, clique: tuple[int, ...],
                  bud: _Budget) -> tuple[str, list[int] | None]:
    """Decide k-colourability; returns ('sat', colours), ('unsat', None) or
    ('budget', None).  Clique vertices are pre-pinned to distinct colours."""
    n = g.num_vertices
    if len(clique) > k:
        return "unsat", None
    colours = [-1] * n
    sat_mask = [0] * n  # bitmask of colours used by coloured neighbours
    sat_count = [0] * n
    uncoloured = n
    max_used = 0

    def paint(v: int, c: int, changed: list[int]) -> None:
        colours[v] = c
        mask = g.adj[v]
        bit = 1 << c
        while mask:
            u = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            if colours[u] < 0 and not sat_mask[u] & bit:
                sat_mask[u] |= bit
                sat_count[u] += 1
                changed.append(u)

    def unpaint(v: int, c: int, changed: list[int]) -> None:
        colours[v] = -1
        bit = 1 << c
        for u in changed:
            sat_mask[u] &= ~bit
            sat_count[u] -= 1

    pre: list[int] = []
    for i, v in enumerate(clique):
        paint(v, i, pre)
        uncoloured -= 1
        max_used = max(max_used, i + 1)

    def rec(uncoloured: int, max_used: int) -> str:
        if uncoloured == 0:
            return "sat"
        if not bud.spend():
            return "budget"
        v = -1
        v_sat = -1
        for u in range(n):
            if colours[u] < 0 and sat_count[u] > v_sat:
                v = u
                v_sat = sat_count[u]
        limit = min(k, max_used + 1)
        avail = ~sat_mask[v] & ((1 << limit) - 1)
        while avail:
            c = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            changed: list[int] = []
            paint(v, c, changed)
            res = rec(uncoloured - 1, max(max_used, c + 1))
            unpaint(v, c, changed)
            if res != "unsat":
                return res
        return "unsat"

    res = rec(uncoloured, max_used)
    return (res, colours[:] if res == "sat" else None)


def exact_chromatic(g: DenseGraph, budget: int = DEFAULT_BUDGET) -> ChromaticResult:
    """Exact chromatic number by upward decision search from the clique bound."""
    n = g.num_vertices
    if n == 0:
        return ChromaticResult(0, 0, (), True, 0)
    clique = max_clique(g, budget)
    lower = clique.size
    greedy = dsatur(g.adj)
    upper = max(greedy) + 1
    if lower == upper:
        return ChromaticResult(lower, upper, tuple(greedy), True, clique.nodes)
    bud = _Budget(budget)
    best = greedy
    k = lower
    while k < upper:
        status, col = _k_colourable(g, k, clique.witness, bud)
        if status == "sat":
            assert col is not None
            return ChromaticResult(k, k, tuple(col), True,
                                   budget - max(bud.left, 0))
        if status == "budget":
            return ChromaticResult(k, upper, tuple(best), False,
                                   budget - max(bud.left, 0))
        k += 1  # proved unsat, chromatic number exceeds k
    return ChromaticResult(upper, upper, tuple(best), True, budget - max(bud.left, 0))


# -- DIMACS export ------------------------------------------------------------

def write_dimacs(g: DenseGraph, path: str, labels_path: str | None = None) -> None:
    """Write `p edge V E` plus sorted 1-indexed `e i j` lines; labels sidecar."""
    lines = [f"p edge {g.num_vertices} {g.num_edges}"]
    for i in range(g.num_vertices):
        mask = g.adj[i] >> (i + 1) << (i + 1)
        while mask:
            j = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            lines.append(f"e {i + 1} {j + 1}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    if labels_path is not None:
        with open(labels_path, "w") as fh:
            for i, lab in enumerate(g.labels):
                fh.write(f"{i + 1} {lab}\n")
