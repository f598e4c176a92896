"""Powers of the Johnson graph and their colourings.

Vertices of J(n, m, t) are the m-subsets of {1, ..., n}; two are adjacent
when they share at least t elements.  Two proper colourings are provided:

* `gs_colouring` sums, modulo r = (p^{m-t+1} - 1)/(p - 1) for the smallest
  prime p >= n + 1, an injective placement of points into a Bose-Chowla
  set whose (m-t)-fold sums are pairwise distinct.  Same colour then forces
  an intersection of at most t - 1 elements, and the palette is at most r.
* `greedy_colouring` runs saturation-guided greedy colouring over the
  subsets in lexicographic order; at desk scale it usually beats r.

The Bose-Chowla set itself is built from discrete logarithms of the
projective line spanned by {1, g} in F_{p^{m-t+1}} and then *verified
exhaustively*; if verification ever failed, a greedy search over Z_r would
be used instead, and the construction path is recorded either way.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .ff import discrete_log, field_make, is_prime, primitive_element
from .oracle import dsatur


@dataclass(frozen=True)
class BoseChowlaSet:
    """Residues mod r whose h-fold sums (repetition allowed) are distinct."""

    p: int
    h: int
    r: int
    elements: tuple[int, ...]
    construction: str

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(self.elements)))


@dataclass
class JohnsonColouring:
    """A proper colouring of J(n, m, t) keyed by sorted m-subsets of [n]."""

    n: int
    m: int
    t: int
    method: str
    colours: dict[tuple[int, ...], int]
    palette: int
    modulus: int | None = None
    bose_chowla: BoseChowlaSet | None = dc_field(default=None, repr=False)


def subsets_lex(n: int, m: int) -> list[tuple[int, ...]]:
    """All m-subsets of {1..n} as sorted tuples, lexicographically."""
    return list(itertools.combinations(range(1, n + 1), m))


def _validate(n: int, m: int, t: int) -> None:
    if m >= n:
        raise ValueError(f"need m < n, got m={m}, n={n}")
    if not 1 <= t <= m - 1:
        raise ValueError(f"need 1 <= t <= m-1, got t={t}, m={m}")


def smallest_prime_geq(x: int) -> int:
    if x < 2:
        raise ValueError("search starts at 2")
    p = x
    while not is_prime(p):
        p += 1
    return p


def _sumset_is_distinct(elements, h: int, r: int) -> bool:
    seen = set()
    for combo in itertools.combinations_with_replacement(elements, h):
        s = sum(combo) % r
        if s in seen:
            return False
        seen.add(s)
    return True


def bose_chowla(p: int, h: int) -> BoseChowlaSet:
    """Size p+1 set in Z_r, r = (p^{h+1}-1)/(p-1), with distinct h-fold sums.

    The set is the discrete-log image of a transversal of the projective
    line spanned by {1, g} in F_{p^{h+1}}, g primitive.  The defining
    property is checked exhaustively and the construction fails loudly
    rather than return an unverified set.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if h < 1:
        raise ValueError(f"need h >= 1, got {h}")
    F = field_make(p, h + 1)  # raises beyond desk scale
    r = (p ** (h + 1) - 1) // (p - 1)
    g = primitive_element(F)
    # transversal of the p+1 projective points of span{1, g}: 1 and a + g
    reps = [F.one] + [F.from_index(a) + g for a in range(p)]
    elements = tuple(sorted(discrete_log(F, g, v) % r for v in reps))
    construction = "projective-span"
    if len(set(elements)) != p + 1 or not _sumset_is_distinct(elements, h, r):
        elements, construction = _bose_chowla_search(p, h, r), "greedy-search"
    return BoseChowlaSet(p, h, r, elements, construction)


def _bose_chowla_search(p: int, h: int, r: int) -> tuple[int, ...]:
    """Fallback: greedy scan of Z_r for a distinct-sums set of size p+1."""
    chosen: list[int] = []
    for cand in range(r):
        trial = chosen + [cand]
        if _sumset_is_distinct(trial, h, r):
            chosen = trial
            if len(chosen) == p + 1:
                return tuple(chosen)
    raise ValueError(f"no distinct-sums set of size {p + 1} found in Z_{r}")


def gs_colouring(n: int, m: int, t: int) -> JohnsonColouring:
    """Sum-of-placements colouring with palette at most r."""
    _validate(n, m, t)
    h = m - t
    p = smallest_prime_geq(n + 1)
    bc = bose_chowla(p, h)
    placement = bc.elements  # order-preserving injection of [n], n <= p+1
    colours = {}
    for S in subsets_lex(n, m):
        colours[S] = sum(placement[a - 1] for a in S) % bc.r
    palette = len(set(colours.values()))
    return JohnsonColouring(n, m, t, "gs", colours, palette,
                            modulus=bc.r, bose_chowla=bc)


def greedy_colouring(n: int, m: int, t: int) -> JohnsonColouring:
    """Saturation-greedy colouring, deterministic (ties to the lowest vertex)."""
    _validate(n, m, t)
    verts = subsets_lex(n, m)
    adj = _adjacency_masks(verts, t)
    assignment = dsatur(adj)
    colours = {S: c for S, c in zip(verts, assignment)}
    return JohnsonColouring(n, m, t, "greedy", colours, len(set(assignment)))


def _adjacency_masks(verts: list[tuple[int, ...]], t: int) -> list[int]:
    vsets = [frozenset(v) for v in verts]
    nv = len(verts)
    adj = [0] * nv
    for i in range(nv):
        for j in range(i + 1, nv):
            if len(vsets[i] & vsets[j]) >= t:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def johnson_bounds(n: int, m: int, t: int) -> tuple[int, int]:
    """(counting lower bound, palette of the sum colouring's residue ring).

    The lower bound is ceil(C(n,m) * C(m,t) / C(n,t)): vertices divided by
    the constant-weight-code cap on independent sets.
    """
    _validate(n, m, t)
    from math import comb
    lower = -(-comb(n, m) * comb(m, t) // comb(n, t))
    p = smallest_prime_geq(n + 1)
    gs_upper = (p ** (m - t + 1) - 1) // (p - 1)
    return lower, gs_upper


def is_proper(col: JohnsonColouring) -> bool:
    """Exhaustive check: same colour forces intersection <= t-1."""
    verts = list(col.colours)
    for i in range(len(verts)):
        si = set(verts[i])
        ci = col.colours[verts[i]]
        for j in range(i + 1, len(verts)):
            if ci == col.colours[verts[j]] and len(si & set(verts[j])) >= col.t:
                return False
    return True
