"""Disjointness graphs over enumerated k-set / k-multiset universes.

Vertices are the universe members in enumeration order (vertex index ==
rank).  Adjacency joins pairs that fall below the intersection threshold:

  K(n,k)        k-subsets,   edge iff disjoint
  K(n,k,t)      k-subsets,   edge iff |A ∩ B| < t
  M(m,k)        k-multisets, edge iff the multiset intersection is empty
  M(m,k,t)      k-multisets, edge iff |A ∩ B| < t (multiplicity counted)
  M'(m,k,t)     k-multisets, edge iff supports share < t elements

Independent sets are intersecting (resp. t-intersecting, support-t-
intersecting) families.  M(m,k) and M'(m,k,1) coincide edge for edge, as do
M(m,k) and M(m,k,1).  Adjacency is stored as one bitmask per vertex, which
is what the search module's word-parallel candidate operations consume.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    MULTISET,
    SET,
    ContractError,
    Family,
    ScaleExceededError,
    binomial,
    enumerate_k_multisets,
    enumerate_k_subsets,
    multichoose,
)

KIND_KNESER = "K"
KIND_MULTISET_DISJOINT = "M"
KIND_KNESER_T = "K_t"
KIND_MULTISET_T = "M_t"
KIND_MULTISET_SUPPORT_T = "M_support_t"

GRAPH_KINDS = (
    KIND_KNESER,
    KIND_MULTISET_DISJOINT,
    KIND_KNESER_T,
    KIND_MULTISET_T,
    KIND_MULTISET_SUPPORT_T,
)

DEFAULT_VERTEX_CAP = 5000


@dataclass
class DisjointnessGraph:
    """Adjacency-over-ranks view of one universe; immutable in practice."""

    kind: str
    m: int
    k: int
    t: int
    family_kind: str
    vertices: tuple
    adj: list[int]

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def label(self) -> str:
        if self.kind == KIND_KNESER:
            return f"K({self.m},{self.k})"
        if self.kind == KIND_MULTISET_DISJOINT:
            return f"M({self.m},{self.k})"
        if self.kind == KIND_KNESER_T:
            return f"K({self.m},{self.k},{self.t})"
        if self.kind == KIND_MULTISET_T:
            return f"M({self.m},{self.k},{self.t})"
        return f"M'({self.m},{self.k},{self.t})"

    def family_from_mask(self, mask: int) -> Family:
        chosen = [self.vertices[v] for v in _bits(mask)]
        if self.family_kind == MULTISET:
            return Family.of_multisets(self.m, self.k, chosen)
        return Family.of_sets(self.m, self.k, chosen)

    def is_independent_mask(self, mask: int) -> bool:
        rest = mask
        while rest:
            bit = rest & -rest
            v = bit.bit_length() - 1
            if self.adj[v] & mask:
                return False
            rest ^= bit
        return True


def _bits(mask: int):
    while mask:
        bit = mask & -mask
        yield bit.bit_length() - 1
        mask ^= bit


def build_graph(
    kind: str,
    m: int,
    k: int,
    t: int = 1,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> DisjointnessGraph:
    """Build the requested disjointness graph; refuses universes above the
    vertex cap.  Vertex order is the enumeration (= rank) order."""
    if kind not in GRAPH_KINDS:
        raise ContractError(f"unknown graph kind {kind!r}; expected one of {GRAPH_KINDS}")
    if t < 1:
        raise ContractError(f"t must be >= 1, got {t}")
    if kind in (KIND_KNESER, KIND_MULTISET_DISJOINT) and t != 1:
        raise ContractError(f"graph kind {kind} does not take a threshold t")

    set_based = kind in (KIND_KNESER, KIND_KNESER_T)
    count = binomial(m, k) if set_based else multichoose(m, k)
    if count > vertex_cap:
        raise ScaleExceededError(
            f"universe has {count} vertices, exceeding the cap of {vertex_cap}"
        )

    if set_based:
        vertices = tuple(enumerate_k_subsets(m, k))
        masks = [v.mask() for v in vertices]
    else:
        vertices = tuple(enumerate_k_multisets(m, k))
        masks = [v.support_mask() for v in vertices]

    n = len(vertices)
    adj = [0] * n

    if kind in (KIND_KNESER, KIND_MULTISET_DISJOINT):
        def edge(i: int, j: int) -> bool:
            return masks[i] & masks[j] == 0
    elif kind in (KIND_KNESER_T, KIND_MULTISET_SUPPORT_T):
        def edge(i: int, j: int) -> bool:
            return (masks[i] & masks[j]).bit_count() < t
    else:  # KIND_MULTISET_T: true multiset intersection cardinality
        counts = [v.counts for v in vertices]

        def edge(i: int, j: int) -> bool:
            total = 0
            for a, b in zip(counts[i], counts[j]):
                total += a if a < b else b
                if total >= t:
                    return False
            return True

    for i in range(n):
        for j in range(i + 1, n):
            if edge(i, j):
                adj[i] |= 1 << j
                adj[j] |= 1 << i

    family_kind = SET if set_based else MULTISET
    return DisjointnessGraph(kind, m, k, t, family_kind, vertices, adj)
