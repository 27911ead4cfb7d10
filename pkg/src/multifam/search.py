"""Exact desk-scale extremal searches over disjointness graphs.

The workhorse is a branch-and-bound maximum-clique search run on the
complement of a disjointness graph (a clique there is an intersecting
family).  Candidate sets are Python integers used as bitsets, so the inner
set operations are word-parallel AND / ANDNOT; the upper bound is a greedy
sequential colouring of the candidate set.  Vertices are ordered by
descending degree with rank as the tie-break, so every run is
deterministic: optima, witnesses and node counts never vary.

Constrained variants:

  * families whose common intersection must end below a cardinality limit
    (maximum intersecting family with empty common intersection; maximum
    t-intersecting family with no common t-multiset) branch first on which
    member breaks the common core, then fall back to plain expansion once
    the core is small enough;
  * P(s,1) families (no s+1 pairwise disjoint members) exclude one vertex
    of a violated (s+1)-clique at a time, with earlier choices pinned;
  * unions of two intersecting families assign each vertex to one of two
    independent sides or drop it, first placed vertex pinned to side one.

Every search re-validates its witness against the raw pairwise predicate,
independent of the adjacency structure, and honest node-limit reporting
replaces any silent truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    MULTISET,
    ContractError,
    Family,
    Multiset,
    common_intersection,
    enumerate_k_multisets,
    has_property_p_s1,
    is_support_t_intersecting,
    is_t_intersecting,
    multichoose,
    multiset_rank,
)
from .graphs import (
    DEFAULT_VERTEX_CAP,
    KIND_KNESER,
    KIND_KNESER_T,
    KIND_MULTISET_DISJOINT,
    KIND_MULTISET_SUPPORT_T,
    KIND_MULTISET_T,
    DisjointnessGraph,
    ScaleExceededError,
    build_graph,
)

PROVED_OPTIMAL = "proved_optimal"
NODE_LIMIT_HIT = "node_limit_hit"

CLIQUE_FREE_VERTEX_CAP = 40
BIPARTITE_VERTEX_CAP = 40


@dataclass
class SearchResult:
    optimum: int
    witness: Family
    status: str
    nodes_explored: int

    @property
    def proved(self) -> bool:
        return self.status == PROVED_OPTIMAL


@dataclass
class EnumerationResult:
    optimum: int
    families: list[Family]
    complete: bool
    nodes_explored: int


class _Budget(Exception):
    pass


class _CapHit(Exception):
    pass


def _bits(mask: int):
    while mask:
        bit = mask & -mask
        yield bit.bit_length() - 1
        mask ^= bit


class _NodeCounter:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit: int | None):
        self.nodes = 0
        self.limit = limit

    def tick(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise _Budget


def _greedy_color(p_mask: int, adj: list[int]) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of the candidate set.  Returns vertices
    and their colour numbers with colours non-decreasing; the last colour is
    an upper bound on the largest clique inside p_mask."""
    order: list[int] = []
    colors: list[int] = []
    color = 0
    rest = p_mask
    while rest:
        color += 1
        avail = rest
        while avail:
            bit = avail & -avail
            v = bit.bit_length() - 1
            order.append(v)
            colors.append(color)
            rest ^= bit
            avail = (avail ^ bit) & ~adj[v]
    return order, colors


class _MaxCliqueSolver:
    """Exact maximum clique with colouring bounds (Tomita-style)."""

    def __init__(self, adj: list[int], node_limit: int | None = None):
        self.n = len(adj)
        order = sorted(range(self.n), key=lambda v: (-adj[v].bit_count(), v))
        self.to_old = order
        new_index = {old: new for new, old in enumerate(order)}
        self.adj = [0] * self.n
        for old, mask in enumerate(adj):
            for old_nb in _bits(mask):
                self.adj[new_index[old]] |= 1 << new_index[old_nb]
        self.counter = _NodeCounter(node_limit)
        self.best = 0
        self.best_mask = 0

    def _seed_greedy(self) -> None:
        chosen = 0
        size = 0
        cand = (1 << self.n) - 1
        while cand:
            bit = cand & -cand
            v = bit.bit_length() - 1
            chosen |= bit
            size += 1
            cand &= self.adj[v]
        self.best = size
        self.best_mask = chosen

    def _expand(self, r_size: int, r_mask: int, p_mask: int) -> None:
        self.counter.tick()
        order, colors = _greedy_color(p_mask, self.adj)
        for i in range(len(order) - 1, -1, -1):
            if r_size + colors[i] <= self.best:
                return
            v = order[i]
            bit = 1 << v
            new_p = p_mask & self.adj[v]
            if new_p:
                self._expand(r_size + 1, r_mask | bit, new_p)
            elif r_size + 1 > self.best:
                self.best = r_size + 1
                self.best_mask = r_mask | bit
            p_mask &= ~bit

    def solve(self) -> tuple[int, int, int, bool]:
        """Returns (clique number, witness mask in original indexing,
        nodes explored, limit_hit)."""
        self._seed_greedy()
        limited = False
        try:
            if self.n:
                self._expand(0, 0, (1 << self.n) - 1)
        except _Budget:
            limited = True
        return self.best, self._remap(self.best_mask), self.counter.nodes, limited

    def _remap(self, mask: int) -> int:
        out = 0
        for v in _bits(mask):
            out |= 1 << self.to_old[v]
        return out

    # -- enumeration of all cliques of a target size ------------------------

    def enumerate_target(self, target: int, cap: int | None) -> tuple[list[int], bool, int]:
        """All cliques of exactly `target` vertices (each reported once), up
        to `cap`; returns (masks in original indexing, complete, nodes)."""
        self.found: list[int] = []
        self.cap = cap
        self.target = target
        complete = True
        try:
            self._enum(0, 0, (1 << self.n) - 1)
        except _CapHit:
            complete = False
        except _Budget:
            complete = False
        return [self._remap(m) for m in self.found], complete, self.counter.nodes

    def _enum(self, r_size: int, r_mask: int, p_mask: int) -> None:
        self.counter.tick()
        if r_size == self.target:
            self.found.append(r_mask)
            if self.cap is not None and len(self.found) >= self.cap:
                raise _CapHit
            return
        if not p_mask:
            return
        order, colors = _greedy_color(p_mask, self.adj)
        if r_size + colors[-1] < self.target:
            return
        for v in order:
            bit = 1 << v
            above = ~((bit << 1) - 1)
            self._enum(r_size + 1, r_mask | bit, p_mask & self.adj[v] & above)


def _complement_adj(graph: DisjointnessGraph) -> list[int]:
    n = graph.n_vertices
    full = (1 << n) - 1
    return [full & ~graph.adj[v] & ~(1 << v) for v in range(n)]


def _validate_witness(graph: DisjointnessGraph, fam: Family) -> None:
    if graph.kind in (KIND_KNESER, KIND_MULTISET_DISJOINT):
        ok = is_t_intersecting(fam, 1)
    elif graph.kind in (KIND_KNESER_T, KIND_MULTISET_T):
        ok = is_t_intersecting(fam, graph.t)
    else:
        ok = is_support_t_intersecting(fam, graph.t)
    if not ok:
        raise RuntimeError("internal error: witness fails the raw pairwise predicate")


def max_independent_set(graph: DisjointnessGraph, node_limit: int | None = None) -> SearchResult:
    """Exact maximum independent set (= largest intersecting family for the
    graph's threshold).  The optimum, witness and node count are
    deterministic."""
    solver = _MaxCliqueSolver(_complement_adj(graph), node_limit)
    best, mask, nodes, limited = solver.solve()
    witness = graph.family_from_mask(mask)
    _validate_witness(graph, witness)
    status = NODE_LIMIT_HIT if limited else PROVED_OPTIMAL
    return SearchResult(best, witness, status, nodes)


def enumerate_maximum_independent_sets(
    graph: DisjointnessGraph,
    cap: int | None = 10000,
    node_limit: int | None = None,
    optimum: int | None = None,
) -> EnumerationResult:
    """All maximum independent sets (up to `cap`), for uniqueness-class
    analysis.  complete=False flags a truncated enumeration."""
    comp = _complement_adj(graph)
    nodes_total = 0
    if optimum is None:
        base = max_independent_set(graph, node_limit)
        if not base.proved:
            return EnumerationResult(base.optimum, [base.witness], False, base.nodes_explored)
        optimum = base.optimum
        nodes_total = base.nodes_explored
    solver = _MaxCliqueSolver(comp, node_limit)
    masks, complete, nodes = solver.enumerate_target(optimum, cap)
    families = []
    for mask in masks:
        fam = graph.family_from_mask(mask)
        _validate_witness(graph, fam)
        families.append(fam)
    return EnumerationResult(optimum, families, complete, nodes_total + nodes)


# ---------------------------------------------------------------------------
# constrained search: common core below a cardinality limit
# ---------------------------------------------------------------------------

class _SmallCoreSolver:
    """Maximum pairwise t_pair-intersecting multiset family whose common
    intersection ends with cardinality below core_limit.

    While the running core is still too large, branching is over the
    earliest included member that strictly shrinks it (earlier candidates
    barred, so the branches partition the space); once the core drops below
    the limit it can never grow again and plain clique expansion takes
    over."""

    def __init__(
        self,
        counts: list[tuple[int, ...]],
        compat: list[int],
        core_limit: int,
        node_limit: int | None,
    ):
        self.counts = counts
        self.compat = compat
        self.limit = core_limit
        self.counter = _NodeCounter(node_limit)
        self.best = 0
        self.best_mask = 0

    def solve(self, seed_mask: int = 0) -> tuple[int, int, int, bool]:
        if seed_mask:
            self.best = seed_mask.bit_count()
            self.best_mask = seed_mask
        limited = False
        n = len(self.counts)
        try:
            if n:
                self._dfs(0, 0, None, (1 << n) - 1)
        except _Budget:
            limited = True
        return self.best, self.best_mask, self.counter.nodes, limited

    def _dfs(self, r_size: int, r_mask: int, core, p_mask: int) -> None:
        self.counter.tick()
        if core is not None and sum(core) < self.limit:
            self._expand(r_size, r_mask, p_mask)
            return
        if not p_mask:
            return
        # colouring runs on the compatibility graph itself: colour classes
        # are pairwise-incompatible sets, so #colours bounds the family size
        order, colors = _greedy_color(p_mask, self.compat)
        if r_size + colors[-1] <= self.best:
            return
        if core is not None and not self._core_fixable(core, p_mask):
            return
        reducers = self._reducers(core, p_mask)
        banned = 0
        for v in reducers:
            bit = 1 << v
            if core is None:
                new_core = self.counts[v]
            else:
                new_core = tuple(min(c, x) for c, x in zip(core, self.counts[v]))
            self._dfs(r_size + 1, r_mask | bit, new_core, p_mask & self.compat[v] & ~banned)
            banned |= bit

    def _core_fixable(self, core, p_mask: int) -> bool:
        """Even including every remaining candidate, can the core drop
        below the limit?"""
        ach = list(core)
        total = sum(ach)
        if total < self.limit:
            return True
        for v in _bits(p_mask):
            cv = self.counts[v]
            changed = False
            for idx, c in enumerate(ach):
                if cv[idx] < c:
                    total -= c - cv[idx]
                    ach[idx] = cv[idx]
                    changed = True
            if changed and total < self.limit:
                return True
        return total < self.limit

    def _reducers(self, core, p_mask: int) -> list[int]:
        if core is None:
            return list(_bits(p_mask))
        out = []
        for v in _bits(p_mask):
            cv = self.counts[v]
            if any(x < c for c, x in zip(core, cv)):
                out.append(v)
        return out

    def _expand(self, r_size: int, r_mask: int, p_mask: int) -> None:
        self.counter.tick()
        if r_size > self.best:
            self.best = r_size
            self.best_mask = r_mask
        order, colors = _greedy_color(p_mask, self.compat)
        for i in range(len(order) - 1, -1, -1):
            if r_size + colors[i] <= self.best:
                return
            v = order[i]
            bit = 1 << v
            new_p = p_mask & self.compat[v]
            if new_p:
                self._expand(r_size + 1, r_mask | bit, new_p)
            elif r_size + 1 > self.best:
                self.best = r_size + 1
                self.best_mask = r_mask | bit
            p_mask &= ~bit


def _multiset_universe(m: int, k: int, vertex_cap: int) -> list[Multiset]:
    count = multichoose(m, k)
    if count > vertex_cap:
        raise ScaleExceededError(
            f"universe has {count} vertices, exceeding the cap of {vertex_cap}"
        )
    return list(enumerate_k_multisets(m, k))


def _pairwise_compat_masks(counts: list[tuple[int, ...]], t: int) -> list[int]:
    n = len(counts)
    compat = [0] * n
    for i in range(n):
        ci = counts[i]
        for j in range(i + 1, n):
            total = 0
            for a, b in zip(ci, counts[j]):
                total += a if a < b else b
                if total >= t:
                    break
            if total >= t:
                compat[i] |= 1 << j
                compat[j] |= 1 << i
    return compat


def _seed_mask_for(universe: list[Multiset], seed: Family | None, m: int, k: int,
                   t_pair: int, core_limit: int) -> int:
    if seed is None:
        return 0
    if seed.kind != MULTISET or seed.m != m or seed.k != k:
        raise ContractError("seed family does not match the search universe")
    if not is_t_intersecting(seed, t_pair):
        raise ContractError("seed family is not pairwise compatible")
    if len(seed) and common_intersection(seed).cardinality >= core_limit:
        raise ContractError("seed family violates the common-core constraint")
    mask = 0
    for a in seed.members:
        mask |= 1 << multiset_rank(a)
    return mask


def _small_core_search(
    m: int,
    k: int,
    t_pair: int,
    core_limit: int,
    node_limit: int | None,
    seed: Family | None,
    vertex_cap: int,
) -> SearchResult:
    universe = _multiset_universe(m, k, vertex_cap)
    counts = [a.counts for a in universe]
    compat = _pairwise_compat_masks(counts, t_pair)
    seed_mask = _seed_mask_for(universe, seed, m, k, t_pair, core_limit)
    solver = _SmallCoreSolver(counts, compat, core_limit, node_limit)
    best, mask, nodes, limited = solver.solve(seed_mask)
    witness = Family.of_multisets(m, k, (universe[v] for v in _bits(mask)))
    if not is_t_intersecting(witness, t_pair):
        raise RuntimeError("internal error: witness fails pairwise compatibility")
    if len(witness) and common_intersection(witness).cardinality >= core_limit:
        raise RuntimeError("internal error: witness violates the core constraint")
    status = NODE_LIMIT_HIT if limited else PROVED_OPTIMAL
    return SearchResult(best, witness, status, nodes)


def max_intersecting_empty_common(
    m: int,
    k: int,
    node_limit: int | None = None,
    seed: Family | None = None,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> SearchResult:
    """Largest intersecting family of k-multisets of [m] whose common
    intersection is empty.  A verified seed family may provide the initial
    incumbent; it never changes the optimum."""
    if k < 1 or m < 1:
        raise ContractError(f"need m, k >= 1, got ({m}, {k})")
    return _small_core_search(m, k, 1, 1, node_limit, seed, vertex_cap)


def max_t_intersecting_nontrivial(
    m: int,
    k: int,
    t: int,
    node_limit: int | None = None,
    seed: Family | None = None,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> SearchResult:
    """Largest t-intersecting family of k-multisets whose common
    intersection has cardinality below t."""
    if not 1 <= t <= k:
        raise ContractError(f"need 1 <= t <= k, got t={t}, k={k}")
    return _small_core_search(m, k, t, t, node_limit, seed, vertex_cap)


# ---------------------------------------------------------------------------
# clique-free induced subgraphs: P(s,1) families
# ---------------------------------------------------------------------------

class _CliqueFreeSolver:
    """Maximum vertex subset whose induced subgraph has no (s+1)-clique.

    Branches on a violated clique: one vertex of it must leave, and the
    vertices considered before it are pinned inside, so subtrees partition
    the space."""

    def __init__(self, adj: list[int], s: int, node_limit: int | None):
        self.adj = adj
        self.n = len(adj)
        self.s = s
        self.counter = _NodeCounter(node_limit)
        self.best = 0
        self.best_mask = 0

    def solve(self) -> tuple[int, int, int, bool]:
        full = (1 << self.n) - 1 if self.n else 0
        self._seed_greedy()
        limited = False
        try:
            self._rec(full, 0)
        except _Budget:
            limited = True
        return self.best, self.best_mask, self.counter.nodes, limited

    def _seed_greedy(self) -> None:
        chosen = 0
        for v in range(self.n):
            if self._find_clique(chosen & self.adj[v], self.s) is None:
                chosen |= 1 << v
        self.best = chosen.bit_count()
        self.best_mask = chosen

    def _find_clique(self, cand_mask: int, size: int):
        """Lexicographically first clique of `size` vertices inside
        cand_mask, or None."""
        if size == 0:
            return []
        if cand_mask.bit_count() < size:
            return None
        mask = cand_mask
        while mask:
            bit = mask & -mask
            v = bit.bit_length() - 1
            mask ^= bit
            sub = cand_mask & self.adj[v] & ~((bit << 1) - 1)
            rest = self._find_clique(sub, size - 1)
            if rest is not None:
                return [v] + rest
        return None

    def _rec(self, included: int, forced: int) -> None:
        self.counter.tick()
        if included.bit_count() <= self.best:
            return
        clique = self._find_clique(included, self.s + 1)
        if clique is None:
            self.best = included.bit_count()
            self.best_mask = included
            return
        pinned = forced
        for v in clique:
            bit = 1 << v
            if not (pinned & bit):
                self._rec(included & ~bit, pinned)
            pinned |= bit


def clique_free_search(graph: DisjointnessGraph, s: int, node_limit: int | None = None) -> SearchResult:
    """Largest vertex subset of a disjointness graph inducing no
    (s+1)-clique, i.e. the largest P(s,1) family for that universe."""
    if s < 1:
        raise ContractError(f"s must be >= 1, got {s}")
    if s == 1:
        return max_independent_set(graph, node_limit)
    solver = _CliqueFreeSolver(graph.adj, s, node_limit)
    best, mask, nodes, limited = solver.solve()
    witness = graph.family_from_mask(mask)
    if not has_property_p_s1(witness, s):
        raise RuntimeError("internal error: witness fails the P(s,1) predicate")
    status = NODE_LIMIT_HIT if limited else PROVED_OPTIMAL
    return SearchResult(best, witness, status, nodes)


def max_p_s1_family(
    m: int,
    k: int,
    s: int,
    node_limit: int | None = None,
    vertex_cap: int = CLIQUE_FREE_VERTEX_CAP,
) -> SearchResult:
    """Largest family of k-multisets of [m] in which no s+1 members are
    pairwise disjoint.  s=1 delegates to the independent-set search."""
    if s == 1:
        graph = build_graph(KIND_MULTISET_DISJOINT, m, k)
    else:
        graph = build_graph(KIND_MULTISET_DISJOINT, m, k, vertex_cap=vertex_cap)
    return clique_free_search(graph, s, node_limit)


# ---------------------------------------------------------------------------
# induced bipartite subgraphs: unions of two intersecting families
# ---------------------------------------------------------------------------

class _BipartiteSolver:
    """Maximum vertex subset inducing a bipartite subgraph: every chosen
    vertex is assigned to one of two sides, each side independent."""

    def __init__(self, adj: list[int], node_limit: int | None):
        self.adj = adj
        self.n = len(adj)
        self.order = sorted(range(self.n), key=lambda v: (-adj[v].bit_count(), v))
        self.counter = _NodeCounter(node_limit)
        self.best = 0
        self.best_sides = (0, 0)

    def solve(self) -> tuple[int, tuple[int, int], int, bool]:
        limited = False
        try:
            self._rec(0, 0, 0, 0)
        except _Budget:
            limited = True
        return self.best, self.best_sides, self.counter.nodes, limited

    def _rec(self, idx: int, a_mask: int, b_mask: int, count: int) -> None:
        self.counter.tick()
        if count + (self.n - idx) <= self.best:
            return
        if idx == self.n:
            self.best = count
            self.best_sides = (a_mask, b_mask)
            return
        v = self.order[idx]
        bit = 1 << v
        if not (self.adj[v] & a_mask):
            self._rec(idx + 1, a_mask | bit, b_mask, count + 1)
        if (a_mask | b_mask) and not (self.adj[v] & b_mask):
            self._rec(idx + 1, a_mask, b_mask | bit, count + 1)
        self._rec(idx + 1, a_mask, b_mask, count)


def induced_bipartite_search(graph: DisjointnessGraph, node_limit: int | None = None) -> SearchResult:
    """Largest vertex subset of a disjointness graph inducing a bipartite
    subgraph; the two colour classes are two intersecting families."""
    solver = _BipartiteSolver(graph.adj, node_limit)
    best, (a_mask, b_mask), nodes, limited = solver.solve()
    side_a = graph.family_from_mask(a_mask)
    side_b = graph.family_from_mask(b_mask)
    if not (is_t_intersecting(side_a, 1) and is_t_intersecting(side_b, 1)):
        raise RuntimeError("internal error: a side of the witness is not intersecting")
    witness = graph.family_from_mask(a_mask | b_mask)
    status = NODE_LIMIT_HIT if limited else PROVED_OPTIMAL
    return SearchResult(best, witness, status, nodes)


def max_union_two_intersecting(
    m: int,
    k: int,
    node_limit: int | None = None,
    vertex_cap: int = BIPARTITE_VERTEX_CAP,
) -> SearchResult:
    """Largest union of two intersecting families of k-multisets of [m]
    (equivalently, the largest induced bipartite subgraph of M(m,k))."""
    graph = build_graph(KIND_MULTISET_DISJOINT, m, k, vertex_cap=vertex_cap)
    return induced_bipartite_search(graph, node_limit)


# ---------------------------------------------------------------------------
# t-intersecting searches and the structural threshold
# ---------------------------------------------------------------------------

TRUE_INTERSECTION = "true_intersection"
SUPPORT_INTERSECTION = "support_intersection"


def max_t_intersecting(
    m: int,
    k: int,
    t: int,
    node_limit: int | None = None,
    mode: str = TRUE_INTERSECTION,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> SearchResult:
    """Largest family of k-multisets with pairwise |A ∩ B| >= t, counting
    multiplicity (true mode) or distinct support overlap (support mode)."""
    if mode not in (TRUE_INTERSECTION, SUPPORT_INTERSECTION):
        raise ContractError(f"unknown mode {mode!r}")
    kind = KIND_MULTISET_T if mode == TRUE_INTERSECTION else KIND_MULTISET_SUPPORT_T
    graph = build_graph(kind, m, k, t, vertex_cap=vertex_cap)
    return max_independent_set(graph, node_limit)


@dataclass(frozen=True)
class AkThreshold:
    """Structural parameter r for the t-intersecting maximum at n = m+k-1.

    boundary=True means n sits exactly on the threshold between r and r+1,
    where the two candidate families have equal size; `tied` then carries
    the pair."""

    r: int
    boundary: bool
    tied: tuple[int, int] | None


def ak_threshold_r(m: int, k: int, t: int) -> AkThreshold:
    """Locate n = m+k-1 within the open threshold intervals
    (k-t+1)(2 + (t-1)/(r+1)) < n < (k-t+1)(2 + (t-1)/r), evaluated in exact
    rational arithmetic ((t-1)/r is taken as infinity for r = 0).

    Requires m > k-t+1 so that n > 2k-t and the classification applies.
    """
    if t < 1 or k < t:
        raise ContractError(f"need 1 <= t <= k, got t={t}, k={k}")
    if m <= k - t + 1:
        raise ContractError(
            f"need m > k-t+1 (i.e. n > 2k-t), got m={m}, k={k}, t={t}"
        )
    n = m + k - 1
    for r in range(0, k - t + 1):
        lower = (k - t + 1) * (2 + Fraction(t - 1, r + 1))
        if n == lower:
            return AkThreshold(r, True, (r, r + 1))
        if r == 0:
            if n > lower:
                return AkThreshold(0, False, None)
        else:
            upper = (k - t + 1) * (2 + Fraction(t - 1, r))
            if lower < n < upper:
                return AkThreshold(r, False, None)
    raise RuntimeError(
        f"internal error: no structural r found for m={m}, k={k}, t={t}"
    )
