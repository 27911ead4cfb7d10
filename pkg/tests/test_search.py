import pytest
from hypothesis import given

from multifam import (
    ContractError,
    ScaleExceededError,
    ak_threshold_r,
    binomial,
    build_graph,
    canonical_form,
    common_intersection,
    enumerate_maximum_independent_sets,
    frankl_multiset,
    frankl_set_size,
    hm_multiset,
    is_t_intersecting,
    max_independent_set,
    max_intersecting_empty_common,
    max_p_s1_family,
    max_t_intersecting,
    max_t_intersecting_nontrivial,
    max_union_two_intersecting,
    multichoose,
)
from multifam.search import (
    NODE_LIMIT_HIT,
    SUPPORT_INTERSECTION,
    _BipartiteSolver,
    _CliqueFreeSolver,
    _MaxCliqueSolver,
)

from bruteforce import (
    bits,
    brute_max_clique_free,
    brute_max_independent_set,
    brute_max_induced_bipartite,
)
from conftest import random_adjacency


def _solve_mis_raw(adj):
    """Drive the solver core directly on a raw adjacency."""
    n = len(adj)
    full = (1 << n) - 1
    comp = [full & ~adj[v] & ~(1 << v) for v in range(n)]
    best, mask, _nodes, limited = _MaxCliqueSolver(comp).solve()
    assert not limited
    return best, mask


# -- graph construction -------------------------------------------------------

def test_petersen_shape():
    graph = build_graph("K", 5, 2)
    assert graph.n_vertices == 10
    assert graph.edge_count() == 15
    assert all(graph.degree(v) == 3 for v in range(10))


def test_multiset_graph_sizes():
    assert build_graph("M", 4, 3).n_vertices == multichoose(4, 3) == 20


def test_support_t1_graph_equals_disjointness_graph():
    plain = build_graph("M", 4, 3)
    support = build_graph("M_support_t", 4, 3, 1)
    true_t = build_graph("M_t", 4, 3, 1)
    assert plain.adj == support.adj == true_t.adj


def test_graph_cap_and_kind_validation():
    with pytest.raises(ScaleExceededError):
        build_graph("M", 20, 10, vertex_cap=100)
    with pytest.raises(ContractError):
        build_graph("Q", 4, 2)
    with pytest.raises(ContractError):
        build_graph("M", 4, 2, t=2)


# -- maximum independent set ---------------------------------------------------

@given(random_adjacency(max_n=12))
def test_mis_matches_bruteforce(adj):
    best, mask = _solve_mis_raw(adj)
    assert best == brute_max_independent_set(adj)
    assert mask.bit_count() == best
    assert all(adj[v] & mask == 0 for v in bits(mask))


def test_mis_reference_values():
    assert max_independent_set(build_graph("K", 5, 2)).optimum == 4
    assert max_independent_set(build_graph("M", 4, 3)).optimum == 10
    assert max_independent_set(build_graph("M", 5, 3)).optimum == binomial(6, 2)


def test_mis_determinism():
    graph = build_graph("M", 5, 3)
    first = max_independent_set(graph)
    second = max_independent_set(graph)
    assert first.optimum == second.optimum
    assert first.nodes_explored == second.nodes_explored
    assert first.witness == second.witness


def test_mis_edgeless_graph_takes_everything():
    graph = build_graph("K", 3, 2)  # all 2-subsets of [3] pairwise intersect
    result = max_independent_set(graph)
    assert result.optimum == 3


def test_node_limit_is_reported_not_silent():
    graph = build_graph("M", 5, 3)
    result = max_independent_set(graph, node_limit=1)
    assert result.status == NODE_LIMIT_HIT
    assert result.optimum <= 15
    assert is_t_intersecting(result.witness, 1)


def test_node_limit_on_every_constrained_solver():
    for result in (
        max_intersecting_empty_common(5, 3, node_limit=2),
        max_t_intersecting_nontrivial(5, 3, 2, node_limit=2),
        max_p_s1_family(5, 2, 2, node_limit=1),
        max_union_two_intersecting(4, 2, node_limit=2),
    ):
        assert result.status == NODE_LIMIT_HIT
        assert result.optimum == len(result.witness)


# -- enumeration of optima ------------------------------------------------------

def test_enumerate_optima_boundary_case_has_multiple_classes():
    graph = build_graph("M", 4, 3)
    enum = enumerate_maximum_independent_sets(graph)
    assert enum.complete and enum.optimum == 10
    classes = {canonical_form(f).members for f in enum.families}
    assert len(classes) >= 2


def test_enumerate_optima_above_boundary_is_unique_star_class():
    graph = build_graph("M", 5, 3)
    enum = enumerate_maximum_independent_sets(graph)
    assert enum.complete and len(enum.families) == 5
    classes = {canonical_form(f).members for f in enum.families}
    assert len(classes) == 1


def test_enumerate_optima_complete_graph():
    graph = build_graph("M", 3, 1)  # distinct singletons are pairwise disjoint
    enum = enumerate_maximum_independent_sets(graph)
    assert enum.optimum == 1
    assert len(enum.families) == 3


def test_enumerate_cap_flags_partial_output():
    graph = build_graph("M", 4, 3)
    enum = enumerate_maximum_independent_sets(graph, cap=2)
    assert not enum.complete
    assert len(enum.families) == 2


# -- empty common intersection ---------------------------------------------------

def test_empty_common_reference_values():
    assert max_intersecting_empty_common(6, 3).optimum == 16
    assert max_intersecting_empty_common(4, 3).optimum == 10
    assert max_intersecting_empty_common(3, 1).optimum == 0


def test_empty_common_seed_equals_unseeded():
    seeded = max_intersecting_empty_common(5, 3, seed=hm_multiset(5, 3))
    plain = max_intersecting_empty_common(5, 3)
    assert seeded.optimum == plain.optimum


def test_empty_common_witness_is_valid():
    result = max_intersecting_empty_common(5, 3)
    assert is_t_intersecting(result.witness, 1)
    assert common_intersection(result.witness).cardinality == 0


def test_empty_common_rejects_invalid_seed():
    with pytest.raises(ContractError):
        max_intersecting_empty_common(4, 3, seed=frankl_multiset(4, 3, 2, 0))


# -- P(s,1) families --------------------------------------------------------------

def test_p_s1_delegates_for_s_equal_one():
    via_p = max_p_s1_family(4, 2, 1)
    via_mis = max_independent_set(build_graph("M", 4, 2))
    assert via_p.optimum == via_mis.optimum


@given(random_adjacency(max_n=9))
def test_clique_free_matches_bruteforce(adj):
    best, _mask, _nodes, limited = _CliqueFreeSolver(adj, 2, None).solve()
    assert not limited
    assert best == brute_max_clique_free(adj, 2)


def test_p_s1_reference_value():
    result = max_p_s1_family(7, 2, 2)
    assert result.proved and result.optimum == 13


def test_p_s1_saturated_s_takes_whole_universe():
    # M(3,2) holds at most 3 pairwise disjoint members, so s=3 is no constraint
    result = max_p_s1_family(3, 2, 3)
    assert result.optimum == multichoose(3, 2)


# -- induced bipartite --------------------------------------------------------------

@given(random_adjacency(max_n=9))
def test_bipartite_matches_bruteforce(adj):
    best, (a_mask, b_mask), _nodes, limited = _BipartiteSolver(adj, None).solve()
    assert not limited
    assert best == brute_max_induced_bipartite(adj)
    assert (a_mask | b_mask).bit_count() == best
    assert all(adj[v] & a_mask == 0 for v in bits(a_mask))
    assert all(adj[v] & b_mask == 0 for v in bits(b_mask))


def test_bipartite_reference_values():
    assert max_union_two_intersecting(5, 2).optimum == 9
    assert max_union_two_intersecting(4, 1).optimum == 2


# -- t-intersecting searches ----------------------------------------------------------

def test_t_intersecting_reference_value():
    result = max_t_intersecting(5, 4, 2)
    assert result.proved and result.optimum == 17
    assert is_t_intersecting(result.witness, 2)


def test_support_mode_never_beats_true_mode():
    for (m, k, t) in ((3, 2, 2), (4, 3, 2), (5, 3, 2), (4, 4, 3)):
        true_mode = max_t_intersecting(m, k, t).optimum
        support_mode = max_t_intersecting(m, k, t, mode=SUPPORT_INTERSECTION).optimum
        assert support_mode <= true_mode


def test_modes_agree_inside_the_compression_regime():
    # compression turns any t-intersecting family into a support-t-intersecting
    # one of the same size, so the two optima coincide for m >= 2k-t
    for t in range(1, 4):
        for k in range(t, 5):
            for m in range(max(1, 2 * k - t), 6):
                true_mode = max_t_intersecting(m, k, t).optimum
                support_mode = max_t_intersecting(m, k, t, mode=SUPPORT_INTERSECTION).optimum
                assert true_mode == support_mode, (m, k, t)


def test_homomorphism_bound_on_grid():
    # support-mode optimum never exceeds the set-side optimum at n = m+k-1
    for m in range(2, 6):
        for k in range(2, 5):
            for t in range(1, min(k, 3) + 1):
                support_mode = max_t_intersecting(m, k, t, mode=SUPPORT_INTERSECTION)
                sets = max_independent_set(build_graph("K_t", m + k - 1, k, t))
                assert support_mode.optimum <= sets.optimum, (m, k, t)


def test_tiny_ground_set_forces_common_t_multiset():
    result = max_t_intersecting(2, 3, 2)
    assert common_intersection(result.witness).cardinality >= 2


def test_nontrivial_t_reference_value():
    result = max_t_intersecting_nontrivial(5, 3, 2)
    assert result.proved and result.optimum == 4
    assert common_intersection(result.witness).cardinality < 2
    unconstrained = max_t_intersecting(5, 3, 2)
    assert result.optimum <= unconstrained.optimum


# -- structural thresholds ---------------------------------------------------------------

def test_threshold_examples():
    assert ak_threshold_r(5, 4, 2).r == 1
    for m in range(5, 9):
        threshold = ak_threshold_r(m, 3, 1)
        assert threshold.r == 0 and not threshold.boundary


def test_threshold_boundaries():
    assert ak_threshold_r(5, 4, 3).tied == (0, 1)
    assert ak_threshold_r(4, 3, 1).tied == (0, 1)  # m = k+1 for t = 1
    boundary = ak_threshold_r(4, 4, 2)
    assert boundary.boundary and boundary.tied == (2, 3)


def test_threshold_boundary_sizes_tie():
    threshold = ak_threshold_r(5, 4, 3)
    n = 5 + 4 - 1
    assert frankl_set_size(n, 4, 3, threshold.tied[0]) == frankl_set_size(n, 4, 3, threshold.tied[1])


def test_threshold_contract_errors():
    with pytest.raises(ContractError):
        ak_threshold_r(3, 4, 2)  # m <= k-t+1
    with pytest.raises(ContractError):
        ak_threshold_r(5, 3, 4)  # t > k
