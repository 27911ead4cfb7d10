import pytest
from hypothesis import given
from hypothesis import strategies as st

from multifam import (
    ContractError,
    Family,
    KSet,
    Multiset,
    binomial,
    common_intersection,
    enumerate_k_multisets,
    enumerate_k_subsets,
    has_property_p_s1,
    is_support_t_intersecting,
    is_t_intersecting,
    kset_rank,
    kset_unrank,
    multichoose,
    multiset_rank,
    multiset_unrank,
)

from conftest import multiset_family, multiset_pair


def ms(m, *elements):
    return Multiset.from_elements(m, elements)


def fam(m, k, *element_tuples):
    return Family.of_multisets(m, k, (ms(m, *e) for e in element_tuples))


# -- counting ---------------------------------------------------------------

def test_counting_values():
    assert multichoose(5, 4) == 70
    assert multichoose(3, 2) == 6
    assert multichoose(7, 0) == 1
    assert multichoose(1, 3) == 1
    assert binomial(7, 2) == 21
    assert binomial(4, 6) == 0


def test_counting_is_exact_at_width_beyond_64_bits():
    assert multichoose(50, 50) == binomial(99, 50)
    assert multichoose(50, 50) > 2**64


def test_counting_rejects_negatives():
    with pytest.raises(ContractError):
        binomial(-1, 2)
    with pytest.raises(ContractError):
        multichoose(3, -1)


# -- multiset basics --------------------------------------------------------

def test_multiplicity():
    a = ms(3, 1, 1, 3)
    assert a.multiplicity(1) == 2
    assert a.multiplicity(2) == 0
    assert ms(4, 1, 2, 2, 2).multiplicity(2) == 3
    with pytest.raises(ContractError):
        a.multiplicity(4)


def test_cardinality():
    assert Multiset(3, (0, 0, 0)).cardinality == 0
    assert ms(3, 1, 1, 3).cardinality == 3
    assert ms(5, 2, 2, 2, 2).cardinality == 4


def test_intersect():
    assert ms(3, 1, 1, 2).intersect(ms(3, 1, 2, 2)) == ms(3, 1, 2)
    a = ms(3, 1, 1, 3)
    assert a.intersect(a) == a
    assert ms(4, 1, 1, 1, 1).intersect(ms(4, 2, 2, 2, 2)).cardinality == 0
    with pytest.raises(ContractError):
        ms(3, 1).intersect(ms(4, 1))


def test_support():
    assert ms(3, 1, 1, 3).support() == KSet(3, (1, 3))
    assert Multiset(3, (0, 0, 0)).support() == KSet(3, ())
    assert ms(5, 2, 2, 2, 2).support() == KSet(5, (2,))


def test_support_equals_intersection_with_ones_vector():
    ones = Multiset(4, (1, 1, 1, 1))
    for a in enumerate_k_multisets(4, 3):
        assert a.support().members == a.intersect(ones).support().members
        assert a.intersect(ones).counts == tuple(min(c, 1) for c in a.counts)


def test_multiset_validation():
    with pytest.raises(ContractError):
        Multiset(0, ())
    with pytest.raises(ContractError):
        Multiset(2, (1, -1))
    with pytest.raises(ContractError):
        Multiset(2, (1, 1, 1))
    with pytest.raises(ContractError):
        Multiset.from_elements(3, (0,))


# -- family predicates ------------------------------------------------------

def test_is_t_intersecting_examples():
    assert is_t_intersecting(fam(2, 2, (1, 1), (1, 2)), 1)
    assert is_t_intersecting(fam(4, 4, (1, 1, 2, 3), (2, 3, 4, 4)), 2)
    assert not is_t_intersecting(fam(2, 2, (1, 1), (2, 2)), 1)


def test_is_support_t_intersecting_examples():
    assert not is_support_t_intersecting(fam(3, 3, (1, 1, 2), (1, 1, 3)), 2)
    assert is_support_t_intersecting(fam(4, 3, (1, 2, 3), (1, 2, 4)), 2)
    assert is_support_t_intersecting(fam(4, 3, (1, 1, 1)), 3)


@given(multiset_family(), st.integers(2, 4))
def test_t_intersecting_is_monotone_in_t(family, t):
    if is_t_intersecting(family, t):
        assert is_t_intersecting(family, t - 1)


@given(multiset_family(), st.integers(1, 4))
def test_support_intersecting_implies_t_intersecting(family, t):
    if is_support_t_intersecting(family, t):
        assert is_t_intersecting(family, t)


def test_common_intersection():
    assert common_intersection(fam(3, 3, (1, 1, 2), (1, 1, 3))) == ms(3, 1, 1)
    assert common_intersection(fam(4, 2, (1, 2), (3, 4))).cardinality == 0
    single = fam(3, 2, (1, 3))
    assert common_intersection(single) == ms(3, 1, 3)
    with pytest.raises(ContractError):
        common_intersection(Family.of_multisets(3, 2, ()))


def test_has_property_p_s1():
    everything = Family.universe(5, 2)
    assert not has_property_p_s1(everything, 2)  # {1,1},{2,2},{3,3} pairwise disjoint
    assert has_property_p_s1(fam(2, 2, (1, 1), (1, 2)), 1)
    hitting = Family.of_multisets(
        7, 2, (a for a in enumerate_k_multisets(7, 2) if a.support_mask() & 0b11)
    )
    assert has_property_p_s1(hitting, 2)


# -- enumeration ------------------------------------------------------------

def test_enumeration_counts_match_multichoose():
    for m in range(1, 8):
        for k in range(0, 7):
            assert sum(1 for _ in enumerate_k_multisets(m, k)) == multichoose(m, k)


def test_enumeration_examples():
    assert len(list(enumerate_k_multisets(3, 2))) == 6
    assert len(list(enumerate_k_multisets(5, 4))) == 70
    only = list(enumerate_k_multisets(1, 3))
    assert only == [ms(1, 1, 1, 1)]


def test_enumeration_is_lexicographic_on_counts():
    seq = [a.counts for a in enumerate_k_multisets(4, 3)]
    assert seq == sorted(seq)
    assert len(set(seq)) == len(seq)


def test_subset_enumeration():
    assert len(list(enumerate_k_subsets(4, 2))) == 6
    assert list(enumerate_k_subsets(5, 5)) == [KSet(5, (1, 2, 3, 4, 5))]
    assert len(list(enumerate_k_subsets(8, 4))) == 70
    assert list(enumerate_k_subsets(3, 4)) == []


# -- ranking ----------------------------------------------------------------

def test_multiset_rank_roundtrip_exhaustive():
    for i, a in enumerate(enumerate_k_multisets(4, 3)):
        assert multiset_rank(a) == i
        assert multiset_unrank(4, 3, i) == a


def test_kset_rank_roundtrip_exhaustive():
    for i, b in enumerate(enumerate_k_subsets(8, 4)):
        assert kset_rank(b) == i
        assert kset_unrank(8, 4, i) == b


def test_rank_boundaries():
    first = multiset_unrank(5, 3, 0)
    assert first == next(iter(enumerate_k_multisets(5, 3)))
    last = list(enumerate_k_multisets(5, 3))[-1]
    assert multiset_rank(last) == multichoose(5, 3) - 1
    with pytest.raises(ContractError):
        multiset_unrank(5, 3, multichoose(5, 3))
    with pytest.raises(ContractError):
        kset_unrank(5, 2, -1)


# -- algebraic properties ---------------------------------------------------

@given(multiset_pair())
def test_intersection_cardinality_bound(pair):
    a, b = pair
    assert a.intersect(b).cardinality <= min(a.cardinality, b.cardinality)


@given(multiset_pair())
def test_intersection_commutes_and_support_distributes(pair):
    a, b = pair
    assert a.intersect(b) == b.intersect(a)
    lhs = a.intersect(b).support().members
    rhs = tuple(sorted(set(a.support().members) & set(b.support().members)))
    assert lhs == rhs


def test_intersection_associative_exhaustive_small():
    universe = list(enumerate_k_multisets(3, 2))
    for a in universe:
        assert a.intersect(a) == a
        for b in universe:
            assert a.intersect(b) == b.intersect(a)
            for c in universe:
                assert a.intersect(b).intersect(c) == a.intersect(b.intersect(c))


# -- family canonicalization ------------------------------------------------

def test_family_dedupes_and_orders():
    family = fam(3, 2, (2, 1), (1, 2), (1, 1))
    assert len(family) == 2
    keys = [a.counts for a in family.members]
    assert keys == sorted(keys)


def test_family_validates_members():
    with pytest.raises(ContractError):
        Family.of_multisets(3, 2, [ms(3, 1, 1, 1)])
    with pytest.raises(ContractError):
        Family.of_multisets(3, 2, [ms(4, 1, 2)])
    with pytest.raises(ContractError):
        Family(3, 2, "bag", ())
