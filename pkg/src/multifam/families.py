"""Named extremal family constructors, closed-form sizes, and isomorphism.

Constructors build the family by filtering the enumerated universe, so the
member order is always canonical.  Closed-form sizes are provided where one
exists; hm_t families have no closed form and are counted by enumeration.

Isomorphism is relabeling of the ground set.  canonical_form scans all m!
relabelings and keeps the lexicographically smallest sorted member list;
that is unambiguous and fine at desk scale, guarded at m <= 9.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Sequence

from .core import (
    MULTISET,
    ContractError,
    Family,
    KSet,
    Multiset,
    ScaleExceededError,
    binomial,
    enumerate_k_multisets,
    enumerate_k_subsets,
    is_t_intersecting,
    multichoose,
)

CANONICAL_FORM_MAX_GROUND = 9

FAMILY_NAMES = (
    "star",
    "fixed_multiset",
    "frankl_set",
    "frankl_multiset",
    "hm_set",
    "hm_multiset",
    "hm_t_set",
    "hm_t_multiset",
    "hit_s",
    "hajnal_rothschild",
)


@dataclass(frozen=True)
class FamilySpec:
    """Name plus parameters for a named family; see build_family."""

    name: str
    m: int
    k: int
    t: int | None = None
    r: int | None = None
    s: int | None = None
    anchor: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.name not in FAMILY_NAMES:
            raise ContractError(f"unknown family name {self.name!r}")


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def star(m: int, k: int, x: int) -> Family:
    """All k-multisets of [m] that contain the fixed element x.

    Size is multichoose(m, k-1) = C(m+k-2, k-1).
    """
    if not 1 <= x <= m:
        raise ContractError(f"anchor element {x} outside [1, {m}]")
    if k < 1:
        raise ContractError(f"k must be >= 1, got {k}")
    return Family.of_multisets(
        m, k, (a for a in enumerate_k_multisets(m, k) if a.counts[x - 1] >= 1)
    )


def star_size(m: int, k: int) -> int:
    return multichoose(m, k - 1)


def fixed_multiset(m: int, k: int, anchor: Multiset) -> Family:
    """All k-multisets containing a fixed multiset (element-wise coverage).

    The size multichoose(m, k - |anchor|) depends only on |anchor|, not on
    its multiplicities.
    """
    if anchor.ground_size != m:
        raise ContractError(f"anchor ground size {anchor.ground_size} != {m}")
    if anchor.cardinality > k:
        raise ContractError(
            f"anchor cardinality {anchor.cardinality} exceeds k={k}"
        )
    return Family.of_multisets(
        m, k, (a for a in enumerate_k_multisets(m, k) if a.contains(anchor))
    )


def fixed_multiset_size(m: int, k: int, anchor_cardinality: int) -> int:
    return multichoose(m, k - anchor_cardinality)


def _check_frankl_params(ground: int, k: int, t: int, r: int) -> None:
    if t < 1 or r < 0:
        raise ContractError(f"need t >= 1 and r >= 0, got ({t}, {r})")
    if t + 2 * r > ground:
        raise ContractError(f"window [t+2r] = [{t + 2 * r}] exceeds ground [{ground}]")
    if t + r > k:  # equivalently r > k-t
        raise ContractError(f"need t+r <= k, got t+r={t + r}, k={k}")


def frankl_set(n: int, k: int, t: int, r: int) -> Family:
    """All k-subsets of [n] meeting [t+2r] in at least t+r elements."""
    _check_frankl_params(n, k, t, r)
    window = (1 << (t + 2 * r)) - 1
    return Family.of_sets(
        n,
        k,
        (
            b
            for b in enumerate_k_subsets(n, k)
            if (b.mask() & window).bit_count() >= t + r
        ),
    )


def frankl_set_size(n: int, k: int, t: int, r: int) -> int:
    _check_frankl_params(n, k, t, r)
    w = t + 2 * r
    return sum(
        binomial(w, j) * binomial(n - w, k - j) for j in range(t + r, min(w, k) + 1)
    )


def frankl_multiset(m: int, k: int, t: int, r: int) -> Family:
    """All k-multisets of [m] whose support meets [t+2r] in >= t+r elements."""
    _check_frankl_params(m, k, t, r)
    window = (1 << (t + 2 * r)) - 1
    return Family.of_multisets(
        m,
        k,
        (
            a
            for a in enumerate_k_multisets(m, k)
            if (a.support_mask() & window).bit_count() >= t + r
        ),
    )


def frankl_multiset_size(m: int, k: int, t: int, r: int) -> int:
    """Closed form: choose the j window elements of the support, place one
    copy of each, then distribute the remaining k-j copies over those j
    elements and the m-(t+2r) elements outside the window."""
    _check_frankl_params(m, k, t, r)
    w = t + 2 * r
    return sum(
        binomial(w, j) * multichoose(j + m - w, k - j)
        for j in range(t + r, min(w, k) + 1)
    )


def hm_set(n: int, k: int) -> Family:
    """Maximum intersecting k-set family with no common element: the sets
    through 1 that meet [2, k+1], plus [2, k+1] itself."""
    if k < 2:
        raise ContractError(f"k must be >= 2, got {k}")
    if n < k + 1:
        raise ContractError(f"need n >= k+1, got n={n}, k={k}")
    window = ((1 << (k + 1)) - 1) & ~1  # elements 2..k+1
    adjoined = KSet(n, tuple(range(2, k + 2)))
    members = [
        b
        for b in enumerate_k_subsets(n, k)
        if 1 in b.members and (b.mask() & window) != 0
    ]
    members.append(adjoined)
    return Family.of_sets(n, k, members)


def hm_set_size(n: int, k: int) -> int:
    return binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 1


def hm_multiset(m: int, k: int) -> Family:
    """Multiset analogue of hm_set: multisets containing 1 whose support
    meets [2, k+1], plus the set [2, k+1] viewed as a multiset."""
    if k < 2:
        raise ContractError(f"k must be >= 2, got {k}")
    if m < k + 1:
        raise ContractError(f"need m >= k+1, got m={m}, k={k}")
    window = ((1 << (k + 1)) - 1) & ~1
    adjoined = Multiset.from_elements(m, range(2, k + 2))
    members = [
        a
        for a in enumerate_k_multisets(m, k)
        if a.counts[0] >= 1 and (a.support_mask() & window) != 0
    ]
    members.append(adjoined)
    return Family.of_multisets(m, k, members)


def hm_multiset_size(m: int, k: int) -> int:
    return binomial(m + k - 2, k - 1) - binomial(m - 2, k - 1) + 1


def hm_t_set(n: int, k: int, t: int) -> Family:
    """t-intersecting k-set family with no common t-set: sets containing [t]
    that meet [t+1, k+1], plus the k-sets [k+1] minus i for i in [t]."""
    if not 1 < t < k:
        raise ContractError(f"need 1 < t < k, got t={t}, k={k}")
    if n < k + 1:
        raise ContractError(f"need n >= k+1, got n={n}, k={k}")
    head = (1 << t) - 1
    window = ((1 << (k + 1)) - 1) & ~head
    members = [
        b
        for b in enumerate_k_subsets(n, k)
        if (b.mask() & head) == head and (b.mask() & window) != 0
    ]
    for i in range(1, t + 1):
        members.append(KSet(n, tuple(x for x in range(1, k + 2) if x != i)))
    return Family.of_sets(n, k, members)


def hm_t_multiset(m: int, k: int, t: int) -> Family:
    """Multiset analogue of hm_t_set.  No closed-form size; count by
    enumerating.  The common intersection has cardinality below t."""
    if not 1 < t < k:
        raise ContractError(f"need 1 < t < k, got t={t}, k={k}")
    if m < k + 1:
        raise ContractError(f"need m >= k+1, got m={m}, k={k}")
    head = (1 << t) - 1
    window = ((1 << (k + 1)) - 1) & ~head
    members = [
        a
        for a in enumerate_k_multisets(m, k)
        if (a.support_mask() & head) == head and (a.support_mask() & window) != 0
    ]
    for i in range(1, t + 1):
        members.append(Multiset.from_elements(m, (x for x in range(1, k + 2) if x != i)))
    return Family.of_multisets(m, k, members)


def hit_s(m: int, k: int, anchor: Iterable[int]) -> Family:
    """All k-multisets of [m] whose support meets the anchor set.

    Size is multichoose(m, k) - multichoose(m - |anchor|, k).
    """
    anchor_set = KSet.from_elements(m, anchor)
    mask = anchor_set.mask()
    return Family.of_multisets(
        m,
        k,
        (a for a in enumerate_k_multisets(m, k) if a.support_mask() & mask),
    )


def hit_s_size(m: int, k: int, s: int) -> int:
    if not 0 <= s <= m:
        raise ContractError(f"anchor size {s} outside [0, {m}]")
    return multichoose(m, k) - multichoose(m - s, k)


def hit_s_set(n: int, k: int, anchor: Iterable[int]) -> Family:
    """All k-subsets of [n] meeting the anchor set (the t=1 fixed family)."""
    anchor_set = KSet.from_elements(n, anchor)
    mask = anchor_set.mask()
    return Family.of_sets(
        n, k, (b for b in enumerate_k_subsets(n, k) if b.mask() & mask)
    )


def hajnal_rothschild_size(n: int, k: int, t: int, s: int) -> int:
    """Inclusion-exclusion count of the k-subsets of [n] containing at
    least one of s pairwise disjoint t-subsets.  For t=1 this telescopes to
    C(n, k) - C(n-s, k)."""
    if t < 1 or s < 1:
        raise ContractError(f"need t >= 1 and s >= 1, got ({t}, {s})")
    if s * t > n:
        raise ContractError(f"need s*t <= n, got s*t={s * t}, n={n}")
    if t > k:
        raise ContractError(f"need t <= k, got t={t}, k={k}")
    total = 0
    for j in range(1, s + 1):
        if k - j * t < 0:
            break
        term = binomial(s, j) * binomial(n - j * t, k - j * t)
        total += term if j % 2 == 1 else -term
    return total


def hajnal_rothschild_family(n: int, k: int, t: int, s: int) -> Family:
    """The k-subsets of [n] fixed by the s disjoint t-blocks
    [1..t], [t+1..2t], ...  Constructed only for t = 1 (where it is the
    s-set hitting family); larger t is available as a size formula only."""
    if t != 1:
        raise ContractError("construction is only supported for t=1; use the size formula")
    if s * t > n:
        raise ContractError(f"need s*t <= n, got s={s}, n={n}")
    return hit_s_set(n, k, range(1, s + 1))


# ---------------------------------------------------------------------------
# maximality
# ---------------------------------------------------------------------------

def extend_to_maximal(fam: Family) -> Family:
    """Greedy closure of an intersecting multiset family: scan the universe
    in enumeration order and add every multiset compatible with the current
    family.  Deterministic; the result is maximal intersecting."""
    if fam.kind != MULTISET:
        raise ContractError("extend_to_maximal operates on multiset families")
    if fam.m < fam.k + 1:
        raise ContractError(f"need m >= k+1, got m={fam.m}, k={fam.k}")
    if not is_t_intersecting(fam, 1):
        raise ContractError("input family is not intersecting")
    chosen = list(fam.members)
    chosen_keys = {a.counts for a in chosen}
    chosen_masks = [a.support_mask() for a in chosen]
    for a in enumerate_k_multisets(fam.m, fam.k):
        if a.counts in chosen_keys:
            continue
        mask = a.support_mask()
        if all(mask & other for other in chosen_masks):
            chosen.append(a)
            chosen_keys.add(a.counts)
            chosen_masks.append(mask)
    return Family.of_multisets(fam.m, fam.k, chosen)


# ---------------------------------------------------------------------------
# permutation action and isomorphism
# ---------------------------------------------------------------------------

def _check_permutation(perm: Sequence[int], m: int) -> None:
    if len(perm) != m or sorted(perm) != list(range(1, m + 1)):
        raise ContractError(f"not a permutation of [1, {m}]: {perm}")


def _relabel_counts(counts: tuple[int, ...], perm: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(counts)
    for i, c in enumerate(counts):
        out[perm[i] - 1] = c
    return tuple(out)


def apply_permutation(fam: Family, perm: Sequence[int]) -> Family:
    """Relabel the ground set: element i becomes perm[i-1]."""
    _check_permutation(perm, fam.m)
    if fam.kind == MULTISET:
        return Family.of_multisets(
            fam.m,
            fam.k,
            (Multiset(fam.m, _relabel_counts(a.counts, perm)) for a in fam.members),
        )
    return Family.of_sets(
        fam.m,
        fam.k,
        (KSet(fam.m, tuple(sorted(perm[x - 1] for x in b.members))) for b in fam.members),
    )


def _member_key_lists(fam: Family) -> list[tuple[int, ...]]:
    if fam.kind == MULTISET:
        return [a.counts for a in fam.members]
    return [b.members for b in fam.members]


def canonical_form(fam: Family) -> Family:
    """Lexicographic minimum, over all m! relabelings, of the sorted member
    list.  Permutation-invariant by construction."""
    if fam.m > CANONICAL_FORM_MAX_GROUND:
        raise ScaleExceededError(
            f"canonical_form scans m! relabelings; m={fam.m} exceeds the "
            f"guard of {CANONICAL_FORM_MAX_GROUND}"
        )
    m = fam.m
    keys = _member_key_lists(fam)
    best: list[tuple[int, ...]] | None = None
    if fam.kind == MULTISET:
        for perm in permutations(range(1, m + 1)):
            relabeled = sorted(_relabel_counts(counts, perm) for counts in keys)
            if best is None or relabeled < best:
                best = relabeled
        assert best is not None
        return Family.of_multisets(m, fam.k, (Multiset(m, c) for c in best))
    for perm in permutations(range(1, m + 1)):
        relabeled = sorted(tuple(sorted(perm[x - 1] for x in mem)) for mem in keys)
        if best is None or relabeled < best:
            best = relabeled
    assert best is not None
    return Family.of_sets(m, fam.k, (KSet(m, mem) for mem in best))


def _iso_invariants(fam: Family):
    # cheap permutation-invariant screen: per-member multiplicity profiles
    # and the sorted column usage histogram
    if fam.kind == MULTISET:
        profiles = sorted(tuple(sorted(a.counts, reverse=True)) for a in fam.members)
        usage = sorted(
            sum(a.counts[i] for a in fam.members) for i in range(fam.m)
        )
    else:
        profiles = sorted((b.cardinality,) for b in fam.members)
        usage = sorted(
            sum(1 for b in fam.members if i + 1 in b.members) for i in range(fam.m)
        )
    return profiles, usage


def is_isomorphic(fam1: Family, fam2: Family) -> bool:
    """True iff one family is a ground-set relabeling of the other."""
    if (fam1.m, fam1.k, fam1.kind, len(fam1)) != (fam2.m, fam2.k, fam2.kind, len(fam2)):
        return False
    if _iso_invariants(fam1) != _iso_invariants(fam2):
        return False
    return canonical_form(fam1).members == canonical_form(fam2).members


# ---------------------------------------------------------------------------
# spec-driven dispatch (CLI surface)
# ---------------------------------------------------------------------------

def build_family(spec: FamilySpec) -> Family:
    name, m, k = spec.name, spec.m, spec.k
    if name == "star":
        x = spec.anchor[0] if spec.anchor else 1
        return star(m, k, x)
    if name == "fixed_multiset":
        if not spec.anchor:
            raise ContractError("fixed_multiset requires an anchor multiset")
        return fixed_multiset(m, k, Multiset.from_elements(m, spec.anchor))
    if name == "frankl_set":
        return frankl_set(m, k, _req(spec.t, "t"), _req(spec.r, "r"))
    if name == "frankl_multiset":
        return frankl_multiset(m, k, _req(spec.t, "t"), _req(spec.r, "r"))
    if name == "hm_set":
        return hm_set(m, k)
    if name == "hm_multiset":
        return hm_multiset(m, k)
    if name == "hm_t_set":
        return hm_t_set(m, k, _req(spec.t, "t"))
    if name == "hm_t_multiset":
        return hm_t_multiset(m, k, _req(spec.t, "t"))
    if name == "hit_s":
        anchor = spec.anchor or tuple(range(1, _req(spec.s, "s") + 1))
        return hit_s(m, k, anchor)
    if name == "hajnal_rothschild":
        return hajnal_rothschild_family(m, k, _req(spec.t, "t"), _req(spec.s, "s"))
    raise ContractError(f"unknown family name {name!r}")


def family_size_formula(spec: FamilySpec) -> int | None:
    """Closed-form size for the named family, or None if only enumeration
    is available (the hm_t families)."""
    name, m, k = spec.name, spec.m, spec.k
    if name == "star":
        return star_size(m, k)
    if name == "fixed_multiset":
        return fixed_multiset_size(m, k, len(spec.anchor))
    if name == "frankl_set":
        return frankl_set_size(m, k, _req(spec.t, "t"), _req(spec.r, "r"))
    if name == "frankl_multiset":
        return frankl_multiset_size(m, k, _req(spec.t, "t"), _req(spec.r, "r"))
    if name == "hm_set":
        return hm_set_size(m, k)
    if name == "hm_multiset":
        return hm_multiset_size(m, k)
    if name in ("hm_t_set", "hm_t_multiset"):
        return None
    if name == "hit_s":
        s = len(spec.anchor) if spec.anchor else _req(spec.s, "s")
        return hit_s_size(m, k, s)
    if name == "hajnal_rothschild":
        return hajnal_rothschild_size(m, k, _req(spec.t, "t"), _req(spec.s, "s"))
    raise ContractError(f"unknown family name {name!r}")


def _req(value: int | None, flag: str) -> int:
    if value is None:
        raise ContractError(f"missing required parameter --{flag}")
    return value
