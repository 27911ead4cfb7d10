"""t-kernels and the kernel-guided down-compression of multiset families.

A t-kernel for a t-intersecting family is a multiset T with
|F1 ∩ F2 ∩ T| >= t for every pair of members; t copies of every element of
[m] always work.  One compression pass picks an element i that T holds more
than once, sets s = m(i, T), and applies the shift S_(i,s)(j) for j = 1..m
in order: a member with at least s copies of i and no copies of j moves all
but s-1 of those copies onto j, unless the shifted multiset is already
present.  The pass preserves the family size and t-intersection and shrinks
the kernel by one copy of i; running passes until the kernel is exactly [m]
produces an equal-sized t-intersecting family whose member supports
pairwise share at least t elements.

Shifts inside one pass are applied sequentially against the current family
state, members in canonical order.  A shift target always contains j while
members that contain j never move, so this agrees with evaluating
membership against the original family; sequential update keeps the
size-preservation argument local and obvious.

The guarantees are stated for m >= 2k-t.  Below that regime the operation
is still well defined, so callers may opt in with allow_out_of_regime=True;
the postconditions are then verified at runtime and a violation raises
CompressionInvariantError instead of silently returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .core import (
    MULTISET,
    ContractError,
    Family,
    Multiset,
    is_support_t_intersecting,
    is_t_intersecting,
)

TraceCallback = Callable[[dict], None]


class CompressionInvariantError(RuntimeError):
    """A compression postcondition failed; inside the proved regime this
    signals an implementation bug."""


@dataclass(frozen=True, slots=True)
class ShiftParams:
    """Shift source element i, kept-copy threshold s >= 2, target element j."""

    i: int
    s: int
    j: int

    def __post_init__(self) -> None:
        if self.i == self.j:
            raise ContractError(f"shift source and target coincide: {self.i}")
        if self.s < 2:
            raise ContractError(f"shift threshold s must be >= 2, got {self.s}")
        if self.i < 1 or self.j < 1:
            raise ContractError(f"elements must be >= 1, got i={self.i}, j={self.j}")


@dataclass(frozen=True)
class Kernel:
    """A kernel multiset T that contains [m] (every multiplicity >= 1)."""

    T: Multiset

    def __post_init__(self) -> None:
        if any(c < 1 for c in self.T.counts):
            raise ContractError("kernel must contain [m]: every multiplicity >= 1")

    @classmethod
    def trivial(cls, m: int, t: int) -> "Kernel":
        """t copies of every element of [m]; a t-kernel for any
        t-intersecting family."""
        if t < 1:
            raise ContractError(f"t must be >= 1, got {t}")
        return cls(Multiset(m, (t,) * m))

    def surplus_elements(self) -> tuple[int, ...]:
        """Elements held more than once (the support of T minus [m])."""
        return tuple(i + 1 for i, c in enumerate(self.T.counts) if c >= 2)

    def remove_copy(self, i: int) -> "Kernel":
        if self.T.multiplicity(i) < 2:
            raise ContractError(f"kernel holds element {i} only once")
        counts = list(self.T.counts)
        counts[i - 1] -= 1
        return Kernel(Multiset(self.T.ground_size, tuple(counts)))


def is_t_kernel(fam: Family, T: Multiset, t: int) -> bool:
    """True iff every pair of distinct members F1, F2 satisfies
    |F1 ∩ F2 ∩ T| >= t (vacuous for families with fewer than two members)."""
    if t < 1:
        raise ContractError(f"t must be >= 1, got {t}")
    if fam.kind != MULTISET:
        raise ContractError("t-kernels are defined for multiset families")
    if T.ground_size != fam.m:
        raise ContractError(f"kernel ground size {T.ground_size} != family ground {fam.m}")
    counts = [a.counts for a in fam.members]
    tc = T.counts
    for i in range(len(counts)):
        ci = counts[i]
        for j in range(i + 1, len(counts)):
            cj = counts[j]
            total = 0
            for a, b, w in zip(ci, cj, tc):
                x = a if a < b else b
                if w < x:
                    x = w
                total += x
            if total < t:
                return False
    return True


def shift_multiset(a: Multiset, p: ShiftParams) -> Multiset:
    """Replace all but s-1 copies of i with j.  No-op when the multiset has
    fewer than s copies of i or already contains j."""
    if p.i > a.ground_size or p.j > a.ground_size:
        raise ContractError(f"shift elements outside [1, {a.ground_size}]")
    mi = a.counts[p.i - 1]
    if mi < p.s or a.counts[p.j - 1] != 0:
        return a
    counts = list(a.counts)
    counts[p.i - 1] = p.s - 1
    counts[p.j - 1] = mi - p.s + 1
    return Multiset(a.ground_size, tuple(counts))


def shift_family(fam: Family, p: ShiftParams, on_shift: TraceCallback | None = None) -> Family:
    """Apply the shift to every member, blocking a move whenever the target
    is already present in the current family state.  Size is preserved:
    each executed move lands on a multiset that is absent at that moment,
    and targets (which contain j) can never collide with the vacated slots
    (which do not)."""
    if fam.kind != MULTISET:
        raise ContractError("shift_family operates on multiset families")
    current = {a.counts for a in fam.members}
    out: list[Multiset] = []
    for a in fam.members:
        b = shift_multiset(a, p)
        if b.counts != a.counts and b.counts not in current:
            current.discard(a.counts)
            current.add(b.counts)
            out.append(b)
            if on_shift is not None:
                on_shift(
                    {
                        "i": p.i,
                        "s": p.s,
                        "j": p.j,
                        "member_before": " ".join(map(str, a.elements())),
                        "member_after": " ".join(map(str, b.elements())),
                    }
                )
        else:
            out.append(a)
    result = Family.of_multisets(fam.m, fam.k, out)
    if len(result) != len(fam):
        raise CompressionInvariantError("shift_family changed the family size")
    return result


def down_compress_pass(
    fam: Family,
    kernel: Kernel,
    i: int,
    t: int,
    *,
    allow_out_of_regime: bool = False,
    on_shift: TraceCallback | None = None,
) -> tuple[Family, Kernel]:
    """One compression pass: shift (i, s=m(i,T)) onto every j = 1..m in
    order, then drop one copy of i from the kernel.

    Postconditions (size preserved, output t-intersecting, shrunken kernel
    still a t-kernel) are asserted; a failure raises
    CompressionInvariantError.
    """
    if fam.kind != MULTISET:
        raise ContractError("down-compression operates on multiset families")
    if kernel.T.ground_size != fam.m:
        raise ContractError("kernel ground size does not match the family")
    if i not in kernel.surplus_elements():
        raise ContractError(f"element {i} is not held more than once by the kernel")
    if fam.m < 2 * fam.k - t and not allow_out_of_regime:
        raise ContractError(
            f"m >= 2k-t required (m={fam.m}, k={fam.k}, t={t}); the guarantees do not "
            "apply below that; pass allow_out_of_regime=True to run anyway"
        )
    s = kernel.T.multiplicity(i)
    result = fam
    for j in range(1, fam.m + 1):
        if j == i:
            continue
        result = shift_family(result, ShiftParams(i, s, j), on_shift)
    new_kernel = kernel.remove_copy(i)
    if len(result) != len(fam):
        raise CompressionInvariantError("compression pass changed the family size")
    if not is_t_intersecting(result, t):
        raise CompressionInvariantError("compression pass broke t-intersection")
    if not is_t_kernel(result, new_kernel.T, t):
        raise CompressionInvariantError("shrunken kernel is not a t-kernel for the output")
    return result, new_kernel


def down_compress_full(
    fam: Family,
    t: int,
    *,
    allow_out_of_regime: bool = False,
    on_shift: TraceCallback | None = None,
) -> Family:
    """Compress until the kernel is exactly [m]: start from the trivial
    kernel and run one pass per surplus copy, smallest surplus element
    first.  Exactly (t-1)*m passes; for t=1 the family is returned as is.

    The output has the same size, is t-intersecting, and its member
    supports pairwise share at least t elements.
    """
    if t < 1:
        raise ContractError(f"t must be >= 1, got {t}")
    if not is_t_intersecting(fam, t):
        raise ContractError("input family is not t-intersecting")
    if fam.m < 2 * fam.k - t and not allow_out_of_regime:
        raise ContractError(
            f"m >= 2k-t required (m={fam.m}, k={fam.k}, t={t}); pass "
            "allow_out_of_regime=True to run anyway"
        )
    kernel = Kernel.trivial(fam.m, t)
    result = fam
    passes = 0
    while True:
        surplus = kernel.surplus_elements()
        if not surplus:
            break
        i = surplus[0]
        passes += 1
        if on_shift is not None:
            pass_no = passes

            def traced(record: dict, _pass_no: int = pass_no) -> None:
                on_shift({"pass": _pass_no, **record})

            result, kernel = down_compress_pass(
                result, kernel, i, t,
                allow_out_of_regime=allow_out_of_regime, on_shift=traced,
            )
        else:
            result, kernel = down_compress_pass(
                result, kernel, i, t, allow_out_of_regime=allow_out_of_regime
            )
    if passes != (t - 1) * fam.m:
        raise CompressionInvariantError(
            f"expected {(t - 1) * fam.m} passes, ran {passes}"
        )
    if not is_support_t_intersecting(result, t):
        raise CompressionInvariantError("output supports do not pairwise t-intersect")
    return result
