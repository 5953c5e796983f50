"""The census engine: degree polynomials by Burnside averaging.

For a group G the weak-equivalence polynomial averages, over all
automorphisms alpha, the generating function of alpha-fixed symmetric
generating sets; the equivalence polynomial averages over the distinct
inner automorphisms. The per-alpha generating function is obtained by
Möbius inversion over the subgroup lattice from per-subgroup block
products, which keeps everything polynomial in lattice size. A direct
enumeration route with the same contract exists purely for verification.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .groups import (
    Automorphism,
    GroupTable,
    ResourceLimitError,
    Subgroup,
    automorphisms,
    inner_automorphisms,
    maximal_subgroup_masks,
    subgroup_lattice,
    symmetric_blocks,
)
from .poly import IntPoly, one_plus_x_pow

DIRECT_CHOICE_BITS = 24


def invariant_core(group: GroupTable, members: Iterable[int], alpha: Automorphism) -> frozenset[int]:
    """Largest alpha-invariant subset of the given members.

    Keeps exactly the elements whose whole alpha-orbit stays inside, which
    equals the intersection of all alpha-iterates of the set. For a
    subgroup the result is again a subgroup.
    """
    s = frozenset(members)
    keep = set()
    for g in s:
        if g in keep:
            continue
        orbit = [g]
        x = alpha(g)
        inside = True
        while x != g:
            if x not in s:
                inside = False
                break
            orbit.append(x)
            x = alpha(x)
        if inside:
            keep.update(orbit)
    return frozenset(keep)


def _sizes_product(group: GroupTable, sizes: tuple[int, ...]) -> IntPoly:
    cache = group._cache.setdefault("sizes_product", {})
    poly = cache.get(sizes)
    if poly is None:
        poly = IntPoly.one()
        for k in sizes:
            poly = poly * one_plus_x_pow(k)
        cache[sizes] = poly
    return poly


def sym_fixed_poly(group: GroupTable, subgroup: Subgroup | Iterable[int], alpha: Automorphism) -> IntPoly:
    """Sum of x^|W| over symmetric identity-free W inside the subgroup with
    alpha(W) = W, the empty set included (constant term 1).

    alpha need not stabilize the subgroup: any fixed W lies in the maximal
    alpha-invariant subgroup, so we restrict there first, then multiply
    1 + x^len over the symmetric blocks.
    """
    members = subgroup.members if isinstance(subgroup, Subgroup) else tuple(subgroup)
    core = invariant_core(group, members, alpha)
    core_wo_identity = core - {group.identity}
    blocks = symmetric_blocks(group, core_wo_identity, alpha)
    sizes = tuple(sorted(len(b) for b in blocks))
    return _sizes_product(group, sizes)


def fix_poly_moebius(
    group: GroupTable, alpha: Automorphism, *, subtract_empty: bool = False
) -> IntPoly:
    """Sum of x^|W| over generating symmetric alpha-fixed sets, by Möbius
    inversion over the subgroup lattice.

    subtract_empty applies the (sym_fixed_poly - 1) convention instead; for
    any nontrivial group the result is identical because the Möbius weights
    sum to zero over the full lattice.
    """
    total = IntPoly.zero()
    one = IntPoly.one()
    for sub in subgroup_lattice(group):
        if sub.moebius == 0:
            continue
        term = sym_fixed_poly(group, sub, alpha)
        if subtract_empty:
            term = term - one
        total = total + term.scale(sub.moebius)
    expected_constant = 0 if subtract_empty else (1 if group.order == 1 else 0)
    if total.coeff(0) != expected_constant:
        raise ArithmeticError(
            f"Möbius fix-polynomial has constant term {total.coeff(0)}, engine bug"
        )
    return total - IntPoly((expected_constant,))


def fix_poly_direct(
    group: GroupTable, alpha: Automorphism, choice_bits: int = DIRECT_CHOICE_BITS
) -> IntPoly:
    """Same contract as fix_poly_moebius, by enumerating the fixed sets.

    Candidates are the unions of the alpha+inversion blocks of the
    non-identity elements; each is kept iff it generates.
    """
    n = group.order
    nonidentity = [g for g in range(n) if g != group.identity]
    blocks = symmetric_blocks(group, nonidentity, alpha)
    if len(blocks) > choice_bits:
        raise ResourceLimitError(
            f"direct enumeration needs 2^{len(blocks)} choices, bound is 2^{choice_bits}"
        )
    if not blocks:
        return IntPoly.zero()
    maximal = maximal_subgroup_masks(group)
    block_masks = [_mask(b) for b in blocks]
    sizes = [len(b) for b in blocks]
    counts: dict[int, int] = {}
    if n <= 64:
        from . import kernels

        choices = kernels.enumerate_generating_choices(block_masks, maximal, n)
        degrees = kernels.choice_weights(choices, sizes)
        for deg, cnt in zip(*np.unique(degrees, return_counts=True)):
            counts[int(deg)] = int(cnt)
    else:
        for c in range(1, 1 << len(blocks)):
            em = 0
            cc, b = c, 0
            while cc:
                if cc & 1:
                    em |= block_masks[b]
                cc >>= 1
                b += 1
            if all(em & ~m for m in maximal):
                deg = em.bit_count()
                counts[deg] = counts.get(deg, 0) + 1
    if not counts:
        return IntPoly.zero()
    out = [0] * (max(counts) + 1)
    for deg, cnt in counts.items():
        out[deg] = cnt
    return IntPoly(out)


def _mask(members: Iterable[int]) -> int:
    m = 0
    for g in members:
        m |= 1 << g
    return m


def _psi(group: GroupTable, autos: list[Automorphism]) -> IntPoly:
    total = IntPoly.zero()
    for alpha in autos:
        total = total + fix_poly_moebius(group, alpha)
    return total.divide_exact_by_int(len(autos))


def psi_weak(group: GroupTable) -> IntPoly:
    """Degree polynomial of the weak equivalence classes (Burnside over Aut)."""
    return _psi(group, automorphisms(group))


def psi_equiv(group: GroupTable) -> IntPoly:
    """Degree polynomial of the equivalence classes (Burnside over Inn)."""
    return _psi(group, inner_automorphisms(group))


def count_weak(group: GroupTable) -> int:
    return psi_weak(group).eval_int(1)


def count_equiv(group: GroupTable) -> int:
    return psi_equiv(group).eval_int(1)
