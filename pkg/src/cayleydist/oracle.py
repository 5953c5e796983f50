"""Brute-force ground truth: enumerate connection sets, orbit them, count.

No Burnside, no Möbius: every symmetric generating subset is listed
explicitly (as a union of inversion blocks) and partitioned into orbits
under the supplied automorphisms. The census this produces is what the
engine and the closed forms are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .groups import (
    Automorphism,
    ConnectionSet,
    GroupTable,
    ResourceLimitError,
    maximal_subgroup_masks,
    symmetric_blocks,
)
from .poly import IntPoly

CHOICE_BITS = 24


@dataclass(frozen=True)
class Orbit:
    """One equivalence class: canonical representative, orbit size, degree."""

    rep_mask: int
    size: int
    degree: int

    def rep(self, group: GroupTable) -> ConnectionSet:
        members = [g for g in range(group.order) if self.rep_mask >> g & 1]
        return ConnectionSet.create(group, members)

    def rep_members(self) -> tuple[int, ...]:
        return tuple(g for g in range(self.rep_mask.bit_length()) if self.rep_mask >> g & 1)


@dataclass
class OrbitCensus:
    """All orbits of the automorphism action on the generating symmetric sets."""

    orbits: list[Orbit]
    total_sets: int
    group_order: int

    def __post_init__(self) -> None:
        if sum(o.size for o in self.orbits) != self.total_sets:
            raise AssertionError("orbit sizes do not add up to the candidate count")


def inversion_blocks(group: GroupTable) -> list[tuple[int, ...]]:
    """Blocks {g, g^-1} (pairs and lone involutions) of the non-identity elements."""
    nonidentity = [g for g in range(group.order) if g != group.identity]
    identity_map = Automorphism(tuple(range(group.order)))
    return symmetric_blocks(group, nonidentity, identity_map)


def orbit_census(group: GroupTable, autos: list[Automorphism]) -> OrbitCensus:
    """Exhaustive census of generating symmetric subsets under the given maps.

    The list is treated as a generating set: orbits are those of the group
    the maps generate (for Aut(G) or Inn(G) that is the same thing). The
    canonical representative of an orbit is its lexicographically least
    element bitstring, read from element 0 outward.
    """
    if not autos:
        raise ValueError("orbit census needs at least one automorphism")
    n = group.order
    blocks = inversion_blocks(group)
    n_blocks = len(blocks)
    if n_blocks > CHOICE_BITS:
        raise ResourceLimitError(
            f"census needs 2^{n_blocks} candidates ({n_blocks} symmetric blocks), "
            f"bound is 2^{CHOICE_BITS}"
        )
    if n_blocks == 0:
        return OrbitCensus(orbits=[], total_sets=0, group_order=n)

    block_masks = [_mask(b) for b in blocks]
    block_index = {}
    for i, b in enumerate(blocks):
        for g in b:
            block_index[g] = i
    maximal = maximal_subgroup_masks(group)
    choices = kernels.enumerate_generating_choices(block_masks, maximal, n)
    total = int(choices.shape[0])
    if total == 0:
        return OrbitCensus(orbits=[], total_sets=0, group_order=n)

    perms = np.empty((len(autos), n_blocks), dtype=np.int64)
    for a, alpha in enumerate(autos):
        for i, b in enumerate(blocks):
            perms[a, i] = block_index[alpha(b[0])]
    labels = kernels.orbit_labels(choices, n_blocks, perms)

    # lexicographically-least bitstring = smallest key with element 0 as MSB
    key_weights = [_lex_key(_mask(b), n) for b in blocks]
    keys = kernels.choice_weights(choices, key_weights).astype(np.uint64)
    compact, inverse = np.unique(labels, return_inverse=True)
    sizes = np.bincount(inverse)
    min_keys = np.full(compact.shape[0], np.iinfo(np.uint64).max, dtype=np.uint64)
    np.minimum.at(min_keys, inverse, keys)

    orbits = []
    for i in range(compact.shape[0]):
        rep_mask = _unlex_key(int(min_keys[i]), n)
        orbits.append(Orbit(rep_mask=rep_mask, size=int(sizes[i]), degree=rep_mask.bit_count()))
    orbits.sort(key=lambda o: (o.degree, _lex_key(o.rep_mask, n)))
    return OrbitCensus(orbits=orbits, total_sets=total, group_order=n)


def psi_from_census(census: OrbitCensus) -> IntPoly:
    """Coefficient of x^k = number of orbits of degree k."""
    if not census.orbits:
        return IntPoly.zero()
    out = [0] * (max(o.degree for o in census.orbits) + 1)
    for o in census.orbits:
        out[o.degree] += 1
    return IntPoly(out)


def _mask(members: tuple[int, ...]) -> int:
    m = 0
    for g in members:
        m |= 1 << g
    return m


def _lex_key(mask: int, n: int) -> int:
    key = 0
    for g in range(n):
        if mask >> g & 1:
            key |= 1 << (n - 1 - g)
    return key


def _unlex_key(key: int, n: int) -> int:
    return _lex_key(key, n)  # the transform is its own inverse
