"""Finite groups as indexed multiplication tables.

Elements are dense indices 0..n-1. Construction always re-verifies the
group axioms (associativity vectorized with numpy), so every GroupTable in
circulation is a genuine group, whether it came from a built-in
constructor or a user-supplied table. On top of that sit the subgroup
lattice with its Möbius weights, automorphism groups (generic backtracking
plus fast constructions for cyclic and dihedral tables), and the
symmetric-block machinery the census engines consume.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

SUBGROUP_ORDER_CAP = 256


class ResourceLimitError(RuntimeError):
    """A configured size bound was exceeded."""


class GroupTable:
    """A finite group: order, multiplication table, identity, inverses.

    Instances are immutable after construction and safe to share; derived
    data (lattice, automorphisms, element orders) is cached per instance.
    """

    __slots__ = ("order", "label", "identity", "inverse", "_rows", "_np", "_cache")

    def __init__(self, rows: Sequence[Sequence[int]], label: str = "G"):
        table = np.asarray(rows, dtype=np.int64)
        n = _validate_table(table)
        self.order = n
        self.label = label
        self._rows = tuple(tuple(int(x) for x in row) for row in table)
        self._np = table
        self._np.setflags(write=False)
        self.identity = _find_identity(table)
        self.inverse = _find_inverses(table, self.identity)
        self._cache: dict = {}

    def mul(self, a: int, b: int) -> int:
        return self._rows[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    @property
    def np_table(self) -> np.ndarray:
        return self._np

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, g: int) -> int:
        orders = self._cache.get("element_orders")
        if orders is None:
            orders = [0] * self.order
            for h in range(self.order):
                x, k = h, 1
                while x != self.identity:
                    x = self._rows[x][h]
                    k += 1
                orders[h] = k
            self._cache["element_orders"] = orders
        return orders[g]

    @property
    def is_abelian(self) -> bool:
        flag = self._cache.get("abelian")
        if flag is None:
            flag = bool(np.array_equal(self._np, self._np.T))
            self._cache["abelian"] = flag
        return flag

    def conjugation(self, g: int) -> tuple[int, ...]:
        """The map x -> g^-1 x g as an image tuple."""
        ginv = self.inverse[g]
        return tuple(self._rows[self._rows[ginv][x]][g] for x in range(self.order))

    def __repr__(self) -> str:
        return f"GroupTable({self.label}, order={self.order})"


def _validate_table(table: np.ndarray) -> int:
    if table.ndim != 2 or table.shape[0] != table.shape[1]:
        raise ValueError(f"multiplication table must be square, got shape {table.shape}")
    n = int(table.shape[0])
    if n == 0:
        raise ValueError("empty multiplication table")
    if table.min() < 0 or table.max() >= n:
        raise ValueError("table entries must be element indices in 0..n-1")
    # associativity, row by row to keep memory flat
    for a in range(n):
        left = table[table[a]]          # [b,c] -> (a*b)*c
        right = table[a][table]         # [b,c] -> a*(b*c)
        if not np.array_equal(left, right):
            b, c = map(int, np.argwhere(left != right)[0])
            raise ValueError(
                f"not associative at ({a},{b},{c}): "
                f"({a}*{b})*{c}={int(left[b, c])} but {a}*({b}*{c})={int(right[b, c])}"
            )
    return n


def _find_identity(table: np.ndarray) -> int:
    n = table.shape[0]
    idx = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], idx) and np.array_equal(table[:, e], idx):
            return e
    raise ValueError("table has no identity element")


def _find_inverses(table: np.ndarray, identity: int) -> tuple[int, ...]:
    n = table.shape[0]
    out = []
    for g in range(n):
        hs = np.flatnonzero(table[g] == identity)
        if len(hs) != 1 or table[hs[0], g] != identity:
            raise ValueError(f"element {g} has no two-sided inverse")
        out.append(int(hs[0]))
    return tuple(out)


# ---------------------------------------------------------------------------
# constructors


def cyclic(n: int) -> GroupTable:
    """Z_n under addition mod n."""
    if n < 1:
        raise ValueError("cyclic group order must be >= 1")
    rows = [[(a + b) % n for b in range(n)] for a in range(n)]
    return GroupTable(rows, label=f"Z{n}")


def dihedral(n: int) -> GroupTable:
    """D_n of order 2n: indices 0..n-1 are rotations a^s, n..2n-1 reflections b*a^s."""
    if n < 1:
        raise ValueError("dihedral parameter must be >= 1")
    size = 2 * n

    def mul(x: int, y: int) -> int:
        xr, xs = divmod(x, n)
        yr, ys = divmod(y, n)
        # b*a^s * b*a^t = a^(t-s); a^s * b*a^t = b*a^(t-s); b*a^s * a^t = b*a^(s+t)
        if xr == 0 and yr == 0:
            return (xs + ys) % n
        if xr == 0 and yr == 1:
            return n + (ys - xs) % n
        if xr == 1 and yr == 0:
            return n + (xs + ys) % n
        return (ys - xs) % n

    rows = [[mul(x, y) for y in range(size)] for x in range(size)]
    return GroupTable(rows, label=f"D{n}")


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    """G x H with element (a, b) packed as a * |H| + b."""
    nh = h.order
    size = g.order * nh

    def mul(x: int, y: int) -> int:
        xa, xb = divmod(x, nh)
        ya, yb = divmod(y, nh)
        return g.mul(xa, ya) * nh + h.mul(xb, yb)

    rows = [[mul(x, y) for y in range(size)] for x in range(size)]
    return GroupTable(rows, label=f"{g.label}x{h.label}")


def from_table(rows: Sequence[Sequence[int]], label: str = "G") -> GroupTable:
    """Build a group from an explicit table, verifying the axioms."""
    return GroupTable(rows, label=label)


def from_table_text(text: str, label: str = "G") -> GroupTable:
    """Parse the plain-text format: first line n, then n rows of n indices."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty table text")
    n = int(tokens[0])
    if n < 1:
        raise ValueError("declared order must be >= 1")
    body = tokens[1:]
    if len(body) != n * n:
        raise ValueError(f"expected {n * n} entries after the order line, got {len(body)}")
    vals = [int(t) for t in body]
    rows = [vals[i * n : (i + 1) * n] for i in range(n)]
    return from_table(rows, label=label)


# ---------------------------------------------------------------------------
# connection sets


@dataclass(frozen=True)
class ConnectionSet:
    """A symmetric, identity-free subset of element indices."""

    members: frozenset[int]

    @classmethod
    def create(cls, group: GroupTable, members: Iterable[int]) -> "ConnectionSet":
        ms = frozenset(int(m) for m in members)
        if group.identity in ms:
            raise ValueError("connection set must not contain the identity")
        for m in ms:
            if not 0 <= m < group.order:
                raise ValueError(f"element index {m} out of range")
            if group.inverse[m] not in ms:
                raise ValueError(f"connection set not closed under inversion at {m}")
        return cls(ms)

    def __len__(self) -> int:
        return len(self.members)


def generates(group: GroupTable, omega: ConnectionSet | Iterable[int]) -> bool:
    """True iff the closure of omega under multiplication is the whole group.

    The empty set generates nothing, so generates(G, {}) is False even for
    the trivial group.
    """
    members = omega.members if isinstance(omega, ConnectionSet) else omega
    seed = [int(m) for m in members]
    if not seed:
        return False
    return closure_size(group, seed) == group.order


def closure_mask(group: GroupTable, seed: Iterable[int]) -> int:
    """Bitmask of the subgroup/subsemigroup generated by seed (empty -> 0)."""
    rows = group._rows
    mask = 0
    elems: list[int] = []
    pending = list(dict.fromkeys(seed))
    while pending:
        g = pending.pop()
        if mask >> g & 1:
            continue
        mask |= 1 << g
        elems.append(g)
        row = rows[g]
        for x in elems:
            p = row[x]
            if not mask >> p & 1:
                pending.append(p)
            q = rows[x][g]
            if not mask >> q & 1:
                pending.append(q)
    return mask


def closure_size(group: GroupTable, seed: Iterable[int]) -> int:
    return closure_mask(group, seed).bit_count()


# ---------------------------------------------------------------------------
# subgroup lattice


@dataclass
class Subgroup:
    """A subgroup as a sorted member tuple; moebius is filled by the lattice pass."""

    members: tuple[int, ...]
    mask: int
    moebius: int | None = None

    @property
    def order(self) -> int:
        return len(self.members)

    def contains(self, other: "Subgroup") -> bool:
        return self.mask | other.mask == self.mask

    def __contains__(self, g: int) -> bool:
        return bool(self.mask >> g & 1)


def subgroups(group: GroupTable, cap: int = SUBGROUP_ORDER_CAP) -> list[Subgroup]:
    """Every subgroup of the group, each exactly once, smallest first.

    Breadth-first closure: seed with all cyclic subgroups, then repeatedly
    extend each known subgroup by one extra generator. Deduplication is by
    member bitmask. Exhaustive for the orders this package targets.
    """
    n = group.order
    if n > cap:
        raise ResourceLimitError(f"subgroup enumeration capped at order {cap}, got {n}")
    seen: dict[int, Subgroup] = {}

    def register(mask: int) -> bool:
        if mask in seen:
            return False
        members = tuple(g for g in range(n) if mask >> g & 1)
        seen[mask] = Subgroup(members=members, mask=mask)
        return True

    register(1 << group.identity)
    queue = []
    for g in range(n):
        mask = closure_mask(group, [g])
        if register(mask):
            queue.append(mask)
    while queue:
        base = queue.pop()
        members = seen[base].members
        for g in range(n):
            if base >> g & 1:
                continue
            mask = closure_mask(group, list(members) + [g])
            if register(mask):
                queue.append(mask)
    return sorted(seen.values(), key=lambda s: (s.order, s.members))


def lattice_moebius(group: GroupTable, subs: list[Subgroup]) -> list[Subgroup]:
    """Fill the lattice Möbius weights: sum of moebius over H >= K is [K == G]."""
    full_mask = (1 << group.order) - 1
    by_size = sorted(subs, key=lambda s: -s.order)
    for k in by_size:
        total = 1 if k.mask == full_mask else 0
        for h in by_size:
            if h.order > k.order and h.contains(k):
                total -= h.moebius
        k.moebius = total
    return subs


def subgroup_lattice(group: GroupTable) -> list[Subgroup]:
    """Cached subgroups-with-Möbius for a group instance."""
    lattice = group._cache.get("lattice")
    if lattice is None:
        lattice = lattice_moebius(group, subgroups(group))
        group._cache["lattice"] = lattice
    return lattice


def maximal_subgroup_masks(group: GroupTable) -> list[int]:
    """Masks of the maximal proper subgroups (the generation-test frontier)."""
    masks = group._cache.get("maximal_masks")
    if masks is None:
        proper = [s for s in subgroup_lattice(group) if s.order < group.order]
        masks = [
            s.mask
            for s in proper
            if not any(t is not s and t.contains(s) for t in proper)
        ]
        group._cache["maximal_masks"] = masks
    return masks


# ---------------------------------------------------------------------------
# automorphisms


@dataclass(frozen=True)
class Automorphism:
    """A permutation of element indices that is a group homomorphism."""

    image: tuple[int, ...]

    def __call__(self, g: int) -> int:
        return self.image[g]

    def apply_set(self, members: Iterable[int]) -> frozenset[int]:
        return frozenset(self.image[m] for m in members)

    @property
    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.image))


def is_homomorphism_image(group: GroupTable, image: Sequence[int]) -> bool:
    """Full n^2 homomorphism check plus bijectivity."""
    img = np.asarray(image, dtype=np.int64)
    if sorted(image) != list(range(group.order)):
        return False
    table = group.np_table
    return bool(np.array_equal(img[table], table[np.ix_(img, img)]))


def _sorted_autos(group: GroupTable, images: Iterable[Sequence[int]]) -> list[Automorphism]:
    autos = []
    for image in images:
        image = tuple(int(x) for x in image)
        if not is_homomorphism_image(group, image):
            raise AssertionError(f"constructed map is not an automorphism of {group.label}")
        autos.append(Automorphism(image))
    identity = tuple(range(group.order))
    rest = sorted(a.image for a in autos if a.image != identity)
    return [Automorphism(identity)] + [Automorphism(im) for im in rest]


def _cyclic_generator(group: GroupTable) -> int | None:
    for g in range(group.order):
        if group.element_order(g) == group.order:
            return g
    return None


def _cyclic_automorphisms(group: GroupTable, gen: int) -> list[Automorphism]:
    # units mod n acting as g^k -> g^(u*k)
    n = group.order
    power_index = [0] * n  # exponent -> element index
    x = group.identity
    for k in range(n):
        power_index[k] = x
        x = group.mul(x, gen)
    exponent_of = {e: k for k, e in enumerate(power_index)}
    images = []
    for u in range(1, n + 1):
        if math.gcd(u, n) != 1:
            continue
        image = [0] * n
        for e, k in exponent_of.items():
            image[e] = power_index[(u * k) % n]
        images.append(image)
    return _sorted_autos(group, images)


def _dihedral_structure(group: GroupTable) -> tuple[int, int] | None:
    """Return (rotation generator, reflection) when the table is dihedral, n >= 3."""
    if group.order % 2 or group.order < 6:
        return None
    n = group.order // 2
    rot = next((g for g in range(group.order) if group.element_order(g) == n), None)
    if rot is None:
        return None
    rot_mask = closure_mask(group, [rot])
    if rot_mask.bit_count() != n:
        return None
    for b in range(group.order):
        if rot_mask >> b & 1:
            continue
        if group.element_order(b) != 2:
            return None  # an order-2n group with all outside elements involutive or bust
        if group.mul(group.mul(b, rot), b) != group.inv(rot):
            return None
    b = next(g for g in range(group.order) if not rot_mask >> g & 1)
    return rot, b


def _dihedral_automorphisms(group: GroupTable, rot: int, refl: int) -> list[Automorphism]:
    # alpha_{i,j}: rot -> rot^i (i a unit mod n), refl -> refl * rot^j
    n = group.order // 2
    powers = [group.identity]
    for _ in range(n - 1):
        powers.append(group.mul(powers[-1], rot))
    exp_of = {e: k for k, e in enumerate(powers)}
    refl_side = [group.mul(refl, p) for p in powers]  # refl * rot^k
    refl_exp = {e: k for k, e in enumerate(refl_side)}
    images = []
    for i in range(1, n):
        if math.gcd(i, n) != 1:
            continue
        for j in range(n):
            image = [0] * group.order
            for e, k in exp_of.items():
                image[e] = powers[(i * k) % n]
            for e, k in refl_exp.items():
                # refl*rot^k -> refl*rot^(j+i*k)
                image[e] = refl_side[(j + i * k) % n]
            images.append(image)
    return _sorted_autos(group, images)


def _generic_automorphisms(group: GroupTable, cap: int) -> list[Automorphism]:
    n = group.order
    if n > cap:
        raise ResourceLimitError(f"generic automorphism search capped at order {cap}, got {n}")
    # greedy minimal generating sequence
    gens: list[int] = []
    mask = 1 << group.identity
    while mask.bit_count() < n:
        g = next(x for x in range(n) if not mask >> x & 1)
        gens.append(g)
        mask = closure_mask(group, gens)
    if not gens:
        return [Automorphism(tuple(range(n)))]

    rows = group._rows
    orders = [group.element_order(g) for g in range(n)]
    by_order: dict[int, list[int]] = {}
    for g in range(n):
        by_order.setdefault(orders[g], []).append(g)
    images: list[list[int]] = []

    def extend(partial: list[int], used: int, new: int, target: int) -> tuple[list[int], int] | None:
        """Set partial[new] = target and close under products; None on conflict."""
        work = partial[:]
        used_now = used
        if work[new] == -1:
            if used_now >> target & 1:
                return None
            work[new] = target
            used_now |= 1 << target
        elif work[new] != target:
            return None
        queue = [new]
        known = [x for x in range(n) if work[x] != -1]
        while queue:
            x = queue.pop()
            fx = work[x]
            for y in list(known):
                for a, b in ((rows[x][y], rows[fx][work[y]]), (rows[y][x], rows[work[y]][fx])):
                    if work[a] == -1:
                        if used_now >> b & 1:
                            return None
                        work[a] = b
                        used_now |= 1 << b
                        known.append(a)
                        queue.append(a)
                    elif work[a] != b:
                        return None
        return work, used_now

    def backtrack(level: int, partial: list[int], used: int) -> None:
        if level == len(gens):
            if -1 not in partial:
                images.append(partial[:])
            return
        g = gens[level]
        if partial[g] != -1:
            backtrack(level + 1, partial, used)
            return
        for target in by_order[orders[g]]:
            ext = extend(partial, used, g, target)
            if ext is not None:
                backtrack(level + 1, *ext)

    start = [-1] * n
    start[group.identity] = group.identity
    backtrack(0, start, 1 << group.identity)
    return _sorted_autos(group, images)


def automorphisms(group: GroupTable, cap: int = SUBGROUP_ORDER_CAP) -> list[Automorphism]:
    """The full automorphism group, identity first, deterministic order.

    Cyclic tables use the units-mod-n construction and dihedral tables the
    rot^i / refl*rot^j family; anything else goes through the generic
    backtracking search. All constructions are re-validated by the full
    homomorphism check before being returned.
    """
    autos = group._cache.get("automorphisms")
    if autos is not None:
        return autos
    gen = _cyclic_generator(group)
    if gen is not None:
        autos = _cyclic_automorphisms(group, gen)
    else:
        dih = _dihedral_structure(group)
        if dih is not None:
            autos = _dihedral_automorphisms(group, *dih)
        else:
            autos = _generic_automorphisms(group, cap)
    group._cache["automorphisms"] = autos
    return autos


def inner_automorphisms(group: GroupTable) -> list[Automorphism]:
    """Distinct conjugation maps x -> g^-1 x g, identity first.

    Deduplicated by image map, so the Burnside average over these stays an
    average over the inner automorphism group itself.
    """
    autos = group._cache.get("inner")
    if autos is None:
        seen = {group.conjugation(g) for g in range(group.order)}
        identity = tuple(range(group.order))
        autos = [Automorphism(identity)] + [
            Automorphism(im) for im in sorted(seen) if im != identity
        ]
        group._cache["inner"] = autos
    return autos


# ---------------------------------------------------------------------------
# symmetric blocks


def symmetric_blocks(
    group: GroupTable, members: Iterable[int], alpha: Automorphism
) -> list[tuple[int, ...]]:
    """Partition a symmetric identity-free set into minimal alpha+inversion blocks.

    A subset closed under inversion and fixed setwise by alpha is exactly a
    union of these blocks. Raises if alpha does not stabilize the set.
    """
    s = frozenset(int(m) for m in members)
    if group.identity in s:
        raise ValueError("symmetric block input must exclude the identity")
    if alpha.apply_set(s) != s:
        raise ValueError("automorphism does not stabilize the given set")
    inv = group.inverse
    blocks = []
    unseen = set(s)
    while unseen:
        start = min(unseen)
        block = set()
        stack = [start]
        while stack:
            x = stack.pop()
            if x in block:
                continue
            block.add(x)
            for y in (inv[x], alpha(x)):
                if y not in block:
                    stack.append(y)
        if not block <= s:
            raise ValueError("automorphism does not stabilize the given set")
        unseen -= block
        blocks.append(tuple(sorted(block)))
    blocks.sort()
    return blocks
