"""Closed-form degree polynomials for the families that admit them.

Equivalence: finite abelian groups, cyclic groups, dihedral groups.
Weak equivalence: cyclic groups of order 2^m, p^m, 2p^m, 4p and square-free
order, plus groups of order p and 2p (cyclic and dihedral).

Each function computes a finite divisor sum of products of (1 + x^a)^b
factors and divides by an exact integer prefactor; a non-integral division
means the formula transcription is at fault, never rounding. Two of the
published formulas are defective as printed (the even square-free tail and
the dihedral-of-order-2p sum); the corrected versions ship as defaults and
the literal transcriptions stay available behind literal=True so the
verification report can show the difference. See the verify module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .groups import GroupTable, subgroup_lattice
from .numtheory import divisors, euler_phi, is_prime, lcm_all, moebius_int
from .poly import IntPoly, one_plus_x_pow

_X = IntPoly.monomial(1)
_ONE = IntPoly.one()


def _require_odd_prime(p: int) -> None:
    if p == 2:
        raise ValueError("p = 2 is not admitted here, p must be an odd prime")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


@lru_cache(maxsize=None)
def _factor_pow(a: int, b: int) -> IntPoly:
    """(1 + x^a)^b, cached; the workhorse block factor."""
    return one_plus_x_pow(a).pow(b)


# ---------------------------------------------------------------------------
# equivalence


def psi_equiv_abelian(group: GroupTable) -> IntPoly:
    """Equivalence-class polynomial of a finite abelian group.

    Sum over subgroups K of mu(K) * ((1+x^2)^((|K|-|O2(K)|-1)/2)
    (1+x)^|O2(K)| - 1), where O2(K) is the set of involutions of K.
    """
    if not group.is_abelian:
        raise ValueError(f"{group.label} is not abelian")
    total = IntPoly.zero()
    for sub in subgroup_lattice(group):
        if sub.moebius == 0:
            continue
        o2 = sum(
            1
            for g in sub.members
            if g != group.identity and group.mul(g, g) == group.identity
        )
        pairs = len(sub.members) - o2 - 1
        assert pairs % 2 == 0
        term = _factor_pow(2, pairs // 2) * _factor_pow(1, o2) - _ONE
        total = total + term.scale(sub.moebius)
    return total


def psi_equiv_cyclic(n: int) -> IntPoly:
    """Equivalence-class polynomial of Z_n via the divisor-sum specialization."""
    if n < 2:
        raise ValueError("cyclic order must be >= 2")
    total = IntPoly.zero()
    for d in divisors(n):
        mu = moebius_int(n // d)
        if mu == 0:
            continue
        term = _factor_pow(2, (d - 1) // 2) * _factor_pow(1, 1 - d % 2) - _ONE
        total = total + term.scale(mu)
    return total


def _dihedral_rot_part(m: int) -> IntPoly:
    # symmetric subsets of the rotation subgroup Z_m, empty set included
    return _factor_pow(2, (m - 1) // 2) * _factor_pow(1, 1 - m % 2)


def psi_equiv_dihedral(n: int, literal: bool = False) -> IntPoly:
    """Equivalence-class polynomial of D_n (order 2n).

    Averages the per-conjugation fixed-set products over the subgroup
    families Z_m and D_m(l). The literal variant reproduces the published
    case split, which miscounts the reflections fixed by the inverting
    conjugations when both m and n/m are even; the default computes that
    fixed-point count exactly. Non-integral division signals a
    transcription fault.
    """
    if n < 3:
        raise ValueError("dihedral parameter must be >= 3")
    total = IntPoly.zero()
    for m in divisors(n):
        mu = moebius_int(n // m)
        if mu == 0:
            continue
        h = n // m
        rot = _dihedral_rot_part(m)
        z_term = (rot - _ONE).scale(-2 * h * n)  # both map kinds, all n values of k
        total = total + z_term.scale(mu)
        acc = IntPoly.zero()
        for k in range(1, n + 1):
            # rotation-preserving conjugation: reflections shift by 2k
            if (2 * k) % h == 0:
                g = math.gcd(2 * k // h, m)
                f_rot = rot * _factor_pow(m // g, g) - _ONE
            else:
                f_rot = rot - _ONE
            acc = acc + f_rot.scale(h)
            # rotation-inverting conjugation: reflections map t -> 2k - t
            fixed_ts = {k % n, (k + n // 2) % n} if n % 2 == 0 else {k % n}
            for ell in range(1, h + 1):
                if (2 * (k - ell)) % h == 0:
                    if literal:
                        refl = _factor_pow(2, (m - 1) // 2) * _factor_pow(1, 2 - m % 2)
                    else:
                        phi_fix = sum(1 for t in fixed_ts if t % h == ell % h)
                        assert (m - phi_fix) % 2 == 0
                        refl = _factor_pow(1, phi_fix) * _factor_pow(2, (m - phi_fix) // 2)
                    acc = acc + (rot * refl - _ONE)
                else:
                    acc = acc + (rot - _ONE)
        total = total + acc.scale(mu)
    return total.divide_exact_by_int(2 * n)


def count_equiv_dihedral(n: int) -> int:
    """Number of equivalence classes for D_n, by evaluating the polynomial at 1."""
    return psi_equiv_dihedral(n).eval_int(1)


# ---------------------------------------------------------------------------
# weak equivalence, prime-power order


def psi_weak_cyclic_2m(m: int) -> IntPoly:
    """Weak-equivalence polynomial of Z_(2^m), m >= 2."""
    if m < 2:
        raise ValueError("need m >= 2")
    total = IntPoly.zero()
    for t in range(m - 1):
        term = (_factor_pow(2 ** (t + 1), 2 ** (m - t - 2)) - _ONE) * _factor_pow(1, 1)
        term = term.scale(euler_phi(2**t))
        for s in range(t + 1, m - 1):
            term = term * _factor_pow(2, 2 ** (m - s - 2))
        for s in range(1, t + 1):
            term = term * _factor_pow(2 ** (t - s + 1), 2 ** (m - t - 2))
        total = total + term
    return total.divide_exact_by_int(2 ** (m - 2))


def _odd_prime_power_tail(p: int, m: int, d: int) -> IntPoly:
    # product over the lower p-power levels of their block factors
    out = _ONE
    for k in range(1, m):
        phi_level = euler_phi(p ** (m - k))
        g = math.gcd(d, phi_level // 2)
        out = out * _factor_pow(phi_level // g, g)
    return out


def psi_weak_cyclic_pm(p: int, m: int) -> IntPoly:
    """Weak-equivalence polynomial of Z_(p^m), p an odd prime."""
    _require_odd_prime(p)
    if m < 1:
        raise ValueError("need m >= 1")
    phi_pm = euler_phi(p**m)
    half = phi_pm // 2
    total = IntPoly.zero()
    for d in divisors(half):
        term = (_factor_pow(phi_pm // d, d) - _ONE) * _odd_prime_power_tail(p, m, d)
        total = total + term.scale(euler_phi(half // d))
    return total.scale(2).divide_exact_by_int(phi_pm)


def psi_weak_cyclic_2pm(p: int, m: int) -> IntPoly:
    """Weak-equivalence polynomial of Z_(2 p^m), p an odd prime."""
    _require_odd_prime(p)
    if m < 1:
        raise ValueError("need m >= 1")
    phi_pm = euler_phi(p**m)
    half = phi_pm // 2
    one_x = _factor_pow(1, 1)
    total = IntPoly.zero()
    for d in divisors(half):
        q = _factor_pow(phi_pm // d, d)
        r = _odd_prime_power_tail(p, m, d)
        bracket = (q - _ONE) * q * r * r * one_x + (q - _ONE) * (r * one_x - _ONE) * r
        total = total + bracket.scale(euler_phi(half // d))
    return total.scale(2).divide_exact_by_int(phi_pm)


def psi_weak_cyclic_4p(p: int) -> IntPoly:
    """Weak-equivalence polynomial of Z_(4p), p an odd prime."""
    _require_odd_prime(p)
    pm1 = p - 1
    one_x = _factor_pow(1, 1)
    sq = _factor_pow(2, 1)
    total = IntPoly.zero()
    for d in divisors(pm1):
        beta = math.gcd(d, pm1 // 2)
        e2 = math.gcd(pm1 // 2 + d, pm1)
        p2 = _factor_pow(pm1 // beta, 2 * beta)
        heads = _factor_pow(2 * pm1 // d, d) + _factor_pow(2 * pm1 // e2, e2)
        term = (
            heads * p2 * sq * one_x
            - p2.scale(2) * one_x
            - sq.scale(2) * one_x
            + one_x.scale(2)
        )
        total = total + term.scale(euler_phi(pm1 // d))
    return total.divide_exact_by_int(2 * pm1)


# ---------------------------------------------------------------------------
# weak equivalence, square-free order


@dataclass(frozen=True)
class SquareFreeSpec:
    """A square-free order: distinct odd primes, optionally times two."""

    odd_primes: tuple[int, ...]
    include_factor_two: bool = False

    def __post_init__(self) -> None:
        if not self.odd_primes:
            raise ValueError("need at least one odd prime")
        for p in self.odd_primes:
            if p < 3 or p % 2 == 0 or not is_prime(p):
                raise ValueError(f"{p} is not an odd prime")
        if list(self.odd_primes) != sorted(set(self.odd_primes)):
            raise ValueError("primes must be strictly increasing")

    @property
    def n(self) -> int:
        base = math.prod(self.odd_primes)
        return 2 * base if self.include_factor_two else base


def alpha_exponent(ds: list[int], primes: list[int]) -> int:
    """Shared block length of the full-support elements under one unit tuple.

    For a single prime this is (p-1)/gcd(d, (p-1)/2). For several primes it
    is lcm((p_i-1)/d_i) when every d_i divides (p_i-1)/2 and one constant c
    satisfies c*d_i = (p_i-1)/2 modulo p_i-1 simultaneously (exhaustive
    search over one full period), else twice that lcm.
    """
    if len(ds) != len(primes) or not ds:
        raise ValueError("need matching nonempty divisor and prime lists")
    for d, p in zip(ds, primes):
        _require_odd_prime(p)
        if d < 1 or (p - 1) % d != 0:
            raise ValueError(f"{d} does not divide {p} - 1")
    if len(ds) == 1:
        d, p = ds[0], primes[0]
        return (p - 1) // math.gcd(d, (p - 1) // 2)
    base = lcm_all([(p - 1) // d for d, p in zip(ds, primes)])
    if all(((p - 1) // 2) % d == 0 for d, p in zip(ds, primes)):
        period = lcm_all([p - 1 for p in primes])
        for c in range(period):
            if all((c * d - (p - 1) // 2) % (p - 1) == 0 for d, p in zip(ds, primes)):
                return base
    return 2 * base


@lru_cache(maxsize=None)
def _support_factor(primes: tuple[int, ...], ds: tuple[int, ...]) -> IntPoly:
    # generating function of the elements of exact support at these primes
    a = alpha_exponent(list(ds), list(primes))
    count = math.prod(p - 1 for p in primes)
    assert count % a == 0
    return _factor_pow(a, count // a)


def _full_product(primes: tuple[int, ...], ds: tuple[int, ...]) -> IntPoly:
    # product of support factors over every nonempty prime subset
    idx = range(len(primes))
    out = _ONE
    for k in range(1, len(primes) + 1):
        for sub in combinations(idx, k):
            out = out * _support_factor(
                tuple(primes[i] for i in sub), tuple(ds[i] for i in sub)
            )
    return out


def psi_weak_cyclic_squarefree(spec: SquareFreeSpec, literal: bool = False) -> IntPoly:
    """Weak-equivalence polynomial of Z_n for square-free n.

    Inclusion-exclusion over which primes a candidate set reaches. For the
    even case the published tail term (-1)^l (1+x) is off by a constant:
    the last inclusion-exclusion layer contributes (1+x)*1^2 - 1 = x.
    The corrected tail is the default; literal=True keeps the printed one.
    """
    primes = spec.odd_primes
    ell = len(primes)
    idx = range(ell)
    total = IntPoly.zero()
    one_x = _factor_pow(1, 1)
    for ds in product(*[divisors(p - 1) for p in primes]):
        weight = math.prod(euler_phi((p - 1) // d) for p, d in zip(primes, ds))
        inner = IntPoly.zero()
        for k in range(ell + 1):
            sign = -1 if k % 2 else 1
            if spec.include_factor_two and literal and k == ell:
                inner = inner + one_x.scale(sign)
                continue
            for removed in combinations(idx, k):
                kept = tuple(i for i in idx if i not in removed)
                f = _full_product(
                    tuple(primes[i] for i in kept), tuple(ds[i] for i in kept)
                )
                if spec.include_factor_two:
                    term = one_x * f * f - f
                else:
                    term = f
                inner = inner + term.scale(sign)
        total = total + inner.scale(weight)
    return total.divide_exact_by_int(math.prod(p - 1 for p in primes))


# ---------------------------------------------------------------------------
# weak equivalence, order p and 2p


def psi_weak_zp(p: int) -> IntPoly:
    """Weak-equivalence polynomial of Z_p, p an odd prime."""
    _require_odd_prime(p)
    half = (p - 1) // 2
    total = IntPoly.zero()
    for d in divisors(half):
        total = total + (_factor_pow((p - 1) // d, d) - _ONE).scale(euler_phi(half // d))
    return total.scale(2).divide_exact_by_int(p - 1)


def psi_weak_z2p(p: int) -> IntPoly:
    """Weak-equivalence polynomial of Z_2p, p an odd prime."""
    _require_odd_prime(p)
    half = (p - 1) // 2
    one_x = _factor_pow(1, 1)
    total = IntPoly.zero()
    for d in divisors(half):
        q = _factor_pow((p - 1) // d, d)
        total = total + (q * (q * one_x - _ONE)).scale(euler_phi(half // d))
    return total.scale(2).divide_exact_by_int(p - 1) - _X


def psi_weak_dihedral_p(p: int, literal: bool = False) -> IntPoly:
    """Weak-equivalence polynomial of D_p (order 2p), p an odd prime.

    The printed sum (over d | (p-1)/2 with weight phi((p-1)/2) and no
    leading p) fails exact division already at p = 3; the default groups
    the rotation-twisting units by d = gcd(i, p-1) with weight
    phi((p-1)/d), per-term gcd pair (gcd(d,(p-1)/2), d), and a factor p
    for the reflection-twisting freedom. literal=True keeps the printed
    transcription, whose non-integral division raises.
    """
    _require_odd_prime(p)
    pm1 = p - 1
    one_x = _factor_pow(1, 1)
    head = _factor_pow(2, pm1 // 2) * (
        _factor_pow(1, p) + IntPoly.monomial(p, p - 1) - _ONE
    ) - _X.scale(p)
    tail = IntPoly.zero()
    if literal:
        for d in divisors(pm1 // 2):
            g = math.gcd(d, pm1 // 2)
            term = _factor_pow(pm1 // g, g) * (_factor_pow(pm1 // d, d) * one_x - _ONE) - _X
            tail = tail + term.scale(euler_phi(pm1 // 2))
    else:
        for d in divisors(pm1):
            if d == pm1:
                continue
            g = math.gcd(d, pm1 // 2)
            term = _factor_pow(pm1 // g, g) * (_factor_pow(pm1 // d, d) * one_x - _ONE) - _X
            tail = tail + term.scale(euler_phi(pm1 // d))
        tail = tail.scale(p)
    return (head + tail).divide_exact_by_int(p * pm1)
