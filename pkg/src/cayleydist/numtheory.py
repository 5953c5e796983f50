"""Elementary number theory: factorization, divisors, Euler phi, Möbius mu.

Everything here works on positive integers only and rejects 0. Inputs in
this project stay well below 10**6, so trial division is all we need.
"""

from __future__ import annotations

import math
from functools import lru_cache, reduce


def _require_positive(n: int, name: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Return the prime factorization of n as ((prime, exponent), ...).

    Primes are strictly increasing, exponents >= 1, and the product of
    p**e recovers n. factorize(1) == ().
    """
    _require_positive(n)
    result = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            result.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        result.append((m, 1))
    return tuple(result)


def euler_phi(n: int) -> int:
    """Count of 1 <= k <= n with gcd(k, n) == 1."""
    _require_positive(n)
    value = n
    for p, _ in factorize(n):
        value = value // p * (p - 1)
    return value


def moebius_int(n: int) -> int:
    """Number-theoretic Möbius function: 0 on squareful n, else (-1)^#primes."""
    _require_positive(n)
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    _require_positive(n)
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def gcd_lcm(a: int, b: int) -> tuple[int, int]:
    """(gcd, lcm) of two positive integers; gcd*lcm == a*b."""
    _require_positive(a, "a")
    _require_positive(b, "b")
    g = math.gcd(a, b)
    return g, a // g * b


def lcm_all(values: list[int]) -> int:
    """lcm of a nonempty list of positive integers."""
    if not values:
        raise ValueError("lcm_all needs at least one value")
    for v in values:
        _require_positive(v)
    return reduce(math.lcm, values)


def is_prime(n: int) -> bool:
    """Trial-division primality test (n < 10**6 in this project)."""
    if n < 2:
        return False
    return factorize(n) == ((n, 1),)
