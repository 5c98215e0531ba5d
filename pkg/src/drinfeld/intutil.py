"""Small integer-arithmetic helpers: primality and factorization."""

from __future__ import annotations

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the library's 2**40 bound."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}; delegates to sympy."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    if n == 1:
        return {}
    from sympy import factorint  # deferred: keeps import cost out of hot paths

    return {int(p): int(e) for p, e in factorint(n).items()}


def multiplicative_order(a: int, modulus: int) -> int:
    """Order of a modulo modulus; a must be coprime to modulus."""
    from math import gcd

    if gcd(a, modulus) != 1:
        raise ValueError("element not invertible")
    order = 1
    for p, e in factorize(_carmichael_bound(modulus)).items():
        order *= p ** e
    # shrink the exponent bound prime by prime
    for p in sorted(factorize(order)):
        while order % p == 0 and pow(a, order // p, modulus) == 1:
            order //= p
    return order


def _carmichael_bound(modulus: int) -> int:
    """A multiple of the group exponent of (Z/modulus)^*; Euler's totient."""
    tot = 1
    for p, e in factorize(modulus).items():
        tot *= (p - 1) * p ** (e - 1)
    return tot


def crt_int(r1: int, m1: int, r2: int, m2: int):
    """Combine k = r1 (mod m1), k = r2 (mod m2); None when incompatible.

    Moduli need not be coprime; m = 0 encodes a pinned integer.
    """
    from math import gcd

    if m1 == 0 and m2 == 0:
        return (r1, 0) if r1 == r2 else None
    if m1 == 0:
        return (r1, 0) if (r1 - r2) % m2 == 0 else None
    if m2 == 0:
        return (r2, 0) if (r2 - r1) % m1 == 0 else None
    g = gcd(m1, m2)
    if (r2 - r1) % g != 0:
        return None
    lcm = m1 // g * m2
    # lift r1 by a multiple of m1 landing in r2's class
    step = (r2 - r1) // g * pow(m1 // g, -1, m2 // g) % (m2 // g)
    return ((r1 + step * m1) % lcm, lcm)
