"""Elementary number-theoretic kernel.

Factorization, Euler's totient, the Mobius function, divisor lists, and
Ramanujan's sum, all over plain Python integers.  Inputs are desk-scale by
design, so trial division is enough.
"""

from __future__ import annotations

from math import gcd

__all__ = [
    "gcd",
    "factorize",
    "euler_phi",
    "mobius",
    "divisors",
    "ramanujan_sum",
]


def _check_positive(n: int, name: str = "n") -> None:
    if n <= 0:
        raise ValueError(f"{name} must be a positive integer, got {n}")


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as (prime, exponent) pairs, ascending.

    factorize(1) is the empty list.
    """
    _check_positive(n)
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def euler_phi(n: int) -> int:
    """Euler's totient: the number of 1 <= j <= n coprime to n."""
    _check_positive(n)
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def mobius(n: int) -> int:
    """Mobius function: (-1)^k for squarefree n with k prime factors, else 0."""
    _check_positive(n)
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    _check_positive(n)
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def ramanujan_sum(d: int, a: int) -> int:
    """Ramanujan's sum c_d(a), the sum of e(a*j/d) over j in [1, d] coprime to d.

    Evaluated through the integer closed form phi(d) * mu(d/g) / phi(d/g)
    with g = gcd(a mod d, d); the defining exponential sum is kept only as a
    test oracle.  The division is exact because phi(d/g) divides phi(d).
    """
    _check_positive(d, "d")
    g = gcd(a % d, d)
    reduced = d // g
    num = euler_phi(d) * mobius(reduced)
    q, rem = divmod(num, euler_phi(reduced))
    if rem:  # unreachable for valid phi/mu; guards against kernel bugs
        raise ArithmeticError(f"c_{d}({a}) did not come out an integer")
    return q
