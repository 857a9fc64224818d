"""Integer helpers: factorisation, prime sets, pi-number tests."""

from __future__ import annotations


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division; fine for desk-scale orders."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_set(n: int) -> tuple[int, ...]:
    """Sorted primes dividing n.  prime_set(1) is empty."""
    return tuple(sorted(factorize(n)))


def is_prime(n: int) -> bool:
    return n >= 2 and prime_set(n) == (n,)


def is_pi_number(n: int, pi) -> bool:
    """True when every prime of n lies in pi.  1 passes for any pi, the empty set included."""
    if n < 1:
        raise ValueError(f"not a positive integer: {n}")
    pi = set(pi)
    return all(p in pi for p in prime_set(n))


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    if not is_prime(p):
        raise ValueError(f"not a prime: {p}")
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out
