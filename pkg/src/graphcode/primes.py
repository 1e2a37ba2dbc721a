"""Small prime utilities for integer graph labels.

Labels are products of distinct primes, so everything here works with
exact Python ints; products of the first k primes overflow 64 bits
around k = 15, which is why no fixed-width arithmetic is used anywhere.
"""

from __future__ import annotations

from functools import lru_cache

_PRIMES: list[int] = [2, 3, 5, 7, 11, 13]


def _grow_primes(count: int) -> None:
    candidate = _PRIMES[-1]
    while len(_PRIMES) < count:
        candidate += 2
        if all(candidate % p for p in _PRIMES if p * p <= candidate):
            _PRIMES.append(candidate)


def nth_prime(i: int) -> int:
    """The i-th prime, 1-based: nth_prime(1) == 2."""
    if i < 1:
        raise ValueError(f"prime index must be >= 1, got {i}")
    _grow_primes(i)
    return _PRIMES[i - 1]


def first_primes(k: int) -> tuple[int, ...]:
    """The first k primes as a tuple."""
    if k < 0:
        raise ValueError(f"prime count must be >= 0, got {k}")
    _grow_primes(k)
    return tuple(_PRIMES[:k])


@lru_cache(maxsize=4096)
def factorize(x: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of x >= 1 as ((prime, exponent), ...) ascending."""
    if x < 1:
        raise ValueError(f"cannot factorize {x}")
    factors = []
    d = 2
    while d * d <= x:
        if x % d == 0:
            e = 0
            while x % d == 0:
                x //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if x > 1:
        factors.append((x, 1))
    return tuple(factors)


def prime_support(x: int) -> tuple[int, ...]:
    """Distinct prime divisors of x >= 1, ascending."""
    return tuple(p for p, _ in factorize(x))


def is_square_free(x: int) -> bool:
    """True iff no prime divides x more than once."""
    return all(e == 1 for _, e in factorize(x))


def divisors_above_one(n: int) -> list[int]:
    """Divisors of n that exceed 1, ascending."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small[1:] + large[::-1]
