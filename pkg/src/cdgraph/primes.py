"""Primality testing and factorization of 64-bit integers."""

from __future__ import annotations

import math
import random

#: Degrees and vertex labels must lie below this bound.
MAX_VALUE = 2**64 - 1

# Below TRIAL_LIMIT**2 plain trial division finishes the job on its own.
TRIAL_LIMIT = 1 << 16

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def _check_range(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"expected an int, got {type(n).__name__}")
    if n > MAX_VALUE:
        raise ValueError(f"{n} exceeds the 64-bit factorization limit")


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test, exact for every n < 3.3e24."""
    _check_range(n)
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
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


def _pollard_brent(n: int, rng: random.Random) -> int:
    # n is odd and composite; returns a nontrivial divisor.
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def prime_factors(n: int) -> tuple[int, ...]:
    """Return the distinct prime divisors of ``n`` in increasing order.

    Small factors come from trial division; a composite cofactor left over
    after ``TRIAL_LIMIT`` is split with Brent's variant of Pollard rho, so
    the worst case (a product of two 32-bit primes) stays fast.

    >>> prime_factors(360)
    (2, 3, 5)
    >>> prime_factors(1)
    ()
    """
    _check_range(n)
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    found = set()
    for p in (2, 3):
        if n % p == 0:
            found.add(p)
            while n % p == 0:
                n //= p
    f = 5
    bound = min(math.isqrt(n), TRIAL_LIMIT)
    while f <= bound:
        for p in (f, f + 2):
            if n % p == 0:
                found.add(p)
                while n % p == 0:
                    n //= p
                bound = min(math.isqrt(n), TRIAL_LIMIT)
        f += 6
    if n > 1:
        rng = random.Random(n)
        stack = [n]
        while stack:
            m = stack.pop()
            if is_prime(m):
                found.add(m)
            else:
                d = _pollard_brent(m, rng)
                stack.extend((d, m // d))
    return tuple(sorted(found))
