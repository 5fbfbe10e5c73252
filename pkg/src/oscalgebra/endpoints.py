"""Exact rational endpoints of [0,1] and finite-to-one endpoint enumerations.

Endpoints are plain ``fractions.Fraction`` values, which are always stored
reduced, so structural and value equality coincide.  The unit point 1 is a
legal endpoint (it may close the last interval of a set) but is not a point
of the ground set [0,1).
"""

from __future__ import annotations

import math
from fractions import Fraction

Endpoint = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_endpoint(value) -> Fraction:
    """Coerce ``value`` to a Fraction in [0,1], rejecting anything outside."""
    x = Fraction(value)
    if x < 0 or x > 1:
        raise ValueError(f"endpoint {x} outside [0,1]")
    return x


def cmp_endpoints(x: Fraction, y: Fraction) -> int:
    """Total order on endpoints: -1, 0 or 1."""
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


class Enumeration:
    """A finite-to-one labelling of the endpoints of [0,1] by naturals >= 1.

    Implementations must keep ``value`` deterministic and must be able to
    enumerate every endpoint whose label is at most ``n`` (a finite set).
    """

    def value(self, x: Fraction) -> int:
        raise NotImplementedError

    def level_set(self, n: int) -> list[Fraction]:
        """All endpoints with label <= n, sorted ascending, no duplicates."""
        raise NotImplementedError

    def level_set_size(self, n: int) -> int:
        return len(self.level_set(n))


class DenominatorEnumeration(Enumeration):
    """Label every reduced p/q in [0,1] by its denominator q.

    Level sets are then the classic Farey sequences: level n consists of all
    reduced fractions in [0,1] with denominator at most n, including 0 and 1.
    """

    def value(self, x: Fraction) -> int:
        return x.denominator

    def level_set(self, n: int) -> list[Fraction]:
        if n < 1:
            raise ValueError("level_set requires n >= 1")
        # Farey next-term recurrence: from consecutive a/b < c/d the successor
        # is (kc-a)/(kd-b) with k = (n+b)//d.
        out = [ZERO]
        a, b, c, d = 0, 1, 1, n
        while (a, b) != (1, 1):
            k = (n + b) // d
            a, b, c, d = c, d, k * c - a, k * d - b
            out.append(Fraction(a, b))
        return out

    def level_set_size(self, n: int) -> int:
        if n < 1:
            raise ValueError("level_set_size requires n >= 1")
        return 1 + _totient_sum(n)


_TOTIENT_SUM_CACHE: dict[int, int] = {0: 0}
_SIEVE_LIMIT = 1 << 12
_SIEVE_PREFIX: list[int] = []


def _totient_sieve_prefix() -> list[int]:
    global _SIEVE_PREFIX
    if not _SIEVE_PREFIX:
        phi = list(range(_SIEVE_LIMIT + 1))
        for p in range(2, _SIEVE_LIMIT + 1):
            if phi[p] == p:  # p prime
                for m in range(p, _SIEVE_LIMIT + 1, p):
                    phi[m] -= phi[m] // p
        acc = [0] * (_SIEVE_LIMIT + 1)
        run = 0
        for q in range(1, _SIEVE_LIMIT + 1):
            run += phi[q]
            acc[q] = run
        _SIEVE_PREFIX = acc
    return _SIEVE_PREFIX


def _totient_sum(n: int) -> int:
    """Sum of Euler's totient over 1..n, via the divisor-block recursion."""
    if n <= _SIEVE_LIMIT:
        return _totient_sieve_prefix()[n]
    cached = _TOTIENT_SUM_CACHE.get(n)
    if cached is not None:
        return cached
    total = n * (n + 1) // 2
    d = 2
    while d <= n:
        q = n // d
        d_hi = n // q
        total -= (d_hi - d + 1) * _totient_sum(q)
        d = d_hi + 1
    _TOTIENT_SUM_CACHE[n] = total
    return total


DEFAULT_ENUMERATION = DenominatorEnumeration()


def enum_value(x: Fraction, enumeration: Enumeration | None = None) -> int:
    """Label of an endpoint under the given (default: denominator) enumeration."""
    return (enumeration or DEFAULT_ENUMERATION).value(x)


def level_set(n: int, enumeration: Enumeration | None = None) -> list[Fraction]:
    """All endpoints labelled at most n, sorted ascending."""
    return (enumeration or DEFAULT_ENUMERATION).level_set(n)


def next_prime(n: int) -> int:
    """Smallest prime >= n."""
    k = max(n, 2)
    while not _is_prime(k):
        k += 1
    return k


def _is_prime(k: int) -> bool:
    if k < 2:
        return False
    if k < 4:
        return True
    if k % 2 == 0 or k % 3 == 0:
        return False
    f = 5
    limit = math.isqrt(k)
    while f <= limit:
        if k % f == 0 or k % (f + 2) == 0:
            return False
        f += 6
    return True
