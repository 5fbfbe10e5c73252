"""Canonical finite unions of half-open rational intervals inside [0,1).

A :class:`GoodSet` stores a strictly increasing, even-length tuple of
endpoints; entry pairs are the half-open intervals ``[bounds[2i],
bounds[2i+1])``.  Canonical form bans touching intervals, so two sets are
equal as sets of rationals exactly when their bounds tuples are equal.
Together these sets form a Boolean algebra with universe [0,1) under the
usual set operations, and every operation here is exact.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .endpoints import DEFAULT_ENUMERATION, ONE, ZERO, as_endpoint


@dataclass(frozen=True, slots=True)
class GoodSet:
    bounds: tuple[Fraction, ...] = ()

    def __post_init__(self):
        bounds = tuple(self.bounds)
        object.__setattr__(self, "bounds", bounds)
        if len(bounds) % 2:
            raise ValueError("bounds list must have even length")
        prev = None
        for x in bounds:
            if not isinstance(x, Fraction):
                raise TypeError(f"bound {x!r} is not a Fraction")
            if x < 0 or x > 1:
                raise ValueError(f"bound {x} outside [0,1]")
            if prev is not None and x <= prev:
                raise ValueError("bounds must be strictly increasing")
            prev = x
        if bounds and bounds[-2] >= 1:
            raise ValueError("only the final bound may equal 1")

    # -- predicates ---------------------------------------------------------

    def is_empty(self) -> bool:
        return not self.bounds

    def contains(self, x: Fraction) -> bool:
        """Membership of a point of [0,1); the point 1 is rejected."""
        x = as_endpoint(x)
        if x == ONE:
            raise ValueError("1 is not a point of the ground set")
        return bisect_right(self.bounds, x) % 2 == 1

    def __contains__(self, x) -> bool:
        return self.contains(x)

    def is_subset(self, other: "GoodSet") -> bool:
        return self.difference(other).is_empty()

    def is_disjoint(self, other: "GoodSet") -> bool:
        return self.intersect(other).is_empty()

    # -- accessors ----------------------------------------------------------

    def min_elem(self) -> Fraction:
        """Least point of the set (its first left endpoint)."""
        if not self.bounds:
            raise ValueError("empty set has no minimum")
        return self.bounds[0]

    def endpoints(self) -> list[Fraction]:
        return list(self.bounds)

    def intervals(self) -> list[tuple[Fraction, Fraction]]:
        b = self.bounds
        return [(b[i], b[i + 1]) for i in range(0, len(b), 2)]

    # -- Boolean operations -------------------------------------------------

    def union(self, other: "GoodSet") -> "GoodSet":
        return self._combine(other, lambda p, q: p or q)

    def intersect(self, other: "GoodSet") -> "GoodSet":
        return self._combine(other, lambda p, q: p and q)

    def difference(self, other: "GoodSet") -> "GoodSet":
        return self._combine(other, lambda p, q: p and not q)

    def complement(self) -> "GoodSet":
        return UNIVERSE.difference(self)

    __or__ = union
    __and__ = intersect
    __sub__ = difference
    __invert__ = complement

    def _combine(self, other: "GoodSet", keep) -> "GoodSet":
        # Linear sweep over the merged breakpoints; membership of either
        # operand is constant on each elementary segment.
        a, b = self.bounds, other.bounds
        pts: list[Fraction] = []
        i = j = 0
        while i < len(a) and j < len(b):
            if a[i] < b[j]:
                pts.append(a[i])
                i += 1
            elif b[j] < a[i]:
                pts.append(b[j])
                j += 1
            else:
                pts.append(a[i])
                i += 1
                j += 1
        pts.extend(a[i:])
        pts.extend(b[j:])

        out: list[Fraction] = []
        in_a = in_b = False
        ia = ib = 0
        for k in range(len(pts) - 1):
            p = pts[k]
            if ia < len(a) and a[ia] == p:
                in_a = not in_a
                ia += 1
            if ib < len(b) and b[ib] == p:
                in_b = not in_b
                ib += 1
            if keep(in_a, in_b):
                if out and out[-1] == p:
                    out[-1] = pts[k + 1]  # merge touching segments
                else:
                    out.append(p)
                    out.append(pts[k + 1])
        return GoodSet(tuple(out))

    # -- text form ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.bounds:
            return "∅"
        return "+".join(f"[{lo},{hi})" for lo, hi in self.intervals())

    def __repr__(self) -> str:
        return f"GoodSet({str(self)!r})"


UNIVERSE = GoodSet((ZERO, ONE))
EMPTY = GoodSet(())


def normalize(raw: list[tuple[Fraction, Fraction]]) -> GoodSet:
    """Canonicalize an arbitrary list of half-open interval pairs.

    Overlapping and touching intervals are merged; pairs with lo >= hi are
    rejected.  Idempotent: normalizing a canonical set's own interval list
    returns an equal set.
    """
    checked = []
    for lo, hi in raw:
        lo, hi = as_endpoint(lo), as_endpoint(hi)
        if lo >= hi:
            raise ValueError(f"interval [{lo},{hi}) is empty or reversed")
        checked.append((lo, hi))
    checked.sort()
    out: list[Fraction] = []
    for lo, hi in checked:
        if out and lo <= out[-1]:
            if hi > out[-1]:
                out[-1] = hi
        else:
            out.append(lo)
            out.append(hi)
    return GoodSet(tuple(out))


class GoodSetParseError(ValueError):
    """Raised for malformed good-set strings; carries the failing position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def parse_good_set(text: str) -> GoodSet:
    """Parse ``"∅"`` or ``"[l,u)+[l,u)+..."`` with exact rational endpoints.

    The interval list may be non-canonical; the result is normalized.
    """
    s = text.strip()
    if s == "∅":
        return EMPTY
    if not s:
        raise GoodSetParseError("empty good-set string", 0)
    pairs = []
    pos = 0
    while True:
        if pos >= len(s) or s[pos] != "[":
            raise GoodSetParseError("expected '['", pos)
        comma = s.find(",", pos)
        if comma < 0:
            raise GoodSetParseError("expected ','", len(s))
        close = s.find(")", comma)
        if close < 0:
            raise GoodSetParseError("expected ')'", len(s))
        lo = _parse_endpoint(s[pos + 1 : comma], pos + 1)
        hi = _parse_endpoint(s[comma + 1 : close], comma + 1)
        if lo >= hi:
            raise GoodSetParseError(f"interval [{lo},{hi}) is empty or reversed", pos)
        pairs.append((lo, hi))
        pos = close + 1
        if pos == len(s):
            break
        if s[pos] != "+":
            raise GoodSetParseError("expected '+' between intervals", pos)
        pos += 1
    return normalize(pairs)


def _parse_endpoint(token: str, pos: int) -> Fraction:
    try:
        return as_endpoint(Fraction(token))
    except (ValueError, ZeroDivisionError) as exc:
        raise GoodSetParseError(f"bad endpoint {token!r}: {exc}", pos) from None


_ENDPOINT_POOLS: dict[int, tuple[Fraction, ...]] = {}


def random_good(rng, max_intervals: int, max_denominator: int) -> GoodSet:
    """Deterministic random canonical set with bounded size and denominators.

    ``rng`` may be a seed or a ``random.Random``.  At most ``max_intervals``
    intervals; every endpoint is a reduced rational with denominator at most
    ``max_denominator``.  Distinct sorted endpoints are already canonical, so
    no merging is needed.
    """
    if max_intervals < 1:
        raise ValueError("max_intervals must be >= 1")
    if max_denominator < 2:
        raise ValueError("max_denominator must be >= 2")
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    pool = _ENDPOINT_POOLS.get(max_denominator)
    if pool is None:
        pool = tuple(DEFAULT_ENUMERATION.level_set(max_denominator))
        _ENDPOINT_POOLS[max_denominator] = pool
    k = rng.randint(0, min(max_intervals, len(pool) // 2))
    if k == 0:
        return EMPTY
    return GoodSet(tuple(sorted(rng.sample(pool, 2 * k))))
