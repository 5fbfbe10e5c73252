"""Splitting oracles standing in for countable atomless subalgebras.

An oracle exposes one operation: split a nonempty set of its subalgebra into
two disjoint nonempty parts whose union is the input.  Everything the
witness engine builds is a Boolean combination of split answers and the
universe, so membership in the oracle's subalgebra holds by construction and
is never tested.

Both oracle flavours answer as a pure function of the query (and the seed),
so a repeated query always returns the same answer and a replayed query log
reproduces bit-identically, regardless of query order.
"""

from __future__ import annotations

import hashlib
import math
import random
from fractions import Fraction

from .algebra import UNIVERSE, GoodSet
from .endpoints import next_prime


class InvariantViolation(AssertionError):
    """An internal certainty failed; signals a bug, never a recoverable state."""


SplitRecord = tuple[GoodSet, GoodSet, GoodSet]  # query, low part, high part


class SubalgebraOracle:
    """Base splitting oracle over the universe [0,1)."""

    spec = "abstract"
    universe = UNIVERSE

    def __init__(self):
        self._log: list[SplitRecord] = []

    def split(self, a: GoodSet) -> tuple[GoodSet, GoodSet]:
        """Partition a nonempty set into two disjoint nonempty pieces."""
        if a.is_empty():
            raise ValueError("cannot split the empty set")
        low, high = self._split(a)
        if low.is_empty() or high.is_empty():
            raise InvariantViolation(f"{self.spec}: split produced an empty part")
        self._log.append((a, low, high))
        return low, high

    def _split(self, a: GoodSet) -> tuple[GoodSet, GoodSet]:
        raise NotImplementedError

    @property
    def query_log(self) -> list[SplitRecord]:
        return list(self._log)

    @property
    def query_count(self) -> int:
        return len(self._log)


class WholeAlgebraOracle(SubalgebraOracle):
    """The trivial oracle whose subalgebra is the whole algebra.

    Splits by bisecting the first interval of the argument at the midpoint
    of its two bounds.
    """

    spec = "whole"

    def _split(self, a: GoodSet) -> tuple[GoodSet, GoodSet]:
        lo, hi = a.bounds[0], a.bounds[1]
        mid = (lo + hi) / 2
        return GoodSet((lo, mid)), GoodSet((mid,) + a.bounds[1:])


class RandomSplitOracle(SubalgebraOracle):
    """Seeded random oracle sampling one subalgebra per seed.

    Each split carves one to three fresh pieces strictly inside the
    argument's intervals.  Carve endpoints share a single prime denominator
    chosen just above the argument's largest endpoint denominator (primes
    keep reduced denominators exactly as chosen), so endpoint labels climb
    strictly along every chain of queries and never collide with the
    argument's own endpoints.  The carve is a pure function of the seed and
    the argument, which subsumes per-argument memoization.
    """

    def __init__(self, seed: int):
        super().__init__()
        if not 0 <= seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        self.seed = seed
        self.spec = f"random:{seed}"

    def _split(self, a: GoodSet) -> tuple[GoodSet, GoodSet]:
        rng = self._rng_for(a)
        fragments = a.intervals()
        pieces = min(rng.randint(1, 3), len(fragments))
        # Carve inside the widest fragments: the denominator a carve needs is
        # inverse in the fragment width, so carving the widest keeps forced
        # denominators growing linearly with fragment count instead of
        # ratcheting geometrically through ever-thinner slivers.
        by_width = sorted(
            range(len(fragments)),
            key=lambda i: (fragments[i][0] - fragments[i][1], i),
        )
        chosen = sorted(by_width[:pieces])

        q = max(x.denominator for x in a.bounds) + 1 + rng.randint(0, 6)
        for idx in chosen:
            lo, hi = fragments[idx]
            width = hi - lo
            # need two lattice points strictly inside (lo, hi): q*width > 2
            q = max(q, 2 * width.denominator // width.numerator + 1)
        q = next_prime(q)

        carved: dict[int, tuple[Fraction, Fraction]] = {}
        for idx in chosen:
            lo, hi = fragments[idx]
            first = math.floor(lo * q) + 1
            last = math.ceil(hi * q) - 1
            span = last - first
            if span >= 8:  # keep the leftover slivers from getting too thin
                first += span // 4
                last -= span // 4
            pa, pb = sorted(rng.sample(range(first, last + 1), 2))
            carved[idx] = (Fraction(pa, q), Fraction(pb, q))

        low_bounds: list[Fraction] = []
        high_bounds: list[Fraction] = []
        for idx, (lo, hi) in enumerate(fragments):
            if idx in carved:
                u, v = carved[idx]
                low_bounds += [u, v]
                high_bounds += [lo, u, v, hi]
            else:
                high_bounds += [lo, hi]
        return GoodSet(tuple(low_bounds)), GoodSet(tuple(high_bounds))

    def _rng_for(self, a: GoodSet) -> random.Random:
        first, last = a.bounds[0], a.bounds[-1]
        max_den = max(x.denominator for x in a.bounds)
        key = f"{self.seed}|{len(a.bounds)}|{first}|{last}|{max_den}"
        digest = hashlib.sha256(key.encode()).digest()
        return random.Random(int.from_bytes(digest[:8], "big"))


def whole_algebra_oracle() -> WholeAlgebraOracle:
    return WholeAlgebraOracle()


def random_split_oracle(seed: int) -> RandomSplitOracle:
    return RandomSplitOracle(seed)


def parse_oracle_spec(spec: str) -> SubalgebraOracle:
    """Build an oracle from its CLI spec string: "whole" or "random:<u64>"."""
    if spec == "whole":
        return whole_algebra_oracle()
    if spec.startswith("random:"):
        try:
            seed = int(spec[len("random:") :])
        except ValueError:
            raise ValueError(f"bad oracle seed in {spec!r}") from None
        return random_split_oracle(seed)
    raise ValueError(f"unknown oracle spec {spec!r} (expected 'whole' or 'random:<seed>')")


def disjoint_family(oracle: SubalgebraOracle, a: GoodSet, m: int) -> list[GoodSet]:
    """m pairwise disjoint nonempty subsets of ``a`` partitioning it.

    Built as a left-leaning comb of m-1 splits: each split peels one piece
    off the running remainder, and the final remainder is the last member.
    """
    if m < 1:
        raise ValueError("family size must be >= 1")
    if a.is_empty():
        raise ValueError("cannot take a disjoint family inside the empty set")
    parts: list[GoodSet] = []
    rest = a
    for _ in range(m - 1):
        piece, rest = oracle.split(rest)
        parts.append(piece)
    parts.append(rest)
    return parts
