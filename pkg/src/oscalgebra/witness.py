"""Construction of three-atom subalgebras with a prescribed oscillation color.

Everything here consumes only a splitting oracle, so every constructed set
lies in the oracle's subalgebra by construction.  The pipeline:

* ``avoid_low`` finds a subset of ``a`` all of whose endpoint labels exceed a
  threshold, by scanning a disjoint comb family until an unblocked member
  appears; counting shows at most two members can be blocked per low-label
  endpoint, so success within ``2*|level set| + 1`` members is certain and
  running past that bound is a bug, not an outcome.
* ``bump_osc`` raises the oscillation count of a disjoint pair by exactly one
  by carving a fresh high-label piece out of one side (and, when that leaves
  the count unchanged, out of the other side as well).
* ``achieve_osc`` produces a disjoint pair avoiding the point 0 with any
  prescribed positive oscillation count, and ``three_atom_witness`` completes
  it to the atoms of a three-atom subalgebra whose color is that count.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .algebra import UNIVERSE, GoodSet, parse_good_set
from .endpoints import DEFAULT_ENUMERATION, Enumeration, ZERO
from .oscillation import CHANGES, check_convention, interest, osc, osc_runs_oracle, triple_color
from .subalgebra import InvariantViolation, SplitRecord, SubalgebraOracle


@dataclass(frozen=True)
class AvoidLowTrace:
    result: GoodSet
    scanned: tuple[GoodSet, ...]  # comb members inspected, result last
    block_counts: dict[Fraction, int]  # low-label endpoint -> members blocked
    family_cap: int


def avoid_low_trace(
    oracle: SubalgebraOracle,
    a: GoodSet,
    n: int,
    enumeration: Enumeration | None = None,
) -> AvoidLowTrace:
    """``avoid_low`` plus the scan evidence, for auditing the pigeonhole."""
    enum = enumeration or DEFAULT_ENUMERATION
    if n < 1:
        raise ValueError("threshold must be >= 1")
    if a.is_empty():
        raise ValueError("cannot refine the empty set")
    cap = 2 * enum.level_set_size(n) + 1
    scanned: list[GoodSet] = []
    block_counts: dict[Fraction, int] = {}
    rest = a
    for position in range(1, cap + 1):
        if position < cap:
            member, rest = oracle.split(rest)
        else:
            member = rest
        scanned.append(member)
        blockers = [u for u in member.bounds if enum.value(u) <= n]
        for u in blockers:
            count = block_counts.get(u, 0) + 1
            block_counts[u] = count
            if count > 2:
                raise InvariantViolation(
                    f"endpoint {u} blocks {count} disjoint family members"
                )
        if not blockers:
            return AvoidLowTrace(member, tuple(scanned), block_counts, cap)
    raise InvariantViolation(
        f"no unblocked member among {cap} disjoint subsets below threshold {n}"
    )


def avoid_low(
    oracle: SubalgebraOracle,
    a: GoodSet,
    n: int,
    enumeration: Enumeration | None = None,
) -> GoodSet:
    """A nonempty subset of ``a`` in the oracle's subalgebra with every
    interest value above ``n``."""
    return avoid_low_trace(oracle, a, n, enumeration).result


@dataclass(frozen=True)
class BumpTrace:
    refined_a: GoodSet
    refined_b: GoodSet
    carved_from_a: GoodSet  # the internal high-label piece removed from a
    carved_from_b: GoodSet | None  # piece removed from b, when needed
    base: int  # oscillation count before the bump


def bump_osc_trace(
    oracle: SubalgebraOracle,
    a: GoodSet,
    b: GoodSet,
    enumeration: Enumeration | None = None,
) -> BumpTrace:
    """``bump_osc`` plus its intermediate pieces, for auditing."""
    if a.is_empty() or b.is_empty():
        raise ValueError("both sets must be nonempty")
    if not a.is_disjoint(b):
        raise ValueError("sets must be disjoint")
    base = osc(a, b, CHANGES, enumeration)
    threshold = max(interest(a, enumeration) + interest(b, enumeration))
    c = avoid_low(oracle, a, threshold, enumeration)
    refined_a = a.difference(c)
    _check_endpoint_identity(a, c, refined_a)
    if osc(refined_a, b, CHANGES, enumeration) == base + 1:
        return BumpTrace(refined_a, b, c, None, base)
    d = avoid_low(oracle, b, max(interest(refined_a, enumeration)), enumeration)
    refined_b = b.difference(d)
    _check_endpoint_identity(b, d, refined_b)
    if osc(refined_a, refined_b, CHANGES, enumeration) != base + 1:
        raise InvariantViolation("neither refinement raised the count by one")
    return BumpTrace(refined_a, refined_b, c, d, base)


def bump_osc(
    oracle: SubalgebraOracle,
    a: GoodSet,
    b: GoodSet,
    enumeration: Enumeration | None = None,
) -> tuple[GoodSet, GoodSet]:
    """Refine a disjoint nonempty pair so its oscillation count grows by one."""
    trace = bump_osc_trace(oracle, a, b, enumeration)
    return trace.refined_a, trace.refined_b


def _check_endpoint_identity(a: GoodSet, c: GoodSet, remainder: GoodSet) -> None:
    # Removing a piece whose endpoints are strictly interior to a's intervals
    # must keep every old endpoint and add every endpoint of the piece.
    expected = sorted(set(a.bounds) | set(c.bounds))
    if list(remainder.bounds) != expected:
        raise InvariantViolation("carved piece was not strictly interior")


def achieve_osc(
    oracle: SubalgebraOracle,
    n: int,
    enumeration: Enumeration | None = None,
) -> tuple[GoodSet, GoodSet]:
    """Disjoint nonempty pair in the oracle's subalgebra, neither containing
    the point 0, with oscillation count exactly ``n`` (changes convention).

    Two splits isolate 0 inside a discarded part; one ``avoid_low`` makes the
    count exactly 1; ``n - 1`` bumps do the rest.
    """
    if n < 1:
        raise ValueError("oscillation target must be >= 1")
    part, rest = oracle.split(oracle.universe)
    zero_free = rest if part.contains(ZERO) else part
    a, b = oracle.split(zero_free)
    b = avoid_low(oracle, b, max(interest(a, enumeration)), enumeration)
    if osc(a, b, CHANGES, enumeration) != 1:
        raise InvariantViolation("separated pair did not start at count 1")
    for _ in range(n - 1):
        a, b = bump_osc(oracle, a, b, enumeration)
    # final check through the independent run-counting path
    if osc_runs_oracle(a, b, CHANGES, enumeration) != n:
        raise InvariantViolation("run-count disagrees with the built count")
    return a, b


@dataclass(frozen=True)
class WitnessTriple:
    """Atoms of a three-atom subalgebra together with its color.

    Atoms are stored sorted by least point; the first atom contains 0, so
    the two colored atoms avoid it.  ``log`` is the oracle's split history
    that produced the triple (provenance only; verification ignores it).
    """

    atoms: tuple[GoodSet, GoodSet, GoodSet]
    color: int
    convention: str
    oracle_spec: str
    log: tuple[SplitRecord, ...] = ()

    def to_json(self) -> str:
        obj = {
            "atoms": [str(atom) for atom in self.atoms],
            "color": self.color,
            "convention": self.convention,
            "oracle": self.oracle_spec,
            "log": [
                {"query": str(q), "answer": [str(lo), str(hi)]}
                for q, lo, hi in self.log
            ],
        }
        return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "WitnessTriple":
        obj = json.loads(line)
        atoms = tuple(parse_good_set(s) for s in obj["atoms"])
        if len(atoms) != 3:
            raise ValueError(f"expected 3 atoms, got {len(atoms)}")
        log = tuple(
            (
                parse_good_set(entry["query"]),
                parse_good_set(entry["answer"][0]),
                parse_good_set(entry["answer"][1]),
            )
            for entry in obj.get("log", [])
        )
        return cls(
            atoms=atoms,
            color=int(obj["color"]),
            convention=check_convention(obj["convention"]),
            oracle_spec=obj.get("oracle", "unknown"),
            log=log,
        )


def three_atom_witness(
    oracle: SubalgebraOracle,
    n: int,
    convention: str = CHANGES,
    enumeration: Enumeration | None = None,
) -> WitnessTriple:
    """Witness triple of color ``n`` inside the oracle's subalgebra.

    The first two atoms come from ``achieve_osc``; the third is the
    complement of their union, which contains 0 and is therefore the least
    atom, so the triple's color is the pair's oscillation count.  Under the
    runs convention the count runs one ahead of the changes count, so the
    buildable colors start at 2.
    """
    check_convention(convention)
    if n < 1:
        raise ValueError("color must be >= 1")
    target = n if convention == CHANGES else n - 1
    if target < 1:
        raise ValueError("color 1 is not constructible under the runs convention")
    b, c = achieve_osc(oracle, target, enumeration)
    third = oracle.universe.difference(b.union(c))
    atoms = tuple(sorted((b, c, third), key=GoodSet.min_elem))
    witness = WitnessTriple(
        atoms=atoms,
        color=n,
        convention=convention,
        oracle_spec=oracle.spec,
        log=tuple(oracle.query_log),
    )
    ok, reason = verify_witness(witness, enumeration)
    if not ok:
        raise InvariantViolation(f"constructed witness failed its own check: {reason}")
    return witness


def verify_witness(
    witness: WitnessTriple,
    enumeration: Enumeration | None = None,
) -> tuple[bool, str]:
    """Recheck every witness invariant from scratch, trusting nothing.

    Uses only the set algebra and the oscillation coloring; the provenance
    log plays no part.  Returns ``(ok, reason)`` with reason "ok" on success.
    """
    atoms = witness.atoms
    if len(atoms) != 3:
        return False, "atom-count"
    if any(atom.is_empty() for atom in atoms):
        return False, "empty-atom"
    for i in range(3):
        for j in range(i + 1, 3):
            if not atoms[i].is_disjoint(atoms[j]):
                return False, "atoms-overlap"
    union = atoms[0].union(atoms[1]).union(atoms[2])
    if union != UNIVERSE:
        return False, "not-a-partition"
    mins = [atom.min_elem() for atom in atoms]
    if not (mins[0] < mins[1] < mins[2]):
        return False, "not-min-sorted"
    if not atoms[0].contains(ZERO):
        return False, "zero-not-in-least-atom"
    try:
        check_convention(witness.convention)
    except ValueError:
        return False, "bad-convention"
    if triple_color(atoms, witness.convention, enumeration) != witness.color:
        return False, "color-mismatch"
    return True, "ok"
