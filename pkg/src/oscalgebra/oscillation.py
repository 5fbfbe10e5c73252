"""Interest sets, oscillation counts, and the three-atom coloring.

The interest set of a good set is the image of its endpoints under the
endpoint enumeration.  Two sets oscillate at a label i when i belongs to
exactly one of the two interest sets and the nearest smaller label in the
symmetric difference sits on the other side.  Two conventions are supported
for the first element of the symmetric difference, which has no smaller
neighbour: under ``CHANGES`` (the default) it never oscillates, so the count
equals the number of side changes along the sorted symmetric difference;
under ``RUNS`` it always does, so the count equals the number of one-sided
runs.
"""

from __future__ import annotations

from .algebra import GoodSet
from .endpoints import Enumeration, enum_value

CHANGES = "changes"
RUNS = "runs"

InterestSet = tuple[int, ...]


def check_convention(convention: str) -> str:
    if convention not in (CHANGES, RUNS):
        raise ValueError(f"unknown oscillation convention {convention!r}")
    return convention


def interest(a: GoodSet, enumeration: Enumeration | None = None) -> InterestSet:
    """Sorted labels of the set's endpoints; empty for the empty set."""
    return tuple(sorted({enum_value(x, enumeration) for x in a.bounds}))


def oscillates_at(
    a0: GoodSet,
    a1: GoodSet,
    i: int,
    convention: str = CHANGES,
    enumeration: Enumeration | None = None,
) -> bool:
    """Literal one-point evaluation of the oscillation condition at label i."""
    check_convention(convention)
    s0 = set(interest(a0, enumeration))
    s1 = set(interest(a1, enumeration))
    only0, only1 = s0 - s1, s1 - s0
    if i in only0:
        opposite = only1
    elif i in only1:
        opposite = only0
    else:
        return False
    below = [j for j in (only0 | only1) if j < i]
    if not below:
        return convention == RUNS
    return max(below) in opposite


def osc(
    a0: GoodSet,
    a1: GoodSet,
    convention: str = CHANGES,
    enumeration: Enumeration | None = None,
) -> int:
    """Number of labels at which the two sets oscillate.

    Scans every label from 0 up to the largest interest value, tracking the
    side of the most recent symmetric-difference element.  Symmetric in its
    two arguments.
    """
    check_convention(convention)
    s0 = set(interest(a0, enumeration))
    s1 = set(interest(a1, enumeration))
    both = s0 | s1
    if not both:
        return 0
    only0, only1 = s0 - s1, s1 - s0
    count = 0
    prev_side = None
    for i in range(max(both) + 1):
        if i in only0:
            side = 0
        elif i in only1:
            side = 1
        else:
            continue
        if prev_side is None:
            if convention == RUNS:
                count += 1
        elif side != prev_side:
            count += 1
        prev_side = side
    return count


def osc_runs_oracle(
    a0: GoodSet,
    a1: GoodSet,
    convention: str = CHANGES,
    enumeration: Enumeration | None = None,
) -> int:
    """Independent oscillation count via run counting.

    Sorts the symmetric difference of the interest sets, labels each element
    by the side it came from, and counts adjacent opposite-side pairs; under
    ``RUNS`` adds one more when the difference is nonempty.
    """
    check_convention(convention)
    labels = [side for _, side in labeled_delta(a0, a1, enumeration)]
    changes = sum(1 for x, y in zip(labels, labels[1:]) if x != y)
    if convention == RUNS:
        return changes + 1 if labels else 0
    return changes


def labeled_delta(
    a0: GoodSet,
    a1: GoodSet,
    enumeration: Enumeration | None = None,
) -> list[tuple[int, str]]:
    """Sorted symmetric difference of interest sets, tagged 'a' or 'b' by side."""
    s0 = set(interest(a0, enumeration))
    s1 = set(interest(a1, enumeration))
    tagged = [(i, "a") for i in s0 - s1] + [(i, "b") for i in s1 - s0]
    return sorted(tagged)


def triple_color(
    atoms,
    convention: str = CHANGES,
    enumeration: Enumeration | None = None,
) -> int:
    """Color of a three-atom subalgebra given by its atoms, in any order.

    The atoms are sorted by their least points and the color is the
    oscillation count of the second and third; sorting makes the value
    invariant under permutation of the input.
    """
    atoms = tuple(atoms)
    if len(atoms) != 3:
        raise ValueError(f"expected exactly 3 atoms, got {len(atoms)}")
    for atom in atoms:
        if atom.is_empty():
            raise ValueError("atoms must be nonempty")
    for i in range(3):
        for j in range(i + 1, 3):
            if not atoms[i].is_disjoint(atoms[j]):
                raise ValueError("atoms must be pairwise disjoint")
    ordered = sorted(atoms, key=GoodSet.min_elem)
    return osc(ordered[1], ordered[2], convention, enumeration)
