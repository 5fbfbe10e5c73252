"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from oscalgebra import GoodSet


@st.composite
def unit_fractions(draw, max_denominator=32):
    den = draw(st.integers(1, max_denominator))
    num = draw(st.integers(0, den))
    return Fraction(num, den)


@st.composite
def good_sets(draw, max_intervals=4, max_denominator=32):
    k = draw(st.integers(0, max_intervals))
    if k == 0:
        return GoodSet()
    pts = draw(
        st.sets(
            unit_fractions(max_denominator=max_denominator),
            min_size=2 * k,
            max_size=2 * k,
        )
    )
    return GoodSet(tuple(sorted(pts)))


@st.composite
def raw_interval_lists(draw, max_intervals=4, max_denominator=32):
    n = draw(st.integers(0, max_intervals))
    pairs = []
    for _ in range(n):
        x, y = draw(
            st.tuples(
                unit_fractions(max_denominator=max_denominator),
                unit_fractions(max_denominator=max_denominator),
            ).filter(lambda t: t[0] != t[1])
        )
        pairs.append((min(x, y), max(x, y)))
    return pairs


def realize_interests(denominators) -> GoodSet:
    """A set whose interest values are exactly the given even-size list.

    Uses endpoints 1/d, which are reduced with denominator exactly d; the
    denominators are consumed in descending order so the interval bounds come
    out ascending and pairwise disjoint.
    """
    dens = sorted(set(denominators))
    if len(dens) % 2:
        raise ValueError("need an even number of distinct denominators")
    pts = [Fraction(1, d) for d in reversed(dens)]
    return GoodSet(tuple(pts))


@st.composite
def disjoint_denominator_sets(draw, count=2, pool_max=200):
    """Pairwise disjoint, even-sized sets of denominators >= 2."""
    sizes = [draw(st.integers(1, 3)) * 2 for _ in range(count)]
    pool = draw(
        st.sets(st.integers(2, pool_max), min_size=sum(sizes), max_size=sum(sizes))
    )
    items = sorted(pool)
    draw(st.randoms(use_true_random=False)).shuffle(items)
    out = []
    at = 0
    for size in sizes:
        out.append(items[at : at + size])
        at += size
    return out
