from fractions import Fraction

import pytest

from oscalgebra import (
    CHANGES,
    RUNS,
    UNIVERSE,
    GoodSet,
    WitnessTriple,
    achieve_osc,
    avoid_low,
    avoid_low_trace,
    bump_osc,
    bump_osc_trace,
    interest,
    osc,
    osc_runs_oracle,
    parse_good_set,
    random_split_oracle,
    three_atom_witness,
    triple_color,
    verify_witness,
    whole_algebra_oracle,
)


def gs(text):
    return parse_good_set(text)


# -- avoid_low ----------------------------------------------------------------


def test_avoid_low_whole_reference_case():
    # comb over [1/2,1): [1/2,3/4) is blocked by 1/2, the next piece is clean
    oracle = whole_algebra_oracle()
    out = avoid_low(oracle, gs("[1/2,1)"), 2)
    assert out == gs("[3/4,7/8)")
    assert out.is_subset(gs("[1/2,1)"))
    assert min(interest(out)) > 2


@pytest.mark.parametrize("seed,n", [(0, 1), (1, 3), (2, 7), (3, 12), (4, 25)])
def test_avoid_low_contract_random_oracles(seed, n):
    oracle = random_split_oracle(seed)
    a, _ = oracle.split(UNIVERSE)
    trace = avoid_low_trace(oracle, a, n)
    out = trace.result
    assert not out.is_empty()
    assert out.is_subset(a)
    assert min(interest(out)) > n
    assert trace.scanned[-1] == out
    assert len(trace.scanned) <= trace.family_cap
    assert all(count <= 2 for count in trace.block_counts.values())


def test_avoid_low_rejects_bad_arguments():
    oracle = whole_algebra_oracle()
    with pytest.raises(ValueError):
        avoid_low(oracle, gs("[1/2,1)"), 0)
    with pytest.raises(ValueError):
        avoid_low(oracle, gs("∅"), 3)


# -- bump_osc -----------------------------------------------------------------


def make_disjoint_pair(seed):
    oracle = random_split_oracle(seed)
    x, y = oracle.split(UNIVERSE)
    a, _ = oracle.split(x)
    b, _ = oracle.split(y)
    return oracle, a, b


@pytest.mark.parametrize("seed", range(8))
def test_bump_osc_gains_exactly_one(seed):
    oracle, a, b = make_disjoint_pair(seed)
    base = osc(a, b, CHANGES)
    a2, b2 = bump_osc(oracle, a, b)
    assert a2.is_subset(a) and b2.is_subset(b)
    assert not a2.is_empty() and not b2.is_empty()
    assert osc(a2, b2, CHANGES) == base + 1
    assert osc_runs_oracle(a2, b2, CHANGES) == base + 1


@pytest.mark.parametrize("seed", range(8))
def test_bump_osc_trace_details(seed):
    oracle, a, b = make_disjoint_pair(seed)
    trace = bump_osc_trace(oracle, a, b)
    c = trace.carved_from_a
    assert c.is_subset(a)
    assert min(interest(c)) > max(interest(a) + interest(b))
    assert trace.refined_a == a.difference(c)
    assert trace.refined_a.endpoints() == sorted(set(a.bounds) | set(c.bounds))
    if trace.carved_from_b is None:
        assert trace.refined_b == b  # first branch: b untouched
    else:
        assert trace.refined_b != b and trace.refined_b.is_subset(b)


def test_bump_osc_first_branch_when_top_run_is_on_b():
    # top of the symmetric difference on b's side: one carve from a suffices
    oracle = whole_algebra_oracle()
    a, b = gs("[1/3,1/2)"), gs("[1/5,1/4)")  # interests {2,3} vs {4,5}
    trace = bump_osc_trace(oracle, a, b)
    assert trace.carved_from_b is None
    assert osc(trace.refined_a, trace.refined_b, CHANGES) == trace.base + 1


def test_bump_osc_second_branch_when_top_run_is_on_a():
    oracle = whole_algebra_oracle()
    a, b = gs("[1/5,1/4)"), gs("[1/3,1/2)")  # interests {4,5} vs {2,3}
    trace = bump_osc_trace(oracle, a, b)
    assert trace.carved_from_b is not None
    assert osc(trace.refined_a, trace.refined_b, CHANGES) == trace.base + 1


def test_bump_osc_validates_input():
    oracle = whole_algebra_oracle()
    with pytest.raises(ValueError):
        bump_osc(oracle, gs("[0,1/2)"), gs("[1/4,3/4)"))  # overlap
    with pytest.raises(ValueError):
        bump_osc(oracle, gs("∅"), gs("[1/4,3/4)"))


# -- achieve_osc ----------------------------------------------------------------


@pytest.mark.parametrize("seed", [0, 1, 2])
@pytest.mark.parametrize("n", [1, 2, 5, 8])
def test_achieve_osc_contract(seed, n):
    oracle = random_split_oracle(seed)
    a, b = achieve_osc(oracle, n)
    assert not a.is_empty() and not b.is_empty()
    assert a.is_disjoint(b)
    assert not a.contains(Fraction(0)) and not b.contains(Fraction(0))
    assert osc_runs_oracle(a, b, CHANGES) == n


def test_achieve_osc_works_on_the_whole_algebra():
    a, b = achieve_osc(whole_algebra_oracle(), 4)
    assert osc(a, b, CHANGES) == 4
    assert not a.contains(Fraction(0)) and not b.contains(Fraction(0))


def test_achieve_osc_rejects_zero():
    with pytest.raises(ValueError):
        achieve_osc(whole_algebra_oracle(), 0)


# -- witness triples -------------------------------------------------------------


@pytest.mark.parametrize("seed", [0, 5])
@pytest.mark.parametrize("n", [1, 3, 10])
def test_three_atom_witness_end_to_end(seed, n):
    oracle = random_split_oracle(seed)
    w = three_atom_witness(oracle, n)
    ok, reason = verify_witness(w)
    assert ok, reason
    assert w.color == n == triple_color(w.atoms, CHANGES)
    union = w.atoms[0].union(w.atoms[1]).union(w.atoms[2])
    assert union == UNIVERSE
    assert w.atoms[0].contains(Fraction(0))
    mins = [atom.min_elem() for atom in w.atoms]
    assert mins == sorted(mins)
    assert w.oracle_spec == f"random:{seed}"
    assert len(w.log) == oracle.query_count


def test_witness_convention_sensitivity():
    # the same triple counts one higher under the runs convention
    w = three_atom_witness(random_split_oracle(11), 4, CHANGES)
    assert triple_color(w.atoms, RUNS) == 5


def test_runs_convention_witness():
    w = three_atom_witness(random_split_oracle(11), 4, RUNS)
    ok, reason = verify_witness(w)
    assert ok, reason
    assert triple_color(w.atoms, RUNS) == 4
    assert triple_color(w.atoms, CHANGES) == 3
    with pytest.raises(ValueError):
        three_atom_witness(random_split_oracle(11), 1, RUNS)


def test_witness_is_reproducible_per_seed():
    first = three_atom_witness(random_split_oracle(21), 6)
    second = three_atom_witness(random_split_oracle(21), 6)
    assert first == second
    assert first.to_json() == second.to_json()


def test_witness_json_round_trip():
    w = three_atom_witness(random_split_oracle(2), 3)
    back = WitnessTriple.from_json(w.to_json())
    assert back == w


def test_verify_witness_rejects_tampering():
    w = three_atom_witness(random_split_oracle(4), 2)
    wrong_color = WitnessTriple(w.atoms, w.color + 1, w.convention, w.oracle_spec)
    assert verify_witness(wrong_color) == (False, "color-mismatch")

    unsorted_atoms = WitnessTriple(
        (w.atoms[1], w.atoms[0], w.atoms[2]), w.color, w.convention, w.oracle_spec
    )
    assert verify_witness(unsorted_atoms) == (False, "not-min-sorted")

    lo, hi = w.atoms[0].intervals()[0]
    dented = w.atoms[0].difference(GoodSet((lo, (lo + hi) / 2)))
    not_partition = WitnessTriple(
        (dented, w.atoms[1], w.atoms[2]), w.color, w.convention, w.oracle_spec
    )
    assert verify_witness(not_partition) == (False, "not-a-partition")

    overlap = WitnessTriple(
        (w.atoms[0], w.atoms[1], w.atoms[1].union(w.atoms[2])),
        w.color,
        w.convention,
        w.oracle_spec,
    )
    assert verify_witness(overlap)[0] is False

    empty_atom = WitnessTriple(
        (w.atoms[0], gs("∅"), w.atoms[2]), w.color, w.convention, w.oracle_spec
    )
    assert verify_witness(empty_atom) == (False, "empty-atom")

    bad_convention = WitnessTriple(w.atoms, w.color, "spirals", w.oracle_spec)
    assert verify_witness(bad_convention) == (False, "bad-convention")
