"""Exact interval algebra on [0,1) rationals, oscillation colorings, and
construction of three-atom subalgebras of any prescribed color inside a
splitting-oracle subalgebra."""

from .algebra import (
    EMPTY,
    UNIVERSE,
    GoodSet,
    GoodSetParseError,
    normalize,
    parse_good_set,
    random_good,
)
from .endpoints import (
    DEFAULT_ENUMERATION,
    DenominatorEnumeration,
    Enumeration,
    as_endpoint,
    cmp_endpoints,
    enum_value,
    level_set,
)
from .oscillation import (
    CHANGES,
    RUNS,
    interest,
    labeled_delta,
    osc,
    osc_runs_oracle,
    oscillates_at,
    triple_color,
)
from .subalgebra import (
    InvariantViolation,
    RandomSplitOracle,
    SubalgebraOracle,
    WholeAlgebraOracle,
    disjoint_family,
    parse_oracle_spec,
    random_split_oracle,
    whole_algebra_oracle,
)
from .witness import (
    WitnessTriple,
    achieve_osc,
    avoid_low,
    avoid_low_trace,
    bump_osc,
    bump_osc_trace,
    three_atom_witness,
    verify_witness,
)

__all__ = [
    "EMPTY",
    "UNIVERSE",
    "GoodSet",
    "GoodSetParseError",
    "normalize",
    "parse_good_set",
    "random_good",
    "DEFAULT_ENUMERATION",
    "DenominatorEnumeration",
    "Enumeration",
    "as_endpoint",
    "cmp_endpoints",
    "enum_value",
    "level_set",
    "CHANGES",
    "RUNS",
    "interest",
    "labeled_delta",
    "osc",
    "osc_runs_oracle",
    "oscillates_at",
    "triple_color",
    "InvariantViolation",
    "RandomSplitOracle",
    "SubalgebraOracle",
    "WholeAlgebraOracle",
    "disjoint_family",
    "parse_oracle_spec",
    "random_split_oracle",
    "whole_algebra_oracle",
    "WitnessTriple",
    "achieve_osc",
    "avoid_low",
    "avoid_low_trace",
    "bump_osc",
    "bump_osc_trace",
    "three_atom_witness",
    "verify_witness",
]
