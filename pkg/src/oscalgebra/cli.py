"""Command-line front end: osc, witness, verify, experiment.

Human-readable reports go to standard output; witness data is JSON lines
written to a file (or stdout when no file is given).  Exit codes: 0 on
success, 1 when a verification fails, 2 for usage or parse errors.  Report
bodies are deterministic for a fixed seed; wall time goes to stderr so
reruns stay byte-identical on stdout.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time

from .algebra import GoodSetParseError, parse_good_set
from .oscillation import CHANGES, RUNS, labeled_delta, osc
from .subalgebra import parse_oracle_spec, random_split_oracle
from .witness import WitnessTriple, three_atom_witness, verify_witness


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oscalgebra",
        description="Exact interval-set oscillation colorings and witness construction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_convention(p):
        p.add_argument(
            "--osc-convention",
            choices=[CHANGES, RUNS],
            default=CHANGES,
            dest="convention",
            help="count side changes (default) or one-sided runs",
        )

    p_osc = sub.add_parser("osc", help="oscillation count of two good-set strings")
    p_osc.add_argument("set_a", metavar="SET_A")
    p_osc.add_argument("set_b", metavar="SET_B")
    add_convention(p_osc)
    p_osc.add_argument(
        "--explain",
        action="store_true",
        help="also print the sorted, side-labeled symmetric difference",
    )
    p_osc.set_defaults(func=cmd_osc)

    p_wit = sub.add_parser("witness", help="build one verified witness triple")
    p_wit.add_argument("--oracle", default="whole", help="'whole' or 'random:<u64>'")
    p_wit.add_argument("--color", type=int, required=True, help="target color (>= 1)")
    add_convention(p_wit)
    p_wit.add_argument("--out", help="write the witness JSON line to this file")
    p_wit.set_defaults(func=cmd_witness)

    p_ver = sub.add_parser("verify", help="re-verify every line of a witness file")
    p_ver.add_argument("path", metavar="WITNESS_FILE")
    p_ver.set_defaults(func=cmd_verify)

    p_exp = sub.add_parser(
        "experiment",
        help="witness every color under many seeded random oracles",
    )
    p_exp.add_argument("--trials", type=int, default=50, help="number of random oracles")
    p_exp.add_argument("--colors", type=int, default=10, help="number of colors per oracle")
    p_exp.add_argument("--seed", type=int, default=0, help="base seed (u64)")
    add_convention(p_exp)
    p_exp.add_argument("--out", help="write all witness JSON lines to this file")
    p_exp.set_defaults(func=cmd_experiment)

    return parser


def cmd_osc(args) -> int:
    try:
        a = parse_good_set(args.set_a)
        b = parse_good_set(args.set_b)
    except GoodSetParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.explain:
        delta = labeled_delta(a, b)
        print("delta:", " ".join(f"{i}:{side}" for i, side in delta) or "(empty)")
    print(osc(a, b, args.convention))
    return 0


def cmd_witness(args) -> int:
    try:
        oracle = parse_oracle_spec(args.oracle)
        if args.color < 1:
            raise ValueError("--color must be >= 1")
        witness = three_atom_witness(oracle, args.color, args.convention)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    ok, reason = verify_witness(witness)
    line = witness.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(line + "\n")
        status = "verified" if ok else f"FAILED ({reason})"
        print(
            f"witness: color={witness.color} convention={witness.convention} "
            f"oracle={witness.oracle_spec} splits={oracle.query_count} {status}"
        )
    else:
        print(line)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    passed = total = 0
    for idx, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        total += 1
        try:
            witness = WitnessTriple.from_json(line)
        except (ValueError, KeyError, TypeError, AttributeError) as exc:
            print(f"line {idx}: FAIL unparseable ({exc})")
            continue
        ok, reason = verify_witness(witness)
        if ok:
            passed += 1
            print(f"line {idx}: ok color={witness.color}")
        else:
            print(f"line {idx}: FAIL {reason}")
    print(f"verified {passed}/{total}")
    return 0 if passed == total else 1


def derive_trial_seed(base_seed: int, trial: int) -> int:
    digest = hashlib.sha256(f"{base_seed}:{trial}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def cmd_experiment(args) -> int:
    if args.trials < 1 or args.colors < 1:
        print("error: --trials and --colors must be >= 1", file=sys.stderr)
        return 2
    if not 0 <= args.seed < 2**64:
        print("error: --seed must be an unsigned 64-bit integer", file=sys.stderr)
        return 2
    # color 1 is not constructible under the runs convention, so that grid
    # starts at color 2 (same grid size either way).
    first_color = 1 if args.convention == CHANGES else 2
    colors = list(range(first_color, first_color + args.colors))

    started = time.perf_counter()
    out_fh = open(args.out, "w", encoding="utf-8") if args.out else None
    verified = 0
    total_splits = 0
    rows = []
    try:
        for trial in range(args.trials):
            seed = derive_trial_seed(args.seed, trial)
            cells = []
            for color in colors:
                oracle = random_split_oracle(seed)
                witness = three_atom_witness(oracle, color, args.convention)
                ok, _reason = verify_witness(witness)
                total_splits += oracle.query_count
                if ok:
                    verified += 1
                    cells.append(str(oracle.query_count))
                else:
                    cells.append("FAIL")
                if out_fh:
                    out_fh.write(witness.to_json() + "\n")
            rows.append((trial, f"random:{seed}", cells))
    finally:
        if out_fh:
            out_fh.close()
    elapsed = time.perf_counter() - started

    total = args.trials * args.colors
    print(
        f"experiment: oracles={args.trials} colors={colors[0]}..{colors[-1]} "
        f"convention={args.convention} base-seed={args.seed}"
    )
    print("cells: oracle split queries per verified witness ('FAIL' on miss)")
    header = f"{'trial':>5}  {'oracle':<27}" + "".join(f"{f'c={c}':>6}" for c in colors)
    print(header)
    for trial, spec, cells in rows:
        print(f"{trial:>5}  {spec:<27}" + "".join(f"{cell:>6}" for cell in cells))
    print(f"witnesses verified: {verified}/{total}")
    print(f"total splits: {total_splits}")
    print(f"wall time: {elapsed:.2f}s", file=sys.stderr)
    return 0 if verified == total else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
