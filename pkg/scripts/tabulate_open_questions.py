#!/usr/bin/env python3
"""Tabulate the open-question sequences and print quick growth diagnostics.

For each requested sequence this writes a CSV table and prints the first
rows, first differences, and consecutive ratios, the raw material for
guessing closed forms.
"""
import argparse
import sys
from pathlib import Path

from jaco_gutman import LinearFunction, SEQUENCE_NAMES, sequence_table
from jaco_gutman.serialize import sequence_to_csv


def describe(values: list[int], show: int) -> None:
    diffs = [b - a for a, b in zip(values, values[1:])]
    print(f"  first values: {values[:show]}")
    print(f"  first differences: {diffs[: show - 1]}")
    if len(values) >= 3 and values[-2]:
        tail_ratio = values[-1] / values[-2]
        print(f"  tail ratio v[{len(values)}]/v[{len(values) - 1}] = {tail_ratio:.4f}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m", type=int, default=1)
    parser.add_argument("--c", type=int, default=0)
    parser.add_argument("--n-max", type=int, default=200)
    parser.add_argument("--which", default=",".join(SEQUENCE_NAMES))
    parser.add_argument("--show", type=int, default=12, help="rows to print per table")
    parser.add_argument("--out-dir", type=Path, default=Path("sequence_out"))
    args = parser.parse_args()

    names = [w.strip() for w in args.which.split(",") if w.strip()]
    unknown = [w for w in names if w not in SEQUENCE_NAMES]
    if unknown:
        parser.error(f"unknown sequence name {unknown[0]!r}")

    f = LinearFunction(args.m, args.c)
    args.out_dir.mkdir(parents=True, exist_ok=True)
    for name in names:
        table = sequence_table(name, f, args.n_max)
        target = args.out_dir / f"{name}.csv"
        target.write_text(sequence_to_csv(table))
        values = [value for _, value in table.rows]
        print(f"{name} for {f}, n up to {args.n_max} -> {target}")
        describe(values, args.show)
    return 0


if __name__ == "__main__":
    sys.exit(main())
