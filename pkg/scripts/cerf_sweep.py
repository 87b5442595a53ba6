"""Definite-fold elimination for a range of windings; prints script sizes and final diagrams.

    python3 scripts/cerf_sweep.py --max-winding 12 --trace 3
"""
import argparse
from collections import Counter

from spunblf.cerf import DEFINITE, INDEFINITE, eliminate_definite_round0, validate_diagram


def shape(d):
    return "[" + ", ".join(f"{c.kind[0].upper()}{c.winding}" for c in d.circles) + "]"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-winding", type=int, default=8)
    ap.add_argument("--trace", type=int, default=None, help="print the full script for this winding")
    args = ap.parse_args()

    print(f"{'n':>3} {'moves':>6} {'definite':>8} {'indef':>6} {'valid':>6}  move counts")
    for n in range(1, args.max_winding + 1):
        e = eliminate_definite_round0(n)
        valid = all(validate_diagram(s).passed for s in e.states)
        counts = Counter(m.kind for m in e.script)
        print(f"{n:>3} {len(e.script):>6} {e.final.count(DEFINITE):>8} {e.final.count(INDEFINITE):>6} "
              f"{str(valid):>6}  {dict(sorted(counts.items()))}")

    if args.trace:
        e = eliminate_definite_round0(args.trace)
        print(f"\nwinding {args.trace}: {shape(e.initial)}")
        for m, s in zip(e.script, e.states[1:]):
            print(f"  {m.kind:<12}{'^-1' if m.inverse else '   '} {str(list(m.target)):<8} {shape(s)}")
        print("  regions:", " | ".join(r.summary() for r in e.final.regions))


if __name__ == "__main__":
    main()
