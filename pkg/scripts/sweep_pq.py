"""Sweep coprime (p, q) and tabulate surface, monodromy and BLF checks.

    python3 scripts/sweep_pq.py --max 9
"""
import argparse
import time
from math import gcd

from spunblf import blf
from spunblf.monodromy import verify_monodromy_identity
from spunblf.surface import TorusKnotParams, build_seifert_surface, surface_invariants


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=7, help="largest p and q")
    args = ap.parse_args()

    print(f"{'p':>3} {'q':>3} {'genus':>5} {'b1':>4} {'mono':>5} {'blf':>5} {'turns':>6} {'sec':>6}")
    failures = 0
    for p in range(2, args.max + 1):
        for q in range(p + 1, args.max + 1):
            if gcd(p, q) != 1:
                continue
            t0 = time.perf_counter()
            params = TorusKnotParams(p, q)
            inv = surface_invariants(build_seifert_surface(params))
            mono = verify_monodromy_identity(params).passed
            d = blf.build(params)
            ok = blf.validate(d).passed
            failures += (not mono) + (not ok)
            dt = time.perf_counter() - t0
            print(f"{p:>3} {q:>3} {inv['genus']:>5} {inv['first_betti']:>4} {str(mono):>5} {str(ok):>5} "
                  f"{d.turns:>6} {dt:>6.2f}")
    print("all checks pass" if not failures else f"{failures} failures")


if __name__ == "__main__":
    main()
