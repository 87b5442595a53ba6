"""Write JSON descriptors and SVG base diagrams for a few knots into an output directory.

    python3 scripts/render_examples.py --outdir figures
"""
import argparse
from pathlib import Path

from spunblf import blf, document
from spunblf.cerf import eliminate_definite_round0
from spunblf.render import render_svg
from spunblf.surface import TorusKnotParams

CASES = [(2, 3, 0), (2, 3, 2), (3, 4, 0), (2, 5, 0)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--outdir", default="figures")
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)

    for p, q, k in CASES:
        d = blf.build(TorusKnotParams(p, q, k))
        doc = document.make_document(d, {"validation": blf.validate(d).to_dict()}, {"p": p, "q": q, "twist": k})
        stem = f"blf_{p}_{q}" + (f"_twist{k}" if k else "")
        (out / f"{stem}.json").write_text(document.emit(doc), encoding="utf-8")
        (out / f"{stem}.svg").write_text(render_svg(doc), encoding="utf-8")
        print(f"{stem}: {d.turns} turns")
    e = eliminate_definite_round0(3)
    (out / "gay_winding3.svg").write_text(render_svg(e), encoding="utf-8")
    print("gay_winding3: final diagram")


if __name__ == "__main__":
    main()
