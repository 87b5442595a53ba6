"""Command-line entry point: ``spunblf <command> ...`` or ``python3 -m spunblf``.

Exit codes: 0 success, 1 a validation check failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import blf, cerf, document, monodromy, orbits, render, surface
from .intmat import poly_str
from .surface import ParamError, TorusKnotParams

EXIT_OK, EXIT_INVALID, EXIT_BAD_INPUT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _BadInput(f"{self.prog}: {message}")


class _BadInput(Exception):
    pass


def _params(args, k: int = 0) -> TorusKnotParams:
    return TorusKnotParams(args.p, args.q, k)


def _fmt_matrix(a) -> list[str]:
    if not a:
        return ["  []"]
    width = max(len(str(x)) for row in a for x in row)
    return ["  [" + " ".join(str(x).rjust(width) for x in row) + "]" for row in a]


# --- commands: each returns (exit code, json-able object, table text) -------


def cmd_surface(args):
    params = _params(args)
    s = surface.build_seifert_surface(params)
    inv = surface.surface_invariants(s)
    p, q = params.p, params.q
    expected = {
        "vertices": p + q,
        "edges": p * q,
        "euler_characteristic": p + q - p * q,
        "boundary_components": 1,
        "genus": (p - 1) * (q - 1) // 2,
        "first_betti": (p - 1) * (q - 1),
    }
    ok = inv == expected
    rows = [f"L_{{{p},{q}}}", f"{'invariant':<22}{'value':>7}{'formula':>9}"]
    rows += [f"{k:<22}{v:>7}{expected[k]:>9}" for k, v in inv.items()]
    rows.append("all invariants match" if ok else "MISMATCH")
    obj = {"params": {"p": p, "q": q}, "invariants": inv, "expected": expected, "passed": ok,
           "gram_matrix": [list(r) for r in surface.gram_matrix(s)]}
    return (EXIT_OK if ok else EXIT_INVALID), obj, "\n".join(rows)


def cmd_monodromy(args):
    params = _params(args)
    h = monodromy.monodromy_matrix(params)
    hv = monodromy.hv_matrix(params)
    report = monodromy.verify_monodromy_identity(params)
    rows = [f"h_* (basis: {h.basis_tag})"] + _fmt_matrix(h.matrix)
    rows += ["(HV)_*"] + _fmt_matrix(hv.matrix)
    rows.append(f"alexander polynomial: {poly_str(monodromy.alexander_polynomial(params))}")
    rows += report.lines()
    obj = {
        "params": {"p": params.p, "q": params.q},
        "basis": h.basis_tag,
        "monodromy": [list(r) for r in h.matrix],
        "hv": [list(r) for r in hv.matrix],
        "alexander": list(monodromy.alexander_polynomial(params)),
        "report": report.to_dict(),
    }
    return (EXIT_OK if report.passed else EXIT_INVALID), obj, "\n".join(rows)


def cmd_orbits(args):
    params = _params(args)
    action = orbits.phi_action(params)
    obj = {
        "params": {"p": params.p, "q": params.q},
        "table": orbits.orbit_table(params),
        "lengths": orbits.orbit_lengths(params),
        "order": orbits.permutation_order(action.perm1),
    }
    return EXIT_OK, obj, orbits.format_orbit_table(params)


def cmd_blf(args):
    params = _params(args, args.twist)
    d = blf.build(params)
    report = blf.validate(d)
    doc = document.make_document(d, {"validation": report.to_dict()},
                                 {"command": "blf", "p": params.p, "q": params.q, "twist": params.k})
    rows = [d.binding.description, f"{'#':>3} {'round':<5} {'idx':>3} {'wind':>5}  source"]
    for i, r in enumerate(d.rounds):
        rows.append(f"{i:>3} {r.label:<5} {r.index:>3} {r.winding:>5}  {r.source}")
    rows.append(f"windings: {d.windings}")
    rows.append("fiber evolution (region: components[genera]):")
    rows.append("  " + " | ".join("?" if s is None else s.summary() for s in d.regions))
    rows += report.lines()
    return (EXIT_OK if report.passed else EXIT_INVALID), doc, "\n".join(rows)


def cmd_cerf(args):
    if args.winding < 1:
        raise ParamError("--winding must be >= 1")
    e = cerf.eliminate_definite_round0(args.winding)
    reports = [cerf.validate_diagram(s) for s in e.states]
    final = reports[-1]
    ok = all(r.passed for r in reports) and e.final.blf_ready
    doc = document.make_document(
        e, {"final": final.to_dict(), "all_states_valid": all(r.passed for r in reports)},
        {"command": "cerf eliminate", "winding": args.winding})
    rows = [f"eliminating a definite round 0-handle of winding {args.winding}"]
    for i, (m, s) in enumerate(zip(e.script, e.states[1:]), 1):
        circles = ", ".join(f"{c.kind[0].upper()}{c.winding}" for c in s.circles)
        rows.append(f"{i:>3}. {m.kind}{'^-1' if m.inverse else ''} {list(m.target)}  -> [{circles}]")
    rows.append("final regions: " + " | ".join("?" if s is None else s.summary() for s in e.final.regions))
    rows += final.lines()
    return (EXIT_OK if ok else EXIT_INVALID), doc, "\n".join(rows)


def cmd_render(args):
    try:
        text = Path(args.infile).read_text(encoding="utf-8")
    except OSError as exc:
        raise _BadInput(f"cannot read {args.infile}: {exc.strerror}") from exc
    doc = document.parse(text)
    svg = render.render_svg(doc)
    Path(args.out).write_text(svg, encoding="utf-8")
    return EXIT_OK, None, None


# --- argument parsing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    pq = _Parser(add_help=False)
    pq.add_argument("--p", type=int, required=True)
    pq.add_argument("--q", type=int, required=True)

    parser = _Parser(prog="spunblf", description="BLFs of S^4 with spun torus knot fibers")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("surface", parents=[pq, common], help="Seifert surface invariants").set_defaults(fn=cmd_surface)
    sub.add_parser("monodromy", parents=[pq, common], help="monodromy matrices and checks").set_defaults(
        fn=cmd_monodromy)
    sub.add_parser("orbits", parents=[pq, common], help="handle orbits under HV").set_defaults(fn=cmd_orbits)
    b = sub.add_parser("blf", parents=[pq, common], help="round-handle descriptor")
    b.add_argument("--twist", type=int, default=0, metavar="K")
    b.set_defaults(fn=cmd_blf)
    c = sub.add_parser("cerf", help="Cerf-move rewriting")
    csub = c.add_subparsers(dest="action", required=True, parser_class=_Parser)
    e = csub.add_parser("eliminate", parents=[common], help="remove a definite round 0-handle")
    e.add_argument("--winding", type=int, required=True)
    e.set_defaults(fn=cmd_cerf)
    r = sub.add_parser("render", help="SVG base diagram from a JSON document")
    r.add_argument("--in", dest="infile", required=True, metavar="PATH")
    r.add_argument("--out", required=True, metavar="PATH")
    r.set_defaults(fn=cmd_render)
    return parser


def _serialise(obj) -> str:
    if isinstance(obj, document.DescriptorDocument):
        return document.emit(obj)
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        code, obj, table = args.fn(args)
    except _BadInput as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BAD_INPUT
    except (ParamError, blf.DescriptorError, document.SchemaError) as exc:
        print(f"spunblf: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    if obj is not None or table is not None:
        text = _serialise(obj) if args.format == "json" else table + "\n"
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    if code == EXIT_INVALID:
        print("spunblf: validation failed", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
