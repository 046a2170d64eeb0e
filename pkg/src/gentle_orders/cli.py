"""Command-line front end.

Exit codes: 0 success / INCONCLUSIVE, 1 DISTINGUISHED or selftest failure,
2 bad input.
"""

import argparse
import json
import sys

from . import __version__
from .cartan import cartan_data, cartan_path_oracle, PATH_ORACLE_MAX_ARROWS
from .errors import GentleOrderError
from .halfedge import format_hep
from .invariants import compute_invariants
from .presentation import format_presentation, load, to_half_edges, validate_gentle_order
from .randgen import GenConfig, generate
from .screen import screen
from .surface import ribbon_data, surface_profiles


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GentleOrderError(f"cannot read {path}: {exc.strerror}") from None
    fmt = "hep" if path.endswith(".hep") else "gq" if path.endswith(".gq") else None
    p, _ = load(text, fmt)
    c = validate_gentle_order(p)
    return p, c, to_half_edges(p, c)


def _dump(obj):
    print(json.dumps(obj, indent=2, sort_keys=False))


def _fmt_ag(entries):
    return "[" + ", ".join(f"({m},{n})" for m, n in entries) + "]"


def cmd_validate(args):
    p, c, _ = _read(args.file)
    print(f"gentle order: {len(p.vertices)} vertices, {len(p.arrows)} arrows, "
          f"{len(p.components())} component(s)")
    for v, t in c.as_dict().items():
        print(f"  {v}: {t}")
    return 0


def cmd_invariants(args):
    p, c, h = _read(args.file)
    b = compute_invariants(p, c, h)
    if args.json:
        _dump(b.to_json())
        return 0
    bc = "n/a (disconnected)" if b.bc is None else b.bc
    cls = "n/a (disconnected)" if b.cls is None else b.cls.tag
    print(f"pc={b.pc}")
    print(f"bc={bc}")
    print(f"ag1={_fmt_ag(b.ag1)}")
    print(f"ag2={_fmt_ag(b.ag2)}")
    print("counts=" + " ".join(f"{k}={v}" for k, v in b.counts.items()))
    print(f"profile={list(b.profile)}")
    print(f"class={cls}")
    if b.components > 1:
        print(f"components={b.components}")
    return 0


def cmd_cartan(args):
    p, c, h = _read(args.file)
    cd = cartan_data(p, c, h)
    failures = []
    if args.oracle:
        if cd.rank != cd.rank_formula:
            failures.append(f"rank: oracle {cd.rank} != formula {cd.rank_formula}")
        if cd.det != cd.det_formula:
            failures.append(f"det: oracle {cd.det} != formula {cd.det_formula}")
        if len(p.arrows) <= PATH_ORACLE_MAX_ARROWS:
            if cartan_path_oracle(p) != cd.cartan:
                failures.append("path oracle disagrees with B B^T")
    if args.json:
        out = cd.to_json()
        if args.oracle:
            out["oracle_failures"] = failures
        _dump(out)
    else:
        print("incidence B:")
        print(cd.incidence.pretty())
        print("cartan C = B B^T:")
        print(cd.cartan.pretty())
        print(f"rank={cd.rank} det={cd.det}")
        if args.oracle:
            print(f"rank formula={cd.rank_formula} det formula={cd.det_formula}")
            print("oracles: " + ("agree" if not failures else "; ".join(failures)))
    return 1 if failures else 0


def cmd_surface(args):
    _, _, h = _read(args.file)
    profs = surface_profiles(h)
    if args.json:
        _dump(profs[0].to_json() if len(profs) == 1 else [pr.to_json() for pr in profs])
        return 0
    r = ribbon_data(h)
    print(f"V={len(r.vertices)} E={len(r.edges)} F={len(r.faces)} "
          f"(E_t={r.n_truncated}, E_g={r.n_glued}, F_b={r.n_boundary}, F_p={r.n_punctured})")
    for k, pr in enumerate(profs):
        tag = f"component {k + 1}: " if len(profs) > 1 else ""
        print(f"{tag}genus={pr.genus} euler={pr.euler} "
              f"boundary_faces={pr.boundary_faces} punctured_faces={pr.punctured_faces}")
    return 0


def cmd_screen(args):
    a, _, _ = _read(args.a)
    b, _, _ = _read(args.b)
    rep = screen(a, b)
    if args.json:
        _dump(rep.to_json())
    else:
        w = max(len(r.name) for r in rep.rows)
        for r in rep.rows:
            print(f"{r.name.ljust(w)}  {'=' if r.equal else '!'}  {r.a}  |  {r.b}")
        print(f"verdict: {rep.verdict}")
    return rep.exit_code


def cmd_gen(args):
    cfg = GenConfig(n=args.half_edges, seed=args.seed, connected=args.connected,
                    transition_fraction=args.transition_fraction)
    sys.stdout.write(format_hep(generate(cfg)))
    return 0


def cmd_convert(args):
    p, _, h = _read(args.file)
    sys.stdout.write(format_presentation(p) if args.to == "gq" else format_hep(h))
    return 0


def cmd_selftest(args):
    from .selfcheck import run_selftest

    passed, failures = run_selftest(args.cases, args.seed)
    for i, h, chk in failures[:20]:
        print(f"FAIL case {i}: {chk.name} {chk.detail} on {h!r}")
    total = sum(passed.values())
    print(f"selftest: {args.cases} cases, {total} checks passed, {len(failures)} failed")
    return 1 if failures else 0


def build_parser():
    ap = _Parser(prog="gentle-orders", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="check a file is a gentle order")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("invariants", help="AG-invariants, pc, bc, counts")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("cartan", help="incidence and Cartan matrices")
    s.add_argument("file")
    s.add_argument("--oracle", action="store_true", help="cross-check formulas and path counts")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_cartan)

    s = sub.add_parser("surface", help="genus and face counts")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_surface)

    s = sub.add_parser("screen", help="compare two orders")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_screen)

    s = sub.add_parser("gen", help="random order in .hep format")
    s.add_argument("--half-edges", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--connected", action="store_true")
    s.add_argument("--transition-fraction", type=float, default=0.5)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("convert", help="rewrite as .gq or .hep")
    s.add_argument("file")
    s.add_argument("--to", choices=("gq", "hep"), required=True)
    s.set_defaults(func=cmd_convert)

    s = sub.add_parser("selftest", help="property suite on random orders")
    s.add_argument("--cases", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GentleOrderError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
