"""Command-line interface: ``amt <subcommand> ...``.

Exit codes: 0 success, 1 mathematical validation failure, 2 I/O or
argument error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .complex import check_d_squared
from .dot import export_dot
from .engines import ENGINES, run_engines
from .errors import InputError, ValidationFailure
from .generate import gen_random
from .homology import homology
from .hpt import Contraction, trivial_morse_contraction
from .io import load_complex, load_matching, write_complex, write_maps, write_matching
from .matchsearch import greedy_matching
from .morsegraph import critical_cells, validate_matching
from .ring import RingSpec
from .simplicial import from_simplicial, parse_facets
from .verify import verify_contraction


class UsageError(InputError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _matching_for(c, args):
    if getattr(args, "matching", None):
        return load_matching(args.matching)
    return greedy_matching(c, args.seed)


def cmd_validate(args) -> int:
    c = load_complex(args.complex)
    violations = check_d_squared(c)  # load_complex already rejects these
    print("ok" if not violations else f"{len(violations)} violations")
    return 0


def cmd_match(args) -> int:
    c = load_complex(args.complex)
    m = greedy_matching(c, args.seed)
    if args.out:
        Path(args.out).write_text(write_matching(m), encoding="utf-8")
    print(f"|M| = {len(m)}")
    print(f"|M0| = {len(critical_cells(c, m))}")
    return 0


def cmd_reduce(args) -> int:
    c = load_complex(args.complex)
    m = _matching_for(c, args)
    run = run_engines(c, m, args.engine, args.max_iterations)
    res = run.result
    if args.out:
        Path(args.out).write_text(write_complex(res.reduced), encoding="utf-8")
    if args.maps:
        Path(args.maps).write_text(write_maps(res.f, res.g, res.h), encoding="utf-8")
    s = res.stats
    print(f"engine: {args.engine}")
    print(f"cells: {s['cells_before']} -> {s['cells_after']}")
    print(f"components: {s['components_before']} -> {s['components_after']}")
    if "series_terms" in s:
        print(f"series terms: {s['series_terms']} (bound {s['series_bound']})")
    if args.engine == "both":
        print("engines agree")
    if not args.out:
        sys.stdout.write(write_complex(res.reduced))
    return 0


def cmd_verify(args) -> int:
    c = load_complex(args.complex)
    m = load_matching(args.matching)
    check = validate_matching(c, m)
    if not check.ok:
        for e in check.errors:
            print(e)
        return 1
    ok = True
    trivial = trivial_morse_contraction(c, m, check.inverses)
    run = run_engines(c, m, "both", args.max_iterations)
    print("engines agree")
    direct = run.gamma
    reports = {
        "trivial Morse contraction": verify_contraction(trivial),
        "perturbed contraction": verify_contraction(run.perturbed.contraction),
        "direct reduction": verify_contraction(
            Contraction(c, direct.reduced, direct.f, direct.g, direct.h)
        ),
    }
    for name, report in reports.items():
        print(f"{name}:")
        print(report)
        ok &= report.ok
    before, after = homology(c), homology(direct.reduced)
    same = before == after
    degrees = c.degrees()
    print("homology before: " + " / ".join(before.describe(degrees)))
    print("homology after:  " + " / ".join(after.describe(degrees)))
    print("homology preserved" if same else "HOMOLOGY DIFFERS")
    ok &= same
    return 0 if ok else 1


def cmd_homology(args) -> int:
    c = load_complex(args.complex)
    prof = homology(c)
    for line in prof.describe(c.degrees()):
        print(line)
    return 0


def cmd_from_simplicial(args) -> int:
    ring = RingSpec.parse(args.ring)
    text = Path(args.facets).read_text(encoding="utf-8")
    c = from_simplicial(parse_facets(text), ring)
    _emit(write_complex(c), args.out)
    return 0


def cmd_export_dot(args) -> int:
    c = load_complex(args.complex)
    m = load_matching(args.matching) if args.matching else None
    sys.stdout.write(export_dot(c, m))
    return 0


def cmd_gen_random(args) -> int:
    ring = RingSpec.parse(args.ring)
    try:
        c = gen_random(args.cells, args.max_degree, args.max_rank, args.density, ring, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(write_complex(c), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="amt", description="Algebraic Morse reduction of based chain complexes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="parse a complex and check d^2 = 0")
    s.add_argument("complex")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("match", help="greedy Morse matching")
    s.add_argument("complex")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out")
    s.set_defaults(func=cmd_match)

    s = sub.add_parser("reduce", help="reduce onto the critical cells")
    s.add_argument("complex")
    s.add_argument("--matching", help="matching file (default: greedy with --seed)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--engine", choices=ENGINES, default="both")
    s.add_argument("--max-iterations", type=int)
    s.add_argument("--out")
    s.add_argument("--maps")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("verify", help="reduce both ways and check every identity")
    s.add_argument("complex")
    s.add_argument("--matching", required=True)
    s.add_argument("--max-iterations", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("homology", help="Betti numbers (and torsion over Z)")
    s.add_argument("complex")
    s.set_defaults(func=cmd_homology)

    s = sub.add_parser("from-simplicial", help="simplicial chain complex from a facets file")
    s.add_argument("facets")
    s.add_argument("--ring", default="Z")
    s.add_argument("--out")
    s.set_defaults(func=cmd_from_simplicial)

    s = sub.add_parser("export-dot", help="Graphviz rendering of the (Morse) digraph")
    s.add_argument("complex")
    s.add_argument("--matching")
    s.set_defaults(func=cmd_export_dot)

    s = sub.add_parser("gen-random", help="seeded random complex")
    s.add_argument("--cells", type=int, required=True)
    s.add_argument("--max-degree", type=int, required=True)
    s.add_argument("--max-rank", type=int, required=True)
    s.add_argument("--density", type=float, required=True)
    s.add_argument("--ring", required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_gen_random)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except ValidationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        _print_details(exc)
        return 1
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _print_details(exc):
    violations = getattr(exc, "violations", None)
    if violations:
        for v in violations:
            print(f"d^2 != 0 at ({v.target}, {v.source}) [{v.row}, {v.col}] = {v.value}")


if __name__ == "__main__":
    sys.exit(main())
