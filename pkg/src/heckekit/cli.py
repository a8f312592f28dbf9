"""Command-line front end.

Subcommands emit deterministic tables (TSV by default, JSON behind
--format json), run the verification suites, and reproduce the worked
rank-3 decomposition.  Exit codes: 0 success, 1 a verification suite
failed, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import coxeter, rouquier, soergel, verify
from .coxeter import CoxeterMatrix, CoxeterSystem, GroupTooLarge, UnsupportedBond
from .hecke import HeckeAlgebra
from .laurent import NotDivisible
from .parabolic import NotInIdeal


class InputError(ValueError):
    pass


def _add_common(parser: argparse.ArgumentParser, subset: bool = True) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--type", help='named type, e.g. "A3", "B3", "I2(7)", "A1xA1"')
    group.add_argument("--matrix", help="file with rank and upper-triangular bond labels")
    parser.add_argument("--cap", type=int, default=coxeter.DEFAULT_CAP,
                        help="enumeration cap (default %(default)s)")
    parser.add_argument("--format", choices=("tsv", "json"), default="tsv")
    if subset:
        parser.add_argument("--subset", default="",
                            help='generator labels, e.g. "s1,s2" (default: empty)')


def _load_system(args) -> tuple[CoxeterSystem, str]:
    if args.matrix:
        matrix = CoxeterMatrix.from_file(args.matrix)
        label = f"matrix:{args.matrix}"
    elif args.type:
        matrix = CoxeterMatrix.from_name(args.type)
        label = args.type
    else:
        raise InputError("one of --type or --matrix is required")
    if args.cap < 1:
        raise InputError("--cap must be positive")
    return coxeter.build(matrix, cap=args.cap), label


def _parse_subset(system: CoxeterSystem, text: str) -> frozenset[int]:
    text = (text or "").strip()
    if not text:
        return frozenset()
    try:
        return frozenset(system.gen_index(tok.strip()) for tok in text.split(","))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _parse_rep(module, text: str) -> int:
    system = module.system
    try:
        w = system.parse_element(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if not system.is_min_coset_rep(w, module.subset):
        raise InputError(
            f"{system.word_str(w)} is not a minimal coset representative "
            f"for the chosen subset"
        )
    return w


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


def _poly_str(p) -> str:
    return str(p)


# -- subcommands ----------------------------------------------------------------


def cmd_kl_table(args) -> int:
    system, label = _load_system(args)
    algebra = HeckeAlgebra(system)
    rows = []
    for x in range(system.size):
        kl = algebra.kl_basis(x)
        for y in sorted(kl.terms):
            rows.append((y, x, kl.terms[y]))
    if args.format == "json":
        _print_json({
            "system": label,
            "rows": [
                {"y": system.word_str(y), "x": system.word_str(x), "h": p.to_pairs()}
                for y, x, p in rows
            ],
        })
    else:
        print("# y\tx\th")
        for y, x, p in rows:
            print(f"{system.word_str(y)}\t{system.word_str(x)}\t{_poly_str(p)}")
    return 0


def cmd_parabolic_tables(args) -> int:
    system, label = _load_system(args)
    algebra = HeckeAlgebra(system)
    module = algebra.parabolic(_parse_subset(system, args.subset))
    rows = []
    for x in module.reps:
        pkl = module.kl_basis(x)
        for y in sorted(pkl.terms):
            rows.append((y, x, pkl.terms[y]))
    if args.format == "json":
        _print_json({
            "system": label,
            "subset": module.subset_labels(),
            "rows": [
                {"y": system.word_str(y), "x": system.word_str(x), "h": p.to_pairs()}
                for y, x, p in rows
            ],
        })
    else:
        print("# y\tx\th^I")
        for y, x, p in rows:
            print(f"{system.word_str(y)}\t{system.word_str(x)}\t{_poly_str(p)}")
    return 0


def cmd_inverse_tables(args) -> int:
    system, label = _load_system(args)
    algebra = HeckeAlgebra(system)
    module = algebra.parabolic(_parse_subset(system, args.subset))
    rows = []
    for z in module.reps:
        for x in module.reps:
            if system.bruhat_leq(x, z):
                rows.append((x, z, module.inverse_kl(x, z)))
    if args.format == "json":
        _print_json({
            "system": label,
            "subset": module.subset_labels(),
            "rows": [
                {"x": system.word_str(x), "z": system.word_str(z), "g": p.to_pairs()}
                for x, z, p in rows
            ],
        })
    else:
        print("# x\tz\tg^I")
        for x, z, p in rows:
            print(f"{system.word_str(x)}\t{system.word_str(z)}\t{_poly_str(p)}")
    return 0


def cmd_rouquier_shape(args) -> int:
    system, label = _load_system(args)
    algebra = HeckeAlgebra(system)
    module = algebra.parabolic(_parse_subset(system, args.subset))
    x = _parse_rep(module, args.x)
    shape = rouquier.f_shape(module, x)
    if args.negative:
        shape = rouquier.e_shape(module, x)
    if args.format == "json":
        _print_json({
            "system": label,
            "subset": module.subset_labels(),
            "x": system.word_str(x),
            "degrees": shape.to_json_obj(),
        })
    else:
        print("# degree\tterms (word:shift:mult)")
        for line in shape.text_lines():
            print(line)
    return 0


def cmd_hom_rank(args) -> int:
    system, label = _load_system(args)
    algebra = HeckeAlgebra(system)
    module = algebra.parabolic(_parse_subset(system, args.subset))
    x = _parse_rep(module, args.x)
    y = _parse_rep(module, args.y)
    rank = soergel.graded_hom_rank(
        soergel.delta_char(module, x), soergel.delta_char(module, y)
    )
    if args.format == "json":
        _print_json({
            "system": label,
            "subset": module.subset_labels(),
            "x": system.word_str(x),
            "y": system.word_str(y),
            "rank": rank.to_pairs(),
        })
    else:
        print(_poly_str(rank))
    return 0


def cmd_example_a3(args) -> int:
    system = coxeter.build(CoxeterMatrix.from_name("A3"), cap=args.cap)
    algebra = HeckeAlgebra(system)
    module = algebra.parabolic([0, 1])
    char = soergel.bott_samelson_char(module, (0, 1, 2))
    perverse = soergel.is_perverse(char)
    if args.format == "json":
        obj = char.to_json_obj()
        obj.update({"system": "A3", "word": ["s1", "s2", "s3"], "perverse": perverse})
        _print_json(obj)
    else:
        print("# y\tcoefficient")
        for y, c in char.items():
            print(f"{system.word_str(y)}\t{_poly_str(c)}")
        print(f"verdict\t{'perverse' if perverse else 'not perverse'}")
    return 0


def cmd_verify(args) -> int:
    system, label = _load_system(args)
    algebra = HeckeAlgebra(system)
    names = None
    if args.suite:
        names = [n.strip() for n in args.suite.split(",") if n.strip()]
    try:
        results = verify.run_suites(algebra, names, seed=args.seed,
                                    bs_words=args.words)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.format == "json":
        _print_json({
            "system": label,
            "suites": [
                {
                    "name": r.name,
                    "checks": r.checks,
                    "failures": r.failures,
                    "first_failure": r.first_failure,
                    "passed": r.passed,
                }
                for r in results
            ],
        })
    else:
        print("# suite\tstatus\tchecks\tfailures\tfirst_counterexample")
        for r in results:
            status = "pass" if r.passed else "FAIL"
            print(f"{r.name}\t{status}\t{r.checks}\t{r.failures}\t"
                  f"{r.first_failure or '-'}")
    return 0 if all(r.passed for r in results) else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckekit",
        description="Exact Kazhdan-Lusztig, parabolic and Rouquier-shape tables "
                    "for finite Coxeter systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kl-table", help="emit h_{y,x} for all y <= x")
    _add_common(p, subset=False)
    p.set_defaults(func=cmd_kl_table)

    p = sub.add_parser("parabolic-tables", help="emit h^I_{y,x} over W^I")
    _add_common(p)
    p.set_defaults(func=cmd_parabolic_tables)

    p = sub.add_parser("inverse-tables", help="emit g^I_{x,z} over W^I")
    _add_common(p)
    p.set_defaults(func=cmd_inverse_tables)

    p = sub.add_parser("rouquier-shape",
                       help="graded shape of the minimal complex of a braid lift")
    _add_common(p)
    p.add_argument("x", help='element as a dotted word, e.g. "s1.s2" ("e" = identity)')
    p.add_argument("--negative", action="store_true",
                   help="emit the negative-lift shape instead")
    p.set_defaults(func=cmd_rouquier_shape)

    p = sub.add_parser("hom-rank",
                       help="graded rank of Hom between two indecomposables")
    _add_common(p)
    p.add_argument("x", help="element as a dotted word")
    p.add_argument("y", help="element as a dotted word")
    p.set_defaults(func=cmd_hom_rank)

    p = sub.add_parser("example-a3",
                       help="the rank-3 Bott-Samelson decomposition with a "
                            "non-perverse summand pattern")
    p.add_argument("--cap", type=int, default=coxeter.DEFAULT_CAP)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_example_a3)

    p = sub.add_parser("verify", help="run invariant suites; exit 1 on failure")
    _add_common(p, subset=False)
    p.add_argument("--suite", default="",
                   help=f"comma-separated suite names (default: all); "
                        f"available: {', '.join(verify.SUITES)}")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--words", type=int, default=verify.DEFAULT_BS_WORDS,
                   help="random words per subset in bs-positivity")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, UnsupportedBond, GroupTooLarge, NotInIdeal, NotDivisible,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
