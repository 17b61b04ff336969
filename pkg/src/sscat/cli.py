"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse error,
3 precondition failure, 4 budget exhausted or undecided verdict.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .builtins import NAMES, builtin
from .corpus import DEFAULT_SEED
from .covers import (
    fibre,
    is_cover,
    is_left_cover,
    is_right_cover,
    reconstruct,
    universal_left_cover,
)
from .errors import BudgetExceeded, CapError, NonFunctorialError, NotACoverError, PresentationError
from .fpcat import (
    CatPresentation,
    Decision,
    complete_rewriting,
    dpi1_surrogate,
    fundamental_category,
    localize,
    split_monos,
    vertex_names,
)
from .preorder import (
    FiniteTopology,
    Preorder,
    Relation,
    alexandroff_opens,
    closure,
    condense,
    cosieve,
    exit_path_of_poset,
    sieve,
    specialisation,
)
from .sset import SimplicialMap, SimplicialSet, pi0

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_PRECONDITION, EXIT_BUDGET = 0, 1, 2, 3, 4


class ParseError(Exception):
    pass


def _load(args):
    """The object named by ``--builtin`` or read from ``--input``."""
    if args.builtin:
        try:
            return builtin(args.builtin, args.cap)
        except (KeyError, ValueError) as exc:
            raise ParseError(str(exc)) from None
    if args.input:
        try:
            with open(args.input, encoding="utf-8") as fh:
                data = json.load(fh)
            obj = io.READERS[io.detect_format(data)](data)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"{args.input}: {exc}") from None
        if isinstance(obj, SimplicialSet) and args.cap is not None:
            obj = obj.with_cap(args.cap)
        return obj
    raise ParseError("give --builtin NAME or --input FILE")


def _expect(obj, kind, what):
    if not isinstance(obj, kind):
        raise ParseError(f"{what} expects a {kind.__name__}, got {type(obj).__name__}")
    return obj


def _emit(args, payload):
    text = payload if isinstance(payload, str) else io.dumps(payload)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _presentation(obj) -> CatPresentation:
    if isinstance(obj, SimplicialSet):
        return fundamental_category(obj)
    return _expect(obj, CatPresentation, "this verb")


# verbs


def cmd_build(args):
    obj = _load(args)
    for kind, name in ((SimplicialSet, "sset"), (SimplicialMap, "map"), (CatPresentation, "presentation"),
                       (Preorder, "preorder"), (Relation, "preorder"), (FiniteTopology, "topology")):
        if isinstance(obj, kind):
            _emit(args, io.WRITERS[name](obj))
            return EXIT_OK
    raise ParseError(f"cannot serialize {type(obj).__name__}")


def cmd_tau1(args):
    X = _expect(_load(args), SimplicialSet, "tau1")
    p = fundamental_category(X)
    rs = complete_rewriting(p, args.rule_budget)
    _emit(args, {"presentation": io.presentation_to_json(p), "rewriting": io.rewrite_to_json(rs)})
    return EXIT_OK


def cmd_pi0(args):
    X = _expect(_load(args), SimplicialSet, "pi0")
    names = vertex_names(X)
    comps = [[names[v] for v in comp] for comp in pi0(X)]
    _emit(args, {"components": comps, "count": len(comps)})
    return EXIT_OK


def cmd_check_cover(args):
    p = _expect(_load(args), SimplicialMap, "check-cover")
    left, right, both = is_left_cover(p), is_right_cover(p), is_cover(p)
    _emit(args, {"left": io.cover_report_to_json(left), "right": io.cover_report_to_json(right),
                 "two_sided": io.cover_report_to_json(both)})
    return EXIT_OK if both.agree else EXIT_VERIFY


def cmd_universal_cover(args):
    X = _expect(_load(args), SimplicialSet, "universal-cover")
    names = vertex_names(X)
    if args.vertex is None:
        raise ParseError("universal-cover needs --vertex")
    if args.vertex not in names:
        raise PresentationError(f"unknown vertex {args.vertex!r}; vertices are {names}")
    U = universal_left_cover(X, names.index(args.vertex), args.hom_bound, args.rule_budget)
    _emit(args, {"map": io.map_to_json(U.map), "basepoint": U.basepoint,
                 "truncated": U.truncated, "hom_bound": U.bound,
                 "left_cover": is_left_cover(U.map).ok})
    return EXIT_OK


def cmd_reconstruct(args):
    X = _expect(_load(args), SimplicialSet, "reconstruct")
    if not args.rep:
        raise ParseError("reconstruct needs --rep FILE")
    try:
        with open(args.rep, encoding="utf-8") as fh:
            F = io.representation_from_json(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        if isinstance(exc, NonFunctorialError):
            raise
        raise ParseError(f"{args.rep}: {exc}") from None
    p = reconstruct(X, F)
    _emit(args, io.map_to_json(p))
    return EXIT_OK


def cmd_fibre(args):
    p = _expect(_load(args), SimplicialMap, "fibre")
    _emit(args, io.representation_to_json(fibre(p)))
    return EXIT_OK


def cmd_roundtrip(args):
    if not args.input:
        raise ParseError("roundtrip needs --input FILE")
    try:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
        out = io.roundtrip(text)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"{args.input}: {exc}") from None
    _emit(args, out)
    return EXIT_OK if out == text else EXIT_VERIFY


def cmd_localize(args):
    p = _presentation(_load(args))
    gens = [g for g in (args.generators or "").split(",") if g]
    loc = localize(p, gens)
    rs = complete_rewriting(loc, args.rule_budget)
    _emit(args, {"presentation": io.presentation_to_json(loc), "rewriting": io.rewrite_to_json(rs)})
    return EXIT_OK


def cmd_split_monos(args):
    p = _presentation(_load(args))
    rs = complete_rewriting(p, args.rule_budget)
    pairs = split_monos(p, rs, args.word_bound, include_identities=args.include_identities)
    _emit(args, {"pairs": [[io.word_to_json(m), io.word_to_json(r)] for m, r in pairs],
                 "rewriting_status": rs.status, "word_bound": args.word_bound})
    return EXIT_OK if rs.complete else EXIT_BUDGET


def cmd_dpi1(args):
    X = _expect(_load(args), SimplicialSet, "dpi1")
    loc, rep = dpi1_surrogate(X, args.word_bound, args.hom_bound, args.rule_budget)
    _emit(args, {
        "note": "localization of the fundamental category at split monomorphisms (conjectural surrogate)",
        "presentation": io.presentation_to_json(loc),
        "inverted": rep.inverted,
        "split_monos": [[io.word_to_json(m), io.word_to_json(r)] for m, r in rep.split_monos],
        "tau1_rewriting": rep.tau1_status,
        "rewriting": rep.status,
        "morphism_count": rep.morphism_count,
        "equivalent to terminal": rep.terminal.value,
    })
    return EXIT_BUDGET if rep.terminal == Decision.UNKNOWN else EXIT_OK


def _as_preorder(obj):
    if isinstance(obj, FiniteTopology):
        return obj
    rel = _expect(obj, Relation, "preorder-op")
    return rel


def cmd_preorder_op(args):
    obj = _as_preorder(_load(args))
    op = args.op
    if op == "closure":
        _emit(args, io.preorder_to_json(closure(obj)))
    elif op == "opens":
        _emit(args, io.topology_to_json(alexandroff_opens(_strict(obj))))
    elif op == "specialisation":
        _emit(args, io.preorder_to_json(specialisation(_expect(obj, FiniteTopology, "specialisation"))))
    elif op == "condense":
        Q, quotient = condense(_strict(obj))
        name = {c: "+".join(sorted(map(str, c))) for c in Q.domain}
        _emit(args, {"poset": io.preorder_to_json(Preorder([name[c] for c in Q.domain],
                                                             [(name[a], name[b]) for a, b in Q.pairs])),
                     "quotient": {str(x): name[c] for x, c in quotient.items()}})
    elif op in ("sieve", "cosieve"):
        if args.element is None:
            raise ParseError(f"{op} needs --element")
        P = _strict(obj)
        if args.element not in P.domain:
            raise PresentationError(f"unknown element {args.element!r}")
        fn = sieve if op == "sieve" else cosieve
        pos = {x: k for k, x in enumerate(P.domain)}
        _emit(args, {op: sorted(map(str, fn(P, args.element)), key=lambda x: pos.get(x, 0))})
    elif op == "exit-path":
        _emit(args, io.presentation_to_json(exit_path_of_poset(_strict(obj), args.cap or 2)))
    elif op == "is-poset":
        _emit(args, {"poset": _strict(obj).is_poset()})
    else:
        raise ParseError(f"unknown preorder operation {op!r}")
    return EXIT_OK


def _strict(obj) -> Preorder:
    if isinstance(obj, Preorder):
        return obj
    rel = _expect(obj, Relation, "preorder-op")
    try:
        return Preorder(rel.domain, rel.pairs)
    except ValueError as exc:
        raise PresentationError(str(exc)) from None


def cmd_verify_examples(args):
    from .verification import run_all

    only = {int(x) for x in args.criteria.split(",")} if args.criteria else None
    checks = run_all(args.seed, only)
    rows = []
    for c in checks:
        print(c.line())
        rows.append({"criterion": c.criterion, "name": c.name, "ok": c.ok, "detail": c.detail})
    passed = sum(c.ok for c in checks)
    print(f"{passed}/{len(checks)} checks passed (seed {args.seed})")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(io.dumps({"seed": args.seed, "checks": rows}))
    return EXIT_OK if passed == len(checks) else EXIT_VERIFY


VERBS = {
    "build": cmd_build,
    "tau1": cmd_tau1,
    "pi0": cmd_pi0,
    "check-cover": cmd_check_cover,
    "universal-cover": cmd_universal_cover,
    "reconstruct": cmd_reconstruct,
    "fibre": cmd_fibre,
    "roundtrip": cmd_roundtrip,
    "localize": cmd_localize,
    "split-monos": cmd_split_monos,
    "dpi1": cmd_dpi1,
    "preorder-op": cmd_preorder_op,
    "verify-examples": cmd_verify_examples,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sscat",
        description="Finite simplicial sets, fundamental categories and covers.",
        epilog="builtins: " + ", ".join(NAMES) + ". Words are read in diagrammatic order (first applied first).",
    )
    parser.add_argument("verb", choices=sorted(VERBS))
    parser.add_argument("--builtin", help="named example object")
    parser.add_argument("--input", help="input file in one of the JSON formats")
    parser.add_argument("--rep", help="representation file (reconstruct)")
    parser.add_argument("--out", help="write the report here instead of stdout")
    parser.add_argument("--cap", type=int, default=None, help="dimension cap for builtins and inputs")
    parser.add_argument("--hom-bound", type=int, default=8, help="word length bound for hom-sets (default 8)")
    parser.add_argument("--word-bound", type=int, default=6, help="word length bound for split monos (default 6)")
    parser.add_argument("--rule-budget", type=int, default=5000, help="maximum rewrite rules (default 5000)")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help=f"seed for all random corpora (default {DEFAULT_SEED})")
    parser.add_argument("--vertex", help="vertex name (universal-cover)")
    parser.add_argument("--generators", help="comma separated generator names (localize)")
    parser.add_argument("--include-identities", action="store_true", help="keep identity pairs (split-monos)")
    parser.add_argument("--op", default="closure",
                        help="preorder-op: closure, opens, specialisation, condense, sieve, cosieve, exit-path, is-poset")
    parser.add_argument("--element", help="element for sieve/cosieve")
    parser.add_argument("--criteria", help="comma separated criterion numbers (verify-examples)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return VERBS[args.verb](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (CapError, PresentationError, NotACoverError, NonFunctorialError, ValueError) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
