"""Command-line surface.

Exit codes: 0 success, 1 negative verdict (no isomorphism / failed check),
2 enumeration budget exceeded, 3 theorem hypothesis violated, 4 bad input,
5 internal contradiction.  Output is deterministic for fixed inputs, flags
and seed.
"""

from __future__ import annotations

import argparse
import os
import sys

from .complexes import Multigraph
from .errors import (EnumerationBudgetError, HypothesisViolationError,
                     InvalidIsomorphismError, MalformedInputError,
                     NotAFaceError, ParseError, TheoremContradictionError)
from .forests import forest_identity_holds
from .formats import serialize_morse_complex, sniff_and_parse
from .invariants import invariants
from .isomorphism import find_isomorphism, find_multigraph_isomorphism
from .morse import Budget, morse_complex
from .reconstruction import (find_morse_isomorphism, reconstruct_complex_iso,
                             reconstruct_multigraph_iso)
from . import verify as verify_mod

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_BUDGET = 2
EXIT_HYPOTHESIS = 3
EXIT_INPUT = 4
EXIT_CONTRADICTION = 5


def _common_flags(p: argparse.ArgumentParser):
    p.add_argument("--budget-facets", type=int, default=Budget.max_facets,
                   help="facet budget for Morse enumerations (default %(default)s)")
    p.add_argument("--budget-seconds", type=float, default=None,
                   help="time budget per enumeration in seconds "
                        "(default 60, or MORSE_BUDGET_SECONDS)")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for randomized corpus generation")
    p.add_argument("--max-vertices", type=int, default=None,
                   help="refuse inputs (or cap corpora) above this vertex count")


def _budget(args) -> Budget:
    seconds = args.budget_seconds
    if seconds is None:
        seconds = float(os.environ.get("MORSE_BUDGET_SECONDS", Budget.max_seconds))
    return Budget(max_facets=args.budget_facets, max_seconds=seconds)


def _load(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return sniff_and_parse(fh.read())


def _guard_size(obj, args):
    if args.max_vertices is None:
        return
    n = obj.n_vertices
    if n > args.max_vertices:
        raise EnumerationBudgetError(
            f"input has {n} vertices, over the --max-vertices guard of {args.max_vertices}")


def cmd_build(args) -> int:
    obj = _load(args.file)
    _guard_size(obj, args)
    M = morse_complex(obj, _budget(args))
    sys.stdout.write(serialize_morse_complex(M))
    return EXIT_OK


def cmd_stats(args) -> int:
    K = _load(args.file)
    if isinstance(K, Multigraph):
        raise MalformedInputError("stats reports on complex files; got a multigraph")
    _guard_size(K, args)
    rep = invariants(K)
    print(f"f_vector={','.join(map(str, rep.f_vector))}")
    print(f"euler={rep.euler}")
    print(f"components={rep.components}")
    print(f"betti_mod2={','.join(map(str, rep.betti_mod2))}")
    print(f"collapsible={'true' if rep.collapsible else 'false'}")
    return EXIT_OK


def cmd_iso(args) -> int:
    A = _load(args.a)
    B = _load(args.b)
    _guard_size(A, args)
    _guard_size(B, args)
    if isinstance(A, Multigraph) != isinstance(B, Multigraph):
        raise MalformedInputError("cannot compare a complex with a multigraph")
    if isinstance(A, Multigraph):
        got = find_multigraph_isomorphism(A, B)
        if got is None:
            print("not isomorphic", file=sys.stderr)
            return EXIT_NEGATIVE
        bij, edge_map = got
        for v, w in bij.items():
            print(f"{v} -> {w}")
        for e, f in sorted(edge_map.items()):
            print(f"# edge {e} -> {f}")
        return EXIT_OK
    bij = find_isomorphism(A, B)
    if bij is None:
        print("not isomorphic", file=sys.stderr)
        return EXIT_NEGATIVE
    for v, w in bij.items():
        print(f"{v} -> {w}")
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    A = _load(args.a)
    B = _load(args.b)
    _guard_size(A, args)
    _guard_size(B, args)
    if isinstance(A, Multigraph) != isinstance(B, Multigraph):
        raise MalformedInputError("inputs must both be complexes or both multigraphs")
    budget = _budget(args)
    M_A = morse_complex(A, budget)
    M_B = morse_complex(B, budget)
    F = find_morse_isomorphism(M_A, M_B)
    if F is None:
        print("Morse complexes are not isomorphic", file=sys.stderr)
        return EXIT_NEGATIVE
    if isinstance(A, Multigraph):
        bij, edge_map = reconstruct_multigraph_iso(F, budget)
        for v, w in bij.items():
            print(f"{v} -> {w}")
        for e, f in sorted(edge_map.items()):
            print(f"# edge {e} -> {f}")
    else:
        bij = reconstruct_complex_iso(F, budget)
        for v, w in bij.items():
            print(f"{v} -> {w}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.what != "corpus":
        raise MalformedInputError(f"unknown verification target {args.what!r}")
    cap = args.max_vertices
    kwargs = dict(seed=args.seed, budget=_budget(args))
    if cap is not None:
        kwargs.update(
            max_complex_vertices=min(5, cap),
            max_graph_vertices=min(6, cap),
            sample_7=args.sample7 if cap >= 7 else 0,
            max_multigraph_vertices=min(4, cap),
        )
    else:
        kwargs.update(sample_7=args.sample7)
    kwargs.update(functoriality_samples=args.samples)
    results = verify_mod.run_all(**kwargs)
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return EXIT_OK if not failed else EXIT_NEGATIVE


def cmd_kozlov(args) -> int:
    obj = _load(args.file)
    _guard_size(obj, args)
    if isinstance(obj, Multigraph):
        if not obj.is_simple():
            raise HypothesisViolationError(
                "the forest-complex identity is for simple graphs; input has parallel edges")
        G = obj.as_complex()
    else:
        G = obj
        if G.dim > 1:
            raise HypothesisViolationError(
                "the forest-complex identity is for graphs; input has higher simplices")
    M = morse_complex(G, _budget(args))
    if forest_identity_holds(G, M):
        print(f"identity holds: {M.n_pairs} directed edges, {len(M.facets())} facets")
        return EXIT_OK
    print("identity FAILS", file=sys.stderr)
    return EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="morsecx",
        description="Discrete Morse complexes of complexes and multigraphs, "
                    "and reconstruction of the underlying object from them.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="emit the Morse complex as a complex file plus pair table")
    p.add_argument("file")
    _common_flags(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("stats", help="invariant report of a complex file, one key=value per line")
    p.add_argument("file")
    _common_flags(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("iso", help="find an isomorphism between two inputs")
    p.add_argument("a")
    p.add_argument("b")
    _common_flags(p)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("reconstruct",
                       help="find a Morse isomorphism and reconstruct the vertex map")
    p.add_argument("a")
    p.add_argument("b")
    _common_flags(p)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("verify", help="run the acceptance suites")
    p.add_argument("what", choices=["corpus"])
    p.add_argument("--samples", type=int, default=1000,
                   help="functoriality roundtrip samples (default %(default)s)")
    p.add_argument("--sample7", type=int, default=200,
                   help="random 7-vertex graphs (default %(default)s)")
    _common_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kozlov",
                       help="check the Morse complex of a simple graph against "
                            "the forest complex of its double")
    p.add_argument("file")
    _common_flags(p)
    p.set_defaults(func=cmd_kozlov)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EnumerationBudgetError as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except HypothesisViolationError as e:
        print(f"hypothesis violated: {e}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (ParseError, MalformedInputError, NotAFaceError, OSError) as e:
        print(f"bad input: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (TheoremContradictionError, InvalidIsomorphismError) as e:
        print(f"internal contradiction: {e}", file=sys.stderr)
        return EXIT_CONTRADICTION


if __name__ == "__main__":
    sys.exit(main())
