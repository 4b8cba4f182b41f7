"""Command-line frontend.

Exit codes: 0 ok, 1 check failure, 2 usage/parse error, 3 partial output
(cells skipped under --cell-timeout).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .complexes import BUILTIN, ComplexError, SimplicialComplex, ky_graph, pachner_subdivide
from .graph import Attachment, Graph, GlueSpec, GraphError, SubgraphRef, family, glue_with_maps
from .homology import Coefficients, compute_cells, homology_table
from .series import magnitude_alternating, magnitude_series

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARTIAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _read_json(path: str | None, what: str):
    if path in (None, "-"):
        text, where = sys.stdin.read(), "<stdin>"
    else:
        p = Path(path)
        if not p.exists():
            raise UsageError(f"{what} file not found: {path}")
        text, where = p.read_text(), path
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{where}:{exc.lineno}:{exc.colno}: malformed JSON: {exc.msg}") from None


def load_graph(path: str | None) -> Graph:
    data = _read_json(path, "graph")
    if isinstance(data, dict) and "pieces" in data:
        return load_glue(data)[0]
    try:
        return Graph.from_json(data)
    except (GraphError, AttributeError) as exc:
        raise UsageError(str(exc)) from None


def load_glue(data: dict) -> tuple[Graph, GlueSpec, list[list[int]]]:
    """Glue JSON: {"pieces": [graph...], "attachments": [{"piece": v|[a,b], "target": v|[u,v]}...]}."""
    try:
        pieces = tuple(Graph.from_json(p) for p in data["pieces"])
        atts = []
        for a in data.get("attachments", []):
            piece, target = a["piece"], a["target"]
            atts.append(Attachment(tuple(piece) if isinstance(piece, list) else int(piece),
                                   tuple(target) if isinstance(target, list) else int(target)))
        spec = GlueSpec(pieces, tuple(atts))
        g, maps = glue_with_maps(spec)
    except (KeyError, TypeError, GraphError) as exc:
        raise UsageError(f"malformed glue spec: {exc}") from None
    return g, spec, maps


def load_complex(args) -> SimplicialComplex:
    if args.complex in BUILTIN and not Path(args.complex).exists():
        args.builtin = args.complex
    if getattr(args, "builtin", None):
        try:
            return BUILTIN[args.builtin]()
        except KeyError:
            raise UsageError(f"unknown built-in complex {args.builtin!r}; choose from {sorted(BUILTIN)}") from None
    try:
        return SimplicialComplex.from_json(_read_json(args.complex, "complex"))
    except ComplexError as exc:
        raise UsageError(str(exc)) from None


def parse_cells(text: str) -> list[tuple[int, int]]:
    cells = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        try:
            k, l = (int(x) for x in part.split(","))
        except ValueError:
            raise UsageError(f"bad cell {part!r}; expected k,l") from None
        if k < 0 or l < 0:
            raise UsageError("cells need nonnegative bigradings")
        cells.append((k, l))
    return cells


def coeffs_from(args) -> Coefficients:
    try:
        return Coefficients(args.mode, args.p if args.mode == "Fp" else None)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def emit(args, text: str):
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


# -- subcommands ------------------------------------------------------------------

def cmd_family(args) -> int:
    params = []
    for x in args.params:
        params.append(json.loads(x) if x.lstrip("-").isdigit() or x.startswith("[") else x)
    if args.kind in ("tree", "polyomino", "square_polyomino") and len(params) == 1 and isinstance(params[0], str):
        params = [json.loads(params[0])]
    try:
        g = family(args.kind, *params)
    except (GraphError, TypeError, json.JSONDecodeError) as exc:
        raise UsageError(f"family {args.kind}: {exc}") from None
    emit(args, _dump(g.to_json()))
    return EXIT_OK


def cmd_magnitude(args) -> int:
    g = load_graph(args.graph)
    L = args.lmax
    a = magnitude_series(g, L)
    b = magnitude_alternating(g, L)
    agree = a == b
    if args.format == "json":
        emit(args, _dump({"L": L, "inverse": list(a.coeffs), "alternating": list(b.coeffs), "agree": agree}))
    else:
        emit(args, f"inverse:     {a}\nalternating: {b}\nagree: {agree}\n")
    return EXIT_OK if agree else EXIT_FAIL


def cmd_homology(args) -> int:
    g = load_graph(args.graph)
    coeffs = coeffs_from(args)
    if args.cells:
        table = compute_cells(g, parse_cells(args.cells), coeffs, args.jobs, args.cell_timeout)
    else:
        kmax = args.lmax if args.kmax is None else args.kmax
        table = homology_table(g, kmax, args.lmax, coeffs, args.jobs, args.cell_timeout)
    emit(args, _dump(table.to_json()) if args.format == "json" else table.format() + "\n")
    return EXIT_PARTIAL if table.skipped else EXIT_OK


def cmd_ky(args) -> int:
    K = load_complex(args)
    try:
        g = ky_graph(K)
    except ComplexError as exc:
        raise UsageError(str(exc)) from None
    emit(args, _dump(g.to_json()))
    return EXIT_OK


def cmd_pachner(args) -> int:
    K = load_complex(args)
    if not 0 <= args.facet < len(K.facets):
        raise UsageError(f"facet index {args.facet} out of range 0..{len(K.facets) - 1}")
    try:
        K2 = pachner_subdivide(K, K.facets[args.facet])
    except ComplexError as exc:
        raise UsageError(str(exc)) from None
    emit(args, _dump(K2.to_json()))
    return EXIT_OK


def _verdict_exit(reports) -> int:
    if any(r.verdict == "fail" and not r.skipped for r in reports):
        return EXIT_FAIL
    if any(r.mismatches for r in reports):
        return EXIT_FAIL
    if any(r.skipped for r in reports):
        return EXIT_PARTIAL
    if any(r.verdict == "hypotheses-not-met" for r in reports):
        return EXIT_FAIL
    return EXIT_OK


def _emit_reports(args, reports):
    if args.format == "json":
        emit(args, _dump([r.to_json() for r in reports]))
    else:
        emit(args, "\n".join(r.format(args.verbose) for r in reports) + "\n")


def _vertex_set(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad vertex list {text!r}") from None


def cmd_verify(args) -> int:
    from . import verify as V

    kw = {"jobs": args.jobs, "cell_timeout": args.cell_timeout}
    check = args.check
    lmax = args.lmax
    if check == "euler":
        rep = V.check_euler(load_graph(args.graph), lmax, **kw)
    elif check == "kunneth":
        rep = V.check_kunneth(load_graph(args.graph), load_graph(args.graph2), lmax, **kw)
    elif check == "mayer-vietoris":
        if args.glue:
            g, _, maps = load_glue(_read_json(args.glue, "glue"))
            h1 = SubgraphRef(g, maps[-1])
            h2 = SubgraphRef(g, {v for m in maps[:-1] for v in m})
        else:
            g = load_graph(args.graph)
            if not (args.h1 and args.h2):
                raise UsageError("mayer-vietoris needs --glue or --h1/--h2")
            h1, h2 = SubgraphRef(g, _vertex_set(args.h1)), SubgraphRef(g, _vertex_set(args.h2))
        rep = V.check_mayer_vietoris(g, h1, h2, lmax, **kw)
    elif check == "closed-form":
        if args.form not in V.FORMS:
            raise UsageError(f"unknown form {args.form!r}; choose from {sorted(V.FORMS)}")
        spec = None
        if args.glue:
            g, spec, _ = load_glue(_read_json(args.glue, "glue"))
        else:
            g = load_graph(args.graph)
        rep = V.check_closed_form(g, args.form, lmax, kmax=args.kmax, glue=spec, squares=args.squares, **kw)
    elif check == "gu":
        rep = V.check_gu_recursion(args.m, lmax, args.kmax, **kw)
    elif check == "torsion-embedding":
        rep = V.check_torsion_embedding(load_complex(args), args.kmax or 4, "detect" if args.detect else "Z",
                                        args.p or 2, **kw)
    elif check == "wheels":
        rep = V.check_wheel_tables(args.kmax or 6, jobs=args.jobs)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown check {check}")
    _emit_reports(args, [rep])
    return _verdict_exit([rep])


def cmd_corpus(args) -> int:
    from .corpus import run_corpus

    reports = run_corpus(args.tier, args.jobs, args.cell_timeout)
    _emit_reports(args, reports)
    return _verdict_exit(reports)


CHECKS = ("euler", "kunneth", "mayer-vietoris", "closed-form", "gu", "torsion-embedding", "wheels")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", help="graph JSON path (default: stdin)")
    common.add_argument("--complex", help="complex JSON path")
    common.add_argument("--builtin", help="built-in complex name")
    common.add_argument("--kmax", type=int)
    common.add_argument("--lmax", type=int, default=4)
    common.add_argument("--cells", help="explicit cells k,l[;k,l...]")
    common.add_argument("--mode", choices=("Z", "Q", "Fp"), default="Z")
    common.add_argument("--p", type=int)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--cell-timeout", type=float, dest="cell_timeout")
    common.add_argument("--out")
    common.add_argument("--format", choices=("json", "text"), default="json")

    ap = argparse.ArgumentParser(prog="maghom", description="Magnitude homology of graphs.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("family", parents=[common], help="emit a named graph family as JSON")
    p.add_argument("kind")
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("magnitude", parents=[common], help="magnitude series by two methods")
    p.set_defaults(func=cmd_magnitude)

    p = sub.add_parser("homology", parents=[common], help="bigraded homology table")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("ky", parents=[common], help="Hasse-diagram graph of a complex")
    p.set_defaults(func=cmd_ky)

    p = sub.add_parser("pachner", parents=[common], help="subdivide one facet of a complex")
    p.add_argument("--facet", type=int, default=0, help="facet index in sorted facet order")
    p.set_defaults(func=cmd_pachner)

    p = sub.add_parser("verify", parents=[common], help="run one named check")
    p.add_argument("check", choices=CHECKS)
    p.add_argument("--graph2")
    p.add_argument("--glue", help="glue-spec JSON path")
    p.add_argument("--h1")
    p.add_argument("--h2")
    p.add_argument("--form")
    p.add_argument("--squares", type=int)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--detect", action="store_true", help="torsion-detect mode (Q vs F_p dimensions)")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", parents=[common], help="run the regression corpus")
    p.add_argument("--tier", choices=("theorem", "paper-tables", "all"), default="all")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_corpus)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    if args.lmax is not None and args.lmax < 0 or args.kmax is not None and args.kmax < 0:
        print("error: bounds must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
