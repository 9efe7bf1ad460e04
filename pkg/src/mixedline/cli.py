"""Command-line interface: ``mixedline <subcommand> ...``.

Every command prints JSON (or DOT for ``export-dot``) to stdout, or to the
file given with ``-o``.  Failures print a JSON object ``{"error": {...}}`` to
stderr and exit with:

    0   success
    1   input could not be read or parsed
    2   graph failed validation
    3   size bound exceeded
    4   precondition not met (not a line graph, not a monograph, ...)
    64  bad command-line usage
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from .core import (
    InvalidGraphError,
    MixedGraph,
    PreconditionError,
    SizeBoundError,
    UnitRoot,
    Variant,
    ensure_valid,
    underlying_graph,
)
from .generate import KINDS, gen_random
from .linegraph import gamma_line_graph
from .matrices import (
    char_poly,
    check_factorizations,
    check_line_charpoly,
    hermitian_adjacency,
    line_graph_adjacency,
)
from .monograph import (
    ChordViolation,
    check_clique_cycle_condition,
    compute_store,
    general_root_recovery,
    tree_root_recovery,
)
from .oracle import oracle_roots
from .roots import mixed_roots, roots_report
from .serialize import GraphFormatError, dumps_pretty, load, to_dict, to_dot

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_VALIDATION = 2
EXIT_SIZE = 3
EXIT_PRECONDITION = 4
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse's own exit status 2 would clash with validation failures
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


class CommandError(Exception):
    def __init__(self, code: int, kind: str, message: str, **extra: Any):
        super().__init__(message)
        self.code = code
        self.kind = kind
        self.extra = extra


def read_graph(path: str | None) -> MixedGraph:
    if path is None:
        raise CommandError(EXIT_USAGE, "usage", "an input graph is required (-i)")
    try:
        g = load(path) if path != "-" else _loads_stdin()
    except OSError as exc:
        raise CommandError(EXIT_PARSE, "parse", f"cannot read {path}: {exc.strerror or exc}") from exc
    except GraphFormatError as exc:
        raise CommandError(EXIT_PARSE, "parse", f"{path}: {exc}") from exc
    try:
        return ensure_valid(g)
    except InvalidGraphError as exc:
        raise CommandError(
            EXIT_VALIDATION,
            "validation",
            f"{path}: invalid graph",
            violations=[{"kind": v.kind, "detail": v.detail} for v in exc.violations],
        ) from exc


def _loads_stdin() -> MixedGraph:
    from .serialize import loads

    return loads(sys.stdin.read())


def _witness(cycle, weight) -> dict | None:
    if cycle is None:
        return None
    return {"cycle": list(cycle.vertices), "weight": weight.symbol}


# -- subcommands ----------------------------------------------------------------


def cmd_line_graph(args) -> str:
    g = read_graph(args.input)
    return dumps_pretty(gamma_line_graph(g, args.variant))


def cmd_roots(args) -> dict:
    y = read_graph(args.input)
    search = mixed_roots(y, args.max_vertices)
    return roots_report(search)


def cmd_monograph(args) -> dict:
    g = read_graph(args.input)
    res = compute_store(g, variant=args.variant)
    out: dict[str, Any] = {
        "monograph": res.trivial,
        "store": sorted(u.symbol for u in res.store),
        "witness": _witness(res.witness_cycle, res.witness_value),
    }
    if Variant.parse(args.variant) is Variant.GAMMA:
        try:
            rep = check_clique_cycle_condition(g)
        except PreconditionError:
            out["clique_condition"] = None
        else:
            out["clique_condition"] = {
                "ok": rep.ok,
                "violating_clique": sorted(rep.violating_clique) if rep.violating_clique else None,
                "witness": _witness(rep.witness_cycle, rep.weight),
            }
    return out


def cmd_check(args) -> dict:
    g = read_graph(args.input)
    out: dict[str, Any] = {}
    if args.identity in ("all", "bstarb", "bbstar"):
        rep = check_factorizations(g, args.variant)
        for name, ok, wit in (
            ("bstarb", rep.bstarb_ok, rep.bstarb_witness),
            ("bbstar", rep.bbstar_ok, rep.bbstar_witness),
        ):
            if args.identity in ("all", name):
                out[f"{name}_ok"] = ok
                if wit is not None:
                    r, c, lhs, rhs = wit
                    out[f"{name}_witness"] = {"row": r, "col": c, "lhs": str(lhs), "rhs": str(rhs)}
    if args.identity == "linecharpoly":
        if args.k is None:
            raise CommandError(EXIT_USAGE, "usage", "--identity linecharpoly needs --k")
        rep = check_line_charpoly(g, args.k)
        out["linecharpoly_ok"] = rep.ok
        out["applicable"] = rep.applicable
        if rep.reason:
            out["reason"] = rep.reason
        if rep.lhs is not None:
            out["lhs"] = list(rep.lhs.coefficients)
            out["rhs"] = list(rep.rhs.coefficients)
    return out


def cmd_charpoly(args) -> dict:
    g = read_graph(args.input)
    if args.matrix == "line":
        h = line_graph_adjacency(gamma_line_graph(g, args.variant))
    else:
        h = hermitian_adjacency(g, args.variant)
    p = char_poly(h)
    return {"coefficients": list(p.coefficients), "polynomial": str(p)}


def _candidate_dict(c, seed: int) -> dict:
    out: dict[str, Any] = {"seed": seed, "verified": c.verified, "root": to_dict(c.graph)}
    if c.vertex_orientation is not None:
        out["vertex_orientation"] = {k: v.symbol for k, v in c.vertex_orientation.items()}
    if c.edge_orientation is not None:
        out["edge_orientation"] = {k: v.symbol for k, v in c.edge_orientation.items()}
    return out


def cmd_recover(args) -> dict:
    y = read_graph(args.input)
    t = read_graph(args.tree)
    seed = UnitRoot(args.seed)
    if args.graph is None:
        return _candidate_dict(tree_root_recovery(y, t, seed), args.seed)
    g = read_graph(args.graph)
    res = general_root_recovery(y, g, t, seed)
    if isinstance(res, ChordViolation):
        raise CommandError(
            EXIT_PRECONDITION,
            "precondition",
            f"chord {res.edge} fails O_x O_y = O'_xy^2",
            chord=res.edge,
            lhs=res.lhs.symbol,
            rhs=res.rhs.symbol,
        )
    return _candidate_dict(res, args.seed)


def cmd_oracle_roots(args) -> dict:
    y = read_graph(args.input)
    g = underlying_graph(read_graph(args.root))
    found = oracle_roots(y, g)
    return {"roots": [to_dict(x) for x in found], "count": len(found)}


def cmd_random(args) -> str:
    try:
        g = gen_random(args.kind, args.n, args.seed, args.extra)
    except ValueError as exc:
        raise CommandError(EXIT_USAGE, "usage", str(exc)) from exc
    return dumps_pretty(g)


def cmd_export_dot(args) -> str:
    return to_dot(read_graph(args.input), args.name)


# -- parser and dispatch ----------------------------------------------------------


def _variant(text: str) -> Variant:
    try:
        return Variant.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mixedline", description="Exact algebra of mixed graphs over the Eisenstein integers.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, func, help: str, variant: bool = False) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help, description=help)
        sp.set_defaults(func=func)
        sp.add_argument("-i", "--input", help="input graph JSON ('-' for stdin)")
        sp.add_argument("-o", "--output", help="write the result here instead of stdout")
        if variant:
            sp.add_argument("--variant", type=_variant, default=Variant.GAMMA, help="gamma (default) or gamma2")
        return sp

    add("line-graph", cmd_line_graph, "gamma (or gamma2) line graph of a mixed graph", variant=True)
    sp = add("roots", cmd_roots, "all mixed roots of a gamma line graph")
    sp.add_argument("--max-vertices", type=int, default=64)
    add("monograph", cmd_monograph, "store, monograph test and clique-cycle condition", variant=True)
    sp = add("check", cmd_check, "verify the incidence factorizations or the line char-poly identity", variant=True)
    sp.add_argument("--identity", choices=("all", "bstarb", "bbstar", "linecharpoly"), default="all")
    sp.add_argument("--k", type=int, help="regularity of the root for linecharpoly")
    sp = add("charpoly", cmd_charpoly, "characteristic polynomial of H(x) or of H(line graph)", variant=True)
    sp.add_argument("--matrix", choices=("adjacency", "line"), default="adjacency")
    sp = add("recover", cmd_recover, "recover a root from a spanning tree via orientation matrices")
    sp.add_argument("--tree", required=True, help="undirected spanning tree JSON")
    sp.add_argument("--graph", help="undirected root graph JSON when it is not the tree itself")
    sp.add_argument("--seed", type=int, choices=(0, 1, 2), default=0, help="exponent k of the seed w^k")
    sp = add("oracle-roots", cmd_oracle_roots, "brute-force every orientation of a root (bounded by MIXEDLINE_MAX_EDGES)")
    sp.add_argument("--root", required=True, help="root graph JSON; orientations are ignored")
    sp = add("random", cmd_random, "seeded random mixed graph")
    sp.add_argument("--kind", choices=KINDS, default="connected")
    sp.add_argument("--n", type=int, default=6)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--extra", type=float, default=0.3, help="probability of each extra edge")
    sp = add("export-dot", cmd_export_dot, "Graphviz DOT rendering")
    sp.add_argument("--name", default="G")
    return p


def _emit(result: Any, output: str | None) -> None:
    text = result if isinstance(result, str) else json.dumps(result)
    if not text.endswith("\n"):
        text += "\n"
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _fail(code: int, kind: str, message: str, **extra: Any) -> int:
    err = {"code": code, "kind": kind, "message": message, **extra}
    sys.stderr.write(json.dumps({"error": err}) + "\n")
    return code


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return _fail(EXIT_USAGE, "usage", str(exc))
    try:
        _emit(args.func(args), args.output)
    except CommandError as exc:
        return _fail(exc.code, exc.kind, str(exc), **exc.extra)
    except SizeBoundError as exc:
        return _fail(EXIT_SIZE, "size bound", str(exc))
    except PreconditionError as exc:
        return _fail(EXIT_PRECONDITION, "precondition", str(exc))
    except OSError as exc:
        return _fail(EXIT_PARSE, "io", str(exc))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
