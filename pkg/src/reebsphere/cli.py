"""Command-line front end: ``reebsphere <command> ...``.

Commands::

    check    GRAPH --kind KIND --dim D      recognition verdict as JSON
    morse    GRAPH [COLORING] --dim D       critical-point table or JSON lines
    reeb     GRAPH --dim D [--ball]         two-critical-point coloring + certificate
    foliate  GRAPH COLORING --dim D         level surfaces at every gap
    generate RECIPE                         Graph JSON (or DOT) from a recipe
    fixtures list | write DIR               the shipped fixture gallery

``GRAPH`` is a Graph JSON file, ``-`` for standard input, or
``fixture:NAME`` for a gallery fixture.

Exit codes: 0 yes / success, 1 no (including NotASphere and NotABall),
2 unknown (budget exhausted), 3 input error (unreadable or malformed
files, bad recipes), 4 precondition error (not a d-graph, coloring not
locally injective, ...), 5 internal post-condition failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .canon import canonical_form
from .complex import Coloring
from .errors import (
    BudgetExhausted,
    ConstructionBug,
    EmptyFactor,
    InvalidGraph,
    InvalidVertex,
    NotABall,
    NotADGraph,
    NotASphere,
    NotLocallyInjective,
    NotRefinableEdge,
    RecipeError,
    ReebError,
)
from .fixtures import fixture_graph, fixtures, get_fixture, recipe_names
from .io import (
    ParseError,
    _to_json_vertex,
    coloring_values_from_json,
    dumps_graph,
    format_rational,
    loads_graph,
    loads_json,
    to_dot,
    vertex_token,
)
from .morse import critical_reports, random_coloring
from .recipe import evaluate
from .recognition import DEFAULT_BUDGET, Answer, default_recognizer
from .reeb import build_reeb_function, foliate, reeb_function_on_ball
from .graph import delete_vertex

EXIT_YES = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2
EXIT_INPUT = 3
EXIT_PRECONDITION = 4
EXIT_BUG = 5

_ANSWER_EXIT = {Answer.YES: EXIT_YES, Answer.NO: EXIT_NO, Answer.UNKNOWN: EXIT_UNKNOWN}

KINDS = ("contractible", "sphere", "ball", "dgraph", "dgraph-boundary")


class _Usage(ReebError):
    """A command-line argument combination that makes no sense."""


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with the input-error code, not argparse's 2 (which means Unknown here)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _emit(obj, out):
    out.write(json.dumps(obj, ensure_ascii=False) + "\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_graph_arg(arg: str):
    if arg.startswith("fixture:"):
        name = arg.split(":", 1)[1]
        try:
            get_fixture(name)
        except KeyError as exc:
            raise InvalidGraph(str(exc.args[0])) from None
        return fixture_graph(name)
    return loads_graph(_read_text(arg))


def load_coloring_arg(path: str, g) -> Coloring:
    return Coloring(coloring_values_from_json(loads_json(_read_text(path)), g))


def _open_out(path, out):
    if path is None or path == "-":
        return out, False
    return open(path, "w", encoding="utf-8"), True


# --------------------------------------------------------------------- check

def cmd_check(args, out) -> int:
    g = load_graph_arg(args.graph)
    rec = default_recognizer()
    d = args.dim
    if args.kind != "contractible" and d is None:
        raise _Usage(f"--kind {args.kind} needs --dim")
    if args.kind == "contractible":
        v = rec.is_contractible(g, args.budget)
    elif args.kind == "sphere":
        v = rec.is_sphere(g, d, args.budget)
    elif args.kind == "ball":
        v = rec.is_ball(g, d, args.budget)
    elif args.kind == "dgraph":
        v = rec.is_dgraph(g, d, args.budget)
    else:
        if d < 1:
            raise _Usage("--kind dgraph-boundary needs --dim >= 1")
        v = rec.is_dgraph_with_boundary(g, d, args.budget)
    report = {"kind": args.kind, "dim": d}
    report.update(v.to_json())
    _emit(report, out)
    return _ANSWER_EXIT[v.answer]


# --------------------------------------------------------------------- morse

def _table(rows, header):
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]


def cmd_morse(args, out) -> int:
    g = load_graph_arg(args.graph)
    if args.coloring:
        f = load_coloring_arg(args.coloring, g)
    else:
        f = random_coloring(g, random.Random(args.seed))
    reports = critical_reports(g, f, args.dim, args.budget)
    crit = [r for r in reports if r.symmetric_critical]
    undecided = any(r.symmetric_critical is None for r in reports)
    classes = [r.morse_class for r in reports]
    if any(c.is_morse is None for c in classes):
        morse = "unknown"
    else:
        morse = "yes" if all(c.is_morse for c in classes) else "no"
    summary = {
        "vertices": len(reports),
        "critical": len(crit),
        "critical_vertices": [_to_json_vertex(r.vertex) for r in crit],
        "undecided": sum(r.symmetric_critical is None for r in reports),
        "morse": morse,
        "index_sum": sum(r.i_minus for r in reports),
    }
    if args.jsonl:
        for r in reports:
            row = r.to_json()
            row["f"] = format_rational(f[r.vertex])
            _emit(row, out)
        _emit({"summary": summary}, out)
    else:
        rows = []
        for r in reports:
            flag = {True: "yes", False: "no", None: "?"}[r.symmetric_critical]
            rows.append([
                vertex_token(r.vertex), format_rational(f[r.vertex]), len(r.s_minus), len(r.s_plus),
                r.i_minus, r.i_plus, format_rational(r.j), flag, str(r.morse_class),
            ])
        header = ["vertex", "f", "|S-|", "|S+|", "i-", "i+", "j", "critical", "center"]
        for line in _table(rows, header):
            out.write(line + "\n")
        out.write(f"{len(crit)} critical, Morse: {morse}\n")
    return EXIT_UNKNOWN if undecided else EXIT_YES


# ---------------------------------------------------------------------- reeb

def _reeb_sphere(g, d, seed, budget):
    rec = default_recognizer()
    dg = rec.is_dgraph(g, d, budget)
    if dg.unknown:
        raise BudgetExhausted(f"could not decide whether the graph is a {d}-graph")
    if not dg.yes:
        raise NotADGraph(f"graph is not a {d}-graph: {dg.obstruction}")
    order = list(g.vertices)
    random.Random(seed).shuffle(order)
    for x in order:
        v = rec.is_contractible(delete_vertex(g, x), budget)
        if v.unknown:
            raise BudgetExhausted(f"could not decide contractibility of G - {x!r}")
        if v.yes:
            return build_reeb_function(g, d, start=x, budget=budget)
    raise NotASphere(f"no puncture of the graph is contractible; it is not a {d}-sphere")


def cmd_reeb(args, out) -> int:
    g = load_graph_arg(args.graph)
    if args.ball:
        rf = reeb_function_on_ball(g, args.dim, args.budget)
        kind = "ball"
    else:
        rf = _reeb_sphere(g, args.dim, args.seed, args.budget)
        kind = "sphere"
    doc = rf.to_json(kind=kind, dim=args.dim, seed=args.seed, graph_digest=canonical_form(g).hexdigest())
    fh, close = _open_out(args.output, out)
    try:
        _emit(doc, fh)
    finally:
        if close:
            fh.close()
    return EXIT_YES


# ------------------------------------------------------------------- foliate

def cmd_foliate(args, out) -> int:
    g = load_graph_arg(args.graph)
    f = load_coloring_arg(args.coloring, g)
    fol = foliate(g, f, args.dim, args.budget)
    outdir = Path(args.out) if args.out else None
    if outdir:
        outdir.mkdir(parents=True, exist_ok=True)
    summary = []
    for k, level in enumerate(fol.levels):
        row = {
            "level": k,
            "c": format_rational(level.c),
            "vertices": len(level.surface),
            "edges": level.surface.number_of_edges(),
            "verdict": level.verdict,
        }
        if outdir:
            stem = f"level_{k:03d}"
            (outdir / f"{stem}.json").write_text(
                dumps_graph(level.surface, meta={"c": row["c"], "verdict": level.verdict}), encoding="utf-8"
            )
            (outdir / f"{stem}.dot").write_text(to_dot(level.surface, name=stem), encoding="utf-8")
            row["file"] = f"{stem}.json"
        summary.append(row)
        _emit(row, out)
    if outdir:
        (outdir / "summary.json").write_text(
            json.dumps({"dim": args.dim, "levels": summary}, indent=1) + "\n", encoding="utf-8"
        )
    return EXIT_YES


# ------------------------------------------------------------------ generate

def cmd_generate(args, out) -> int:
    names = recipe_names()
    g = evaluate(args.recipe, names)
    if args.format == "dot":
        text = to_dot(g, name=args.recipe)
    else:
        meta = {"recipe": args.recipe, "digest": canonical_form(g).hexdigest()}
        text = dumps_graph(g, meta=meta)
    fh, close = _open_out(args.output, out)
    try:
        fh.write(text)
    finally:
        if close:
            fh.close()
    return EXIT_YES


# ------------------------------------------------------------------ fixtures

def cmd_fixtures(args, out) -> int:
    if args.action == "list":
        if args.json:
            for fx in fixtures():
                _emit({
                    "name": fx.name, "recipe": fx.recipe, "dim": fx.dim, "euler": fx.euler,
                    "betti": list(fx.betti), "checks": fx.checks, "wu": fx.wu, "digest": fx.digest,
                    "description": fx.description,
                }, out)
        else:
            rows = [[fx.name, fx.dim, fx.euler, list(fx.betti), fx.recipe] for fx in fixtures()]
            for line in _table(rows, ["name", "dim", "chi", "betti", "recipe"]):
                out.write(line + "\n")
        return EXIT_YES
    if not args.dir:
        raise _Usage("fixtures write needs a target directory")
    outdir = Path(args.dir)
    outdir.mkdir(parents=True, exist_ok=True)
    for fx in fixtures():
        (outdir / f"{fx.name}.json").write_text(
            dumps_graph(fixture_graph(fx.name), meta={"recipe": fx.recipe, "digest": fx.digest}),
            encoding="utf-8",
        )
    _emit({"written": len(fixtures()), "dir": str(outdir)}, out)
    return EXIT_YES


# -------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="reebsphere", description="Discrete Reeb sphere theorem toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, dim_required=True):
        sp.add_argument("graph", help="Graph JSON file, '-' for stdin, or fixture:NAME")
        sp.add_argument("--dim", type=int, required=dim_required, help="dimension d")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="recognition node budget")

    sp = sub.add_parser("check", help="recognize contractible graphs, spheres, balls, d-graphs")
    common(sp, dim_required=False)
    sp.add_argument("--kind", choices=KINDS, required=True)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("morse", help="critical points, indices and Morse types of a coloring")
    common(sp)
    sp.add_argument("coloring", nargs="?", help="Coloring JSON file (default: random coloring from --seed)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jsonl", action="store_true", help="JSON lines instead of a table")
    sp.set_defaults(func=cmd_morse)

    sp = sub.add_parser("reeb", help="a coloring with exactly two critical points")
    common(sp)
    sp.add_argument("--ball", action="store_true", help="treat the graph as a d-ball")
    sp.add_argument("--seed", type=int, default=0, help="chooses the puncture vertex of a sphere")
    sp.add_argument("-o", "--output", help="write the coloring here (default: stdout)")
    sp.set_defaults(func=cmd_reeb)

    sp = sub.add_parser("foliate", help="level surfaces of a coloring at every gap")
    common(sp)
    sp.add_argument("coloring", help="Coloring JSON file")
    sp.add_argument("--out", help="directory for per-level Graph JSON and DOT files")
    sp.set_defaults(func=cmd_foliate)

    sp = sub.add_parser("generate", help="build a graph from a recipe or fixture name")
    sp.add_argument("recipe")
    sp.add_argument("--format", choices=("json", "dot"), default="json")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("fixtures", help="the fixture gallery")
    sp.add_argument("action", choices=("list", "write"))
    sp.add_argument("dir", nargs="?", help="target directory for 'write'")
    sp.add_argument("--json", action="store_true", help="JSON lines for 'list'")
    sp.set_defaults(func=cmd_fixtures)
    return p


def _error_payload(exc) -> dict:
    payload = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, NotLocallyInjective):
        payload["edge"] = [_to_json_vertex(v) for v in exc.edge]
    if isinstance(exc, ParseError) and exc.line is not None:
        payload["line"], payload["column"] = exc.line, exc.column
    if isinstance(exc, RecipeError) and exc.position is not None:
        payload["position"] = exc.position
    return payload


def exit_code_for(exc) -> int:
    if isinstance(exc, (NotASphere, NotABall)):
        return EXIT_NO
    if isinstance(exc, BudgetExhausted):
        return EXIT_UNKNOWN
    if isinstance(exc, ConstructionBug):
        return EXIT_BUG
    if isinstance(
        exc, (ParseError, InvalidGraph, InvalidVertex, RecipeError, EmptyFactor, NotRefinableEdge, _Usage, OSError)
    ):
        return EXIT_INPUT
    return EXIT_PRECONDITION


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ReebError, OSError) as exc:
        _emit(_error_payload(exc), err)
        return exit_code_for(exc)
