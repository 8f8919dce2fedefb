"""``zc``: compute, verify, construct, enumerate and optimize from the shell.

Exit status: 0 on success (all verdicts confirmed), 1 when a verification
mismatch is found, 2 on usage, parse or cap errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from . import __version__
from .bounds import InadmissibleError, Theorem, bound_for
from .constructions import construct_extremal
from .enumeration import (
    CSV_HEADER, CapExceededError, enumerate_cacti, verify_theorem,
)
from .formats import ParseError, from_edge_list, from_graph6, to_edge_list, to_graph6
from .graph_core import CactusGraph, Graph, NotACactusError, is_cactus, pendant_count
from .indices import all_indices, as_exponent, index_value
from .rewrite import SearchConfig, local_search, random_cactus

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    subcommand: str
    input: str | None = None
    format: str = "text"
    c: list[str] = field(default_factory=lambda: ["1"])
    n: int | None = None
    k: int | None = None
    theorem: str | None = None
    n_max: int | None = None
    max_steps: int = 1000
    seed: int = 0
    jobs: int = 1
    objective: str = "minimize"
    index: str = "pi2"
    tree: bool = False
    input_format: str = "auto"

    def exponents(self) -> list[Fraction]:
        out = []
        for item in self.c:
            for part in item.split(","):
                try:
                    out.append(as_exponent(part.strip()))
                except (ValueError, ZeroDivisionError) as exc:
                    raise UsageError(f"bad exponent {part!r}: {exc}") from exc
        return out

    def echo(self) -> dict:
        return {"version": __version__, "config": asdict(self)}


# --------------------------------------------------------------------------
# input


def _read_input(spec: str, kind: str) -> list[Graph]:
    """Graphs from a file path, ``-`` for stdin, or an inline graph6 string."""
    if spec == "-":
        text = sys.stdin.read()
    elif Path(spec).is_file():
        text = Path(spec).read_text()
    elif kind == "edges":
        raise UsageError(f"no such file: {spec}")
    else:
        text = spec
    if kind == "auto":
        kind = "edges" if any(" " in ln.strip() for ln in text.splitlines() if ln.strip()
                              and not ln.lstrip().startswith("#")) else "graph6"
    if kind == "edges":
        return [from_edge_list(text)]
    graphs = []
    for lineno, ln in enumerate(text.splitlines(), 1):
        ln = ln.strip()
        if ln:
            graphs.append(from_graph6(ln, line=lineno))
    if not graphs:
        raise UsageError("no graphs in input")
    return graphs


# --------------------------------------------------------------------------
# output


def _emit_table(rows: list[dict], columns: list[str], cfg: CliConfig, out) -> None:
    if cfg.format == "json":
        json.dump({**cfg.echo(), "results": rows}, out, indent=2)
        out.write("\n")
    elif cfg.format == "csv":
        out.write(f"# zc {__version__} {json.dumps(asdict(cfg))}\n")
        w = csv.writer(out)
        w.writerow(columns)
        for r in rows:
            w.writerow([_cell(r.get(c)) for c in columns])
    else:
        for r in rows:
            out.write("  ".join(f"{c}={_cell(r.get(c))}" for c in columns) + "\n")


def _cell(v) -> str:
    if isinstance(v, dict) and "exact" in v:
        return v["exact"] if v["exact"] is not None else f"exp({v['log']:.6f})"
    return "" if v is None else str(v)


# --------------------------------------------------------------------------
# subcommands


def cmd_compute(cfg: CliConfig, out) -> int:
    if cfg.input is None:
        raise UsageError("compute needs --input")
    c = cfg.exponents()[0]
    rows = []
    for g in _read_input(cfg.input, cfg.input_format):
        vals = all_indices(g, c)
        check = is_cactus(g)
        rows.append({
            "graph6": to_graph6(g), "n": g.n, "k": pendant_count(g),
            "is_cactus": bool(check), "reason": check.reason or None,
            "M1": vals["M1"], "M2": vals["M2"], "NK": vals["NK"],
            "Pi1": vals["Pi1"].to_json(), "Pi2": vals["Pi2"].to_json(),
        })
    _emit_table(rows, ["graph6", "n", "k", "is_cactus", "M1", "M2", "NK", "Pi1", "Pi2"], cfg, out)
    return EXIT_OK


def cmd_verify(cfg: CliConfig, out) -> int:
    if cfg.n_max is None:
        raise UsageError("verify needs --n-max")
    theorems = list(Theorem) if cfg.theorem in (None, "all") else [Theorem(cfg.theorem)]
    reports = []
    for t in theorems:
        reports += verify_theorem(t, cfg.n_max, cfg.exponents(), cfg.jobs)
    if cfg.format == "json":
        json.dump({**cfg.echo(), "results": [r.to_json() for r in reports]}, out, indent=2)
        out.write("\n")
    elif cfg.format == "csv":
        out.write(f"# zc {__version__} {json.dumps(asdict(cfg))}\n")
        w = csv.writer(out)
        w.writerow(CSV_HEADER)
        for r in reports:
            w.writerow(r.csv_row())
    else:
        for r in reports:
            line = f"{r.theorem.value} n={r.n} k={r.k} c={r.c} {r.verdict}"
            if r.observed_extreme is not None:
                line += f" observed={r.observed_extreme}"
            if r.detail:
                line += f" ({r.detail})"
            out.write(line + "\n")
    return EXIT_OK if all(r.confirmed for r in reports) else EXIT_MISMATCH


def cmd_construct(cfg: CliConfig, out) -> int:
    if cfg.theorem is None or cfg.n is None or cfg.k is None:
        raise UsageError("construct needs --theorem, --n and --k")
    c = cfg.exponents()[0]
    g = construct_extremal(cfg.theorem, cfg.n, cfg.k)
    spec = bound_for(cfg.theorem, cfg.n, cfg.k, c)
    if cfg.format == "graph6":
        out.write(to_graph6(g.graph) + "\n")
    elif cfg.format == "json":
        json.dump({**cfg.echo(), "graph6": to_graph6(g.graph), "edges": [list(e) for e in g.edges],
                   "degree_sequence": list(g.degree_sequence()), "bound": spec.to_json()}, out, indent=2)
        out.write("\n")
    else:
        out.write(f"graph6={to_graph6(g.graph)}  degrees={list(g.degree_sequence())}  "
                  f"{spec.index}={spec.value}\n")
        if cfg.format == "text":
            out.write(to_edge_list(g.graph))
    return EXIT_OK


def cmd_enumerate(cfg: CliConfig, out) -> int:
    if cfg.n is None:
        raise UsageError("enumerate needs --n")
    res = enumerate_cacti(cfg.n, cfg.k, cfg.jobs)
    if cfg.format == "json":
        json.dump({**cfg.echo(), "count": res.count, "graphs": res.graph6_lines()}, out, indent=2)
        out.write("\n")
    else:
        for line in res.graph6_lines():
            out.write(line + "\n")
        if cfg.format == "text":
            out.write(f"# count={res.count}\n")
    return EXIT_OK


def cmd_optimize(cfg: CliConfig, out) -> int:
    if cfg.input is not None:
        graphs = _read_input(cfg.input, cfg.input_format)
        g = CactusGraph(graphs[0])
    else:
        if cfg.n is None:
            raise UsageError("optimize needs --input or --n")
        g = random_cactus(cfg.n, random.Random(cfg.seed), k=cfg.k, tree=cfg.tree)
    search = SearchConfig(cfg.objective, cfg.index, cfg.exponents()[0], cfg.max_steps)
    res = local_search(g, search)
    final = index_value(res.graph, search.index, search.c)
    if cfg.format == "json":
        json.dump({**cfg.echo(), "start": to_graph6(g.graph), "final": to_graph6(res.graph.graph),
                   "final_degrees": list(res.graph.degree_sequence()),
                   "final_index": final.to_json(), "trace": res.trace_json(),
                   "exhausted": res.exhausted}, out, indent=2)
        out.write("\n")
    elif cfg.format == "graph6":
        out.write(to_graph6(res.graph.graph) + "\n")
    else:
        out.write(f"start {to_graph6(g.graph)} degrees={list(g.degree_sequence())}\n")
        for i, s in enumerate(res.trace, 1):
            out.write(f"{i:3d} {s.lemma_id:9s} site={list(s.site)} {s.index_before} -> {s.index_after}\n")
        out.write(f"final {to_graph6(res.graph.graph)} degrees={list(res.graph.degree_sequence())} "
                  f"{cfg.index}={final}"
                  f"{' (max_steps reached)' if res.exhausted else ''}\n")
    return EXIT_OK


COMMANDS = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "construct": cmd_construct,
    "enumerate": cmd_enumerate,
    "optimize": cmd_optimize,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="file path, '-' for stdin, or an inline graph6 string")
    common.add_argument("--input-format", default="auto",
                        choices=["auto", "graph6", "edges"])
    common.add_argument("--format", default="text", choices=["json", "csv", "graph6", "text"])
    common.add_argument("--c", action="append", help="exponent NUM or NUM/DEN; repeat or comma-separate")
    common.add_argument("--n", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--theorem", choices=[t.value for t in Theorem] + ["all"])
    common.add_argument("--n-max", type=int)
    common.add_argument("--max-steps", type=int, default=1000)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=int(os.environ.get("ZC_JOBS", "1") or 1))

    p = argparse.ArgumentParser(prog="zc", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"zc {__version__}")
    sub = p.add_subparsers(dest="subcommand", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "optimize":
            g = sp.add_mutually_exclusive_group()
            g.add_argument("--min", dest="objective", action="store_const", const="minimize")
            g.add_argument("--max", dest="objective", action="store_const", const="maximize")
            sp.add_argument("--index", default="pi2", choices=["pi1", "pi2"])
            sp.add_argument("--tree", action="store_true", help="random start is a tree")
            sp.set_defaults(objective="minimize")
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    cfg = CliConfig(
        subcommand=args.subcommand, input=args.input, format=args.format,
        c=args.c or ["1"], n=args.n, k=args.k, theorem=args.theorem, n_max=args.n_max,
        max_steps=args.max_steps, seed=args.seed, jobs=args.jobs,
        objective=getattr(args, "objective", "minimize"), index=getattr(args, "index", "pi2"),
        tree=getattr(args, "tree", False), input_format=args.input_format,
    )
    buf = io.StringIO()
    try:
        code = COMMANDS[cfg.subcommand](cfg, buf)
    except ParseError as exc:
        print(f"zc: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, CapExceededError, InadmissibleError, NotACactusError, ValueError) as exc:
        print(f"zc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
