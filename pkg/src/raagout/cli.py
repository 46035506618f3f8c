"""Command-line front end, run as ``python -m raagout``.

Exit codes: 0 clean, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .automorphisms import (
    AutomorphismError, compose, format_generator, make_generator, out0_generators,
    parse_generator)
from .classify import p_generating_set, report, trichotomy
from .corpus import MAX_CORPUS_VERTICES, corpus
from .graph_core import GraphError, parse_graph
from .preorder import equivalence_classes
from .representations import (
    FAMILIES, HomologyRepInput, RepresentationError, day_generating_set,
    homology_dimensions, homology_matrix_closed_form, homology_matrix_oracle,
    standard_matrix)
from .sil import all_sils, find_special_sil, is_special_sil, sil_generator_menu
from .verify import SUITES, corpus_consistency

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

DEFAULT_MAX = {"free-witness": 5, "homology-oracle": 3, "special-sil": 7}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    paths: tuple = ()
    fmt: str = "text"
    conjugator_bound: int = 4
    word_length: int = 4
    symmetry_cap: int = 10

    def __post_init__(self):
        if self.conjugator_bound < 0 or self.word_length < 1:
            raise UsageError("bounds must be positive")


def _load(path) -> object:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror or exc}") from None
    try:
        return parse_graph(text)
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _load_all(paths):
    return [(str(p), _load(p)) for p in paths]


def _fan_out(fn, items):
    with ThreadPoolExecutor() as pool:
        return list(pool.map(fn, items))


def _emit(out, cfg: RunConfig, payload, text_lines):
    if cfg.fmt == "json":
        out.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def _text_report(name, rep) -> list:
    lines = [f"== {name}"]
    lines.append("classes: " + "; ".join(
        f"{{{','.join(c['members'])}}} {c['kind']}" for c in rep["classes"]))
    lines.append(f"sils: {', '.join(rep['sils']) or 'none'}")
    star = rep["star_condition"]
    lines.append(f"star_condition={str(star['holds']).lower()}"
                 + (f" ({star['witness']['type']})" if star["witness"] else ""))
    br = rep["branches"]
    if br["br1a"]:
        lines.append(f"branch 1a: maps onto {br['br1a']['target']} via {{{','.join(br['br1a']['class'])}}}")
    if br["br1b"]:
        lines.append(f"branch 1b: special SIL {br['br1b']}")
    if rep["ses"]:
        lines.append(f"ses: blocks={rep['ses']['blocks']} depth_bound={rep['ses']['depth_bound']}"
                     + (" (strict: every class abelian, size != 2)" if br["br2_strict"] else ""))
    lines.append("vastness: " + ", ".join(f"{k}={str(v).lower()}" for k, v in rep["vastness"].items()))
    lines.append(f"largeness: {rep['largeness']['type'] if rep['largeness'] else 'unknown'}")
    lines.append(f"free_subgroup={str(rep['free_subgroup']).lower()}")
    return lines


# -- commands ------------------------------------------------------------------------

def cmd_classify(cfg: RunConfig, out) -> int:
    graphs = _load_all(cfg.paths)
    reports = _fan_out(lambda item: report(trichotomy(item[1])), graphs)
    payload = [{"file": name, **rep} for (name, _), rep in zip(graphs, reports)]
    lines = [line for (name, _), rep in zip(graphs, reports) for line in _text_report(name, rep)]
    _emit(out, cfg, payload if len(payload) != 1 else payload[0], lines)
    return EXIT_OK


def cmd_verify(suite: str, cfg: RunConfig, max_n, out) -> int:
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    fn = SUITES[suite]
    if suite == "homology-oracle":
        if cfg.paths:
            raise UsageError("homology-oracle takes --max, not graph files")
        res = fn(max_n or DEFAULT_MAX[suite])
    else:
        graphs = [g for _, g in _load_all(cfg.paths)] if cfg.paths else \
            corpus(max_n or DEFAULT_MAX.get(suite, 6))
        if suite == "relations":
            res = fn(graphs, cfg.conjugator_bound)
        elif suite == "free-witness":
            res = fn(graphs, cfg.word_length)
        else:
            res = fn(graphs)
    payload = {"suite": suite, "ok": res.ok, "checks": res.checks,
               "notes": dict(res.notes), "failures": res.failures}
    lines = [res.summary()] + [f"  counterexample: {f}" for f in res.failures]
    _emit(out, cfg, payload, lines)
    return EXIT_OK if res.ok else EXIT_FAIL


def cmd_corpus(n: int, cfg: RunConfig, out) -> int:
    if not 1 <= n <= MAX_CORPUS_VERTICES:
        raise UsageError(f"corpus size must be between 1 and {MAX_CORPUS_VERTICES}")
    graphs = corpus(n)
    classes = _fan_out(trichotomy, graphs)
    counts = Counter()
    for c in classes:
        counts["star"] += c.star_condition.holds
        counts["sil"] += c.has_sil
        counts["br1a"] += c.br1a is not None
        counts["br1b"] += c.br1b is not None
        counts["br2"] += c.ses is not None
        counts["br2_strict"] += c.br2_strict
        counts["large_witness"] += c.largeness is not None
    res = corpus_consistency(graphs)
    payload = {"max_vertices": n, "graphs": len(graphs), "counts": dict(counts),
               "consistency": {"ok": res.ok, "checks": res.checks, "failures": res.failures}}
    lines = [f"graphs on <= {n} vertices: {len(graphs)}"]
    lines += [f"  {k}: {counts[k]}" for k in
              ("star", "sil", "br1a", "br1b", "br2", "br2_strict", "large_witness")]
    lines.append(res.summary())
    _emit(out, cfg, payload, lines)
    return EXIT_OK if res.ok else EXIT_FAIL


def _single(cfg):
    if len(cfg.paths) != 1:
        raise UsageError("expected exactly one graph file")
    return _load(cfg.paths[0])


def cmd_generators(cfg: RunConfig, out) -> int:
    g = _single(cfg)
    out0 = [format_generator(k, g) for k in out0_generators(g)]
    day = [format_generator(k, g) for k in day_generating_set(g)]
    payload = {"out0": out0, "day": day}
    if not all_sils(g):
        payload["p_generating_set"] = [format_generator(k, g) for k in p_generating_set(g)]
    lines = [f"{key}: {' '.join(vals) or '(none)'}" for key, vals in payload.items()]
    _emit(out, cfg, payload, lines)
    return EXIT_OK


def cmd_sils(cfg: RunConfig, out) -> int:
    g = _single(cfg)
    sils = all_sils(g)
    payload = {"sils": [s.to_json() for s in sils], "special": [], "menu": None}
    lines = [f"sils: {', '.join(map(str, sils)) or 'none'}"]
    for s in sils:
        flag = is_special_sil(g, s) is not None
        payload["special"].append(flag)
        lines.append(f"  {s}: component {{{','.join(s.component_z)}}}, special={str(flag).lower()}")
    if sils and all(c.is_abelian for c in equivalence_classes(g).classes):
        special = find_special_sil(g)
        menu = sil_generator_menu(g, special)
        payload["menu"] = {"sil": str(special.sil), **menu.to_json()}
        lines.append(f"menu for {special.sil} (sizes {menu.sizes}, case {'1' if menu.case1 else '2'}):")
        lines += [f"  {e.item} {format_generator(e.kind, menu.graph)}" for e in menu.entries]
    _emit(out, cfg, payload, lines)
    return EXIT_OK


def cmd_rep(args, cfg: RunConfig, out) -> int:
    if args.standard:
        if not args.rest:
            raise UsageError("rep --standard needs a graph file and generators")
        g = _load(args.rest[0])
        kinds = [parse_generator(g, t) for t in args.rest[1:]]
        f = compose(*(make_generator(g, k) for k in kinds)) if kinds else None
        if f is None:
            from .automorphisms import identity
            f = identity(g)
        m = standard_matrix(g, f)
        order = equivalence_classes(g).enumeration
        payload = {"basis": list(order), "matrix": m.tolist()}
        lines = ["basis: " + " ".join(order)] + [" ".join(f"{x:3d}" for x in row) for row in m]
        _emit(out, cfg, payload, lines)
        return EXIT_OK
    try:
        a, b, c = (int(x) for x in args.rest)
    except ValueError:
        raise UsageError("rep --homology needs three class sizes a b c") from None
    fams = args.generator or list(FAMILIES)
    rows = []
    for fam in fams:
        parts = tuple(fam.split("*"))
        inp = HomologyRepInput(a, b, c, parts if len(parts) > 1 else parts[0])
        rows.append({"generator": fam,
                     "closed_form": homology_matrix_closed_form(inp).tolist(),
                     "oracle": homology_matrix_oracle(inp).tolist()})
    payload = {"sizes": [a, b, c], "dimensions": homology_dimensions(a, b, c), "matrices": rows}
    lines = [f"sizes {a} {b} {c}: dimensions {payload['dimensions']}"]
    lines += [f"  {r['generator']:<12} closed {r['closed_form']}  oracle {r['oracle']}" for r in rows]
    _emit(out, cfg, payload, lines)
    return EXIT_OK


# -- argument parsing -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--conjugator-bound", type=int, default=4)
    common.add_argument("--word-length", type=int, default=4)
    common.add_argument("--max", type=int, default=None)

    parser = argparse.ArgumentParser(prog="raag", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("classify", parents=[common], help="classify graph files")
    p.add_argument("paths", nargs="+")
    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite")
    p.add_argument("paths", nargs="*")
    p = sub.add_parser("corpus", parents=[common], help="classify every small graph")
    p.add_argument("n", type=int)
    p = sub.add_parser("generators", parents=[common], help="list generating sets")
    p.add_argument("paths", nargs=1)
    p = sub.add_parser("sils", parents=[common], help="list SILs and the special SIL menu")
    p.add_argument("paths", nargs=1)
    p = sub.add_parser("rep", parents=[common], help="standard or homology representation")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--standard", action="store_true")
    mode.add_argument("--homology", action="store_true")
    p.add_argument("--generator", action="append",
                   help="homology family such as C_X^y, or a product C_X^y*C_Y^z")
    p.add_argument("rest", nargs="*")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        # paths may follow options; argparse leaves those as extras
        args, extra = parser.parse_known_args(argv)
        if extra and (not hasattr(args, "paths") or any(e.startswith("-") for e in extra)):
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
        if extra:
            args.paths = list(args.paths or ()) + extra
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig(tuple(getattr(args, "paths", ()) or ()), args.format,
                        args.conjugator_bound, args.word_length)
        if args.command == "classify":
            return cmd_classify(cfg, out)
        if args.command == "verify":
            return cmd_verify(args.suite, cfg, args.max, out)
        if args.command == "corpus":
            return cmd_corpus(args.n, cfg, out)
        if args.command == "generators":
            return cmd_generators(cfg, out)
        if args.command == "sils":
            return cmd_sils(cfg, out)
        return cmd_rep(args, cfg, out)
    except (UsageError, GraphError, AutomorphismError, RepresentationError) as exc:
        print(f"raag: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
