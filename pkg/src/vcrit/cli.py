"""Command-line interface: ``vcrit <command>``.

Graphs are read as graph6 lines on standard input; results go to standard
output one line per input, diagnostics to standard error.  Exit status is 0
when every input passes, 1 when some input fails its check, and 2 on usage
or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Iterator, TextIO

from .graph import Graph, GraphError, named_graph, parse_graph6

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Input:
    """Iterates graph6 lines, remembering parse errors instead of aborting."""

    def __init__(self, stream: TextIO, err: TextIO):
        self.stream = stream
        self.err = err
        self.errors = 0

    def __iter__(self) -> Iterator[tuple[str, Graph]]:
        for lineno, raw in enumerate(self.stream, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                yield line, parse_graph6(line.split()[0])
            except GraphError as exc:
                self.errors += 1
                print(f"line {lineno}: {exc}", file=self.err)


def parse_patterns(text: str | None) -> list[Graph]:
    if not text or text.lower() == "none":
        return []
    return [named_graph(tok) for tok in text.split(",") if tok.strip()]


def parse_graph_arg(text: str) -> Graph:
    """A graph given by name (``C5``, ``C7bar``, ``K4``...) or as a graph6 string."""
    try:
        return named_graph(text)
    except GraphError:
        return parse_graph6(text)


def _status(failed: bool, inp: _Input) -> int:
    if inp.errors:
        return EXIT_USAGE
    return EXIT_FAIL if failed else EXIT_OK


# -- commands ---------------------------------------------------------------


def cmd_color(args, out, err) -> int:
    from .color import is_k_colorable

    inp = _Input(sys.stdin, err)
    failed = False
    for _, g in inp:
        col = is_k_colorable(g, args.k)
        if col is None:
            failed = True
            print("NO", file=out)
        else:
            print(" ".join(["YES"] + [str(c) for c in col.colors]), file=out)
    return _status(failed, inp)


def cmd_check(args, out, err) -> int:
    from .critical import NotHFree, is_k_critical_classical, is_k_critical_hfree, is_k_vertex_critical

    patterns = parse_patterns(args.hfree)
    inp = _Input(sys.stdin, err)
    failed = False
    for _, g in inp:
        try:
            if args.mode == "vertex":
                rep = is_k_vertex_critical(g, args.k)
            elif args.mode == "classical":
                rep = is_k_critical_classical(g, args.k)
            else:
                rep = is_k_critical_hfree(g, args.k, patterns)
        except NotHFree as exc:
            failed = True
            print(f"FAIL not-hfree {exc}", file=out)
            continue
        if rep.passed:
            print(f"PASS {rep.kind.value} chi={rep.chi}", file=out)
        else:
            failed = True
            print(f"FAIL {rep.kind.value} chi={rep.chi} {rep.reason}", file=out)
    return _status(failed, inp)


def cmd_gen(args, out, err) -> int:
    from .generate import GenConfig, InvalidConfig, characterize, standard_seeds

    patterns = parse_patterns(args.hfree)
    seeds: list[Graph] = []
    try:
        for s in args.seed or ["standard"]:
            if s == "standard":
                seeds.extend(standard_seeds(args.k, patterns))
            else:
                seeds.append(parse_graph_arg(s))
    except (GraphError, ValueError) as exc:
        print(f"bad seed: {exc}", file=err)
        return EXIT_USAGE

    def emit(g6: str) -> None:
        print(g6, file=out, flush=True)

    opts = dict(max_n=args.max_n, enable_similar_pair_pruning=not args.no_pruning, parallel=args.parallel)
    try:
        for seed in seeds:
            GenConfig(k=args.k, patterns=patterns, seed=seed, **opts).validate()
        found, stats = characterize(args.k, patterns, seeds, sink=emit, **opts)
    except InvalidConfig as exc:
        print(f"invalid configuration: {exc}", file=err)
        return EXIT_USAGE
    for line in stats.lines():
        print(line, file=err)
    if stats.capped:
        print("warning: max_n cut off part of the search; the output is complete only up to max_n", file=err)
    if args.report:
        from .report import generator_report

        for path in generator_report(Path(args.report), stats, found):
            print(f"wrote {path}", file=err)
    return EXIT_OK


def _load_catalog(path: str | None):
    from .catalog import Catalog

    return None if path is None else Catalog.load(path)


def cmd_certify(args, out, err) -> int:
    from .certify import CatalogIncomplete, CatalogMismatch, certify

    try:
        catalog = _load_catalog(args.catalog)
    except (OSError, GraphError) as exc:
        print(f"cannot read catalogue: {exc}", file=err)
        return EXIT_USAGE
    inp = _Input(sys.stdin, err)
    failed = False
    for line, g in inp:
        try:
            cert = certify(g, args.k, catalog)
        except CatalogMismatch as exc:
            print(str(exc), file=err)
            return EXIT_USAGE
        except CatalogIncomplete as exc:
            failed = True
            print(f"ERROR {exc}", file=out)
            continue
        prefix = f"{line.split()[0]} " if args.echo else ""
        print(prefix + cert.line(), file=out)
    return _status(failed, inp)


def cmd_verify_cert(args, out, err) -> int:
    from .certify import parse_certificate, verify_certificate

    catalog = _load_catalog(args.catalog)
    failed = False
    bad_input = 0
    for lineno, raw in enumerate(sys.stdin, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        g6, _, rest = line.partition(" ")
        try:
            g = parse_graph6(g6)
            cert = parse_certificate(rest)
        except (GraphError, ValueError) as exc:
            bad_input += 1
            print(f"line {lineno}: {exc}", file=err)
            continue
        ok = verify_certificate(g, args.k, cert, catalog)
        failed |= not ok
        print("VALID" if ok else "INVALID", file=out)
    if bad_input:
        return EXIT_USAGE
    return EXIT_FAIL if failed else EXIT_OK


def cmd_structure(args, out, err) -> int:
    from .detect import find_induced_c5, find_induced_c7bar
    from .structure import (UnclassifiedVertex, partition_around_c5, partition_around_c7bar,
                            verify_c5_properties, verify_c7bar_properties)

    inp = _Input(sys.stdin, err)
    failed = False
    for idx, (line, g) in enumerate(inp):
        g6 = line.split()[0]
        if args.around == "c5":
            emb = find_induced_c5(g)
            part_fn, verify_fn = partition_around_c5, verify_c5_properties
        else:
            emb = find_induced_c7bar(g)
            part_fn, verify_fn = partition_around_c7bar, verify_c7bar_properties
        if emb is None:
            print(f"# {g6} no induced {args.around}", file=out)
            continue
        print(f"# {g6} base {' '.join(map(str, emb))}", file=out)
        try:
            part = part_fn(g, emb)
        except UnclassifiedVertex as exc:
            failed = True
            wit = " ".join(map(str, exc.witness)) if exc.witness else "-"
            print(f"unclassified {exc.vertex} signature {','.join(map(str, exc.signature))} witness {wit}"
                  f" ({exc.reason})", file=out)
            continue
        bad = False
        for rep in verify_fn(g, part):
            if not rep.holds or args.verbose:
                print(rep.line() + (f" {rep.pattern}" if rep.pattern else ""), file=out)
            bad |= not rep.holds
        if not args.verbose and not bad:
            print("all true", file=out)
        failed |= bad
    return _status(failed, inp)


def cmd_catalog_verify(args, out, err) -> int:
    from .catalog import CRITICAL_COUNTS, VERTEX_CRITICAL_COUNTS, load_critical_raw, verify_critical, verify_full
    from .graph import load_graph6_file

    try:
        crit21 = load_graph6_file(args.critical) if args.critical else load_critical_raw()
        full = load_graph6_file(args.full) if args.full else None
    except (OSError, GraphError) as exc:
        print(f"cannot read catalogue: {exc}", file=err)
        return EXIT_USAGE
    reports = [("critical", verify_critical(crit21), CRITICAL_COUNTS)]
    gen_run = None
    if full is None and args.generate:
        from .detect import P5, W4
        from .generate import characterize

        found, stats = characterize(5, [P5, W4])
        for line in stats.lines():
            print(line, file=err)
        full = [parse_graph6(s) for s in found]
        gen_run = (stats, found)
    if full is not None:
        reports.append(("full", verify_full(full), VERTEX_CRITICAL_COUNTS))
    ok = True
    for name, rep, _ in reports:
        for check in rep.checks:
            print(f"{name}\t{check.line()}", file=out)
        ok &= rep.ok
    print("PASS" if ok else "FAIL", file=out)
    if args.report:
        from .report import catalog_report

        paths = []
        for name, rep, expected in reports:
            paths += catalog_report(Path(args.report), name, rep, expected)
        if gen_run is not None:
            from .report import generator_report

            paths += generator_report(Path(args.report), *gen_run)
        for path in paths:
            print(f"wrote {path}", file=err)
    return EXIT_OK if ok else EXIT_FAIL


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vcrit", description="k-vertex-critical H-free graph toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("color", help="k-colourability of each input graph")
    c.add_argument("k", type=int)
    c.set_defaults(func=cmd_color)

    c = sub.add_parser("check", help="criticality report per input graph")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--hfree", default="P5,W4", help="comma separated forbidden graphs (default P5,W4)")
    c.add_argument("--mode", choices=["vertex", "classical", "hfree"], default="vertex")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("gen", help="generate k-vertex-critical H-free graphs")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--hfree", default="P5,W4")
    c.add_argument("--seed", action="append", help="graph name, graph6, or 'standard' (repeatable)")
    c.add_argument("--max-n", type=int, default=None)
    c.add_argument("--parallel", action="store_true")
    c.add_argument("--no-pruning", action="store_true", help="expand every neighbourhood subset")
    c.add_argument("--report", metavar="DIR", help="write TSV tables and PNG figures here")
    c.set_defaults(func=cmd_gen)

    c = sub.add_parser("certify", help="colouring or critical-subgraph certificate per input graph")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--catalog", help="graph6 file of (k+1)-vertex-critical graphs")
    c.add_argument("--echo", action="store_true", help="prefix each certificate with the input graph6")
    c.set_defaults(func=cmd_certify)

    c = sub.add_parser("verify-cert", help="recheck '<graph6> <certificate>' lines")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--catalog")
    c.set_defaults(func=cmd_verify_cert)

    c = sub.add_parser("structure", help="partition around C5 or the 7-antihole and check properties")
    c.add_argument("--around", choices=["c5", "c7bar"], required=True)
    c.add_argument("--verbose", action="store_true", help="print every property line, not just failures")
    c.set_defaults(func=cmd_structure)

    c = sub.add_parser("catalog", help="catalogue operations")
    csub = c.add_subparsers(dest="action", required=True)
    v = csub.add_parser("verify", help="recompute every catalogue invariant")
    v.add_argument("--full", help="graph6 file with all 64 vertex-critical graphs")
    v.add_argument("--generate", action="store_true",
                   help="without --full, regenerate the 64 graphs (k=5, P5 and W4 forbidden) and check them")
    v.add_argument("--critical", help="alternative to the shipped 21-graph file")
    v.add_argument("--report", metavar="DIR", help="write TSV tables and PNG figures here")
    v.set_defaults(func=cmd_catalog_verify)
    return p


def main(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out, err)
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
