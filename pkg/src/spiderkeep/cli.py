"""Command-line front end.

Exit codes: 0 success, 1 verification failure or counterexample,
2 hypothesis not met, 3 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .campaign import load_config, run_campaign
from .connectivity import ends, kappa, lemma1_holds, min_separators
from .errors import (
    BadParameters,
    CompleteGraph,
    GenerationBudgetExceeded,
    HypothesisNotMet,
    IdOutOfRange,
    NoCertificate,
    ParseError,
    TooLargeForEnumeration,
    ZeroLengthLeg,
)
from .extractor import ExtractConfig, certificate_from_text, certificate_to_text, check_certificate, extract_spider
from .fileio import read_graph, write_graph
from .generators import InstanceSpec, gen_instance
from .oracle import oracle_extract
from .spider import parse_spider

EXIT_OK, EXIT_FAIL, EXIT_HYPOTHESIS, EXIT_USAGE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _ids(vs) -> str:
    return " ".join(map(str, vs))


def cmd_kappa(args):
    print(kappa(read_graph(args.file)))
    return EXIT_OK


def cmd_separators(args):
    for sep in min_separators(read_graph(args.file), limit=args.limit):
        print(_ids(sep.vertices))
    return EXIT_OK


def cmd_ends(args):
    for rep in ends(read_graph(args.file), limit=args.limit):
        print(f"end {_ids(rep.end.vertices)} | separator {_ids(rep.end.separator.vertices)}")
    return EXIT_OK


def cmd_lemma1(args):
    report = lemma1_holds(read_graph(args.file), args.k, limit=args.limit)
    if report.holds:
        print(f"holds ends={report.ends_checked} separators={report.separators_checked}")
        return EXIT_OK
    end, sep, common = report.violation
    print(f"violation end={_ids(end)} separator={_ids(sep)} vertex={common}")
    return EXIT_FAIL


def cmd_extract(args):
    g = read_graph(args.file)
    cfg = ExtractConfig(strict_paper=args.strict_paper)
    try:
        cert = extract_spider(g, args.k, parse_spider(args.spider), cfg)
    except NoCertificate as exc:
        print(f"no certificate: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text = certificate_to_text(cert)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args):
    g = read_graph(args.file)
    cert = certificate_from_text(Path(args.cert).read_text(encoding="utf-8"))
    result = check_certificate(g, args.k, parse_spider(args.spider), cert)
    print("OK" if result else f"FAIL {result.reason}")
    return EXIT_OK if result else EXIT_FAIL


def cmd_oracle(args):
    emb = oracle_extract(read_graph(args.file), args.k, parse_spider(args.spider))
    if emb is None:
        print("NONE")
        return EXIT_FAIL
    print(f"root {emb.root} map {_ids(emb.vertex_map)}")
    return EXIT_OK


_GEN_PARAMS = ("a", "b", "k", "nx", "ny", "p", "k_min", "delta_min")


def cmd_gen(args):
    params = {name: getattr(args, name) for name in _GEN_PARAMS if getattr(args, name) is not None}
    spec = InstanceSpec(args.family, params, args.seed, args.theorem_k, parse_spider(args.spider))
    g, _, _ = gen_instance(spec)
    if args.out:
        write_graph(g, args.out)
    else:
        from .fileio import format_graph

        sys.stdout.write(format_graph(g))
    return EXIT_OK


def cmd_fuzz(args):
    summary = run_campaign(load_config(args.config), strict=True if args.strict_paper else None)
    sys.stdout.write(summary.to_text())
    print(f"wall_time: {summary.wall_time:.2f}s", file=sys.stderr)
    return EXIT_OK if summary.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spiderkeep", description="Connectivity-keeping spiders in k-connected bipartite graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file")
        p.set_defaults(func=func)
        return p

    for name, func, help_ in (
        ("kappa", cmd_kappa, "print the vertex connectivity"),
        ("separators", cmd_separators, "list all minimum separators"),
        ("ends", cmd_ends, "list all ends with a defining separator"),
    ):
        p = graph_cmd(name, func, help_)
        if name != "kappa":
            p.add_argument("--limit", type=int, default=None, help="refuse graphs larger than this")

    p = graph_cmd("lemma1", cmd_lemma1, "check that no end meets a minimum separator")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--limit", type=int, default=None)

    p = graph_cmd("extract", cmd_extract, "find a connectivity-keeping spider and print its certificate")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--spider", required=True, help="comma-separated leg lengths")
    p.add_argument("--out")
    p.add_argument("--strict-paper", action="store_true", help="disable the oracle fallback")

    p = graph_cmd("verify", cmd_verify, "check a certificate file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--spider", required=True)
    p.add_argument("--cert", required=True)

    p = graph_cmd("oracle", cmd_oracle, "exhaustive search for a witness")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--spider", required=True)

    p = sub.add_parser("gen", help="generate an instance graph")
    p.add_argument("--family", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--theorem-k", type=int, default=1, help="k folded into random rejection tests")
    p.add_argument("--spider", default="", help="spider whose w is folded into random rejection tests")
    for name in _GEN_PARAMS:
        p.add_argument(f"--{name.replace('_', '-')}", dest=name, type=float if name == "p" else int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("fuzz", help="run a campaign from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--strict-paper", action="store_true")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HypothesisNotMet as exc:
        print(f"hypothesis not met: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (ParseError, IdOutOfRange, ZeroLengthLeg, BadParameters, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CompleteGraph, TooLargeForEnumeration, GenerationBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
