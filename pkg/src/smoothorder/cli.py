"""Command-line entry point: ``smoothorder <command> ...``.

Exit codes: 0 success or true, 1 false, 2 not characterized or unknown,
64 usage error, 65 malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import graphs as G
from .enumeration import DEFAULT_BUDGET, EDGE_LIMIT, EnumSpec, enumerate_blocks, verify_all
from .linkid import HASSE_LINKS, NotABlockError, NotReducedError, fingerprint, identify, link_table
from .medial import (
    CONTRACT,
    DELETE,
    ProjectionError,
    checkerboard,
    format_projection,
    medial,
    parse_projection,
    smooth,
    tait,
)
from .minors import SearchTooLarge, find_witness
from .planegraph import GraphError, InvalidGraphError, dual, format_graph, parse_graph, validate
from .smorder import LinkSpec, NotCharacterizedError, hasse, smajor

EXIT_TRUE, EXIT_FALSE, EXIT_UNKNOWN, EXIT_USAGE, EXIT_FORMAT = 0, 1, 2, 64, 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str):
    g = parse_graph(_read(path))
    problem = validate(g)
    if problem is not None:
        raise InvalidGraphError(f"{path}: {problem}")
    return g


def _emit(text: str, out: str | None = None):
    if out in (None, "-"):
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def cmd_medial(args):
    _emit(format_projection(medial(_load_graph(args.graph))), args.output)
    return EXIT_TRUE


def cmd_tait(args):
    p = parse_projection(_read(args.projection))
    colouring = checkerboard(p)[1 if args.other else 0]
    _emit(format_graph(tait(p, colouring)), args.output)
    return EXIT_TRUE


def cmd_dual(args):
    _emit(format_graph(dual(_load_graph(args.graph))), args.output)
    return EXIT_TRUE


def cmd_smooth(args):
    p = parse_projection(_read(args.projection))
    if not 1 <= args.crossing <= p.n_crossings:
        raise UsageError(f"crossing must be between 1 and {p.n_crossings}")
    _emit(format_projection(smooth(p, args.crossing - 1, args.choice)), args.output)
    return EXIT_TRUE


def cmd_identify(args):
    g = _load_graph(args.graph)
    fp = fingerprint(g)
    name = identify(g)
    if args.json:
        _emit(_dumps({"symbol": name.symbol if name else None, "fingerprint": fp.as_dict()}))
    elif name is None:
        _emit(f"unregistered crossings={fp.crossings} components={fp.components}")
    else:
        _emit(f"{name.symbol} crossings={name.crossings} components={name.components}")
    return EXIT_TRUE if name else EXIT_UNKNOWN


def cmd_minor(args):
    g, h = _load_graph(args.g), _load_graph(args.h)
    w = find_witness(g, h)
    if args.json:
        steps = None if w is None else [[op, e + 1] for op, e in w.steps]
        _emit(_dumps({"minor": w is not None, "steps": steps}))
    elif w is None:
        _emit("no")
    else:
        _emit("yes" + ("\n" + w.format() if w.steps else ""))
    return EXIT_TRUE if w else EXIT_FALSE


def _link_arg(text: str) -> LinkSpec:
    if os.path.exists(text):
        return LinkSpec.of(_load_graph(text))
    parts = [t.strip() for t in text.split("#")]
    unknown = [t for t in parts if link_table().resolve(t) is None]
    if unknown:
        raise NotCharacterizedError(f"unknown link {unknown[0]!r}")
    return LinkSpec.of(*parts)


def _target_arg(text: str) -> str:
    if os.path.exists(text):
        name = identify(_load_graph(text))
        if name is None:
            raise NotCharacterizedError(f"{text} is not a registered link")
        return name.symbol
    return text


def cmd_smajor(args):
    L1, target = _link_arg(args.link), _target_arg(args.target)
    r = smajor(L1, target)
    if args.json:
        _emit(_dumps({"link": str(L1), "target": link_table().resolve(target), **r.as_dict()}))
    else:
        _emit(f"{'true' if r.verdict else 'false'}: {r.rule}: {r.reason}")
    return EXIT_TRUE if r.verdict else EXIT_FALSE


def cmd_hasse(args):
    links = [s.strip() for s in args.links.split(",")] if args.links else list(HASSE_LINKS)
    for s in links:
        if link_table().resolve(s) is None:
            raise NotCharacterizedError(f"unknown link {s!r}")
    h = hasse(links)
    if args.dot:
        _emit(h.to_dot(), args.dot)
    if args.json:
        _emit(h.to_json(), args.json)
    if "-" not in (args.dot, args.json):
        _emit("\n".join(f"{a} > {b}" for a, b in h.covers))
    return EXIT_TRUE


_FAMILY = re.compile(r"^(C|theta)(\d+)$")


def _graph_token(tok: str):
    m = _FAMILY.match(tok)
    if m:
        k = int(m.group(2))
        return G.cycle(k) if m.group(1) == "C" else G.theta(k)
    if tok in G.NAMED:
        return G.named(tok)
    if os.path.exists(tok):
        return _load_graph(tok)
    raise UsageError(f"unknown graph {tok!r}: use C<k>, theta<k>, a file or one of {', '.join(G.NAMED)}")


def cmd_enumerate(args):
    if args.max_edges > EDGE_LIMIT:
        raise UsageError(f"--max-edges is limited to {EDGE_LIMIT}")
    spec = EnumSpec(
        max_edges=args.max_edges,
        min_edges=args.min_edges,
        max_cycle=args.max_cycle,
        max_local_connectivity=args.max_local_connectivity,
        forbidden_minors=tuple(_graph_token(t) for t in args.forbid),
        required_minors=tuple(_graph_token(t) for t in args.require),
    )
    found = enumerate_blocks(spec, workers=args.workers)
    if args.json:
        _emit(_dumps([{"edges": g.n_edges, "graph": format_graph(g)} for g in found]))
    else:
        sys.stdout.write("\n".join(format_graph(g) for g in found))
    return EXIT_TRUE


def cmd_verify_cases(args):
    sweeps = verify_all(args.budget, args.workers)
    if args.json:
        _emit(_dumps([s.as_dict() for s in sweeps]))
    else:
        _emit("\n".join(s.format() for s in sweeps))
    return EXIT_TRUE if all(s.ok for s in sweeps) else EXIT_FALSE


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="smoothorder", description="Plane graphs, link projections and the smoothing order.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("medial", help="link projection of a plane graph")
    s.add_argument("graph")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_medial)

    s = sub.add_parser("tait", help="Tait graph of a projection")
    s.add_argument("projection")
    s.add_argument("--other", action="store_true", help="use the other checkerboard colour class")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_tait)

    s = sub.add_parser("dual", help="plane dual of a graph")
    s.add_argument("graph")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("smooth", help="smooth one crossing of a projection")
    s.add_argument("projection")
    s.add_argument("crossing", type=_positive, help="1-based crossing index")
    s.add_argument("choice", choices=[CONTRACT, DELETE])
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_smooth)

    s = sub.add_parser("identify", help="name the alternating link of a block")
    s.add_argument("graph")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_identify)

    s = sub.add_parser("minor", help="test whether H is an embedded minor of G")
    s.add_argument("g")
    s.add_argument("h")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_minor)

    s = sub.add_parser("smajor", help="decide whether a link is an s-major of a target")
    s.add_argument("link", help="symbol, connected sum like 3_1#4_1, or graph file")
    s.add_argument("target", help="symbol or graph file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_smajor)

    s = sub.add_parser("hasse", help="Hasse diagram of the smoothing order")
    s.add_argument("--links", help="comma-separated symbols (default: links up to 6 crossings)")
    s.add_argument("--dot", metavar="PATH")
    s.add_argument("--json", metavar="PATH")
    s.set_defaults(func=cmd_hasse)

    s = sub.add_parser("enumerate", help="list 2-connected plane multigraphs")
    s.add_argument("--max-edges", type=_positive, required=True)
    s.add_argument("--min-edges", type=_positive, default=2)
    s.add_argument("--max-cycle", type=_positive)
    s.add_argument("--max-local-connectivity", type=_positive)
    s.add_argument("--forbid", action="append", default=[], metavar="GRAPH")
    s.add_argument("--require", action="append", default=[], metavar="GRAPH")
    s.add_argument("--workers", type=_positive, default=1)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("verify-cases", help="machine-check the finite case analyses")
    s.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    s.add_argument("--workers", type=_positive, default=1)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify_cases)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"smoothorder: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidGraphError, ProjectionError) as exc:
        print(f"smoothorder: malformed input: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (NotCharacterizedError, NotReducedError, NotABlockError, SearchTooLarge, KeyError) as exc:
        print(f"smoothorder: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except GraphError as exc:
        print(f"smoothorder: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN


if __name__ == "__main__":
    sys.exit(main())
