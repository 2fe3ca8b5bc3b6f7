"""Command line front end.

Inputs are inline words, files of word lines, or graph JSON; enumeration
commands stream one result per line.  Exit status: 0 on success, 1 on a
domain error (reported as one JSON object on stderr with keys "error"
and "detail"), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import string
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .chords import (
    ChordDiagram,
    all_framings,
    canonical_form,
    interlace_graph,
    parse_line,
    to_line,
)
from .errors import ArityError, FiloopError, NotCircleGraph
from .forms import (
    check_CL2,
    check_CL12,
    check_EN1,
    check_EN2,
    check_RC,
    is_gaussian,
)
from .generate import generation_report
from .glt import cunningham, glt_to_dot, glt_to_json
from .graphs import SimpleGraph, graph_from_json, graph_to_dot, graph_to_json
from .realize import enumerate_realizations, enumerate_spheriloops, realize_prime
from .render import diagram_to_svg
from .ribbon import face_count, genus

__all__ = ["main"]

DEFAULT_SEED = 2026


def _dumps(obj: Dict) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _read_input(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if os.path.exists(arg):
        return Path(arg).read_text()
    return arg


def _word_lines(arg: str) -> List[str]:
    text = _read_input(arg)
    lines = [ln.strip() for ln in text.splitlines()] if ("\n" in text or os.path.exists(arg) or arg == "-") else [text.strip()]
    return [ln for ln in lines if ln and not ln.startswith("#")]


GraphInput = Tuple[SimpleGraph, Optional[Dict[str, int]], Optional[str]]


def _graph_inputs(arg: str) -> List[GraphInput]:
    """Graphs named by the argument: graph JSON (one object, or one per
    line) or word lines, which stand for their interlace graphs."""
    text = _read_input(arg)
    if text.lstrip().startswith("{"):
        try:
            json.loads(text)
            chunks = [text]
        except ValueError:
            chunks = [ln for ln in (l.strip() for l in text.splitlines()) if ln]
        out: List[GraphInput] = []
        for chunk in chunks:
            G, weights = graph_from_json(chunk)
            out.append((G, weights, None))
        return out
    return [
        (interlace_graph(C), None, to_line(C))
        for C in map(parse_line, _word_lines(arg))
    ]


def _single_graph(arg: str) -> SimpleGraph:
    inputs = _graph_inputs(arg)
    if len(inputs) != 1:
        raise ArityError(f"expected exactly one graph, got {len(inputs)}")
    return inputs[0][0]


def _letters(D: ChordDiagram) -> ChordDiagram:
    """Relabel the chords to single letters so the diagram has a word."""
    if len(D.chords) > len(string.ascii_lowercase):
        raise ArityError("word format supports at most 26 chords")
    return D.relabel({x: string.ascii_lowercase[i] for i, x in enumerate(D.chords)})


def _spheriloop_classes(G: SimpleGraph) -> List[str]:
    """One representative word per spheriloop equivalence class of G,
    sorted by canonical form."""
    classes: Dict[str, ChordDiagram] = {}
    for D in enumerate_spheriloops(G):
        key = canonical_form(D, reversal=True, frame_swap=True, relabel=True)
        classes.setdefault(key, D)
    return [to_line(_letters(classes[k])) for k in sorted(classes)]


def _spheriloop_class_count(G: SimpleGraph) -> int:
    return len(_spheriloop_classes(G))


def _run_pool(fn, items: Sequence, jobs: int) -> List:
    """Map fn over items, with a process pool when jobs > 1.  Results come
    back in input order regardless of worker scheduling."""
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


# -- commands -------------------------------------------------------------------


def cmd_validate(args: argparse.Namespace) -> int:
    for line in _word_lines(args.word):
        C = parse_line(line)
        print(_dumps({"word": to_line(C), "n": C.n, "framed": C.is_framed}))
    return 0


def cmd_genus(args: argparse.Namespace) -> int:
    for line in _word_lines(args.word):
        C = parse_line(line, framed=True)
        payload = {"word": C.to_word(), "n": C.n, "f": face_count(C), "g": genus(C)}
        if C.root is not None:
            payload["root"] = C.root
        print(_dumps(payload))
    return 0


def cmd_interlace(args: argparse.Namespace) -> int:
    for line in _word_lines(args.word):
        G = interlace_graph(parse_line(line))
        if args.dot:
            sys.stdout.write(graph_to_dot(G))
        else:
            print(graph_to_json(G))
    return 0


def cmd_forms(args: argparse.Namespace) -> int:
    for G, weights, word in _graph_inputs(args.input):
        payload: Dict = {}
        if word is not None:
            payload["word"] = word
        payload["n"] = G.n
        payload["EN1"] = check_EN1(G)
        payload["EN2"] = check_EN2(G)
        payload["RC"] = check_RC(G)
        payload["gaussian"] = is_gaussian(G)
        if weights is not None:
            payload["CL2"] = check_CL2(G, weights)
            payload["CL12"] = check_CL12(G, weights)
        print(_dumps(payload))
    return 0


def cmd_mingenus(args: argparse.Namespace) -> int:
    for line in _word_lines(args.word):
        C = parse_line(line).unframed()
        best: Optional[int] = None
        winners: List[str] = []
        for D in all_framings(C):
            g = genus(D)
            if best is None or g < best:
                best, winners = g, []
            if g == best:
                winners.append(D.to_word())
        payload = {"word": C.to_word(), "g": best, "framings": sorted(winners)}
        print(_dumps(payload))
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    T = cunningham(_single_graph(args.graph))
    sys.stdout.write(glt_to_dot(T) if args.dot else glt_to_json(T) + "\n")
    return 0


def cmd_realize(args: argparse.Namespace) -> int:
    G = _single_graph(args.graph)
    if args.certify_unique:
        D = realize_prime(G, certify=True)
        if D is None:
            raise NotCircleGraph("the graph has no chord diagram realization")
        print(to_line(D))
        return 0
    for D in enumerate_realizations(G).results:
        print(to_line(D))
    return 0


def cmd_spheriloops(args: argparse.Namespace) -> int:
    G = _single_graph(args.graph)
    if args.certify_unique:
        D = realize_prime(G, certify=True)
        if D is None:
            raise NotCircleGraph("the graph has no chord diagram realization")
    for D in enumerate_spheriloops(G):
        print(to_line(D))
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    chordiagraphs = args.chordiagraphs or args.spheriloops
    graphs, stats = generation_report(args.max_n, chordiagraphs=chordiagraphs)
    if args.spheriloops:
        for lines in _run_pool(_spheriloop_classes, graphs, args.jobs):
            for line in lines:
                print(line)
    else:
        for G in graphs:
            print(graph_to_json(G))
    if args.stats:
        sys.stderr.write(
            f"atoms={stats.atom_count} trees={stats.tree_count} "
            f"molecules={stats.molecule_count} collisions={stats.collisions}\n"
        )
    return 0


def cmd_tabulate(args: argparse.Namespace) -> int:
    graphs, _stats = generation_report(args.max_n, chordiagraphs=True)
    counts = {k: 0 for k in range(1, args.max_n + 1)}
    for G, c in zip(graphs, _run_pool(_spheriloop_class_count, graphs, args.jobs)):
        counts[G.n] += c
    print("n,count")
    for k in sorted(counts):
        print(f"{k},{counts[k]}")
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    lines = _word_lines(args.word)
    if len(lines) != 1:
        raise ArityError(f"render expects exactly one word, got {len(lines)}")
    svg = diagram_to_svg(parse_line(lines[0]))
    if args.out:
        Path(args.out).write_text(svg)
    else:
        sys.stdout.write(svg)
    return 0


# -- parser ---------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="filoops",
        description="Chord diagrams, framings, interlace graphs and their planarity.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"seed for randomized helpers (default: FILOOP_SEED or {DEFAULT_SEED})",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=1,
        help="worker processes for enumeration commands (default 1)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse word lines and echo their shape")
    p.add_argument("word", help="inline word, file of word lines, or - for stdin")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("genus", help="face count and genus of framed words")
    p.add_argument("word", help="inline framed word, file of word lines, or -")
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("interlace", help="interlace graph of word lines")
    p.add_argument("word", help="inline word, file of word lines, or -")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.set_defaults(func=cmd_interlace)

    p = sub.add_parser("forms", help="evenness and cycle conditions of a graph")
    p.add_argument("input", help="graph JSON (file or inline), word lines, or -")
    p.set_defaults(func=cmd_forms)

    p = sub.add_parser("mingenus", help="minimal genus over all framings of a word")
    p.add_argument("word", help="inline word, file of word lines, or -")
    p.set_defaults(func=cmd_mingenus)

    p = sub.add_parser("decompose", help="split decomposition of a connected graph")
    p.add_argument("graph", help="graph JSON (file or inline), a word, or -")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("realize", help="chord diagrams with a given interlace graph")
    p.add_argument("graph", help="graph JSON (file or inline), a word, or -")
    p.add_argument(
        "--certify-unique",
        action="store_true",
        help="exhaustively certify the graph is prime with one realization",
    )
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("spheriloops", help="genus zero framed diagrams of a graph")
    p.add_argument("graph", help="graph JSON (file or inline), a word, or -")
    p.add_argument(
        "--certify-unique",
        action="store_true",
        help="exhaustively certify the graph is prime with one realization",
    )
    p.set_defaults(func=cmd_spheriloops)

    p = sub.add_parser("generate", help="all connected Gaussian graphs up to a size")
    p.add_argument("--max-n", type=int, required=True, help="largest vertex count")
    p.add_argument(
        "--chordiagraphs",
        action="store_true",
        help="restrict to interlace graphs of chord diagrams",
    )
    p.add_argument(
        "--spheriloops",
        action="store_true",
        help="emit one word per spheriloop class instead of graph JSON",
    )
    p.add_argument("--stats", action="store_true", help="generation totals on stderr")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("tabulate", help="count spheriloop classes per chord number")
    p.add_argument("--max-n", type=int, required=True, help="largest chord count")
    p.set_defaults(func=cmd_tabulate)

    p = sub.add_parser("render", help="SVG picture of one word")
    p.add_argument("word", help="inline word, a one-line file, or -")
    p.add_argument("--out", help="write the SVG here instead of stdout")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("FILOOP_SEED", DEFAULT_SEED))
    random.seed(seed)
    try:
        return args.func(args)
    except FiloopError as exc:
        sys.stderr.write(_dumps({"error": type(exc).__name__, "detail": str(exc)}) + "\n")
        return 1
    except (OSError, ValueError) as exc:
        sys.stderr.write(_dumps({"error": type(exc).__name__, "detail": str(exc)}) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
