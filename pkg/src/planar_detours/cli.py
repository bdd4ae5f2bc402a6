"""Command-line entry points (``pdetour``).

Exit codes: 0 the question was answered, 1 a no-instance condition such as
an unreachable target or a witness that fails verification, 2 bad input,
3 time budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .detour import DetourWitness, directed_detour
from .draw import render_dot, render_svg
from .errors import DidNotFinish, EmptyAfterThinning, InvalidEmbedding, ParseError, TUnreachable
from .generate import GeneratorSpec, generate_instance
from .long_detour import DEFAULT_DELTA, long_detour
from .pdg import PdgDocument, emit_pdg, read_pdg_document
from .plane_graph import euler_characteristic, satisfies_euler, weak_components
from .verify import verify_witness

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_TIMEOUT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path: str) -> PdgDocument:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return read_pdg_document(text)
    except (ParseError, InvalidEmbedding) as exc:
        raise InputError(f"{path}: {exc}") from None


def _vertex_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"cannot read path {text!r}") from None


def _check_vertex(doc: PdgDocument, v: int, name: str) -> None:
    if not 0 <= v < doc.graph.vertex_count:
        raise InputError(f"-{name} {v} is not a vertex (n = {doc.graph.vertex_count})")


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _report(args, verdict: str, witness: DetourWitness | None, **extra) -> None:
    if args.json:
        record = {"verdict": verdict, **extra}
        if witness is not None:
            record.update(
                path=list(witness.path),
                length=witness.length,
                dist=witness.baseline,
                method=witness.method,
            )
        else:
            record["path"] = None
        print(json.dumps(record, sort_keys=True))
        return
    print(verdict)
    if witness is not None and args.witness:
        print("path: " + " ".join(map(str, witness.path)))
    if "reason" in extra:
        print(f"reason: {extra['reason']}")


def _answer(args, doc: PdgDocument, k: int, solve) -> int:
    g = doc.graph
    _check_vertex(doc, args.s, "s")
    _check_vertex(doc, args.t, "t")
    try:
        witness = solve()
    except TUnreachable:
        _report(args, "unreachable", None)
        return EXIT_NO
    except DidNotFinish:
        _report(args, "timeout", None)
        return EXIT_TIMEOUT
    if witness is None:
        extra = {"reason": "s equals t"} if args.s == args.t else {}
        _report(args, "no", None, **extra)
        return EXIT_OK
    if args.check:
        check = verify_witness(g, args.s, args.t, k, list(witness.path))
        if not check:
            print(f"error: witness failed re-verification: {check.report}", file=sys.stderr)
            return EXIT_NO
    _report(args, "yes", witness)
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = GeneratorSpec(args.kind, args.rows, args.cols, args.orient, args.keep, args.seed)
    try:
        inst = generate_instance(spec)
    except EmptyAfterThinning as exc:
        raise InputError(str(exc)) from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    comments = [
        f"{spec.kind} {spec.rows}x{spec.cols} orient={spec.orient} keep={spec.keep} seed={spec.seed}",
        f"suggested s={inst.s} t={inst.t}",
    ]
    comments += [f"at {v} {x:g} {y:g}" for v, (x, y) in enumerate(inst.coords)]
    _write(args.output, emit_pdg(inst.graph, comments))
    if args.output != "-":
        print(f"wrote {args.output}: n={inst.graph.vertex_count} arcs={inst.graph.arc_count} "
              f"s={inst.s} t={inst.t}")
    return EXIT_OK


def cmd_detour(args) -> int:
    doc = _load(args.input)
    return _answer(args, doc, 1, lambda: directed_detour(doc.graph, args.s, args.t, jobs=args.jobs))


def cmd_long_detour(args) -> int:
    doc = _load(args.input)
    if args.k < 1:
        raise InputError("-k must be at least 1")
    if not 0 < args.delta < 1:
        raise InputError("--delta must lie in (0, 1)")

    def solve():
        return long_detour(
            doc.graph, args.s, args.t, args.k, args.mode,
            seed=args.seed, delta=args.delta, budget_ms=args.budget_ms, jobs=args.jobs,
        )

    return _answer(args, doc, args.k, solve)


def cmd_verify(args) -> int:
    doc = _load(args.input)
    path = _vertex_list(args.path)
    _check_vertex(doc, args.s, "s")
    _check_vertex(doc, args.t, "t")
    result = verify_witness(doc.graph, args.s, args.t, args.k, path)
    if args.json:
        print(json.dumps({"verdict": "yes" if result else "no", "report": result.report}))
    else:
        print("yes" if result else "no")
        print(f"report: {result.report}")
    return EXIT_OK if result else EXIT_NO


def cmd_faces(args) -> int:
    g = _load(args.input).graph
    faces = g.faces
    rows = [
        {
            "id": f.id,
            "length": len(f.darts),
            "simple": f.is_simple,
            "outer": f.id == g.outer_face,
            "vertices": list(f.vertices),
        }
        for f in faces
    ]
    summary = {
        "vertices": g.vertex_count,
        "arcs": g.arc_count,
        "faces": len(faces),
        "components": len(weak_components(g)),
        "euler_characteristic": euler_characteristic(g),
        "euler_ok": satisfies_euler(g),
    }
    if args.json:
        print(json.dumps({"summary": summary, "faces": rows}))
        return EXIT_OK
    print(" ".join(f"{k}={v}" for k, v in summary.items()))
    for r in rows:
        tag = " outer" if r["outer"] else ""
        simple = "simple" if r["simple"] else "non-simple"
        print(f"face {r['id']}: length {r['length']} {simple}{tag}: "
              + " ".join(map(str, r["vertices"])))
    return EXIT_OK


def cmd_draw(args) -> int:
    doc = _load(args.input)
    path = _vertex_list(args.path) if args.path else []
    for v in path:
        _check_vertex(doc, v, "-path entry")
    if args.output.endswith(".dot"):
        text = render_dot(doc.graph, path)
    else:
        text = render_svg(doc.graph, doc.coordinates(), path)
    _write(args.output, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pdetour", description="Detours in plane directed graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a grid instance")
    p.add_argument("--kind", choices=("grid", "thinned-grid"), default="grid")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--orient", choices=("right-down", "random", "bidirected"), default="right-down")
    p.add_argument("--keep", type=float, default=1.0, help="arc keep probability (thinned-grid)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_gen)

    def query(p: argparse.ArgumentParser) -> None:
        p.add_argument("-i", "--input", required=True)
        p.add_argument("-s", type=int, required=True)
        p.add_argument("-t", type=int, required=True)
        p.add_argument("--json", action="store_true")

    def solver(p: argparse.ArgumentParser) -> None:
        query(p)
        p.add_argument("--witness", action="store_true", help="print the path")
        p.add_argument("--check", action="store_true", help="re-verify the witness first")
        p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("detour", help="is there an s->t path longer than dist(s, t)?")
    solver(p)
    p.set_defaults(func=cmd_detour)

    p = sub.add_parser("long-detour", help="is there an s->t path of length >= dist(s, t) + k?")
    solver(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--mode", choices=("mc", "det"), default="det")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--delta", type=float, default=DEFAULT_DELTA)
    p.add_argument("--budget-ms", type=float, default=None)
    p.set_defaults(func=cmd_long_detour)

    p = sub.add_parser("verify", help="check a claimed witness")
    query(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--path", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("faces", help="face census of an embedding")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("draw", help="write an SVG (or .dot) picture")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--path", default=None)
    p.set_defaults(func=cmd_draw)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
