"""Command line front end and the pipeline report.

    obforge validate FILE
    obforge page FILE [--json PATH|-]
    obforge monodromy FILE
    obforge compare FILE
    obforge render FILE --view diagram|front|region|page --svg PATH

Exit status is 1 for an invalid diagram, 2 for I/O failures and 3 when an
internal consistency check trips.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import openbook, region, ribbon, sbd
from .render import VIEWS, render_svg

__all__ = ["Pipeline", "run_pipeline", "report", "emit_json", "main"]

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Pipeline:
    diagram: sbd.SquareBridgeDiagram
    comps: tuple[sbd.OrientedComponent, ...]
    classical: sbd.ClassicalData
    decomp: region.RegionDecomposition
    fatgraph: ribbon.Fatgraph
    link: tuple[ribbon.SkeletonCycle, ...]
    book: openbook.OpenBookPresentation
    comparison: openbook.TorusComparison


def run_pipeline(
    d: sbd.SquareBridgeDiagram, *, merge: bool = True, bridge: bool = True, surgery: bool = True
) -> Pipeline:
    comps = sbd.components(d)
    cd = sbd.classical(d, comps)
    spec = openbook.surgery_spec(d) if surgery else openbook.SurgerySpec()
    decomp = region.decomposition(d, bridge=bridge, merge_rects=merge)
    fg = ribbon.build_skeleton(decomp)
    link = ribbon.embed_link(d, fg, comps)
    book = openbook.presentation(decomp, fg, d)
    if spec:
        book = openbook.apply_surgery(book, spec, link)
    cmp = openbook.compare_torus(d, book.page)
    return Pipeline(d, tuple(comps), cd, decomp, fg, tuple(link), book, cmp)


def report(run: Pipeline) -> dict:
    d, dec, st = run.diagram, run.decomp, run.book.page
    return {
        "obforge": SCHEMA_VERSION,
        "diagram": {
            "p": d.p,
            "q": d.q,
            "components": len(run.comps),
            "tb": list(run.classical.tb),
            "writhe": list(run.classical.writhe),
            "left_cusps": list(run.classical.left_cusps),
            "surgery": [[c, k] for c, k in d.surgery],
        },
        "decomposition": {
            "N": dec.N,
            "unmerged_N": dec.unmerged_count,
            "order": [r.as_list() for r in dec.rectangles],
            "bridges": [{"rect": b.rect.as_list(), "joins": list(b.joins)} for b in dec.bridges],
            "merges": len(dec.merges),
            "merge_records": [
                {"left": m.left.as_list(), "right": m.right.as_list(), "col": m.col, "pass": m.pass_no}
                for m in dec.merges
            ],
        },
        "page": {
            "chi": st.euler,
            "boundary": st.boundary,
            "genus": st.genus,
            "disks": st.disks,
            "bands": st.bands,
            "kappa": st.kappa,
        },
        "word": [t.as_dict() for t in run.book.word],
        "comparison": run.comparison.as_dict(),
        "sg_upper_bound": openbook.sg_bound(run.book),
    }


def emit_json(doc: dict) -> str:
    return json.dumps(doc, separators=(",", ":")) + "\n"


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _word_lines(run: Pipeline) -> list[str]:
    out = []
    for k, t in enumerate(run.book.word, start=1):
        corners = " ".join(f"({r},{c})" for r, c in t.curve.corners)
        out.append(f"{k:3d}  t_{t.curve.label}^{t.exponent:+d}  {corners}")
    return out


def _cmd_validate(d: sbd.SquareBridgeDiagram, args) -> list[str]:
    cd = sbd.classical(d)
    comps = sbd.components(d)
    lines = [f"valid square bridge diagram: p={d.p} q={d.q} components={len(comps)}"]
    for comp in comps:
        k = comp.id - 1
        lines.append(
            f"component {comp.id}: corners={len(comp.corners)} writhe={cd.writhe[k]} "
            f"left_cusps={cd.left_cusps[k]} tb={cd.tb[k]}"
        )
    for a, b, lk in cd.linking:
        lines.append(f"linking({a},{b})={lk}")
    openbook.surgery_spec(d)
    return lines


def _cmd_page(run: Pipeline, args) -> list[str]:
    st = run.book.page
    return [f"chi={st.euler} boundary={st.boundary} genus={st.genus}"]


def _cmd_monodromy(run: Pipeline, args) -> list[str]:
    return [f"word length {len(run.book.word)}"] + _word_lines(run)


def _cmd_compare(run: Pipeline, args) -> list[str]:
    c = run.comparison
    rel = "<" if c.strict else ">="
    return [
        f"p={c.p} q={c.q} kappa={c.kappa}",
        f"genus={c.genus} {rel} torus_genus={c.torus_genus}",
        f"pq-kappa={c.missing_bands} pq-kappa-p={c.slack}",
    ]


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="obforge", description="Open books from square bridge diagrams.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, text in (
        ("validate", "check the diagram and print classical invariants"),
        ("page", "print chi, boundary components and genus of the page"),
        ("monodromy", "print the Dehn twist word, surgery twists included"),
        ("compare", "compare the page genus with the torus page of the same grid"),
        ("render", "write an SVG view"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("input", help="sbd v1 document, or - for stdin")
        p.add_argument("--json", metavar="PATH", help="also write the pipeline report (- for stdout)")
        p.add_argument("--svg", metavar="PATH", help="write an SVG view (- for stdout)")
        p.add_argument("--view", choices=VIEWS, default="region")
        p.add_argument("--no-merge", action="store_true", help="keep every primitive rectangle")
        p.add_argument("--no-bridge", action="store_true", help="fail on split regions instead of bridging")
    return ap


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _run(args) -> int:
    d = sbd.parse(_read(args.input))
    if args.command == "validate" and not (args.json or args.svg):
        lines = _cmd_validate(d, args)
    else:
        run = run_pipeline(d, merge=not args.no_merge, bridge=not args.no_bridge)
        handler = {
            "validate": _cmd_validate,
            "page": _cmd_page,
            "monodromy": _cmd_monodromy,
            "compare": _cmd_compare,
            "render": lambda r, a: [],
        }[args.command]
        lines = handler(d if args.command == "validate" else run, args)
        if args.command == "render" and not args.svg:
            args.svg = "-"
        if args.json:
            _write(args.json, emit_json(report(run)))
        if args.svg:
            _write(args.svg, render_svg(args.view, d, run.decomp, run.fatgraph))
    for line in lines:
        print(line)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return _run(args)
    except (sbd.DiagramError, region.RegionError) as e:
        cond = getattr(e, "condition", "region")
        print(f"obforge: invalid diagram [condition {cond}]: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"obforge: I/O error: {e}", file=sys.stderr)
        return 2
    except AssertionError as e:
        print(f"obforge: internal check failed: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
