"""Command-line surface tying the library together.

Subcommands: ktable, neighborhood, connected, check-curve, search-curve,
product-analyze, examples.  Every command emits either a human-readable
text report or a canonical machine (JSON) report; machine reports are
byte-identical across runs on identical inputs.

Exit status 0 means a verdict was produced — including negative verdicts
such as "not connected", "not a simple closed curve", or "no compatible
adjacency"; verdicts are data.  Nonzero status is reserved for input and
usage errors.
"""

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .curves import (
    CurveSequence,
    admissible_length,
    canonical,
    canonical_names,
    length_rule_note,
    recognize_curve,
    search_curve,
    validate_curve,
)
from .errors import DigitalTopologyError, NotACurveError, ParameterError
from .formats import canonical_json, dump_image, file_digest, image_document, load_image
from .lattice import AdjacencySpec, k_value
from .neighborhood import components, is_connected, neighborhood
from .product import ProductReport, analyze


@dataclass
class _Output:
    command: str
    args_echo: dict
    result: dict
    text: list[str]
    inputs: dict = field(default_factory=dict)
    flags: list[str] = field(default_factory=list)


def _parse_point(text: str) -> tuple[int, ...]:
    cleaned = text.strip().strip("()")
    try:
        return tuple(int(part.strip()) for part in cleaned.split(","))
    except ValueError:
        raise ParameterError(
            f"cannot parse point {text!r}; expected comma-separated integers like 0,-1"
        ) from None


def _input_entry(path: str) -> dict:
    return {"path": path, "sha256": file_digest(path)}


def _spec_from_args(n: int, t: int | None, k: int | None) -> AdjacencySpec:
    if t is not None:
        return AdjacencySpec(t, n)
    return AdjacencySpec.from_k(k, n)


def _fmt_point(p) -> str:
    return "(" + ", ".join(str(c) for c in p) + ")"


def _cmd_ktable(args) -> _Output:
    if args.max_n < 1:
        raise ParameterError(f"--max-n must be at least 1, got {args.max_n}")
    rows = [[k_value(t, n) for t in range(1, n + 1)] for n in range(1, args.max_n + 1)]
    text = [f"neighbor counts k(t, n) for 1 <= t <= n <= {args.max_n}"]
    text += [f"n={n}: " + " ".join(str(k) for k in row) for n, row in enumerate(rows, 1)]
    return _Output(
        command="ktable",
        args_echo={"max_n": args.max_n},
        result={"max_n": args.max_n, "rows": rows},
        text=text,
    )


def _cmd_neighborhood(args) -> _Output:
    image = load_image(args.image)
    point = _parse_point(args.point)
    members = sorted(neighborhood(image, point, args.eps))
    text = [
        f"N_{image.spec.k}({_fmt_point(point)}, {args.eps}) has {len(members)} points:"
    ]
    text += [f"  {_fmt_point(p)}" for p in members]
    return _Output(
        command="neighborhood",
        args_echo={"image": args.image, "point": list(point), "eps": args.eps},
        inputs={"image": _input_entry(args.image)},
        result={
            "spec": {"t": image.spec.t, "n": image.spec.n, "k": image.spec.k},
            "point": list(point),
            "eps": args.eps,
            "size": len(members),
            "members": [list(p) for p in members],
        },
        text=text,
    )


def _cmd_connected(args) -> _Output:
    image = load_image(args.image)
    blocks = components(image)
    connected = len(blocks) == 1
    verdict = "connected" if connected else "not connected"
    plural = "component" if len(blocks) == 1 else "components"
    return _Output(
        command="connected",
        args_echo={"image": args.image},
        inputs={"image": _input_entry(args.image)},
        result={
            "connected": connected,
            "component_count": len(blocks),
            "components": [[list(p) for p in sorted(b)] for b in blocks],
        },
        text=[f"{verdict} ({len(blocks)} {plural})"],
    )


def _cmd_check_curve(args) -> _Output:
    image = load_image(args.image)
    echo = {"image": args.image}
    inputs = {"image": _input_entry(args.image)}
    try:
        seq = recognize_curve(image)
    except NotACurveError as exc:
        details = {k: list(v) if isinstance(v, tuple) else v for k, v in exc.details.items()}
        return _Output(
            command="check-curve",
            args_echo=echo,
            inputs=inputs,
            result={
                "is_curve": False,
                "diagnostic": {"kind": exc.kind, "message": str(exc), **details},
            },
            text=[f"not a simple closed curve: {exc}"],
        )
    text = [f"simple closed curve of length l={len(seq)} under {image.spec}:"]
    text += [f"  {_fmt_point(p)}" for p in seq.points]
    return _Output(
        command="check-curve",
        args_echo=echo,
        inputs=inputs,
        result={
            "is_curve": True,
            "l": len(seq),
            "spec": {"t": image.spec.t, "n": image.spec.n, "k": image.spec.k},
            "order": [list(p) for p in seq.points],
        },
        text=text,
    )


def _cmd_search_curve(args) -> _Output:
    spec = _spec_from_args(args.n, args.t, args.k)
    if args.l < 4:
        raise ParameterError(f"--l must be at least 4, got {args.l}")
    verdict = admissible_length(spec, args.l)
    flags = []
    note = length_rule_note(spec)
    if note:
        flags.append(note)
    found = search_curve(spec, args.l)
    result = {
        "spec": {"t": spec.t, "n": spec.n, "k": spec.k},
        "l": args.l,
        "box": [-args.l, args.l],
        "admissibility": verdict.value,
        "found": found is not None,
    }
    if found is None:
        result["note"] = (
            f"no curve of length {args.l} within the box [-{args.l}, {args.l}]^{spec.n}; "
            "bounded-box result, not a nonexistence proof"
        )
        text = [f"none in bounded box: {result['note']}"]
    else:
        result["curve"] = [list(p) for p in found.points]
        text = [f"found a curve of length l={args.l} under {spec}:"]
        text += [f"  {_fmt_point(p)}" for p in found.points]
    text.append(f"length rule verdict for l={args.l}: {verdict.value}")
    return _Output(
        command="search-curve",
        args_echo={"n": args.n, "t": args.t, "k": args.k, "l": args.l},
        result=result,
        text=text,
        flags=flags,
    )


def _witness_payload(cert) -> dict | None:
    if cert.witness is None:
        return None
    w = cert.witness
    return {"point": list(w.point), "neighbor": list(w.neighbor), "side": w.side.value}


def _report_payload(report: ProductReport) -> dict:
    prod = report.prod
    return {
        "dimension": prod.dimension,
        "product_size": len(prod),
        "point_order": "left-then-right",
        "left": image_document(sorted(prod.left.points), prod.left.spec),
        "right": image_document(sorted(prod.right.points), prod.right.spec),
        "outcomes": [
            {
                "t": o.t,
                "k": o.k,
                "c_compatible": o.c_compatible.holds,
                "c_witness": _witness_payload(o.c_compatible),
                "normal": o.normal.holds,
                "n_witness": _witness_payload(o.normal),
            }
            for o in report.outcomes
        ],
        "c_compatible": {"t": list(report.c_compatible_ts), "k": list(report.c_compatible_ks)},
        "normal": {"t": list(report.normal_ts), "k": list(report.normal_ks)},
    }


def _witness_text(label: str, cert) -> str:
    if cert.holds:
        return f"{label}: yes"
    w = cert.witness
    return (
        f"{label}: no (at {_fmt_point(w.point)}, neighbor {_fmt_point(w.neighbor)} "
        f"is {w.side.value})"
    )


def _cmd_product_analyze(args) -> _Output:
    left = load_image(args.left)
    right = load_image(args.right)
    report = analyze(left, right)
    payload = _report_payload(report)
    text = [
        f"product of {len(left)} x {len(right)} points in Z^{report.prod.dimension}"
    ]
    for o in report.outcomes:
        text.append(f"t={o.t} k={o.k}:")
        text.append("  " + _witness_text("C-compatible", o.c_compatible))
        text.append("  " + _witness_text("normal", o.normal))
    c_ks = ", ".join(str(k) for k in report.c_compatible_ks) or "none"
    n_ks = ", ".join(str(k) for k in report.normal_ks) or "none"
    text.append(f"C-compatible adjacencies: {c_ks}")
    text.append(f"normal adjacencies: {n_ks}")
    return _Output(
        command="product-analyze",
        args_echo={"left": args.left, "right": args.right},
        inputs={"left": _input_entry(args.left), "right": _input_entry(args.right)},
        result=payload,
        text=text,
        flags=["verdicts are specific to the given point sets (embedding-dependent)"],
    )


def _cmd_examples(args) -> _Output:
    names = [args.name] if args.name else list(canonical_names())
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    text = []
    for name in names:
        seq = canonical(name)
        fname = f"{name.lower()}.json"
        path = out_dir / fname
        path.write_text(dump_image(seq.points, seq.spec), encoding="utf-8")
        written.append({"name": name, "file": fname, "sha256": file_digest(path)})
        text.append(f"wrote {fname} ({name}, l={len(seq)}, {seq.spec})")
    return _Output(
        command="examples",
        args_echo={"name": args.name, "out_dir": args.out_dir},
        result={"written": written},
        text=text,
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="digitop",
        description="Digital topology on the integer lattice: adjacencies, "
        "neighborhoods, simple closed curves, and product certification.",
    )
    parser.add_argument("--version", action="version", version=f"digitop {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument(
            "--format", choices=("text", "machine"), default="text",
            help="output format (machine = canonical JSON report)",
        )
        p.add_argument("--out", help="write the report to this file instead of stdout")

    p = sub.add_parser("ktable", help="print the k(t, n) neighbor-count table")
    p.add_argument("--max-n", type=int, required=True, help="largest dimension n")
    p.set_defaults(handler=_cmd_ktable)
    add_common(p)

    p = sub.add_parser("neighborhood", help="subset-relative neighborhood of a point")
    p.add_argument("--image", required=True, help="image document (JSON)")
    p.add_argument("--point", required=True, help="center point, e.g. 0,0")
    p.add_argument("--eps", type=int, required=True, help="radius (positive integer)")
    p.set_defaults(handler=_cmd_neighborhood)
    add_common(p)

    p = sub.add_parser("connected", help="connectivity verdict and components")
    p.add_argument("--image", required=True)
    p.set_defaults(handler=_cmd_connected)
    add_common(p)

    p = sub.add_parser("check-curve", help="is the point set a simple closed curve?")
    p.add_argument("--image", required=True)
    p.set_defaults(handler=_cmd_check_curve)
    add_common(p)

    p = sub.add_parser("search-curve", help="search a bounded box for a curve")
    p.add_argument("--n", type=int, required=True, help="dimension")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--t", type=int, help="adjacency parameter t")
    group.add_argument("--k", type=int, help="adjacency neighbor count k")
    p.add_argument("--l", type=int, required=True, help="curve length")
    p.set_defaults(handler=_cmd_search_curve)
    add_common(p)

    p = sub.add_parser("product-analyze", help="certify product adjacencies for all t")
    p.add_argument("--left", required=True, help="left factor image document")
    p.add_argument("--right", required=True, help="right factor image document")
    p.set_defaults(handler=_cmd_product_analyze)
    add_common(p)

    p = sub.add_parser("examples", help="write the canonical curve documents")
    p.add_argument("--name", help="one canonical name (default: all)")
    p.add_argument("--out", dest="out_dir", default=".", help="output directory")
    p.add_argument(
        "--format", choices=("text", "machine"), default="text",
        help="output format (machine = canonical JSON report)",
    )
    p.set_defaults(handler=_cmd_examples, out=None)

    return parser


def _render(output: _Output, fmt: str) -> str:
    if fmt == "machine":
        return canonical_json(
            {
                "tool": "digitop",
                "version": __version__,
                "command": output.command,
                "args": output.args_echo,
                "inputs": output.inputs,
                "flags": output.flags,
                "result": output.result,
            }
        )
    lines = list(output.text)
    lines += [f"note: {flag}" for flag in output.flags]
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        output = args.handler(args)
    except DigitalTopologyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rendered = _render(output, args.format)
    if args.out:
        Path(args.out).write_text(rendered, encoding="utf-8")
    else:
        sys.stdout.write(rendered)
    return 0


if __name__ == "__main__":
    sys.exit(main())
