"""On-disk formats: image documents and deterministic machine reports.

An image document is a single JSON object with keys ``n``, exactly one of
``t`` / ``k``, and ``points`` (a list of integer n-tuples).  Reports are
rendered as canonical JSON (sorted keys, fixed indentation, trailing
newline) so that identical inputs produce byte-identical output.
"""

import hashlib
import json
from pathlib import Path

from .errors import FormatError
from .lattice import AdjacencySpec, Point
from .neighborhood import DigitalImage


def _int_field(doc: dict, key: str, source: str) -> int:
    value = doc[key]
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise FormatError(f"{source}: {key!r} must be a positive integer, got {value!r}")
    return value


def parse_image(text: str, source: str = "<string>") -> DigitalImage:
    """Parse an image document; raises FormatError with position on bad input."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(
            f"{source}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(doc, dict):
        raise FormatError(f"{source}: expected a JSON object")
    unknown = set(doc) - {"n", "t", "k", "points"}
    if unknown:
        raise FormatError(f"{source}: unknown keys {sorted(unknown)}")
    for key in ("n", "points"):
        if key not in doc:
            raise FormatError(f"{source}: missing key {key!r}")
    if ("t" in doc) == ("k" in doc):
        raise FormatError(f"{source}: exactly one of 't' or 'k' must be given")
    n = _int_field(doc, "n", source)
    if "t" in doc:
        spec = AdjacencySpec(_int_field(doc, "t", source), n)
    else:
        spec = AdjacencySpec.from_k(_int_field(doc, "k", source), n)
    raw = doc["points"]
    if not isinstance(raw, list) or not raw:
        raise FormatError(f"{source}: 'points' must be a non-empty list")
    points: list[Point] = []
    seen = set()
    for idx, item in enumerate(raw):
        if not isinstance(item, list) or len(item) != n:
            raise FormatError(
                f"{source}: points[{idx}] must be a list of {n} integers, got {item!r}"
            )
        for c in item:
            if not isinstance(c, int) or isinstance(c, bool):
                raise FormatError(
                    f"{source}: points[{idx}] has non-integer coordinate {c!r}"
                )
        pt = tuple(item)
        if pt in seen:
            raise FormatError(f"{source}: duplicate point {list(pt)} at index {idx}")
        seen.add(pt)
        points.append(pt)
    return DigitalImage(frozenset(points), spec)


def load_image(path: str | Path) -> DigitalImage:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror or exc}") from None
    return parse_image(text, source=str(path))


def image_document(points, spec: AdjacencySpec) -> dict:
    """Build the JSON document for an image, preserving the given point order."""
    return {"n": spec.n, "k": spec.k, "points": [list(p) for p in points]}


def dump_image(points, spec: AdjacencySpec) -> str:
    return canonical_json(image_document(points, spec))


def canonical_json(obj) -> str:
    """Deterministic JSON rendering: sorted keys, two-space indent, newline end."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def file_digest(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()
