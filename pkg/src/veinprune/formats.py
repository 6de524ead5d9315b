"""Reading and writing posets: relation text, canonical JSON, and DOT.

Text format, one statement per line:

    # comment, runs to end of line
    a < b      declares the relation a < b (covers or not)
    c          declares c as an element with no stated relations

Whitespace around tokens is ignored. Labels are single tokens without
whitespace, '<', or '#'. Relations may be non-cover; loading takes the
transitive closure and emission always writes the cover pairs only.

JSON format: an object with keys "elements" (array of strings), "covers"
(array of two-element arrays), and an optional "name". Emission is
canonical: fixed key order and sorted arrays, so equal posets serialize
to equal bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ParseError
from .irreducibles import IrreducibilityProfile, profiles
from .poset import Poset


@dataclass
class PosetDocument:
    """A poset in transit: sorted elements, sorted cover pairs, metadata."""

    elements: list[str]
    covers: list[tuple[str, str]]
    name: str | None = None
    comment: str | None = None

    def to_poset(self) -> Poset:
        return Poset.from_relations(self.elements, self.covers)

    @classmethod
    def from_poset(cls, p: Poset, name: str | None = None,
                   comment: str | None = None) -> PosetDocument:
        return cls(elements=sorted(p.labels),
                   covers=[tuple(pair) for pair in p.covers],
                   name=name, comment=comment)


def _canonical(labels: list[str], pairs: list[tuple[str, str]],
               name: str | None = None,
               comment: str | None = None) -> PosetDocument:
    # building the poset validates the input and reduces to covers
    poset = Poset.from_relations(labels, pairs)
    return PosetDocument.from_poset(poset, name=name, comment=comment)


def _token_ok(label: str) -> bool:
    return (bool(label) and "<" not in label and "#" not in label
            and not any(ch.isspace() for ch in label))


def parse_text(text: str) -> PosetDocument:
    """Parse the relation text format; see the module docstring.

    Raises ParseError with a line number on malformed lines and
    CycleDetected when the declared relation is cyclic.
    """
    labels: dict[str, None] = {}
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "<" in line:
            sides = [side.strip() for side in line.split("<")]
            if len(sides) != 2:
                raise ParseError("expected a single relation 'A < B'", lineno)
            a, b = sides
            if not _token_ok(a) or not _token_ok(b):
                raise ParseError(f"bad label in relation {line!r}", lineno)
            labels.setdefault(a)
            labels.setdefault(b)
            pairs.append((a, b))
        else:
            if not _token_ok(line):
                raise ParseError(
                    f"an element declaration must be a single token, "
                    f"got {line!r}", lineno)
            labels.setdefault(line)
    return _canonical(list(labels), pairs)


def emit_text(doc: PosetDocument) -> str:
    """Canonical text form: isolated elements, then sorted cover lines."""
    for label in doc.elements:
        if not _token_ok(label):
            raise ParseError(
                f"label {label!r} is not representable in the text format")
    lines = []
    if doc.name:
        lines.append(f"# {doc.name}")
    if doc.comment:
        lines.append(f"# {doc.comment}")
    touched = {lab for pair in doc.covers for lab in pair}
    for label in sorted(doc.elements):
        if label not in touched:
            lines.append(label)
    for a, b in sorted(doc.covers):
        lines.append(f"{a} < {b}")
    return "\n".join(lines) + "\n"


def parse_json(text: str) -> PosetDocument:
    """Parse the JSON poset format; schema failures raise ParseError."""
    try:
        obj = json.loads(text)
    except ValueError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ParseError("the top level must be an object")
    extra = set(obj) - {"elements", "covers", "name"}
    if extra:
        raise ParseError(f"unknown keys: {sorted(extra)}")
    if "elements" not in obj or "covers" not in obj:
        raise ParseError("both 'elements' and 'covers' are required")
    elements = obj["elements"]
    if (not isinstance(elements, list)
            or any(not isinstance(e, str) or not e for e in elements)):
        raise ParseError("'elements' must be an array of nonempty strings")
    if len(set(elements)) != len(elements):
        raise ParseError("'elements' contains duplicates")
    known = set(elements)
    if not isinstance(obj["covers"], list):
        raise ParseError("'covers' must be an array of pairs")
    covers: list[tuple[str, str]] = []
    for entry in obj["covers"]:
        if (not isinstance(entry, list) or len(entry) != 2
                or any(not isinstance(e, str) for e in entry)):
            raise ParseError("every cover must be a two-element string array")
        a, b = entry
        if a not in known:
            raise ParseError(f"unknown label {a!r} in covers")
        if b not in known:
            raise ParseError(f"unknown label {b!r} in covers")
        covers.append((a, b))
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("'name' must be a string")
    return _canonical(list(elements), covers, name=name)


def emit_json(doc: PosetDocument) -> str:
    """Canonical JSON: fixed key order, sorted arrays, trailing newline."""
    payload: dict = {}
    if doc.name is not None:
        payload["name"] = doc.name
    payload["elements"] = sorted(doc.elements)
    payload["covers"] = [list(pair) for pair in sorted(doc.covers)]
    return json.dumps(payload, indent=2) + "\n"


def load_document(text: str) -> PosetDocument:
    """Parse either format.

    A leading brace suggests JSON, but labels like "{}" are legal in the
    text format too, so the brace alone is not decisive: only a document
    that actually parses as JSON is treated as one. Valid JSON with a bad
    schema still fails as JSON.
    """
    if text.lstrip().startswith("{"):
        try:
            json.loads(text)
        except ValueError:
            return parse_text(text)
        return parse_json(text)
    return parse_text(text)


def _dot_quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(p: Poset,
             highlight: dict[str, IrreducibilityProfile] | None = None) -> str:
    """DOT digraph of the cover relation, drawn bottom to top.

    Elements are ranked by longest-path height. Irreducible elements are
    filled black, coirreducible elements get a double ring, and doubly
    irreducible elements get both. Output is byte deterministic.
    """
    if highlight is None:
        highlight = profiles(p)
    heights = p.heights()
    lines = ["digraph poset {", "  rankdir=BT;", "  node [shape=circle];"]
    by_level: dict[int, list[str]] = {}
    for label in p.labels:
        by_level.setdefault(heights[label], []).append(label)
    for level in sorted(by_level):
        row = " ".join(f"{_dot_quote(lab)};" for lab in sorted(by_level[level]))
        lines.append(f"  {{ rank=same; {row} }}")
    for label in p.labels:
        entry = highlight.get(label)
        attrs = []
        if entry is not None and entry.irreducible:
            attrs.append("style=filled, fillcolor=black, fontcolor=white")
        if entry is not None and entry.coirreducible:
            attrs.append("peripheries=2")
        if attrs:
            lines.append(f"  {_dot_quote(label)} [{', '.join(attrs)}];")
    for a, b in p.covers:
        lines.append(f"  {_dot_quote(a)} -> {_dot_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
