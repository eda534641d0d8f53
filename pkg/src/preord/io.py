"""Flat-file formats and DOT export.

Object files are JSON with fields n (size), pairs (non-diagonal related
pairs) and mode ("strict" keeps the pairs as given, "close" takes the
reflexive-transitive closure).  Morphism files carry a single "map"
array and are interpreted against explicitly supplied endpoints.
`save_object` always emits canonical strict-mode text, so save o load
and load o save are identities on canonical input.
"""

from __future__ import annotations

import json

from .category import Morph, PreObj, make_object
from .decompose import quotient_poset, symmetric_core
from .errors import ParseError, ValidationError
from .relations import Partition
from .topology import components

__all__ = ["save_object", "load_object", "load_morphism", "export_dot"]

_PALETTE = (
    "lightblue", "lightpink", "palegreen", "khaki",
    "plum", "lightsalmon", "paleturquoise", "wheat",
)


def save_object(a: PreObj) -> str:
    """Canonical single-line JSON for an object; diagonal pairs omitted."""
    pairs = sorted(a.rel.pairs())
    body = {"n": a.n, "pairs": [list(p) for p in pairs], "mode": "strict"}
    return json.dumps(body, separators=(", ", ": "))


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _parse_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(
            f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from e


def load_object(text: str) -> PreObj:
    """Parse an object file; errors name the violated invariant."""
    data = _parse_json(text)
    if not isinstance(data, dict):
        raise ValidationError("object file must be a JSON object")
    missing = {"n", "pairs", "mode"} - set(data)
    if missing:
        raise ValidationError(f"object file missing fields: {sorted(missing)}")
    n = data["n"]
    if not _is_int(n) or n < 1:
        raise ValidationError("field 'n' must be an integer >= 1")
    if data["mode"] not in ("strict", "close"):
        raise ValidationError("field 'mode' must be 'strict' or 'close'")
    pairs = data["pairs"]
    if not isinstance(pairs, list):
        raise ValidationError("field 'pairs' must be a list")
    cleaned = []
    for p in pairs:
        if not isinstance(p, list) or len(p) != 2 or not all(map(_is_int, p)):
            raise ValidationError(f"pair {p!r} must be a two-integer list")
        if p[0] == p[1]:
            raise ValidationError(f"diagonal pair {p!r} must not be listed")
        cleaned.append((p[0], p[1]))
    return make_object(n, cleaned, mode=data["mode"])


def load_morphism(text: str, dom: PreObj, cod: PreObj) -> Morph:
    """Parse a morphism file against explicit endpoints."""
    data = _parse_json(text)
    if not isinstance(data, dict) or "map" not in data:
        raise ValidationError("morphism file must be a JSON object with a 'map' field")
    m = data["map"]
    if not isinstance(m, list) or not all(map(_is_int, m)):
        raise ValidationError("field 'map' must be a list of integers")
    return Morph(dom, cod, tuple(m))


# ----------------------------------------------------------------------
# DOT export

def _hasse_edges(q: PreObj) -> list[tuple[int, int]]:
    strict = {(a, b) for a, b in q.rel.pairs()}
    out = []
    for a, b in sorted(strict):
        if not any((a, m) in strict and (m, b) in strict for m in range(q.n)):
            out.append((a, b))
    return out


def export_dot(a: PreObj, hasse: bool = False, color_components: bool = False) -> str:
    """Graphviz text: one arrow per non-reflexive related pair.

    hasse renders the quotient poset's covering relation instead (block
    labels list their members); color_components fills nodes per
    connected component.
    """
    if hasse:
        q, _ = quotient_poset(a)
        part_a = components(a)
        blocks = Partition.from_equivalence(symmetric_core(a)).blocks
        names = [str(blk[0]) for blk in blocks]
        labels = ["{" + ",".join(str(x) for x in blk) + "}" if len(blk) > 1
                  else str(blk[0]) for blk in blocks]
        comps = [part_a.class_of[blk[0]] for blk in blocks]
        edges = [(names[i], names[j]) for i, j in _hasse_edges(q)]
    else:
        names = [str(i) for i in range(a.n)]
        labels = names
        comps = list(components(a).class_of)
        edges = [(names[i], names[j]) for i, j in sorted(a.rel.pairs())]
    lines = ["digraph preord {"]
    for name, label, comp in zip(names, labels, comps):
        attrs = [f'label="{label}"']
        if color_components:
            attrs.append("style=filled")
            attrs.append(f'fillcolor="{_PALETTE[comp % len(_PALETTE)]}"')
        lines.append(f'  {name} [{", ".join(attrs)}];')
    for u, v in edges:
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
