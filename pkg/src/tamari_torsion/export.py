"""JSON, DOT and plain-text renderings of posets of torsion classes."""

from __future__ import annotations

import json
from typing import Callable

from .poset import Poset
from .tamari import TiltingObject, decode, gen


def _vector_fields(a) -> dict:
    return {"a": list(a), "bracket": decode(a)}


def _tilting_fields(t: TiltingObject) -> dict:
    a = gen(t.summands, t.n)
    return {"summands": [[x.i, x.j] for x in t.summands], **_vector_fields(a)}


def element_fields(element) -> dict:
    if isinstance(element, TiltingObject):
        return _tilting_fields(element)
    return _vector_fields(element)


def to_json(poset: Poset, n: int) -> str:
    payload = {
        "n": n,
        "elements": [{"id": k, **element_fields(e)} for k, e in enumerate(poset.elements)],
        "covers": [list(c) for c in poset.covers],
    }
    return json.dumps(payload) + "\n"


def to_dot(poset: Poset, name: str = "tamari", label: Callable | None = None) -> str:
    label = label or (lambda e: element_fields(e)["bracket"])
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for k, e in enumerate(poset.elements):
        lines.append(f'  {k} [label="{label(e)}"];')
    for lo, hi in poset.covers:
        lines.append(f"  {lo} -> {hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_plain(poset: Poset) -> str:
    lines = []
    for k, e in enumerate(poset.elements):
        fields = element_fields(e)
        extra = f" {json.dumps(fields['summands'], separators=(',', ':'))}" if "summands" in fields else ""
        lines.append(f"{k} {','.join(map(str, fields['a']))} {fields['bracket']}{extra}")
    lines.extend(f"cover {lo} {hi}" for lo, hi in poset.covers)
    lines.append(f"elements={len(poset)} covers={len(poset.covers)}")
    return "\n".join(lines) + "\n"


def render(poset: Poset, n: int, fmt: str, name: str = "tamari") -> str:
    if fmt == "json":
        return to_json(poset, n)
    if fmt == "dot":
        return to_dot(poset, name=name)
    if fmt == "plain":
        return to_plain(poset)
    raise ValueError(f"unknown format {fmt!r}")
