"""Hierarchical vertex names.

Vertices of iterated cone-layer constructions keep a structured name so
that a certificate mentioning a vertex can be traced back through every
iteration that produced it.  Three shapes exist:

* ``Base(tag)``      -- a seed-graph vertex,
* ``Level(parent, i)`` -- copy ``i`` of ``parent`` in one iteration,
* ``Apex(depth)``    -- the apex vertex ``z`` added by that iteration.

Rendered form: ``Base("u") -> "u"``, ``Level(Base("u"), 0) -> "u.0"``,
``Level(Level(Base("u"), 0), 2) -> "(u.0).2"``, ``Apex(d) -> "z"``.
Within a single graph a bare ``"z"`` is unambiguous because apexes of
earlier iterations are always wrapped in a ``Level``.  Parsing a
rendered name recovers the full structure except the apex depth, which
is bookkeeping only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

VertexName = Union["Base", "Level", "Apex"]


@dataclass(frozen=True)
class Base:
    tag: str

    def __post_init__(self):
        if not self.tag or any(ch in self.tag for ch in "().,"):
            raise ValueError(f"invalid base tag {self.tag!r}")

    def __str__(self):
        return self.tag


@dataclass(frozen=True)
class Level:
    parent: VertexName
    index: int

    def __str__(self):
        inner = str(self.parent)
        if isinstance(self.parent, Level):
            inner = f"({inner})"
        return f"{inner}.{self.index}"


@dataclass(frozen=True)
class Apex:
    depth: int = 0

    def __str__(self):
        return "z"


def max_apex_depth(name: VertexName) -> int:
    if isinstance(name, Apex):
        return name.depth
    if isinstance(name, Level):
        return max_apex_depth(name.parent)
    return 0


def parse_name(text: str) -> VertexName:
    """Parse a rendered vertex name back into its structured form."""
    name, pos = _parse(text, 0)
    if pos != len(text):
        raise ValueError(f"trailing characters in vertex name {text!r}")
    return name


def _parse(text: str, pos: int) -> tuple[VertexName, int]:
    if pos < len(text) and text[pos] == "(":
        name, pos = _parse(text, pos + 1)
        if pos >= len(text) or text[pos] != ")":
            raise ValueError(f"unbalanced parentheses in {text!r}")
        pos += 1
    else:
        start = pos
        while pos < len(text) and text[pos] not in "().,":
            pos += 1
        tag = text[start:pos]
        if not tag:
            raise ValueError(f"empty name component in {text!r}")
        name = Apex(0) if tag == "z" else Base(tag)
    while pos < len(text) and text[pos] == ".":
        start = pos = pos + 1
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise ValueError(f"missing level index in {text!r}")
        name = Level(name, int(text[start:pos]))
    return name, pos
