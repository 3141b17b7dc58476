"""The line-oriented poset text format.

    poset <name>
    elements: <space-separated labels>
    covers: a<b c<d ...

Blank lines and '#' comments are ignored; labels match [A-Za-z0-9_]+; the
covers line may be empty.  Parsing feeds from_covers, so cycles and unknown
labels are rejected.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .poset import Poset, from_covers

_LABEL = re.compile(r"^[A-Za-z0-9_]+$")


def parse_poset_file(text: str) -> tuple[str, Poset]:
    name = None
    labels: list[str] | None = None
    covers: list[tuple[str, str]] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if name is None:
            if not line.startswith("poset "):
                raise ParseError("expected 'poset <name>'", lineno, 1)
            name = line[len("poset "):].strip()
            if not _LABEL.match(name):
                raise ParseError(f"bad poset name {name!r}", lineno, 7)
            continue
        if labels is None:
            if not line.startswith("elements:"):
                raise ParseError("expected 'elements:' line", lineno, 1)
            labels = line[len("elements:"):].split()
            for col, lab in enumerate(labels):
                if not _LABEL.match(lab):
                    raise ParseError(f"bad label {lab!r}", lineno, col + 1)
            continue
        if covers is None:
            if not line.startswith("covers:"):
                raise ParseError("expected 'covers:' line", lineno, 1)
            covers = []
            for col, tok in enumerate(line[len("covers:"):].split()):
                if "<" not in tok:
                    raise ParseError(f"bad cover {tok!r}", lineno, col + 1)
                a, b = tok.split("<", 1)
                if not _LABEL.match(a) or not _LABEL.match(b):
                    raise ParseError(f"bad cover {tok!r}", lineno, col + 1)
                covers.append((a, b))
            continue
        raise ParseError(f"unexpected line {line!r}", lineno, 1)
    if name is None or labels is None or covers is None:
        raise ParseError("incomplete poset file", 0, 0)
    return name, from_covers(labels, covers)


def write_poset_file(name: str, p: Poset) -> str:
    labels = list(p.labels)
    if any(not _LABEL.match(lab) for lab in labels) or len(set(labels)) != len(labels):
        labels = [f"x{i}" for i in range(p.n)]
    lines = [f"poset {name}",
             "elements: " + " ".join(labels),
             "covers: " + " ".join(f"{labels[i]}<{labels[j]}" for i, j in p.covers())]
    return "\n".join(line.rstrip() for line in lines) + "\n"
