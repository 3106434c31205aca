"""Cycle notation and the group spec text format.

Cycle notation is 1-based: ``"(1 2 3)(4 5)"``; ``"()"`` is the identity.
A group spec file looks like::

    # comment
    degree 6
    name C6-regular
    gen (1 2 3 4 5 6)

``degree`` comes first. ``name`` is optional. Each ``gen`` line holds one
generator; the text after ``gen`` is kept verbatim so files round-trip.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .errors import CycleSyntaxError
from .perm import PermGroup, Permutation

_CYCLE = re.compile(r"\(\s*(\d+(?:\s+\d+)*)?\s*\)")


def parse_cycles(s, degree):
    """Parse 1-based cycle notation into a degree-``degree`` permutation."""
    text = s.strip()
    if not text:
        raise CycleSyntaxError("empty cycle string; write () for the identity")
    cycles = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _CYCLE.match(text, pos)
        if m is None:
            raise CycleSyntaxError(f"bad cycle syntax at column {pos + 1}: {s!r}")
        if m.group(1):
            cycles.append([int(a) for a in m.group(1).split()])
        pos = m.end()
    seen = set()
    for cycle in cycles:
        for a in cycle:
            if not 1 <= a <= degree:
                raise CycleSyntaxError(f"point {a} out of range 1..{degree}")
            if a in seen:
                raise CycleSyntaxError(f"repeated point {a} in {s!r}")
            seen.add(a)
    return Permutation.from_cycles(degree, [[a - 1 for a in c] for c in cycles])


def emit_cycles(p):
    body = "".join("(" + " ".join(str(a + 1) for a in c) + ")" for c in p.cycles())
    return body or "()"


@dataclass(frozen=True)
class GroupSpec:
    name: str
    degree: int
    generators: tuple

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if self.degree < 1:
            raise CycleSyntaxError("degree must be positive")

    def permutations(self):
        return [parse_cycles(g, self.degree) for g in self.generators]

    def group(self):
        return PermGroup(self.degree, self.permutations())

    @classmethod
    def from_group(cls, name, G):
        return cls(name, G.degree, tuple(emit_cycles(g) for g in G.generators))


def emit_spec(spec):
    lines = [f"degree {spec.degree}"]
    if spec.name:
        lines.append(f"name {spec.name}")
    lines += [f"gen {g}" for g in spec.generators]
    return "\n".join(lines) + "\n"


def parse_spec(text, default_name=""):
    degree = None
    name = default_name
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "degree":
            if degree is not None:
                raise CycleSyntaxError(f"line {lineno}: degree given twice")
            if not rest.isdigit() or int(rest) < 1:
                raise CycleSyntaxError(f"line {lineno}: bad degree {rest!r}")
            degree = int(rest)
        elif degree is None:
            raise CycleSyntaxError(f"line {lineno}: 'degree N' must come first")
        elif key == "name":
            name = rest
        elif key == "gen":
            parse_cycles(rest, degree)
            gens.append(rest)
        else:
            raise CycleSyntaxError(f"line {lineno}: unknown record {key!r}")
    if degree is None:
        raise CycleSyntaxError("missing 'degree N' line")
    return GroupSpec(name, degree, tuple(gens))


def load_spec(path):
    path = Path(path)
    return parse_spec(path.read_text(encoding="utf-8"), default_name=path.stem)


def save_spec(spec, path):
    Path(path).write_text(emit_spec(spec), encoding="utf-8")
