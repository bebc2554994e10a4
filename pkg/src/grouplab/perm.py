"""Permutations on the points ``1..n`` and cycle-notation text conversion.

Points are 0-based internally and 1-based in every text format.  Products are
read left to right: ``compose(f, g)`` applies ``f`` first, then ``g``, so
``(f * g)(x) == g(f(x))``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce

__all__ = [
    "Permutation",
    "CycleParseError",
    "identity",
    "compose",
    "inverse",
    "parse_cycles",
    "format_cycles",
    "element_order",
]


class CycleParseError(ValueError):
    """Malformed cycle-notation text."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} (at column {position + 1} of {text!r})")


@dataclass(frozen=True, slots=True)
class Permutation:
    """Immutable permutation stored as its image tuple (0-based)."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if not images:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a permutation of 0..{len(images) - 1}")
        object.__setattr__(self, "images", images)

    @classmethod
    def from_one_based(cls, images) -> Permutation:
        return cls(tuple(int(x) - 1 for x in images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def one_based(self) -> list[int]:
        return [x + 1 for x in self.images]

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        return self.images[point - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        result = identity(self.degree)
        base = self if k >= 0 else inverse(self)
        k = abs(k)
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles in canonical order, as 1-based point tuples."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cycle = []
            x = start
            while x not in seen:
                seen.add(x)
                cycle.append(x + 1)
                x = self.images[x]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> list[int]:
        return sorted((len(c) for c in self.cycles()), reverse=True)

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


def identity(degree: int) -> Permutation:
    return Permutation(tuple(range(degree)))


def compose(f: Permutation, g: Permutation) -> Permutation:
    """Return ``h`` with ``h(x) = g(f(x))``."""
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    gi = g.images
    return Permutation(tuple(gi[x] for x in f.images))


def inverse(f: Permutation) -> Permutation:
    inv = [0] * f.degree
    for i, x in enumerate(f.images):
        inv[x] = i
    return Permutation(tuple(inv))


def format_cycles(f: Permutation) -> str:
    """Canonical cycle notation: fixed points dropped, ``()`` for the identity.

    Cycles start at their smallest point and are sorted by it, so equal
    permutations always format to equal strings.
    """
    cycles = f.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\d+)|(\S))")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation such as ``"(1 2 3)(4 5)"`` or ``"()"``.

    Cycles are multiplied as disjoint cycles; a point may occur only once.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    images = list(range(degree))
    seen: set[int] = set()
    stripped = text.strip()
    if not stripped:
        raise CycleParseError("empty permutation text", text, 0)

    pos = 0
    cycle: list[int] | None = None
    n_cycles = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace is left
            break
        tok_start = m.start(m.lastindex)
        pos = m.end()
        if m.group(1):
            if cycle is not None:
                raise CycleParseError("nested '('", text, tok_start)
            cycle = []
        elif m.group(2):
            if cycle is None:
                raise CycleParseError("unmatched ')'", text, tok_start)
            if len(cycle) == 0 and (n_cycles or text[pos:].strip()):
                raise CycleParseError("empty cycle", text, tok_start)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
            n_cycles += 1
            cycle = None
        elif m.group(3):
            if cycle is None:
                raise CycleParseError("point outside of a cycle", text, tok_start)
            point = int(m.group(3))
            if not 1 <= point <= degree:
                raise CycleParseError(f"point {point} out of range 1..{degree}", text, tok_start)
            if point - 1 in seen:
                raise CycleParseError(f"point {point} repeated", text, tok_start)
            seen.add(point - 1)
            cycle.append(point - 1)
        else:
            raise CycleParseError(f"unexpected character {m.group(4)!r}", text, tok_start)
    if cycle is not None:
        raise CycleParseError("unclosed '('", text, len(text))
    return Permutation(tuple(images))


def element_order(f: Permutation) -> int:
    """Least k >= 1 with f**k the identity (lcm of the cycle lengths)."""
    return reduce(math.lcm, (len(c) for c in f.cycles()), 1)
