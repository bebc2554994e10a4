"""Named test groups, the ``.grp`` definition format, and the default suite.

A ``.grp`` file is line oriented and UTF-8::

    # comments run to end of line
    name: S3
    degree: 3
    gens: (1 2 3), (1 2)
    order: 6

Each ``name:`` line starts a new definition, so one file may hold a whole
suite.  ``order:`` is optional; when present the generated order must match.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .group import DEFAULT_ORDER_CAP, FiniteGroup, direct_product, generate
from .perm import CycleParseError, Permutation, format_cycles, parse_cycles

__all__ = [
    "GroupDef",
    "GroupFileError",
    "OrderMismatch",
    "order_cap",
    "cyclic",
    "dihedral",
    "symmetric",
    "alternating",
    "klein_four",
    "psl2",
    "pgl2",
    "parse_group_text",
    "load_group_file",
    "load_suite_file",
    "dump_group_defs",
    "build",
    "group_def",
    "default_suite",
    "preset",
    "PRESETS",
]


def order_cap() -> int:
    """Default order cap, overridable through ``GROUPLAB_ORDER_CAP``."""
    raw = os.environ.get("GROUPLAB_ORDER_CAP")
    return int(raw) if raw else DEFAULT_ORDER_CAP


class GroupFileError(ValueError):
    def __init__(self, message: str, line: int, column: int, source: str = "<text>"):
        self.line = line
        self.column = column
        self.source = source
        super().__init__(f"{source}:{line}:{column}: {message}")


class OrderMismatch(ValueError):
    def __init__(self, name: str, expected: int, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"{name}: expected order {expected}, got {got}")


@dataclass
class GroupDef:
    name: str
    degree: int
    generator_exprs: list[str] = field(default_factory=list)
    expected_order: int | None = None

    def generators(self) -> list[Permutation]:
        return [parse_cycles(s, self.degree) for s in self.generator_exprs]


# -- constructors -----------------------------------------------------------

def _cycle(points: Iterable[int], degree: int) -> Permutation:
    images = list(range(degree))
    pts = [p - 1 for p in points]
    for a, b in zip(pts, pts[1:] + pts[:1]):
        images[a] = b
    return Permutation(tuple(images))


def cyclic(n: int, cap: int | None = None) -> FiniteGroup:
    gens = [_cycle(range(1, n + 1), n)] if n > 1 else []
    return generate(n, gens, cap or order_cap(), name=f"C{n}")


def dihedral(two_n: int, cap: int | None = None) -> FiniteGroup:
    """Dihedral group of order ``two_n``: rotation ``(1 2 ... n)`` and a reflection fixing 1."""
    if two_n < 2 or two_n % 2:
        raise ValueError("dihedral order must be even and >= 2")
    n = two_n // 2
    name = f"D{two_n}"
    if n == 1:
        return generate(2, [_cycle([1, 2], 2)], cap or order_cap(), name=name)
    if n == 2:
        G = klein_four(cap)
        G.name = name
        return G
    rotation = _cycle(range(1, n + 1), n)
    images = [0] + [n - i for i in range(1, n)]
    return generate(n, [rotation, Permutation(tuple(images))], cap or order_cap(), name=name)


def symmetric(n: int, cap: int | None = None) -> FiniteGroup:
    if n <= 1:
        gens = []
    elif n == 2:
        gens = [_cycle([1, 2], 2)]
    else:
        gens = [_cycle(range(1, n + 1), n), _cycle([1, 2], n)]
    return generate(max(n, 1), gens, cap or order_cap(), name=f"S{n}")


def alternating(n: int, cap: int | None = None) -> FiniteGroup:
    """``(1 2 3)`` with ``(1 2 ... n)`` for odd ``n`` or ``(2 3 ... n)`` for even ``n``."""
    if n < 3:
        return generate(max(n, 1), [], cap or order_cap(), name=f"A{n}")
    if n == 3:
        gens = [_cycle([1, 2, 3], 3)]
    elif n % 2:
        gens = [_cycle([1, 2, 3], n), _cycle(range(1, n + 1), n)]
    else:
        gens = [_cycle([1, 2, 3], n), _cycle(range(2, n + 1), n)]
    return generate(n, gens, cap or order_cap(), name=f"A{n}")


def klein_four(cap: int | None = None) -> FiniteGroup:
    gens = [parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)]
    return generate(4, gens, cap or order_cap(), name="C2xC2")


def _moebius(p: int, a: int, b: int, c: int, d: int) -> Permutation:
    # points 1..p are the field elements 0..p-1, point p+1 is infinity
    images = []
    for x in range(p + 1):
        if x == p:
            y = p if c % p == 0 else a * pow(c, -1, p) % p
        else:
            den = (c * x + d) % p
            y = p if den == 0 else (a * x + b) * pow(den, -1, p) % p
        images.append(y)
    return Permutation(tuple(images))


def _primitive_root(p: int) -> int:
    for r in range(2, p):
        if len({pow(r, k, p) for k in range(1, p)}) == p - 1:
            return r
    return 1


def psl2(p: int, cap: int | None = None) -> FiniteGroup:
    """PSL(2, p) for an odd prime ``p``, acting on the projective line (p + 1 points)."""
    r = _primitive_root(p)
    gens = [_moebius(p, 1, 1, 0, 1), _moebius(p, r * r % p, 0, 0, 1), _moebius(p, 0, p - 1, 1, 0)]
    return generate(p + 1, gens, cap or order_cap(), name=f"PSL(2,{p})")


def pgl2(p: int, cap: int | None = None) -> FiniteGroup:
    """PGL(2, p) for an odd prime ``p``, acting on the projective line."""
    r = _primitive_root(p)
    gens = [_moebius(p, 1, 1, 0, 1), _moebius(p, r, 0, 0, 1), _moebius(p, 0, p - 1, 1, 0)]
    return generate(p + 1, gens, cap or order_cap(), name=f"PGL(2,{p})")


# -- the .grp format --------------------------------------------------------

_KEYS = ("name", "degree", "gens", "order")


def _split_gens(value: str, line_no: int, col0: int, source: str) -> list[tuple[str, int]]:
    out = []
    start = 0
    for part in value.split(","):
        stripped = part.strip()
        col = col0 + start + (len(part) - len(part.lstrip()))
        if not stripped:
            raise GroupFileError("empty generator expression", line_no, col + 1, source)
        out.append((stripped, col))
        start += len(part) + 1
    return out


def parse_group_text(text: str, source: str = "<text>") -> list[GroupDef]:
    """Parse one or more definitions; errors carry 1-based line and column."""
    defs: list[GroupDef] = []
    cur: dict | None = None

    def finish():
        if cur is None:
            return
        for key in ("degree", "gens"):
            if key not in cur:
                raise GroupFileError(f"definition {cur['name']!r} lacks '{key}:'",
                                     cur["_line"], 1, source)
        degree = cur["degree"]
        exprs = []
        for expr, (line_no, col) in cur["gens"]:
            try:
                parse_cycles(expr, degree)
            except CycleParseError as exc:
                raise GroupFileError(str(exc), line_no, col + exc.position + 1, source) from None
            exprs.append(expr)
        defs.append(GroupDef(cur["name"], degree, exprs, cur.get("order")))

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if ":" not in line:
            col = len(line) - len(line.lstrip()) + 1
            raise GroupFileError("expected 'key: value'", line_no, col, source)
        key_part, value = line.split(":", 1)
        key = key_part.strip().lower()
        key_col = len(key_part) - len(key_part.lstrip()) + 1
        value_col = len(key_part) + 1
        if key not in _KEYS:
            raise GroupFileError(f"unknown key {key!r}", line_no, key_col, source)
        if key == "name":
            finish()
            name = value.strip()
            if not name:
                raise GroupFileError("empty name", line_no, value_col + 1, source)
            cur = {"name": name, "_line": line_no}
            continue
        if cur is None:
            raise GroupFileError(f"'{key}:' before any 'name:'", line_no, key_col, source)
        if key in cur:
            raise GroupFileError(f"duplicate key {key!r}", line_no, key_col, source)
        if key in ("degree", "order"):
            try:
                num = int(value.strip())
            except ValueError:
                raise GroupFileError(f"{key} must be an integer", line_no, value_col + 1, source) from None
            if num < 1:
                raise GroupFileError(f"{key} must be >= 1", line_no, value_col + 1, source)
            cur[key] = num
        else:
            if not value.strip():
                cur["gens"] = []
            else:
                cur["gens"] = [(e, (line_no, c)) for e, c in _split_gens(value, line_no, value_col, source)]
        if key == "gens" and "degree" not in cur:
            raise GroupFileError("'gens:' must follow 'degree:'", line_no, key_col, source)
    finish()
    return defs


def load_suite_file(path) -> list[GroupDef]:
    path = Path(path)
    defs = parse_group_text(path.read_text(encoding="utf-8"), source=str(path))
    if not defs:
        raise GroupFileError("no group definitions found", 1, 1, str(path))
    return defs


def load_group_file(path) -> GroupDef:
    defs = load_suite_file(path)
    if len(defs) != 1:
        raise GroupFileError(f"expected one group definition, found {len(defs)}", 1, 1, str(path))
    return defs[0]


def dump_group_defs(defs: Iterable[GroupDef]) -> str:
    blocks = []
    for d in defs:
        lines = [f"name: {d.name}", f"degree: {d.degree}", "gens: " + ", ".join(d.generator_exprs)]
        if d.expected_order is not None:
            lines.append(f"order: {d.expected_order}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def build(gdef: GroupDef, cap: int | None = None) -> FiniteGroup:
    """Generate the group and validate ``expected_order``."""
    G = generate(gdef.degree, gdef.generators(), cap or order_cap(), name=gdef.name)
    if gdef.expected_order is not None and G.order != gdef.expected_order:
        raise OrderMismatch(gdef.name, gdef.expected_order, G.order)
    return G


def group_def(G: FiniteGroup, name: str | None = None) -> GroupDef:
    exprs = [format_cycles(g) for g in G.generators] or ["()"]
    return GroupDef(name or G.name or "G", G.degree, exprs, G.order)


# -- presets and the default suite -------------------------------------------

PSL27_GENS = ["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)", "(1 8)(2 7)(3 4)(5 6)"]


def _a5xc7() -> FiniteGroup:
    G = direct_product(alternating(5), cyclic(7), cap=10 ** 6, name="A5xC7")
    return G


def _suite_defs() -> list[GroupDef]:
    defs = []
    for n in range(1, 17):
        defs.append(GroupDef(f"C{n}", n, [format_cycles(_cycle(range(1, n + 1), n))], n))
    for two_n in range(6, 49, 2):
        n = two_n // 2
        rot = format_cycles(_cycle(range(1, n + 1), n))
        refl = format_cycles(Permutation(tuple([0] + [n - i for i in range(1, n)])))
        defs.append(GroupDef(f"D{two_n}", n, [rot, refl], two_n))
    for n in (3, 4, 5):
        defs.append(GroupDef(f"S{n}", n, [format_cycles(_cycle(range(1, n + 1), n)), f"(1 2)"],
                             math.factorial(n)))
    defs.append(GroupDef("A4", 4, ["(1 2 3)", "(2 3 4)"], 12))
    defs.append(GroupDef("A5", 5, ["(1 2 3)", "(1 2 3 4 5)"], 60))
    defs.append(GroupDef("A6", 6, ["(1 2 3)", "(2 3 4 5 6)"], 360))
    defs.append(GroupDef("C2xC2", 4, ["(1 2)(3 4)", "(1 3)(2 4)"], 4))
    defs.append(GroupDef("S3xS3", 6, ["(1 2 3)", "(1 2)", "(4 5 6)", "(4 5)"], 36))
    # built as a direct product so the generator text is never hand-transcribed
    a5xc7 = _a5xc7()
    defs.append(GroupDef("A5xC7", a5xc7.degree, [format_cycles(g) for g in a5xc7.generators], 420))
    defs.append(GroupDef("PSL(2,7)", 8, list(PSL27_GENS), 168))
    return defs


def default_suite() -> list[GroupDef]:
    """The verification corpus, sorted by name."""
    return sorted(_suite_defs(), key=lambda d: d.name)


def _extra_defs() -> list[GroupDef]:
    G = pgl2(7)
    return [GroupDef("PGL(2,7)", 8, [format_cycles(g) for g in G.generators], 336)]


PRESETS: dict[str, GroupDef] = {d.name: d for d in _suite_defs() + _extra_defs()}


def preset(name: str) -> GroupDef:
    try:
        return PRESETS[name]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; known: {', '.join(sorted(PRESETS))}") from None
