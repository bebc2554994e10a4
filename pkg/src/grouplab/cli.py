"""``grouplab`` command line: inspect a group, verify one operator, sweep a suite.

Exit codes: 0 when every check passed or was inapplicable, 1 when any
violation was found, 2 for usage and load errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .catalog import (GroupDef, GroupFileError, OrderMismatch, build, default_suite,
                      load_group_file, load_suite_file, order_cap, preset)
from .classify import factorize, sylow_system
from .group import OrderCapExceeded
from .lattice import (LatticeCapExceeded, enumerate_subgroups, frattini,
                      subgroup_conjugacy_classes)
from .theorems import THEOREMS, GroupVerification, group_is_nilpotent, group_is_solvable, run_theorem, verify_group

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_VIOLATION, EXIT_ERROR = 0, 1, 2


class LoadError(Exception):
    pass


def resolve_group(source: str) -> GroupDef:
    """A ``.grp`` file path or a preset name."""
    path = Path(source)
    if path.is_file():
        try:
            return load_group_file(path)
        except (GroupFileError, OSError) as exc:
            raise LoadError(str(exc)) from None
    try:
        return preset(source)
    except KeyError as exc:
        raise LoadError(f"{source!r} is neither a readable .grp file nor a preset "
                        f"({exc.args[0]})") from None


def _build(gdef: GroupDef, cap: int | None = None):
    try:
        G = build(gdef, cap)
        return G, enumerate_subgroups(G)
    except (OrderCapExceeded, LatticeCapExceeded, OrderMismatch, ValueError) as exc:
        raise LoadError(f"{gdef.name}: {exc}") from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


# -- inspect -----------------------------------------------------------------

def inspect_data(gdef: GroupDef) -> dict:
    G, L = _build(gdef)
    classes = subgroup_conjugacy_classes(L)
    max_bits = {M.bits for M in L.maximal}
    max_classes = [c for c in classes if c[0].bits in max_bits]
    sylows = sylow_system(G, L)
    return {
        "schema_version": SCHEMA_VERSION,
        "group_name": gdef.name,
        "degree": G.degree,
        "order": G.order,
        "factorization": [[p, e] for p, e in factorize(G.order)],
        "solvable": group_is_solvable(G, L),
        "nilpotent": group_is_nilpotent(G, L),
        "sylow": [{"prime": e.prime, "order": e.order, "conjugates": e.count,
                   "normal": e.is_normal} for e in sylows],
        "subgroups": len(L),
        "subgroup_classes": len(classes),
        "maximal_subgroups": len(L.maximal),
        "maximal_classes": [len(c) for c in max_classes],
        "frattini_order": frattini(L).order,
    }


def cmd_inspect(args) -> int:
    data = inspect_data(resolve_group(args.group))
    if args.json:
        print(_dump(data))
        return EXIT_OK
    fact = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in data["factorization"]) or "1"
    print(f"group            {data['group_name']} (degree {data['degree']})")
    print(f"order            {data['order']} = {fact}")
    print(f"solvable         {'yes' if data['solvable'] else 'no'}")
    print(f"nilpotent        {'yes' if data['nilpotent'] else 'no'}")
    print(f"subgroups        {data['subgroups']} in {data['subgroup_classes']} conjugacy classes")
    sizes = ", ".join(map(str, data["maximal_classes"]))
    print(f"maximal          {data['maximal_subgroups']} in {len(data['maximal_classes'])} "
          f"conjugacy classes" + (f" (sizes {sizes})" if sizes else ""))
    print(f"frattini order   {data['frattini_order']}")
    if data["sylow"]:
        print("sylow            prime  order  conjugates  normal")
        for row in data["sylow"]:
            print(f"                 {row['prime']:>5}  {row['order']:>5}  {row['conjugates']:>10}  "
                  f"{'yes' if row['normal'] else 'no'}")
    return EXIT_OK


# -- verify ------------------------------------------------------------------

def _report_lines(r: dict) -> list[str]:
    hyp = "satisfied" if r["hypothesis_satisfied"] else "not satisfied (informational)"
    lines = [
        f"[{r['theorem']}] family {r['family']} on {r['group_name']} (order {r['group_order']})",
        f"  hypothesis {r['hypothesis']}: {hyp}",
        f"  family size {r['family_size']}" + (" (vacuous)" if r["vacuous"] else ""),
        f"  intersection order {r['intersection_order']}, nilpotent "
        f"{'yes' if r['intersection_is_nilpotent'] else 'no'}",
        f"  frattini order {r['frattini_order']}, equal {'yes' if r['equals_frattini'] else 'no'}",
    ]
    lines += [f"  VIOLATION {v}" for v in r["violations"]]
    return lines


def cmd_verify(args) -> int:
    gdef = resolve_group(args.group)
    G, L = _build(gdef)
    timing = not args.no_timing
    if args.theorem == "all":
        result = verify_group(G, L)
        payload = {"schema_version": SCHEMA_VERSION, **result.to_dict(timing)}
        violations = result.violations
        reports = payload["reports"]
    else:
        report = run_theorem(G, L, args.theorem)
        reports = [report.to_dict(timing)]
        violations = report.violations
        payload = {"schema_version": SCHEMA_VERSION, "group_name": gdef.name,
                   "group_order": G.order, "reports": reports,
                   "violations_total": len(violations)}
    if args.json:
        print(_dump(payload))
    else:
        for r in reports:
            print("\n".join(_report_lines(r)))
        if args.theorem == "all":
            for name, items in payload["checks"].items():
                status = "ok" if not items else f"{len(items)} violation(s)"
                print(f"[check {name}] {status}")
                for v in items:
                    print(f"  VIOLATION {v}")
        print(f"violations: {len(violations)}")
    return EXIT_VIOLATION if violations else EXIT_OK


# -- sweep -------------------------------------------------------------------

@dataclass
class SweepSummary:
    suite_name: str
    groups_run: int = 0
    results: list[GroupVerification] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)
    errors: list[dict] = field(default_factory=list)
    wall_time_ms: float = 0.0

    @property
    def reports(self):
        return [r for g in self.results for r in g.reports]

    @property
    def violations_total(self) -> int:
        return sum(len(g.violations) for g in self.results)

    @property
    def exit_code(self) -> int:
        if self.violations_total:
            return EXIT_VIOLATION
        return EXIT_ERROR if self.errors else EXIT_OK

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "schema_version": SCHEMA_VERSION,
            "suite_name": self.suite_name,
            "groups_run": self.groups_run,
            "groups": [g.to_dict(timing) for g in self.results],
            "skipped": self.skipped,
            "errors": self.errors,
            "violations_total": self.violations_total,
        }
        if timing:
            d["wall_time_ms"] = round(self.wall_time_ms, 3)
        return d


def sweep_one(gdef: GroupDef, cap: int):
    """Run the whole per-group pipeline; returns (status, payload)."""
    try:
        G = build(gdef, cap)
    except OrderCapExceeded as exc:
        return "skipped", {"group_name": gdef.name, "reason": f"order cap exceeded (cap {exc.cap})"}
    except (OrderMismatch, ValueError) as exc:
        return "error", {"group_name": gdef.name, "reason": str(exc)}
    try:
        L = enumerate_subgroups(G)
        result = verify_group(G, L)
    except LatticeCapExceeded as exc:
        return "error", {"group_name": gdef.name, "reason": str(exc)}
    for r in result.reports:
        r.intersection = None  # keep the result small and picklable
    return "ok", result


def run_sweep(defs: list[GroupDef], suite_name: str, max_order: int | None = None,
              jobs: int = 1) -> SweepSummary:
    start = time.perf_counter()
    cap = order_cap() if max_order is None else min(max_order, order_cap())
    defs = sorted(defs, key=lambda d: d.name)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(sweep_one, defs, [cap] * len(defs)))
    else:
        outcomes = [sweep_one(d, cap) for d in defs]
    summary = SweepSummary(suite_name)
    for status, payload in outcomes:
        if status == "ok":
            summary.results.append(payload)
        elif status == "skipped":
            summary.skipped.append(payload)
        else:
            summary.errors.append(payload)
    summary.groups_run = len(summary.results)
    summary.wall_time_ms = (time.perf_counter() - start) * 1000.0
    return summary


def cmd_sweep(args) -> int:
    if args.suite in (None, "default"):
        defs, name = default_suite(), "default"
    else:
        try:
            defs, name = load_suite_file(args.suite), Path(args.suite).stem
        except (GroupFileError, OSError) as exc:
            raise LoadError(str(exc)) from None
    summary = run_sweep(defs, name, args.max_order, args.jobs)
    timing = not args.no_timing
    if args.json:
        print(_dump(summary.to_dict(timing)))
    else:
        for g in summary.results:
            mark = "ok" if not g.violations else f"{len(g.violations)} VIOLATION(S)"
            tags = ("solvable" if g.solvable else "non-solvable") + (
                ", nilpotent" if g.nilpotent else "")
            print(f"{g.group_name:<10} order {g.group_order:>4}  {tags:<24} {mark}")
            for v in g.violations:
                print(f"    {v}")
        for s in summary.skipped:
            print(f"{s['group_name']:<10} skipped: {s['reason']}")
        for e in summary.errors:
            print(f"{e['group_name']:<10} ERROR: {e['reason']}")
        line = (f"suite {name}: {summary.groups_run} groups run, {len(summary.skipped)} skipped, "
                f"{len(summary.errors)} errors, {summary.violations_total} violations")
        if timing:
            line += f" in {summary.wall_time_ms / 1000:.1f} s"
        print(line)
    return summary.exit_code


# -- entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grouplab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"grouplab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inspect", help="order, Sylow table, lattice counts of one group")
    p.add_argument("--group", required=True, help="path to a .grp file or a preset name")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("verify", help="evaluate one intersection operator (or all)")
    p.add_argument("--group", required=True, help="path to a .grp file or a preset name")
    p.add_argument("--theorem", required=True, choices=[*THEOREMS, "all"])
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-timing", action="store_true", help="omit wall-clock fields")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="run every operator and check over a suite")
    p.add_argument("--suite", default=None, help="suite .grp file (default: built-in suite)")
    p.add_argument("--max-order", type=int, default=None, help="skip groups above this order")
    p.add_argument("--jobs", type=int, default=1, help="groups processed in parallel")
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-timing", action="store_true", help="omit wall-clock fields")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LoadError as exc:
        print(f"grouplab: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
