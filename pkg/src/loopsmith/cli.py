"""Command-line interface.

Commands: validate, analyze, halfautos, checktheorem.  Inputs are .loop
files; a bare catalog key (like Q1 or Z6) is accepted wherever a path
does not exist on disk.  Exit codes: 0 success, 1 a property or theorem
failed, 2 unreadable input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import catalog as cat
from . import subloops as sl
from .errors import LoopError, LoopFileError
from .halfmorph import (
    HalfKind,
    enumerate_half_automorphisms,
    half_maps_form_group_check,
    verify_main_theorem,
)
from .innermaps import is_automorphic, is_left_automorphic
from .suites import run_theorem_suites
from .table import validate

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_INPUT = 2


def worker_count() -> int:
    """Resolve LOOPSMITH_THREADS: unset means 1, 0 means one per cpu."""
    raw = os.environ.get("LOOPSMITH_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ValueError("LOOPSMITH_THREADS must be an integer, got %r" % raw) from None
    if value < 0:
        raise ValueError("LOOPSMITH_THREADS must be non-negative")
    if value == 0:
        return os.cpu_count() or 1
    return value


def _load(path, normalize=False):
    """Read a .loop file, or fall back to a catalog key."""
    if not os.path.exists(path) and path in cat.catalog_keys():
        return cat.builtin(path)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise LoopFileError("cannot read %s: %s" % (path, exc)) from exc
    return cat.parse_loop_file(text, normalize=normalize)


# -- analyze ----------------------------------------------------------


@dataclass
class AnalysisReport:
    name: str
    order: int
    flags: dict = field(default_factory=dict)
    subloop_orders: dict = field(default_factory=dict)
    nilpotency_class: int | None = None
    half_census: dict | None = None  # None when skipped
    half_census_skipped: bool = False
    elapsed: dict = field(default_factory=dict)

    def consistent(self) -> bool:
        f = self.flags
        if f["loop"] and not f["quasigroup"]:
            return False
        if f["associative"] and not f["moufang"]:
            return False
        if f["moufang"] and not f["diassociative"]:
            return False
        if f["automorphic"] and not f["left_automorphic"]:
            return False
        return True

    def to_json_dict(self):
        return {
            "name": self.name,
            "order": self.order,
            "flags": dict(sorted(self.flags.items())),
            "subloop_orders": dict(sorted(self.subloop_orders.items())),
            "nilpotency_class": self.nilpotency_class,
            "half_census": dict(sorted(self.half_census.items())) if self.half_census is not None else None,
            "half_census_skipped": self.half_census_skipped,
            "elapsed": dict(sorted(self.elapsed.items())),
        }


def analyze_table(table, name=None, max_half_order=20) -> AnalysisReport:
    """One-stop structural summary of a loop."""
    name = name or table.name or "loop"
    report = AnalysisReport(name=name, order=table.order)
    t0 = time.perf_counter()
    flags = report.flags
    checked = validate(table.rows)
    flags["quasigroup"] = checked.is_quasigroup
    flags["loop"] = checked.is_loop
    flags["commutative"] = table.is_commutative()
    flags["associative"] = table.is_associative()
    flags["diassociative"] = table.is_diassociative()
    flags["moufang"] = table.is_moufang()
    flags["left_automorphic"] = is_left_automorphic(table)
    flags["automorphic"] = is_automorphic(table)
    t1 = time.perf_counter()
    report.elapsed["flags"] = t1 - t0
    so = report.subloop_orders
    so["nucleus"] = len(sl.nucleus(table))
    so["commutant"] = len(sl.commutant(table).elements)
    so["center"] = len(sl.center(table))
    so["commutator_subloop"] = len(sl.commutator_subloop(table))
    so["associator_subloop"] = len(sl.associator_subloop(table))
    t2 = time.perf_counter()
    report.elapsed["subloops"] = t2 - t1
    report.nilpotency_class = sl.commutative_nilpotency_class(table)
    t3 = time.perf_counter()
    report.elapsed["nilpotency"] = t3 - t2
    if table.order <= max_half_order:
        enum = enumerate_half_automorphisms(table)
        census = {kind.value: 0 for kind in HalfKind}
        for cls in enum.classes():
            census[cls.kind.value] += 1
        census["total"] = len(enum.maps)
        report.half_census = census
    else:
        report.half_census_skipped = True
    report.elapsed["half_census"] = time.perf_counter() - t3
    return report


def _print_analysis(report):
    print("%s: order %d" % (report.name, report.order))
    for key in sorted(report.flags):
        print("  %-18s %s" % (key, report.flags[key]))
    for key in sorted(report.subloop_orders):
        print("  |%s| = %d" % (key, report.subloop_orders[key]))
    print("  nilpotency_class   %s" % (report.nilpotency_class,))
    if report.half_census_skipped:
        print("  half-morphisms     skipped (order above threshold)")
    else:
        census = report.half_census
        print("  half-morphisms     total=%d iso=%d anti=%d both=%d proper=%d" % (
            census["total"], census["isomorphism"], census["anti-isomorphism"],
            census["both"], census["proper-half"],
        ))
    print("  elapsed            %s" % " ".join(
        "%s=%.3fs" % (k, v) for k, v in sorted(report.elapsed.items())))


# -- commands ---------------------------------------------------------


def cmd_validate(args) -> int:
    status = EXIT_OK
    for path in args.paths:
        try:
            entry = _load(path, normalize=args.normalize)
        except LoopFileError as exc:
            if exc.stage == "table":
                print("%s: INVALID: %s" % (path, exc))
                if exc.report is not None:
                    for kind, witness in exc.report.violations:
                        print("  violation: %s %r" % (kind, witness))
                status = max(status, EXIT_PROPERTY)
            else:
                print("%s: unreadable: %s" % (path, exc))
                status = max(status, EXIT_INPUT)
            continue
        report = validate(entry.table.rows)
        if args.json:
            print(json.dumps({
                "name": entry.key,
                "order": entry.table.order,
                "is_quasigroup": report.is_quasigroup,
                "has_identity": report.has_identity,
                "is_loop": report.is_loop,
            }, sort_keys=True))
        else:
            print("%s: valid loop of order %d (%s)" % (path, entry.table.order, entry.key))
    return status


def cmd_analyze(args) -> int:
    status = EXIT_OK
    reports = []
    for path in args.paths:
        try:
            entry = _load(path, normalize=args.normalize)
        except LoopFileError as exc:
            print("%s: %s" % (path, exc), file=sys.stderr)
            return EXIT_PROPERTY if exc.stage == "table" else EXIT_INPUT
        report = analyze_table(entry.table, name=entry.key, max_half_order=args.max_half_order)
        reports.append(report)
        if not report.consistent():
            print("%s: inconsistent property flags %r" % (entry.key, report.flags), file=sys.stderr)
            status = max(status, EXIT_PROPERTY)
    if args.json:
        payload = [r.to_json_dict() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, sort_keys=True, indent=2))
    else:
        for report in reports:
            _print_analysis(report)
    return status


def cmd_halfautos(args) -> int:
    try:
        entry = _load(args.path, normalize=args.normalize)
    except LoopFileError as exc:
        print("%s: %s" % (args.path, exc), file=sys.stderr)
        return EXIT_PROPERTY if exc.stage == "table" else EXIT_INPUT
    enum = enumerate_half_automorphisms(entry.table, limit=args.limit)
    census = {kind.value: 0 for kind in HalfKind}
    listing = []
    for m, cls in zip(enum.maps, enum.classes()):
        census[cls.kind.value] += 1
        listing.append({
            "cycles": m.cycles(),
            "images": list(m.images),
            "kind": cls.kind.value,
            "witness_hom": list(cls.witness_hom) if cls.witness_hom else None,
            "witness_anti": list(cls.witness_anti) if cls.witness_anti else None,
        })
    group_ok = None
    if enum.complete:
        group_ok = half_maps_form_group_check(entry.table, enum)
    if args.json:
        print(json.dumps({
            "name": entry.key,
            "order": entry.table.order,
            "complete": enum.complete,
            "total": len(enum.maps),
            "census": dict(sorted(census.items())),
            "group_closed": group_ok,
            "maps": listing,
        }, sort_keys=True, indent=2))
    else:
        for item in listing:
            extra = ""
            if item["witness_hom"] or item["witness_anti"]:
                extra = "  witness_hom=%s witness_anti=%s" % (
                    tuple(item["witness_hom"]) if item["witness_hom"] else None,
                    tuple(item["witness_anti"]) if item["witness_anti"] else None,
                )
            print("%-24s %-17s%s" % (item["cycles"], item["kind"], extra))
        if enum.complete:
            print("total=%d iso=%d anti=%d both=%d proper=%d" % (
                len(enum.maps), census["isomorphism"], census["anti-isomorphism"],
                census["both"], census["proper-half"]))
            print("closed under composition and inverse: %s" % ("yes" if group_ok else "NO"))
        else:
            print("stopped at limit %d: enumeration incomplete, census withheld" % args.limit)
    if group_ok is False:
        return EXIT_PROPERTY
    return EXIT_OK


def cmd_checktheorem(args) -> int:
    status = EXIT_OK
    if args.catalog:
        named = [(e.key, e.table) for e in cat.entries()]
    else:
        if not args.paths:
            print("checktheorem needs paths or --catalog", file=sys.stderr)
            return EXIT_INPUT
        named = []
        for path in args.paths:
            try:
                entry = _load(path, normalize=args.normalize)
            except LoopFileError as exc:
                print("%s: %s" % (path, exc), file=sys.stderr)
                if exc.stage == "table":
                    # a corrupt table is a failed property, not a bad invocation
                    status = max(status, EXIT_PROPERTY)
                    continue
                return EXIT_INPUT
            named.append((entry.key, entry.table))
    workers = worker_count()
    enums = {}
    small = [(name, t) for name, t in named if t.order <= args.max_half_order]
    if workers > 1 and len(small) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for (name, _), enum in zip(
                small, pool.map(lambda pair: enumerate_half_automorphisms(pair[1]), small)
            ):
                enums[name] = enum
    reports = []
    for name, t in named:
        enum = enums.get(name)
        if enum is None and t.order <= args.max_half_order:
            enum = enums[name] = enumerate_half_automorphisms(t)
        reports.append(verify_main_theorem(t, name=name, enumeration=enum)
                       if enum is not None else None)
    results = run_theorem_suites(named, enums=enums, max_order=args.max_half_order)
    failed = any(r.violations for r in results)
    if failed:
        status = max(status, EXIT_PROPERTY)
    if args.json:
        print(json.dumps({
            "loops": [
                {
                    "name": name,
                    "order": t.order,
                    "moufang": r.moufang if r else t.is_moufang(),
                    "automorphic": r.automorphic if r else is_automorphic(t),
                    "hypotheses_hold": r.hypotheses_hold if r else None,
                    "proper_half_maps": len(r.proper_cycles) if r else None,
                    "enumerated": r is not None,
                }
                for (name, t), r in zip(named, reports)
            ],
            "suites": [
                {
                    "name": s.name,
                    "hypotheses": s.hypothesis_count,
                    "checks": s.check_count,
                    "violations": s.violations,
                    "notes": s.notes,
                }
                for s in results
            ],
            "ok": not failed,
        }, sort_keys=True, indent=2))
    else:
        for (name, t), r in zip(named, reports):
            if r is None:
                print("%s (order %d): enumeration skipped (above threshold)" % (name, t.order))
            else:
                print(r.summary())
        for s in results:
            print(s.line())
        print("theorem check: %s" % ("FAIL" if failed else "ok"))
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loopsmith",
        description="Analyze finite loop tables and their half-morphisms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check that files hold loop tables")
    p.add_argument("paths", nargs="+")
    p.add_argument("--normalize", action="store_true", help="relabel when the identity is not element 1")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="full structural report")
    p.add_argument("paths", nargs="+")
    p.add_argument("--normalize", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-half-order", type=int, default=20, metavar="N",
                   help="skip the half-morphism census above this order (default 20)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("halfautos", help="enumerate half-morphisms of one loop")
    p.add_argument("path")
    p.add_argument("--normalize", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--limit", type=int, default=None, metavar="N",
                   help="stop after N maps (marks the run incomplete)")
    p.set_defaults(func=cmd_halfautos)

    p = sub.add_parser("checktheorem", help="run the theorem driver and all identity suites")
    p.add_argument("paths", nargs="*")
    p.add_argument("--catalog", action="store_true", help="run over every built-in loop")
    p.add_argument("--normalize", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-half-order", type=int, default=20, metavar="N")
    p.set_defaults(func=cmd_checktheorem)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LoopError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PROPERTY
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
