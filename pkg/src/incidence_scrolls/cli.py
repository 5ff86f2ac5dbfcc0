"""Command-line interface: enumeration, classification, tables, raw products.

Exit codes: 0 success, 2 invalid input, 3 engine gave up on a degeneration
(not observed on any known base).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import closed_forms
from .bases import IncidenceBase, enumerate_bases, format_base, satisfies_is
from .grassmann import GrassmannSpec, point_class_index, product_of_specials, render
from .invariants import (
    ScrollReport,
    UnresolvedDegenerationError,
    classify,
    conditions_count,
)

SOFT_AMBIENT_CAP = 12
CACHE_HEADER = "# incidence-scrolls cache v1"


def _render_rows(rows: list[dict], columns: list[str], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: row.get(k, "") for k in columns})
        return buf.getvalue().rstrip("\n")
    cells = [[str(row.get(c, "")) for c in columns] for row in rows]
    widths = [max(len(c), *(len(r[k]) for r in cells)) if cells else len(c)
              for k, c in enumerate(columns)]
    if fmt == "md":
        lines = ["| " + " | ".join(c.ljust(w) for c, w in zip(columns, widths)) + " |",
                 "|" + "|".join("-" * (w + 2) for w in widths) + "|"]
        lines += ["| " + " | ".join(c.ljust(w) for c, w in zip(row, widths)) + " |"
                  for row in cells]
        return "\n".join(lines)
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(lines)


def _report_row(report: ScrollReport) -> dict:
    return {
        "base": format_base(report.base),
        "span": report.span,
        "degree": report.degree,
        "genus": report.genus,
        "h1": report.h1,
        "special": report.special,
        "directrix": "; ".join(f"C^{d}_{g} in P^{a}" for a, d, g in report.directrix),
    }


REPORT_COLUMNS = ["base", "span", "degree", "genus", "h1", "special", "directrix"]


def _load_cache(path: Path) -> dict[str, tuple[int, int]]:
    entries: dict[str, tuple[int, int]] = {}
    if not path.exists():
        return entries
    lines = path.read_text().splitlines()
    if not lines or lines[0] != CACHE_HEADER:
        raise ValueError(f"unrecognized cache file {path}")
    for line in lines[1:]:
        if not line.strip():
            continue
        fields = dict(part.split("=", 1) for part in line.split())
        key = f"n={fields['n']} dims={fields['dims']}"
        entries[key] = (int(fields["degree"]), int(fields["genus"]))
    return entries


def _save_cache(path: Path, entries: dict[str, tuple[int, int]]) -> None:
    lines = [CACHE_HEADER]
    lines += [f"{key} degree={d} genus={g}" for key, (d, g) in sorted(entries.items())]
    path.write_text("\n".join(lines) + "\n")


def _with_cache(reports: list[ScrollReport], cache_path: str | None) -> None:
    """Check computed invariants against a cache file and write it back.

    Cached values never replace a computation, so runs with and without a
    cache are byte-identical; a stale or corrupt entry fails loudly.
    """
    if cache_path is None:
        return
    path = Path(cache_path)
    entries = _load_cache(path)
    for report in reports:
        key = format_base(report.base)
        value = (report.degree, report.genus)
        if key in entries and entries[key] != value:
            raise ValueError(
                f"cache entry {key} -> {entries[key]} disagrees with computed {value}")
        entries[key] = value
    _save_cache(path, entries)


def _parse_dims(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse dimension list {text!r}") from exc


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.ambient < 3:
        raise ValueError(f"need ambient n >= 3, got {args.ambient}")
    if args.ambient > SOFT_AMBIENT_CAP and not args.force:
        raise ValueError(
            f"n={args.ambient} exceeds the interactive cap {SOFT_AMBIENT_CAP}; "
            f"rerun with --force")
    bases = enumerate_bases(args.ambient,
                            nondegenerate_only=args.nondegenerate,
                            contains_dim=args.contains_dim)
    if args.contains_dim != 0:
        # a base point sweeps a plane pencil, not a surface scroll
        bases = [b for b in bases if 0 not in b.dims]
    reports = [classify(base) for base in bases]
    if args.genus is not None:
        reports = [r for r in reports if r.genus == args.genus]
    _with_cache(reports, args.cache)
    print(_render_rows([_report_row(r) for r in reports], REPORT_COLUMNS, args.format))
    return 0


def _render_tree(node, indent: int = 0) -> str:
    pad = "  " * indent
    if node.action == "join":
        head = (f"{pad}join {format_base(node.base)} pair=({node.pair[0]},{node.pair[1]}) "
                f"m={node.m} kappa={node.kappa} -> d={node.degree} g={node.genus}")
    elif node.action == "restrict":
        head = f"{pad}restrict {format_base(node.base)} -> d={node.degree} g={node.genus}"
    else:
        head = f"{pad}leaf {format_base(node.base)} d={node.degree} g={node.genus}"
    return "\n".join([head] + [_render_tree(c, indent + 1) for c in node.children])


def cmd_analyze(args: argparse.Namespace) -> int:
    base = IncidenceBase(args.ambient, _parse_dims(args.base))
    if not satisfies_is(base):
        raise ValueError(
            f"conditions={conditions_count(base)}, required {2 * base.ambient - 3}")
    report = classify(base)
    _with_cache([report], args.cache)
    if args.format == "json":
        print(json.dumps(report.to_dict(include_tree=args.tree), indent=2))
    else:
        print(_render_rows([_report_row(report)], REPORT_COLUMNS, args.format))
        if args.tree:
            print(_render_tree(report.tree))
    return 0


TABLE_COLUMNS = ["scroll", "base", "degree", "genus", "directrix", "star",
                 "engine", "status"]


def cmd_table(args: argparse.Namespace) -> int:
    rows = []
    deviations = 0
    for table_row in closed_forms.table(args.id):
        record = table_row.record
        report = classify(record.base)
        directrix_map = {a: d for a, d, _ in report.directrix}
        fixed_dim = {"p1s": 1, "p2s": 2, "p3s": 3}[record.family]
        engine_dir = directrix_map.get(fixed_dim)
        problems = []
        if (report.degree, report.genus) != (table_row.printed_degree,
                                             table_row.printed_genus):
            problems.append(f"degree/genus ({report.degree},{report.genus})")
        if report.special != table_row.star:
            problems.append(f"star (h1={report.h1})")
        if table_row.printed_directrix is not None and \
                engine_dir != table_row.printed_directrix:
            problems.append(f"directrix {engine_dir} vs printed "
                            f"{table_row.printed_directrix}")
        status = "ok"
        if problems:
            deviations += 1
            status = "DEVIATION: " + "; ".join(problems)
            if table_row.note:
                status += f" ({table_row.note})"
        engine = f"d={report.degree} g={report.genus} h1={report.h1}"
        if engine_dir is not None:
            engine += f" dir={engine_dir}"
        rows.append({
            "scroll": table_row.label,
            "base": format_base(record.base),
            "degree": table_row.printed_degree,
            "genus": table_row.printed_genus,
            "directrix": table_row.printed_directrix
            if table_row.printed_directrix is not None else "-",
            "star": "*" if table_row.star else "",
            "engine": engine,
            "status": status,
        })
    print(_render_rows(rows, TABLE_COLUMNS, args.format))
    if deviations and args.format not in ("json", "csv"):
        print(f"# {deviations} deviation(s) against the printed table")
    return 0


def cmd_product(args: argparse.Namespace) -> int:
    l, n = _parse_dims(args.grassmann)
    spec = GrassmannSpec(l, n)
    result = product_of_specials(spec, _parse_dims(args.specials))
    text = render(result)
    if args.format == "json":
        print(json.dumps({"grassmann": [l, n], "product": text}))
    else:
        print(text)
        point = result.coefficient(point_class_index(spec))
        if not result.is_zero() and result.items()[0][0] == point_class_index(spec) \
                and len(result.items()) == 1:
            print(point)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scrolls",
        description="Classify incidence scrolls in projective n-space.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=["text", "json", "csv", "md"],
                       default="text")

    p_enum = sub.add_parser("enumerate", help="list and classify all bases in P^n")
    p_enum.add_argument("-n", "--ambient", type=int, required=True)
    p_enum.add_argument("--nondegenerate", action="store_true")
    p_enum.add_argument("--contains-dim", type=int, default=None)
    p_enum.add_argument("--genus", type=int, default=None)
    p_enum.add_argument("--force", action="store_true",
                        help="lift the soft ambient cap")
    p_enum.add_argument("--cache", default=None)
    add_common(p_enum)
    p_enum.set_defaults(func=cmd_enumerate)

    p_analyze = sub.add_parser("analyze", help="classify one base")
    p_analyze.add_argument("-n", "--ambient", type=int, required=True)
    p_analyze.add_argument("--base", required=True,
                           help="comma-separated base dimensions, e.g. 2,3,3,3,3,3")
    p_analyze.add_argument("--tree", action="store_true",
                           help="include the degeneration witness")
    p_analyze.add_argument("--cache", default=None)
    add_common(p_analyze)
    p_analyze.set_defaults(func=cmd_analyze)

    p_table = sub.add_parser("table", help="reproduce a published table")
    p_table.add_argument("--id", type=int, choices=[1, 2, 3], required=True)
    add_common(p_table)
    p_table.set_defaults(func=cmd_table)

    p_product = sub.add_parser("product", help="multiply special Schubert cycles")
    p_product.add_argument("--grassmann", required=True, help="l,n e.g. 1,5")
    p_product.add_argument("--specials", required=True,
                           help="comma-separated special parameters")
    add_common(p_product)
    p_product.set_defaults(func=cmd_product)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnresolvedDegenerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
