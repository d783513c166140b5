"""HeLP checks, Brauer-line criterion and prime graph verdicts for character tables.

    helpline validate TABLE
    helpline spectrum TABLE
    helpline prime-graph TABLE
    helpline check-order TABLE --n N
    helpline pq TABLE [--blocks BLOCKS]

Exit status: 0 success, 1 table failed validation, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import fixtures
from .help_engine import check_order
from .tables import TableFormatError, load_table, prime_graph, spectrum, validate
from .tree_criterion import BlockFormatError, load_blocks
from .verdict import pq_report

log = logging.getLogger("helpline")


class InputError(Exception):
    pass


def resolve(path: str, suffix: str = ".json") -> Path:
    """Accept a file path, the path without its suffix, or fixtures/<name> for a shipped fixture."""
    candidates = [Path(path), Path(path + suffix)]
    p = Path(path)
    if p.parent.name == "fixtures":
        candidates.append(Path(str(fixtures.fixture_path(p.name.removesuffix(suffix)))))
    for c in candidates:
        if c.is_file():
            return c
    raise InputError(f"no such file: {path}")


def _emit(args, data, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(data, indent=2) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _load(args):
    try:
        return load_table(resolve(args.table))
    except (TableFormatError, OSError, InputError) as exc:
        raise InputError(f"cannot read table {args.table}: {exc}") from exc


def cmd_validate(args) -> int:
    table = _load(args)
    report = validate(table)
    orth = report.ok and all(report[n].passed for n in ("row orthogonality", "column orthogonality"))
    data = {
        "group": table.group_name,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks],
        "ok": report.ok,
    }
    text = "\n".join([f"group: {table.group_name}", *report.lines(),
                      f"orthogonality: {'pass' if orth else 'FAIL'}"])
    _emit(args, data, text)
    return 0 if report.ok else 1


def cmd_spectrum(args) -> int:
    table = _load(args)
    orders = sorted(spectrum(table))
    _emit(args, {"group": table.group_name, "spectrum": orders},
          f"{table.group_name}: {' '.join(map(str, orders))}")
    return 0


def cmd_prime_graph(args) -> int:
    table = _load(args)
    g = prime_graph(table)
    _emit(args, {"group": table.group_name, "vertices": sorted(g.vertices),
                 "edges": [list(e) for e in sorted(g.edges)]},
          f"{table.group_name}: {g}")
    return 0


def cmd_check_order(args) -> int:
    if args.n < 1:
        raise InputError("--n must be at least 1")
    table = _load(args)
    result = check_order(table, args.n)
    certificate = "exhaustive" if result.exhaustive else "partial"
    surviving = [
        {"scenario": {f"u^{d}": {table.classes[c].name: v for c, v in t} for d, t in sorted(s["scenario"].items())},
         "pa": {table.classes[c].name: v for c, v in s["pa"]}}
        for s in result.surviving()
    ]
    data = {"group": table.group_name, "order": args.n, "verdict": result.verdict,
            "certificate": certificate, "scenarios": len(result.scenarios), "surviving": surviving}
    text = [f"group: {table.group_name}", f"order: {args.n}", f"verdict: {result.verdict}",
            f"certificate: {certificate}", f"scenarios: {len(result.scenarios)}"]
    for s in surviving:
        text.append(f"  surviving: {s['pa']}  with powers {s['scenario']}")
    _emit(args, data, "\n".join(text))
    return 0


def cmd_pq(args) -> int:
    table = _load(args)
    report = validate(table)
    if not report.ok:
        for line in report.lines():
            log.error(line)
        return 1
    blocks = []
    if args.blocks:
        try:
            blocks = load_blocks(resolve(args.blocks))
        except (BlockFormatError, OSError, InputError) as exc:
            raise InputError(f"cannot read blocks {args.blocks}: {exc}") from exc
    result = pq_report(table, blocks, workers=args.workers)
    _emit(args, result.to_json(), result.to_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="helpline", description=__doc__.split("\n\n")[0])
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("table", help="character table file (JSON)")
        p.add_argument("--format", choices=("text", "structured", "json"), default="text")
        p.add_argument("--workers", type=int, default=1)
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check orthogonality and power maps")
    add("spectrum", cmd_spectrum, "element orders of the group")
    add("prime-graph", cmd_prime_graph, "prime graph of the group")
    p = add("check-order", cmd_check_order, "HeLP feasibility for units of a given order")
    p.add_argument("--n", type=int, required=True)
    p = add("pq", cmd_pq, "Prime Graph Question report")
    p.add_argument("--blocks", help="principal-block line data (JSON)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format == "structured":
        args.format = "json"
    logging.basicConfig(level=logging.WARNING - 10 * args.verbose, stream=sys.stderr,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"helpline: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
