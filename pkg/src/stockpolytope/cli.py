"""Command line interface: analyze, chain, and render subcommands.

Exit codes: 0 on success, 2 for input or validation problems, 3 for an
internal consistency breach (which a correct build never produces).
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import date

from .necklace import necklace_from_decorated
from .perms import WiringWord, affine_lift
from .polytope import decomposition_chain
from .positroid import interval_rank_summands
from .prices import PriceCsvError, PriceTable, crossing_stream, decorate, permutation_at, read_price_csv
from .render import render_chords, render_hooks, render_wiring
from .report import ConsistencyError, build_report, check_report, report_to_json, report_to_text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stockpolytope",
        description="Crossings, permutations, necklaces, positroids, and polytopes from price CSVs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("csv", help="price CSV file (header: date,<ticker>,...)")
        p.add_argument("--ref-date", required=True, help="reference date, ISO-8601")
        p.add_argument("--end-date", required=True, help="end date, ISO-8601")
        p.add_argument("--out", help="write output to this path instead of stdout")

    analyze = sub.add_parser("analyze", help="full pipeline report for a date range")
    add_common(analyze)
    analyze.add_argument("--facets", action="store_true", help="also count polytope facets (n <= 8)")
    analyze.add_argument("--format", choices=("json", "text"), default="json")
    analyze.add_argument("--check", action="store_true", help="re-derive and verify the report")
    analyze.set_defaults(handler=_cmd_analyze)

    chain = sub.add_parser("chain", help="cell dimension after each crossing")
    add_common(chain)
    chain.add_argument("--format", choices=("json", "text"), default="text")
    chain.set_defaults(handler=_cmd_chain)

    render = sub.add_parser("render", help="draw a diagram for a date range")
    render.add_argument("mode", choices=("wiring", "chords", "hooks"))
    add_common(render)
    render.add_argument("--format", choices=("svg", "ascii"), default="svg")
    render.set_defaults(handler=_cmd_render)
    return parser


def _parse_date(text: str) -> date:
    try:
        return date.fromisoformat(text)
    except ValueError:
        raise ValueError(f"bad ISO-8601 date {text!r}") from None


def _load(args) -> tuple[PriceTable, date, date]:
    table = read_price_csv(args.csv)
    return table, _parse_date(args.ref_date), _parse_date(args.end_date)


def _cmd_analyze(args) -> str:
    table, ref, end = _load(args)
    report = build_report(table, ref, end, with_facets=args.facets)
    if args.check:
        check_report(report)
    return report_to_json(report) if args.format == "json" else report_to_text(report)


def _chain_steps(table: PriceTable, ref: date, end: date):
    events = crossing_stream(table, ref, end)
    word = WiringWord(table.n_stocks, tuple(e.position for e in events))
    labels = [ref.isoformat()] + [e.date.isoformat() for e in events]
    return events, decomposition_chain(word, labels=labels)


def _cmd_chain(args) -> str:
    table, ref, end = _load(args)
    events, chain = _chain_steps(table, ref, end)
    if args.format == "json":
        steps = []
        for t, step in enumerate(chain.steps):
            steps.append(
                {
                    "index": t,
                    "date": step.label,
                    "position": None if t == 0 else events[t - 1].position,
                    "permutation": list(step.state.perm.images),
                    "dimension": step.dimension,
                }
            )
        return json.dumps({"schema_version": 1, "steps": steps}, sort_keys=True, indent=2) + "\n"
    lines = []
    for t, step in enumerate(chain.steps):
        crossing = "-" if t == 0 else f"s{events[t - 1].position}"
        perm = "{" + ",".join(str(v) for v in step.state.perm.images) + "}"
        lines.append(f"step {t:<3} {step.label}  {crossing:<4} {perm:<20} dim {step.dimension}")
    return "\n".join(lines) + "\n"


def _cmd_render(args) -> str:
    table, ref, end = _load(args)
    if args.mode == "wiring":
        events = crossing_stream(table, ref, end)
        word = WiringWord(table.n_stocks, tuple(e.position for e in events))
        return render_wiring(word, table.tickers, fmt=args.format)
    perm = permutation_at(table, ref, end)
    state = decorate(perm, table, ref, end)
    if args.mode == "chords":
        return render_chords(state, fmt=args.format)
    lift = affine_lift(state)
    necklace_from_decorated(state)  # validates the state early
    return render_hooks(lift, interval_rank_summands(state), fmt=args.format)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        output = args.handler(args)
    except ConsistencyError as exc:
        print(f"internal consistency breach: {exc}", file=sys.stderr)
        return 3
    except (PriceCsvError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(output)
    else:
        sys.stdout.write(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
