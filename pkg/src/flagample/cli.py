"""Command-line interface.

Subcommands: `compute` runs one (type, marking, levi) case; `table`
sweeps every marking and Levi subset of a type.  Output formats: human
text, TSV, JSON.  Exit codes: 0 success, 1 bad input, 2 degenerate
geometry, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys

from .dynkin import parse_type
from .errors import (
    BadInputError,
    CompactFormError,
    DegenerateGeometryError,
    FlagampleError,
    InternalInconsistencyError,
)
from .pipeline import CaseSpec, Report, run_case, run_table
from .weyl import DEFAULT_CAP

_FORMATS = ("text", "tsv", "json")

_TABLE_COLUMNS = (
    "type",
    "noncompact",
    "levi",
    "status",
    "realform",
    "k_type",
    "center",
    "dim_Z",
    "dim_C",
    "rank_E",
    "E0",
    "lambda_max",
    "max_len",
    "witness",
    "corr",
    "a(E)",
    "kind",
    "degree",
    "cross_check",
)


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract here is exit 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(self._bail(message))

    @staticmethod
    def _bail(message) -> int:
        print(f"error: {message}", file=sys.stderr)
        return 1


def _build_parser() -> _Parser:
    p = _Parser(prog="flagample", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, table: bool):
        sp.add_argument("--type", help="Dynkin type, e.g. A2, B3, G2")
        sp.add_argument(
            "--method",
            choices=("auto", "bruteforce", "fast"),
            default=None,
            help="length-search route (default auto)",
        )
        sp.add_argument(
            "--verify",
            action="store_true",
            default=None,
            help="run both search routes and require agreement",
        )
        sp.add_argument("--format", choices=_FORMATS, default="text")
        sp.add_argument(
            "--max-weyl",
            type=int,
            default=DEFAULT_CAP,
            metavar="N",
            help="Weyl enumeration cap (default 10^7)",
        )
        if table:
            sp.add_argument(
                "--dedupe",
                action="store_true",
                help="fold cases equivalent under diagram automorphisms",
            )
            sp.add_argument(
                "--jobs",
                type=int,
                default=1,
                metavar="N",
                help="evaluate cases in N parallel processes",
            )
        else:
            sp.add_argument(
                "--noncompact",
                metavar="i[,j...]",
                help="marked (noncompact) simple nodes, 1-based",
            )
            sp.add_argument(
                "--levi",
                metavar="i[,j...]",
                help="Levi nodes of the parabolic; omit for the full flag",
            )
            sp.add_argument(
                "--config",
                metavar="FILE",
                help="JSON case file with the input schema; flags win",
            )

    common(sub.add_parser("compute", help="run a single case"), table=False)
    common(sub.add_parser("table", help="sweep all cases of a type"), table=True)
    return p


def _parse_nodes(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(sorted({int(x) for x in text.split(",")}))
    except ValueError:
        raise BadInputError(f"cannot parse node list {text!r}") from None


def _load_config(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise BadInputError(f"cannot read config {path}: {exc}") from None
    if not isinstance(data, dict):
        raise BadInputError("config must be a JSON object")
    return data


def _case_from_args(args) -> CaseSpec:
    cfg = _load_config(args.config) if args.config else {}

    if args.type is not None:
        dynkin = parse_type(args.type)
    elif "series" in cfg and "rank" in cfg:
        dynkin = parse_type(f"{cfg['series']}{cfg['rank']}")
    else:
        raise BadInputError("no Dynkin type given (--type or config series/rank)")

    noncompact = _parse_nodes(args.noncompact)
    if noncompact is None:
        noncompact = tuple(sorted(int(x) for x in cfg.get("noncompact", [])))
    if not noncompact:
        raise CompactFormError(
            "empty marking selects the compact real form, which has no flag domains"
        )

    levi = _parse_nodes(args.levi)
    if levi is None:
        levi = tuple(sorted(int(x) for x in cfg.get("levi", [])))

    method = args.method if args.method is not None else cfg.get("method", "auto")
    if method not in ("auto", "bruteforce", "fast"):
        raise BadInputError(f"unknown method {method!r}")
    verify = args.verify if args.verify is not None else bool(cfg.get("verify", False))

    return CaseSpec(
        dynkin=dynkin,
        noncompact=noncompact,
        levi=levi,
        method=method,
        verify=verify,
        max_weyl=args.max_weyl,
    )


def _fmt_weight(w) -> str:
    return "[" + ",".join(str(x) for x in w) + "]"


def _fmt_weights(ws) -> str:
    return " ".join(_fmt_weight(w) for w in ws) if ws else "-"


def _fmt_nodes(nodes) -> str:
    return ",".join(str(i) for i in nodes) if nodes else "-"


def _fmt_witness(word) -> str:
    return "*".join(f"s{i + 1}" for i in word) if word else "e"


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _fmt_node_set(nodes) -> str:
    return "{" + ",".join(str(i) for i in nodes) + "}"


def _report_text(rep: Report) -> str:
    lines = [
        f"case        : {rep.series}{rep.rank}"
        f"  noncompact={_fmt_node_set(rep.noncompact)}"
        f"  levi={_fmt_node_set(rep.levi)}",
        f"real form   : {rep.realform_name}   k = {rep.k_type}"
        f"   center_dim = {rep.center_dim}"
        f"   hermitian = {'yes' if rep.hermitian else 'no'}",
        f"dims        : dim_Z = {rep.dim_z}   dim_C = {rep.dim_c}"
        f"   rank_E = {rep.rank_e}",
        f"E0 weights  : {_fmt_weights(rep.e0_weights)}",
        f"lambda_max  : {_fmt_weights(rep.max_weights)}",
        f"k simples   : {_fmt_weights(rep.k_simples)}",
        f"length max  : {rep.w0_max_length}   witness = {_fmt_witness(rep.witness_word)}"
        f"   levi_correction = {rep.levi_correction}",
        f"ampleness   : {rep.ampleness}",
        f"verdict     : {rep.kind}   degree = {rep.concavity_degree}"
        f"   cross_check = {rep.cross_check}   ({rep.notes})",
    ]
    return "\n".join(lines)


def _row_cells(row: dict) -> list[str]:
    inp = row["input"]
    rep: Report | None = row["report"]
    cells = [
        f"{inp['series']}{inp['rank']}",
        _fmt_nodes(inp["noncompact"]),
        _fmt_nodes(inp["levi"]),
        row["status"],
    ]
    if rep is None:
        cells += ["-"] * (len(_TABLE_COLUMNS) - 4)
    else:
        cells += [
            rep.realform_name,
            rep.k_type,
            str(rep.center_dim),
            str(rep.dim_z),
            str(rep.dim_c),
            str(rep.rank_e),
            ";".join(_fmt_weight(w) for w in rep.e0_weights),
            ";".join(_fmt_weight(w) for w in rep.max_weights),
            str(rep.w0_max_length),
            _fmt_witness(rep.witness_word),
            str(rep.levi_correction),
            str(rep.ampleness),
            rep.kind,
            str(rep.concavity_degree),
            rep.cross_check,
        ]
    return cells


def _table_text(rows: list[dict]) -> str:
    grid = [list(_TABLE_COLUMNS)] + [_row_cells(r) for r in rows]
    widths = [max(len(r[c]) for r in grid) for c in range(len(_TABLE_COLUMNS))]
    out = []
    for r in grid:
        out.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    return "\n".join(out)


def _table_tsv(rows: list[dict]) -> str:
    out = ["\t".join(_TABLE_COLUMNS)]
    out += ["\t".join(_row_cells(r)) for r in rows]
    return "\n".join(out)


def _table_json(dynkin, rows: list[dict]) -> str:
    payload = {
        "series": dynkin.series,
        "rank": dynkin.rank,
        "rows": [
            {
                "input": r["input"],
                "status": r["status"],
                "report": r["report"].to_json_dict() if r["report"] else None,
            }
            for r in rows
        ],
    }
    return _dump_json(payload)


def _cmd_compute(args) -> int:
    spec = _case_from_args(args)
    report = run_case(spec)
    if args.format == "json":
        print(_dump_json(report.to_json_dict()))
    elif args.format == "tsv":
        row = {
            "input": {
                "series": report.series,
                "rank": report.rank,
                "noncompact": list(report.noncompact),
                "levi": list(report.levi),
            },
            "status": "ok",
            "report": report,
        }
        print(_table_tsv([row]))
    else:
        print(_report_text(report))
    return 0


def _cmd_table(args) -> int:
    if args.type is None:
        raise BadInputError("no Dynkin type given (--type)")
    dynkin = parse_type(args.type)
    method = args.method if args.method is not None else "auto"
    verify = bool(args.verify)
    if args.jobs < 1:
        raise BadInputError("--jobs must be at least 1")
    rows = run_table(
        dynkin,
        method=method,
        verify=verify,
        max_weyl=args.max_weyl,
        dedupe=args.dedupe,
        jobs=args.jobs,
    )
    if args.format == "json":
        print(_table_json(dynkin, rows))
    elif args.format == "tsv":
        print(_table_tsv(rows))
    else:
        print(_table_text(rows))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compute":
            return _cmd_compute(args)
        return _cmd_table(args)
    except BadInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DegenerateGeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3
    except FlagampleError as exc:  # safety net for future subclasses
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
