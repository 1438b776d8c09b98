"""Command-line front end: stats tables, identity verifiers, bijections.

Exit codes are a contract: 0 for MATCH / success, 1 for MISMATCH,
2 for usage or runtime errors.  ``--json`` output carries ``schema: 1``.
The enumeration budget defaults to 10^6 elements and can be overridden
with the PROJSTAT_BUDGET environment variable or --budget.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter

from . import identities
from .bijections import bipartite_from_tuple, nvec_decode, nvec_encode, order_involution
from .groups import (
    enumerate_elements,
    format_window,
    make_group,
    parse_group,
    parse_window,
)
from .rsk import rs_correspondence, rs_transpose_map, tableau_descents
from .stats import bn_descent_split, des_set, stat_record

VERIFIERS = {
    "character-fmaj": lambda a, budget: identities.verify_character_fmaj(
        a.r, a.p, a.s, a.n, a.eps, a.k, budget
    ),
    "signed-multinomial": lambda a, budget: identities.verify_signed_multinomial(
        a.n, _int_list(a.parts)
    ),
    "signed-wreath": lambda a, budget: identities.verify_signed_wreath(a.r, a.n, budget),
    "lift": lambda a, budget: identities.verify_lift_identity(a.r, a.s, a.n, budget),
    "carlitz-des": lambda a, budget: identities.verify_carlitz_des(
        a.r, a.p, a.s, a.n, a.tmax, _cap(a, "qmax"), a.amax, budget
    ),
    "carlitz-fdes": lambda a, budget: identities.verify_carlitz_fdes(
        a.r, a.p, a.s, a.n, a.tmax, _cap(a, "qmax"), budget
    ),
    "fdes-trivariate": lambda a, budget: identities.verify_fdes_trivariate(
        a.r, a.p, a.s, a.n, a.tmax, _cap(a, "qmax"), a.amax, budget
    ),
    "six-stats": lambda a, budget: identities.verify_six_stats(
        a.r, a.p, a.s, a.nmax, a.tmax, _cap(a, "qmax", 8), a.umax, budget
    ),
    "hilbert": lambda a, budget: identities.verify_hilbert(
        a.r, a.p, a.s, a.nmax, _cap(a, "qmax"), budget
    ),
}


def _cap(args, name, fallback=6):
    value = getattr(args, name, None)
    if value is not None:
        return value
    return args.caps if args.caps is not None else fallback


def _int_list(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(","))


def _emit_table(rows: list[tuple], header: tuple | None = None) -> str:
    cols = [header] + rows if header else rows
    widths = [max(len(str(row[i])) for row in cols) for i in range(len(cols[0]))]
    lines = []
    for row in cols:
        lines.append("  ".join(str(v).ljust(w) for v, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _emit_csv(rows: list[tuple], header: tuple) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _emit(args, payload: dict, rows: list[tuple], header: tuple) -> None:
    if args.format == "json":
        print(json.dumps({"schema": 1, **payload}, sort_keys=True))
    elif args.format == "csv":
        print(_emit_csv(rows, header))
    else:
        print(_emit_table(rows, header))


def cmd_stats(args) -> int:
    group = parse_group(args.group)
    budget = args.budget
    if args.element and args.dist:
        raise ValueError("--dist lists a whole group; drop the element argument")
    if args.element:
        g = parse_window(args.element, group)
        rec = stat_record(g).to_json()
        payload = {"group": str(group), "element": format_window(g), "stats": rec}
        rows = [(k, json.dumps(v) if isinstance(v, list) else v) for k, v in rec.items()]
        _emit(args, payload, rows, ("stat", "value"))
        return 0
    hist = Counter()
    for g in enumerate_elements(group, budget):
        rec = stat_record(g)
        hist[(rec.des, rec.fmaj, rec.col)] += 1
    rows = [(d, f, c, cnt) for (d, f, c), cnt in sorted(hist.items())]
    payload = {
        "group": str(group),
        "distribution": [
            {"des": d, "fmaj": f, "col": c, "count": cnt} for d, f, c, cnt in rows
        ],
    }
    _emit(args, payload, rows, ("des", "fmaj", "col", "count"))
    return 0


def cmd_verify(args) -> int:
    if args.json:
        args.format = "json"
    for name in ("tmax", "qmax", "amax", "umax", "caps"):
        value = getattr(args, name, None)
        if value is not None and value < 1:
            raise ValueError(f"--{name} must be positive, got {value}")
    report = VERIFIERS[args.identity](args, args.budget)
    if args.format == "json":
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        rows = [
            ("identity", report.identity),
            ("params", json.dumps(report.params, sort_keys=True)),
            ("region", json.dumps(report.region, sort_keys=True)),
            ("outcome", report.outcome),
            ("count", report.element_count),
            ("millis", round(report.elapsed_ms, 3)),
        ]
        if report.first_mismatch:
            rows.append(("firstMismatch", json.dumps(report.first_mismatch)))
        for note in report.notes:
            rows.append(("note", note))
        if args.format == "csv":
            print(_emit_csv(rows, ("field", "value")))
        else:
            print(_emit_table(rows))
    return 0 if report.matched else 1


def _bijection_group(args, window: str):
    if args.group:
        return parse_group(args.group)
    # infer B_n from the window length when no group is given
    n = window.count(",") + 1
    return make_group(2, 1, 1, n)


def cmd_bijection(args) -> int:
    if args.kind == "nvec":
        group = parse_group(args.group)
        f = _int_list(args.f)
        g, lam, h = nvec_encode(f, group)
        back = nvec_decode(g, lam, h)
        payload = {
            "kind": "nvec",
            "f": list(f),
            "element": format_window(g),
            "lambda": list(lam),
            "h": h,
            "roundTrip": list(back) == list(f),
        }
        rows = [(k, json.dumps(v) if isinstance(v, list) else v) for k, v in payload.items()]
        _emit(args, payload, rows, ("field", "value"))
        return 0
    if args.kind == "bipartite":
        group = parse_group(args.group)
        g = parse_window(args.element, group)
        bp = bipartite_from_tuple(
            g, _int_list(args.lam), _int_list(args.mu), args.h, args.k
        )
        payload = {
            "kind": "bipartite",
            "element": format_window(g),
            "row1": list(bp.row1),
            "row2": list(bp.row2),
            "columnSumClass": bp.column_sum_class(group.r, group.s),
        }
        rows = [(k, json.dumps(v) if isinstance(v, list) else v) for k, v in payload.items()]
        _emit(args, payload, rows, ("field", "value"))
        return 0
    if args.kind == "order-involution":
        group = _bijection_group(args, args.element)
        g = parse_window(args.element, group)
        image = order_involution(g)
        payload = {
            "kind": "order-involution",
            "element": format_window(g),
            "image": format_window(image),
            "desPrimeOfElement": sorted(des_set(g, "PRIME")),
            "desOfImage": sorted(des_set(image, "COLOR")),
            "colPreserved": stat_record(g).col == stat_record(image).col,
        }
        rows = [(k, json.dumps(v) if isinstance(v, list) else v) for k, v in payload.items()]
        _emit(args, payload, rows, ("field", "value"))
        return 0
    if args.kind in ("rs", "rs-transpose"):
        group = _bijection_group(args, args.element)
        g = parse_window(args.element, group)
        (p0, p1), (q0, q1) = rs_correspondence(g)
        payload = {
            "kind": args.kind,
            "element": format_window(g),
            "P0": [list(row) for row in p0],
            "P1": [list(row) for row in p1],
            "Q0": [list(row) for row in q0],
            "Q1": [list(row) for row in q1],
        }
        if args.kind == "rs-transpose":
            image = rs_transpose_map(g)
            split_g = bn_descent_split(g)
            payload.update(
                image=format_window(image),
                negPreserved=sorted(split_g.neg)
                == sorted(bn_descent_split(image).neg),
                desTransported=des_set(g, "COLOR") == des_set(image, "PRIME"),
            )
        else:
            payload.update(
                desQ0=sorted(tableau_descents(q0)),
                desQ1=sorted(tableau_descents(q1)),
            )
        rows = [(k, json.dumps(v) if isinstance(v, (list, bool)) else v) for k, v in payload.items()]
        _emit(args, payload, rows, ("field", "value"))
        return 0
    raise ValueError(f"unknown bijection kind {args.kind!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="projstat",
        description="Exact descent statistics and identity verifiers for G(r,p,s,n).",
    )
    parser.add_argument(
        "--budget",
        type=int,
        default=None,
        help="max group order to enumerate (default 10^6 or PROJSTAT_BUDGET)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_stats = sub.add_parser("stats", help="statistics of one element or a distribution")
    p_stats.add_argument("group", help="group descriptor, e.g. G(6,2,3,8)")
    p_stats.add_argument("element", nargs="?", help="window notation, e.g. [2^2,1,3]")
    p_stats.add_argument("--dist", action="store_true", help="force the distribution table")
    p_stats.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p_stats.set_defaults(func=cmd_stats)

    p_verify = sub.add_parser("verify", help="run one identity verifier")
    p_verify.add_argument("identity", choices=sorted(VERIFIERS))
    p_verify.add_argument("--r", type=int, default=1)
    p_verify.add_argument("--p", type=int, default=1)
    p_verify.add_argument("--s", type=int, default=1)
    p_verify.add_argument("--n", type=int, default=3)
    p_verify.add_argument("--nmax", type=int, default=3)
    p_verify.add_argument("--eps", type=int, default=1)
    p_verify.add_argument("--k", type=int, default=0)
    p_verify.add_argument("--parts", default="", help="composition for signed-multinomial")
    p_verify.add_argument("--tmax", type=int, default=6)
    p_verify.add_argument("--qmax", type=int, default=None)
    p_verify.add_argument("--amax", type=int, default=None)
    p_verify.add_argument("--umax", type=int, default=3)
    p_verify.add_argument("--caps", type=int, default=None, help="default cap for q variables")
    p_verify.add_argument("--json", action="store_true", help="JSON report on stdout")
    p_verify.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p_verify.set_defaults(func=cmd_verify)

    p_bij = sub.add_parser("bijection", help="apply one of the explicit bijections")
    p_bij.add_argument(
        "kind", choices=("nvec", "bipartite", "order-involution", "rs", "rs-transpose")
    )
    p_bij.add_argument("element", nargs="?", help="window notation input")
    p_bij.add_argument("--group", default=None, help="group descriptor (default: B_n)")
    p_bij.add_argument("--f", default=None, help="comma-separated vector for nvec")
    p_bij.add_argument("--lam", default="", help="partition, e.g. 1,0")
    p_bij.add_argument("--mu", default="", help="partition, e.g. 0,0")
    p_bij.add_argument("--h", type=int, default=0)
    p_bij.add_argument("--k", type=int, default=0)
    p_bij.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p_bij.set_defaults(func=cmd_bijection)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:  # pragma: no cover
        return 0
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
