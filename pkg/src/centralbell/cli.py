"""Command-line front end.

    centralbell table   --rv constant:1 --order 6 --format csv
    centralbell poly    --rv bernoulli:1/3 --order 4
    centralbell fubini  --rv poisson:2
    centralbell moments --rv discrete:1=1/2,2=1/2 --order 5
    centralbell verify  [--rv SPEC ...] [--order N] [--inject-fault N,K]

Exit status: 0 on success, 1 when verification fails, 2 on bad arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .exact import format_rational, poly_to_strings
from .moments import MomentModel, moment, parse_rv, standard_models, sum_power_moment
from .probabilistic import ProbCentralTable
from .verify import Fault, verify_all

MAX_ORDER = 32
DEFAULT_ORDER = 10


def _order(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"order must be an integer, got {text!r}") from None
    if not 0 <= value <= MAX_ORDER:
        raise argparse.ArgumentTypeError(f"order must lie in 0..{MAX_ORDER}, got {value}")
    return value


def _rv(text: str) -> MomentModel:
    try:
        return parse_rv(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fault(text: str) -> Fault:
    try:
        n, k = (int(p) for p in text.split(","))
        return Fault(n, k)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"--inject-fault expects N,K: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="centralbell",
        description="Probabilistic central factorial numbers, central Bell and "
                    "central Fubini polynomials in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, rv_required: bool = True) -> None:
        if rv_required:
            p.add_argument("--rv", type=_rv, required=True,
                           help="random variable, e.g. constant:1, bernoulli:1/3, poisson:2, "
                                "discrete:1=1/2,2=1/2, raw:1,2,3")
        p.add_argument("--order", type=_order, default=DEFAULT_ORDER,
                       help=f"truncation order N (0..{MAX_ORDER}, default {DEFAULT_ORDER})")
        p.add_argument("--format", choices=("csv", "json"), default="json")
        p.add_argument("--out", default=None, help="output file (default: stdout)")

    common(sub.add_parser("table", help="triangle T^Y(n,k), 0 <= k <= n <= N"))
    common(sub.add_parser("poly", help="central Bell polynomials B_n^(c,Y)(x)"))
    common(sub.add_parser("fubini", help="central Fubini polynomials F_n^(c,Y)(x)"))
    common(sub.add_parser("moments", help="E[Y^n] and E[S_k^m] grids"))

    v = sub.add_parser("verify", help="run the identity catalog")
    v.add_argument("--rv", type=_rv, action="append", default=None,
                   help="model to check (repeatable); default is the standard model set")
    common(v, rv_required=False)
    v.add_argument("--inject-fault", type=_fault, default=None, metavar="N,K",
                   help="add 1 to T^Y(N,K) before checking (sensitivity test)")
    return parser


def _csv_text(rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _triangle_header(order: int, corner: str = "n\\k") -> list[str]:
    return [corner] + [str(k) for k in range(order + 1)]


def render_table(model: MomentModel, order: int, fmt: str) -> str:
    table = ProbCentralTable.build(model, order)
    rows = [[format_rational(v) for v in table.T_Y.row(n)] for n in range(order + 1)]
    if fmt == "csv":
        return _csv_text([_triangle_header(order)] + [[str(n)] + r for n, r in enumerate(rows)])
    return _json_text({"rv": model.spec(), "order": order, "triangle": rows})


def _render_polys(model: MomentModel, order: int, fmt: str, polys) -> str:
    if fmt == "csv":
        body = [[str(n)] + [format_rational(p.coeff(i)) for i in range(n + 1)]
                for n, p in enumerate(polys)]
        return _csv_text([_triangle_header(order, "n\\power")] + body)
    return _json_text({
        "rv": model.spec(),
        "order": order,
        "polys": [{"n": n, "coeffs": poly_to_strings(p)} for n, p in enumerate(polys)],
    })


def render_poly(model: MomentModel, order: int, fmt: str) -> str:
    return _render_polys(model, order, fmt, ProbCentralTable.build(model, order).bell_polys)


def render_fubini(model: MomentModel, order: int, fmt: str) -> str:
    return _render_polys(model, order, fmt, ProbCentralTable.build(model, order).fubini_polys)


def render_moments(model: MomentModel, order: int, fmt: str) -> str:
    grid = [[format_rational(sum_power_moment(model, k, m, order)) for m in range(order + 1)]
            for k in range(order + 1)]
    if fmt == "csv":
        return _csv_text([_triangle_header(order, "k\\m")] + [[str(k)] + r for k, r in enumerate(grid)])
    return _json_text({
        "rv": model.spec(),
        "order": order,
        "moments": [format_rational(moment(model, n)) for n in range(order + 1)],
        "sum_moments": grid,
    })


def render_reports(reports, fmt: str) -> str:
    if fmt == "csv":
        return _csv_text([["id", "model", "order", "status"]]
                         + [[r.identity_id, r.model, str(r.order), r.status] for r in reports])
    return "".join(r.to_json() + "\n" for r in reports)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse: 2 on usage errors, 0 for --help
        return exc.code if isinstance(exc.code, int) else 2

    if args.command == "verify":
        models = args.rv if args.rv is not None else standard_models()
        reports = verify_all(models, args.order, args.inject_fault)
        _emit(render_reports(reports, args.format), args.out)
        failed = sum(not r.passed for r in reports)
        print(f"{len(reports) - failed} passed, {failed} not passed", file=sys.stderr)
        return 1 if failed else 0

    render = {
        "table": render_table,
        "poly": render_poly,
        "fubini": render_fubini,
        "moments": render_moments,
    }[args.command]
    try:
        text = render(args.rv, args.order, args.format)
    except ValueError as exc:
        print(f"centralbell: error: {exc}", file=sys.stderr)
        return 2
    _emit(text, args.out)
    return 0


run = main


if __name__ == "__main__":
    sys.exit(main())
