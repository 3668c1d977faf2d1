"""Command-line front end.

Subcommands cover single queries (criterion, riley, liminal-point), table
reproduction (lucas, rn), and verification scans (scan, verify-thm1,
verify-thm5, remark64, counterexample).  Scans stream deterministic rows
as JSON lines, CSV, or aligned tables; exit status is 0 when every
consistency check passed, 1 when an inconsistency or counterexample was
found, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import covers, liminal, sequences
from .knots import (
    ConstructionError,
    DoubleTwistKnot,
    TwoBridgeKnot,
    alexander_double_twist,
    fox_alexander,
    parse_knot,
    riley_polynomial,
    riley_polynomial_general,
)
from .numtheory import DEFAULT_BUDGET, DomainError, factorize, primes_up_to
from .padic import HenselError

USAGE_ERROR = 2


def _emit_rows(rows: list[dict], fmt: str, out) -> None:
    if not rows:
        return
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(row, separators=(",", ":")) + "\n")
    elif fmt == "csv":
        keys = list(rows[0].keys())
        out.write(",".join(keys) + "\n")
        for row in rows:
            out.write(",".join(_csv_cell(row.get(k)) for k in keys) + "\n")
    else:
        keys = list(rows[0].keys())
        table = [[_plain(row.get(k)) for k in keys] for row in rows]
        widths = [
            max(len(keys[i]), max(len(r[i]) for r in table)) for i in range(len(keys))
        ]
        out.write("  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip() + "\n")
        for r in table:
            out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def _csv_cell(value) -> str:
    text = _plain(value)
    if "," in text or '"' in text:
        text = '"' + text.replace('"', '""') + '"'
    return text


def _plain(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _fact_str(fact) -> str:
    return str(fact) if fact is not None else "INFINITE"


def _cover_rows(label: str, records) -> tuple[list[dict], bool]:
    rows: list[dict] = []
    all_ok = True
    for rec in records:
        all_ok = all_ok and rec.consistent
        base = {
            "knot": label,
            "n": rec.n,
            "r_n": rec.r_n,
            "r_n_factors": _fact_str(rec.factorization),
        }
        if rec.checks:
            for check in rec.checks:
                rows.append(
                    base
                    | {
                        "p": check.p,
                        "criterion": check.criterion,
                        "consistent": check.consistent,
                    }
                )
        else:
            rows.append(base | {"p": None, "criterion": None, "consistent": rec.consistent})
    return rows, all_ok


# ---------------------------------------------------------------------------
# subcommands

def _cmd_criterion(args, out) -> int:
    knot = parse_knot(args.knot)
    if not isinstance(knot, DoubleTwistKnot):
        raise DomainError("criterion takes a J(2k,2l) knot; use remark64 for b(...)")
    verdict = liminal.liminal_character_exists(knot, args.p)
    _emit_rows([liminal.verdict_record(knot, args.p, verdict)], args.format, out)
    return 0


def _cmd_riley(args, out) -> int:
    knot = parse_knot(args.knot)
    if isinstance(knot, DoubleTwistKnot):
        poly = riley_polynomial(knot)
        out.write(f"{knot.label}: f(x,y) = {poly}\n")
    else:
        poly = riley_polynomial_general(knot)
        out.write(f"{knot.label}: f(x,y) = {poly}\n")
        twin = _double_twist_twin(poly)
        if twin is not None:
            out.write(f"cross-check: equals riley_polynomial({twin.label}) up to sign\n")
    out.write(f"f(x,2) = {poly.specialize_y(2)}\n")
    return 0


def _double_twist_twin(poly) -> DoubleTwistKnot | None:
    for k in range(-4, 5):
        for l in range(-4, 5):
            if (k, l) == (0, 0):
                continue
            knot = DoubleTwistKnot(k, l)
            other = riley_polynomial(knot)
            if other == poly or other == -poly:
                return knot
    return None


def _cmd_lucas(args, out) -> int:
    rows = []
    for n, value, fact in sequences.lucas_table(
        args.m, args.nmax, budget=args.budget, seed=args.seed
    ):
        rows.append({"n": n, "L_n": value, "factorization": _fact_str(fact)})
    _emit_rows(rows, args.format, out)
    return 0


def _cmd_rn(args, out) -> int:
    knot = parse_knot(args.knot)
    if isinstance(knot, DoubleTwistKnot):
        label, delta = knot.label, alexander_double_twist(knot)
    else:
        label, delta = knot.label, fox_alexander(knot)
    rows = []
    for n in range(1, args.nmax + 1):
        value = covers.r_n(delta, n)
        fact = None
        if value:
            fact = factorize(value, budget=args.budget, seed=args.seed)
        rows.append(
            {"knot": label, "n": n, "r_n": value, "r_n_factors": _fact_str(fact)}
        )
    _emit_rows(rows, args.format, out)
    return 0


def _cmd_scan(args, out) -> int:
    knot = parse_knot(args.knot)
    if not isinstance(knot, DoubleTwistKnot):
        raise DomainError("scan takes a J(2k,2l) knot")
    rows = []
    for p in primes_up_to(args.pmax):
        verdict = liminal.liminal_character_exists(knot, p)
        rows.append(liminal.verdict_record(knot, p, verdict))
    _emit_rows(rows, args.format, out)
    return 0


def _cmd_verify_thm1(args, out) -> int:
    knot = parse_knot(args.knot)
    if not isinstance(knot, DoubleTwistKnot):
        raise DomainError("verify-thm1 takes a J(2k,2l) knot")
    records = covers.verify_main_theorem(
        knot, args.nmax, args.pmax, budget=args.budget, seed=args.seed, jobs=args.jobs
    )
    rows, all_ok = _cover_rows(knot.label, records)
    _emit_rows(rows, args.format, out)
    return 0 if all_ok else 1


def _cmd_verify_thm5(args, out) -> int:
    report = sequences.theorem5_verify(
        args.m, args.nmax, args.pmax, budget=args.budget, seed=args.seed
    )
    rows = [
        {
            "m": report.m,
            "odd_indices": len(report.checked_indices),
            "primes_checked": report.checked_primes,
            "violations": len(report.violations),
            "eight_divides_at": ";".join(map(str, report.eight_divides_at)),
            "skipped": ";".join(map(str, report.skipped_primes)),
            "complete": report.complete,
        }
    ]
    for v in report.violations:
        rows.append({"m": report.m, "violation_index": v.index, "p": v.p, "kind": v.kind})
    _emit_rows(rows, args.format, out)
    return 0 if report.ok else 1


def _cmd_remark64(args, out) -> int:
    knot = parse_knot(args.knot)
    if not isinstance(knot, TwoBridgeKnot):
        raise DomainError("remark64 takes a b(alpha,beta) knot")
    report = covers.remark64_scan(
        knot, args.nmax, args.pmax, budget=args.budget, seed=args.seed, jobs=args.jobs
    )
    rows, _ = _cover_rows(knot.label, report.records)
    _emit_rows(rows, args.format, out)
    out.write(
        f"# alexander = {report.alexander}; exceptions = {list(report.exceptions)}; "
        f"skipped = {list(report.skipped_primes)}\n"
    )
    return 1 if report.exceptions else 0


def _cmd_counterexample(args, out) -> int:
    report = covers.counterexample_scan(args.m, args.p, args.nmax)
    rows = [
        {
            "m": report.m,
            "p": report.p,
            "criterion": report.verdict.exists,
            "reason": report.verdict.reason.value,
            "hits": ";".join(map(str, report.hits)),
            "is_counterexample": report.is_counterexample,
            "internal_consistent": report.internal_consistent,
        }
    ]
    _emit_rows(rows, args.format, out)
    return 0 if report.internal_consistent else 1


def _cmd_liminal_point(args, out) -> int:
    knot = parse_knot(args.knot)
    if not isinstance(knot, DoubleTwistKnot):
        raise DomainError("liminal-point takes a J(2k,2l) knot")
    point = liminal.construct_liminal_character(knot, args.p, args.precision)
    _emit_rows(
        [
            {
                "knot": knot.label,
                "p": args.p,
                "precision": args.precision,
                "x": point.residue,
                "y": 2,
                "modulus": point.modulus,
            }
        ],
        args.format,
        out,
    )
    return 0


# ---------------------------------------------------------------------------
# parser

def _add_common(sub, *, nmax=False, pmax=False, precision=False) -> None:
    sub.add_argument("--format", choices=("json", "csv", "table"), default="table")
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--seed", type=int, default=0)
    if nmax:
        sub.add_argument("--nmax", type=int, required=True)
    if pmax:
        sub.add_argument("--pmax", type=int, required=True)
    if precision:
        sub.add_argument("--precision", type=int, default=10)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padiknot",
        description="Exact p-adic liminality computations for two-bridge knots",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    crit = subs.add_parser("criterion", help="liminal character test at one prime")
    crit.add_argument("knot")
    crit.add_argument("p", type=int)
    _add_common(crit)
    crit.set_defaults(fn=_cmd_criterion)

    ril = subs.add_parser("riley", help="Riley polynomial and its y=2 slice")
    ril.add_argument("knot")
    _add_common(ril)
    ril.set_defaults(fn=_cmd_riley)

    luc = subs.add_parser("lucas", help="Lucas value table with factorizations")
    luc.add_argument("m", type=int)
    luc.add_argument("nmax", type=int)
    _add_common(luc)
    luc.set_defaults(fn=_cmd_lucas)

    rn = subs.add_parser("rn", help="branched cover homology orders")
    rn.add_argument("knot")
    _add_common(rn, nmax=True)
    rn.set_defaults(fn=_cmd_rn)

    scan = subs.add_parser("scan", help="criterion over every prime up to a bound")
    scan.add_argument("knot")
    _add_common(scan, pmax=True)
    scan.set_defaults(fn=_cmd_scan)

    thm1 = subs.add_parser("verify-thm1", help="odd cover scan against the criterion")
    thm1.add_argument("knot")
    _add_common(thm1, nmax=True, pmax=True)
    thm1.set_defaults(fn=_cmd_verify_thm1)

    thm5 = subs.add_parser("verify-thm5", help="Lucas divisor constraint scan")
    thm5.add_argument("m", type=int)
    _add_common(thm5, nmax=True, pmax=True)
    thm5.set_defaults(fn=_cmd_verify_thm5)

    rem = subs.add_parser("remark64", help="general two-bridge exception scan")
    rem.add_argument("knot")
    _add_common(rem, nmax=True, pmax=True)
    rem.set_defaults(fn=_cmd_remark64)

    ctr = subs.add_parser("counterexample", help="probe the converse at one (m, p)")
    ctr.add_argument("m", type=int)
    ctr.add_argument("p", type=int)
    _add_common(ctr, nmax=True)
    ctr.set_defaults(fn=_cmd_counterexample)

    pt = subs.add_parser("liminal-point", help="construct the liminal point mod p^N")
    pt.add_argument("knot")
    pt.add_argument("p", type=int)
    _add_common(pt, precision=True)
    pt.set_defaults(fn=_cmd_liminal_point)

    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already
        return int(exc.code or 0)
    out = out or sys.stdout
    try:
        return args.fn(args, out)
    except (DomainError, ConstructionError, HenselError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
