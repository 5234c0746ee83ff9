"""Command-line front end.

Exit status: 0 success, 1 failed verification, 2 usage error, 3 resource
ceiling exceeded.  Diagnostics go to stderr as ``error: <code>: <message>``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import exactnum, gentree, partitions, recurrences, series, sequences
from .errors import DomainError, InvseqError, ResourceLimitError
from .polys import Poly, TSeries
from .report import Check

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

METHODS = ("brute", "tree", "recurrence", "closed-form")
CHECKS = (
    "feq-ggm", "feq-aw", "kernel", "ode-e", "ode-f", "ode-c", "identity-c3",
    "identity-motzkin", "kimlin:<k>", "phi", "operator", "lagrange", "labels",
)
SERIES = ("ggm", "aw", "y", "r", "ediag", "pt-r")


class UsageError(InvseqError):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D401 - argparse hook
        raise UsageError(message)


# -- argument helpers --------------------------------------------------------


def parse_range(text: str) -> list[int]:
    """``"8"`` -> [8]; ``"1..8"`` -> [1, ..., 8]."""
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            a, b = int(lo), int(hi)
            if a > b:
                raise UsageError(f"empty range {text!r}")
            return list(range(a, b + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(f"--n expects an integer or a..b, got {text!r}") from None


def _family_k(family: str) -> int:
    try:
        return int(family.split(":", 1)[1])
    except (IndexError, ValueError):
        raise UsageError(f"{family!r} needs an integer after ':'") from None


# -- count ---------------------------------------------------------------------


def _partition_guard(n: int, ceiling: int) -> None:
    if n >= 1 and exactnum.bell(n) > ceiling:
        raise ResourceLimitError(f"partitions of [{n}] number {exactnum.bell(n)} > ceiling {ceiling}")


def _crossing_counter(family: str, ceiling: int) -> Callable[[int], int]:
    k = _family_k(family)
    if k < 2:
        raise UsageError(f"crossing families need k >= 2, got {family!r}")
    enhanced = family.startswith("e:")

    def count(n: int) -> int:
        _partition_guard(n, ceiling)
        return partitions.count_crossing_avoiders(n, k, enhanced, max_n=max(n, 1))

    return count


def _tree_counter(rule: str, ns: list[int]) -> Callable[[int], int]:
    top = max(ns)
    if rule == "ggm":
        totals = gentree.ggm_level_totals(top)
    else:
        totals = [p.total for p in gentree.level_profiles(gentree.AW_RULE, top)]
    return lambda n: totals[n - 1]


def counter(family: str, method: str, ns: list[int], ceiling: int) -> Callable[[int], int]:
    """Function ``n -> value`` for a family and method, or a usage error."""
    if min(ns) < 1:
        raise UsageError("--n must be at least 1")
    unsupported = UsageError(f"method {method!r} is not available for family {family!r}")
    if method == "brute":
        if family == "partitions":
            def count_partitions(n: int) -> int:
                _partition_guard(n, ceiling)
                return sum(1 for _ in partitions.enumerate_partitions(n, max_n=n))
            return count_partitions
        if family.startswith(("c:", "e:")):
            return _crossing_counter(family, ceiling)
        fam = sequences.parse_family(family)
        return lambda n: sequences.count_family(fam, n, ceiling)
    if method == "tree":
        if family in ("ggm", "aw"):
            return _tree_counter(family, ns)
        raise unsupported
    if method == "recurrence":
        if family in ("ggm", "e:3"):
            seq = recurrences.e3_sequence(max(ns))
            return lambda n: seq[n]
        if family in ("asc210", "c:3"):
            seq = recurrences.c3_sequence(max(ns))
            return lambda n: seq[n]
        raise unsupported
    if method == "closed-form":
        closed = {
            "ggm": recurrences.e_closed_form,
            "e:3": recurrences.e_closed_form,
            "partitions": exactnum.bell,
            "c:2": exactnum.catalan,
            "kaw:1": exactnum.catalan,
            "e:2": exactnum.motzkin,
        }
        if family in closed:
            return closed[family]
        raise unsupported
    raise UsageError(f"unknown method {method!r}")


# -- output --------------------------------------------------------------------


def jsonable(obj: Any) -> Any:
    """Integers (and exact rationals) become decimal strings, recursively."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def dump_json(obj: Any) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, separators=(",", ":"))


def series_dump(s: TSeries[Poly]) -> dict:
    terms = []
    for n in range(s.order + 1):
        c = s[n]
        monos = []
        for mono, coef in c.items():
            entry = dict(zip(c.vars, mono))
            entry["num"] = coef.numerator
            entry["den"] = coef.denominator
            monos.append(entry)
        terms.append({"t": n, "monomials": monos})
    return {"order": s.order, "terms": terms}


def _emit_rows(out, fmt: str, rows: list[dict], columns: Sequence[str], single_key: str | None):
    if fmt == "json":
        payload: Any = rows[0] if len(rows) == 1 else rows
        out.write(dump_json(payload) + "\n")
    elif fmt == "tsv":
        for row in rows:
            out.write("\t".join(str(row[c]) for c in columns) + "\n")
    else:
        if len(rows) == 1 and single_key:
            out.write(f"{rows[0][single_key]}\n")
        else:
            for row in rows:
                out.write(" ".join(str(row[c]) for c in columns) + "\n")


# -- commands ------------------------------------------------------------------


def cmd_count(args, out) -> int:
    ns = parse_range(args.n)
    fn = counter(args.family, args.method, ns, args.ceiling)
    rows = [{"family": args.family, "n": n, "method": args.method, "value": fn(n)} for n in ns]
    _emit_rows(out, args.format, rows, ("n", "value"), "value")
    return EXIT_OK


def _format_obj(obj) -> str:
    if isinstance(obj, partitions.SetPartition):
        return str(obj)
    return "(" + ",".join(map(str, obj)) + ")"


def cmd_list(args, out) -> int:
    ns = parse_range(args.n)
    for n in ns:
        if n < 1:
            raise UsageError("--n must be at least 1")
        if args.family == "partitions":
            _partition_guard(n, args.ceiling)
            objs: list = list(partitions.enumerate_partitions(n, max_n=n))
            raw = [[list(b) for b in p.blocks] for p in objs]
        else:
            objs = sequences.enumerate_family(args.family, n, args.ceiling)
            raw = [list(o) for o in objs]
        if args.format == "json":
            out.write(dump_json({"family": args.family, "n": n, "objects": raw}) + "\n")
        else:
            sep = "\t" if args.format == "tsv" else " "
            for obj in objs:
                prefix = f"{n}{sep}" if len(ns) > 1 else ""
                out.write(prefix + _format_obj(obj) + "\n")
    return EXIT_OK


def cmd_tree(args, out) -> int:
    n_max = max(parse_range(args.n))
    rule = gentree.rule_by_name(args.family)
    if n_max < 1:
        raise UsageError("--n must be at least 1")
    if args.labels or args.format == "json":
        profiles = gentree.level_profiles(rule, n_max)
        levels = [
            {
                "level": p.level,
                "total": p.total,
                "labels": [{"p": lab.p, "q": lab.q, "count": m} for lab, m in p.multiplicities.items()],
            }
            for p in profiles
        ]
    else:
        totals = _tree_counter(args.family, [n_max])
        levels = [{"level": n, "total": totals(n)} for n in range(1, n_max + 1)]
    if args.format == "json":
        out.write(dump_json({"rule": rule.name, "levels": levels}) + "\n")
        return EXIT_OK
    sep = "\t" if args.format == "tsv" else " "
    for lv in levels:
        line = f"{lv['level']}{sep}{lv['total']}"
        if args.labels:
            line += sep + " ".join(f"({d['p']},{d['q']})x{d['count']}" for d in lv["labels"])
        out.write(line + "\n")
    return EXIT_OK


def build_series(which: str, order: int) -> TSeries[Poly]:
    if order < 1:
        raise UsageError("--order must be at least 1")
    builders = {
        "ggm": series.ggm_series,
        "aw": series.aw_series,
        "y": series.y_series,
        "r": series.r_series,
        "ediag": series.e_diag_series,
        "pt-r": lambda n: series.pt_x(series.r_series(n)),
    }
    if which not in builders:
        raise UsageError(f"unknown series {which!r}; expected one of {', '.join(SERIES)}")
    return builders[which](order)


def cmd_series(args, out) -> int:
    s = build_series(args.family, args.order)
    if args.format == "json":
        out.write(dump_json(series_dump(s)) + "\n")
    else:
        sep = "\t" if args.format == "tsv" else ": "
        for n in range(s.order + 1):
            out.write(f"t^{n}{sep}{s[n]!r}\n")
    return EXIT_OK


def run_check(name: str, order: int | None, n: int | None) -> Check:
    if name.startswith("kimlin:"):
        k = _family_k(name)
        if k < 2:
            raise UsageError("kimlin needs k >= 2")
        return recurrences.verify_kimlin(k, n if n is not None else 8)
    table: dict[str, Callable[[], Check]] = {
        "feq-ggm": lambda: series.verify_ggm_feq(order or 10),
        "feq-aw": lambda: series.verify_aw_feq(order or 10),
        "kernel": lambda: series.verify_kernel_identity(order or 10),
        "ode-e": lambda: series.verify_ode("E", order or 30),
        "ode-f": lambda: series.verify_ode("F", order or 30),
        "ode-c": lambda: series.verify_ode("C", order or 30),
        "identity-c3": lambda: recurrences.verify_c3_identity(n if n is not None else 100),
        "identity-motzkin": lambda: recurrences.verify_motzkin_identity(n if n is not None else 12),
        "phi": lambda: sequences.verify_phi(n if n is not None else 8),
        "operator": lambda: recurrences.verify_operator_identity(n if n is not None else 50),
        "lagrange": lambda: series.verify_lagrange(order or 10),
        "labels": lambda: gentree.verify_labels(n if n is not None else 8),
    }
    if name not in table:
        raise UsageError(f"unknown check {name!r}; expected one of {', '.join(CHECKS)}")
    return table[name]()


def cmd_verify(args, out) -> int:
    n = int(args.n) if args.n is not None else None
    if n is not None and n < 1:
        raise UsageError("--n must be at least 1")
    result = run_check(args.check, args.order, n)
    if args.format == "json":
        payload = {"check": result.name, "params": result.params, "ok": result.ok}
        if result.counterexample is not None:
            payload["counterexample"] = result.counterexample
        out.write(dump_json(payload) + "\n")
    elif result.ok:
        out.write("OK\n")
    else:
        detail = " ".join(f"{k}={v}" for k, v in result.counterexample.items())
        out.write(f"FAIL {result.name}: {detail}\n")
    return EXIT_OK if result.ok else EXIT_FAIL


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="invseq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    fmt = dict(choices=("plain", "tsv", "json"), default="plain")

    p = sub.add_parser("count", help="count objects of a family")
    p.add_argument("--family", required=True,
                   help="ggm|aw|kaw:<k>|asc210|pasc210|partitions|c:<k>|e:<k> (also inv, asc)")
    p.add_argument("--n", required=True, help="length, or a range a..b")
    p.add_argument("--method", choices=METHODS, default="brute")
    p.add_argument("--format", **fmt)
    p.add_argument("--ceiling", type=int, default=sequences.DEFAULT_CEILING)
    p.set_defaults(run=cmd_count)

    p = sub.add_parser("list", help="list the objects of a family")
    p.add_argument("--family", required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--format", **fmt)
    p.add_argument("--ceiling", type=int, default=sequences.DEFAULT_CEILING)
    p.set_defaults(run=cmd_list)

    p = sub.add_parser("tree", help="expand a generating tree level by level")
    p.add_argument("--family", required=True, choices=("ggm", "aw"))
    p.add_argument("--n", required=True)
    p.add_argument("--labels", action="store_true", help="print label multiplicities")
    p.add_argument("--format", **fmt)
    p.set_defaults(run=cmd_tree)

    p = sub.add_parser("series", help="dump a truncated series")
    p.add_argument("--family", required=True, choices=SERIES)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", **fmt)
    p.set_defaults(run=cmd_series)

    p = sub.add_parser("verify", help="run one verification suite")
    p.add_argument("--check", required=True, help=" | ".join(CHECKS))
    p.add_argument("--order", type=int)
    p.add_argument("--n")
    p.add_argument("--format", **fmt)
    p.set_defaults(run=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "ceiling", 1) < 1:
            raise UsageError("--ceiling must be positive")
        if args.verb == "verify" and args.n is not None:
            try:
                int(args.n)
            except ValueError:
                raise UsageError(f"--n expects an integer, got {args.n!r}") from None
        return args.run(args, out)
    except ResourceLimitError as exc:
        err.write(f"error: {exc.code}: {exc}\n")
        return EXIT_RESOURCE
    except (UsageError, DomainError) as exc:
        err.write(f"error: usage: {exc}\n")
        return EXIT_USAGE
    except InvseqError as exc:
        err.write(f"error: {exc.code}: {exc}\n")
        return EXIT_FAIL


def main() -> None:
    sys.exit(run())
