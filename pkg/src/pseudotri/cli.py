"""Command-line front end: point-set generation, enumeration, counting, checks, tables."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import counters as C
from . import harness as H
from .enumerator import DEFAULT_CAP, leaves, stratify, stratify_by_tip
from .geom import FamilySpec, format_points, make_family, read_points
from .search import BudgetExceeded

FAMILIES = ("convex", "almost-convex", "single-chain", "double-chain")
KINDS = ("t", "ppt", "pt", "pt-w", "ppt-w")
SUITES = ("monotonicity", "inequality", "identities", "bijection", "asymptotics")
TABLES = ("ali", "t-array", "E", "F", "ratio")
SEQUENCES = ("A059346", "A062991", "A062992", "A035002", "A051708")


class UsageError(Exception):
    pass


def _ints(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}")


def _write_csv(out, header: list, rows: list[list]) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_MINIMAL)
    w.writerow(header)
    w.writerows(rows)
    out.write(buf.getvalue())


# -- gen ----------------------------------------------------------------------------

def _family_spec(family: str, params: list[str]) -> FamilySpec:
    try:
        if family == "almost-convex":
            if not params:
                raise UsageError("almost-convex needs: v [hosts]")
            return FamilySpec(family, (int(params[0]), _ints(params[1] if len(params) > 1 else "")))
        want = {"convex": 1, "single-chain": 1, "double-chain": 2}[family]
        if len(params) != want:
            raise UsageError(f"{family} takes {want} integer parameter(s)")
        return FamilySpec(family, tuple(int(p) for p in params))
    except ValueError as err:
        raise UsageError(str(err))


def cmd_gen(args, out) -> int:
    spec = _family_spec(args.family, args.params)
    try:
        ps = make_family(spec)
    except ValueError as err:
        raise UsageError(str(err))
    text = format_points(ps)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


# -- enumerate ------------------------------------------------------------------------

def cmd_enumerate(args, out) -> int:
    try:
        ps = read_points(args.points)
    except (OSError, ValueError) as err:
        raise UsageError(f"cannot read {args.points}: {err}")
    budget = args.budget or None
    try:
        if args.by_tip:
            if ps.family is None or ps.family.kind != "single-chain":
                raise UsageError("--by-tip needs a single-chain point file")
            tbl = stratify_by_tip(ps, budget=budget, workers=args.workers, cap=args.cap)
            kind = "ppt by tip"
        elif args.stratify:
            tbl = stratify(ps, pointed_only=args.pointed, budget=budget, workers=args.workers,
                           cap=args.cap)
            kind = "ppt" if args.pointed else "pt by pointed set"
        else:
            _, found = leaves(ps, args.pointed, budget, args.workers, args.cap)
            tbl = None
            kind = "ppt" if args.pointed else "pt"
    except BudgetExceeded as err:
        sys.stderr.write(f"node budget exhausted after {err.nodes} nodes\n")
        return 1
    except ValueError as err:
        raise UsageError(str(err))
    if tbl is None:
        if args.format == "json":
            out.write(json.dumps({"n": ps.n, "kind": kind, "count": str(len(found))}, indent=2) + "\n")
        else:
            _write_csv(out, ["kind", "count"], [[kind, len(found)]])
        return 0
    if args.format == "json":
        obj = tbl.to_json()
        obj["kind"] = kind
        out.write(json.dumps(obj, indent=2) + "\n")
    else:
        _write_csv(out, ["w", "count"],
                   [[" ".join(map(str, w.members)), tbl[w]] for w in tbl.keys()])
    return 0


# -- count -----------------------------------------------------------------------------

def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required for this family")


def count_value(args) -> int:
    fam, kind = args.family, args.kind
    w, w2 = _ints(args.w), _ints(args.w2)
    if kind not in ("pt-w", "ppt-w") and (w or w2):
        raise UsageError("--w only applies to pt-w and ppt-w")
    try:
        if fam == "convex":
            _need(args, "n")
            if kind in ("pt-w", "ppt-w"):
                raise UsageError("convex position has no interior points")
            return C.catalan(args.n - 2)
        if fam == "almost-convex":
            _need(args, "v", "i")
            v, i = args.v, args.i
            if kind == "t":
                return C.t_almost_convex(v, i)
            if kind == "ppt":
                return C.ppt_almost_convex(v, i)
            if kind == "pt":
                return C.pt_almost_convex(v, i)
            if kind == "pt-w":
                if any(not 0 <= x < i for x in w) or len(set(w)) != len(w):
                    raise UsageError(f"--w must list distinct interior points 0..{i - 1}")
                return C.s_almost_convex(v, i - len(w), len(w))
            raise UsageError("ppt-w is defined for single chains only")
        if fam == "single-chain":
            _need(args, "l")
            l = args.l
            return {"t": lambda: C.catalan(l), "ppt": lambda: C.ppt_single_chain(l),
                    "pt": lambda: C.pt_single_chain(l),
                    "pt-w": lambda: C.pt_W_single_chain(l, w),
                    "ppt-w": lambda: C.ppt_W_single_chain(l, w)}[kind]()
        _need(args, "l", "m")
        l, m = args.l, args.m
        if kind == "t":
            return C.triangulations_double_chain(l, m)
        if kind == "ppt":
            return C.ppt_double_chain(l, m)
        if kind == "pt":
            return C.pt_double_chain(l, m)
        if kind == "pt-w":
            return C.pt_VW_double_chain(l, m, w, w2)
        raise UsageError("ppt-w is defined for single chains only")
    except ValueError as err:
        raise UsageError(str(err))


def cmd_count(args, out) -> int:
    out.write(f"{count_value(args)}\n")
    return 0


# -- verify ----------------------------------------------------------------------------

def verify_suite(suite: str, max_n: int, seed: int) -> H.VerificationReport:
    if suite in ("monotonicity", "inequality"):
        return H.conjecture_sweep(max_n, seed, monotone=suite == "monotonicity",
                                  triple=suite == "inequality")
    if suite == "identities":
        rep = H.VerificationReport(f"identities, families up to n={max_n}")
        rep.extend(H.identity_report())
        rep.extend(H.single_chain_report(max(0, min(max_n - 3, 6))))
        rep.extend(H.almost_convex_report(max_n, min(max_n, 8)))
        if max_n >= 4:
            rep.extend(H.double_chain_report(min((max_n - 4) // 2, 2)))
        for n in range(5, min(max_n, 7) + 1):
            for ps in H.single_interior_sets(n):
                rep.extend(H.check_single_interior_catalan(ps))
        return rep
    if suite == "bijection":
        rep = H.VerificationReport(f"bijections, single chains up to n={max_n}")
        rep.extend(H.bijection_report(max(1, min(max_n - 3, 4)), max(1, min(max_n - 3, 6)),
                                      max(1, min(max_n - 3, 5))))
        rep.extend(H.reconstruction_report(max(1, min(max_n - 3, 5))))
        return rep
    return H.asymptotic_report()


def cmd_verify(args, out) -> int:
    rep = verify_suite(args.suite, args.max_n, args.seed)
    if args.format == "json":
        out.write(rep.dumps(timing=args.timing))
    else:
        out.write(rep.to_text(timing=args.timing))
    return 0 if rep.ok else 1


# -- table -----------------------------------------------------------------------------

def table_rows(name: str, rows: int) -> tuple[list, list[list]]:
    if name == "ali":
        header = ["l"] + [str(i) for i in range(rows)] + ["sum"]
        body = []
        for l in range(rows):
            vals = [C.a_single_chain(l, i) for i in range(l + 1)]
            body.append([l] + vals + [""] * (rows - l - 1) + [sum(vals)])
        return header, body
    if name == "t-array":
        header = ["v"] + [f"i={i}" for i in range(rows)]
        return header, [[v] + [C.t_array(v - 2, i) for i in range(rows)] for v in range(2, rows + 2)]
    if name in ("E", "F"):
        f = C.E_rook if name == "E" else C.F_rook
        header = ["l"] + [f"m={m}" for m in range(rows)]
        return header, [[l] + [f(l, m) for m in range(rows)] for l in range(rows)]
    header = ["k"] + list(H.FAMILY_LIMITS)
    body = []
    for k in range(1, rows + 1):
        # the double circle needs at least a triangle
        body.append([k] + [H.ratio_row(fam, k).ratio if fam != "double-circle" or k >= 3 else ""
                           for fam in H.FAMILY_LIMITS])
    body.append(["limit"] + [H.ratio_row(fam, 3).limit for fam in H.FAMILY_LIMITS])
    return header, body


def cmd_table(args, out) -> int:
    header, body = table_rows(args.name, args.rows)
    if args.format == "json":
        obj = {"name": args.name, "header": header,
               "rows": [[str(c) for c in row] for row in body]}
        out.write(json.dumps(obj, indent=2) + "\n")
    else:
        _write_csv(out, header, body)
    return 0


# -- seq -------------------------------------------------------------------------------

def _antidiagonals(f, terms: int) -> list[int]:
    out = []
    d = 0
    while len(out) < terms:
        for a in range(d + 1):
            if len(out) == terms:
                break
            out.append(f(a, d - a))
        d += 1
    return out


def sequence(name: str, terms: int) -> list[int]:
    if name == "A059346":
        # rows of the Catalan difference array, read by antidiagonals
        return _antidiagonals(lambda r, i: C.t_array(r, i), terms)
    if name == "A062991":
        out: list[int] = []
        l = 0
        while len(out) < terms:
            out += [C.a_single_chain(l, i) for i in range(l + 1)]
            l += 1
        return out[:terms]
    if name == "A062992":
        return [C.ppt_single_chain(l) for l in range(terms)]
    if name == "A035002":
        return _antidiagonals(C.rook_paths, terms)
    # diagonal, shifted by one so that it starts 1, 2, 14, ...
    return [1] + [C.E_rook(m, m) for m in range(terms - 1)] if terms else []


def cmd_seq(args, out) -> int:
    if args.terms < 0:
        raise UsageError("--terms must be >= 0")
    vals = sequence(args.name, args.terms)
    if args.bfile:
        out.write("".join(f"{k} {v}\n" for k, v in enumerate(vals)))
    else:
        out.write(", ".join(map(str, vals)) + "\n")
    return 0


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pseudotri",
                                 description="Count and enumerate pseudo-triangulations.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a family point set")
    g.add_argument("--family", choices=FAMILIES, required=True)
    g.add_argument("--params", nargs="+", default=[],
                   help="convex: n; almost-convex: v [h1,h2,...]; single-chain: l; double-chain: l m")
    g.add_argument("--out", help="output file (default stdout)")
    g.set_defaults(func=cmd_gen)

    e = sub.add_parser("enumerate", help="brute-force counts for a point file")
    e.add_argument("--points", required=True)
    e.add_argument("--stratify", action="store_true", help="key counts by the pointed interior set")
    e.add_argument("--by-tip", action="store_true", help="single chain: key by tip neighbours")
    e.add_argument("--pointed", action="store_true", help="pointed pseudo-triangulations only")
    e.add_argument("--format", choices=("json", "csv"), default="json")
    e.add_argument("--workers", type=int, default=1)
    e.add_argument("--cap", type=int, default=None, help=f"point cap (default {DEFAULT_CAP})")
    e.add_argument("--budget", type=int, default=0, help="search node budget (0 = none)")
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("count", help="closed-form and recursive counts")
    c.add_argument("--family", choices=FAMILIES, required=True)
    c.add_argument("--kind", choices=KINDS, required=True)
    for name in ("n", "v", "i", "l", "m"):
        c.add_argument(f"--{name}", type=int)
    c.add_argument("--w", help="comma-separated subset (top chain for double chains)")
    c.add_argument("--w2", help="double chain: comma-separated bottom subset, 1..m")
    c.set_defaults(func=cmd_count)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--max-n", type=int, default=9)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--timing", action="store_true", help="append elapsed time")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="print a table of counts")
    t.add_argument("--name", choices=TABLES, required=True)
    t.add_argument("--rows", type=int, default=6)
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("seq", help="print an integer sequence")
    s.add_argument("--name", choices=SEQUENCES, required=True)
    s.add_argument("--terms", type=int, default=20)
    s.add_argument("--bfile", action="store_true", help="one 'index value' pair per line")
    s.set_defaults(func=cmd_seq)
    return ap


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as err:
        return int(err.code or 0)
    try:
        return args.func(args, out)
    except UsageError as err:
        ap.print_usage(sys.stderr)
        sys.stderr.write(f"pseudotri {args.command}: error: {err}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
