"""Command-line interface.

Exit codes: 0 for MF (or a clean report), 1 for NotMF (or a non-empty
diff), 2 for Unknown and for errors.  Characteristic zero is written p=0.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from typing import Sequence

from . import ingest, paperdata, principal
from .a1mod import sorted_factors
from .charalg import freudenthal
from .errors import MFError
from .jantzen import jsf_sum, simple_solve
from .rootsys import GroupType, RootSystem, build, is_restricted

SCHEMA = 1
EXIT = {"MF": 0, "NotMF": 1, "Unknown": 2}


def _emit(obj: dict) -> None:
    print(json.dumps({"schema": SCHEMA, **obj}, indent=2, ensure_ascii=False))


def _weight(text: str, rank: int) -> tuple[int, ...]:
    try:
        lam = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad weight {text!r}") from None
    if len(lam) != rank:
        raise MFError(f"weight {text} needs {rank} coordinates")
    return lam


def _setup(args) -> tuple[RootSystem, tuple[int, ...], int | None]:
    rs = build(GroupType(args.family, args.rank))
    lam = _weight(args.weight, rs.rank)
    if args.p < 0:
        raise MFError("p must be a prime or 0")
    return rs, lam, args.p or None


def _head(rs, lam, p) -> dict:
    return {"group": str(rs.group_type), "lambda": list(lam), "p": p or 0}


# -- commands ----------------------------------------------------------------

def cmd_verdict(args) -> int:
    rs, lam, p = _setup(args)
    if p is None:
        factors = principal.char0_factors(rs, lam) if any(lam) else {0: 1}
        status = "MF" if all(m <= 1 for m in factors.values()) else "NotMF"
        _emit({**_head(rs, lam, p), "verdict": status, "branch": "char0",
               "r": principal.restrict_weight(rs, lam),
               "factors": sorted_factors(factors), "certificate": None})
        return EXIT[status]
    v = paperdata.verdict(rs, lam, p)
    factors = list(v.factors) if v.factors is not None else None
    certificate = None
    if v.status == "NotMF":
        if is_restricted(lam, p):
            evidence = principal.decide(rs, lam, p)
        else:
            try:
                evidence = principal.mf_decide_computed(rs, lam, p)
            except MFError:
                evidence = None
        if evidence is not None:
            if evidence.status == "MF":
                print("error: computed decomposition contradicts the classification", file=sys.stderr)
                return 2
            factors = list(evidence.factors) if evidence.factors is not None else None
            certificate = evidence.certificate.to_dict() if evidence.certificate else None
    _emit({**_head(rs, lam, p), "verdict": v.status, "branch": v.branch, "r": v.r,
           "factors": factors, "certificate": certificate})
    return EXIT[v.status]


def cmd_restrict(args) -> int:
    rs, lam, p = _setup(args)
    source = args.source
    if source.startswith("file:"):
        table = ingest.load(source[5:])
        if table.key != (rs.group_type, lam, p):
            raise MFError("ingested table does not match the requested group, weight and p")
        source = "irreducible"
    if source not in ("weyl", "irreducible"):
        raise MFError(f"unknown source {args.source!r}")
    r = principal.restrict_weight(rs, lam)
    if source == "weyl" or p is None:
        ch = freudenthal(rs, lam)
        a1 = principal.project(rs, ch)
        exact, src = True, "weyl"
    else:
        ns = principal.n_sequence(rs, lam, p, "irreducible")
        exact, src = ns.exact, ns.source
        ch = None
        if exact:
            a1, _ = principal.irreducible_projection(rs, lam, p)
            if is_restricted(lam, p):
                ch, _ = principal._irreducible_character(rs, lam, p)
        else:
            a1 = None
    if args.tsv:
        if ch is None:
            raise MFError("no G-character available to dump")
        with open(args.tsv, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(ingest.dump(rs.group_type, lam, p, ch.mults))
    if a1 is None:
        ns_list = list(ns.n)
        weights = [[r - 2 * d, ns_list[d]] for d in range(r + 1) if ns_list[d]]
        factors = None
    else:
        weights = [[w, a1[w]] for w in sorted(a1.mults, reverse=True)]
        dec = principal.decompose_projection(a1, p)
        factors = sorted_factors(dec)
    _emit({**_head(rs, lam, p), "source": src, "exactness": "Exact" if exact else "LowerBound",
           "r": r, "weights": weights, "factors": factors})
    return 0


def cmd_certify(args) -> int:
    rs, lam, p = _setup(args)
    if p is None:
        raise MFError("certificates need a prime p")
    cert = principal.certify_not_mf(rs, lam, p)
    if cert is None:
        _emit({**_head(rs, lam, p), "verdict": "Unknown", "certificate": None})
        return 2
    _emit({**_head(rs, lam, p), "verdict": "NotMF", "certificate": cert.to_dict(),
           "verified": principal.verify_certificate(cert)})
    return 1


def cmd_jantzen(args) -> int:
    rs, lam, p = _setup(args)
    if p is None:
        raise MFError("the Jantzen sum needs a prime p")
    js = jsf_sum(rs, lam, p)
    try:
        factors = [[list(mu), k] for mu, k in simple_solve(rs, lam, p)]
    except MFError:
        factors = None
    _emit({**_head(rs, lam, p), "irreducible": js.is_empty,
           "terms": [[list(mu), c] for mu, c in sorted(js.terms.items(), reverse=True)],
           "composition_factors": factors})
    return 0


def _diff_row(t: GroupType, max_coeff: int, max_r: int) -> dict:
    d = paperdata.table1_diff(t, max_coeff, max_r)
    return {"group": str(t), "computed": [list(m) for m in d.computed],
            "missing": [list(m) for m in d.missing], "extra": [list(m) for m in d.extra]}


def cmd_table1(args) -> int:
    types = [t for t in paperdata.SWEEP_TYPES if t.rank <= args.max_rank]
    jobs = max(1, args.jobs)
    work = [(t, args.max_coeff, args.max_r) for t in types]
    if jobs == 1:
        rows = [_diff_row(*w) for w in work]
    else:
        with ProcessPoolExecutor(jobs) as pool:
            rows = list(pool.map(_diff_row, *zip(*work)))  # map keeps input order
    empty = all(not r["missing"] and not r["extra"] for r in rows)
    _emit({"max_rank": args.max_rank, "max_coeff": args.max_coeff, "max_r": args.max_r,
           "empty_diff": empty, "types": rows})
    return 0 if empty else 1


def cmd_rvalues(args) -> int:
    rows = []
    bad = 0
    for t in paperdata.SWEEP_TYPES + (GroupType("A", 1),):
        if t.rank > args.max_rank:
            continue
        rs = build(t)
        checked = mismatched = 0
        for lam in product(range(args.max_coeff + 1), repeat=rs.rank):
            checked += 1
            if principal.restrict_weight(rs, lam) != paperdata.table2_closed_form(t, lam):
                mismatched += 1
        bad += mismatched
        rows.append({"group": str(t), "coefficients": list(rs.principal_grading),
                     "checked": checked, "mismatches": mismatched})
    rows.sort(key=lambda r: GroupType.parse(r["group"]))
    _emit({"max_rank": args.max_rank, "max_coeff": args.max_coeff, "mismatches": bad, "types": rows})
    return 0 if bad == 0 else 1


def cmd_ingest(args) -> int:
    table = ingest.load(args.path)
    _emit({"group": str(table.group_type), "lambda": list(table.lam), "p": table.p or 0,
           "rows": len(table.rows), "dim": table.character().dim()})
    return 0


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mfprincipal", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def positional(sp):
        sp.add_argument("family", help="A, B, C, D, E, F or G")
        sp.add_argument("rank", type=int)
        sp.add_argument("weight", help="comma-separated coordinates, e.g. 1,1")
        sp.add_argument("p", type=int, help="prime characteristic, or 0")

    sp = sub.add_parser("verdict", help="MF verdict with factors or certificate")
    positional(sp)
    sp.set_defaults(func=cmd_verdict)

    sp = sub.add_parser("restrict", help="T_A-weights and composition factors")
    positional(sp)
    sp.add_argument("--source", default="irreducible", help="weyl, irreducible or file:PATH")
    sp.add_argument("--tsv", metavar="PATH", help="also write the G-character in ingestion format")
    sp.set_defaults(func=cmd_restrict)

    sp = sub.add_parser("certify", help="replayable not-MF certificate")
    positional(sp)
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("jantzen", help="Jantzen sum and composition factors of a Weyl module")
    positional(sp)
    sp.set_defaults(func=cmd_jantzen)

    sp = sub.add_parser("table1", help="recompute the characteristic-zero classification")
    sp.add_argument("--max-rank", type=int, default=9)
    sp.add_argument("--max-coeff", type=int, default=6)
    sp.add_argument("--max-r", type=int, default=100)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_table1)

    sp = sub.add_parser("rvalues", help="check r against the closed forms")
    sp.add_argument("--max-rank", type=int, default=8)
    sp.add_argument("--max-coeff", type=int, default=3)
    sp.set_defaults(func=cmd_rvalues)

    sp = sub.add_parser("ingest", help="validate and load a weight table")
    sp.add_argument("path")
    sp.set_defaults(func=cmd_ingest)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (MFError, OSError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
