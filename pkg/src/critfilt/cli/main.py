"""critfilt command line. Every command prints one JSON report on stdout.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .. import constellation as cs
from ..errors import BudgetExceeded, ConstantMap, CritfiltError, DegreeBudgetExceeded, ExprSyntaxError, MultipleVariables
from ..expr import to_ratmap
from ..ratmap import classification, critical_data, divisor
from .report import dumps, partition_list

USAGE_ERRORS = (ExprSyntaxError, MultipleVariables, ConstantMap, BudgetExceeded, ValueError, ZeroDivisionError)


class UsageError(Exception):
    pass


def _param(spec: str | None):
    if spec is None:
        return None, None
    name, eq, value = spec.partition("=")
    if not name.isidentifier():
        raise UsageError(f"bad --param {spec!r}; expected NAME or NAME=VALUE")
    if not eq:
        return name, None
    try:
        return name, Fraction(value)
    except ValueError as exc:
        raise UsageError(f"bad parameter value {value!r}") from exc


def _values_block(cd) -> dict:
    located = cd.located()
    finite = []
    unresolved = []
    if located is not None:
        finite = [r for r, _ in located.points]
        unresolved = [b for b, _ in located.unresolved]
    return {
        "count": cd.count,
        "finite": finite,
        "unresolved_blocks": unresolved,
        "infinity": cd.infinity,
        "finite_polynomial": cd.finite_poly,
    }


def _passport(cd) -> list:
    rows = []
    for f, part in cd.factors:
        rows.append({"factor": f, "partition": partition_list(part)})
    if cd.infinity:
        rows.append({"factor": "oo", "partition": partition_list(cd.infinity_partition)})
    return rows


def cmd_critvals(args) -> tuple[dict, dict, bool | None]:
    name, value = _param(args.param)
    R = to_ratmap(args.map, param=name, value=value)
    cd = critical_data(R)
    results = {
        "map": R.format(args.var),
        "degree": cd.degree,
        "critical_values": _values_block(cd),
        "passport": _passport(cd),
        "spurious_candidates": cd.spurious,
    }
    return {"map": args.map, "param": args.param}, results, None


def cmd_classify(args):
    R = to_ratmap(args.map)
    c = classification(R)
    cd = c["data"]
    results = {
        "map": R.format(args.var),
        "degree": c["degree"],
        "filtration_level": c["level"],
        "kind": c["kind"],
        "belyi": c["belyi"],
        "fried": c["fried"],
        "critical_values": _values_block(cd),
        "passport": _passport(cd),
    }
    return {"map": args.map}, results, None


def cmd_beta_bas(args):
    from ..friedbase import (
        BOXED,
        beta_bas_exact,
        beta_bas_sampled_verify,
        cross_ratio_exact,
        default_budget,
        exact_cost_estimate,
        j_of_t,
    )

    boxed = BOXED[args.family]
    budget = default_budget() if args.budget is None else args.budget
    est = exact_cost_estimate(args.family)
    inputs = {"family": args.family, "exact": args.exact, "sample": args.sample, "budget": budget}
    results = {"boxed": boxed.text, "normalization": boxed.normalization, "estimate": est}
    use_exact = args.exact or (args.sample is None and est <= budget)
    if use_exact:
        try:
            res = beta_bas_exact(args.family, budget=budget)
        except DegreeBudgetExceeded as exc:
            if args.exact:
                results["exact"] = {"status": "skipped", "reason": str(exc)}
                return inputs, results, False
            use_exact = False
        else:
            b = boxed.value
            if boxed.normalization == "j":
                match = res.value == b
                results["exact"] = {"status": "done", "j": res.value, "match": match, "pair_route_agrees": res.routes_agree}
                if not match:
                    results["exact"]["ratio_to_boxed"] = res.value / b
            else:
                t = cross_ratio_exact(args.family)
                jb = j_of_t(b)
                match = t == b and res.value == jb
                results["exact"] = {"status": "done", "cross_ratio": t, "j": res.value, "match": match,
                                    "cross_ratio_matches_boxed": t == b,
                                    "j_matches_j_of_boxed": res.value == jb}
            return inputs, results, match
    quantity = "cross-ratio" if boxed.normalization == "cross-ratio" else "j"
    rep = beta_bas_sampled_verify(args.family, boxed, N=args.sample, quantity=quantity)
    results["sampled"] = {
        "quantity": quantity,
        "passed": rep.passed,
        "samples": rep.samples,
        "required": rep.required,
        "bound": rep.bound,
        "skipped": [[v, why] for v, why in rep.skipped],
        "failure": rep.failure,
    }
    return inputs, results, rep.passed


def cmd_divisor(args):
    R = to_ratmap(args.func)
    D = divisor(R)
    results = {
        "function": R.format(args.var),
        "terms": [{"point": p, "multiplicity": m} for p, m in D.terms],
        "degree": D.degree(),
    }
    return {"func": args.func}, results, None


def _budget(args, kind):
    return None if args.budget is None else args.budget


def _perm_text(p) -> str:
    cyc = [c for c in cs.cycles(p) if len(c) > 1]
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cyc) or "()"


def _constellation_row(i, C) -> dict:
    return {
        "index": i,
        "perms": [_perm_text(p) for p in C.perms],
        "passport": [list(t) for t in C.passport()],
        "genus": C.genus(),
    }


def cmd_enumerate(args):
    if args.branch == 3:
        found = cs.enumerate_triples(args.degree, args.genus, budget=_budget(args, "triples"))
    else:
        limit = cs.budgets()["braid"] if args.budget is None else args.budget
        if args.degree > limit:
            raise BudgetExceeded(f"degree {args.degree} exceeds the 4-tuple budget {limit}")
        found = cs.enumerate_tuples(args.degree, 4, args.genus)
    by_genus = {}
    for C in found:
        by_genus[str(C.genus())] = by_genus.get(str(C.genus()), 0) + 1
    results = {
        "count": len(found),
        "by_genus": dict(sorted(by_genus.items())),
        "classes": [_constellation_row(i + 1, C) for i, C in enumerate(found)] if not args.counts_only else [],
    }
    return {"branch": args.branch, "degree": args.degree, "genus": args.genus}, results, None


def cmd_braid_orbits(args):
    orbits = cs.braid_orbits(args.degree, args.passport, budget=args.budget)
    rows = []
    for i, o in enumerate(orbits):
        rows.append({
            "orbit": i + 1,
            "size": o.size,
            "representative": [_perm_text(p) for p in o.representative.perms],
            "genus": o.representative.genus(),
            "by_passport": [{"passport": [list(t) for t in pp], "members": n}
                            for pp, n in sorted(o.passports().items())],
        })
    return {"degree": args.degree, "passport": args.passport}, {"orbits": rows, "count": len(rows)}, None


def cmd_dessin(args):
    found = cs.enumerate_triples(args.degree, args.genus, budget=args.budget)
    if not 1 <= args.index <= len(found):
        raise UsageError(f"index {args.index} out of range 1..{len(found)}")
    C = found[args.index - 1]
    D = cs.dessin_export(C)
    text = D.to_dot(f"dessin_d{args.degree}_{args.index}")
    if args.out_file:
        with open(args.out_file, "w", encoding="utf-8") as fh:
            fh.write(text)
    results = {
        "constellation": _constellation_row(args.index, C),
        "black": len(D.black),
        "white": len(D.white),
        "edges": D.degree,
        "faces": len(D.faces),
        "euler": D.euler(),
        "written": args.out_file,
    }
    if not args.out_file:
        results["dot"] = text
    return {"degree": args.degree, "index": args.index, "genus": args.genus}, results, None


def cmd_verify_paper(args):
    from ..verify import run_all

    only = [int(x) for x in args.only.split(",")] if args.only else None

    def progress(cr):
        if args.verbose:
            print(f"[{cr.number:2d}] {'PASS' if cr.passed else 'FAIL'} {cr.title} ({cr.elapsed_s}s)", file=sys.stderr)

    crit = run_all(fast=args.fast, only=only, exact_budget=args.budget, progress=progress)
    rows = []
    for cr in crit:
        rows.append({
            "criterion": cr.number,
            "title": cr.title,
            "passed": cr.passed,
            "mode": cr.mode,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in cr.checks],
            "elapsed_s": cr.elapsed_s,
        })
    passed = all(cr.passed for cr in crit)
    summary = {"passed": sum(cr.passed for cr in crit), "failed": [cr.number for cr in crit if not cr.passed]}
    return {"fast": args.fast, "only": only}, {"criteria": rows, "summary": summary}, passed


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="critfilt", description="Exact critical values, base Belyi functions and constellations.")
    ap.add_argument("--out", help="also write the JSON report to this file")
    # --out is accepted after the subcommand too; dessin uses it for the DOT file instead
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=argparse.SUPPRESS, help="also write the JSON report to this file")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("critvals", parents=[common], help="critical values and ramification of a rational map")
    p.add_argument("--map", required=True, help='e.g. "(z^3+z^2)/(9*z+1)"')
    p.add_argument("--param", help="NAME=VALUE to specialise, or NAME to keep symbolic")
    p.add_argument("--var", default="z", help=argparse.SUPPRESS)
    p.set_defaults(fn=cmd_critvals)

    p = sub.add_parser("classify", parents=[common], help="filtration level and Belyi/Fried verdict")
    p.add_argument("--map", required=True)
    p.add_argument("--var", default="z", help=argparse.SUPPRESS)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("beta-bas", parents=[common], help="base function of a registered family")
    p.add_argument("--family", required=True, choices=["d3g0", "d3g1", "d5g2", "sekividu", "legendre"])
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true", help="symbolic elimination (subject to --budget)")
    g.add_argument("--sample", type=int, metavar="N", help="sampled verification with N agreeing samples")
    p.add_argument("--budget", type=int, help="parameter-degree budget for the exact route")
    p.set_defaults(fn=cmd_beta_bas)

    p = sub.add_parser("divisor", parents=[common], help="zeros and poles of a rational function")
    p.add_argument("--func", required=True)
    p.add_argument("--var", default="s", help=argparse.SUPPRESS)
    p.set_defaults(fn=cmd_divisor)

    p = sub.add_parser("enumerate", parents=[common], help="constellations up to simultaneous conjugation")
    p.add_argument("--branch", type=int, choices=[3, 4], required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--genus", type=int)
    p.add_argument("--budget", type=int, help="maximum degree (default from CRITFILT_BUDGET or 8/6)")
    p.add_argument("--counts-only", action="store_true")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("braid-orbits", parents=[common], help="braid orbits on 4-constellations with a passport")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--passport", required=True, help='four partitions, e.g. "2,1;2,1;2,1;2,1"')
    p.add_argument("--budget", type=int)
    p.set_defaults(fn=cmd_braid_orbits)

    p = sub.add_parser("dessin", help="export a 3-constellation as a graph")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--index", type=int, required=True, help="1-based index in the enumerate listing")
    p.add_argument("--genus", type=int)
    p.add_argument("--budget", type=int)
    p.add_argument("--out", dest="out_file", help="DOT file to write")
    p.set_defaults(fn=cmd_dessin)

    p = sub.add_parser("verify-paper", parents=[common], help="run every acceptance check")
    p.add_argument("--fast", action="store_true", help="sampled verification only for the genus-2 family")
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.add_argument("--budget", type=int, help="parameter-degree budget for symbolic elimination")
    p.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    p.set_defaults(fn=cmd_verify_paper)
    return ap


EXPR_FLAGS = ("--map", "--func")


def _glue_expressions(argv: list[str]) -> list[str]:
    """Allow ``--func -s*...``: argparse would read the value as an option."""
    out, i = [], 0
    while i < len(argv):
        a = argv[i]
        if a in EXPR_FLAGS and i + 1 < len(argv):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def main(argv=None) -> int:
    ap = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = ap.parse_args(_glue_expressions(argv))
    report_out = None if args.command == "dessin" else args.out
    try:
        inputs, results, passed = args.fn(args)
    except UsageError as exc:
        print(f"critfilt: error: {exc}", file=sys.stderr)
        return 2
    except ExprSyntaxError as exc:
        print(f"critfilt: error: {exc}", file=sys.stderr)
        return 2
    except USAGE_ERRORS as exc:
        print(f"critfilt: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except CritfiltError as exc:
        print(f"critfilt: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    text = dumps(args.command, inputs, results, passed)
    print(text)
    if report_out:
        with open(report_out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return 0 if passed is None or passed else 1


if __name__ == "__main__":
    sys.exit(main())
