"""Command line front end.

Subcommands: enumerate (unit-fraction solutions), map (forward mirror
maps), invert (inverse maps), check (the recompute-and-compare suites),
product-form (the exponent tables relating compact and inner-b flat
coordinates).  Exit codes: 0 success, 1 a check or extraction failed,
2 usage error.  Every subcommand takes --format json|text; json output
is a single line with sorted keys so repeated runs are byte-identical.
"""

import argparse
import json
import sys

from .geometry import (COMPACT, LOCAL_INNER_A, LOCAL_INNER_B, LOCAL_OUTER,
                       enumerate_solutions, weight_system)

# the tilde phase carries operators but no mirror map (its log-x0 solution
# is obstructed), so map/invert do not accept it
MAP_PHASES = (COMPACT, LOCAL_OUTER, LOCAL_INNER_A, LOCAL_INNER_B)
from .mirrormaps import invert_map, local_map, open_closed_map, \
    product_form_exponents
from .scalars import format_rat
from .series import log_unit, truncate
from .verify import run_suite


def _parse_klist(text):
    try:
        ks = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected a comma list of integers")
    if len(ks) < 2:
        raise argparse.ArgumentTypeError("need at least two denominators")
    return ks


def _records(S, N):
    """Series coefficients with total degree <= N in canonical order, as
    JSON-ready dicts with string values."""
    return [{"e": [e[0], e[1]], "v": format_rat(c)}
            for e, c in S.items_sorted() if e[0] + e[1] <= N]


def _term_text(c, e, v0, v1):
    vs = []
    for v, a in ((v0, e[0]), (v1, e[1])):
        if a == 1:
            vs.append(v)
        elif a > 1:
            vs.append("%s^%d" % (v, a))
    body = "*".join(vs)
    mag = format_rat(abs(c))
    if not body:
        return mag
    if abs(c) == 1:
        return body
    return "%s*%s" % (mag, body)


def _series_text(label, S, N, v0, v1):
    """One line: degree-bracketed groups, highest x0-power first inside
    each bracket, the way the reference expansions are laid out."""
    by_deg = {}
    for e, c in S.items_sorted():
        if e[0] + e[1] <= N:
            by_deg.setdefault(e[0] + e[1], []).append((e, c))
    groups = []
    for d in sorted(by_deg):
        bits = []
        for e, c in sorted(by_deg[d], key=lambda t: -t[0][0]):
            t = _term_text(c, e, v0, v1)
            if not bits:
                bits.append(t if c > 0 else "-" + t)
            else:
                bits.append(("+ %s" if c > 0 else "- %s") % t)
        groups.append("(%s)" % " ".join(bits))
    return "%s = %s" % (label, " + ".join(groups) if groups else "0")


def _emit_series(args, ws, labeled, variables):
    """Shared output path of map/invert: integrality scan plus either the
    json document or the text lines."""
    N = args.order
    violations = []
    for label, S in labeled:
        if label.startswith("log_"):
            continue
        for e, c in S.items_sorted():
            if e[0] + e[1] <= N and c.denominator != 1:
                violations.append({"series": label, "e": [e[0], e[1]],
                                   "v": format_rat(c)})
    if args.format == "json":
        doc = {
            "weights": {"k": ws.k, "w": list(ws.ws)},
            "phase": args.phase,
            "order": N,
            "series": {label: _records(S, N) for label, S in labeled},
            "integral": not violations,
            "violations": violations,
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        print("(%s)  phase %s  order %d" % (ws.label(), args.phase, N))
        for label, S in labeled:
            print(_series_text(label, S, N, *variables))
        print("integral: %s" % ("yes" if not violations else "no"))
        for v in violations:
            print("non-integer %s at (%d, %d): %s"
                  % (v["series"], v["e"][0], v["e"][1], v["v"]))
    return 0


def _ws_or_exit(args):
    try:
        return weight_system(args.k, args.brane)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        raise SystemExit(2)


def cmd_enumerate(args):
    sols = enumerate_solutions(args.n, ordered=args.ordered)
    if args.format == "json":
        doc = {"n": args.n, "ordered": args.ordered, "count": len(sols),
               "solutions": [list(s) for s in sols]}
        print(json.dumps(doc, sort_keys=True))
    else:
        for s in sols:
            print("(%s)" % ",".join(str(k) for k in s))
        print("count %d" % len(sols))
    return 0


def cmd_map(args):
    ws = _ws_or_exit(args)
    N = args.order
    if args.phase == COMPACT:
        bundle = open_closed_map(ws, N)
        labeled = [("q0", truncate(bundle.q(0), N)),
                   ("q1", truncate(bundle.q(1), N))]
    else:
        bundle = local_map(ws, args.phase, N)
        labeled = [("q0", truncate(bundle.q(0), N)),
                   ("q1", truncate(bundle.q(1), N)),
                   ("log_u0", log_unit(bundle.u0)),
                   ("log_u1", log_unit(bundle.u1))]
    return _emit_series(args, ws, labeled, ("x0", "x1"))


def cmd_invert(args):
    ws = _ws_or_exit(args)
    N = args.order
    if args.phase == COMPACT:
        bundle = open_closed_map(ws, N)
        variables = ("q0", "q1")
    else:
        bundle = local_map(ws, args.phase, N)
        variables = ("Q0", "Q1")
    x0, x1 = invert_map(bundle)
    labeled = [("x0", truncate(x0, N)), ("x1", truncate(x1, N))]
    return _emit_series(args, ws, labeled, variables)


def cmd_check(args):
    result = run_suite(args.suite, max_order=args.order)
    if args.format == "json":
        doc = {
            "suite": result.scope,
            "pass": result.n_pass,
            "fail": result.n_fail,
            "ok": result.ok,
            "checks": [{"name": n, "ok": ok, "detail": d}
                       for n, ok, d in result.checks],
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        for line in result.lines():
            print(line)
    return 0 if result.ok else 1


def cmd_product_form(args):
    ws = _ws_or_exit(args)
    N = args.order
    compact = open_closed_map(ws, N)
    inner = local_map(ws, LOCAL_INNER_B, N)
    pair = (compact, inner) if args.direction == "alpha" else (inner, compact)
    tables = []
    try:
        for which in (0, 1):
            tables.append(product_form_exponents(pair[0], pair[1], N, which,
                                                 direction=args.direction))
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    labels = ["%s%d" % (args.direction, which) for which in (0, 1)]
    integral = all(t.integral for t in tables)
    if args.format == "json":
        doc = {
            "weights": {"k": ws.k, "w": list(ws.ws)},
            "phase": LOCAL_INNER_B,
            "direction": args.direction,
            "order": N,
            "series": {lab: [{"e": [e[0], e[1]], "v": format_rat(c)}
                             for e, c in t.items_sorted()]
                       for lab, t in zip(labels, tables)},
            "integral": integral,
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        print("(%s)  direction %s  order %d" % (ws.label(), args.direction, N))
        for lab, t in zip(labels, tables):
            for e, c in t.items_sorted():
                print("%s[%d,%d] = %s" % (lab, e[0], e[1], format_rat(c)))
        print("integral: %s" % ("yes" if integral else "no"))
    return 0


def _add_case_options(p):
    p.add_argument("--k", type=_parse_klist, required=True,
                   metavar="K1,K2,...", help="unit-fraction denominators")
    p.add_argument("--brane", type=int, default=1,
                   help="1-based index of the brane denominator (default 1)")
    p.add_argument("--order", type=int, default=8,
                   help="truncation order, total degree (default 8)")
    p.add_argument("--format", choices=("json", "text"), default="text")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ocmirror",
        description="open-closed mirror maps of unit-fraction weight "
                    "systems: enumeration, series, inverses, checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list unit-fraction solutions")
    p.add_argument("--n", type=int, required=True, choices=range(2, 7),
                   help="number of denominators")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--ordered", dest="ordered", action="store_true",
                   default=True, help="one representative per multiset")
    g.add_argument("--unordered", dest="ordered", action="store_false",
                   help="every permutation separately")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", help="forward mirror maps q_i(x)")
    _add_case_options(p)
    p.add_argument("--phase", choices=MAP_PHASES, default=COMPACT)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("invert", help="inverse mirror maps x_i(q)")
    _add_case_options(p)
    p.add_argument("--phase", choices=MAP_PHASES, default=COMPACT)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("--suite", choices=("paper", "integrality", "oracles"),
                   default="paper")
    p.add_argument("--order", type=int, default=None,
                   help="cap the checked total degree (suite default if omitted)")
    p.add_argument("--jobs", type=int, default=1,
                   help="accepted for interface stability; execution is "
                        "sequential and output identical for any value")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("product-form",
                       help="exponent tables linking compact and inner-b "
                            "flat coordinates")
    _add_case_options(p)
    p.add_argument("--direction", choices=("alpha", "beta"), default="alpha")
    p.set_defaults(func=cmd_product_form)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
