"""Command-line interface: parameters, tables, bases, verification and export."""

import argparse
import json
import sys

import numpy as np

from .codes import (DEFAULT_BUDGET, distances, format_matrix, gv_exceeds, rank,
                    same_row_space, trace_code)
from .ideal import (ORDERS, divide, groebner_generators, monomials_up_to, normal_form_closed,
                    quotient_basis, verify_buchberger)
from .prm import (PrmSpec, basis_matrix, build_B, build_D, dim_dual, dim_primary,
                  distance_lower_bound, prm_code, prm_subfield_subcode, subfield_subcode_general)
from .projgeom import Poly, evaluate, evaluates_to_base, standard_representatives


class UsageError(Exception):
    pass


def _spec(args, d=None):
    spec = PrmSpec(args.q, args.s, args.m, args.d if d is None else d)
    try:
        spec.ctx
        spec.check()
    except ValueError as e:
        raise UsageError(str(e))
    return spec


def _dims(spec):
    if spec.m == 2:
        k = dim_primary(spec)
    else:
        k = prm_subfield_subcode(spec).k
    return k, spec.n - k


def _fmt(value, method):
    if method == "exact":
        return str(value)
    if method == "bound":
        return ">=%d" % value
    if method == "empty":
        return "-"
    return "?"


def table_row(spec, budget=DEFAULT_BUDGET):
    code = subfield_subcode_general(spec, cross_check=False)
    bound = distance_lower_bound(spec)
    r = distances(code, budget, lower_bound=bound)
    return {
        "q": spec.q, "s": spec.s, "m": spec.m, "d": spec.d, "n": spec.n,
        "k": code.k, "delta": r.delta, "delta_method": r.method,
        "k_perp": spec.n - code.k, "delta_perp": r.delta_perp,
        "delta_perp_method": r.method_perp, "bound": bound,
    }


def cmd_params(args):
    spec = _spec(args)
    k, kp = _dims(spec)
    bound = distance_lower_bound(spec)
    verdict = "exceeds" if k >= 1 and gv_exceeds(spec.q, spec.n, k, bound) else "does not exceed"
    print("n=%d k=%d k⊥=%d δ≥%d (bound) GV: %s" % (spec.n, k, kp, bound, verdict))
    return 0


def cmd_table(args):
    if args.dmin < 1 or args.dmax < args.dmin:
        raise UsageError("need 1 <= dmin <= dmax")
    rows = [table_row(_spec(args, d), args.budget) for d in range(args.dmin, args.dmax + 1)]
    if args.json:
        for row in rows:
            print(json.dumps(row, sort_keys=True))
        return 0
    print("%4s %6s %6s %8s %6s %8s" % ("d", "n", "k", "δ", "k⊥", "δ⊥"))
    for r in rows:
        print("%4d %6d %6d %8s %6d %8s" % (r["d"], r["n"], r["k"], _fmt(r["delta"], r["delta_method"]),
                                        r["k_perp"], _fmt(r["delta_perp"], r["delta_perp_method"])))
    return 0


def cmd_basis(args):
    if args.m != 2:
        raise UsageError("explicit bases implemented only for m=2")
    spec = _spec(args)
    if args.side == "primary":
        basis = build_B(spec, simplified=args.variant == "simplified")
    else:
        basis = build_D(spec)
    sizes = basis.sizes()
    print("%s basis, q=%d s=%d d=%d, size %d (%s)" % (
        args.side, spec.q, spec.s, spec.d, len(basis),
        "/".join("%s=%d" % kv for kv in sizes.items())))
    for label, polys in basis.parts.items():
        note = basis.notes.get(label)
        print("[%s] %d polynomial(s)%s" % (label, len(polys), " " + note if note else ""))
        for f in polys:
            print("  " + str(f))
    return 0


class Report:
    def __init__(self):
        self.failed = 0

    def check(self, name, ok):
        print("%s %s" % ("PASS" if ok else "FAIL", name))
        if not ok:
            self.failed += 1


def verify_groebner(ctx, m, rep):
    for kind in ORDERS:
        rep.check("m=%d buchberger %s" % (m, kind), verify_buchberger(ctx, m, kind))
    n = (ctx.Q ** (m + 1) - 1) // (ctx.Q - 1)
    rep.check("m=%d quotient basis size %d" % (m, n), len(quotient_basis(ctx, m)) == n)
    G = groebner_generators(ctx, m).generators
    pts = standard_representatives(ctx, m)
    rep.check("m=%d generators vanish" % m,
              all(not evaluate(ctx, g, pts).any() for g in G))
    ok = True
    for mono in monomials_up_to(m + 1, 2 * (ctx.Q - 1)):
        nf = normal_form_closed(ctx, mono, m)
        f = Poly.monomial(ctx, mono)
        if any(divide(f, G, kind)[1] != nf for kind in ORDERS):
            ok = False
            break
        if not np.array_equal(evaluate(ctx, f, pts), evaluate(ctx, nf, pts)):
            ok = False
            break
    rep.check("m=%d closed normal form = division remainder" % m, ok)


def verify_degree(spec, rep):
    tag = "d=%d" % spec.d
    code = prm_code(spec)
    try:
        sub = subfield_subcode_general(spec)
        rep.check(tag + " trace generators span the dual subcode", True)
    except AssertionError:
        sub = prm_subfield_subcode(spec)
        rep.check(tag + " trace generators span the dual subcode", False)
    dual = sub.dual()
    rep.check(tag + " Delsarte", same_row_space(trace_code(code.dual()).gen, dual.gen, sub.F))
    if spec.m != 2:
        return
    B, D = build_B(spec), build_D(spec)
    F = sub.F
    MB, MD = basis_matrix(spec, B), basis_matrix(spec, D)
    rep.check(tag + " span(B) = subfield subcode",
              (rank(MB, F) == len(B) and same_row_space(MB, sub.gen, F)) if len(B) else sub.k == 0)
    rep.check(tag + " span(D) = its dual",
              (rank(MD, F) == len(D) and same_row_space(MD, dual.gen, F)) if len(D) else dual.k == 0)
    rep.check(tag + " |B|+|D|=n", len(B) + len(D) == spec.n)
    rep.check(tag + " dimension formulas",
              dim_primary(spec) == sub.k and dim_dual(spec) == dual.k)
    rep.check(tag + " B evaluates to F_q", all(evaluates_to_base(spec.ctx, f) for f in B.polys))
    Bs = build_B(spec, simplified=True)
    MBs = basis_matrix(spec, Bs)
    rep.check(tag + " simplified B spans the same code",
              same_row_space(MBs, MB, F) if len(B) else len(Bs) == 0)


def cmd_verify(args):
    base = PrmSpec(args.q, args.s, args.m, 1)
    try:
        ctx = base.ctx
    except ValueError as e:
        raise UsageError(str(e))
    rep = Report()
    verify_groebner(ctx, args.m, rep)
    if args.d is not None:
        degrees = [args.d]
    elif args.dall:
        top = args.m * (ctx.Q - 1)
        if args.m == 2:
            top = 2 * (ctx.Q - 1)
        degrees = range(1, top + 1)
    else:
        degrees = []
    for d in degrees:
        verify_degree(_spec(args, d), rep)
    print("%d check(s) failed" % rep.failed if rep.failed else "all checks passed")
    return 1 if rep.failed else 0


def cmd_export(args):
    spec = _spec(args)
    code = prm_subfield_subcode(spec)
    if args.side == "dual":
        code = code.dual()
    text = format_matrix(code, spec.q, spec.s)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="projrm", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    def field_args(p, d=True, m_default=2):
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--s", type=int, required=True)
        p.add_argument("--m", type=int, default=m_default)
        if d:
            p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("params", help="length, dimensions, distance bound and GV verdict")
    field_args(p)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("table", help="parameter table over a range of degrees")
    field_args(p, d=False)
    p.add_argument("--dmin", type=int, default=1)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", action="store_true", help="one JSON record per row")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("basis", help="explicit basis polynomials (m=2)")
    field_args(p)
    p.add_argument("--side", choices=["primary", "dual"], default="primary")
    p.add_argument("--variant", choices=["standard", "simplified"], default="standard")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("verify", help="oracle and property checks")
    field_args(p, d=False)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--d", type=int)
    g.add_argument("--dall", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="generator matrix in text format")
    field_args(p)
    p.add_argument("--side", choices=["primary", "dual"], default="primary")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
