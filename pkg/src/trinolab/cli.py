"""Command-line front end.

Commands: field-info, mu, check-trinomial, check-g, count-roots, factors,
lemma-verify, uv-scan, sweep.  Reports are emitted as json, csv or text and
are byte-identical across runs with the same arguments: JSON keys are sorted,
CSV columns are fixed, and nothing time- or host-dependent enters the payload.

Exit codes: 0 success, 1 usage or input error, 2 when a property the analysis
asserts fails (a fiber of size >= 2 inside the claimed range, an unclassified
quadratic factor, disagreeing permutation routes).
"""

import argparse
import csv
import io
import json
import os
import sys
from typing import Optional

from . import conjlab, gf3m, permtest
from .polyring import Poly, quadratic_factors, roots_in_set

SWEEP_COLUMNS = ("family", "k", "l", "modulus", "gcd_ok", "direct_bijection",
                 "zieve_cond1", "zieve_cond2", "g_bijection", "max_fiber_size",
                 "witness_count", "lemma_case_histogram", "error")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> list:
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}")


def claimed_permutation(family: int, k: int, gcd_ok: bool = True) -> bool:
    """Whether the analysis asserts this family permutes at this k (given the
    gcd side condition): family 2 for every k, family 3 for k != 2 (mod 4),
    family 1 for even k."""
    if not gcd_ok:
        return False
    if family == 2:
        return True
    if family == 3:
        return k % 4 != 2
    return k % 2 == 0


# ---------------------------------------------------------------------------
# report writing

def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def _columns_for(rows: list) -> list:
    keys = rows[0].keys()
    if set(keys) == set(SWEEP_COLUMNS):
        return list(SWEEP_COLUMNS)
    return sorted(keys)


def report_write(report, fmt: str, path: Optional[str] = None):
    """Serialize a report (dict or list of dicts) deterministically."""
    if fmt == "json":
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    elif fmt == "csv":
        rows = report if isinstance(report, list) else [report]
        buf = io.StringIO()
        writer = csv.writer(buf)
        if rows:
            columns = _columns_for(rows)
            writer.writerow(columns)
            for row in rows:
                writer.writerow([_csv_cell(row.get(c)) for c in columns])
        text = buf.getvalue()
    elif fmt == "text":
        rows = report if isinstance(report, list) else [report]
        lines = []
        for row in rows:
            for key in _columns_for([row]):
                lines.append(f"{key}: {_csv_cell(row[key])}")
            lines.append("")
        text = "\n".join(lines)
    else:
        raise UsageError(f"unknown format {fmt!r}")
    if path is None:
        sys.stdout.write(text)
    else:
        try:
            with open(path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise RuntimeError(f"cannot write report to {path}: {exc}") from exc


def parse_sweep_csv(text: str) -> list:
    """Inverse of the csv writer for sweep reports (used for round trips)."""
    rows = []
    for record in csv.DictReader(io.StringIO(text)):
        row = {}
        for key, raw in record.items():
            if raw == "":
                row[key] = None
            elif key in ("family", "k", "l", "max_fiber_size", "witness_count"):
                row[key] = int(raw)
            elif key == "lemma_case_histogram":
                row[key] = json.loads(raw)
            elif raw in ("true", "false"):
                row[key] = raw == "true"
            else:
                row[key] = raw
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# command handlers; each returns (exit_code, report)

def _make_ctx(args) -> gf3m.FieldCtx:
    modulus = parse_modulus_arg(args.modulus)
    try:
        return gf3m.ctx_create(args.k, modulus, args.max_k)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def parse_modulus_arg(text: Optional[str]):
    if text is None:
        return None
    try:
        return gf3m.parse_modulus(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _t_values(args, ctx) -> list:
    mu = permtest.mu_enumerate(ctx, ctx.q + 1)
    if args.t == "all":
        return sorted(mu)
    try:
        t = int(args.t)
    except ValueError:
        raise UsageError(f"--t expects an element encoding or 'all', got {args.t!r}")
    if t not in mu:
        raise UsageError(f"t={t} not in mu_(q+1)")
    return [t]


def _cmd_field_info(args):
    ctx = _make_ctx(args)
    sc = ctx.special_constants()
    return 0, {
        "k": ctx.k, "m": ctx.m, "q": ctx.q, "order": ctx.order,
        "modulus": gf3m.format_modulus(ctx.modulus),
        "alpha": ctx.alpha, "epsilon": sc.epsilon, "theta": sc.theta,
        "sqrt_eps_minus_1": sc.sqrt_eps_minus_1,
    }


def _cmd_mu(args):
    ctx = _make_ctx(args)
    try:
        mu = permtest.mu_enumerate(ctx, args.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return 0, {"k": ctx.k, "d": args.d, "elements": sorted(mu)}


def _cmd_check_trinomial(args):
    ctx = _make_ctx(args)
    try:
        spec, _ = conjlab.trinomial_family(args.family, args.l, ctx)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    direct = permtest.is_bijection_on(
        conjlab.trinomial_map(spec, ctx), range(ctx.order)).is_bijection
    r, h = conjlab.trinomial_decompose(spec, ctx)
    cond1, cond2 = permtest.zieve_criterion(ctx, r, ctx.q + 1, h)
    g_bij = (conjlab.g_permutes_mu(args.family, ctx).is_bijection
             if conjlab.denominator_nonvanishing(args.family, ctx) else False)
    # the subgroup route only carries the full criterion when gcd_ok holds
    routes_agree = (direct == (cond1 and cond2)
                    and (not spec.gcd_ok or g_bij == direct))
    report = {
        "family": args.family, "k": ctx.k, "l": args.l,
        "modulus": gf3m.format_modulus(ctx.modulus),
        "exponents": list(spec.exponents), "gcd_ok": spec.gcd_ok,
        "r": r, "h": h.to_text(),
        "direct_bijection": direct, "zieve_cond1": cond1, "zieve_cond2": cond2,
        "g_bijection": g_bij, "routes_agree": routes_agree,
    }
    failed = (not routes_agree
              or (claimed_permutation(args.family, ctx.k, spec.gcd_ok)
                  and not direct))
    return (2 if failed else 0), report


def _cmd_check_g(args):
    ctx = _make_ctx(args)
    den_ok = conjlab.denominator_nonvanishing(args.family, ctx)
    g_bij = conjlab.g_permutes_mu(args.family, ctx).is_bijection if den_ok else False
    mu = permtest.mu_enumerate(ctx, ctx.q + 1)
    max_fiber = 0
    for t in sorted(mu):
        count = len(roots_in_set(
            conjlab.fiber_polynomial(args.family, t, ctx), mu))
        max_fiber = max(max_fiber, count)
    report = {
        "family": args.family, "k": ctx.k,
        "modulus": gf3m.format_modulus(ctx.modulus), "mu_size": ctx.q + 1,
        "denominator_nonvanishing": den_ok, "g_bijection": g_bij,
        "max_fiber_size": max_fiber,
    }
    failed = claimed_permutation(args.family, ctx.k) and not g_bij
    return (2 if failed else 0), report


def _cmd_count_roots(args):
    ctx = _make_ctx(args)
    rows = []
    violation = False
    claimed = claimed_permutation(args.family, ctx.k)
    for t in _t_values(args, ctx):
        roots = roots_in_set(conjlab.fiber_polynomial(args.family, t, ctx),
                             permtest.mu_enumerate(ctx, ctx.q + 1))
        if claimed and len(roots) > 1:
            violation = True
        rows.append({"family": args.family, "k": ctx.k, "t": t,
                     "count": len(roots), "roots": roots})
    return (2 if violation else 0), rows


def _cmd_factors(args):
    ctx = _make_ctx(args)
    if args.poly is not None:
        try:
            poly = Poly.from_text(ctx, args.poly)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    elif args.family is not None and args.t is not None:
        t = _t_values(args, ctx)[0] if args.t != "all" else None
        if t is None:
            raise UsageError("factors needs a single --t, not 'all'")
        poly = conjlab.fiber_polynomial(args.family, t, ctx)
    else:
        raise UsageError("factors needs --poly or both --family and --t")
    try:
        pairs = quadratic_factors(poly)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rows = [{"a": a, "b": b} for a, b in pairs]
    return 0, {"k": ctx.k, "modulus": gf3m.format_modulus(ctx.modulus),
               "poly": poly.to_text(), "quadratic_factors": rows}


def _cmd_lemma_verify(args):
    ctx = _make_ctx(args)
    if args.family not in (2, 3):
        raise UsageError("lemma-verify supports families 2 and 3")
    ts = set(_t_values(args, ctx))
    rows = []
    failed = False
    for w in conjlab.harvest_witnesses(args.family, ctx):
        if w.t not in ts:
            continue
        if args.family == 3:
            relation_ok = conjlab.verify_quintic_factor_relation(w, ctx)
            derivation_ok = conjlab.verify_quintic_coefficient_system(
                w.a, w.b, w.t, ctx)
        else:
            relation_ok = w.lemma_case in (conjlab.LemmaCase.EPSILON,
                                           conjlab.LemmaCase.THETA)
            derivation_ok = conjlab.verify_septic_coefficient_system(
                w.a, w.b, w.t, ctx)
        if not relation_ok or not derivation_ok:
            failed = True
        rows.append({
            "family": args.family, "k": ctx.k, "t": w.t, "a": w.a, "b": w.b,
            "lemma_case": w.lemma_case.value if w.lemma_case else None,
            "relation_ok": relation_ok, "derivation_ok": derivation_ok,
        })
    return (2 if failed else 0), rows


def _cmd_uv_scan(args):
    ctx = _make_ctx(args)
    report = conjlab.uv_identity_check(ctx)
    rows = [{"t": w.t, "a": w.a, "b": w.b, "u": w.u, "v": w.v}
            for w in report.witnesses]
    payload = {"k": ctx.k, "modulus": gf3m.format_modulus(ctx.modulus),
               "witness_count": len(rows), "all_identities_hold": report.ok,
               "witnesses": rows,
               "failures": [list(f) for f in report.failures]}
    return (0 if report.ok else 2), payload


def _row_violates_claims(row: conjlab.SweepRow) -> bool:
    if row.error is not None:
        return False
    zieve = row.zieve_cond1 and row.zieve_cond2
    if row.direct_bijection != zieve:
        return True
    # the subgroup route carries the full criterion only when gcd_ok holds
    if row.gcd_ok and row.g_bijection != row.direct_bijection:
        return True
    if claimed_permutation(row.family, row.k, row.gcd_ok):
        if not row.direct_bijection or row.max_fiber_size != 1:
            return True
    if row.family == 2 and row.lemma_case_histogram["NoMatch"]:
        return True
    return False


def _cmd_sweep(args):
    report = conjlab.sweep(args.family, _int_list(args.k), _int_list(args.l),
                           max_k=args.max_k, parallelism=args.parallelism)
    rows = report.to_obj()
    failed = any(_row_violates_claims(row) for row in report.rows)
    return (2 if failed else 0), rows


# ---------------------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="trinolab",
                     description="Exact permutation-trinomial checks over GF(3^2k)")
    sub = parser.add_subparsers(dest="command", required=True)
    env_max_k = os.environ.get("TRINOLAB_MAX_K")

    def common(p, k="single"):
        if k == "single":
            p.add_argument("--k", type=int, required=True)
        else:
            p.add_argument("--k", required=True, help="comma-separated list")
        p.add_argument("--modulus", default=None,
                       help='trit list low degree first, e.g. "1,0,1"')
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--output", default=None)
        p.add_argument("--max-k", dest="max_k", type=int,
                       default=int(env_max_k) if env_max_k else gf3m.DEFAULT_MAX_K)

    p = sub.add_parser("field-info");  common(p)
    p.set_defaults(fn=_cmd_field_info)

    p = sub.add_parser("mu");  common(p)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(fn=_cmd_mu)

    p = sub.add_parser("check-trinomial");  common(p)
    p.add_argument("--family", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(fn=_cmd_check_trinomial)

    p = sub.add_parser("check-g");  common(p)
    p.add_argument("--family", type=int, choices=(1, 2, 3), required=True)
    p.set_defaults(fn=_cmd_check_g)

    p = sub.add_parser("count-roots");  common(p)
    p.add_argument("--family", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--t", required=True, help="element encoding or 'all'")
    p.set_defaults(fn=_cmd_count_roots)

    p = sub.add_parser("factors");  common(p)
    p.add_argument("--poly", default=None, help='coefficients "c0,c1,...,cn"')
    p.add_argument("--family", type=int, choices=(1, 2, 3), default=None)
    p.add_argument("--t", default=None)
    p.set_defaults(fn=_cmd_factors)

    p = sub.add_parser("lemma-verify");  common(p)
    p.add_argument("--family", type=int, choices=(2, 3), required=True)
    p.add_argument("--t", default="all")
    p.set_defaults(fn=_cmd_lemma_verify)

    p = sub.add_parser("uv-scan");  common(p)
    p.set_defaults(fn=_cmd_uv_scan)

    p = sub.add_parser("sweep");  common(p, k="list")
    p.add_argument("--family", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--l", required=True, help="comma-separated list")
    p.add_argument("--parallelism", type=int, default=1)
    p.set_defaults(fn=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        code, report = args.fn(args)
        report_write(report, args.format, args.output)
        return code
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
