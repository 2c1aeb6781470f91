"""Command-line front end: one subcommand per verification family.

Exit status is 0 when every emitted report passes, 1 when any fails and 2
for usage errors. Human-readable summaries go to stdout; ``--out FILE``
writes the machine-readable reports (``--format json-lines`` or ``csv``).
"""
from __future__ import annotations

import argparse
import math
import random
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path

from . import verify
from .cyclotomic import cyclo_data, deriv_at_one
from .ntheory import euler_phi
from .report import FORMATS, CheckReport, emit_report
from .selfrecip import (
    b_from_a,
    check_recip_congruences,
    check_recip_identity,
    constant_example_check,
    expand_linear_product,
    expand_quadratic_product,
    random_self_reciprocal,
    random_tseq,
    stirling_example_check,
)
from .symbolic import (
    assert_even_only,
    conjecture_check,
    corollary_polys,
    lehmer_check,
    ratio_table,
)

EVEN_K_TABLE = (2, 4, 6, 8, 10, 12, 14, 16, 18, 20)


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """``A..B`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            a, b = int(lo), int(hi)
        else:
            a = b = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B or an integer, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


def _fan_out(fn, items, jobs: int):
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return fn(items)
    size = math.ceil(len(items) / (jobs * 4))
    chunks = [items[i : i + size] for i in range(0, len(items), size)]
    out = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(fn, chunks):
            out.extend(part)
    return out


def _finish(reports, args, title: str) -> int:
    reports = verify.sort_reports(reports)
    counts = Counter((r.claim_id, r.verdict) for r in reports)
    print(f"{title}: {len(reports)} checks")
    for claim in sorted({r.claim_id for r in reports}):
        print(f"  {claim}: {counts[(claim, 'pass')]} pass, {counts[(claim, 'fail')]} fail")
    failures = [r for r in reports if not r.passed]
    for r in failures[:20]:
        print(f"  FAIL {r.claim_id} {r.params}" + (f" ({r.witness})" if r.witness else ""))
    if len(failures) > 20:
        print(f"  ... {len(failures) - 20} more failures")
    if args.out:
        Path(args.out).write_bytes(emit_report(reports, args.format))
    return 1 if failures else 0


def cmd_phi(args) -> int:
    data = cyclo_data(args.n)
    print(data.phi_n)
    return 0


def cmd_derivs(args) -> int:
    data = cyclo_data(args.n)
    top = data.degree if args.max_order is None else args.max_order
    print(f"n = {args.n}, phi(n) = {euler_phi(args.n)}")
    print("b = " + ",".join(str(c) for c in data.b))
    for k in range(top + 1):
        print(f"Phi_{args.n}^({k})(1) = {deriv_at_one(args.n, k)}")
    return 0


def cmd_verify_theorem3(args) -> int:
    if args.n.start < 2:
        raise UsageError("--n must start at 2 or above")
    reports = _fan_out(partial(verify.check_theorem3, k_max=args.k_max), args.n, args.jobs)
    return _finish(reports, args, "odd-order derivative divisibility")


def cmd_verify_trivial(args) -> int:
    if args.k.start < 3:
        raise UsageError("--k must start at 3 or above")
    reports = []
    for k in args.k:
        reports.extend(verify.check_trivial_congruence(k, args.n_max))
    return _finish(reports, args, "Jordan totient trivial congruence")


def cmd_verify_witness(args) -> int:
    reports = []
    for k in args.k:
        M = verify.trivial_modulus(k).M
        n = verify.nondivisibility_witness(k, args.factor * M, args.n0, args.budget)
        reports.append(
            CheckReport(
                "jordan.witness",
                {"k": k, "modulus": args.factor * M},
                n is not None,
                f"n={n}" if n is not None else "none within budget",
            )
        )
    return _finish(reports, args, "non-divisibility witness search")


def cmd_verify_positivity(args) -> int:
    reports = _fan_out(verify.check_positivity_range, args.n, args.jobs)
    return _finish(reports, args, "positivity of shifted coefficients")


def cmd_verify_identities(args) -> int:
    if args.n.start < 2:
        raise UsageError("--n must start at 2 or above")
    reports = _fan_out(verify.check_scalar_identities, args.n, args.jobs)
    reports += verify.check_prime_derivatives(args.p_max)
    return _finish(reports, args, "value and derivative identities at x = 1")


def cmd_verify_signchange(args) -> int:
    reports = verify.check_sign_change(args.p_max)
    for r in reports:
        print(f"  p={r.params['p']}: {r.witness}")
    return _finish(reports, args, "sign change of Phi_2p'")


def cmd_symbolic_table(args) -> int:
    rt = ratio_table(args.order)
    text = rt.to_text()
    sys.stdout.write(text)
    reports = [CheckReport("ratio.even_only", {"order": args.order}, assert_even_only(rt))]
    if args.golden:
        golden = Path(args.golden).read_text()
        reports.append(CheckReport("ratio.golden", {"order": args.order}, golden == text, args.golden))
    return _finish(reports, args, "ratio table")


def cmd_symbolic_conjecture(args) -> int:
    rt = ratio_table(2 * args.k_max + 1)
    reports = []
    for k in range(1, args.k_max + 1):
        holds, quotient = conjecture_check(k, rt)
        print(f"k={k}: {'pass' if holds else 'fail'}")
        reports.append(
            CheckReport("ratio.odd_divisibility", {"k": k}, holds, quotient.to_text() if holds else None)
        )
    return _finish(reports, args, "divisibility of odd-order ratios by phi - 2k")


def cmd_symbolic_corollary(args) -> int:
    rt = ratio_table(5)
    reports = []
    for l, poly in corollary_polys().items():
        ok = rt[l] == poly
        print(f"R[{l}] = {rt[l].to_text()}  [{'match' if ok else 'MISMATCH'}]")
        reports.append(CheckReport("ratio.closed_form", {"order": l}, ok))
    return _finish(reports, args, "closed forms for orders 2..5")


def cmd_lehmer(args) -> int:
    reports = []
    seen = Counter()
    for n in range(2, args.n_max + 1):
        for h in range(10):
            res = lehmer_check(n, h)
            seen[res.matched_normalization] += 1
            reports.append(
                CheckReport(
                    "lehmer.expansion",
                    {"n": n, "h": h},
                    res.matched_normalization == "derivative_ratio",
                    res.matched_normalization,
                )
            )
    print("normalizations: " + ", ".join(f"{k}={v}" for k, v in sorted(seen.items())))
    return _finish(reports, args, "Lehmer expansion")


def cmd_selfrecip(args) -> int:
    rng = random.Random(args.seed)
    reports = []
    for i in range(args.trials):
        ts = random_tseq(rng)
        ok = b_from_a(expand_linear_product(ts), ts.q) == expand_quadratic_product(ts)
        reports.append(CheckReport("selfrecip.product_identity", {"trial": i, "seed": args.seed}, ok))
    for i in range(args.trials):
        f = random_self_reciprocal(rng)
        reports.append(
            CheckReport("selfrecip.shift_identity", {"trial": i, "seed": args.seed}, check_recip_identity(f))
        )
        reports.extend(check_recip_congruences(f, params={"trial": i, "seed": args.seed}))
    for q in range(1, 9):
        for a in range(-3, 4):
            reports.append(CheckReport("selfrecip.constant_example", {"q": q, "a": a}, constant_example_check(a, q)))
        for sign in (1, -1):
            reports.append(
                CheckReport("selfrecip.stirling_example", {"q": q, "sign": sign}, stirling_example_check(q, sign))
            )
    return _finish(reports, args, "self-reciprocal identities")


def cmd_table1(args) -> int:
    reports = []
    print("k     M(k)")
    print(f"odd   {verify.trivial_modulus(1).M}")
    for k in EVEN_K_TABLE:
        tm = verify.trivial_modulus(k)
        print(f"{k:<5} {tm.M}")
    return _finish(reports, args, "trivial modulus table") if args.out else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclocong", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    def add(parent, name, fn, help_):
        p = parent.add_parser(name, help=help_)
        p.set_defaults(func=fn)
        p.add_argument("--out", help="write machine-readable reports to this file")
        p.add_argument("--format", choices=FORMATS, default="json-lines")
        p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
        return p

    p = add(sub, "phi", cmd_phi, "print the n-th cyclotomic polynomial")
    p.add_argument("n", type=int)
    p = add(sub, "derivs", cmd_derivs, "shifted coefficients and derivatives at 1")
    p.add_argument("n", type=int)
    p.add_argument("--max-order", type=int)

    pv = sub.add_parser("verify", help="numeric verification over ranges")
    vsub = pv.add_subparsers(dest="check", metavar="CHECK")
    vsub.required = True
    p = add(vsub, "theorem3", cmd_verify_theorem3, "odd-order derivative divisibility")
    p.add_argument("--n", type=parse_range, required=True)
    p.add_argument("--k-max", type=int, default=10)
    p = add(vsub, "trivial", cmd_verify_trivial, "Jordan totient trivial congruence")
    p.add_argument("--k", type=parse_range, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p = add(vsub, "witness", cmd_verify_witness, "bounded non-divisibility witness search")
    p.add_argument("--k", type=parse_range, required=True)
    p.add_argument("--factor", type=int, default=2, help="search modulo factor * M(k)")
    p.add_argument("--n0", type=int, default=2)
    p.add_argument("--budget", type=int, default=500)
    p = add(vsub, "positivity", cmd_verify_positivity, "positivity of b_n(h)")
    p.add_argument("--n", type=parse_range, required=True)
    p = add(vsub, "identities", cmd_verify_identities, "value/log-derivative at 1 and prime derivatives")
    p.add_argument("--n", type=parse_range, required=True)
    p.add_argument("--p-max", type=int, default=200)
    p = add(vsub, "signchange", cmd_verify_signchange, "sign change of Phi_2p' below 1")
    p.add_argument("--p-max", type=int, required=True)

    ps = sub.add_parser("symbolic", help="identities in Q[phi, J2, J4, ...]")
    ssub = ps.add_subparsers(dest="check", metavar="CHECK")
    ssub.required = True
    p = add(ssub, "table", cmd_symbolic_table, "print the derivative-ratio table")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--golden", help="compare the canonical text against this file")
    p = add(ssub, "conjecture", cmd_symbolic_conjecture, "odd-order ratio divisible by phi - 2k")
    p.add_argument("--k-max", type=int, required=True)
    add(ssub, "corollary", cmd_symbolic_corollary, "closed forms for orders 2..5")

    p = add(sub, "lehmer", cmd_lehmer, "Lehmer's expansion with four correction terms")
    p.add_argument("--n-max", type=int, required=True)
    p = add(sub, "selfrecip", cmd_selfrecip, "randomized self-reciprocal identities")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    add(sub, "table1", cmd_table1, "print the trivial modulus table")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
