"""``spv`` command line: verify, integrate, check, fuzz, derivative.

Exit codes: 0 every case passed, 1 some identity failed, 2 usage or parse
error, 3 poles or numeric errors only.
"""

from __future__ import annotations

import argparse
import re
import shlex
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import kernel
from .dsl import DslSyntaxError, bundled_files, bundled_path, check_file
from .errors import NoConvergence, PoleError
from .exactnum import parse_rational
from .gamma import beta_numeric
from .quad import MAX_LEVEL, tanh_sinh
from .report import Case, RunReport, fmt_exact, fmt_float, render, use_color
from .rng import Pcg64Sampler

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_POLE = 0, 1, 2, 3

DERIVATIVE_RTOL = 1e-5
MAX_RESAMPLES = 10_000


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected lo..hi or a single non-negative integer, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_list(text: str) -> list[Fraction]:
    return [_rational(part) for part in text.split(",")]


def _u64(text: str) -> int:
    try:
        v = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def _q(r: Fraction) -> str:
    return str(r)


def _map(func, items, jobs: int) -> list:
    """Ordered map, optionally across worker processes."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items, chunksize=max(1, len(items) // (4 * jobs))))


# verify


def _check_case(case_id: str, inputs: dict, res: kernel.CheckResult) -> Case:
    if res.poles:
        return Case(case_id, inputs, None, None, "pole", f"vanishing denominator at k={res.poles}")
    return Case(case_id, inputs, fmt_exact(res.lhs), fmt_exact(res.rhs), "pass" if res.equal else "fail")


def theorem_case(n: int) -> Case:
    return _check_case(f"theorem n={n}", {"n": str(n)}, kernel.theorem_check(n))


def corollary_case(job) -> Case:
    variant, n, a = job
    res = kernel.corollary_check(variant, n, a)
    return _check_case(f"corollary{variant} n={n} a={_q(a)}", {"n": str(n), "a": _q(a)}, res)


def conjecture_cases(job) -> list[Case]:
    n, f, g = job
    inputs = {"n": str(n), "f": _q(f), "g": _q(g)}
    tag = f"n={n} f={_q(f)} g={_q(g)}"
    p = kernel.conjecture_probe(n, f, g)
    if p.poles:
        detail = f"vanishing denominator at k={p.poles}"
        return [
            Case(f"conjecture-printed {tag}", inputs, None, None, "pole", detail),
            Case(f"conjecture-corrected {tag}", inputs, None, None, "pole", detail),
        ]
    lhs = fmt_exact(p.sum_value)
    return [
        Case(
            f"conjecture-printed {tag}", inputs, lhs, fmt_exact(p.paper_rhs),
            "pass" if p.paper_form_holds else "fail", "prefactor n^n",
        ),
        Case(
            f"conjecture-corrected {tag}", inputs, lhs, fmt_exact(p.corrected_rhs),
            "pass" if p.corrected_form_holds else "fail", "prefactor f^n",
        ),
    ]


def cmd_verify(args) -> RunReport:
    lo, hi = args.n
    if args.theorem:
        if args.a is not None or args.f is not None or args.g is not None:
            raise UsageError("--a/--f/--g are not used with --theorem")
        cases = _map(theorem_case, range(lo, hi + 1), args.jobs)
    elif args.corollary is not None:
        if args.a is None:
            raise UsageError("--corollary needs --a")
        if args.f is not None or args.g is not None:
            raise UsageError("--f/--g are not used with --corollary")
        if lo < 1:
            raise UsageError("corollary checks need n >= 1")
        jobs = [(args.corollary, n, a) for n in range(lo, hi + 1) for a in args.a]
        cases = _map(corollary_case, jobs, args.jobs)
    else:
        if args.f is None or args.g is None:
            raise UsageError("--conjecture needs --f and --g")
        if args.a is not None:
            raise UsageError("--a is not used with --conjecture")
        if lo < 1:
            raise UsageError("conjecture probes need n >= 1")
        nested = _map(conjecture_cases, [(n, args.f, args.g) for n in range(lo, hi + 1)], args.jobs)
        cases = [c for pair in nested for c in pair]
    return RunReport(args.command_echo, cases)


# integrate


def integrate_case(job) -> Case:
    n, tol, max_level = job
    exact = kernel.integral_exact(n)
    ref = float(exact)
    beta = beta_numeric(n + 1, 1 - 1 / n)
    numeric = {"exact_float": fmt_float(ref), "beta_gamma": fmt_float(beta)}
    try:
        q = tanh_sinh(n, tol, max_level)
    except NoConvergence as exc:
        numeric["beta_gamma_deviation"] = fmt_float(abs(beta - ref))
        return Case(f"integral n={n}", {"n": str(n)}, fmt_exact(exact), None, "error", str(exc), numeric)
    dev_beta = abs(beta - ref)
    dev_quad = abs(q.value - ref)
    numeric.update(
        {
            "tanh_sinh": fmt_float(q.value),
            "beta_gamma_deviation": fmt_float(dev_beta),
            "tanh_sinh_deviation": fmt_float(dev_quad),
            "tanh_sinh_levels": str(q.levels_used),
            "tanh_sinh_evaluations": str(q.evaluations),
        }
    )
    ok = dev_beta <= tol and dev_quad <= tol
    return Case(f"integral n={n}", {"n": str(n)}, fmt_exact(exact), None, "pass" if ok else "fail", "", numeric)


def cmd_integrate(args) -> RunReport:
    lo, hi = args.n
    if lo < 2:
        raise UsageError("the integral diverges for n < 2")
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    if not 1 <= args.max_level <= MAX_LEVEL:
        raise UsageError(f"--max-level must be in 1..{MAX_LEVEL}")
    jobs = [(n, args.tol, args.max_level) for n in range(lo, hi + 1)]
    return RunReport(args.command_echo, _map(integrate_case, jobs, args.jobs))


# check


def _resolve_idn(name: str) -> Path:
    p = Path(name)
    if p.exists():
        return p
    if name in bundled_files():
        return bundled_path(name)
    raise UsageError(f"no such file: {name} (bundled files: {', '.join(bundled_files())})")


def cmd_check(args) -> RunReport:
    path = _resolve_idn(args.file)
    try:
        report = check_file(path, jobs=args.jobs)
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc}") from None
    cases = []
    for a, v in report.all_verdicts():
        inputs = {name: _q(val) for name, val in v.bindings}
        tag = " ".join(f"{k}={x}" for k, x in inputs.items())
        case_id = f"{path.name}#{a.index} {tag}".rstrip()
        detail = f"{v.error_kind}: {v.detail}" if v.verdict == "error" else ""
        cases.append(Case(case_id, inputs, fmt_exact(v.lhs), fmt_exact(v.rhs), v.verdict, detail))
    return RunReport(args.command_echo, cases)


# fuzz


def fuzz_case(job) -> tuple[Case, bool]:
    idx, n, f, g = job
    p = kernel.conjecture_probe(n, f, g)
    inputs = {"n": str(n), "f": _q(f), "g": _q(g)}
    detail = "printed n^n form " + ("agrees" if p.paper_form_holds else "disagrees")
    verdict = "pass" if p.corrected_form_holds else "fail"
    case = Case(f"trial {idx}", inputs, fmt_exact(p.sum_value), fmt_exact(p.corrected_rhs), verdict, detail)
    return case, p.paper_form_holds


def sample_instances(trials: int, seed: int, n_max: int, bound: int):
    rng = Pcg64Sampler(seed)
    instances = []
    skipped = 0

    def rat() -> Fraction:
        num = rng.integer(-bound, bound)
        den = rng.integer(1, bound)
        return Fraction(num, den)

    for idx in range(1, trials + 1):
        for _ in range(MAX_RESAMPLES):
            n = rng.integer(1, n_max)
            f, g = rat(), rat()
            if not kernel.IdentityInstance(n, f, g).poles():
                break
            skipped += 1
        else:
            raise RuntimeError("could not draw a pole-free instance")
        instances.append((idx, n, f, g))
    return instances, skipped


def cmd_fuzz(args) -> RunReport:
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    if args.n_max < 1:
        raise UsageError("--n-max must be at least 1")
    if args.coeff_bound < 1:
        raise UsageError("--coeff-bound must be at least 1")
    instances, skipped = sample_instances(args.trials, args.seed, args.n_max, args.coeff_bound)
    results = _map(fuzz_case, instances, args.jobs)
    cases = [c for c, _ in results]
    agree = [inst for inst, (_, ok) in zip(instances, results) if ok]
    f_is_n = sum(1 for _, n, f, _ in agree if f == n)
    # f^n == n^n also when f = -n and n is even
    f_is_minus_n = sum(1 for _, n, f, _ in agree if f == -n and n % 2 == 0)
    notes = {
        "prng": "numpy PCG64 raw 64-bit output, rejection-sampled integers",
        "skipped_pole_draws": skipped,
        "printed_form_agreements": len(agree),
        "printed_form_agreements_with_f_eq_n": f_is_n,
        "printed_form_agreements_with_f_eq_minus_n_even_n": f_is_minus_n,
        "printed_form_agreements_other": len(agree) - f_is_n - f_is_minus_n,
    }
    return RunReport(args.command_echo, cases, notes)


# derivative


def cmd_derivative(args) -> RunReport:
    m, n, a = args.m, args.n, args.a
    if m < 0:
        raise UsageError("--m must be non-negative")
    if n < 1:
        raise UsageError("--n must be a positive integer")
    inputs = {"m": str(m), "n": str(n), "a": _q(a)}
    tag = f"m={m} n={n} a={_q(a)}"
    try:
        exact = kernel.derivative_reciprocal_product(m, n, a)
    except PoleError as exc:
        case = Case(f"derivative {tag}", inputs, None, None, "pole", f"vanishing factor at k={exc.poles}")
        return RunReport(args.command_echo, [case])
    fd = kernel.finite_difference_derivative(m, n, a, args.h)
    ref = float(exact)
    rel = abs(fd - ref) / abs(ref) if ref else abs(fd)
    fd_ok = rel <= DERIVATIVE_RTOL
    cases = [
        Case(
            f"derivative-vs-finite-difference {tag}",
            inputs,
            fmt_exact(exact),
            None,
            "pass" if fd_ok else "fail",
            "match" if fd_ok else "mismatch",
            {
                "analytic_float": fmt_float(ref),
                "finite_difference": fmt_float(fd),
                "relative_error": fmt_float(rel),
                "step": fmt_float(args.h),
            },
        )
    ]
    if m == 3:
        printed = kernel.claimed_closed_form_value(n, a, m)
        same = printed == exact
        cases.append(
            Case(
                f"derivative-vs-printed-closed-form {tag}",
                inputs,
                fmt_exact(exact),
                fmt_exact(printed),
                "pass" if same else "fail",
                "match" if same else "mismatch",
            )
        )
    return RunReport(args.command_echo, cases)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, jobs=True):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        if jobs:
            p.add_argument("--jobs", type=int, default=1, help="worker processes (output order is unaffected)")

    v = sub.add_parser("verify", help="check the theorem, a corollary or the conjecture over a grid")
    target = v.add_mutually_exclusive_group(required=True)
    target.add_argument("--theorem", action="store_true")
    target.add_argument("--corollary", choices=kernel.COROLLARY_VARIANTS)
    target.add_argument("--conjecture", action="store_true")
    v.add_argument("--n", type=parse_range, required=True, metavar="LO..HI")
    v.add_argument("--a", type=_rational_list, metavar="RATIONALS", help="comma-separated, e.g. -1/2,1,7/3")
    v.add_argument("--f", type=_rational)
    v.add_argument("--g", type=_rational)
    common(v)
    v.set_defaults(handler=cmd_verify)

    i = sub.add_parser("integrate", help="exact vs Beta/Gamma vs tanh-sinh values of the integral")
    i.add_argument("--n", type=parse_range, required=True, metavar="LO..HI")
    i.add_argument("--tol", type=float, default=1e-10)
    i.add_argument("--max-level", type=int, default=12)
    common(i)
    i.set_defaults(handler=cmd_integrate)

    c = sub.add_parser("check", help="evaluate every assertion of an .idn file")
    c.add_argument("file")
    common(c)
    c.set_defaults(handler=cmd_check)

    fz = sub.add_parser("fuzz", help="random (n, f, g) probes of the general identity")
    fz.add_argument("--trials", type=int, required=True)
    fz.add_argument("--seed", type=_u64, required=True)
    fz.add_argument("--n-max", type=int, default=12)
    fz.add_argument("--coeff-bound", type=int, default=9)
    common(fz)
    fz.set_defaults(handler=cmd_fuzz)

    d = sub.add_parser("derivative", help="d/da of the reciprocal product against the printed closed form")
    d.add_argument("--m", type=int, default=3)
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--a", type=_rational, required=True)
    d.add_argument("--h", type=float, default=1e-6, help="finite-difference step")
    common(d, jobs=False)
    d.set_defaults(handler=cmd_derivative)
    return parser


def _echo(argv: list[str]) -> str:
    """Command line without --jobs, which must not change the report."""
    kept = []
    skip = False
    for tok in argv:
        if skip:
            skip = False
            continue
        if tok == "--jobs":
            skip = True
            continue
        if tok.startswith("--jobs="):
            continue
        kept.append(tok)
    return shlex.join(["spv", *kept])


_RATIONAL_FLAGS = ("--a", "--f", "--g")


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Let ``--a -1/2,1`` through; argparse would read ``-1/2,1`` as a flag."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _RATIONAL_FLAGS and i + 1 < len(argv) and re.match(r"-\d", argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "jobs", 1) < 1:
        print("spv: error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    args.command_echo = _echo(argv)
    try:
        report = args.handler(args)
    except UsageError as exc:
        print(f"spv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DslSyntaxError as exc:
        print(exc.render(), file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(render(report, args.format, use_color(sys.stdout)))
    sys.stdout.flush()
    code = report.exit_code()
    if args.command == "derivative" and code != EXIT_POLE:
        # reports the comparison; it does not judge the printed formula
        return EXIT_OK
    return code


def run() -> None:
    sys.exit(main())
