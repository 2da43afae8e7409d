"""Command-line surface.

Commands: solve, forward, roundtrip, sqrt, signreg, verify-all.  Input comes
from inline comma-separated values or a JSON/CSV file; reports are emitted as
JSON (canonical machine format), CSV, or aligned human-readable text.

Exit statuses: 0 success, 1 input validation rejection, 2 numerical breakdown,
3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import errors as err
from .inversesolver import (
    PositiveTuple,
    check_sigma_inequality,
    jacobi_sqrt,
    solve,
    solve_roundtrip,
    validate_spectrum,
)
from .matrixkit import (
    CoefficientVector,
    build_antibidiagonal,
    build_antidiagonal_unit,
    build_jacobi_special,
    matmul,
)
from .poly import from_roots, poly_eval
from .recurrence import forward_p, forward_q, forward_q_squared
from .sampling import (
    case_rng,
    random_coefficients,
    random_positive_tuple,
    random_rational_coefficients,
    random_rational_spectrum,
    random_spectrum,
)
from .scalars import Backend, TolerancePolicy, float64, rational
from .spectral import (
    cauchy_binet_check,
    check_class_plus,
    classify_sign_regular,
    eigensolve_tridiagonal,
    signature_sequence,
)

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_BREAKDOWN = 2
EXIT_USAGE = 3

GAP_WARN_THRESHOLD = 1e-6

_REJECTION_ERRORS = (
    err.SpectrumError,
    err.NonPositiveEntry,
    err.NotDecreasing,
    err.NonPositive,
    err.DuplicateRoots,
    err.TooSmall,
)
_BREAKDOWN_ERRORS = (
    err.NonPositiveA,
    err.TerminalMismatch,
    err.InterlaceViolation,
    err.NoSignChange,
    err.NotTridiagonal,
    err.StructuralZero,
)
_USAGE_ERRORS = (
    err.BackendUnsupported,
    err.TooLarge,
    err.SizeMismatch,
    err.IndexOutOfRange,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antibidiag",
        description="Inverse eigenvalue problem for symmetric anti-bidiagonal "
        "matrices and the associated Jacobi subclass.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--backend", choices=["float64", "rational"], default="float64")
        p.add_argument("--format", choices=["json", "csv", "pretty"], default="json")
        p.add_argument("--input", type=Path, help="JSON or CSV input file")
        p.add_argument("--tol-abs", type=float, default=1e-10)
        p.add_argument("--tol-rel", type=float, default=1e-10)
        p.add_argument("--root-tol", type=float, default=1e-13)

    p = sub.add_parser("solve", help="spectrum -> positive coefficient vector")
    common(p)
    p.add_argument("--spectrum", help="comma-separated eigenvalues")
    p.add_argument("--roundtrip", action="store_true", help="also eigensolve the result")

    p = sub.add_parser("forward", help="coefficients -> characteristic polynomials")
    common(p)
    p.add_argument("--a", help="comma-separated positive coefficients")
    p.add_argument("--eigs", action="store_true", help="also eigensolve the Jacobi matrix")

    p = sub.add_parser("roundtrip", help="solve then eigensolve, report max error")
    common(p)
    p.add_argument("--spectrum", help="comma-separated eigenvalues")

    p = sub.add_parser("sqrt", help="anti-bidiagonal square root of a Jacobi matrix")
    common(p)
    p.add_argument("--mus", help="strictly decreasing positive eigenvalues")

    p = sub.add_parser("signreg", help="sign-regularity classification")
    common(p)
    p.add_argument("--a", help="coefficients of the matrix to classify")
    p.add_argument("--spectrum", help="solve first, then classify the result")
    p.add_argument("--max-power", type=int, default=None)

    p = sub.add_parser("verify-all", help="run the randomized property batteries")
    common(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sizes", default="1,2,3,4,5,6,7,8", help="comma-separated n values")
    p.add_argument("--cases", type=int, default=20, help="cases per battery per size")

    return parser


def _make_backend(args) -> Backend:
    policy = TolerancePolicy(args.tol_abs, args.tol_rel, args.root_tol)
    return rational(policy) if args.backend == "rational" else float64(policy)


def _parse_token(tok: str, backend: Backend):
    tok = tok.strip()
    if backend.exact:
        return Fraction(tok)
    return float(Fraction(tok)) if "/" in tok else float(tok)


def _parse_inline(text: str, backend: Backend):
    if text.strip() == "":
        return ()
    return tuple(_parse_token(t, backend) for t in text.split(","))


def _load_input(path: Path, backend: Backend, keys=("spectrum", "a", "mus")):
    text = path.read_text()
    if path.suffix == ".json" or text.lstrip().startswith("{"):
        doc = json.loads(text)
        for key in keys:
            if key in doc:
                return key, tuple(_parse_token(str(v), backend) for v in doc[key])
        raise err.SizeMismatch(f"input file has none of the keys {keys}")
    values = tuple(
        _parse_token(line, backend) for line in text.splitlines() if line.strip()
    )
    return None, values


def _values_from(args, backend, flag: str):
    inline = getattr(args, flag.lstrip("-").replace("-", "_"), None)
    if inline is not None:
        return _parse_inline(inline, backend)
    if args.input is not None:
        _, values = _load_input(args.input, backend)
        return values
    raise err.SizeMismatch(f"provide {flag} or --input")


def _num(x, backend: Backend):
    if backend.exact:
        return str(x)
    return float(x)


def _nums(seq, backend):
    return [_num(v, backend) for v in seq]


def _matrix(M, backend):
    if M is None:
        return None
    return [[_num(v, backend) for v in row] for row in M.entries]


# --- report rendering ---


def _flatten(prefix, value, rows):
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, rows)
    elif isinstance(value, list) and value and isinstance(value[0], list):
        for i, row in enumerate(value, start=1):
            rows.append([f"{prefix}.row{i}"] + [str(v) for v in row])
    elif isinstance(value, list):
        rows.append([prefix] + [str(v) for v in value])
    else:
        rows.append([prefix, str(value)])


def _render_csv(report: dict) -> str:
    rows: list[list[str]] = []
    _flatten("", report, rows)
    return "\n".join(",".join(row) for row in rows)


def _render_pretty(report: dict) -> str:
    lines = []

    def fmt(v):
        return f"{v:.12g}" if isinstance(v, float) else str(v)

    def emit(key, value, indent=0):
        pad = "  " * indent
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            for k, v in value.items():
                emit(k, v, indent + 1)
        elif isinstance(value, list) and value and isinstance(value[0], list):
            lines.append(f"{pad}{key}:")
            cells = [[fmt(v) for v in row] for row in value]
            width = max(len(c) for row in cells for c in row)
            for row in cells:
                lines.append(pad + "  [ " + "  ".join(c.rjust(width) for c in row) + " ]")
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: " + ", ".join(fmt(v) for v in value))
        else:
            lines.append(f"{pad}{key}: {fmt(value)}")

    for k, v in report.items():
        emit(k, v)
    return "\n".join(lines)


def _emit(report: dict, fmt: str, out) -> None:
    if fmt == "json":
        print(json.dumps(report), file=out)
    elif fmt == "csv":
        print(_render_csv(report), file=out)
    else:
        print(_render_pretty(report), file=out)


# --- commands ---


def _solve_report(values, backend: Backend, want_roundtrip: bool) -> dict:
    spectrum = validate_spectrum(values)
    trace = solve(spectrum, backend)
    warnings = list(trace.warnings)
    gap = spectrum.min_modulus_gap()
    if gap is not None and float(gap) < GAP_WARN_THRESHOLD:
        warnings.append(
            f"minimum modulus gap {float(gap):.3e} is below {GAP_WARN_THRESHOLD}; "
            "reconstruction is ill-conditioned, consider --backend rational"
        )
    a_sq_report = [trace.a1] + list(trace.a_squared)
    if backend.exact:
        A = B = None
        reproduced = forward_q_squared(trace.a1, trace.a_squared, backend).top
        target = from_roots(spectrum.lambdas, backend)
        residual = 0 if reproduced.coeffs == target.coeffs else 1
        max_residual = _num(Fraction(residual), backend)
        roundtrip_error = None
    else:
        cv = trace.coefficient_vector
        A = build_antibidiagonal(cv, backend)
        B = build_jacobi_special(cv, backend)
        pn = forward_q_squared(trace.a1, trace.a_squared, backend).top
        max_residual = max(abs(poly_eval(pn, lam)) for lam in spectrum.lambdas)
        roundtrip_error = None
        if want_roundtrip:
            roundtrip_error = eigensolve_tridiagonal(B, backend)
            expected = sorted(spectrum.lambdas)
            roundtrip_error = max(
                abs(e - x) / abs(x) for e, x in zip(roundtrip_error, expected)
            )
    return {
        "input": _nums(spectrum.lambdas, backend),
        "a": None if trace.a is None else _nums(trace.a, backend),
        "a_squared": _nums(a_sq_report, backend),
        "antibidiagonal": _matrix(A, backend),
        "jacobi": _matrix(B, backend),
        "diagnostics": {
            "max_residual": max_residual,
            "roundtrip_error": roundtrip_error,
            "min_modulus_gap": None if gap is None else _num(gap, backend),
        },
        "warnings": warnings,
    }


def _cmd_solve(args, backend, out) -> int:
    values = _values_from(args, backend, "--spectrum")
    report = _solve_report(values, backend, args.roundtrip)
    _emit(report, args.format, out)
    return EXIT_OK


def _cmd_forward(args, backend, out) -> int:
    values = _values_from(args, backend, "--a")
    cv = CoefficientVector(values)
    ps = forward_p(cv, backend)
    qs = forward_q(cv, backend)
    match = all(
        backend.approx_equal(x, y) for x, y in zip(ps.top.coeffs, qs.top.coeffs)
    )
    eig = None
    if args.eigs:
        if backend.exact:
            raise err.BackendUnsupported("--eigs needs --backend float64")
        eig = list(eigensolve_tridiagonal(build_jacobi_special(cv, backend), backend))
    report = {
        "a": _nums(cv.a, backend),
        "p_coeffs": _nums(ps.top.coeffs, backend),
        "q_coeffs": _nums(qs.top.coeffs, backend),
        "systems_match": match,
        "eigenvalues": eig,
    }
    _emit(report, args.format, out)
    return EXIT_OK


def _cmd_roundtrip(args, backend, out) -> int:
    if backend.exact:
        raise err.BackendUnsupported(
            "roundtrip eigensolves the result; use --backend float64"
        )
    values = _values_from(args, backend, "--spectrum")
    spectrum = validate_spectrum(values)
    result = solve_roundtrip(spectrum, backend)
    report = {
        "input": _nums(spectrum.lambdas, backend),
        "a": _nums(result.trace.a, backend),
        "recovered": _nums(result.recovered, backend),
        "max_error": result.max_error,
        "warnings": list(result.trace.warnings),
    }
    _emit(report, args.format, out)
    return EXIT_OK


def _cmd_sqrt(args, backend, out) -> int:
    if backend.exact:
        raise err.BackendUnsupported(
            "the square-root construction needs --backend float64"
        )
    values = _values_from(args, backend, "--mus")
    result = jacobi_sqrt(PositiveTuple(values), backend)
    eig = eigensolve_tridiagonal(result.jacobi, backend)
    spec_err = max(
        abs(e - m) / m for e, m in zip(eig, sorted(values))
    )
    report = {
        "mus": _nums(values, backend),
        "spectrum": _nums(result.spectrum.lambdas, backend),
        "a": _nums(result.a.a, backend),
        "antibidiagonal": _matrix(result.antibidiagonal, backend),
        "jacobi": _matrix(result.jacobi, backend),
        "diagnostics": {"spectrum_error": spec_err},
    }
    _emit(report, args.format, out)
    return EXIT_OK


def _cmd_signreg(args, backend, out) -> int:
    if args.a is not None:
        cv = CoefficientVector(_parse_inline(args.a, backend))
    elif args.spectrum is not None or args.input is not None:
        values = _values_from(args, backend, "--spectrum")
        trace = solve(validate_spectrum(values), backend, with_certificates=False)
        cv = trace.coefficient_vector
    else:
        raise err.SizeMismatch("provide --a, --spectrum, or --input")
    A = build_antibidiagonal(cv, backend)
    n = A.n
    report_obj = classify_sign_regular(A, n, signature_sequence(n), backend)
    max_power = args.max_power if args.max_power is not None else 2 * n
    m = check_class_plus(A, max_power, backend)
    report = {
        "n": n,
        "signature": list(signature_sequence(n)),
        "orders": [
            {
                "order": v.order,
                "conforming": v.conforming,
                "strict": v.strict,
                "principal_conforming": v.principal_conforming,
            }
            for v in report_obj.verdicts
        ],
        "achieved_class": report_obj.achieved_class,
        "all_minors_conforming": report_obj.all_conforming,
        "principal_conforming": report_obj.principal_conforming,
        "class_plus_power": m,
    }
    _emit(report, args.format, out)
    return EXIT_OK


# --- verify-all batteries ---


def _battery_roundtrip(seed, sizes, cases, backend):
    worst = 0.0
    for n in sizes:
        for i in range(cases):
            rng = case_rng(seed, f"roundtrip{n}", i)
            spec = validate_spectrum(random_spectrum(rng, n))
            res = solve_roundtrip(spec, backend)
            worst = max(worst, res.max_error)
            if res.trace.certificates is not None and n > 1:
                if len(res.trace.certificates) != n - 1:
                    return False, f"incomplete interlacing chain at n={n}"
    return worst <= 1e-8, f"worst relative eigenvalue error {worst:.3e}"


def _battery_recurrence(seed, sizes, cases):
    backend = rational()
    for n in sizes:
        for i in range(cases):
            rng = case_rng(seed, f"recur{n}", i)
            cv = CoefficientVector(random_rational_coefficients(rng, n))
            if forward_p(cv, backend).top.coeffs != forward_q(cv, backend).top.coeffs:
                return False, f"p/q mismatch at n={n} case {i}"
    return True, "p- and q-systems agree exactly"


def _battery_sigma(seed, sizes, cases):
    for n in [m for m in sizes if m >= 3]:
        for i in range(cases):
            rng = case_rng(seed, f"sigma{n}", i)
            spec = validate_spectrum(random_spectrum(rng, n))
            if not check_sigma_inequality(spec).holds:
                return False, f"sigma inequality failed at n={n} case {i}"
    return True, "sigma_3 > sigma_1*sigma_2 on all samples"


def _battery_signreg(seed, cases, backend):
    for n in (2, 3, 4):
        for i in range(max(1, cases // 4)):
            rng = case_rng(seed, f"signreg{n}", i)
            spec = validate_spectrum(random_spectrum(rng, n))
            trace = solve(spec, backend, with_certificates=False)
            A = build_antibidiagonal(trace.coefficient_vector, backend)
            rep = classify_sign_regular(A, n, signature_sequence(n), backend)
            if not rep.all_conforming:
                return False, f"sign-regularity failed at n={n} case {i}"
    return True, "reconstructed matrices conform to the signature sequence"


def _battery_cauchy_binet(seed, cases):
    backend = rational()
    for i in range(cases):
        rng = case_rng(seed, "cb", i)
        n = rng.randint(2, 5)
        cv = CoefficientVector(random_rational_coefficients(rng, n))
        J = build_antidiagonal_unit(n, backend)
        A = build_antibidiagonal(cv, backend)
        B = matmul(J, A, backend)
        k = rng.randint(1, n)
        rows = tuple(sorted(rng.sample(range(1, n + 1), k)))
        cols = tuple(sorted(rng.sample(range(1, n + 1), k)))
        _, _, equal = cauchy_binet_check(J, B, rows, cols, backend)
        if not equal:
            return False, f"Cauchy-Binet failed at case {i}"
    return True, "Cauchy-Binet identity exact on all samples"


def _battery_sqrt(seed, sizes, cases, backend):
    for n in [m for m in sizes if m <= 10]:
        for i in range(max(1, cases // 2)):
            rng = case_rng(seed, f"sqrt{n}", i)
            mus = random_positive_tuple(rng, n)
            res = jacobi_sqrt(PositiveTuple(mus), backend)
            B = res.jacobi
            scale = float(B.maxnorm())
            for r in range(n):
                for c in range(n):
                    if abs(r - c) > 1 and abs(B.entries[r][c]) > 1e-10 * scale:
                        return False, f"off-tridiagonal mass at n={n} case {i}"
            eig = eigensolve_tridiagonal(B, backend)
            worst = max(abs(e - m) / m for e, m in zip(eig, sorted(mus)))
            if worst > 1e-8:
                return False, f"square spectrum error {worst:.3e} at n={n}"
    return True, "squares are Jacobi with the prescribed spectrum"


def _cmd_verify_all(args, backend, out) -> int:
    sizes = [int(t) for t in args.sizes.split(",") if t.strip()]
    seed, cases = args.seed, args.cases
    fb = backend if not backend.exact else float64(backend.policy)
    results = [
        ("roundtrip", *_battery_roundtrip(seed, sizes, cases, fb)),
        ("recurrence-equivalence", *_battery_recurrence(seed, [n for n in sizes if n <= 12], cases)),
        ("sigma-inequality", *_battery_sigma(seed, sizes, cases)),
        ("sign-regularity", *_battery_signreg(seed, cases, fb)),
        ("cauchy-binet", *_battery_cauchy_binet(seed, cases)),
        ("jacobi-sqrt", *_battery_sqrt(seed, sizes, cases, fb)),
    ]
    report = {
        "seed": seed,
        "sizes": sizes,
        "results": [
            {"battery": name, "passed": ok, "detail": detail}
            for name, ok, detail in results
        ],
        "passed": all(ok for _, ok, _ in results),
    }
    if args.format == "pretty":
        for name, ok, detail in results:
            print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}", file=out)
        print(("all batteries passed" if report["passed"] else "FAILURES present"), file=out)
    else:
        _emit(report, args.format, out)
    return EXIT_OK if report["passed"] else EXIT_BREAKDOWN


_COMMANDS = {
    "solve": _cmd_solve,
    "forward": _cmd_forward,
    "roundtrip": _cmd_roundtrip,
    "sqrt": _cmd_sqrt,
    "signreg": _cmd_signreg,
    "verify-all": _cmd_verify_all,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        backend = _make_backend(args)
        return _COMMANDS[args.command](args, backend, out)
    except _REJECTION_ERRORS as exc:
        print(f"rejected [{type(exc).__name__}]: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    except _BREAKDOWN_ERRORS as exc:
        print(f"numerical breakdown [{type(exc).__name__}]: {exc}", file=sys.stderr)
        return EXIT_BREAKDOWN
    except _USAGE_ERRORS as exc:
        print(f"usage error [{type(exc).__name__}]: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"usage error [{type(exc).__name__}]: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
