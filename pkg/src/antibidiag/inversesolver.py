"""Reconstruction of the unique positive coefficient vector realizing an
alternating-sign spectrum, together with the Jacobi-subclass restatement and
the anti-bidiagonal square root of a positive-spectrum Jacobi matrix.

The construction runs the q-system backwards: starting from the monic
polynomial with the prescribed roots, it peels off one polynomial per level.
Each squared codiagonal entry appears as the leading coefficient of the
residual x*q_{k-1} - q_k, whose two top terms cancel exactly; this is the
sum-of-squares difference of the positive roots of consecutive levels, so it
must be strictly positive for any admissible spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    BackendUnsupported,
    EmptyInput,
    NonPositive,
    NonPositiveA,
    NonPositiveLead,
    NotAlternating,
    NotDecreasing,
    NotStrictlyDecreasingModulus,
    NoSignChange,
    InterlaceViolation,
    TerminalMismatch,
    TooSmall,
)
from .matrixkit import (
    CoefficientVector,
    StructuredMatrix,
    build_antibidiagonal,
    build_jacobi_special,
    matmul,
)
from .poly import (
    MonicPoly,
    elementary_symmetric,
    from_roots,
    lin_comb,
    parity_of_degree,
    roots_bracketed,
    shift_up,
    with_parity,
)
from .scalars import Backend
from .spectral import eigensolve_tridiagonal, interlaces


@dataclass(frozen=True)
class Spectrum:
    """Ordered tuple lambda_1, ..., lambda_n with
    lambda_1 > -lambda_2 > lambda_3 > ... > (-1)**(n-1) lambda_n > 0."""

    lambdas: tuple

    @property
    def n(self) -> int:
        return len(self.lambdas)

    def min_modulus_gap(self):
        mods = [abs(v) for v in self.lambdas]
        if len(mods) < 2:
            return None
        return min(mods[k] - mods[k + 1] for k in range(len(mods) - 1))


def validate_spectrum(values) -> Spectrum:
    """Check the alternating-sign strictly-decreasing-modulus conditions,
    naming the first violated inequality on rejection."""
    values = tuple(values)
    if not values:
        raise EmptyInput("spectrum is empty")
    if not values[0] > 0:
        raise NonPositiveLead(f"lambda_1 = {values[0]} must be > 0")
    for k, v in enumerate(values, start=1):
        want_positive = k % 2 == 1
        if v == 0 or (v > 0) != want_positive:
            raise NotAlternating(
                f"lambda_{k} = {v} breaks the sign pattern (-1)**(k-1)"
            )
    for k in range(len(values) - 1):
        if not abs(values[k]) > abs(values[k + 1]):
            raise NotStrictlyDecreasingModulus(
                f"|lambda_{k + 1}| = {abs(values[k])} is not > "
                f"|lambda_{k + 2}| = {abs(values[k + 1])}"
            )
    return Spectrum(values)


@dataclass(frozen=True)
class PositiveTuple:
    """mu_1 > mu_2 > ... > mu_n > 0, all strict."""

    mus: tuple

    def __post_init__(self):
        if not self.mus:
            raise EmptyInput("empty tuple")
        for v in self.mus:
            if not v > 0:
                raise NonPositive(f"{v} is not strictly positive")
        for k in range(len(self.mus) - 1):
            if not self.mus[k] > self.mus[k + 1]:
                raise NotDecreasing(f"mu_{k + 1} <= mu_{k + 2}")


@dataclass(frozen=True)
class SigmaCheck:
    sigma1: object
    sigma2: object
    sigma3: object
    holds: bool


def check_sigma_inequality(spectrum) -> SigmaCheck:
    """sigma_3 > sigma_1 * sigma_2 for the spectrum's elements (n >= 3).

    Accepts a Spectrum or any raw sequence, so boundary cases that fail
    validation can still be probed.
    """
    values = spectrum.lambdas if isinstance(spectrum, Spectrum) else tuple(spectrum)
    if len(values) < 3:
        raise TooSmall("sigma_3 needs n >= 3")
    s1 = elementary_symmetric(values, 1)
    s2 = elementary_symmetric(values, 2)
    s3 = elementary_symmetric(values, 3)
    return SigmaCheck(s1, s2, s3, s3 > s1 * s2)


@dataclass(frozen=True)
class ReconstructionTrace:
    """Everything the backward pass produced: the q-polynomials indexed by
    degree, a_1, the squared tail, the positive coefficient vector (floating
    backend; the exact backend stops at the squares), and per-level root
    interlacing certificates."""

    spectrum: Spectrum
    qs: tuple  # qs[k] = q_k, k = 0..n
    a1: object
    a_squared: tuple  # (a_2^2, ..., a_n^2)
    a: tuple | None
    certificates: tuple | None  # ((k, roots_of_q_k, roots_of_q_{k+1}), ...) desc
    warnings: tuple = field(default=())

    @property
    def coefficient_vector(self) -> CoefficientVector:
        if self.a is None:
            raise BackendUnsupported("square roots unavailable in the exact backend")
        return CoefficientVector(self.a)


def _sigma_from_coeffs(qn: MonicPoly, j: int):
    """sigma_j read off the monic coefficients: c_{n-j} = (-1)**j sigma_j."""
    n = qn.degree
    return (-1) ** j * qn.coeffs[n - j]


def solve(
    spectrum: Spectrum,
    backend: Backend,
    with_certificates: bool = True,
    strict_interlacing: bool = False,
) -> ReconstructionTrace:
    """Backward pass from the prescribed spectrum to the coefficient vector.

    Raises NonPositiveA if a squared entry fails to be positive (invalid input
    or catastrophic roundoff) and TerminalMismatch if the pass does not land on
    the degree-1 and degree-0 boundary polynomials.  Interlacing certificate
    failures are warnings unless ``strict_interlacing`` is set.
    """
    lam = tuple(backend.convert(v) for v in spectrum.lambdas)
    n = len(lam)
    warnings: list[str] = []
    qn = from_roots(lam, backend)
    if n == 1:
        a1 = lam[0]
        qs = (MonicPoly((backend.one,), "even"), qn)
        cert = () if not backend.exact else None
        return ReconstructionTrace(spectrum, qs, a1, (), (a1,) if not backend.exact else None, cert)

    a1 = -qn.coeffs[n - 1]  # sigma_1
    if not a1 > 0:
        raise NonPositiveA(f"a_1 = sigma_1 = {a1} is not positive")
    # q_{n-1}: the parity part of q_n opposite to n, divided by a_1.
    qm1 = [backend.zero] * n
    for k in range(n):
        if (n + k) % 2 == 1:
            qm1[k] = -qn.coeffs[k] / a1
    q_prev = MonicPoly(tuple(qm1), parity_of_degree(n - 1))  # q_{n-1}

    sigma2 = _sigma_from_coeffs(qn, 2)
    sigma3 = _sigma_from_coeffs(qn, 3) if n >= 3 else backend.zero
    a_sq = [sigma3 / a1 - sigma2]  # a_2^2
    if not a_sq[0] > 0:
        raise NonPositiveA(f"a_2^2 = {a_sq[0]} is not positive")
    # q_{n-2} = ((x - a_1) q_{n-1} - q_n) / a_2^2
    r = lin_comb(shift_up(q_prev.coeffs), q_prev.coeffs, -a1)
    r = lin_comb(r, qn.coeffs, -backend.one)
    q_cur, slack = _descend(r, n - 2, a_sq[0], backend)
    qs = [qn, q_prev, q_cur]  # descending degree

    # Levels n-3 down to 0 via the plain three-term step.
    for j in range(1, n - 1):
        deg = n - j - 2
        r = lin_comb(shift_up(qs[-1].coeffs), qs[-2].coeffs, -backend.one)
        asq = r[deg] if deg < len(r) else backend.zero
        if not asq > 0:
            raise NonPositiveA(f"a_{j + 2}^2 = {asq} is not positive")
        a_sq.append(asq)
        q_next, s = _descend(r, deg, asq, backend)
        slack = max(slack, s)
        qs.append(q_next)

    # Terminal boundary: q_1 = x, q_0 = 1 (their parity-forbidden parts were
    # measured before enforcement via the slack accumulator).
    tol = 0.0 if backend.exact else backend.policy.eq_abs * max(
        1.0, max(abs(float(c)) for c in qn.coeffs)
    )
    if slack > tol:
        raise TerminalMismatch(f"parity slack {slack} exceeds tolerance {tol}")
    if qs[-1].coeffs != (backend.one,) or qs[-2].coeffs[-1] != backend.one:
        raise TerminalMismatch("backward pass did not reach the boundary polynomials")

    qs_by_degree = tuple(reversed(qs))
    a_vec = None
    if not backend.exact:
        a_vec = (a1,) + tuple(backend.sqrt(v) for v in a_sq)

    certificates = None
    if with_certificates and not backend.exact:
        certificates, cert_warn = _certify_interlacing(qs_by_degree, lam, backend)
        warnings.extend(cert_warn)
        if strict_interlacing and cert_warn:
            raise InterlaceViolation("; ".join(cert_warn))

    return ReconstructionTrace(
        spectrum,
        qs_by_degree,
        a1,
        tuple(a_sq),
        a_vec,
        certificates,
        tuple(warnings),
    )


def _descend(r, deg, divisor, backend):
    """Divide the residual by the extracted square, enforce parity, and report
    the largest parity-forbidden coefficient left behind (scaled slack)."""
    coeffs = [c / divisor for c in r[: deg + 1]]
    coeffs[deg] = backend.one  # leading term divides to one exactly by construction
    slack = 0.0
    forbidden = 1 if deg % 2 == 0 else 0
    for k in range(deg + 1):
        if k % 2 == forbidden:
            slack = max(slack, abs(float(coeffs[k])))
    p = with_parity(MonicPoly(tuple(coeffs)), parity_of_degree(deg), backend)
    return p, slack


def _certify_interlacing(qs_by_degree, lam, backend):
    """Bracketed roots of each q_k between consecutive roots of q_{k+1}."""
    n = len(lam)
    certs = []
    warns = []
    roots = {n: tuple(sorted(lam))}
    for k in range(n - 1, 0, -1):
        outer = roots[k + 1]
        brackets = [(outer[i], outer[i + 1]) for i in range(len(outer) - 1)]
        try:
            inner = roots_bracketed(qs_by_degree[k], brackets, backend)
        except NoSignChange as exc:
            warns.append(f"level {k}: {exc}")
            break
        if not interlaces(inner, outer):
            warns.append(f"level {k}: interlacing violated")
            break
        roots[k] = inner
        certs.append((k, inner, outer))
    return tuple(certs), warns


@dataclass(frozen=True)
class RoundtripResult:
    trace: ReconstructionTrace
    recovered: tuple
    max_error: float


def solve_roundtrip(spectrum: Spectrum, backend: Backend, **kw) -> RoundtripResult:
    """Solve, rebuild the Jacobi matrix, eigensolve it independently, and
    report the worst relative eigenvalue error against the input."""
    if backend.exact:
        raise BackendUnsupported("roundtrip eigensolve needs the floating backend")
    trace = solve(spectrum, backend, **kw)
    B = build_jacobi_special(trace.coefficient_vector, backend)
    eig = eigensolve_tridiagonal(B, backend)
    expected = tuple(sorted(spectrum.lambdas))
    err = max(abs(e - x) / abs(x) for e, x in zip(eig, expected))
    return RoundtripResult(trace, eig, err)


@dataclass(frozen=True)
class SqrtResult:
    spectrum: Spectrum
    a: CoefficientVector
    antibidiagonal: StructuredMatrix
    jacobi: StructuredMatrix


def jacobi_sqrt(mus: PositiveTuple, backend: Backend) -> SqrtResult:
    """Anti-bidiagonal symmetric square root construction: alternate the signs
    of the square roots of the prescribed positive spectrum, solve, and square."""
    if backend.exact:
        raise BackendUnsupported("square roots need the floating backend")
    lam = tuple(
        (-1) ** j * backend.sqrt(backend.convert(m)) for j, m in enumerate(mus.mus)
    )
    spectrum = validate_spectrum(lam)
    trace = solve(spectrum, backend, with_certificates=False)
    a = trace.coefficient_vector
    A = build_antibidiagonal(a, backend)
    B = matmul(A, A, backend)
    return SqrtResult(spectrum, a, A, B)
