"""Independent verification machinery: symmetric-tridiagonal eigenvalues via
Sturm-count bisection, strict interlacing, sign-regularity classification by
exhaustive minor enumeration, and a Cauchy-Binet identity checker.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import (
    BackendUnsupported,
    NotTridiagonal,
    SizeMismatch,
    TooLarge,
)
from .matrixkit import StructuredMatrix, check_index_set, matmul, minor
from .scalars import Backend, TolerancePolicy

MINOR_ENUM_GUARD = 10**7
BISECT_MAX_ITER = 200

# Pivot-underflow guard for the Sturm count (zero pivots become a tiny
# negative, the conventional limiting choice).
_TINY = 1e-300


def _extract_tridiagonal(T: StructuredMatrix, policy: TolerancePolicy):
    n = T.n
    scale = max(1.0, float(T.maxnorm()))
    diag = [float(T.entries[i][i]) for i in range(n)]
    off = []
    for i in range(n):
        for j in range(n):
            if abs(i - j) > 1 and abs(float(T.entries[i][j])) > policy.eq_abs * scale:
                raise NotTridiagonal(f"entry ({i + 1},{j + 1}) is nonzero")
    for i in range(n - 1):
        lo, hi = float(T.entries[i + 1][i]), float(T.entries[i][i + 1])
        if abs(lo - hi) > policy.eq_abs * scale:
            raise NotTridiagonal("matrix is not symmetric")
        off.append(0.5 * (lo + hi))
    return diag, off


def sturm_count(diag, off, x: float) -> int:
    """Number of eigenvalues strictly below x, from the shifted LDL^T pivot signs."""
    scale = max(1.0, max(abs(d) for d in diag), max((abs(e) for e in off), default=0.0))
    count = 0
    d = diag[0] - x
    if d == 0.0:
        d = -_TINY * scale
    if d < 0:
        count += 1
    for i in range(1, len(diag)):
        d = (diag[i] - x) - off[i - 1] * off[i - 1] / d
        if d == 0.0:
            d = -_TINY * scale
        if d < 0:
            count += 1
    return count


def gershgorin_bounds(diag, off):
    lo = hi = diag[0]
    for i in range(len(diag)):
        r = (abs(off[i - 1]) if i > 0 else 0.0) + (abs(off[i]) if i < len(off) else 0.0)
        lo = min(lo, diag[i] - r)
        hi = max(hi, diag[i] + r)
    return lo, hi


def eigensolve_tridiagonal(T: StructuredMatrix, backend: Backend):
    """All eigenvalues of a symmetric tridiagonal matrix, ascending, each
    bisected on the Sturm count to width <= root_tol."""
    if backend.exact:
        raise BackendUnsupported("eigensolver needs the floating backend")
    diag, off = _extract_tridiagonal(T, backend.policy)
    n = len(diag)
    glo, ghi = gershgorin_bounds(diag, off)
    glo -= backend.policy.root_tol
    ghi += backend.policy.root_tol
    tol = backend.policy.root_tol
    out = []
    for k in range(1, n + 1):
        lo, hi = glo, ghi
        for _ in range(BISECT_MAX_ITER):
            mid = 0.5 * (lo + hi)
            if hi - lo <= tol or mid == lo or mid == hi:
                break
            if sturm_count(diag, off, mid) >= k:
                hi = mid
            else:
                lo = mid
        out.append(0.5 * (lo + hi))
    return tuple(out)


def interlaces(inner, outer) -> bool:
    """Strict interlacing: outer_1 < inner_1 < outer_2 < ... < outer_{k+1}."""
    if len(outer) != len(inner) + 1:
        raise SizeMismatch(f"{len(inner)} inner vs {len(outer)} outer")
    for k in range(len(inner)):
        if not (outer[k] < inner[k] < outer[k + 1]):
            return False
    return True


def signature_sequence(n: int):
    """The pattern 1, -1, -1, 1, 1, ...: epsilon_j = (-1)**(j//2)."""
    return tuple((-1) ** (j // 2) for j in range(1, n + 1))


@dataclass(frozen=True)
class OrderVerdict:
    order: int
    conforming: bool
    strict: bool
    principal_conforming: bool
    witness_value: object = None
    witness_rows: tuple | None = None
    witness_cols: tuple | None = None


@dataclass(frozen=True)
class SignRegularityReport:
    n: int
    verdicts: tuple
    achieved_class: int
    strict: bool

    @property
    def all_conforming(self) -> bool:
        return all(v.conforming for v in self.verdicts)

    @property
    def principal_conforming(self) -> bool:
        return all(v.principal_conforming for v in self.verdicts)


def _enum_guard(n: int, d: int):
    total = sum(comb(n, j) ** 2 for j in range(1, d + 1))
    if total > MINOR_ENUM_GUARD:
        raise TooLarge(f"{total} minors exceed the enumeration guard")


def _order_scale(M: StructuredMatrix, j: int, backend: Backend) -> float:
    if backend.exact:
        return 0.0
    norms = sorted((float(x) for x in M.row_norms()), reverse=True)
    s = 1.0
    for v in norms[:j]:
        s *= max(v, 1.0)
    return s


def classify_sign_regular(
    M: StructuredMatrix, d: int, sig, backend: Backend
) -> SignRegularityReport:
    """Exhaustive minor check of sign regularity up to order d.

    Every minor of order j must have sign sig[j-1] or vanish; the
    principal-minors-only verdict is reported alongside.  Floating backend uses
    a tolerance scaled by the product of the j largest row norms.
    """
    n = M.n
    if d > n or len(sig) < d:
        raise SizeMismatch("need d <= n and a signature of length >= d")
    _enum_guard(n, d)
    verdicts = []
    for j in range(1, d + 1):
        eps = sig[j - 1]
        tol = backend.policy.eq_abs * _order_scale(M, j, backend)
        conforming = strict = principal = True
        worst = None
        for rows in combinations(range(1, n + 1), j):
            for cols in combinations(range(1, n + 1), j):
                v = eps * minor(M, rows, cols, backend)
                if v <= tol:
                    strict = False
                if v < -tol:
                    conforming = False
                    if rows == cols:
                        principal = False
                    if worst is None or v < worst[0]:
                        worst = (v, rows, cols)
        verdicts.append(
            OrderVerdict(
                j,
                conforming,
                strict,
                principal,
                witness_value=None if worst is None else worst[0] * eps,
                witness_rows=None if worst is None else worst[1],
                witness_cols=None if worst is None else worst[2],
            )
        )
    achieved = 0
    for v in verdicts:
        if not v.conforming:
            break
        achieved = v.order
    return SignRegularityReport(n, tuple(verdicts), achieved, all(v.strict for v in verdicts))


def totally_positive(M: StructuredMatrix, backend: Backend) -> bool:
    """All minors of all orders strictly positive."""
    n = M.n
    _enum_guard(n, n)
    for j in range(1, n + 1):
        tol = backend.policy.eq_abs * _order_scale(M, j, backend)
        for rows in combinations(range(1, n + 1), j):
            for cols in combinations(range(1, n + 1), j):
                if minor(M, rows, cols, backend) <= tol:
                    return False
    return True


def check_class_plus(A: StructuredMatrix, max_power: int, backend: Backend):
    """Smallest m <= max_power with (A^2)^m totally positive, else None."""
    if max_power < 1:
        return None
    S = matmul(A, A, backend)
    P = S
    for m in range(1, max_power + 1):
        if totally_positive(P, backend):
            return m
        P = matmul(P, S, backend)
    return None


def cauchy_binet_check(
    X: StructuredMatrix, Y: StructuredMatrix, rows, cols, backend: Backend
):
    """Minor of the product vs the sum over column-set products of minors."""
    if X.n != Y.n:
        raise SizeMismatch("factor dimensions differ")
    rows = check_index_set(rows, X.n)
    cols = check_index_set(cols, X.n)
    if len(rows) != len(cols):
        raise SizeMismatch("index set sizes differ")
    k = len(rows)
    if comb(X.n, k) * k**3 > MINOR_ENUM_GUARD:
        raise TooLarge("expansion too large")
    lhs = minor(matmul(X, Y, backend), rows, cols, backend)
    rhs = backend.zero
    for beta in combinations(range(1, X.n + 1), k):
        rhs = rhs + minor(X, rows, beta, backend) * minor(Y, beta, cols, backend)
    return lhs, rhs, backend.approx_equal(lhs, rhs)
