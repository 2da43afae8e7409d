"""Monic polynomials: construction from roots, symmetric functions, parity,
and bracketed bisection root extraction.

Coefficients are stored dense, constant term first.  Degrees in this package
stay small (a few dozen), so no sparse or FFT machinery is warranted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BackendUnsupported, DuplicateRoots, IndexOutOfRange, NoSignChange
from .scalars import Backend

BISECT_MAX_ITER = 200

EVEN = "even"
ODD = "odd"


@dataclass(frozen=True)
class MonicPoly:
    """Dense monic polynomial; ``coeffs[k]`` multiplies x**k, leading term 1.

    ``parity`` is metadata: "even" forces odd-index coefficients to zero,
    "odd" the even-index ones, None imposes nothing.
    """

    coeffs: tuple
    parity: str | None = None

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("empty coefficient list")
        if self.coeffs[-1] != 1:
            raise ValueError("leading coefficient must be exactly 1")
        if self.parity not in (None, EVEN, ODD):
            raise ValueError(f"bad parity tag {self.parity!r}")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def from_roots(roots, backend: Backend) -> MonicPoly:
    """Monic polynomial with the given simple roots (empty product is 1).

    Floating backend rejects roots closer than 10*root_tol; the rational
    backend rejects exact duplicates.
    """
    roots = [backend.convert(r) for r in roots]
    sep = 0 if backend.exact else 10 * backend.policy.root_tol
    for r, s in combinations(roots, 2):
        if abs(r - s) <= sep:
            raise DuplicateRoots(f"roots {r} and {s} are not separated")
    coeffs = [backend.one]
    for r in roots:
        # multiply by (x - r)
        nxt = [backend.zero] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] += c
            nxt[k] -= r * c
        coeffs = nxt
    return MonicPoly(tuple(coeffs))


def elementary_symmetric(roots, j: int):
    """j-th elementary symmetric function of the tuple; sigma_0 = 1."""
    roots = tuple(roots)
    if j < 0 or j > len(roots):
        raise IndexOutOfRange(f"sigma_{j} of a {len(roots)}-tuple")
    # Newton-free DP over the defining product; exact for exact scalars.
    e = [1] + [0] * j
    for r in roots:
        for k in range(min(j, len(e) - 1), 0, -1):
            e[k] = e[k] + r * e[k - 1]
    return e[j]


def reflect_negate(p: MonicPoly) -> MonicPoly:
    """(-1)**deg * p(-x): the monic polynomial whose roots are negated."""
    n = p.degree
    coeffs = tuple(c if (n - k) % 2 == 0 else -c for k, c in enumerate(p.coeffs))
    return MonicPoly(coeffs, p.parity)


def poly_eval(p: MonicPoly, x):
    """Horner evaluation."""
    acc = p.coeffs[-1]
    for c in reversed(p.coeffs[:-1]):
        acc = acc * x + c
    return acc


def with_parity(p: MonicPoly, parity: str, backend: Backend) -> MonicPoly:
    """Tag and enforce parity by zeroing the forbidden coefficients.

    The forbidden coefficients are analytically zero; in floats this stops
    roundoff from leaking into later steps, in the exact backend a nonzero
    forbidden coefficient is an internal error.
    """
    forbidden = 1 if parity == EVEN else 0
    coeffs = list(p.coeffs)
    for k in range(len(coeffs)):
        if k % 2 == forbidden and coeffs[k] != 0:
            if backend.exact:
                raise ArithmeticError(
                    f"parity-forbidden coefficient {k} is {coeffs[k]} != 0"
                )
            coeffs[k] = backend.zero
    return MonicPoly(tuple(coeffs), parity)


def parity_of_degree(k: int) -> str:
    return EVEN if k % 2 == 0 else ODD


def roots_bracketed(p: MonicPoly, brackets, backend: Backend):
    """One bisection root per sign-change bracket, ascending, width <= root_tol."""
    if backend.exact:
        raise BackendUnsupported("bracketed root extraction needs the floating backend")
    tol = backend.policy.root_tol
    out = []
    for lo, hi in brackets:
        if lo > hi:
            lo, hi = hi, lo
        flo = poly_eval(p, lo)
        fhi = poly_eval(p, hi)
        if flo == 0.0:
            out.append(lo)
            continue
        if fhi == 0.0:
            out.append(hi)
            continue
        if (flo > 0) == (fhi > 0):
            raise NoSignChange(f"no sign change on [{lo}, {hi}]")
        for _ in range(BISECT_MAX_ITER):
            mid = 0.5 * (lo + hi)
            if hi - lo <= tol or mid == lo or mid == hi:
                break
            fm = poly_eval(p, mid)
            if fm == 0.0:
                lo = hi = mid
                break
            if (fm > 0) == (flo > 0):
                lo, flo = mid, fm
            else:
                hi = mid
        out.append(0.5 * (lo + hi))
    return tuple(sorted(out))


# --- raw coefficient helpers shared by the recurrence and solver modules ---


def shift_up(coeffs):
    """Multiply by x."""
    return (coeffs[0] * 0,) + tuple(coeffs)


def lin_comb(c1, c2, s):
    """c1 + s*c2, aligning lengths (shorter padded with zeros)."""
    n = max(len(c1), len(c2))
    z = c1[0] * 0
    out = []
    for k in range(n):
        a = c1[k] if k < len(c1) else z
        b = c2[k] if k < len(c2) else z
        out.append(a + s * b)
    return tuple(out)
