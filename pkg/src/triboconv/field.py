"""Exact arithmetic in K = Q[x]/(x^3 - x^2 - x - 1).

The minimal polynomial x^3 - x^2 - x - 1 is irreducible over Q with one
real root (1.8392...) and a complex-conjugate pair.  An element is stored
reduced in the power basis (1, x, x^2) with Fraction coefficients, so
equality is plain coefficient comparison.  Its three embeddings come from
evaluating the lift at the three roots; trace and norm of any element are
rational and are computed without ever constructing the roots.

Floating point appears only in :func:`float_embeddings`, which is a
display helper and is never consumed by verification logic.  The certified
:func:`sign_at_real_root` uses rational interval bisection instead.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Rational = Fraction

#: Coefficients (c0, c1, c2, c3) of the minimal polynomial x^3 - x^2 - x - 1.
MIN_POLY = (Fraction(-1), Fraction(-1), Fraction(-1), Fraction(1))

#: Power sums p_k of the three roots for k = 0, 1, 2 (Newton's identities
#: from e1 = 1, e2 = -1, e3 = 1); enough to evaluate any trace.
_POWER_SUMS = (Fraction(3), Fraction(1), Fraction(3))


class FieldError(ArithmeticError):
    """Base class for errors raised by the field module."""


class ZeroElement(FieldError):
    """Inversion of the zero element was requested."""


class ZeroAtRoot(FieldError):
    """A sign or normalization query was made for an element vanishing at
    the real root (equivalently, for the zero element: the minimal
    polynomial is irreducible, so no nonzero reduced element vanishes
    there)."""


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected int or Fraction, got {type(v).__name__}")


@dataclass(frozen=True)
class FieldElement:
    """a0 + a1*x + a2*x^2 modulo x^3 - x^2 - x - 1, coefficients exact.

    Instances are immutable and hashable; all operators return new
    elements, so values are safe to share between threads.
    """

    a0: Fraction
    a1: Fraction
    a2: Fraction

    def __init__(self, a0=0, a1=0, a2=0):
        object.__setattr__(self, "a0", _frac(a0))
        object.__setattr__(self, "a1", _frac(a1))
        object.__setattr__(self, "a2", _frac(a2))

    @classmethod
    def constant(cls, value) -> "FieldElement":
        return cls(_frac(value), 0, 0)

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a0, self.a1, self.a2)

    def is_zero(self) -> bool:
        return not (self.a0 or self.a1 or self.a2)

    def lift(self) -> list[Fraction]:
        """Coefficients of the degree <= 2 lift, trailing zeros dropped."""
        out = [self.a0, self.a1, self.a2]
        while out and out[-1] == 0:
            out.pop()
        return out

    # -- ring operators -------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.a0 + other.a0, self.a1 + other.a1, self.a2 + other.a2)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return FieldElement(-self.a0, -self.a1, -self.a2)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            k = _frac(other)
            return FieldElement(k * self.a0, k * self.a1, k * self.a2)
        if not isinstance(other, FieldElement):
            return NotImplemented
        a0, a1, a2 = self.coeffs
        b0, b1, b2 = other.coeffs
        # plain polynomial product, then x^3 -> x^2+x+1 and x^4 -> 2x^2+2x+1
        c0 = a0 * b0
        c1 = a0 * b1 + a1 * b0
        c2 = a0 * b2 + a1 * b1 + a2 * b0
        c3 = a1 * b2 + a2 * b1
        c4 = a2 * b2
        return FieldElement(c0 + c3 + c4, c1 + c3 + 2 * c4, c2 + c3 + 2 * c4)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "FieldElement":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return inverse(self) ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self) -> str:
        parts = []
        for coef, mon in zip(self.coeffs, ("", "*x", "*x^2")):
            if coef:
                parts.append(f"{coef}{mon}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _coerce(v):
    if isinstance(v, FieldElement):
        return v
    if isinstance(v, (int, Fraction)):
        return FieldElement.constant(v)
    return NotImplemented


ZERO = FieldElement(0, 0, 0)
ONE = FieldElement(1, 0, 0)
X = FieldElement(0, 1, 0)


def add(p: FieldElement, q: FieldElement) -> FieldElement:
    """Coefficientwise exact sum in canonical form."""
    return p + q


def mul(p: FieldElement, q: FieldElement) -> FieldElement:
    """Product reduced by the minimal polynomial, canonical form."""
    return p * q


def _mult_matrix(q: FieldElement) -> list[list[Fraction]]:
    """Matrix of multiplication by q in the basis (1, x, x^2); columns are
    the coefficient vectors of q, q*x, q*x^2."""
    a0, a1, a2 = q.coeffs
    return [
        [a0, a2, a1 + a2],
        [a1, a0 + a2, a1 + 2 * a2],
        [a2, a1 + a2, a0 + a1 + 2 * a2],
    ]


def _det(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant by Gaussian elimination with Fraction pivots."""
    m = [row[:] for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def inverse(q: FieldElement) -> FieldElement:
    """Multiplicative inverse, by solving the 3x3 rational linear system
    (multiplication matrix of q applied to the unknown equals 1).

    Raises ZeroElement for q = 0.
    """
    if q.is_zero():
        raise ZeroElement("cannot invert the zero element")
    m = _mult_matrix(q)
    d = _det(m)
    # d = norm(q), nonzero for q != 0 because K is a field
    coeffs = []
    for i in range(3):
        mi = [row[:] for row in m]
        for r in range(3):
            mi[r][i] = Fraction(1) if r == 0 else Fraction(0)
        coeffs.append(_det(mi) / d)
    return FieldElement(*coeffs)


def trace(q: FieldElement) -> Fraction:
    """Sum of the three embeddings, q(alpha) + q(beta) + q(gamma)."""
    p0, p1, p2 = _POWER_SUMS
    return p0 * q.a0 + p1 * q.a1 + p2 * q.a2


def norm(q: FieldElement) -> Fraction:
    """Product of the three embeddings, computed as the resultant of the
    minimal polynomial with q's lift (normalized so norm(constant k) = k^3).
    """
    lift = q.lift()
    if not lift:
        return Fraction(0)
    d = len(lift) - 1
    if d == 0:
        return lift[0] ** 3
    # Sylvester matrix of (min poly, lift): d rows of the monic cubic, then
    # 3 rows of the lift, both in descending-degree order.
    f = list(reversed(MIN_POLY))
    g = list(reversed(lift))
    size = 3 + d
    rows = []
    for i in range(d):
        rows.append([Fraction(0)] * i + f + [Fraction(0)] * (size - 4 - i))
    for j in range(3):
        rows.append([Fraction(0)] * j + g + [Fraction(0)] * (size - d - 1 - j))
    return _det(rows)


def norm_via_multiplication_matrix(q: FieldElement) -> Fraction:
    """Independent route to the norm: determinant of the multiplication
    matrix.  Kept as a cross-check against the resultant route."""
    return _det(_mult_matrix(q))


@lru_cache(maxsize=1)
def c_element() -> FieldElement:
    """The element 1/(-1 + 4x - x^2); its embeddings are the Binet
    coefficients of the ordinary Tribonacci numbers."""
    return inverse(FieldElement(-1, 4, -1))


@lru_cache(maxsize=1)
def cofactor_element() -> FieldElement:
    """(1/44)*(-1 + 4x - x^2); at each root its embedding is the product
    of the other two Binet coefficients."""
    return Fraction(1, 44) * FieldElement(-1, 4, -1)


# -- certified sign at the real root ------------------------------------

@dataclass(frozen=True)
class RootInterval:
    """Rational bracket (lower, upper) around the real root; the minimal
    polynomial changes sign across it."""

    lower: Fraction
    upper: Fraction

    def width(self) -> Fraction:
        return self.upper - self.lower

    def bisect(self, steps: int) -> "RootInterval":
        lo, hi = self.lower, self.upper
        for _ in range(steps):
            mid = (lo + hi) / 2
            if _min_poly_at(mid) < 0:
                lo = mid
            else:
                hi = mid
        return RootInterval(lo, hi)


def _min_poly_at(v: Fraction) -> Fraction:
    return ((v - 1) * v - 1) * v - 1


#: Initial bracket around 1.8392...; the minimal polynomial is negative at
#: 11/6 and positive at 15/8.
REAL_ROOT_BRACKET = RootInterval(Fraction(11, 6), Fraction(15, 8))


def _poly_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Remainder of a by b over Q (b nonzero, lists of coefficients)."""
    r = a[:]
    while len(r) >= len(b) and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(b):
            break
        factor = r[-1] / b[-1]
        shift = len(r) - len(b)
        for i, coef in enumerate(b):
            r[shift + i] -= factor * coef
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return r


def _vanishes_at_root(q: FieldElement) -> bool:
    """Exact zero test for q(alpha) via polynomial gcd of the lift with the
    minimal polynomial.  The minimal polynomial is irreducible over Q, so
    the gcd is nontrivial exactly when q = 0."""
    lift = q.lift()
    if not lift:
        return True
    a, b = list(MIN_POLY), lift
    while b:
        a, b = b, _poly_mod(a, b)
    return len(a) > 1


def _interval_eval(coeffs: list[Fraction], iv: RootInterval) -> tuple[Fraction, Fraction]:
    """Interval extension of a polynomial over [lower, upper] by Horner."""
    lo = hi = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        candidates = (lo * iv.lower, lo * iv.upper, hi * iv.lower, hi * iv.upper)
        lo, hi = min(candidates) + c, max(candidates) + c
    return lo, hi


def sign_at_real_root(q: FieldElement) -> int:
    """Exact sign of q(alpha), certified by interval bisection.

    The bracket around the root is refined (with doubling depth) until the
    interval evaluation of q excludes zero; termination is guaranteed
    because q(alpha) != 0 is established exactly first.

    Raises ZeroAtRoot when q(alpha) = 0 (equivalently q = 0).
    """
    if _vanishes_at_root(q):
        raise ZeroAtRoot("element vanishes at the real root")
    lift = q.lift()
    iv = REAL_ROOT_BRACKET
    depth = 8
    while True:
        iv = iv.bisect(depth)
        lo, hi = _interval_eval(lift, iv)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        depth *= 2


@lru_cache(maxsize=1)
def _float_roots() -> tuple[complex, complex, complex]:
    iv = REAL_ROOT_BRACKET.bisect(64)
    alpha = float((iv.lower + iv.upper) / 2)
    # remaining quadratic factor x^2 + (alpha-1)x + (alpha^2-alpha-1)
    disc = cmath.sqrt(complex(-3 * alpha * alpha + 2 * alpha + 5))
    beta = ((1 - alpha) + disc) / 2
    return (complex(alpha), beta, beta.conjugate())


def float_embeddings(q: FieldElement) -> tuple[complex, complex, complex]:
    """Display-only approximations of q at the real root and the conjugate
    pair.  Never used on verification paths."""
    def at(r: complex) -> complex:
        return complex(q.a0) + complex(q.a1) * r + complex(q.a2) * r * r

    alpha, beta, gamma = _float_roots()
    return (at(alpha), at(beta), at(gamma))
