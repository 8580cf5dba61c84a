"""Exact convolution engines and the truncated-power-series oracle.

Two kernels: plain (OGF) convolution, where a product of ordinary
generating functions sums products over compositions, and multinomial
(EGF) convolution, where the multinomial coefficient appears because
exponential generating functions multiply that way.  Both are computed by
iterated pairwise convolution in O(r * n^2) big-integer multiplications;
the direct composition enumerators are retained as small-n oracles.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, prod
from typing import Iterator, Sequence


class IndexTooSmall(ValueError):
    """An identity was evaluated below its smallest valid index."""


class ConstantSeq:
    """Constant sequence c, c, c, ...; covers the e^x factor (all ones)."""

    def __init__(self, value=1):
        self._value = value

    def term(self, k: int):
        return self._value


class WeightedSeq:
    """A term source with a geometric weight: term k contributes base^k * seq(k).

    base may be negative, which covers (-1)^k sign factors.  Any object
    with a ``term(k)`` method works as the source (TriboSeq, ConstantSeq).
    """

    def __init__(self, seq, base: int = 1):
        self.seq = seq
        self.base = base

    def term(self, k: int):
        return self.base**k * self.seq.term(k)

    def prefix(self, count: int) -> list:
        out = []
        power = 1
        for k in range(count):
            out.append(power * self.seq.term(k))
            power *= self.base
        return out


def _as_prefix(s, count: int) -> list:
    if isinstance(s, WeightedSeq):
        return s.prefix(count)
    if isinstance(s, (list, tuple)):
        return list(s[:count])
    return [s.term(k) for k in range(count)]


def cauchy_convolve(f: Sequence, g: Sequence) -> list:
    """(f*g)_n = sum_k f_k g_{n-k}, on the common prefix."""
    n = min(len(f), len(g))
    return [sum(f[j] * g[k - j] for j in range(k + 1)) for k in range(n)]


def binomial_convolve(f: Sequence, g: Sequence) -> list:
    """(f#g)_n = sum_k C(n,k) f_k g_{n-k}, on the common prefix."""
    n = min(len(f), len(g))
    return [sum(comb(k, j) * f[j] * g[k - j] for j in range(k + 1)) for k in range(n)]


def plain_conv_prefix(seqs: Sequence, n_max: int) -> list:
    """Values of the r-fold plain convolution for n = 0..n_max."""
    if not seqs:
        raise ValueError("need at least one sequence")
    acc = _as_prefix(seqs[0], n_max + 1)
    for s in seqs[1:]:
        acc = cauchy_convolve(acc, _as_prefix(s, n_max + 1))
    return acc


def plain_conv(seqs: Sequence, n: int):
    """Sum over compositions k_1+...+k_r = n of the product of weighted terms."""
    if n < 0:
        raise IndexTooSmall("n must be nonnegative")
    return plain_conv_prefix(seqs, n)[n]


def multinomial_conv_prefix(seqs: Sequence, n_max: int) -> list:
    """Values of the r-fold multinomial convolution for n = 0..n_max."""
    if not seqs:
        raise ValueError("need at least one sequence")
    acc = _as_prefix(seqs[0], n_max + 1)
    for s in seqs[1:]:
        acc = binomial_convolve(acc, _as_prefix(s, n_max + 1))
    return acc


def multinomial_conv(seqs: Sequence, n: int):
    """Sum over compositions of multinomial(n; k_1..k_r) times the product
    of weighted terms."""
    if n < 0:
        raise IndexTooSmall("n must be nonnegative")
    return multinomial_conv_prefix(seqs, n)[n]


def compositions(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """All ordered r-tuples of nonnegative integers summing to n."""
    if r == 1:
        yield (n,)
        return
    for head in range(n + 1):
        for rest in compositions(n - head, r - 1):
            yield (head,) + rest


def plain_conv_enum(seqs: Sequence, n: int):
    """Brute-force composition enumeration; oracle for plain_conv."""
    return sum(
        prod(_term(s, k) for s, k in zip(seqs, parts))
        for parts in compositions(n, len(seqs))
    )


def multinomial_conv_enum(seqs: Sequence, n: int):
    """Brute-force enumeration with explicit multinomial coefficients;
    oracle for multinomial_conv."""
    total = 0
    n_fact = factorial(n)
    for parts in compositions(n, len(seqs)):
        coef = n_fact
        for k in parts:
            coef //= factorial(k)
        total += coef * prod(_term(s, k) for s, k in zip(seqs, parts))
    return total


def _term(s, k: int):
    if isinstance(s, (list, tuple)):
        return s[k]
    return s.term(k)


# -- the two closed-form pair convolutions -------------------------------

def _tribo_prefix(count: int) -> list[int]:
    t = [0, 1, 1]
    while len(t) < count:
        t.append(t[-1] + t[-2] + t[-3])
    return t[:count]


def prop1_lhs(n: int) -> int:
    """sum_{k=0}^{n-3} T_k (T_{n-k} + T_{n-k-2} + 2 T_{n-k-3}), n >= 3."""
    if n < 3:
        raise IndexTooSmall("defined for n >= 3")
    t = _tribo_prefix(n + 1)
    return sum(t[k] * (t[n - k] + t[n - k - 2] + 2 * t[n - k - 3]) for k in range(n - 2))


def prop2_rhs(n: int) -> int:
    """The weighted single-sequence sum equal to sum_k T_k T_{n-k}, n >= 2.

    The inner weight as printed raises (-1) to possibly half-integer
    powers; the adopted reading is i^m + i^(3m) with m = n - l - i - 1,
    which vanishes for odd m and equals 2*(-1)^(m/2) for even m.  With the
    printed 2^(i-1) prefactor the surviving weight is
    2^i * (-1)^(m/2) * C(m/2, i).  This is the only reading that keeps
    every term rational; it is validated against the brute-force pair
    convolution in the identity catalog.
    """
    if n < 2:
        raise IndexTooSmall("defined for n >= 2")
    t = _tribo_prefix(n + 1)
    total = 0
    for l in range(1, n):
        weight = 0
        for i in range((n - l - 1) // 3 + 1):
            m = n - l - i - 1
            if m % 2 == 0:
                weight += 2**i * (-1) ** (m // 2) * comb(m // 2, i)
        total += weight * l * t[l]
    return total


# -- truncated power series over Q ---------------------------------------

class TruncSeries:
    """A power series modulo x^(order+1) with exact Fraction coefficients."""

    def __init__(self, coeffs: Sequence, order: int | None = None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncSeries) and self.coeffs == other.coeffs

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.coeffs, order)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        return TruncSeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        return TruncSeries([self.coeffs[k] - other.coeffs[k] for k in range(n + 1)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncSeries([c * other for c in self.coeffs])
        n = min(self.order, other.order)
        return TruncSeries(
            [
                sum(self.coeffs[j] * other.coeffs[k - j] for j in range(k + 1))
                for k in range(n + 1)
            ]
        )

    __rmul__ = __mul__

    def derivative(self) -> "TruncSeries":
        if self.order == 0:
            return TruncSeries([Fraction(0)])
        return TruncSeries([k * self.coeffs[k] for k in range(1, self.order + 1)])

    def shift(self, by: int, order: int) -> "TruncSeries":
        """Multiply by x^by, truncating to the given order."""
        return TruncSeries([Fraction(0)] * by + self.coeffs, order)

    def reciprocal(self) -> "TruncSeries":
        """Series inverse; requires a unit (nonzero) constant term."""
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("constant term is zero")
        inv0 = Fraction(1) / a[0]
        out = [inv0]
        for k in range(1, self.order + 1):
            out.append(-inv0 * sum(a[j] * out[k - j] for j in range(1, k + 1)))
        return TruncSeries(out)

    def __repr__(self) -> str:
        return f"TruncSeries({self.coeffs!r})"


def _poly(coeffs: Sequence, order: int) -> TruncSeries:
    return TruncSeries(list(coeffs), order)


def series_T(order: int) -> TruncSeries:
    """x / (1 - x - x^2 - x^3) modulo x^(order+1), by exact series division;
    its coefficients are the ordinary Tribonacci numbers."""
    denom = _poly([1, -1, -1, -1], order)
    return _poly([0, 1], order) * denom.reciprocal()


def series_check_derivatives(order: int) -> bool:
    """Verify the two quoted derivative relations of the Tribonacci OGF up
    to the given truncation order:

    (i)  T'(x) = (1 + x^2 + 2x^3) / (1 - x - x^2 - x^3)^2
    (ii) (2 + 6x + 12x^2 + 6x^4 + 6x^5) * T(x)^3 = x^3 * T''(x)
    """
    if order < 6:
        raise ValueError("order must be at least 6")
    t = series_T(order)
    denom = _poly([1, -1, -1, -1], order)
    inv = denom.reciprocal()
    first = _poly([1, 0, 1, 2], order) * inv * inv
    if t.derivative() != first.truncate(order - 1):
        return False
    lhs = _poly([2, 6, 12, 0, 6, 6], order) * t * t * t
    rhs = t.derivative().derivative().shift(3, order)
    return lhs == rhs
