"""Generalized Tribonacci sequences and canonical EGF normalization.

A field element q packages three per-root coefficients; the rational
numbers trace(x^k * q) then obey the Tribonacci recurrence in k.  This
module turns such an element into the canonical presentation used
throughout the identity catalog: a scale A and a primitive integer triple
(s0, s1, s2) with trace(x^k q) = T_k^(s0,s1,s2) / A, the sign of A fixed
so that A * q(alpha) > 0.  That sign rule makes the integer sequence
eventually positive (its dominant-root coefficient is positive), which
pins down the otherwise ambiguous choice of sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .field import FieldElement, X, sign_at_real_root, trace

InitTriple = tuple[int, int, int]


class TriboSeq:
    """T(k) = T(k-1) + T(k-2) + T(k-3) from an arbitrary initial triple.

    Terms are memoized append-only, so materializing a prefix [0..n] costs
    O(n) big-integer additions and repeated queries are O(1).  Entries may
    be ints or Fractions.  The memo is mutated on demand: share instances
    across threads only for single-writer use, or hand each consumer its
    own clone (cloning is cheap).
    """

    def __init__(self, s0, s1, s2):
        self._memo = [s0, s1, s2]

    @classmethod
    def ordinary(cls) -> "TriboSeq":
        """The ordinary Tribonacci numbers 0, 1, 1, 2, 4, 7, 13, ..."""
        return cls(0, 1, 1)

    @property
    def triple(self) -> tuple:
        return tuple(self._memo[:3])

    def term(self, k: int):
        if k < 0:
            raise IndexError("sequence indices start at 0")
        memo = self._memo
        while len(memo) <= k:
            memo.append(memo[-1] + memo[-2] + memo[-3])
        return memo[k]

    def terms(self, count: int) -> list:
        if count < 0:
            raise IndexError("count must be nonnegative")
        if count:
            self.term(count - 1)
        return self._memo[:count]

    def clone(self) -> "TriboSeq":
        fresh = TriboSeq(*self._memo[:3])
        fresh._memo = self._memo[:]
        return fresh

    def __repr__(self) -> str:
        return f"TriboSeq{self.triple}"


@dataclass(frozen=True)
class ScaledSeq:
    """Canonical presentation (scale A, primitive integer triple) of an EGF
    combination: trace(x^k q) = T_k(triple) / scale for the source q.

    Every scale printed in the source tables is an integer; the scale is
    stored as a Fraction because rationally rescaled inputs legitimately
    produce non-integer scales (see ``integral``), and reports flag those.
    """

    scale: Fraction
    triple: InitTriple

    def sequence(self) -> TriboSeq:
        return TriboSeq(*self.triple)

    @property
    def integral(self) -> bool:
        return self.scale.denominator == 1

    def scale_str(self) -> str:
        return str(self.scale.numerator) if self.integral else str(self.scale)

    def __str__(self) -> str:
        return f"(A={self.scale_str()}, triple={self.triple})"


def egf_rational_term(q: FieldElement, k: int) -> Fraction:
    """trace(x^k * q), by iterating the recurrence on the trace triple.

    Never computed by repeated field multiplication: three traces seed the
    recurrence and the rest is rational addition.
    """
    if k < 0:
        raise IndexError("sequence indices start at 0")
    t0, t1, t2 = _trace_triple(q)
    if k == 0:
        return t0
    if k == 1:
        return t1
    for _ in range(k - 2):
        t0, t1, t2 = t1, t2, t0 + t1 + t2
    return t2


def egf_rational_terms(q: FieldElement, count: int) -> list[Fraction]:
    """Prefix [trace(q), trace(xq), ..., trace(x^(count-1) q)]."""
    t = list(_trace_triple(q))
    while len(t) < count:
        t.append(t[-1] + t[-2] + t[-3])
    return t[:count]


def _trace_triple(q: FieldElement) -> tuple[Fraction, Fraction, Fraction]:
    xq = X * q
    return (trace(q), trace(xq), trace(X * xq))


def normalize_egf(q: FieldElement) -> ScaledSeq:
    """Canonical (A, triple) with trace(x^j q) = s_j / A for j = 0, 1, 2.

    The triple is made primitive (gcd 1) and the common scale absorbs the
    denominators; the sign of A is chosen so A * q(alpha) > 0.  A triple of
    all zeros cannot occur for q != 0 because the trace pairing on K is
    nondegenerate, and the traces are always rational so there is no
    non-commensurate failure mode.

    Raises ZeroAtRoot for q = 0 (degenerate coefficient function).
    """
    sign = sign_at_real_root(q)  # raises ZeroAtRoot for q = 0
    t = _trace_triple(q)
    denom_lcm = lcm(t[0].denominator, t[1].denominator, t[2].denominator)
    ints = [int(v * denom_lcm) for v in t]
    content = gcd(*ints)
    triple = tuple(v // content for v in ints)
    scale = Fraction(denom_lcm, content)
    if sign < 0:
        scale = -scale
        triple = tuple(-v for v in triple)
    return ScaledSeq(scale, triple)


def binet_check(scaled: ScaledSeq, q: FieldElement, k_max: int) -> bool:
    """True iff T_k(triple) = scale * trace(x^k q) exactly for all k <= k_max."""
    seq = scaled.sequence()
    traces = egf_rational_terms(q, k_max + 1)
    return all(seq.term(k) == scaled.scale * traces[k] for k in range(k_max + 1))
