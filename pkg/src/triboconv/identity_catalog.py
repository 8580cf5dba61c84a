"""Registry binding every verified identity to exact evaluators and reports.

Each record evaluates its left and right side exactly (integers and
Fractions only) at every index of a configured range.  Scaled-sequence
identities are evaluated scale-free where possible: both sides reduce to
exact rationals, so the verdict does not depend on a presentation
convention.  Known-discrepancy records carry a printed claim that the
exact oracle contradicts; they report both evaluations, never fail the
suite on the printed side, and do fail if the oracle-corrected form
breaks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .convolution import (
    TruncSeries,
    WeightedSeq,
    multinomial_conv_prefix,
    plain_conv_prefix,
    prop1_lhs,
    prop2_rhs,
    series_T,
    series_check_derivatives,
)
from .derivation import (
    CPower,
    CofactorPower,
    PairSumSqPower,
    SumCofactorConst,
    SumCofactorSqConst,
    derive,
    family_element,
)
from .field import X, c_element, cofactor_element, norm, trace
from .sequences import ScaledSeq, TriboSeq, binet_check, egf_rational_terms

DEFAULT_RANGE_CAP = 2000
DEFAULT_SEED = 42


class CatalogError(Exception):
    pass


class UnknownIdentity(CatalogError):
    """The requested identity id is not registered."""


class RangeTooLarge(CatalogError):
    """A requested range exceeds the configured cap."""


@dataclass(frozen=True)
class Check:
    """Outcome of one exact comparison; lhs/rhs are decimal-free strings."""

    index: str
    ok: bool
    lhs: str
    rhs: str


def _check(index: str, lhs, rhs) -> Check:
    return Check(index, lhs == rhs, str(lhs), str(rhs))


@dataclass
class RunOutcome:
    checks: list[Check] = field(default_factory=list)
    mismatches: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    params_used: list[dict[str, str]] = field(default_factory=list)


@dataclass(frozen=True)
class RangeSpec:
    name: str
    lo: int
    hi: int


@dataclass
class RunContext:
    ranges: dict[str, tuple[int, int]]
    rng: random.Random
    params_override: object = None

    def span(self, name: str) -> range:
        lo, hi = self.ranges[name]
        return range(lo, hi + 1)

    def hi(self, name: str) -> int:
        return self.ranges[name][1]


@dataclass
class VerifyReport:
    """Exact verification record for one identity.

    Holds the per-index statuses, the first failure with both side values
    as exact strings, the parameter assignment and oracle notes.  Nothing
    in a report is ever a float.
    """

    id: str
    label: str
    range_desc: str
    params: list[dict[str, str]]
    expectation: str
    checks: list[Check]
    mismatches: list[Check]
    notes: str

    @property
    def status(self) -> str:
        if not self.checks and not self.mismatches:
            return "vacuous"
        if any(not c.ok for c in self.checks):
            return "fail"
        if self.expectation == "known-discrepancy" and any(not c.ok for c in self.mismatches):
            return "known-discrepancy"
        return "pass"

    @property
    def first_failure(self) -> Check | None:
        for c in self.checks:
            if not c.ok:
                return c
        for c in self.mismatches:
            if not c.ok:
                return c
        return None

    def to_dict(self) -> dict:
        ff = self.first_failure
        return {
            "id": self.id,
            "paper_label": self.label,
            "range": self.range_desc,
            "params": self.params,
            "status": self.status,
            "first_failure": None if ff is None else {"index": ff.index, "lhs": ff.lhs, "rhs": ff.rhs},
            "notes": self.notes,
        }


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    label: str
    ranges: tuple[RangeSpec, ...]
    runner: Callable[[RunContext], RunOutcome]
    expectation: str = "expected-pass"


def _fstr(v) -> str:
    return str(Fraction(v))


def _draw_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-5, 5), rng.randint(1, 4))


def _ordinary(count: int) -> list[int]:
    return TriboSeq.ordinary().terms(count)


def _prefix(triple: tuple[int, int, int], base: int, count: int) -> list[int]:
    return WeightedSeq(TriboSeq(*triple), base).prefix(count)


# -- runners ---------------------------------------------------------------

def _run_p1(ctx: RunContext) -> RunOutcome:
    ns = list(ctx.span("n"))
    if not ns:
        return RunOutcome()
    t = TriboSeq.ordinary()
    checks = [
        _check(f"n={n}", prop1_lhs(n), (n - 2) * t.term(n - 1) - t.term(n - 2))
        for n in ns
    ]
    return RunOutcome(checks=checks)


def _run_p2(ctx: RunContext) -> RunOutcome:
    ns = list(ctx.span("n"))
    if not ns:
        return RunOutcome()
    t = _ordinary(ns[-1] + 1)
    brute = plain_conv_prefix([t, t], ns[-1])
    checks = [_check(f"n={n}", brute[n], prop2_rhs(n)) for n in ns]
    return RunOutcome(checks=checks)


def _run_t1(ctx: RunContext) -> RunOutcome:
    ns = list(ctx.span("n"))
    if not ns:
        return RunOutcome()
    hi = ns[-1]
    t = _ordinary(hi + 1)
    triple = plain_conv_prefix([t, t, t], hi)
    checks = []
    for n in ns:
        lhs = (n - 1) * (n - 2) * t[n - 1]
        rhs = (
            6 * triple[n - 5] + 6 * triple[n - 4] + 12 * triple[n - 2]
            + 6 * triple[n - 1] + 2 * triple[n]
        )
        checks.append(_check(f"n={n}", lhs, rhs))
    return RunOutcome(checks=checks)


def _run_constants(ctx: RunContext) -> RunOutcome:
    c = c_element()
    checks = [
        _check("trace(c)", trace(c), Fraction(0)),
        _check("trace(x*c)", trace(X * c), Fraction(1)),
        _check("trace(x^2*c)", trace(X * (X * c)), Fraction(1)),
        _check("norm(c)", norm(c), Fraction(1, 44)),
        _check("trace(cofactor)", trace(cofactor_element()), Fraction(-1, 22)),
    ]
    return RunOutcome(checks=checks)


def _make_lemma_runner(power: int, scale: int, triple: tuple[int, int, int]):
    printed = ScaledSeq(Fraction(scale), triple)

    def run(ctx: RunContext) -> RunOutcome:
        ks = list(ctx.span("k"))
        if not ks:
            return RunOutcome()
        elt = family_element(CPower(power))
        checks = [_check("derivation", derive(CPower(power)), printed)]
        seq = printed.sequence()
        traces = egf_rational_terms(elt, ks[-1] + 1)
        for k in ks:
            checks.append(_check(f"k={k}", Fraction(seq.term(k)), printed.scale * traces[k]))
        return RunOutcome(checks=checks)

    return run


def _run_p3(ctx: RunContext) -> RunOutcome:
    ns = list(ctx.span("n"))
    if not ns:
        return RunOutcome()
    hi = ns[-1]
    t = _ordinary(hi + 1)
    t2310 = TriboSeq(2, 3, 10).terms(hi + 1)
    lhs = multinomial_conv_prefix([t, t], hi)
    alt = multinomial_conv_prefix([_prefix((-1, 2, 7), -1, hi + 1), [1] * (hi + 1)], hi)
    checks = [
        _check(
            f"n={n}",
            Fraction(lhs[n]),
            Fraction(2**n * t2310[n] + 2 * alt[n], 22),
        )
        for n in ns
    ]
    return RunOutcome(checks=checks)


def _run_t2(ctx: RunContext) -> RunOutcome:
    from .symmetric_identities import SymParams3, coeffs3

    ns = list(ctx.span("n"))
    if not ns:
        return RunOutcome()
    hi = ns[-1]
    d_values = ctx.params_override
    if d_values is None:
        d_values = [Fraction(0), Fraction(1)]
    d_values = [Fraction(v) for v in d_values]
    t = _ordinary(hi + 1)
    t335 = TriboSeq(3, 3, 5).terms(hi + 1)
    lhs = multinomial_conv_prefix([t, t, t], hi)
    conv_c = multinomial_conv_prefix([_prefix((2, 3, 10), 2, hi + 1), t], hi)
    conv_d = multinomial_conv_prefix([_prefix((-1, 2, 7), -1, hi + 1), t, [1] * (hi + 1)], hi)
    checks, params_used = [], []
    for d in d_values:
        a, b, c = coeffs3(SymParams3(d))
        params_used.append({"D": _fstr(d)})
        for n in ns:
            rhs = (
                a * 3**n * t335[n] / 44 + b / 44
                + c * conv_c[n] / 22 + d * conv_d[n] / 22
            )
            checks.append(_check(f"D={_fstr(d)},n={n}", Fraction(lhs[n]), rhs))
    return RunOutcome(checks=checks, params_used=params_used)


def _run_t2r(ctx: RunContext) -> RunOutcome:
    ns = list(ctx.span("n"))
    if not ns:
        return RunOutcome()
    hi = ns[-1]
    t = _ordinary(hi + 1)
    t335 = TriboSeq(3, 3, 5).terms(hi + 1)
    lhs = multinomial_conv_prefix([t, t, t], hi)
    conv_c = multinomial_conv_prefix([_prefix((2, 3, 10), 2, hi + 1), t], hi)
    checks = [
        _check(
            f"n={n}",
            Fraction(lhs[n]),
            Fraction(3 * conv_c[n] - 3**n * t335[n] + 3, 22),
        )
        for n in ns
    ]
    return RunOutcome(checks=checks)


def _t3_tables(hi: int) -> dict[str, list]:
    t = _ordinary(hi + 1)
    ones = [1] * (hi + 1)
    w2310 = _prefix((2, 3, 10), 2, hi + 1)
    w127 = _prefix((-1, 2, 7), -1, hi + 1)
    w335 = _prefix((3, 3, 5), 3, hi + 1)
    return {
        "t21421": TriboSeq(2, 14, 21).terms(hi + 1),
        "lhs": multinomial_conv_prefix([t, t, t, t], hi),
        "C": multinomial_conv_prefix([w335, t], hi),
        "D": multinomial_conv_prefix([w2310, w2310], hi),
        "E": multinomial_conv_prefix([w127, w2310, ones], hi),
        "F": multinomial_conv_prefix([w127, w127, ones, ones], hi),
        "G": multinomial_conv_prefix([w2310, t, t], hi),
        "H": multinomial_conv_prefix([w127, t, t, ones], hi),
        "I": multinomial_conv_prefix([t, ones], hi),
    }


def _run_t3(ctx: RunContext) -> RunOutcome:
    from .symmetric_identities import SymParams4, coeffs4

    ns = list(ctx.span("n"))
    if not ns:
        return RunOutcome()
    tab = _t3_tables(ns[-1])
    points = ctx.params_override
    if points is None:
        points = [
            {"D": Fraction(3), "E": Fraction(0), "G": Fraction(0), "H": Fraction(0)},
            {k: _draw_fraction(ctx.rng) for k in ("D", "E", "G", "H")},
        ]
    checks, params_used = [], []
    for point in points:
        d, e, g, h = (Fraction(point[k]) for k in ("D", "E", "G", "H"))
        a, c, f, i = coeffs4(SymParams4(d, e, g, h))
        params_used.append({k: _fstr(point[k]) for k in ("D", "E", "G", "H")})
        tag = ",".join(f"{k}={_fstr(point[k])}" for k in ("D", "E", "G", "H"))
        for n in ns:
            rhs = (
                a * 4**n * tab["t21421"][n] / 484 + c * tab["C"][n] / 44
                + d * tab["D"][n] / 484 + e * tab["E"][n] / 484
                + f * tab["F"][n] / 484 + g * tab["G"][n] / 22
                + h * tab["H"][n] / 22 + i * tab["I"][n] / 44
            )
            checks.append(_check(f"{tag},n={n}", Fraction(tab["lhs"][n]), rhs))
    return RunOutcome(checks=checks, params_used=params_used)


def _run_t3r(ctx: RunContext) -> RunOutcome:
    ns = list(ctx.span("n"))
    if not ns:
        return RunOutcome()
    hi = ns[-1]
    t = _ordinary(hi + 1)
    ones = [1] * (hi + 1)
    t21421 = TriboSeq(2, 14, 21).terms(hi + 1)
    w2310 = _prefix((2, 3, 10), 2, hi + 1)
    lhs = multinomial_conv_prefix([t, t, t, t], hi)
    conv_d = multinomial_conv_prefix([w2310, w2310], hi)
    conv_i = multinomial_conv_prefix([t, ones], hi)
    conv_c = multinomial_conv_prefix([t, _prefix((3, 3, 5), 3, hi + 1)], hi)
    checks = [
        _check(
            f"n={n}",
            Fraction(lhs[n]),
            Fraction(3, 484) * (-2 * 4**n * t21421[n] + conv_d[n])
            + Fraction(3 * conv_i[n] + conv_c[n], 11),
        )
        for n in ns
    ]
    return RunOutcome(checks=checks)


_T4_NAMES = ("D", "I", "L", "N", "P", "Q", "R", "S")


def _t4_tables(hi: int) -> dict[str, list]:
    t = _ordinary(hi + 1)
    ones = [1] * (hi + 1)
    w2310 = _prefix((2, 3, 10), 2, hi + 1)
    w127 = _prefix((-1, 2, 7), -1, hi + 1)
    w335 = _prefix((3, 3, 5), 3, hi + 1)
    w21421 = _prefix((2, 14, 21), 4, hi + 1)
    return {
        "t5615": TriboSeq(5, 6, 15).terms(hi + 1),
        "lhs": multinomial_conv_prefix([t, t, t, t, t], hi),
        "B": multinomial_conv_prefix([w127, ones, ones], hi),
        "C": multinomial_conv_prefix([w2310, ones], hi),
        "D": multinomial_conv_prefix([t, t, ones], hi),
        "E": multinomial_conv_prefix([w21421, t], hi),
        "H": multinomial_conv_prefix([w335, w2310], hi),
        "I": multinomial_conv_prefix([w335, w127, ones], hi),
        "L": multinomial_conv_prefix([w335, t, t], hi),
        "N": multinomial_conv_prefix([w2310, w2310, t], hi),
        "P": multinomial_conv_prefix([w127, w127, t, ones, ones], hi),
        "Q": multinomial_conv_prefix([w2310, w127, t, ones], hi),
        "R": multinomial_conv_prefix([w2310, t, t, t], hi),
        "S": multinomial_conv_prefix([w127, t, t, t, ones], hi),
    }


def _run_t4(ctx: RunContext) -> RunOutcome:
    from .symmetric_identities import SymParams5, coeffs5

    ns = list(ctx.span("n"))
    if not ns:
        return RunOutcome()
    tab = _t4_tables(ns[-1])
    points = ctx.params_override
    if points is None:
        remark = {k: Fraction(0) for k in _T4_NAMES}
        remark["D"] = Fraction(15)
        points = [remark, {k: _draw_fraction(ctx.rng) for k in _T4_NAMES}]
    checks, params_used = [], []
    for point in points:
        vals = {k: Fraction(point[k]) for k in _T4_NAMES}
        a, b, c, e, h = coeffs5(SymParams5(*(vals[k] for k in _T4_NAMES)))
        params_used.append({k: _fstr(vals[k]) for k in _T4_NAMES})
        tag = ",".join(f"{k}={_fstr(vals[k])}" for k in _T4_NAMES)
        for n in ns:
            rhs = (
                a * 5**n * tab["t5615"][n] / 968 + b * tab["B"][n] / 968
                + c * tab["C"][n] / 968 + vals["D"] * tab["D"][n] / 44
                + e * tab["E"][n] / 484 + h * tab["H"][n] / 968
                + vals["I"] * tab["I"][n] / 968 + vals["L"] * tab["L"][n] / 44
                + vals["N"] * tab["N"][n] / 484 + vals["P"] * tab["P"][n] / 484
                + vals["Q"] * tab["Q"][n] / 484 + vals["R"] * tab["R"][n] / 22
                + vals["S"] * tab["S"][n] / 22
            )
            checks.append(_check(f"{tag},n={n}", Fraction(tab["lhs"][n]), rhs))
    return RunOutcome(checks=checks, params_used=params_used)


def _run_t4r(ctx: RunContext) -> RunOutcome:
    ns = list(ctx.span("n"))
    if not ns:
        return RunOutcome()
    hi = ns[-1]
    t = _ordinary(hi + 1)
    ones = [1] * (hi + 1)
    t5615 = TriboSeq(5, 6, 15).terms(hi + 1)
    w2310 = _prefix((2, 3, 10), 2, hi + 1)
    lhs = multinomial_conv_prefix([t, t, t, t, t], hi)
    conv_c = multinomial_conv_prefix([w2310, ones], hi)
    conv_h = multinomial_conv_prefix([w2310, _prefix((3, 3, 5), 3, hi + 1)], hi)
    conv_d = multinomial_conv_prefix([t, t, ones], hi)
    conv_e = multinomial_conv_prefix([_prefix((2, 14, 21), 4, hi + 1), t], hi)
    checks = [
        _check(
            f"n={n}",
            Fraction(lhs[n]),
            Fraction(-14 * 5**n * t5615[n] + 5 * (conv_c[n] + 2 * conv_h[n]), 968)
            + Fraction(15 * conv_d[n], 44) + Fraction(5 * conv_e[n], 484),
        )
        for n in ns
    ]
    return RunOutcome(checks=checks)


def _run_gt2(ctx: RunContext) -> RunOutcome:
    ns, ms = list(ctx.span("n")), list(ctx.span("m"))
    if not ns or not ms:
        return RunOutcome()
    count = ms[-1] + 1
    checks = []
    for n in ns:
        base = derive(CPower(n))
        doubled = derive(CPower(2 * n))
        cof = derive(CofactorPower(n))
        s1 = base.sequence().terms(count)
        s2 = doubled.sequence().terms(count)
        lhs_tab = multinomial_conv_prefix([s1, s1], count - 1)
        alt = multinomial_conv_prefix(
            [WeightedSeq(cof.sequence(), -1).prefix(count), [1] * count], count - 1
        )
        for m in ms:
            lhs = Fraction(lhs_tab[m]) / base.scale**2
            rhs = Fraction(2**m * s2[m]) / doubled.scale + 2 * Fraction(alt[m]) / cof.scale
            checks.append(_check(f"n={n},m={m}", lhs, rhs))
    return RunOutcome(checks=checks)


def _run_gt3(ctx: RunContext) -> RunOutcome:
    ns, ms = list(ctx.span("n")), list(ctx.span("m"))
    if not ns or not ms:
        return RunOutcome()
    count = ms[-1] + 1
    checks = []
    for n in ns:
        d1, d2, d3 = (derive(CPower(j * n)) for j in (1, 2, 3))
        s1 = d1.sequence().terms(count)
        s3 = d3.sequence().terms(count)
        lhs_tab = multinomial_conv_prefix([s1, s1, s1], count - 1)
        cross = multinomial_conv_prefix(
            [WeightedSeq(d2.sequence(), 2).prefix(count), s1], count - 1
        )
        for m in ms:
            lhs = Fraction(lhs_tab[m]) / d1.scale**3
            rhs = (
                -2 * Fraction(3**m * s3[m]) / d3.scale
                + Fraction(6, 44**n)
                + 3 * Fraction(cross[m]) / (d2.scale * d1.scale)
            )
            checks.append(_check(f"n={n},m={m}", lhs, rhs))
    return RunOutcome(checks=checks)


def _run_gt4(ctx: RunContext) -> RunOutcome:
    ns, ms = list(ctx.span("n")), list(ctx.span("m"))
    if not ns or not ms:
        return RunOutcome()
    count = ms[-1] + 1
    checks = []
    for n in ns:
        d1, d2, d3, d4 = (derive(CPower(j * n)) for j in (1, 2, 3, 4))
        s1 = d1.sequence().terms(count)
        s2 = d2.sequence().terms(count)
        s4 = d4.sequence().terms(count)
        lhs_tab = multinomial_conv_prefix([s1, s1, s1, s1], count - 1)
        cr1 = multinomial_conv_prefix(
            [WeightedSeq(d3.sequence(), 3).prefix(count), s1], count - 1
        )
        cr2 = multinomial_conv_prefix([s2, s2], count - 1)
        cr3 = multinomial_conv_prefix([s1, [1] * count], count - 1)
        for m in ms:
            lhs = Fraction(lhs_tab[m]) / d1.scale**4
            rhs = (
                -6 * Fraction(4**m * s4[m]) / d4.scale
                + 4 * Fraction(cr1[m]) / (d3.scale * d1.scale)
                + 3 * Fraction(2**m * cr2[m]) / d2.scale**2
                + 12 * Fraction(cr3[m]) / (44**n * d1.scale)
            )
            checks.append(_check(f"n={n},m={m}", lhs, rhs))
    return RunOutcome(checks=checks)


def _run_gt5(ctx: RunContext) -> RunOutcome:
    ns, ms = list(ctx.span("n")), list(ctx.span("m"))
    if not ns or not ms:
        return RunOutcome()
    count = ms[-1] + 1
    checks = []
    for n in ns:
        d1, d2, d3, d4, d5 = (derive(CPower(j * n)) for j in (1, 2, 3, 4, 5))
        s1 = d1.sequence().terms(count)
        s5 = d5.sequence().terms(count)
        lhs_tab = multinomial_conv_prefix([s1, s1, s1, s1, s1], count - 1)
        cr_a = multinomial_conv_prefix(
            [WeightedSeq(d2.sequence(), 2).prefix(count), [1] * count], count - 1
        )
        cr_b = multinomial_conv_prefix([s1, s1, [1] * count], count - 1)
        cr_c = multinomial_conv_prefix(
            [WeightedSeq(d4.sequence(), 4).prefix(count), s1], count - 1
        )
        cr_d = multinomial_conv_prefix(
            [
                WeightedSeq(d3.sequence(), 3).prefix(count),
                WeightedSeq(d2.sequence(), 2).prefix(count),
            ],
            count - 1,
        )
        for m in ms:
            lhs = Fraction(lhs_tab[m]) / d1.scale**5
            rhs = (
                -14 * Fraction(5**m * s5[m]) / d5.scale
                + 5 * Fraction(cr_a[m]) / (44**n * d2.scale)
                + 15 * Fraction(cr_b[m]) / (44**n * d1.scale**2)
                + 5 * Fraction(cr_c[m]) / (d4.scale * d1.scale)
                + 10 * Fraction(cr_d[m]) / (d3.scale * d2.scale)
            )
            checks.append(_check(f"n={n},m={m}", lhs, rhs))
    return RunOutcome(checks=checks)


def _run_s1(ctx: RunContext) -> RunOutcome:
    checks = [
        _check(
            f"n={n}",
            derive(SumCofactorConst(n)),
            ScaledSeq(Fraction(-22) ** n, (3, 1, 3)),
        )
        for n in ctx.span("n")
    ]
    return RunOutcome(checks=checks)


def _run_s2(ctx: RunContext) -> RunOutcome:
    ns = list(ctx.span("n"))
    if not ns:
        return RunOutcome()
    checks, mismatches = [], []
    printed_seq = TriboSeq(242, 82, 245)
    for n in ns:
        elt = family_element(SumCofactorSqConst(n))
        checks.append(
            _check(f"n={n},corrected", derive(SumCofactorSqConst(n)),
                   ScaledSeq(Fraction(484) ** n, (3, 1, 3)))
        )
        printed_scale = Fraction(2**6 * 5 * 11**2) * Fraction(484) ** (n - 1)
        traces = egf_rational_terms(elt, 11)
        for k in range(11):
            printed_value = Fraction(printed_seq.term(k)) / printed_scale
            if traces[k] != printed_value:
                mismatches.append(_check(f"n={n},k={k},printed", traces[k], printed_value))
                break
        else:
            checks.append(_check(f"n={n},printed", traces[0], traces[0]))
    notes = [
        "printed presentation (scale 2^6*5*11^2*(22^2)^(n-1), triple (242,82,245)) "
        "disagrees with the exact trace sequence at the recorded indices; "
        "the corrected presentation (scale 484^n, triple (3,1,3)) passes"
    ]
    return RunOutcome(checks=checks, mismatches=mismatches, notes=notes)


#: Printed presentation of the pair-sum-square family (as published).
PAIRSUMSQ_PRINTED: dict[int, tuple[int, tuple[int, int, int]]] = {
    1: (-22, (-4, 1, 4)),
    2: (22**2, (6, -6, 19)),
    3: (-(22**3) * 2, (-61, -75, 163)),
    4: (22**4 * 2, (-140, -425, 1098)),
    5: (-(22**5) * 2, (-1189, -2567, 6318)),
    6: (22**6 * 4, (-13019, -30411, 75841)),
}

#: Oracle-corrected presentation: exact traces of ((c_j^2+c_k^2) family)^n,
#: cross-checked against independent algebraic-number arithmetic.  The
#: printed scales are all correct; the printed triples are wrong for n >= 2.
PAIRSUMSQ_ORACLE: dict[int, tuple[int, tuple[int, int, int]]] = {
    1: (-22, (-4, 1, 4)),
    2: (22**2, (6, 6, -7)),
    3: (-(22**3) * 2, (13, -51, 37)),
    4: (22**4 * 2, (-140, 151, -50)),
    5: (-(22**5) * 2, (537, -307, -34)),
    6: (22**6 * 4, (-2805, 589, 1031)),
}


def _run_s3(ctx: RunContext) -> RunOutcome:
    ns = list(ctx.span("n"))
    if not ns:
        return RunOutcome()
    checks, mismatches = [], []
    for n in ns:
        derived = derive(PairSumSqPower(n))
        if n in PAIRSUMSQ_ORACLE:
            scale, triple = PAIRSUMSQ_ORACLE[n]
            checks.append(_check(f"n={n},oracle", derived, ScaledSeq(Fraction(scale), triple)))
        else:
            ok = binet_check(derived, family_element(PairSumSqPower(n)), 30)
            checks.append(_check(f"n={n},binet", ok, True))
        if n in PAIRSUMSQ_PRINTED:
            scale, triple = PAIRSUMSQ_PRINTED[n]
            printed = ScaledSeq(Fraction(scale), triple)
            row = _check(f"n={n},printed", printed, derived)
            (checks if row.ok else mismatches).append(row)
    notes = [
        "printed triples for n >= 2 fail the exact oracle (the printed triple/scale "
        "recursion for this family is flawed; replication reproduces the printed "
        "table and flags the mismatch); printed scales are all correct and the "
        "oracle-corrected triples are verified above"
    ]
    return RunOutcome(checks=checks, mismatches=mismatches, notes=notes)


def _run_gf(ctx: RunContext) -> RunOutcome:
    orders = list(ctx.span("order"))
    if not orders:
        return RunOutcome()
    order = orders[-1]
    if order < 6:
        return RunOutcome(checks=[Check("order", False, str(order), ">= 6")])
    t = series_T(order)
    trib = TriboSeq.ordinary()
    checks = [
        _check(f"coeff k={k}", t[k], Fraction(trib.term(k))) for k in range(order + 1)
    ]
    defining = TruncSeries([1, -1, -1, -1], order) * t
    checks.append(_check("defining-relation", defining == TruncSeries([0, 1], order), True))
    checks.append(_check("derivative-relations", series_check_derivatives(order), True))
    return RunOutcome(checks=checks)


# -- registry ---------------------------------------------------------------

def _rec(id, label, ranges, runner, expectation="expected-pass") -> IdentityRecord:
    return IdentityRecord(id, label, tuple(RangeSpec(*r) for r in ranges), runner, expectation)


REGISTRY: dict[str, IdentityRecord] = {
    r.id: r
    for r in [
        _rec("P1", "sum T_k(T_{n-k}+T_{n-k-2}+2T_{n-k-3}) = (n-2)T_{n-1} - T_{n-2}",
             [("n", 3, 200)], _run_p1),
        _rec("P2", "sum T_k T_{n-k} as a weighted single sum (adopted reading of the "
             "half-integer sign exponents)", [("n", 2, 100)], _run_p2),
        _rec("T1", "(n-1)(n-2)T_{n-1} = weighted triple plain convolutions at shifts "
             "n-5, n-4, n-2, n-1, n", [("n", 5, 120)], _run_t1),
        _rec("L-CONST", "root-coefficient constants: trace(c)=0, trace(xc)=1, "
             "trace(x^2 c)=1, norm(c)=1/44, trace(cofactor)=-1/22", [], _run_constants),
        _rec("L2", "c^2 family equals (1/22) T^(2,3,10)", [("k", 0, 50)],
             _make_lemma_runner(2, 22, (2, 3, 10))),
        _rec("L7", "c^3 family equals (1/44) T^(3,3,5)", [("k", 0, 50)],
             _make_lemma_runner(3, 44, (3, 3, 5))),
        _rec("L8", "c^4 family equals (1/484) T^(2,14,21)", [("k", 0, 50)],
             _make_lemma_runner(4, 484, (2, 14, 21))),
        _rec("L9", "c^5 family equals (1/968) T^(5,6,15)", [("k", 0, 50)],
             _make_lemma_runner(5, 968, (5, 6, 15))),
        _rec("P3", "binomial pair convolution of T equals "
             "(1/22)(2^n T_n^(2,3,10) + 2 sum C(n,k)(-1)^k T_k^(-1,2,7))",
             [("n", 0, 200)], _run_p3),
        _rec("T2", "triple binomial convolution, one-parameter family in D",
             [("n", 0, 120)], _run_t2),
        _rec("T2R", "triple binomial convolution, D = 0 special form",
             [("n", 0, 120)], _run_t2r),
        _rec("T3", "quadruple binomial convolution, family in (D,E,G,H)",
             [("n", 0, 80)], _run_t3),
        _rec("T3R", "quadruple binomial convolution, E=F=G=H=0 special form",
             [("n", 0, 80)], _run_t3r),
        _rec("T4", "quintuple binomial convolution, family in (D,I,L,N,P,Q,R,S)",
             [("n", 0, 80)], _run_t4),
        _rec("T4R", "quintuple binomial convolution, B=I=L=N=P=Q=R=S=0 special form",
             [("n", 0, 80)], _run_t4r),
        _rec("GT2", "pair binomial convolution of the c^n family",
             [("n", 1, 4), ("m", 0, 60)], _run_gt2),
        _rec("GT3", "triple binomial convolution of the c^n family",
             [("n", 1, 4), ("m", 0, 60)], _run_gt3),
        _rec("GT4", "quadruple binomial convolution of the c^n family",
             [("n", 1, 4), ("m", 0, 60)], _run_gt4),
        _rec("GT5", "quintuple binomial convolution of the c^n family",
             [("n", 1, 4), ("m", 0, 60)], _run_gt5),
        _rec("S1", "(sum of pairwise products of c)^n sum-of-exponentials equals "
             "((-1/22)^n) T^(3,1,3)", [("n", 1, 8)], _run_s1),
        _rec("S2", "(sum of squared pairwise products)^n sum-of-exponentials, printed "
             "scale 2^6*5*11^2*(22^2)^(n-1) with triple (242,82,245)",
             [("n", 1, 6)], _run_s2, expectation="known-discrepancy"),
        _rec("S3", "(c_j^2+c_k^2)^n per-root family against the printed table",
             [("n", 1, 6)], _run_s3, expectation="known-discrepancy"),
        _rec("GF", "ordinary generating function derivative identities for "
             "T(x) = x/(1-x-x^2-x^3)", [("order", 40, 40)], _run_gf),
    ]
}


def identity_ids() -> list[str]:
    return sorted(REGISTRY)


def verify(
    identity_id: str,
    *,
    nmax: int | None = None,
    mmax: int | None = None,
    params=None,
    seed: int = DEFAULT_SEED,
    range_cap: int = DEFAULT_RANGE_CAP,
) -> VerifyReport:
    """Run one identity over its (possibly overridden) range.

    nmax/mmax override the upper end of the record's first/second index
    range.  params overrides the parameter sample where the record has one
    (T2: iterable of D values; T3/T4: iterable of name-to-value mappings).
    """
    record = REGISTRY.get(identity_id)
    if record is None:
        raise UnknownIdentity(f"no identity registered under id {identity_id!r}")
    ranges: dict[str, tuple[int, int]] = {}
    for pos, range_spec in enumerate(record.ranges):
        hi = range_spec.hi
        if pos == 0 and nmax is not None:
            hi = nmax
        if pos == 1 and mmax is not None:
            hi = mmax
        if hi > range_cap:
            raise RangeTooLarge(
                f"{range_spec.name} <= {hi} exceeds the configured cap {range_cap}"
            )
        ranges[range_spec.name] = (range_spec.lo, hi)
    ctx = RunContext(ranges, random.Random(f"{seed}:{identity_id}"), params)
    outcome = record.runner(ctx)
    range_desc = ", ".join(f"{name}={lo}..{hi}" for name, (lo, hi) in ranges.items())
    return VerifyReport(
        id=record.id,
        label=record.label,
        range_desc=range_desc,
        params=outcome.params_used,
        expectation=record.expectation,
        checks=outcome.checks,
        mismatches=outcome.mismatches,
        notes="; ".join(outcome.notes),
    )


@dataclass
class SuiteReport:
    seed: int
    reports: list[VerifyReport]

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "known-discrepancy": 0, "vacuous": 0}
        for report in self.reports:
            out[report.status] += 1
        return out

    @property
    def verdict(self) -> str:
        return "pass" if self.counts()["fail"] == 0 else "fail"

    def to_dict(self) -> dict:
        counts = self.counts()
        return {
            "config": {"seed": str(self.seed)},
            "entries": [r.to_dict() for r in self.reports],
            "summary": {
                "pass": str(counts["pass"]),
                "fail": str(counts["fail"]),
                "known_discrepancy": str(counts["known-discrepancy"]),
                "vacuous": str(counts["vacuous"]),
                "total": str(len(self.reports)),
                "verdict": self.verdict,
            },
        }


def verify_all(seed: int = DEFAULT_SEED, range_cap: int = DEFAULT_RANGE_CAP) -> SuiteReport:
    """Run every registered identity at its default range, deterministically
    for a given seed; entries are ordered by id."""
    reports = [verify(i, seed=seed, range_cap=range_cap) for i in identity_ids()]
    return SuiteReport(seed=seed, reports=reports)
