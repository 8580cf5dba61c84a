"""Parameterized symmetric polynomial identities for (a+b+c)^3, ^4, ^5.

Each family writes the power of a+b+c as a combination of symmetric
building blocks whose coefficients satisfy printed linear constraints;
only the free parameters are stored and the dependent coefficients are
always recomputed from the constraint formulas.

Verification is by deterministic finite-grid evaluation: both sides have
degree at most d in each of a, b, c, so agreement on a (d+1)^3 integer
grid is a complete proof of the polynomial identity.
"""

from __future__ import annotations

import random
from dataclasses import astuple, dataclass
from fractions import Fraction
from itertools import product


@dataclass(frozen=True)
class SymParams3:
    D: Fraction = Fraction(0)


@dataclass(frozen=True)
class SymParams4:
    D: Fraction = Fraction(0)
    E: Fraction = Fraction(0)
    G: Fraction = Fraction(0)
    H: Fraction = Fraction(0)


@dataclass(frozen=True)
class SymParams5:
    D: Fraction = Fraction(0)
    I: Fraction = Fraction(0)
    L: Fraction = Fraction(0)
    N: Fraction = Fraction(0)
    P: Fraction = Fraction(0)
    Q: Fraction = Fraction(0)
    R: Fraction = Fraction(0)
    S: Fraction = Fraction(0)


def coeffs3(p: SymParams3) -> tuple[Fraction, Fraction, Fraction]:
    """Dependent (A, B, C) for the cubic family: A = D-2, B = -3D+6, C = -D+3."""
    D = Fraction(p.D)
    return (D - 2, -3 * D + 6, -D + 3)


def coeffs4(p: SymParams4) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Dependent (A, C, F, I) for the quartic family."""
    D, E, G, H = (Fraction(v) for v in astuple(p))
    return (
        -D + E + G + H - 3,
        -E - 2 * G - H + 4,
        -2 * D - 2 * G - 2 * H + 6,
        4 * D - E + 2 * G - H,
    )


def coeffs5(p: SymParams5) -> tuple[Fraction, ...]:
    """Dependent (A, B, C, E, H) for the quintic family."""
    D, I, L, N, P, Q, R, S = (Fraction(v) for v in astuple(p))
    A = I + 2 * L + 2 * N + P + 2 * Q + 6 * R + 4 * S - 14
    B = -2 * D - 2 * N - 5 * P - 2 * Q - 6 * R - 12 * S + 30
    C = -D - I - 2 * L - 2 * P - 3 * Q - 6 * R - 7 * S + 20
    E = -I - 2 * L - N - Q - 3 * R - S + 5
    H = -L - 2 * N - P - Q - 4 * R - 3 * S + 10
    return (A, B, C, E, H)


def _blocks(a, b, c):
    s1 = a + b + c
    s2 = a * a + b * b + c * c
    s3 = a**3 + b**3 + c**3
    e2 = a * b + b * c + c * a
    e3 = a * b * c
    return s1, s2, s3, e2, e3


def rhs3(p: SymParams3, a, b, c) -> Fraction:
    A, B, C = coeffs3(p)
    s1, s2, s3, e2, e3 = _blocks(a, b, c)
    return A * s3 + B * e3 + C * s2 * s1 + Fraction(p.D) * e2 * s1


def rhs4(p: SymParams4, a, b, c) -> Fraction:
    A, C, F, I = coeffs4(p)
    D, E, G, H = (Fraction(v) for v in astuple(p))
    s1, s2, s3, e2, e3 = _blocks(a, b, c)
    s4 = a**4 + b**4 + c**4
    return (
        A * s4 + C * s3 * s1 + D * s2 * s2 + E * s2 * e2 + F * e2 * e2
        + G * s2 * s1 * s1 + H * e2 * s1 * s1 + I * e3 * s1
    )


def rhs5(p: SymParams5, a, b, c) -> Fraction:
    A, B, C, E, H = coeffs5(p)
    D, I, L, N, P, Q, R, S = (Fraction(v) for v in astuple(p))
    s1, s2, s3, e2, e3 = _blocks(a, b, c)
    s4 = a**4 + b**4 + c**4
    s5 = a**5 + b**5 + c**5
    return (
        A * s5 + B * e3 * e2 + C * e3 * s2 + D * e3 * s1 * s1 + E * s4 * s1
        + H * s3 * s2 + I * s3 * e2 + L * s3 * s1 * s1 + N * s2 * s2 * s1
        + P * e2 * e2 * s1 + Q * s2 * e2 * s1 + R * s2 * s1**3 + S * e2 * s1**3
    )


_RHS = {3: rhs3, 4: rhs4, 5: rhs5}


def verify_sym_identity(degree: int, params, grid_size: int) -> bool:
    """Evaluate (a+b+c)^degree against the parameterized right side at every
    point of {0..grid_size-1}^3; grid_size >= degree+1 makes this a proof."""
    if degree not in _RHS:
        raise ValueError("degree must be 3, 4 or 5")
    if grid_size < degree + 1:
        raise ValueError("grid must have at least degree+1 points per axis")
    rhs = _RHS[degree]
    pts = range(grid_size)
    return all(
        Fraction(a + b + c) ** degree == rhs(params, Fraction(a), Fraction(b), Fraction(c))
        for a, b, c in product(pts, pts, pts)
    )


def random_params(degree: int, rng: random.Random, bound: int = 10):
    """Free-parameter draw with numerators and denominators bounded by ``bound``."""
    def draw() -> Fraction:
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    if degree == 3:
        return SymParams3(draw())
    if degree == 4:
        return SymParams4(draw(), draw(), draw(), draw())
    if degree == 5:
        return SymParams5(*(draw() for _ in range(8)))
    raise ValueError("degree must be 3, 4 or 5")
