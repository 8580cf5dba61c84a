"""Grid certification of the three symmetric power expansions."""

import random
from fractions import Fraction as F

import pytest

from triboconv.symmetric_identities import (
    SymParams3,
    SymParams4,
    SymParams5,
    coeffs3,
    coeffs4,
    coeffs5,
    random_params,
    rhs3,
    verify_sym_identity,
)


class TestConstraintFormulas:
    def test_coeffs3_at_zero(self):
        assert coeffs3(SymParams3(F(0))) == (-2, 6, 3)

    def test_coeffs3_at_three(self):
        assert coeffs3(SymParams3(F(3))) == (1, -3, 0)

    def test_coeffs3_at_two(self):
        assert coeffs3(SymParams3(F(2))) == (0, 0, 1)

    def test_coeffs4_remark_point(self):
        # D = 3 with E = G = H = 0 forces F = 0
        assert coeffs4(SymParams4(D=F(3))) == (-6, 4, 0, 12)

    def test_coeffs4_all_zero(self):
        assert coeffs4(SymParams4()) == (-3, 4, 6, 0)

    def test_coeffs5_remark_point(self):
        # D = 15 with the other free parameters zero forces B = 0
        assert coeffs5(SymParams5(D=F(15))) == (-14, 0, 5, 5, 10)


class TestGridCertification:
    def test_cubic_at_d_zero(self):
        assert verify_sym_identity(3, SymParams3(F(0)), 6)

    def test_cubic_spot_value(self):
        # at (1,1,1) with D=0: 27 = -2*3 + 6 + 3*9
        assert F(3) ** 3 == rhs3(SymParams3(F(0)), F(1), F(1), F(1)) == -2 * 3 + 6 + 3 * 9

    def test_quartic_remark_point(self):
        assert verify_sym_identity(4, SymParams4(D=F(3)), 6)

    def test_quintic_fixed_seed_random(self):
        rng = random.Random(7)
        assert verify_sym_identity(5, random_params(5, rng), 6)

    @pytest.mark.parametrize("degree", [3, 4, 5])
    def test_twenty_fixed_seed_draws(self, degree):
        rng = random.Random(f"grid:{degree}")
        for _ in range(20):
            assert verify_sym_identity(degree, random_params(degree, rng), 6)

    def test_grid_too_small_rejected(self):
        with pytest.raises(ValueError):
            verify_sym_identity(3, SymParams3(F(0)), 3)

    def test_unknown_degree_rejected(self):
        with pytest.raises(ValueError):
            verify_sym_identity(6, SymParams3(F(0)), 7)


class TestParameterLinearity:
    def test_cubic_rhs_is_parameter_independent(self):
        # the D-coefficient of the cubic right side vanishes identically,
        # so holding at one D certifies the family; spot check on a grid
        rng = random.Random(11)
        for _ in range(50):
            a, b, c = (F(rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(3))
            assert rhs3(SymParams3(F(1)), a, b, c) == rhs3(SymParams3(F(-4, 3)), a, b, c)
