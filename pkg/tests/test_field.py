"""Field arithmetic in Q[x]/(x^3 - x^2 - x - 1): examples and ring laws."""

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from triboconv.field import (
    ONE,
    X,
    ZERO,
    FieldElement,
    RootInterval,
    ZeroAtRoot,
    ZeroElement,
    add,
    c_element,
    cofactor_element,
    float_embeddings,
    inverse,
    mul,
    norm,
    norm_via_multiplication_matrix,
    sign_at_real_root,
    trace,
)

fractions = st.fractions(min_value=-10, max_value=10, max_denominator=12)
elements = st.builds(FieldElement, fractions, fractions, fractions)
nonzero_elements = elements.filter(lambda q: not q.is_zero())


class TestAddMul:
    def test_add_coefficientwise(self):
        assert add(FieldElement(1, 0, 0), FieldElement(0, 1, 0)) == FieldElement(1, 1, 0)

    def test_add_identity(self):
        c = c_element()
        assert c + ZERO == c

    def test_additive_inverse(self):
        c = c_element()
        assert c + (-c) == ZERO

    def test_one_reduction_step(self):
        # x * x^2 = x^3 = 1 + x + x^2
        assert mul(X, X * X) == FieldElement(1, 1, 1)

    def test_two_reduction_steps(self):
        # x * x^3 = x^4 = 1 + 2x + 2x^2
        assert X * (X * (X * X)) == FieldElement(1, 2, 2)

    def test_c_element_times_defining_denominator(self):
        assert c_element() * FieldElement(-1, 4, -1) == ONE

    def test_scalar_multiplication(self):
        assert 2 * X == FieldElement(0, 2, 0)
        assert F(1, 3) * FieldElement(3, 6, 9) == FieldElement(1, 2, 3)


class TestInverse:
    def test_inverse_of_one(self):
        assert inverse(ONE) == ONE

    def test_inverse_defining_c(self):
        # solved independently as a 3x3 rational linear system
        assert inverse(FieldElement(-1, 4, -1)) == FieldElement(F(-2, 11), F(-3, 22), F(5, 22))

    def test_inverse_of_x(self):
        # x * (x^2 - x - 1) = x^3 - x^2 - x = 1
        assert inverse(X) == FieldElement(-1, -1, 1)

    def test_inverse_of_zero_raises(self):
        with pytest.raises(ZeroElement):
            inverse(ZERO)

    @given(nonzero_elements)
    def test_inverse_roundtrip(self, q):
        assert q * inverse(q) == ONE


class TestTraceNorm:
    def test_trace_of_one(self):
        assert trace(ONE) == 3

    def test_trace_of_c(self):
        assert trace(c_element()) == 0

    def test_trace_of_x_times_c(self):
        assert trace(X * c_element()) == 1

    def test_trace_of_x_squared(self):
        # Newton identity p2 = e1 p1 - 2 e2 = 1 + 2 = 3
        assert trace(X * X) == 3

    def test_norm_of_one(self):
        assert norm(ONE) == 1

    def test_norm_of_x(self):
        assert norm(X) == 1

    def test_norm_of_c(self):
        assert norm(c_element()) == F(1, 44)

    def test_norm_of_constant_is_cube(self):
        assert norm(FieldElement.constant(F(-3, 5))) == F(-27, 125)

    @given(elements, elements)
    def test_trace_additive(self, p, q):
        assert trace(p + q) == trace(p) + trace(q)

    @given(fractions, elements)
    def test_trace_scalar(self, k, q):
        assert trace(k * q) == k * trace(q)

    @given(elements, elements)
    def test_norm_multiplicative(self, p, q):
        assert norm(p * q) == norm(p) * norm(q)

    @given(elements)
    def test_norm_routes_agree(self, q):
        assert norm(q) == norm_via_multiplication_matrix(q)

    def test_trace_power_sequence_recurrence(self):
        # trace(x^k) follows the three-term recurrence from (3, 1, 3)
        traces = [trace(X**k) for k in range(20)]
        assert traces[:3] == [3, 1, 3]
        for k in range(3, 20):
            assert traces[k] == traces[k - 1] + traces[k - 2] + traces[k - 3]


class TestRingLaws:
    @given(elements, elements)
    def test_add_commutative(self, p, q):
        assert p + q == q + p

    @given(elements, elements)
    def test_mul_commutative(self, p, q):
        assert p * q == q * p

    @given(elements, elements, elements)
    def test_add_associative(self, p, q, r):
        assert (p + q) + r == p + (q + r)

    @given(elements, elements, elements)
    def test_mul_associative(self, p, q, r):
        assert (p * q) * r == p * (q * r)

    @given(elements, elements, elements)
    def test_distributive(self, p, q, r):
        assert p * (q + r) == p * q + p * r


class TestSpecialElements:
    def test_c_element_coeffs(self):
        assert c_element().coeffs == (F(-2, 11), F(-3, 22), F(5, 22))

    def test_trace_x2_times_c(self):
        assert trace(X * (X * c_element())) == 1

    def test_cofactor_coeffs(self):
        assert cofactor_element().coeffs == (F(-1, 44), F(1, 11), F(-1, 44))

    def test_cofactor_trace(self):
        assert trace(cofactor_element()) == F(-1, 22)

    def test_c_times_cofactor_is_constant(self):
        assert c_element() * cofactor_element() == FieldElement.constant(F(1, 44))


class TestSignAtRealRoot:
    def test_sign_of_c_is_positive(self):
        assert sign_at_real_root(c_element()) == 1

    def test_sign_of_negative_constant(self):
        assert sign_at_real_root(FieldElement.constant(-5)) == -1

    def test_sign_of_pair_sum_square(self):
        # at the real root this element evaluates to c2^2 + c3^2 < 0
        c2 = c_element() ** 2
        pair = FieldElement.constant(trace(c2)) - c2
        assert sign_at_real_root(pair) == -1

    def test_zero_raises(self):
        with pytest.raises(ZeroAtRoot):
            sign_at_real_root(ZERO)

    def test_agrees_with_float_on_random_elements(self):
        rng = random.Random(2024)
        for _ in range(1000):
            q = FieldElement(
                F(rng.randint(-40, 40), rng.randint(1, 12)),
                F(rng.randint(-40, 40), rng.randint(1, 12)),
                F(rng.randint(-40, 40), rng.randint(1, 12)),
            )
            if q.is_zero():
                continue
            certified = sign_at_real_root(q)
            approx = float_embeddings(q)[0].real
            # the interval result is the authority; the float is a sanity witness
            assert (approx > 0) == (certified > 0)

    def test_tiny_embedding_still_resolves(self):
        q = c_element() ** 50  # about 2e-24 at the real root
        assert sign_at_real_root(q) == 1


class TestFloatEmbeddings:
    def test_embeddings_of_x_match_the_roots(self):
        a, b, g = float_embeddings(X)
        assert a.real == pytest.approx(1.839286755, abs=1e-8)
        assert a.imag == 0
        assert b.real == pytest.approx(-0.4196433776, abs=1e-8)
        assert abs(b.imag) == pytest.approx(0.6062907292, abs=1e-8)
        assert g == b.conjugate()

    def test_embeddings_of_constant(self):
        assert float_embeddings(ONE) == (1, 1, 1)

    def test_embeddings_of_c(self):
        a, b, g = float_embeddings(c_element())
        assert a.real == pytest.approx(0.3362281170, abs=1e-8)
        assert b.real == pytest.approx(-0.1681140585, abs=1e-8)
        assert abs(b.imag) == pytest.approx(0.1983241401, abs=1e-8)
        assert g == b.conjugate()


class TestRootInterval:
    def test_bisection_narrows_and_keeps_the_root(self):
        def min_poly(v):
            return ((v - 1) * v - 1) * v - 1

        iv = RootInterval(F(11, 6), F(15, 8)).bisect(20)
        assert iv.lower < iv.upper
        assert iv.width() < F(1, 10**5)
        # the sign change certifies the root stayed strictly inside
        assert min_poly(iv.lower) < 0 < min_poly(iv.upper)
