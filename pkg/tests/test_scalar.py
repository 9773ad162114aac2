from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from bpbw.errors import NotAUnit, ParseError
from bpbw.scalar import (
    Scalar, ScalarContext, cyclotomic_poly, is_zero, parse_scalar, ring_add, ring_mul, ring_neg,
    unit_pow,
)

from oracles import numeric_primitive_root, poly_mul

Q = ScalarContext(("q",))
Z3 = ScalarContext((), 3)
QZ6 = ScalarContext(("q", "t"), 6)


def scalars(ctx, max_terms=4):
    key = st.tuples(
        st.integers(0, (ctx.zeta_order or 1) - 1),
        st.tuples(*[st.integers(-3, 3) for _ in ctx.params]),
    )
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    return st.dictionaries(key, coeff, max_size=max_terms).map(lambda d: Scalar(ctx, d))


class TestParse:
    def test_unit(self):
        assert parse_scalar("1", Q).is_one()

    def test_two_terms(self):
        s = parse_scalar("-2*q^-1 + 1/3", Q)
        assert s.terms == {(0, (-1,)): Fraction(-2), (0, (0,)): Fraction(1, 3)}

    def test_zeta_cubed_is_one(self):
        s = parse_scalar("z^3", Z3)
        assert s.is_one()
        assert abs(s.evaluate(zeta_value=numeric_primitive_root(3)) - 1) < 1e-12

    @pytest.mark.parametrize("text", ["2 q", "q^", "1/0", "+", "q*", "1 +"])
    def test_syntax_errors(self, text):
        with pytest.raises(ParseError):
            parse_scalar(text, Q)

    def test_error_has_position(self):
        with pytest.raises(ParseError) as exc:
            parse_scalar("1 + r", Q)
        assert exc.value.position == 4
        assert "unknown parameter" in str(exc.value)

    def test_zeta_without_order(self):
        with pytest.raises(ParseError, match="no zeta order"):
            parse_scalar("z", Q)

    def test_whitespace_insignificant(self):
        assert parse_scalar(" - 2 * q ^ -1+1 / 3 ", Q) == parse_scalar("-2*q^-1+1/3", Q)

    @given(scalars(QZ6))
    def test_str_round_trips(self, s):
        assert parse_scalar(str(s), QZ6) == s


class TestRing:
    def test_difference_of_squares(self):
        q = Q.param("q")
        assert ring_mul(1 + q, 1 - q) == parse_scalar("1 - q^2", Q)

    def test_additive_inverse(self):
        a = parse_scalar("3/4*q^2 - 7", Q)
        assert ring_add(a, ring_neg(a)).terms == {}

    def test_phi3_relation(self):
        s = parse_scalar("1 + z + z^2", Z3)
        assert is_zero(s)
        w = numeric_primitive_root(3)
        assert abs(1 + w + w**2) < 1e-12

    def test_q_minus_q(self):
        q = Q.param("q")
        assert is_zero(q - q)
        assert is_zero(Q.zero())

    def test_mismatched_contexts(self):
        with pytest.raises(ValueError):
            Q.one() + Z3.one()

    @settings(max_examples=300)
    @given(scalars(QZ6), scalars(QZ6), scalars(QZ6))
    def test_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c

    @given(scalars(QZ6))
    def test_normalization_idempotent(self, a):
        assert Scalar(QZ6, dict(a.terms)).terms == a.terms

    @given(scalars(QZ6))
    def test_canonical_form(self, a):
        deg = QZ6.zeta_degree
        for (k, qe), c in a.terms.items():
            assert c != 0 and 0 <= k < deg and len(qe) == 2
            assert c.denominator > 0

    @settings(max_examples=100)
    @given(scalars(QZ6), scalars(QZ6))
    def test_agrees_with_numeric_evaluation(self, a, b):
        z = numeric_primitive_root(6)
        vals = (1.3, -0.7)
        lhs = (a * b).evaluate(vals, z)
        rhs = a.evaluate(vals, z) * b.evaluate(vals, z)
        assert abs(lhs - rhs) < 1e-9


class TestUnitPow:
    def test_laurent(self):
        assert unit_pow(Q.param("q"), -2) == Q.param("q", -2)

    def test_sign(self):
        assert unit_pow(Q.const(-1), 3) == -1
        assert unit_pow(Q.const(-1), -4) == 1

    def test_zeta4_sixth_power(self):
        Z4 = ScalarContext((), 4)
        assert unit_pow(Z4.zeta(), 6) == -1

    def test_zeta_square_order3_is_unit(self):
        z2 = Z3.zeta(2)
        assert len(z2.terms) == 2  # -1 - z
        assert z2.is_unit()
        assert unit_pow(z2, -1) == Z3.zeta()

    def test_non_unit_negative_power(self):
        with pytest.raises(NotAUnit):
            unit_pow(Q.const(2), -1)
        with pytest.raises(NotAUnit):
            unit_pow(1 + Q.param("q"), -1)

    def test_non_unit_positive_power(self):
        q = Q.param("q")
        assert unit_pow(1 + q, 3) == (1 + q) * (1 + q) * (1 + q)

    @pytest.mark.parametrize("m", range(-8, 9))
    @pytest.mark.parametrize("text", ["q", "-q^2*t^-1", "z", "-z^5*t", "z^4", "1"])
    def test_inverse_pairs(self, text, m):
        a = parse_scalar(text, QZ6)
        assert unit_pow(a, m) * unit_pow(a, -m) == 1


class TestCyclotomic:
    def test_small(self):
        assert cyclotomic_poly(1) == (-1, 1)
        assert cyclotomic_poly(2) == (1, 1)
        assert cyclotomic_poly(6) == (1, -1, 1)

    @pytest.mark.parametrize("n", range(1, 25))
    def test_product_identity(self, n):
        prod = [1]
        for d in range(1, n + 1):
            if n % d == 0:
                prod = poly_mul(prod, list(cyclotomic_poly(d)))
        assert prod == [-1] + [0] * (n - 1) + [1]

    @pytest.mark.parametrize("n", [1, 5, 9, 12, 15, 30, 105])
    def test_matches_sympy(self, n):
        x = sympy.Symbol("x")
        ref = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
        assert list(cyclotomic_poly(n)) == ref

    @pytest.mark.parametrize("n", [5, 7, 8, 12])
    def test_zero_testing_matches_field(self, n):
        ctx = ScalarContext((), n)
        total = sum((ctx.zeta(k) for k in range(n)), ctx.zero())
        assert total.is_zero()  # sum of all n-th roots of unity
