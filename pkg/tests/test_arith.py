"""Ring/field arithmetic, valuation bounds, logarithms, Frobenius."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padicreg.arith import (
    QpElem,
    RingParams,
    digit_sum,
    extend_log,
    factorial_valuation,
    frobenius,
    padic_log,
    rational_to_qp,
    teichmuller,
    term_valuation_bound,
    truncation_degree,
)
from padicreg.errors import (
    ConvergenceError,
    NonUnitError,
    ParameterError,
    PrecisionError,
)

from oracles import inverse_mod, log_residue, simple_factorial_valuation

P53 = RingParams(5, 3)
P38 = RingParams(3, 8)
Q9 = RingParams(3, 6, 2, (1, 0, 1))  # Z_9 with t^2 + 1


# ---------------------------------------------------------------------------
# parameters


def test_params_validation():
    with pytest.raises(ParameterError):
        RingParams(4, 3)
    with pytest.raises(ParameterError):
        RingParams(5, 0)
    with pytest.raises(ParameterError):
        RingParams(3, 4, 2)  # missing modulus
    with pytest.raises(ParameterError):
        RingParams(3, 4, 2, (2, 0, 1))  # t^2 + 2 = (t-1)(t+1) mod 3
    with pytest.raises(ParameterError):
        RingParams(3, 4, 2, (1, 0, 2))  # not monic
    RingParams(3, 4, 2, (1, 0, 1))  # fine: t^2 + 1 irreducible mod 3
    RingParams(2, 4, 3, (1, 1, 0, 1))  # t^3 + t + 1 irreducible mod 2


def test_params_mismatch_rejected():
    x = P53.from_int(2)
    y = RingParams(5, 4).from_int(2)
    with pytest.raises(ParameterError):
        x + y


# ---------------------------------------------------------------------------
# ring elements


def test_inverse_frozen_example():
    # independent oracle: extended Euclid gives 63
    assert inverse_mod(2, 125) == 63
    assert P53.from_int(2).inverse().coeffs == (63,)


def test_inverse_nonunit_rejected():
    with pytest.raises(NonUnitError):
        P53.from_int(10).inverse()
    with pytest.raises(NonUnitError):
        P53.from_int(0).inverse()


@given(st.integers(1, 5**3 - 1))
def test_inverse_roundtrip_d1(n):
    if n % 5 == 0:
        return
    x = P53.from_int(n)
    assert (x * x.inverse()).coeffs == (1, )


@given(st.integers(0, 3**6 - 1), st.integers(0, 3**6 - 1))
def test_inverse_roundtrip_d2(a, b):
    x = Q9.from_coeffs((a, b))
    if not x.is_unit():
        return
    assert (x * x.inverse()).coeffs == (1, 0)


def test_valuation_unramified():
    x = Q9.from_coeffs((9, 3))
    assert x.valuation() == 1
    assert Q9.zero().valuation() == Q9.M
    assert Q9.from_coeffs((0, 1)).valuation() == 0


@given(st.integers(0, 3**6 - 1), st.integers(0, 3**6 - 1),
       st.integers(0, 3**6 - 1), st.integers(0, 3**6 - 1))
@settings(max_examples=50)
def test_ring_mul_commutes_and_distributes(a, b, c, d):
    x, y = Q9.from_coeffs((a, b)), Q9.from_coeffs((c, d))
    z = Q9.from_coeffs((a ^ c, b ^ d))
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z


# ---------------------------------------------------------------------------
# QpElem precision model


def test_qp_add_alignment_and_cancellation():
    x = QpElem.from_ring(P53.from_int(5))        # 5^1 * 1, abs prec 3
    y = QpElem.from_ring(P53.from_int(45))       # 5^1 * 9
    s0 = x + y                                   # 50 = 5^2 * 2
    assert s0.v == 2 and s0.unit.coeffs == (2,) and s0.prec == 1
    z = QpElem.from_ring(P53.from_int(120))      # -5 mod 125
    s = x + z                                    # 5 - 5 = 0 mod 5^3
    assert s.is_zero() and s.floor == 3
    # partial cancellation costs relative precision
    w = QpElem.from_ring(P53.from_int(30))       # 5 * 6
    t = x + (-w)                                 # -25: valuation 2, 1 digit left
    assert t.v == 2 and t.prec == 1


def test_qp_textual_form():
    x = rational_to_qp(Fraction(13 * 25), RingParams(5, 4))
    assert str(x) == "5^2 * 13 (mod 5^6)"
    assert x.to_json()["valuation"] == 2


@given(st.integers(1, 5**6 - 1), st.integers(1, 5**6 - 1))
@settings(max_examples=60)
def test_ultrametric(a, b):
    P = RingParams(5, 6)
    x, y = QpElem.from_ring(P.from_int(a)), QpElem.from_ring(P.from_int(b))
    s = x + y
    assert s.val_floor() >= min(x.val_floor(), y.val_floor())
    prod = x * y
    if not (x.is_zero() or y.is_zero()):
        assert prod.v == x.v + y.v


def test_qp_mul_precision():
    P = RingParams(5, 6)
    x = QpElem(P, 0, P.from_int(7), 2, None)
    y = QpElem(P, 3, P.from_int(2), 6, None)
    z = x * y
    assert z.v == 3 and z.prec == 2


def test_reduce_abs_and_equal_mod():
    x = rational_to_qp(7, P53)
    y = rational_to_qp(7 + 25, P53)
    assert x.equal_mod(y, 2) and not x.equal_mod(y, 3)
    assert x.reduce_abs(1).prec == 1
    assert rational_to_qp(25, P53).reduce_abs(1).is_zero()


def test_rational_to_qp():
    x = rational_to_qp(Fraction(1, 2), P53)
    assert x.v == 0 and x.unit.coeffs == (63,)
    y = rational_to_qp(50, P53)
    assert y.v == 2 and y.unit.coeffs == (2,)
    z = rational_to_qp(Fraction(3, 50), P53)
    assert z.v == -2
    assert rational_to_qp(0, P53).is_zero()
    assert rational_to_qp(0, P53).floor is None


# ---------------------------------------------------------------------------
# factorial valuations and truncation bounds


def test_factorial_valuation_frozen():
    assert factorial_valuation(10, 3) == 4
    assert factorial_valuation(100, 2) == 97


@given(st.integers(0, 2000), st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_factorial_valuation_digit_sum_identity(l, p):
    assert factorial_valuation(l, p) == (l - digit_sum(l, p)) // (p - 1)
    assert (l - digit_sum(l, p)) % (p - 1) == 0


@given(st.integers(0, 150), st.sampled_from([2, 3, 5, 7]))
def test_factorial_valuation_against_literal_factoring(l, p):
    assert factorial_valuation(l, p) == simple_factorial_valuation(l, p)


def test_term_valuation_bound_frozen():
    assert term_valuation_bound(0, 1, 2, 3) == Fraction(-3, 2)
    assert term_valuation_bound(0, 1, 1, 3) == Fraction(-1, 2)
    assert term_valuation_bound(23, 1, 2, 3) == 10
    with pytest.raises(ConvergenceError):
        term_valuation_bound(4, 1, 1, 2)
    term_valuation_bound(4, 2, 1, 2)  # p = 2 fine once e >= 2


def test_truncation_degree_frozen():
    assert truncation_degree(10, 1, 2, 3) == 23
    assert truncation_degree(1, 2, 2, 5) == 1
    assert truncation_degree(10, 2, 2, 5) == 7


@given(st.integers(1, 12), st.integers(1, 3), st.integers(1, 2),
       st.sampled_from([3, 5, 7]))
def test_truncation_degree_is_tight(target, e, s, p):
    D = truncation_degree(target, e, s, p)
    assert term_valuation_bound(D, e, s, p) >= target
    if D > 0:
        assert term_valuation_bound(D - 1, e, s, p) < target


# ---------------------------------------------------------------------------
# logarithms


def test_padic_log_frozen_values():
    # frozen from the exact-rational series oracle
    cases = [(3, 4, 8, 1992), (5, 6, 8, 329930), (7, 8, 8, 1157779)]
    for p, u, k, expected in cases:
        P = RingParams(p, 12)
        got = padic_log(P.from_int(u))
        assert got.residue_coeffs(k) == (expected,)
        assert log_residue(Fraction(u), p, k) == expected
    P2 = RingParams(2, 12)
    assert padic_log(P2.from_int(5)).residue_coeffs(10) == (636,)


def test_padic_log_preconditions():
    with pytest.raises(ConvergenceError):
        padic_log(RingParams(3, 5).from_int(2))
    with pytest.raises(ConvergenceError):
        padic_log(RingParams(2, 5).from_int(3))  # 3 = 1 mod 2 but not mod 4
    assert padic_log(P38.one()).is_zero()


@given(st.integers(0, 3**6), st.integers(0, 3**6))
@settings(max_examples=40)
def test_padic_log_homomorphism(a, b):
    P = RingParams(3, 10)
    u = P.from_int(1 + 3 * a)
    v = P.from_int(1 + 3 * b)
    lhs = padic_log(u * v)
    rhs = padic_log(u) + padic_log(v)
    # dividing by i = 9 inside the series costs two digits at M = 10
    assert lhs.equal_mod(rhs, 8)


def test_extend_log_frozen_value():
    P = RingParams(5, 12)
    got = extend_log(P.from_int(2))
    assert got.residue_coeffs(8) == (190335,)


def test_extend_log_kills_torsion():
    P = RingParams(5, 8)
    w = teichmuller(P.from_int(2))
    assert (w ** 4).coeffs == (1,)
    assert extend_log(w).is_zero()
    assert extend_log(P.from_int(-1 % P.pM)).is_zero()


def test_extend_log_k_independence():
    # log(u^k)/k agrees for k and 2k wherever both are certified
    P = RingParams(7, 10)
    u = P.from_int(3)
    k = (7 - 1) * 7
    l1 = padic_log(u**k).mul_rational(Fraction(1, k))
    l2 = padic_log(u ** (2 * k)).mul_rational(Fraction(1, 2 * k))
    assert l1.equal_mod(l2, 9)
    assert extend_log(u).equal_mod(l1, 9)


def test_extend_log_agrees_with_padic_log_on_one_units():
    P = RingParams(3, 10)
    u = P.from_int(1 + 3 * 17)
    assert extend_log(u).equal_mod(padic_log(u), 8)


def test_extend_log_rejects_nonunits():
    with pytest.raises(NonUnitError):
        extend_log(P53.from_int(5))


# ---------------------------------------------------------------------------
# Frobenius


def test_frobenius_on_generator():
    t = Q9.generator()
    assert frobenius(t) == -t  # the other root of t^2 + 1
    assert frobenius(frobenius(t)) == t


def test_frobenius_fixes_base():
    x = Q9.from_int(12345 % Q9.pM)
    assert frobenius(x) == x


@given(st.integers(0, 3**6 - 1), st.integers(0, 3**6 - 1),
       st.integers(0, 3**6 - 1), st.integers(0, 3**6 - 1))
@settings(max_examples=40)
def test_frobenius_is_ring_hom(a, b, c, d):
    x, y = Q9.from_coeffs((a, b)), Q9.from_coeffs((c, d))
    assert frobenius(x + y) == frobenius(x) + frobenius(y)
    assert frobenius(x * y) == frobenius(x) * frobenius(y)


def test_frobenius_order_d():
    P = RingParams(2, 5, 3, (1, 1, 0, 1))
    t = P.generator()
    f1 = frobenius(t)
    f2 = frobenius(f1)
    f3 = frobenius(f2)
    assert f3 == t and f1 != t and f2 != t


def test_frobenius_trivial_for_d1():
    with pytest.raises(ParameterError):
        frobenius(P53.from_int(2))


def test_frobenius_reduction_is_p_power():
    # reduction mod p must agree with x -> x^p on the residue field
    x = Q9.from_coeffs((2, 1))
    lhs = frobenius(x)
    rhs = x**3
    assert (lhs - rhs).valuation() >= 1


def test_teichmuller_properties():
    P = RingParams(7, 6)
    w = teichmuller(P.from_int(3))
    assert (w ** 6).coeffs == (1,)
    assert w.coeffs[0] % 7 == 3


def test_divide_p_power_guard():
    with pytest.raises(PrecisionError):
        P53.from_int(7).divide_p_power(1)


def test_qp_inverse():
    x = rational_to_qp(Fraction(10, 3), P38)
    assert (x * x.inverse()).equal_mod(rational_to_qp(1, P38), 8)
    with pytest.raises(NonUnitError):
        QpElem.zero(P38, 4).inverse()


def test_val_floor_semantics():
    assert QpElem.zero(P53, None).val_floor() == math.inf
    assert QpElem.zero(P53, 2).val_floor() == 2
    assert rational_to_qp(50, P53).val_floor() == 2
