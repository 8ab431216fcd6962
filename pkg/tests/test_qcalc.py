from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsobolev import (
    ModeError,
    Poly,
    QContext,
    RationalFn,
    Scalar,
    jackson_weighted_integral,
    q_binomial,
    q_derivative,
    q_derivative_inv,
    q_factorial,
    q_falling,
    q_number,
    q_number_ext,
    q_pochhammer,
    q_pochhammer_inf,
    q_sub_power,
    q_taylor,
    q_taylor_reconstruct,
    ratfn_q_derivative,
    weight_at,
)
from qsobolev.qcalc import q_sub_power_sum

fractions = st.fractions(min_value=-8, max_value=8, max_denominator=10)
qs = st.sampled_from([Fraction(1, 3), Fraction(1, 2), Fraction(7, 10)])


def poly_of(ctx, coeffs):
    return ctx.poly(coeffs)


@pytest.fixture(scope="module")
def ctx():
    return QContext.exact(Fraction(1, 2))


# -- q-numbers, factorials, binomials ------------------------------------------


def test_q_number_values(ctx):
    assert q_number(0, ctx) == 0
    assert q_number(1, ctx) == 1
    assert q_number(3, ctx) == Fraction(7, 4)
    with pytest.raises(ValueError):
        q_number(-1, ctx)


def test_q_number_ext_negative_indices(ctx):
    # [-1]_q = (1 - 1/q)/(1 - q) = -1/q
    assert q_number_ext(-1, ctx) == Fraction(-2)
    assert q_number_ext(-2, ctx) == Fraction(-6)


def test_q_factorial_values(ctx):
    assert q_factorial(0, ctx) == 1
    assert q_factorial(2, ctx) == Fraction(3, 2)
    assert q_factorial(3, ctx) == Fraction(21, 8)


def test_q_pochhammer_values(ctx):
    assert q_pochhammer(Fraction(1, 3), 0, ctx) == 1
    assert q_pochhammer(Fraction(1, 2), 2, ctx) == Fraction(3, 8)
    assert q_pochhammer(1, 3, ctx) == 0


def test_q_binomial_values(ctx):
    assert q_binomial(5, 0, ctx) == 1
    assert q_binomial(2, 1, ctx) == Fraction(3, 2)
    ratio = q_pochhammer(ctx.q, 4, ctx) / (
        q_pochhammer(ctx.q, 2, ctx) * q_pochhammer(ctx.q, 2, ctx)
    )
    assert q_binomial(4, 2, ctx) == ratio
    assert q_binomial(7, 3, ctx) == q_binomial(7, 4, ctx)
    with pytest.raises(ValueError):
        q_binomial(3, 4, ctx)


# -- q-falling factorial ----------------------------------------------------------


def falling_product_oracle(s: int, n: int, ctx) -> Scalar:
    """Brute-force descending product [s]_q [s-1]_q ... [s-n+1]_q."""
    out = ctx.one
    for j in range(n):
        out = out * q_number_ext(s - j, ctx)
    return out


def test_q_falling_examples(ctx):
    for n in range(8):
        assert q_falling(n, 1, ctx) == q_number(n, ctx)
    assert q_falling(3, 2, ctx) == Fraction(21, 8)
    for n in range(6):
        assert q_falling(n, n + 1, ctx) == 0


@given(qs, st.integers(min_value=-6, max_value=10), st.integers(min_value=0, max_value=8))
def test_q_falling_matches_product_oracle(q, s, n):
    ctx = QContext.exact(q)
    assert q_falling(s, n, ctx) == falling_product_oracle(s, n, ctx)


# -- q-subtraction powers -----------------------------------------------------------


def test_q_sub_power_examples(ctx):
    assert q_sub_power(5, 0, ctx) == ctx.one_poly()
    assert q_sub_power(2, 2, ctx) == ctx.poly([2, -3, 1])
    assert q_sub_power(Fraction(5, 4), 1, ctx) == ctx.poly([Fraction(-5, 4), 1])


@given(qs, fractions, st.integers(min_value=0, max_value=8))
def test_q_sub_power_product_equals_sum(q, y, n):
    ctx = QContext.exact(q)
    assert q_sub_power(y, n, ctx) == q_sub_power_sum(y, n, ctx)


# -- q-derivatives --------------------------------------------------------------------


def difference_quotient_oracle(p: Poly, ctx) -> Poly:
    """(p(qx) - p(x)) / ((q - 1) x) as an exact polynomial division."""
    num = p.scale_arg(ctx.q) - p
    den = ctx.poly([0, ctx.q - 1])
    if num.is_zero:
        return ctx.zero_poly()
    return num.divexact(den)


def test_q_derivative_examples(ctx):
    cube = ctx.poly([0, 0, 0, 1])
    assert q_derivative(cube, ctx) == ctx.poly([0, 0, Fraction(7, 4)])
    assert q_derivative(ctx.poly([9]), ctx).is_zero


def test_q_derivative_scaling_rule(ctx):
    # D_q[f(c x)] = c (D_q f)(c x) for f = x^2, c = 3
    f = ctx.poly([0, 0, 1])
    lhs = q_derivative(f.scale_arg(3), ctx)
    rhs = q_derivative(f, ctx).scale_arg(3) * 3
    assert lhs == rhs == ctx.poly([0, 9 * Fraction(3, 2)])


@settings(max_examples=50)
@given(qs, st.lists(fractions, min_size=1, max_size=9))
def test_q_derivative_matches_difference_quotient(q, coeffs):
    ctx = QContext.exact(q)
    p = ctx.poly(coeffs)
    assert q_derivative(p, ctx) == difference_quotient_oracle(p, ctx)


def test_q_derivative_inv_examples(ctx):
    square = ctx.poly([0, 0, 1])
    assert q_derivative_inv(square, ctx) == ctx.poly([0, 3])
    assert q_derivative_inv(ctx.poly([4]), ctx).is_zero


@given(qs, st.lists(fractions, min_size=1, max_size=8))
def test_derivative_pair_commutation(q, coeffs):
    # D_{q^-1}(D_q p) = q D_q(D_{q^-1} p)
    ctx = QContext.exact(q)
    p = ctx.poly(coeffs)
    lhs = q_derivative_inv(q_derivative(p, ctx), ctx)
    rhs = q_derivative(q_derivative_inv(p, ctx), ctx) * ctx.q
    assert lhs == rhs


def test_derivative_pair_commutation_quartic():
    ctx = QContext.exact(Fraction(1, 3))
    p = ctx.poly([0, 0, 0, 0, 1])
    assert q_derivative_inv(q_derivative(p, ctx), ctx) == q_derivative(
        q_derivative_inv(p, ctx), ctx
    ) * ctx.q


@settings(max_examples=50)
@given(
    qs,
    st.lists(fractions, min_size=1, max_size=9),
    st.lists(fractions, min_size=1, max_size=9),
)
def test_product_rule_both_forms(q, fc, gc):
    ctx = QContext.exact(q)
    f, g = ctx.poly(fc), ctx.poly(gc)
    prod = q_derivative(f * g, ctx)
    assert prod == f.scale_arg(ctx.q) * q_derivative(g, ctx) + g * q_derivative(f, ctx)
    assert prod == f * q_derivative(g, ctx) + g.scale_arg(ctx.q) * q_derivative(f, ctx)


def test_ratfn_q_derivative_matches_poly_case(ctx):
    p = ctx.poly([1, -2, 0, 5])
    r = ratfn_q_derivative(RationalFn(p), ctx)
    assert r.as_poly() == q_derivative(p, ctx)


# -- q-Taylor ---------------------------------------------------------------------------


def test_q_taylor_constant(ctx):
    assert q_taylor(ctx.poly([7]), 3, ctx) == [ctx.scalar(7)]


def test_q_taylor_round_trip_square(ctx):
    p = ctx.poly([0, 0, 1])
    ts = q_taylor(p, 1, ctx)
    assert q_taylor_reconstruct(ts, 1, ctx) == p


def test_q_taylor_round_trip_h3(ctx):
    h3 = ctx.poly([0, Fraction(-7, 8), 0, 1])
    ts = q_taylor(h3, 2, ctx)
    assert ts[1] == Fraction(7, 4) * (4 - Fraction(1, 2))  # (D_q H_3)(2) = [3]_q H_2(2)
    assert q_taylor_reconstruct(ts, 2, ctx) == h3


@settings(max_examples=40)
@given(qs, st.lists(fractions, min_size=1, max_size=11), fractions)
def test_q_taylor_round_trip_random(q, coeffs, a):
    ctx = QContext.exact(q)
    p = ctx.poly(coeffs)
    assert q_taylor_reconstruct(q_taylor(p, a, ctx), a, ctx) == p


# -- infinite products and the Jackson integral ------------------------------------------


def test_q_pochhammer_inf_at_zero(float_ctx):
    assert q_pochhammer_inf(0, float_ctx) == 1


def test_q_pochhammer_inf_requires_float_mode(ctx):
    with pytest.raises(ModeError):
        q_pochhammer_inf(Fraction(1, 2), ctx)


def test_q_pochhammer_inf_self_convergence(float_ctx):
    coarse = q_pochhammer_inf(float_ctx.scalar(Fraction(1, 2)), float_ctx)
    sharp_ctx = QContext.inexact(Fraction(1, 2), 256, "1e-40")
    sharp = q_pochhammer_inf(sharp_ctx.scalar(Fraction(1, 2)), sharp_ctx)
    assert abs(coarse - float_ctx.scalar(sharp.value)) <= abs(coarse) * float_ctx.tail_tol


def test_q_pochhammer_inf_accepts_unit_magnitude(float_ctx):
    # (-1; q)_inf = 2 prod_{j>=1} (1 + q^j) converges fine
    value = q_pochhammer_inf(-1, float_ctx)
    assert value > 2


def test_weight_eval_contract(float_ctx):
    w = weight_at(Fraction(1, 2), float_ctx)
    assert w.value > 0
    assert w.tail_bound <= float_ctx.tail_tol
    assert w.truncation_terms >= 16
    with pytest.raises(ValueError):
        weight_at(2, float_ctx)


def norm_target(fam, n):
    """(1-q)(q; q)_n (q, -1, -q; q)_inf q^(n(n-1)/2) assembled from parts."""
    return fam.norm_constant().c * fam.norm_sq_normalized(n)


def test_jackson_odd_integrand_vanishes(float_ctx):
    cube = float_ctx.poly([0, 0, 0, 1])
    value = jackson_weighted_integral(cube, float_ctx)
    assert abs(value) <= 10 * float_ctx.tail_tol


def test_jackson_orthogonality_examples(float_ctx):
    from qsobolev import HermiteFamily

    fam = HermiteFamily(float_ctx, 3)
    cross = jackson_weighted_integral(fam.hermite(1) * fam.hermite(2), float_ctx)
    assert abs(cross) <= 10 * float_ctx.tail_tol
    diag = jackson_weighted_integral(fam.hermite(2) * fam.hermite(2), float_ctx)
    target = norm_target(fam, 2)
    assert abs(diag - target) <= abs(target) * 10 * float_ctx.tail_tol


def test_jackson_requires_float_mode(ctx):
    with pytest.raises(ModeError):
        jackson_weighted_integral(ctx.poly([1]), ctx)


def test_q_number_classical_limit():
    for q in ("0.9", "0.99", "0.999"):
        ctx = QContext.inexact(q, 128, "1e-20")
        gap = 1 - ctx.q
        for n in range(1, 11):
            assert abs(q_number(n, ctx) - n) <= n * n * gap
