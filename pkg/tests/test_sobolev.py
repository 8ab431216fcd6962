from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest

from qsobolev import (
    EFFECTIVE,
    RAW,
    HermiteFamily,
    ModeError,
    Poly,
    QContext,
    Scalar,
    SobolevFamily,
    SobolevParams,
    expand_in_H,
    q_derivative,
)

PARAMS_GRID = (
    (Fraction(1, 3), Fraction(5, 4), Fraction(1, 10)),
    (Fraction(1, 2), Fraction(2), Fraction(1)),
    (Fraction(7, 10), Fraction(-3), Fraction(10)),
    (Fraction(1, 2), Fraction(-5, 4), Fraction(10)),
)


def make_family(q, alpha, mass) -> SobolevFamily:
    fam = HermiteFamily(QContext.exact(q))
    return SobolevFamily(fam, SobolevParams(Scalar.exact(alpha), Scalar.exact(mass)))


# -- parameter validation -----------------------------------------------------


def test_params_reject_mass_point_inside_support():
    with pytest.raises(ValueError):
        SobolevParams(Scalar.exact(1), Scalar.exact(1))
    with pytest.raises(ValueError):
        SobolevParams(Scalar.exact(Fraction(-3, 4)), Scalar.exact(1))


def test_params_reject_nonpositive_mass():
    with pytest.raises(ValueError):
        SobolevParams(Scalar.exact(2), Scalar.exact(0))
    with pytest.raises(ValueError):
        SobolevParams(Scalar.exact(2), Scalar.exact(-1))


def test_params_reject_raw_convention_in_exact_mode():
    with pytest.raises(ModeError):
        SobolevParams(Scalar.exact(2), Scalar.exact(1), RAW)


def test_params_reject_mixed_modes():
    with pytest.raises(ModeError):
        SobolevParams(Scalar.exact(2), Scalar.inexact(1, 128))


# -- inner product --------------------------------------------------------------


def test_inner_product_examples(sfam_half):
    ctx = sfam_half.ctx
    one = ctx.one_poly()
    x = ctx.x_poly()
    x2 = ctx.poly([0, 0, 1])
    assert sfam_half.inner_product(one, one) == 1
    assert sfam_half.inner_product(x, x) == Fraction(3, 2)
    assert sfam_half.inner_product(x2, x) == 3
    assert sfam_half.inner_product(x, x2) == 3


def test_inner_product_positive_definite(sfam_half):
    rng = random.Random(11)
    ctx = sfam_half.ctx
    for _ in range(10):
        coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(8)]
        p = ctx.poly(coeffs)
        if p.is_zero:
            continue
        assert sfam_half.inner_product(p, p) > 0


def test_expand_in_h_alias(fam_half):
    ctx = fam_half.ctx
    assert expand_in_H(fam_half, ctx.poly([0, 0, 1]))[0] == Fraction(1, 2)


# -- the perturbed family ----------------------------------------------------------


def test_s0_and_s1_are_unperturbed():
    for q, alpha, mass in PARAMS_GRID:
        sfam = make_family(q, alpha, mass)
        assert sfam.s_poly(0) == sfam.ctx.one_poly()
        assert sfam.s_poly(1) == sfam.ctx.x_poly()


def test_s2_frozen_value(sfam_half):
    assert sfam_half.s_poly(2) == sfam_half.ctx.poly([Fraction(-1, 2), -2, 1])


def test_s_poly_monic_of_degree_n():
    for q, alpha, mass in PARAMS_GRID:
        sfam = make_family(q, alpha, mass)
        for n in range(9):
            s = sfam.s_poly(n)
            assert s.degree == n
            assert s.leading == 1


def test_zero_mass_recovers_base(fam_half):
    params = SobolevParams._unvalidated(Scalar.exact(2), Scalar.exact(0))
    sfam = SobolevFamily(fam_half, params)
    for n in range(16):
        assert sfam.s_poly(n) == fam_half.hermite(n)


def test_orthogonality_against_lower_monomials():
    for q, alpha, mass in PARAMS_GRID:
        sfam = make_family(q, alpha, mass)
        for n in range(1, 9):
            sn = sfam.s_poly(n)
            for k in range(n):
                xk = Poly.monomial(k, sfam.ctx.one)
                assert sfam.inner_product(sn, xk).is_zero


def test_gram_schmidt_oracle_examples(sfam_half):
    assert sfam_half.gram_schmidt_oracle(0) == sfam_half.ctx.one_poly()
    assert sfam_half.gram_schmidt_oracle(2) == sfam_half.ctx.poly(
        [Fraction(-1, 2), -2, 1]
    )


def test_gram_schmidt_matches_kernel_formula():
    for q, alpha, mass in PARAMS_GRID:
        sfam = make_family(q, alpha, mass)
        for n in range(7):
            assert sfam.gram_schmidt_oracle(n) == sfam.s_poly(n)


def test_gram_schmidt_is_exact_only(float_ctx):
    fam = HermiteFamily(float_ctx, 3)
    params = SobolevParams(
        Scalar.inexact(2, float_ctx.prec), Scalar.inexact(1, float_ctx.prec), RAW
    )
    sfam = SobolevFamily(fam, params)
    with pytest.raises(ModeError):
        sfam.gram_schmidt_oracle(2)


# -- derivative data -----------------------------------------------------------------


def test_dq_s_at_alpha_examples(sfam_half):
    assert sfam_half.dq_s_at_alpha(1) == 1
    assert sfam_half.dq_s_at_alpha(2) == 1
    assert sfam_half.dq_s_at_alpha(3) == Fraction(49, 408)


def test_dq_s_poly_examples(sfam_half):
    ctx = sfam_half.ctx
    assert sfam_half.dq_s_poly(1) == ctx.one_poly()
    assert sfam_half.dq_s_poly(2) == ctx.poly([-2, Fraction(3, 2)])


def test_dq_s_consistency():
    for q, alpha, mass in PARAMS_GRID:
        sfam = make_family(q, alpha, mass)
        for n in range(1, 13):
            direct = q_derivative(sfam.s_poly(n), sfam.ctx)
            assert direct == sfam.dq_s_poly(n)
            assert direct(sfam.alpha) == sfam.dq_s_at_alpha(n)


def test_projection_extremality():
    for q, alpha, mass in PARAMS_GRID:
        sfam = make_family(q, alpha, mass)
        for n in range(1, 9):
            sn = sfam.s_poly(n)
            hn = sfam.base.hermite(n)
            d = q_derivative(hn, sfam.ctx)(sfam.alpha)
            bound = sfam.base.norm_sq_normalized(n) + sfam.effective_mass * d * d
            assert sfam.inner_product(sn, sn) <= bound


# -- connection coefficients ------------------------------------------------------------


def test_connection_identities(sfam_half):
    fam = sfam_half.base
    for n in (2, 3, 5, 8):
        cc = sfam_half.connection_coeffs(n)
        hn, hm = fam.hermite(n), fam.hermite(n - 1)
        sn, sm = sfam_half.s_poly(n), sfam_half.s_poly(n - 1)
        assert cc.E1 * hn + cc.F1 * hm == sn
        assert cc.E2 * hn + cc.F2 * hm == sm
        assert cc.E3 * hn + cc.F3 * hm == q_derivative(sn, sfam_half.ctx)
        assert cc.Xi * hn == cc.F2 * sn - cc.F1 * sm
        assert cc.Xi * hm == -(cc.E2 * sn - cc.E1 * sm)
        assert cc.Xi == cc.E1 * cc.F2 - cc.E2 * cc.F1
        assert cc.E4 == -(cc.E2 * cc.F3 - cc.E3 * cc.F2)
        assert cc.F4 == cc.E1 * cc.F3 - cc.E3 * cc.F1


def test_connection_rejects_small_n(sfam_half):
    with pytest.raises(ValueError):
        sfam_half.connection_coeffs(1)


def test_xi_and_f4_nonvanishing():
    for q, alpha, mass in PARAMS_GRID:
        sfam = make_family(q, alpha, mass)
        for n in range(2, 9):
            cc = sfam.connection_coeffs(n)
            assert not cc.Xi.is_zero
            assert not cc.F4.is_zero


# -- serialization -------------------------------------------------------------------------


def test_serialize_schema(sfam_half):
    dump = sfam_half.serialize(3)
    payload = json.loads(json.dumps(dump))
    assert payload["q"] == "1/2"
    assert payload["alpha"] == "2"
    assert payload["mass_convention"] == EFFECTIVE
    assert payload["mass"] == "1"
    assert payload["degrees"] == [0, 1, 2, 3]
    assert payload["S"][2] == ["-1/2", "-2", "1"]
    assert payload["dq_at_alpha"][2] == "1"


def test_float_mode_family_matches_exact(float_ctx, sfam_half):
    fam = HermiteFamily(float_ctx, 4)
    c = fam.norm_constant().c
    params = SobolevParams(
        Scalar.inexact(2, float_ctx.prec), c, RAW
    )  # raw mass == c means effective mass 1
    sfam = SobolevFamily(fam, params)
    assert sfam.effective_mass.approx_eq(float_ctx.one)
    exact_s2 = sfam_half.s_poly(2).to_float(float_ctx.prec)
    for got, want in zip(sfam.s_poly(2).coeffs, exact_s2.coeffs):
        assert got.approx_eq(want)
