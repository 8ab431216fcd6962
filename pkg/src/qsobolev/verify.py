"""Verification suites.

Every identity the library claims is checked here as an executable case:
exact claims with tolerance zero (rational equality of polynomials or
rational functions), float claims against a-priori truncation bounds.  The
suites run over a built-in parameter grid

    q in {1/3, 1/2, 7/10}, alpha in {5/4, -5/4, 2, -3},
    effective mass in {1/10, 1, 10}

(intersected with any caller overrides) so one ``verify all`` run
reproduces the whole battery.  The same case generators back both the CLI
``verify`` subcommand and the pytest acceptance tests.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poly, QContext, RationalFn, Scalar
from .kernels import coeff_AB, coeff_CD
from .ladder import AnnihilationOperator, LadderError, residual_with
from .qcalc import (
    WeightTable,
    jackson_weighted_integral,
    q_binomial,
    q_derivative,
    q_number,
    q_pochhammer,
    q_sub_power,
    q_sub_power_sum,
    q_taylor,
    q_taylor_reconstruct,
)
from .qhermite import HermiteFamily
from .sobolev import SobolevFamily, SobolevParams

DEFAULT_QS = (Fraction(1, 3), Fraction(1, 2), Fraction(7, 10))
DEFAULT_ALPHAS = (Fraction(5, 4), Fraction(-5, 4), Fraction(2), Fraction(-3))
DEFAULT_MASSES = (Fraction(1, 10), Fraction(1), Fraction(10))
KERNEL_YS = (Fraction(2), Fraction(-3), Fraction(5, 4), Fraction(-5, 4), Fraction(7))
FLOAT_QS = (Fraction(1, 2), Fraction(7, 10))

SUITES = ("qcalc", "hermite", "kernels", "sobolev", "ladder")


@dataclass(frozen=True)
class CaseResult:
    suite: str
    invariant: str
    params: dict
    status: str  # "pass" | "fail"
    witness: str | None = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"


@dataclass
class VerifyReport:
    suites: list[str]
    cases: list[CaseResult]
    wall_time: float

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.ok)

    @property
    def failed(self) -> int:
        return len(self.cases) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class VerifyConfig:
    """Grid the suites run over; ``None`` fields keep the built-in default."""

    qs: tuple[Fraction, ...] = DEFAULT_QS
    alphas: tuple[Fraction, ...] = DEFAULT_ALPHAS
    masses: tuple[Fraction, ...] = DEFAULT_MASSES
    n_cap: int | None = None
    seed: int = 20240901
    prec: int = 256
    tail_tol: str = "1e-30"
    mutate_e4: bool = False

    def cap(self, n: int) -> int:
        return n if self.n_cap is None else min(n, self.n_cap)


class FamilyGrid:
    """Lazy, shared family construction across suites (one verification run
    touches the same (q, alpha, mass) corners many times)."""

    def __init__(self, cfg: VerifyConfig):
        self.cfg = cfg
        self._hermite: dict[Fraction, HermiteFamily] = {}
        self._sobolev: dict[tuple, SobolevFamily] = {}

    def hermite(self, q: Fraction) -> HermiteFamily:
        fam = self._hermite.get(q)
        if fam is None:
            fam = HermiteFamily(QContext.exact(q))
            self._hermite[q] = fam
        return fam

    def sobolev(self, q: Fraction, alpha: Fraction, mass: Fraction) -> SobolevFamily:
        key = (q, alpha, mass)
        fam = self._sobolev.get(key)
        if fam is None:
            params = SobolevParams(Scalar.exact(alpha), Scalar.exact(mass))
            fam = SobolevFamily(self.hermite(q), params)
            self._sobolev[key] = fam
        return fam

    def corners(self):
        for q in self.cfg.qs:
            for alpha in self.cfg.alphas:
                for mass in self.cfg.masses:
                    yield q, alpha, mass


def _case(suite, invariant, params, ok, witness=None) -> CaseResult:
    return CaseResult(
        suite=suite,
        invariant=invariant,
        params={k: str(v) for k, v in params.items()},
        status="pass" if ok else "fail",
        witness=witness,
    )


def _rand_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def _rand_poly(ctx: QContext, rng: random.Random, degree: int) -> Poly:
    coeffs = [_rand_fraction(rng) for _ in range(degree)]
    coeffs.append(Fraction(rng.randint(1, 9), rng.randint(1, 9)))
    return ctx.poly(coeffs)


# -- acceptance checks, one per criterion -------------------------------------


def check_annihilation(grid: FamilyGrid) -> list[CaseResult]:
    """Exact lowering a_n S_n = S_{n-1} over the full grid, n in [2, 12].

    Each case also records the residual Xi D_q S_n - E4 S_n - F4 S_{n-1}
    through its degree and largest numerator coefficient."""
    cfg = grid.cfg
    out = []
    for q, alpha, mass in grid.corners():
        sfam = grid.sobolev(q, alpha, mass)
        for n in range(2, cfg.cap(12) + 1):
            op = AnnihilationOperator(sfam, n)
            res = op.residual()
            ok = res.is_zero
            if ok:
                try:
                    ok = op.annihilate() == sfam.s_poly(n - 1)
                except LadderError:
                    ok = False
            max_coeff = (
                "0"
                if res.is_zero
                else str(max(abs(c.as_fraction()) for c in res.num.coeffs))
            )
            out.append(
                _case(
                    "ladder",
                    "annihilation_lowers_degree",
                    {
                        "n": n,
                        "q": q,
                        "alpha": alpha,
                        "mass": mass,
                        "residual_degree": res.num.degree if not res.is_zero else "-inf",
                        "max_abs_numerator_coeff": max_coeff,
                    },
                    ok,
                    witness=None if ok else f"residual numerator: {res.num}",
                )
            )
    return out


def check_sobolev_orthogonality(grid: FamilyGrid) -> list[CaseResult]:
    """<S_n, x^k> = 0 exactly for k < n <= 12, and the kernel construction
    coincides with Gram-Schmidt for n <= 10, over the full grid."""
    cfg = grid.cfg
    out = []
    for q, alpha, mass in grid.corners():
        sfam = grid.sobolev(q, alpha, mass)
        ctx = sfam.ctx
        for n in range(1, cfg.cap(12) + 1):
            sn = sfam.s_poly(n)
            bad = [
                k
                for k in range(n)
                if not sfam.inner_product(sn, Poly.monomial(k, ctx.one)).is_zero
            ]
            out.append(
                _case(
                    "sobolev",
                    "perturbed_orthogonality",
                    {"n": n, "q": q, "alpha": alpha, "mass": mass},
                    not bad,
                    witness=None if not bad else f"nonzero against x^{bad}",
                )
            )
        for n in range(cfg.cap(10) + 1):
            ok = sfam.gram_schmidt_oracle(n) == sfam.s_poly(n)
            out.append(
                _case(
                    "sobolev",
                    "kernel_formula_matches_gram_schmidt",
                    {"n": n, "q": q, "alpha": alpha, "mass": mass},
                    ok,
                )
            )
    return out


def check_kernel_closed_forms(grid: FamilyGrid) -> list[CaseResult]:
    """A H_n + B H_{n-1} and C H_n + D H_{n-1} reproduce the summed kernels
    exactly for 2 <= n <= 12 and five rational y per q."""
    cfg = grid.cfg
    out = []
    for q in cfg.qs:
        fam = grid.hermite(q)
        for y in KERNEL_YS:
            for n in range(2, cfg.cap(12) + 1):
                a, b = coeff_AB(fam, n, y)
                lhs01 = a * fam.hermite(n) + b * fam.hermite(n - 1)
                ok01 = lhs01 == fam.kernel_poly(n - 1, 0, 1, y)
                out.append(
                    _case(
                        "kernels",
                        "kernel01_two_term_connection",
                        {"n": n, "q": q, "y": y},
                        ok01,
                    )
                )
                c, d = coeff_CD(fam, n, y)
                lhs11 = c * fam.hermite(n) + d * fam.hermite(n - 1)
                ok11 = lhs11 == fam.kernel_poly(n - 1, 1, 1, y)
                out.append(
                    _case(
                        "kernels",
                        "kernel11_two_term_connection",
                        {"n": n, "q": q, "y": y},
                        ok11,
                    )
                )
    return out


def check_hermite_core(grid: FamilyGrid) -> list[CaseResult]:
    """Recurrence output satisfies parity, forward shift, the second-order
    q-difference equation, and the Christoffel-Darboux identity, n <= 20."""
    cfg = grid.cfg
    out = []
    for q in cfg.qs:
        fam = grid.hermite(q)
        ctx = fam.ctx
        n_hi = cfg.cap(20)
        parity_bad = [
            n
            for n in range(cfg.cap(25) + 1)
            if fam.hermite(n).reflected()
            != (fam.hermite(n) if n % 2 == 0 else -fam.hermite(n))
        ]
        out.append(
            _case("hermite", "parity", {"q": q, "n_max": cfg.cap(25)}, not parity_bad)
        )
        shift_bad = [
            n
            for n in range(1, cfg.cap(25) + 1)
            if q_derivative(fam.hermite(n), ctx)
            != fam.hermite(n - 1) * q_number(n, ctx)
        ]
        out.append(
            _case(
                "hermite",
                "forward_shift",
                {"q": q, "n_max": cfg.cap(25)},
                not shift_bad,
            )
        )
        diff_bad = [
            n for n in range(n_hi + 1) if not fam.difference_eq_residual(n).is_zero
        ]
        out.append(
            _case(
                "hermite",
                "second_order_difference_equation",
                {"q": q, "n_max": n_hi},
                not diff_bad,
                witness=None if not diff_bad else f"nonzero residual at n={diff_bad}",
            )
        )
        cd_bad = []
        for n in range(n_hi + 1):
            for y in KERNEL_YS:
                if fam.kernel_cd(n, y) != fam.kernel_poly(n, 0, 0, y):
                    cd_bad.append((n, y))
        out.append(
            _case(
                "hermite",
                "christoffel_darboux_matches_sum",
                {"q": q, "n_max": n_hi},
                not cd_bad,
            )
        )
        # <H_m, H_n> equals the H_0 coefficient of expand(H_m H_n): every
        # higher basis element integrates to zero against the weight
        ortho_bad = []
        n_ortho = cfg.cap(20)
        for m in range(n_ortho + 1):
            for n in range(m, n_ortho + 1):
                coeffs = fam.expand(fam.hermite(m) * fam.hermite(n))
                inner = coeffs[0] if coeffs else ctx.zero
                want = fam.norm_sq_normalized(n) if m == n else ctx.zero
                if inner != want:
                    ortho_bad.append((m, n))
        out.append(
            _case(
                "hermite",
                "exact_orthogonality_via_expansion",
                {"q": q, "n_max": n_ortho},
                not ortho_bad,
                witness=None if not ortho_bad else f"pairs {ortho_bad[:4]}",
            )
        )
    return out


def check_float_orthogonality(grid: FamilyGrid) -> list[CaseResult]:
    """Jackson integrals of H_m H_n against the closed-form norms, m, n <= 8,
    at 256-bit precision: diagonal relative error and off-diagonal size both
    within 1e-25 of the norm scale sqrt(|H_m|^2 |H_n|^2)."""
    cfg = grid.cfg
    out = []
    qs = [q for q in FLOAT_QS if q in cfg.qs]
    n_hi = cfg.cap(8)
    for q in qs:
        ctx = QContext.inexact(q, cfg.prec, cfg.tail_tol)
        fam = HermiteFamily(ctx, n_hi)
        table = WeightTable(ctx)
        tol = Scalar.inexact("1e-25", cfg.prec)
        c = fam.norm_constant().c
        norms = [c * fam.norm_sq_normalized(n) for n in range(n_hi + 1)]
        worst = ctx.zero
        bad = []
        for m in range(n_hi + 1):
            for n in range(m, n_hi + 1):
                integral = jackson_weighted_integral(
                    fam.hermite(m) * fam.hermite(n), ctx, table
                )
                if m == n:
                    err = abs(integral - norms[n]) / norms[n]
                else:
                    err = abs(integral) / (norms[m] * norms[n]).sqrt()
                worst = max(worst, err)
                if not err <= tol:
                    bad.append((m, n))
        out.append(
            _case(
                "qcalc",
                "jackson_orthogonality_256bit",
                {"q": q, "n_max": n_hi, "worst_rel_err": worst},
                not bad,
                witness=None if not bad else f"pairs {bad}",
            )
        )
    return out


def check_connection_identities(grid: FamilyGrid) -> list[CaseResult]:
    """The five two-term connection identities, as cleared-denominator
    polynomial identities, n <= 10 over the full grid."""
    cfg = grid.cfg
    out = []
    for q, alpha, mass in grid.corners():
        sfam = grid.sobolev(q, alpha, mass)
        fam = sfam.base
        for n in range(2, cfg.cap(10) + 1):
            cc = sfam.connection_coeffs(n)
            hn, hm = fam.hermite(n), fam.hermite(n - 1)
            sn, sm = sfam.s_poly(n), sfam.s_poly(n - 1)
            dq_sn = q_derivative(sn, sfam.ctx)
            checks = {
                "connection_S_n": cc.E1 * hn + cc.F1 * hm == sn,
                "connection_S_n_minus_1": cc.E2 * hn + cc.F2 * hm == sm,
                "connection_Dq_S_n": cc.E3 * hn + cc.F3 * hm == dq_sn,
                "determinant_times_H_n": cc.Xi * hn == cc.F2 * sn - cc.F1 * sm,
                "determinant_times_H_n_minus_1": cc.Xi * hm
                == -(cc.E2 * sn - cc.E1 * sm),
            }
            for invariant, ok in checks.items():
                out.append(
                    _case(
                        "sobolev",
                        invariant,
                        {"n": n, "q": q, "alpha": alpha, "mass": mass},
                        ok,
                    )
                )
    return out


def check_degeneration(grid: FamilyGrid) -> list[CaseResult]:
    """Mass 0 reproduces the base family exactly (n <= 15); a huge mass
    saturates the degree-1 coefficient of S_2 at 3 alpha / 2 for q = 1/2."""
    cfg = grid.cfg
    out = []
    for q in cfg.qs:
        fam = grid.hermite(q)
        for alpha in cfg.alphas:
            params = SobolevParams._unvalidated(
                Scalar.exact(alpha), Scalar.exact(0)
            )
            sfam = SobolevFamily(fam, params)
            bad = [
                n
                for n in range(cfg.cap(15) + 1)
                if sfam.s_poly(n) != fam.hermite(n)
            ]
            out.append(
                _case(
                    "sobolev",
                    "zero_mass_recovers_base_family",
                    {"q": q, "alpha": alpha, "n_max": cfg.cap(15)},
                    not bad,
                )
            )
    q = Fraction(1, 2)
    fam = grid.hermite(q)
    for alpha in cfg.alphas:
        big = Fraction(10**6)
        sfam = SobolevFamily(
            fam, SobolevParams(Scalar.exact(alpha), Scalar.exact(big))
        )
        got = sfam.s_poly(2).coeff(1).as_fraction()
        target = -Fraction(3, 2) * alpha
        ok = abs(got - target) <= abs(target) * Fraction(1, 10**5)
        out.append(
            _case(
                "sobolev",
                "large_mass_saturates_s2_coefficient",
                {"q": q, "alpha": alpha, "mass": big},
                ok,
                witness=None if ok else f"coefficient {got} vs limit {target}",
            )
        )
    return out


def check_mutation_sensitivity(grid: FamilyGrid) -> list[CaseResult]:
    """Perturbing E4 by +1 must break the lowering identity at every grid
    point (the identity checks are not vacuous); the broken residual equals
    -S_n by linearity."""
    cfg = grid.cfg
    out = []
    for q, alpha, mass in grid.corners():
        sfam = grid.sobolev(q, alpha, mass)
        for n in range(2, cfg.cap(12) + 1):
            cc = sfam.connection_coeffs(n)
            res = residual_with(sfam, n, cc.Xi, cc.E4 + 1, cc.F4)
            ok = (not res.is_zero) and res == -RationalFn(sfam.s_poly(n))
            out.append(
                _case(
                    "ladder",
                    "e4_mutation_breaks_residual",
                    {"n": n, "q": q, "alpha": alpha, "mass": mass},
                    ok,
                )
            )
    return out


# -- additional per-module property cases -------------------------------------


def _suite_qcalc(grid: FamilyGrid) -> list[CaseResult]:
    cfg = grid.cfg
    rng = random.Random(cfg.seed)
    out = []
    for q in cfg.qs:
        ctx = QContext.exact(q)
        ok_rules = True
        witness = None
        for _ in range(10):
            f = _rand_poly(ctx, rng, rng.randint(0, 8))
            g = _rand_poly(ctx, rng, rng.randint(0, 8))
            prod = q_derivative(f * g, ctx)
            first = f.scale_arg(ctx.q) * q_derivative(g, ctx) + g * q_derivative(f, ctx)
            second = f * q_derivative(g, ctx) + g.scale_arg(ctx.q) * q_derivative(f, ctx)
            if prod != first or prod != second:
                ok_rules, witness = False, f"f={f}, g={g}"
                break
        out.append(_case("qcalc", "product_rule_both_forms", {"q": q}, ok_rules, witness))

        ok_sub = all(
            q_sub_power(y, n, ctx) == q_sub_power_sum(y, n, ctx)
            for n in range(9)
            for y in (_rand_fraction(rng) for _ in range(10))
        )
        out.append(_case("qcalc", "q_subtraction_product_vs_sum", {"q": q}, ok_sub))

        ok_taylor = True
        for _ in range(8):
            p = _rand_poly(ctx, rng, rng.randint(0, 10))
            a = _rand_fraction(rng)
            if q_taylor_reconstruct(q_taylor(p, a, ctx), a, ctx) != p:
                ok_taylor = False
                break
        out.append(_case("qcalc", "q_taylor_round_trip", {"q": q}, ok_taylor))

        ok_binom = all(
            q_binomial(n, k, ctx)
            == q_pochhammer(ctx.q, n, ctx)
            / (q_pochhammer(ctx.q, k, ctx) * q_pochhammer(ctx.q, n - k, ctx))
            for n in range(9)
            for k in range(n + 1)
        )
        out.append(_case("qcalc", "q_binomial_ratio_form", {"q": q}, ok_binom))

    for qf in ("0.9", "0.99", "0.999"):
        ctx = QContext.inexact(qf, cfg.prec, cfg.tail_tol)
        gap = 1 - ctx.q
        ok = all(
            abs(q_number(n, ctx) - n) <= n * n * gap for n in range(1, 11)
        )
        out.append(_case("qcalc", "q_number_classical_limit", {"q": qf}, ok))

    out.extend(check_float_orthogonality(grid))
    return out


def _suite_hermite(grid: FamilyGrid) -> list[CaseResult]:
    cfg = grid.cfg
    out = check_hermite_core(grid)
    for q in cfg.qs:
        fam = grid.hermite(q)
        ctx = fam.ctx
        bad = []
        for n in range(cfg.cap(10) + 1):
            for j in (0, 1):
                for y in KERNEL_YS[:2]:
                    lhs = q_derivative(fam.kernel_poly(n, 0, j, y), ctx)
                    if lhs != fam.kernel_poly(n, 1, j, y):
                        bad.append((n, j, y))
        out.append(
            _case(
                "hermite",
                "kernel_derivative_commutes_with_sum",
                {"q": q, "n_max": cfg.cap(10)},
                not bad,
            )
        )
        ok_ratio = all(
            fam.norm_sq_normalized(n)
            == fam.norm_sq_normalized(n - 1) * fam.gamma(n)
            for n in range(1, cfg.cap(20) + 1)
        )
        out.append(_case("hermite", "norm_ratio_is_gamma", {"q": q}, ok_ratio))
    return out


def _suite_kernels(grid: FamilyGrid) -> list[CaseResult]:
    cfg = grid.cfg
    out = check_kernel_closed_forms(grid)
    for q in cfg.qs:
        fam = grid.hermite(q)
        for alpha in cfg.alphas:
            values = [fam.kernel11_at(n, alpha) for n in range(1, cfg.cap(12) + 1)]
            ok = all(v > 0 for v in values[1:]) and all(
                a < b for a, b in zip(values[1:], values[2:])
            )
            out.append(
                _case(
                    "kernels",
                    "kernel11_positive_increasing",
                    {"q": q, "alpha": alpha},
                    ok,
                )
            )
    return out


def _suite_sobolev(grid: FamilyGrid) -> list[CaseResult]:
    cfg = grid.cfg
    out = []
    out.extend(check_sobolev_orthogonality(grid))
    out.extend(check_connection_identities(grid))
    out.extend(check_degeneration(grid))
    for q, alpha, mass in grid.corners():
        sfam = grid.sobolev(q, alpha, mass)
        ctx = sfam.ctx
        bad_dq = [
            n
            for n in range(1, cfg.cap(12) + 1)
            if q_derivative(sfam.s_poly(n), ctx) != sfam.dq_s_poly(n)
            or sfam.dq_s_poly(n)(sfam.alpha) != sfam.dq_s_at_alpha(n)
        ]
        out.append(
            _case(
                "sobolev",
                "derivative_closed_form_consistency",
                {"q": q, "alpha": alpha, "mass": mass},
                not bad_dq,
            )
        )
        bad_norm = []
        for n in range(1, cfg.cap(12) + 1):
            sn = sfam.s_poly(n)
            lhs = sfam.inner_product(sn, sn)
            hn = sfam.base.hermite(n)
            d = q_derivative(hn, ctx)(sfam.alpha)
            rhs = sfam.base.norm_sq_normalized(n) + sfam.effective_mass * d * d
            if not lhs <= rhs:
                bad_norm.append(n)
        out.append(
            _case(
                "sobolev",
                "projection_extremality_bound",
                {"q": q, "alpha": alpha, "mass": mass},
                not bad_norm,
            )
        )
        nonvanish_bad = []
        for n in range(2, cfg.cap(10) + 1):
            cc = sfam.connection_coeffs(n)
            if cc.Xi.is_zero or cc.F4.is_zero:
                nonvanish_bad.append(n)
        out.append(
            _case(
                "sobolev",
                "xi_and_f4_nonvanishing",
                {"q": q, "alpha": alpha, "mass": mass},
                not nonvanish_bad,
            )
        )
    return out


def _suite_ladder(grid: FamilyGrid) -> list[CaseResult]:
    cfg = grid.cfg
    if cfg.mutate_e4:
        return _suite_ladder_mutated(grid)
    out = check_annihilation(grid)
    out.extend(check_mutation_sensitivity(grid))
    rng = random.Random(cfg.seed)
    corners = list(grid.corners())
    for q, alpha, mass in corners[:: max(1, len(corners) // 6)]:
        sfam = grid.sobolev(q, alpha, mass)
        n = rng.randint(2, cfg.cap(12))
        op = AnnihilationOperator(sfam, n)
        c = Scalar.exact(_rand_fraction(rng) + Fraction(21, 2))
        ok = op.apply(sfam.s_poly(n) * c) == RationalFn(sfam.s_poly(n - 1) * c)
        out.append(
            _case(
                "ladder",
                "operator_linearity",
                {"n": n, "q": q, "alpha": alpha, "mass": mass, "scale": c},
                ok,
            )
        )
    return out


def _suite_ladder_mutated(grid: FamilyGrid) -> list[CaseResult]:
    """Corrupted-build canary: inject E4 + 1 into the lowering check and
    report the (expected) failures, witnesses included."""
    cfg = grid.cfg
    out = []
    for q, alpha, mass in grid.corners():
        sfam = grid.sobolev(q, alpha, mass)
        for n in range(2, cfg.cap(12) + 1):
            cc = sfam.connection_coeffs(n)
            res = residual_with(sfam, n, cc.Xi, cc.E4 + 1, cc.F4)
            out.append(
                _case(
                    "ladder",
                    "annihilation_lowers_degree",
                    {"n": n, "q": q, "alpha": alpha, "mass": mass},
                    res.is_zero,
                    witness=f"residual numerator: {res.num}",
                )
            )
    return out


_SUITE_RUNNERS = {
    "qcalc": _suite_qcalc,
    "hermite": _suite_hermite,
    "kernels": _suite_kernels,
    "sobolev": _suite_sobolev,
    "ladder": _suite_ladder,
}


def run_verification(suites, cfg: VerifyConfig | None = None) -> VerifyReport:
    """Run the named suites (or ``["all"]``) and collect a report.

    Case order is deterministic for a given config and seed; the report's
    exit semantics are ``ok`` iff no case failed.
    """
    cfg = cfg or VerifyConfig()
    if isinstance(suites, str):
        suites = [suites]
    names = list(SUITES) if "all" in suites else [s for s in SUITES if s in suites]
    unknown = set(suites) - set(SUITES) - {"all"}
    if unknown:
        raise ValueError(f"unknown suites: {sorted(unknown)}")
    grid = FamilyGrid(cfg)
    t0 = time.perf_counter()
    cases = []
    for name in names:
        cases.extend(_SUITE_RUNNERS[name](grid))
    cases.sort(key=lambda c: (c.suite, c.invariant, sorted(c.params.items())))
    return VerifyReport(
        suites=names, cases=cases, wall_time=time.perf_counter() - t0
    )
