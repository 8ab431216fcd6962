"""Sobolev-type perturbation of the q-Hermite I family.

The perturbed inner product adds a point mass acting on first-order
q-derivatives at a point alpha outside [-1, 1]:

    <f, g>_mass = <f, g> + mass * (D_q f)(alpha) (D_q g)(alpha)

The monic family S_n orthogonal under it comes out of the kernel formula

    S_n = H_n - mu_n K^(0,1)_{n-1}(x, alpha),
    mu_n = mass * [n]_q H_{n-1}(alpha) / (1 + mass * K^(1,1)_{n-1}(alpha, alpha))

and connects back to (H_n, H_{n-1}) through rational coefficient pairs
(E_i, F_i), i = 1..4, plus the determinant Xi, all computed here.

Exact mode works throughout with the *effective* mass: the raw mass
divided by the irrational norm constant c (see :mod:`qsobolev.qhermite`).
The mass and the kernels only ever enter through their product, so the
family produced is identical, and with the effective convention it is
exactly rational.  Float mode accepts the raw mass and divides c out
itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import EXACT, FLOAT, ModeError, Poly, RationalFn, Scalar
from .kernels import coeff_AB, coeff_CD
from .qcalc import jackson_weighted_integral, q_derivative, q_number
from .qhermite import HermiteFamily

EFFECTIVE = "effective"
RAW = "raw"


@dataclass(frozen=True)
class SobolevParams:
    """Mass point alpha (|alpha| > 1) and positive mass.

    ``convention`` records whether ``mass`` is the effective (exact-mode)
    or the raw (float-mode) value; raw masses make no sense in exact mode
    and are rejected.
    """

    alpha: Scalar
    mass: Scalar
    convention: str = EFFECTIVE

    def __post_init__(self):
        if self.convention not in (EFFECTIVE, RAW):
            raise ValueError(f"unknown mass convention {self.convention!r}")
        if self.alpha.mode != self.mass.mode or self.alpha.prec != self.mass.prec:
            raise ModeError("alpha and mass must share one mode")
        if abs(self.alpha) <= 1:
            raise ValueError("the mass point must lie outside [-1, 1]")
        if not self.mass > 0:
            raise ValueError("the mass must be positive")
        if self.convention == RAW and self.alpha.mode == EXACT:
            raise ModeError(
                "raw masses are a float-mode convention; exact mode needs the "
                "effective mass (raw mass divided by the norm constant)"
            )

    @classmethod
    def _unvalidated(cls, alpha: Scalar, mass: Scalar, convention: str = EFFECTIVE):
        """Bypass validation; exists so tests can drive the mass to zero
        and watch the perturbation switch off."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "alpha", alpha)
        object.__setattr__(obj, "mass", mass)
        object.__setattr__(obj, "convention", convention)
        return obj


@dataclass(frozen=True)
class ConnectionCoeffs:
    """The rational coefficient functions tying degree n to the base family:

        S_n      = E1 H_n + F1 H_{n-1}
        S_{n-1}  = E2 H_n + F2 H_{n-1}
        D_q S_n  = E3 H_n + F3 H_{n-1}
        Xi = E1 F2 - E2 F1,  E4 = -(E2 F3 - E3 F2),  F4 = E1 F3 - E3 F1
    """

    n: int
    E1: RationalFn
    F1: RationalFn
    E2: RationalFn
    F2: RationalFn
    E3: RationalFn
    F3: RationalFn
    Xi: RationalFn
    E4: RationalFn
    F4: RationalFn


class SobolevFamily:
    """The monic perturbed family S_0, S_1, ... over a base q-Hermite family.

    Caches grow monotonically; prefill by touching the largest degree
    before sharing across threads.
    """

    def __init__(self, base: HermiteFamily, params: SobolevParams):
        ctx = base.ctx
        if params.alpha.mode != ctx.mode or params.alpha.prec != ctx.prec:
            raise ModeError("parameter mode does not match the family context")
        self.base = base
        self.ctx = ctx
        self.params = params
        if params.convention == EFFECTIVE:
            self.effective_mass = params.mass
        else:
            self.effective_mass = params.mass / base.norm_constant().c
        self._s: dict[int, Poly] = {}
        self._e1f1: dict[int, tuple[RationalFn, RationalFn]] = {}
        self._conn: dict[int, ConnectionCoeffs] = {}

    @property
    def alpha(self) -> Scalar:
        return self.params.alpha

    def raw_mass(self) -> Scalar:
        """The raw mass (float mode only: the effective one times c)."""
        if self.params.convention == RAW:
            return self.params.mass
        self.ctx.require_float("raw_mass")
        return self.effective_mass * self.base.norm_constant().c

    # -- construction ---------------------------------------------------------

    def perturbation_scale(self, n: int) -> Scalar:
        """mu_n = mass [n]_q H_{n-1}(alpha) / (1 + mass K^(1,1)_{n-1}(a, a)),
        the multiplier in front of the kernel in S_n (n >= 1).  The
        denominator is positive, so this is always finite."""
        if n < 1:
            raise ValueError("perturbation_scale needs n >= 1")
        lam = self.effective_mass
        numer = lam * q_number(n, self.ctx) * self.base.hermite(n - 1)(self.alpha)
        denom = 1 + lam * self.base.kernel11_at(n, self.alpha)
        return numer / denom

    def s_poly(self, n: int) -> Poly:
        """S_n = H_n - mu_n K^(0,1)_{n-1}(x, alpha); monic of degree n."""
        if n < 0:
            raise ValueError("polynomial degree must be >= 0")
        hit = self._s.get(n)
        if hit is None:
            if n == 0:
                hit = self.base.hermite(0)
            else:
                kernel = self.base.kernel_poly(n - 1, 0, 1, self.alpha)
                hit = self.base.hermite(n) - kernel * self.perturbation_scale(n)
            self._s[n] = hit
        return hit

    def dq_s_at_alpha(self, n: int) -> Scalar:
        """(D_q S_n)(alpha) = [n]_q H_{n-1}(alpha) / (1 + mass K^(1,1))."""
        if n < 1:
            raise ValueError("dq_s_at_alpha needs n >= 1")
        numer = q_number(n, self.ctx) * self.base.hermite(n - 1)(self.alpha)
        denom = 1 + self.effective_mass * self.base.kernel11_at(n, self.alpha)
        return numer / denom

    def dq_s_poly(self, n: int) -> Poly:
        """D_q S_n in closed form:
        [n]_q H_{n-1} - mu_n K^(1,1)_{n-1}(x, alpha)."""
        if n < 1:
            raise ValueError("dq_s_poly needs n >= 1")
        lead = self.base.hermite(n - 1) * q_number(n, self.ctx)
        kernel = self.base.kernel_poly(n - 1, 1, 1, self.alpha)
        return lead - kernel * self.perturbation_scale(n)

    # -- inner product and oracle ----------------------------------------------

    def inner_product(self, f: Poly, g: Poly) -> Scalar:
        """The perturbed inner product.

        Exact mode evaluates the continuous part through the orthogonal
        expansion, sum_k f_k g_k nu_k, i.e. with the norm constant divided
        out, matching the effective-mass convention.  Float mode integrates
        f g against the weight on the lattice and uses the raw mass.
        """
        ctx = self.ctx
        df = q_derivative(f, ctx)(self.alpha)
        dg = q_derivative(g, ctx)(self.alpha)
        if ctx.mode == EXACT:
            fk = self.base.expand(f)
            gk = self.base.expand(g)
            out = ctx.zero
            for k in range(min(len(fk), len(gk))):
                out = out + fk[k] * gk[k] * self.base.norm_sq_normalized(k)
            return out + self.effective_mass * df * dg
        integral = jackson_weighted_integral(f * g, ctx)
        return integral + self.raw_mass() * df * dg

    def gram_schmidt_oracle(self, n: int) -> Poly:
        """Monic degree-n polynomial from classical Gram-Schmidt on
        1, x, x^2, ... under :meth:`inner_product` (exact mode).

        Deliberately avoids the kernel formula so the two constructions
        stay independent witnesses of the same family.
        """
        self.ctx.require_exact("gram_schmidt_oracle")
        basis: list[Poly] = []
        for k in range(n + 1):
            p = Poly.monomial(k, self.ctx.one)
            for b in basis:
                coeff = self.inner_product(p, b) / self.inner_product(b, b)
                p = p - b * coeff
            basis.append(p)
        return basis[n]

    # -- connection coefficients -------------------------------------------------

    def _level_e1f1(self, n: int) -> tuple[RationalFn, RationalFn]:
        """E1, F1 at one degree: E1 = 1 - mu_n A_n, F1 = -mu_n B_n."""
        hit = self._e1f1.get(n)
        if hit is None:
            a, b = coeff_AB(self.base, n, self.alpha)
            mu = self.perturbation_scale(n)
            one = RationalFn(self.ctx.one_poly())
            hit = (one - a * mu, -(b * mu))
            self._e1f1[n] = hit
        return hit

    def connection_coeffs(self, n: int) -> ConnectionCoeffs:
        """All connection data at degree n >= 2 (lower degrees lack the
        gamma_{n-1} and K^(1,1) structure the formulas reference)."""
        if n < 2:
            raise ValueError("connection_coeffs needs n >= 2")
        hit = self._conn.get(n)
        if hit is not None:
            return hit
        ctx = self.ctx
        e1, f1 = self._level_e1f1(n)
        e1_prev, f1_prev = self._level_e1f1(n - 1)
        e2 = -(f1_prev / self.base.gamma(n - 1))
        f2 = e1_prev - ctx.x_poly() * e2
        c, d = coeff_CD(self.base, n, self.alpha)
        mu = self.perturbation_scale(n)
        e3 = -(c * mu)
        f3 = q_number(n, ctx) - d * mu
        xi = e1 * f2 - e2 * f1
        e4 = -(e2 * f3 - e3 * f2)
        f4 = e1 * f3 - e3 * f1
        hit = ConnectionCoeffs(
            n=n, E1=e1, F1=f1, E2=e2, F2=f2, E3=e3, F3=f3, Xi=xi, E4=e4, F4=f4
        )
        self._conn[n] = hit
        return hit

    # -- serialization ------------------------------------------------------------

    def serialize(self, n_max: int) -> dict:
        """JSON-ready dump of the family up to degree ``n_max``."""
        from .algebra import poly_to_strings, scalar_to_str

        dq = [scalar_to_str(self.ctx.zero)]
        dq += [scalar_to_str(self.dq_s_at_alpha(n)) for n in range(1, n_max + 1)]
        return {
            "q": scalar_to_str(self.ctx.q),
            "alpha": scalar_to_str(self.alpha),
            "mass_convention": self.params.convention,
            "mass": scalar_to_str(self.params.mass),
            "degrees": list(range(n_max + 1)),
            "S": [poly_to_strings(self.s_poly(n)) for n in range(n_max + 1)],
            "dq_at_alpha": dq,
        }


def expand_in_H(family: HermiteFamily, p: Poly) -> list[Scalar]:
    """Coefficients of ``p`` in the monic q-Hermite basis."""
    return family.expand(p)
