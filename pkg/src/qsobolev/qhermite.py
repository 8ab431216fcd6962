"""Monic q-Hermite I polynomials.

Three-term recurrence, squared norms, forward shift, the second-order
q-difference equation, and the reproducing (Christoffel-Darboux) kernel
with first-order partial q-derivatives computed by direct summation.  The
summed kernels are the ground truth every closed form downstream is
validated against.

Norms are kept *normalized*: the recurrence gives
``<H_m, H_n> = c * nu_n * delta_mn`` with ``nu_n = (q; q)_n q^(n(n-1)/2)``
rational and ``c = (1-q)(q, -1, -q; q)_inf`` an n-independent irrational
constant.  All exact computation works with ``nu_n`` and divides ``c`` out;
float-mode helpers reattach it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Poly, QContext, Scalar
from .qcalc import (
    q_derivative,
    q_derivative_inv,
    q_derivative_iter,
    q_falling,
    q_number,
    q_number_ext,
    q_pochhammer_inf,
    jackson_weighted_integral,
)


@dataclass(frozen=True)
class NormConstant:
    """The n-independent norm prefactor c = (1-q)(q, -1, -q; q)_inf
    (float mode), with the absolute truncation error of its computation."""

    c: Scalar
    tail_bound: Scalar


class HermiteFamily:
    """The monic family H_0, H_1, ... for one fixed q.

    Caches polynomials, recurrence coefficients and normalized norms up to
    the largest degree requested.  Build it up front (``max_degree``) if the
    family will be read from several threads; lazy growth is not
    synchronized.
    """

    def __init__(self, ctx: QContext, max_degree: int = 0):
        self.ctx = ctx
        self._polys = [ctx.one_poly(), ctx.x_poly()]
        self._gammas = [None]  # gamma_n defined for n >= 1
        self._nus = [ctx.one]
        self._norm_constant: NormConstant | None = None
        self._ensure(max_degree)

    def _ensure(self, n: int) -> None:
        ctx = self.ctx
        x = ctx.x_poly()
        while len(self._gammas) <= max(n, 1):
            m = len(self._gammas)  # defining gamma_m
            self._gammas.append(ctx.qpow(m - 1) * (1 - ctx.qpow(m)))
            self._nus.append(self._nus[-1] * self._gammas[-1])
        while len(self._polys) <= n:
            m = len(self._polys) - 1  # building H_{m+1}
            self._polys.append(x * self._polys[m] - self._polys[m - 1] * self._gammas[m])

    # -- recurrence data ----------------------------------------------------

    def hermite(self, n: int) -> Poly:
        """H_n, monic of degree n, from H_{n+1} = x H_n - gamma_n H_{n-1}."""
        if n < 0:
            raise ValueError("polynomial degree must be >= 0")
        self._ensure(n)
        return self._polys[n]

    def gamma(self, n: int) -> Scalar:
        """Recurrence coefficient gamma_n = q^(n-1) (1 - q^n), n >= 1."""
        if n < 1:
            raise ValueError("gamma_n is defined for n >= 1")
        self._ensure(n)
        return self._gammas[n]

    def norm_sq_normalized(self, n: int) -> Scalar:
        """nu_n = (q; q)_n q^(n(n-1)/2), the squared norm with the constant
        prefactor divided out.  Satisfies nu_n = gamma_n nu_{n-1}."""
        if n < 0:
            raise ValueError("norm index must be >= 0")
        self._ensure(n)
        return self._nus[n]

    def norm_constant(self) -> NormConstant:
        """c = (1-q)(q; q)_inf (-1; q)_inf (-q; q)_inf (float mode)."""
        self.ctx.require_float("norm_constant")
        if self._norm_constant is None:
            ctx = self.ctx
            tol = ctx.tail_tol / 8
            c = (1 - ctx.q)
            for a in (ctx.q, ctx.scalar(-1), -ctx.q):
                c = c * q_pochhammer_inf(a, ctx, tol)
            rel = 3 * tol + 3 * tol * tol
            self._norm_constant = NormConstant(c=c, tail_bound=rel * abs(c))
        return self._norm_constant

    def norm_sq_absolute(self, n: int) -> Scalar:
        """||H_n||^2 = c * nu_n (float mode)."""
        return self.norm_constant().c * self.norm_sq_normalized(n)

    # -- operators -----------------------------------------------------------

    def dq_hermite(self, n: int, k: int = 1) -> Poly:
        """Forward shift: D_q^k H_n = [n]_q^(k) H_{n-k}; zero once k > n."""
        if n < 0 or k < 0:
            raise ValueError("indices must be >= 0")
        if k > n:
            return self.ctx.zero_poly()
        return self.hermite(n - k) * q_falling(n, k, self.ctx)

    def difference_eq_residual(self, n: int) -> Poly:
        """Residual of the second-order q-difference equation
        (x^2 - 1) D_q D_{q^-1} H_n + x/(1-q) D_q H_n + lam_n H_n, with
        lam_n = [n]_q ([1-n]_q - 1/(1-q)); identically zero for a correct
        recurrence."""
        ctx = self.ctx
        h = self.hermite(n)
        sigma = ctx.poly([-1, 0, 1])
        tau = ctx.poly([0, ctx.one / (1 - ctx.q)])
        lam = q_number(n, ctx) * (q_number_ext(1 - n, ctx) - 1 / (1 - ctx.q))
        return (
            sigma * q_derivative(q_derivative_inv(h, ctx), ctx)
            + tau * q_derivative(h, ctx)
            + h * lam
        )

    # -- kernels --------------------------------------------------------------

    def kernel_poly(self, n: int, i: int, j: int, y) -> Poly:
        """Summed reproducing kernel with partial q-derivatives,
        sum_{k<=n} (D_q^i H_k)(x) (D_q^j H_k)(y) / nu_k, as a polynomial in
        x with y a bound number.  Derivatives are applied by the operator
        itself, keeping this independent of the closed forms it oracles."""
        if i not in (0, 1) or j not in (0, 1):
            raise ValueError("kernel derivative orders are 0 or 1")
        ctx = self.ctx
        y = ctx.scalar(y)
        out = ctx.zero_poly()
        for k in range(n + 1):
            h = self.hermite(k)
            dx = q_derivative_iter(h, i, ctx)
            dy = q_derivative_iter(h, j, ctx)(y)
            if dx.is_zero or dy.is_zero:
                continue
            out = out + dx * (dy / self.norm_sq_normalized(k))
        return out

    def kernel_cd(self, n: int, y) -> Poly:
        """The kernel via the Christoffel-Darboux quotient
        [H_{n+1}(x) H_n(y) - H_{n+1}(y) H_n(x)] / ((x - y) nu_n); the
        division is exact, and failure of exactness signals a recurrence
        bug."""
        ctx = self.ctx
        y = ctx.scalar(y)
        hi, lo = self.hermite(n + 1), self.hermite(n)
        numerator = hi * lo(y) - lo * hi(y)
        linear = ctx.poly([-y, 1])
        return numerator.divexact(linear) * (ctx.one / self.norm_sq_normalized(n))

    def kernel11_at(self, n: int, alpha) -> Scalar:
        """K^(1,1)_{n-1}(alpha, alpha) = sum_{k<n} (D_q H_k)(alpha)^2 / nu_k,
        a sum of squares, hence strictly positive for n >= 2."""
        if n < 1:
            raise ValueError("kernel11_at needs n >= 1")
        ctx = self.ctx
        alpha = ctx.scalar(alpha)
        out = ctx.zero
        for k in range(1, n):
            d = q_derivative(self.hermite(k), ctx)(alpha)
            out = out + d * d / self.norm_sq_normalized(k)
        return out

    def expand(self, p: Poly) -> list[Scalar]:
        """Coefficients c_k with p = sum c_k H_k, by leading-term
        elimination against the monic family; exact in exact mode."""
        if p.mode != self.ctx.mode or p.prec != self.ctx.prec:
            raise ValueError("polynomial mode does not match the family")
        if p.is_zero:
            return []
        out = [self.ctx.zero] * (p.degree + 1)
        rem = p
        while not rem.is_zero:
            d = rem.degree
            c = rem.leading
            out[d] = c
            rem = rem - self.hermite(d) * c
            if not rem.is_zero and rem.degree >= d:
                raise ArithmeticError("expansion failed to reduce the degree")
        return out

    def orthogonality_check(self, m: int, n: int) -> Scalar:
        """Float-mode cross-check: the Jackson integral of H_m H_n against
        the weight.  Equals c nu_n delta_mn up to truncation error."""
        self.ctx.require_float("orthogonality_check")
        return jackson_weighted_integral(self.hermite(m) * self.hermite(n), self.ctx)
