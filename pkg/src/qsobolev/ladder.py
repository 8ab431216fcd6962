"""Degree-lowering operator for the perturbed family.

At each degree n >= 2 the connection data of :mod:`qsobolev.sobolev`
assembles into a first-order q-difference operator

    a_n = (1 / F4) (Xi D_q - E4 I)

with a_n S_n = S_{n-1}.  The identity is verified here as an *exact*
polynomial statement: the rational function Xi D_q S_n - E4 S_n - F4 S_{n-1}
must normalize to zero, and a_n S_n must normalize to a denominator-free
rational function equal to S_{n-1} coefficient for coefficient.
"""

from __future__ import annotations

from .algebra import DivisibilityError, Poly, RationalFn
from .qcalc import q_derivative
from .sobolev import ConnectionCoeffs, SobolevFamily


class LadderError(ArithmeticError):
    """The lowering identity failed exactly; the connection coefficients
    upstream are wrong (this is never a rounding artifact in exact mode)."""


class AnnihilationOperator:
    """The lowering operator at one degree, materialized from Xi, E4, F4."""

    def __init__(self, sfam: SobolevFamily, n: int):
        if n < 2:
            raise ValueError(
                "the lowering operator is defined for n >= 2; degree 1 lacks "
                "the degree-(n-2) connection data it is built from"
            )
        self.sfam = sfam
        self.n = n
        conn = sfam.connection_coeffs(n)
        if conn.F4.is_zero:
            raise LadderError(
                f"F4 vanishes identically at n={n}, q={sfam.ctx.q}, "
                f"alpha={sfam.alpha}, mass={sfam.params.mass}: operator undefined"
            )
        self.coeffs: ConnectionCoeffs = conn

    def apply(self, p: Poly) -> RationalFn:
        """(Xi D_q p - E4 p) / F4 for an arbitrary polynomial."""
        dp = q_derivative(p, self.sfam.ctx)
        return (self.coeffs.Xi * dp - self.coeffs.E4 * p) / self.coeffs.F4

    def annihilate(self) -> Poly:
        """Apply the operator to S_n; the result must collapse to the
        polynomial S_{n-1} exactly, else :class:`LadderError`."""
        out = self.apply(self.sfam.s_poly(self.n))
        try:
            lowered = out.as_poly()
        except DivisibilityError as exc:
            raise LadderError(
                f"lowering S_{self.n} left a nonpolynomial remainder: {exc}"
            ) from exc
        if lowered != self.sfam.s_poly(self.n - 1):
            raise LadderError(
                f"lowering S_{self.n} produced a wrong polynomial: {lowered}"
            )
        return lowered

    def residual(self) -> RationalFn:
        """Xi D_q S_n - E4 S_n - F4 S_{n-1}; identically zero when the
        connection data is consistent.  Exposed separately so a violation
        can be reported through its numerator coefficients."""
        c = self.coeffs
        return residual_with(self.sfam, self.n, c.Xi, c.E4, c.F4)


def residual_with(
    sfam: SobolevFamily, n: int, xi: RationalFn, e4: RationalFn, f4: RationalFn
) -> RationalFn:
    """The lowering residual for explicit coefficient functions; lets a
    caller perturb one coefficient and watch the identity break."""
    dq_s = q_derivative(sfam.s_poly(n), sfam.ctx)
    return xi * dq_s - e4 * sfam.s_poly(n) - f4 * sfam.s_poly(n - 1)
