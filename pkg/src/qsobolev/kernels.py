"""Closed forms for the kernel q-derivatives as two-term connections.

The summed kernels K^(0,1)_{n-1}(x, y) and K^(1,1)_{n-1}(x, y) of
:mod:`qsobolev.qhermite` can be written as rational-coefficient
combinations of H_n and H_{n-1}:

    K^(0,1)_{n-1}(x, y) = A_n(x, y) H_n(x) + B_n(x, y) H_{n-1}(x)
    K^(1,1)_{n-1}(x, y) = C_n(x, y) H_n(x) + D_n(x, y) H_{n-1}(x)

with A, B carried over the denominator nu_{n-1} (x - y)(x - qy) and C, D
additionally picking up the qx-shifted factor (qx - y)(qx - qy).  The
closed forms are validated against the summed kernels at construction
time, every time: the sum is the definition, the closed form is only
accepted when it reproduces it.  Should the A/B forms ever fail, the
coefficients are recovered from scratch by solving the defining linear
system; failure of *that* system aborts loudly since it means the two-term
structure itself does not hold.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Poly, RationalFn, Scalar
from .qcalc import q_derivative, q_number, q_sub_power, ratfn_q_derivative
from .qhermite import HermiteFamily


class KernelStructureError(ArithmeticError):
    """The two-term kernel connection could not be realized at all; this
    signals a structural misunderstanding, not a numeric issue."""


@dataclass(frozen=True)
class KernelCoeffs:
    """Connection data for one degree n and one bound second argument y."""

    n: int
    y: Scalar
    A: RationalFn
    B: RationalFn
    C: RationalFn
    D: RationalFn


def coeff_AB(family: HermiteFamily, n: int, y) -> tuple[RationalFn, RationalFn]:
    """Coefficients of K^(0,1)_{n-1}(., y) on (H_n, H_{n-1}), n >= 1.

        A_n = [H_{n-1}(y) + (D_q H_{n-1})(y) (x - y)] / (nu_{n-1} (x (-)_q y)^2)
        B_n = -[H_n(y)    + (D_q H_n)(y) (x - y)]    / (nu_{n-1} (x (-)_q y)^2)

    Validated against the summed kernel before being returned; on a
    mismatch the coefficients are re-derived by solving the defining
    linear system directly.
    """
    if n < 1:
        raise ValueError("coeff_AB needs n >= 1")
    ctx = family.ctx
    y = ctx.scalar(y)
    nu = family.norm_sq_normalized(n - 1)
    den = q_sub_power(y, 2, ctx) * nu
    linear = ctx.poly([-y, 1])

    def two_term(h: Poly) -> Poly:
        return ctx.poly([h(y)]) + linear * q_derivative(h, ctx)(y)

    a = RationalFn(two_term(family.hermite(n - 1)), den)
    b = RationalFn(-two_term(family.hermite(n)), den)

    kernel = family.kernel_poly(n - 1, 0, 1, y)
    if a * family.hermite(n) + b * family.hermite(n - 1) == kernel:
        return a, b
    return _solve_kernel01_system(family, n, y, kernel)


def _solve_kernel01_system(
    family: HermiteFamily, n: int, y: Scalar, kernel: Poly
) -> tuple[RationalFn, RationalFn]:
    """Recover A, B from (x (-)_q y)^2 K^(0,1)_{n-1} = a(x) H_n + b(x) H_{n-1}
    with deg a <= 1, deg b <= 1, by exact linear algebra on the coefficient
    equations."""
    ctx = family.ctx
    sub2 = q_sub_power(y, 2, ctx)
    target = sub2 * kernel
    hn, hm = family.hermite(n), family.hermite(n - 1)
    x = ctx.x_poly()
    basis = [hn, x * hn, hm, x * hm]
    # x*H_n has degree n+1, and so does the target; n+2 coefficient rows
    # cover every constraint
    rows = n + 2
    matrix = [[p.coeff(r) for p in basis] for r in range(rows)]
    rhs = [target.coeff(r) for r in range(rows)]
    solution = _solve_exact(matrix, rhs)
    if solution is None:
        raise KernelStructureError(
            f"two-term kernel connection is unsolvable at n={n}, y={y}"
        )
    a0, a1, b0, b1 = solution
    return (
        RationalFn(ctx.poly([a0, a1]), sub2),
        RationalFn(ctx.poly([b0, b1]), sub2),
    )


def _solve_exact(matrix: list[list[Scalar]], rhs: list[Scalar]):
    """Solve a (possibly overdetermined) exact linear system by Gaussian
    elimination; returns None when inconsistent or underdetermined."""
    rows = [row[:] + [b] for row, b in zip(matrix, rhs)]
    ncols = len(matrix[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    if len(pivots) < ncols:
        return None
    for i in range(r, len(rows)):
        if not rows[i][-1].is_zero:
            return None
    out = [None] * ncols
    for i, c in enumerate(pivots):
        out[c] = rows[i][-1]
    return out


def coeff_CD(family: HermiteFamily, n: int, y) -> tuple[RationalFn, RationalFn]:
    """Coefficients of K^(1,1)_{n-1}(., y) on (H_n, H_{n-1}), n >= 2:

        C_n = (D_q A_n)(x) - [n-1]_q gamma_{n-1}^-1 B_n(qx)
        D_n = [n]_q A_n(qx) + [n-1]_q gamma_{n-1}^-1 x B_n(qx) + (D_q B_n)(x)

    obtained from the A/B connection by one x-derivative, the forward
    shift, and the recurrence; validated against the summed kernel.
    """
    if n < 2:
        raise ValueError("coeff_CD needs n >= 2 (it references gamma_{n-1})")
    ctx = family.ctx
    y = ctx.scalar(y)
    a, b = coeff_AB(family, n, y)
    ratio = q_number(n - 1, ctx) / family.gamma(n - 1)
    b_shift = b.scale_arg(ctx.q)
    c = ratfn_q_derivative(a, ctx) - b_shift * ratio
    d = (
        a.scale_arg(ctx.q) * q_number(n, ctx)
        + b_shift * ctx.x_poly() * ratio
        + ratfn_q_derivative(b, ctx)
    )
    kernel = family.kernel_poly(n - 1, 1, 1, y)
    if not (c * family.hermite(n) + d * family.hermite(n - 1) == kernel):
        raise KernelStructureError(
            f"K^(1,1) closed form disagrees with the summed kernel at n={n}, y={y}"
        )
    return c, d


def kernel_coeffs(family: HermiteFamily, n: int, y) -> KernelCoeffs:
    """Bundle A, B, C, D for one degree (n >= 2)."""
    y = family.ctx.scalar(y)
    a, b = coeff_AB(family, n, y)
    c, d = coeff_CD(family, n, y)
    return KernelCoeffs(n=n, y=y, A=a, B=b, C=c, D=d)


def kernel11_at(family: HermiteFamily, n: int, alpha) -> Scalar:
    """K^(1,1)_{n-1}(alpha, alpha), the strictly positive sum of squares
    entering every perturbation denominator."""
    return family.kernel11_at(n, alpha)
