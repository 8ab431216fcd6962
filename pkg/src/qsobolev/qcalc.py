"""q-calculus toolbox.

q-numbers, q-factorials, q-Pochhammer symbols (finite and truncated
infinite), q-binomials, q-falling factorials, Jackson-Hahn-Cigler
q-subtraction powers, q-derivative operators, the (finite, polynomial)
q-Taylor expansion, and the Jackson integral against the even weight
``w(x) = (qx; q)_inf * (-qx; q)_inf`` on [-1, 1].

Everything exact-mode in here returns exact rationals.  The two genuinely
irrational quantities, infinite products and the weighted Jackson integral,
require a float-mode context and carry deterministic a-priori truncation
bounds controlled by ``ctx.tail_tol``: truncation lengths start small and
double until the bound clears the tolerance, so results are reproducible
and independent of evaluation order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import ModeError, Poly, QContext, RationalFn, Scalar

MIN_TRUNCATION = 16


def q_number(n: int, ctx: QContext) -> Scalar:
    """[n]_q = (1 - q^n)/(1 - q) = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError("q_number is defined for n >= 0; see q_number_ext")
    return q_number_ext(n, ctx)

def q_number_ext(n: int, ctx: QContext) -> Scalar:
    """(1 - q^n)/(1 - q) for any integer n, including negative indices."""
    if n == 0:
        return ctx.zero
    return (1 - ctx.qpow(n)) / (1 - ctx.q)


def q_factorial(n: int, ctx: QContext) -> Scalar:
    """[n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1."""
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = ctx.one
    for k in range(2, n + 1):
        out = out * q_number(k, ctx)
    return out


def q_pochhammer(a, n: int, ctx: QContext) -> Scalar:
    """(a; q)_n = prod_{j=0..n-1} (1 - a q^j); the empty product is 1."""
    if n < 0:
        raise ValueError("q_pochhammer needs n >= 0")
    a = ctx.scalar(a)
    out = ctx.one
    qj = ctx.one
    for _ in range(n):
        out = out * (1 - a * qj)
        qj = qj * ctx.q
    return out


def _qpoch_inf_terms(a: Scalar, ctx: QContext, tol: Scalar) -> int:
    """Truncation length J with relative tail bound
    |a| q^J / ((1-q)(1-|a| q^J)) <= tol, found by doubling."""
    J = MIN_TRUNCATION
    while True:
        t = abs(a) * ctx.qpow(J)
        if t < 1 and t / ((1 - ctx.q) * (1 - t)) <= tol:
            return J
        J *= 2


def q_pochhammer_inf(a, ctx: QContext, tol: Scalar | None = None) -> Scalar:
    """(a; q)_inf as a truncated product (float mode only).

    The truncated tail satisfies a relative error bound of at most ``tol``
    (default ``ctx.tail_tol``).  Accepts any ``a``, not only |a| < 1: the
    product converges whenever no factor vanishes, and a factor that is
    exactly zero is rejected since then the limit is identically zero in a
    way truncation cannot certify.
    """
    ctx.require_float("q_pochhammer_inf")
    a = ctx.scalar(a)
    if tol is None:
        tol = ctx.tail_tol
    J = _qpoch_inf_terms(a, ctx, tol)
    out = ctx.one
    qj = ctx.one
    for j in range(J):
        factor = 1 - a * qj
        if factor.is_zero:
            raise ValueError(f"q-Pochhammer factor vanishes at j={j} (a*q^j == 1)")
        out = out * factor
        qj = qj * ctx.q
    return out


def q_binomial(n: int, k: int, ctx: QContext) -> Scalar:
    """[n]_q! / ([k]_q! [n-k]_q!), for 0 <= k <= n; symmetric in k <-> n-k."""
    if not 0 <= k <= n:
        raise ValueError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    return q_factorial(n, ctx) / (q_factorial(k, ctx) * q_factorial(n - k, ctx))


def q_falling(s: int, n: int, ctx: QContext) -> Scalar:
    """q-falling factorial [s]_q^(n) = (q^-s; q)_n (q-1)^-n q^(ns - n(n-1)/2).

    Equals the descending product [s]_q [s-1]_q ... [s-n+1]_q for integer s
    (either expression works for negative s as well).
    """
    if n < 0:
        raise ValueError("q_falling needs n >= 0")
    if n == 0:
        return ctx.one
    poch = q_pochhammer(ctx.qpow(-s), n, ctx)
    return poch * (ctx.q - 1) ** (-n) * ctx.qpow(n * s - n * (n - 1) // 2)


def q_sub_power(y, n: int, ctx: QContext) -> Poly:
    """JHC q-subtraction power (x (-)_q y)^n = prod_{j=0..n-1} (x - y q^j),
    expanded as a polynomial in x."""
    if n < 0:
        raise ValueError("q_sub_power needs n >= 0")
    y = ctx.scalar(y)
    out = ctx.one_poly()
    qj = ctx.one
    for _ in range(n):
        out = out * ctx.poly([-y * qj, 1])
        qj = qj * ctx.q
    return out


def q_sub_power_sum(y, n: int, ctx: QContext) -> Poly:
    """The binomial-sum expansion of the q-subtraction power:
    sum_k binom[n,k]_q q^(k(k-1)/2) (-y)^k x^(n-k).

    Kept alongside the product form as a cross-check of the two classical
    expressions.
    """
    if n < 0:
        raise ValueError("q_sub_power_sum needs n >= 0")
    y = ctx.scalar(y)
    coeffs = [ctx.zero] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = (
            q_binomial(n, k, ctx) * ctx.qpow(k * (k - 1) // 2) * (-y) ** k
        )
    return Poly(coeffs, ctx.mode, ctx.prec)


def q_derivative(p: Poly, ctx: QContext) -> Poly:
    """Euler-Jackson q-derivative, coefficientwise: x^k -> [k]_q x^(k-1).

    For polynomials this is exactly (p(qx) - p(x)) / ((q-1) x) with the
    removable singularity at x = 0 already removed; the difference-quotient
    form is kept as a test oracle only.
    """
    if p.is_zero or p.degree == 0:
        return Poly.zero(p.mode, p.prec)
    return Poly(
        [p.coeffs[k] * q_number(k, ctx) for k in range(1, len(p.coeffs))],
        p.mode,
        p.prec,
    )


def q_derivative_inv(p: Poly, ctx: QContext) -> Poly:
    """q^-1-derivative, coefficientwise: x^k -> [k]_{q^-1} x^(k-1)."""
    if p.is_zero or p.degree == 0:
        return Poly.zero(p.mode, p.prec)
    return Poly(
        [
            p.coeffs[k] * q_number_ext(k, ctx) * ctx.qpow(1 - k)
            for k in range(1, len(p.coeffs))
        ],
        p.mode,
        p.prec,
    )


def q_derivative_iter(p: Poly, k: int, ctx: QContext) -> Poly:
    """k-fold q-derivative."""
    if k < 0:
        raise ValueError("derivative order must be >= 0")
    for _ in range(k):
        p = q_derivative(p, ctx)
    return p


def ratfn_q_derivative(r: RationalFn, ctx: QContext) -> RationalFn:
    """q-derivative of a rational function, by substitution:
    (r(qx) - r(x)) / ((q-1) x), normalized."""
    shifted = r.scale_arg(ctx.q)
    num = shifted.num * r.den - r.num * shifted.den
    den = shifted.den * r.den * ctx.poly([0, ctx.q - 1])
    return RationalFn(num, den)


def q_taylor(p: Poly, a, ctx: QContext) -> list[Scalar]:
    """q-Taylor coefficients of a polynomial about ``a``:
    t_k = (D_q^k p)(a) / [k]_q!, so that p = sum_k t_k (x (-)_q a)^k exactly
    (the expansion is finite and remainder-free for polynomials)."""
    a = ctx.scalar(a)
    out = []
    fact = ctx.one
    dk = p
    k = 0
    while True:
        out.append(dk(a) / fact)
        if dk.degree <= 0:
            break
        k += 1
        fact = fact * q_number(k, ctx)
        dk = q_derivative(dk, ctx)
    return out


def q_taylor_reconstruct(coeffs: list[Scalar], a, ctx: QContext) -> Poly:
    """Rebuild sum_k t_k (x (-)_q a)^k from q-Taylor coefficients."""
    out = ctx.zero_poly()
    for k, t in enumerate(coeffs):
        out = out + q_sub_power(a, k, ctx) * t
    return out


@dataclass(frozen=True)
class WeightEval:
    """One evaluation of the orthogonality weight w(x) = (qx, -qx; q)_inf.

    ``value`` approximates the weight at ``point`` with absolute error at
    most ``tail_bound``; ``truncation_terms`` is the factor count used per
    infinite product.
    """

    point: Scalar
    value: Scalar
    truncation_terms: int
    tail_bound: Scalar


def weight_at(x, ctx: QContext, tol: Scalar | None = None) -> WeightEval:
    """Evaluate the weight at ``x`` in [-1, 1] with certified error.

    Both infinite-product factors are truncated to a shared length; if the
    first pass cannot certify an absolute error within ``tol`` (possible
    when the weight is large), the per-factor tolerance is tightened once
    by the observed overshoot and the product recomputed.
    """
    ctx.require_float("weight_at")
    x = ctx.scalar(x)
    if abs(x) > 1:
        raise ValueError("weight is defined on [-1, 1]")
    if tol is None:
        tol = ctx.tail_tol

    def attempt(per_factor_tol: Scalar):
        a = ctx.q * x
        J = max(
            _qpoch_inf_terms(a, ctx, per_factor_tol),
            _qpoch_inf_terms(-a, ctx, per_factor_tol),
        )
        value = ctx.one
        qj = ctx.one
        for _ in range(J):
            value = value * (1 - a * qj) * (1 + a * qj)
            qj = qj * ctx.q
        rel = per_factor_tol * 2 + per_factor_tol * per_factor_tol
        return value, J, rel * abs(value)

    value, J, bound = attempt(tol / 4)
    if bound > tol:
        shrink = bound / tol
        value, J, bound = attempt(tol / (4 * shrink * 2))
    return WeightEval(point=x, value=value, truncation_terms=J, tail_bound=bound)


class WeightTable:
    """Memoized weight evaluations for one context.

    Confine a table to one worker (or guard it externally) when evaluating
    concurrently; the library never shares one behind your back.
    """

    def __init__(self, ctx: QContext):
        ctx.require_float("WeightTable")
        self.ctx = ctx
        self._cache: dict[Scalar, WeightEval] = {}

    def weight(self, x: Scalar) -> WeightEval:
        hit = self._cache.get(x)
        if hit is None:
            hit = weight_at(x, self.ctx)
            self._cache[x] = hit
        return hit


def jackson_weighted_integral(
    f: Poly, ctx: QContext, table: WeightTable | None = None
) -> Scalar:
    """integral_{-1}^{1} f(x) w(x) d_q x on the geometric lattice +-q^k.

    Computes (1-q) * sum_{k>=0} q^k [f w](q^k) + [f w](-q^k), truncating at
    K terms once the a-priori tail bound 4 * M * q^K clears ``ctx.tail_tol``,
    where M is the largest |f w| sampled on the lattice so far (doubled as a
    safety margin against undersampling).  K grows by doubling, so the
    truncation point is a deterministic function of f and the context.
    """
    ctx.require_float("jackson_weighted_integral")
    if f.mode != ctx.mode or f.prec != ctx.prec:
        raise ModeError("polynomial mode does not match the context")
    if table is None:
        table = WeightTable(ctx)

    total = ctx.zero
    peak = ctx.zero
    qk = ctx.one
    k = 0
    K = MIN_TRUNCATION
    while True:
        while k < K:
            up = f(qk) * table.weight(qk).value
            dn = f(-qk) * table.weight(-qk).value
            peak = max(peak, abs(up), abs(dn))
            total = total + qk * (up + dn)
            qk = qk * ctx.q
            k += 1
        if 4 * peak * ctx.qpow(K) <= ctx.tail_tol:
            break
        K *= 2
    return (1 - ctx.q) * total
