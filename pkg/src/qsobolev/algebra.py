"""Arithmetic substrate: scalars in two modes, dense polynomials, rational functions.

Everything downstream computes over :class:`Scalar` values.  A scalar is
either *exact* (an unbounded rational, the default substrate and the ground
truth for every identity in this package) or *float* (a binary float with a
declared mantissa precision of at least 64 bits, used only where a quantity
is genuinely irrational: infinite q-Pochhammer products and the weighted
Jackson integral).  Mixing the two modes in one operation raises
:class:`ModeError`; there is no silent coercion.

All values here are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from mpmath.ctx_mp import MPContext

EXACT = "exact"
FLOAT = "float"

MIN_PRECISION = 64

#: degree of the zero polynomial
NEG_INF = float("-inf")

ScalarLike = Union["Scalar", int, Fraction]


class ModeError(ValueError):
    """Exact and float values met in a single operation, or a mode
    precondition was violated (e.g. an exact-only routine saw floats)."""


class DivisibilityError(ArithmeticError):
    """An exact division left a nonzero remainder.  This always signals a
    violated structural invariant upstream, never a rounding problem."""


@lru_cache(maxsize=None)
def mp_context(prec: int) -> MPContext:
    """Shared mpmath context for a given binary precision.

    One context per precision, never mutated after creation, so values of
    equal precision interoperate and carry their rounding behaviour with
    them.
    """
    if prec < MIN_PRECISION:
        raise ValueError(f"float precision must be >= {MIN_PRECISION} bits, got {prec}")
    ctx = MPContext()
    ctx.prec = prec
    return ctx


class Scalar:
    """A number in one fixed arithmetic mode.

    Exact scalars wrap :class:`fractions.Fraction`; float scalars wrap an
    mpmath ``mpf`` bound to the shared context of their precision.  Python
    ints coerce into either mode (they are exact in both); ``Fraction``
    coerces into exact mode only.
    """

    __slots__ = ("mode", "value", "prec")

    def __init__(self, mode: str, value, prec: int | None = None):
        self.mode = mode
        self.value = value
        self.prec = prec

    @staticmethod
    def exact(value: int | str | Fraction) -> "Scalar":
        return Scalar(EXACT, Fraction(value))

    @staticmethod
    def inexact(value, prec: int) -> "Scalar":
        ctx = mp_context(prec)
        if isinstance(value, Scalar):
            if value.mode == FLOAT and value.prec == prec:
                return value
            if value.mode == FLOAT:
                raise ModeError("re-declaring the precision of a float scalar")
            value = value.value
        if isinstance(value, Fraction):
            mpf = ctx.mpf(value.numerator) / value.denominator
        else:
            mpf = ctx.mpf(value)
        return Scalar(FLOAT, mpf, prec)

    # -- coercion ---------------------------------------------------------

    def _lift(self, other):
        """Return the raw value of ``other`` in this scalar's mode, or
        ``NotImplemented``."""
        if isinstance(other, Scalar):
            if other.mode != self.mode or other.prec != self.prec:
                raise ModeError(
                    f"mixed scalar modes: {self.mode}[{self.prec}] vs "
                    f"{other.mode}[{other.prec}]"
                )
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            if self.mode != EXACT:
                raise ModeError("Fraction operand in float-mode arithmetic")
            return other
        return NotImplemented

    def _wrap(self, value) -> "Scalar":
        return Scalar(self.mode, value, self.prec)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        v = self._lift(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._lift(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.value - v)

    def __rsub__(self, other):
        v = self._lift(other)
        return NotImplemented if v is NotImplemented else self._wrap(v - self.value)

    def __mul__(self, other):
        v = self._lift(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.value * v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        if v == 0:
            raise ZeroDivisionError("scalar division by zero")
        return self._wrap(self.value / v)

    def __rtruediv__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        if self.value == 0:
            raise ZeroDivisionError("scalar division by zero")
        return self._wrap(v / self.value)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0 and self.value == 0:
            raise ZeroDivisionError("zero to a negative power")
        return self._wrap(self.value**n)

    def __neg__(self):
        return self._wrap(-self.value)

    def __abs__(self):
        return self._wrap(abs(self.value))

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other):
        v = self._lift(other)
        return NotImplemented if v is NotImplemented else self.value == v

    def __ne__(self, other):
        v = self._lift(other)
        return NotImplemented if v is NotImplemented else self.value != v

    def __lt__(self, other):
        v = self._lift(other)
        return NotImplemented if v is NotImplemented else self.value < v

    def __le__(self, other):
        v = self._lift(other)
        return NotImplemented if v is NotImplemented else self.value <= v

    def __gt__(self, other):
        v = self._lift(other)
        return NotImplemented if v is NotImplemented else self.value > v

    def __ge__(self, other):
        v = self._lift(other)
        return NotImplemented if v is NotImplemented else self.value >= v

    def __hash__(self):
        return hash((self.mode, self.value))

    def __bool__(self):
        return self.value != 0

    # -- inspection and conversion ---------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def is_exact(self) -> bool:
        return self.mode == EXACT

    def as_fraction(self) -> Fraction:
        if self.mode != EXACT:
            raise ModeError("as_fraction on a float scalar")
        return self.value

    def to_float(self, prec: int) -> "Scalar":
        """Explicit exact -> float conversion (the only allowed direction)."""
        if self.mode == FLOAT:
            if self.prec != prec:
                raise ModeError("changing the precision of a float scalar")
            return self
        return Scalar.inexact(self.value, prec)

    def __float__(self):
        return float(self.value)

    def sqrt(self) -> "Scalar":
        """Square root (float mode only; exact roots are usually irrational)."""
        if self.mode != FLOAT:
            raise ModeError("sqrt is a float-mode operation")
        if self < 0:
            raise ValueError("sqrt of a negative scalar")
        return self._wrap(mp_context(self.prec).sqrt(self.value))

    def approx_eq(self, other: "Scalar", rel_tol: "Scalar | None" = None) -> bool:
        """Relative comparison for float scalars.

        Default tolerance is 2^(-P/2): half the mantissa absorbs
        accumulated rounding.  Exact scalars compare exactly.
        """
        diff = abs(self - other)
        if self.mode == EXACT:
            return diff.is_zero
        scale = max(abs(self), abs(other))
        if scale.is_zero:
            return diff.is_zero
        if rel_tol is None:
            rel_tol = self._wrap(mp_context(self.prec).mpf(2) ** (-(self.prec // 2)))
        return diff <= rel_tol * scale

    def __str__(self):
        return scalar_to_str(self)

    def __repr__(self):
        if self.mode == EXACT:
            return f"Scalar({self.value!r})"
        return f"Scalar({self.value!r}, prec={self.prec})"


def scalar_to_str(s: Scalar) -> str:
    """Serialize a scalar: ``p/q`` (or a bare integer) in exact mode, a
    decimal string with enough digits to round-trip in float mode."""
    if s.mode == EXACT:
        return str(s.value)
    ctx = mp_context(s.prec)
    # prec * log10(2) digits, plus guard digits, guarantees the decimal
    # string parses back to the identical binary value
    digits = int(s.prec * 0.30103) + 4
    return ctx.nstr(s.value, digits, strip_zeros=True)


def scalar_from_str(text: str, mode: str = EXACT, prec: int | None = None) -> Scalar:
    if mode == EXACT:
        return Scalar.exact(Fraction(text))
    if prec is None:
        raise ValueError("float-mode parsing needs a precision")
    return Scalar.inexact(text, prec)


class Poly:
    """Dense univariate polynomial, coefficients ascending by degree.

    Normalized on construction: no trailing zero coefficients (in float
    mode, trailing coefficients below 2^(-P/2) relative to the largest
    coefficient are treated as zero).  The zero polynomial has an empty
    coefficient tuple and degree ``NEG_INF``.
    """

    __slots__ = ("coeffs", "mode", "prec")

    def __init__(
        self,
        coeffs: Sequence[Scalar],
        mode: str | None = None,
        prec: int | None = None,
    ):
        if mode is None:
            if not coeffs:
                raise ValueError("zero polynomial needs an explicit mode")
            mode, prec = coeffs[0].mode, coeffs[0].prec
        for c in coeffs:
            if c.mode != mode or c.prec != prec:
                raise ModeError("polynomial coefficients must share one mode")
        self.mode = mode
        self.prec = prec
        self.coeffs = self._trim(tuple(coeffs))

    def _trim(self, coeffs: tuple) -> tuple:
        if self.mode == EXACT:
            n = len(coeffs)
            while n and coeffs[n - 1].is_zero:
                n -= 1
            return coeffs[:n]
        if not coeffs:
            return coeffs
        ctx = mp_context(self.prec)
        peak = max(abs(c.value) for c in coeffs)
        cutoff = peak * ctx.mpf(2) ** (-(self.prec // 2))
        n = len(coeffs)
        while n and abs(coeffs[n - 1].value) <= cutoff:
            n -= 1
        return coeffs[:n]

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(mode: str = EXACT, prec: int | None = None) -> "Poly":
        return Poly((), mode, prec)

    @staticmethod
    def constant(c: Scalar) -> "Poly":
        return Poly((c,))

    @staticmethod
    def monomial(k: int, c: Scalar) -> "Poly":
        zero = c._wrap(c.value * 0)
        return Poly((zero,) * k + (c,))

    # -- inspection -------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Scalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Scalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self._zero_scalar()

    def _zero_scalar(self) -> Scalar:
        if self.mode == EXACT:
            return Scalar.exact(0)
        return Scalar(FLOAT, mp_context(self.prec).mpf(0), self.prec)

    def _one_scalar(self) -> Scalar:
        if self.mode == EXACT:
            return Scalar.exact(1)
        return Scalar(FLOAT, mp_context(self.prec).mpf(1), self.prec)

    def _check_mode(self, other: "Poly"):
        if other.mode != self.mode or other.prec != self.prec:
            raise ModeError("mixed polynomial modes")

    # -- ring arithmetic --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            other = self._coerce_scalar_poly(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_mode(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out, self.mode, self.prec)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, (Poly, Scalar)) else -1 * other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs), self.mode, self.prec)

    def __mul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            s = self._lift_scalar(other)
            return Poly(tuple(c * s for c in self.coeffs), self.mode, self.prec)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_mode(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.mode, self.prec)
        zero = self._zero_scalar()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.mode, self.prec)

    __rmul__ = __mul__

    def _lift_scalar(self, other) -> Scalar:
        if isinstance(other, Scalar):
            if other.mode != self.mode or other.prec != self.prec:
                raise ModeError("mixed modes in polynomial-scalar arithmetic")
            return other
        if isinstance(other, int):
            return self._zero_scalar() + other
        if isinstance(other, Fraction):
            if self.mode != EXACT:
                raise ModeError("Fraction scalar against a float polynomial")
            return Scalar.exact(other)
        raise TypeError(f"cannot use {other!r} as a scalar")

    def _coerce_scalar_poly(self, other) -> "Poly":
        return Poly((self._lift_scalar(other),), self.mode, self.prec)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        out = Poly((self._one_scalar(),), self.mode, self.prec)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            other = self._coerce_scalar_poly(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_mode(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.mode, self.coeffs))

    # -- evaluation and substitution --------------------------------------

    def __call__(self, x0) -> Scalar:
        x0 = self._lift_scalar(x0)
        acc = self._zero_scalar()
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def scale_arg(self, gamma) -> "Poly":
        """p(gamma * x)."""
        gamma = self._lift_scalar(gamma)
        out, g = [], self._one_scalar()
        for c in self.coeffs:
            out.append(c * g)
            g = g * gamma
        return Poly(out, self.mode, self.prec)

    def reflected(self) -> "Poly":
        """p(-x)."""
        return Poly(
            tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)),
            self.mode,
            self.prec,
        )

    # -- division ---------------------------------------------------------

    def __divmod__(self, other: "Poly"):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_mode(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.leading
        zero = self._zero_scalar()
        qcoeffs = [zero] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c.is_zero:
                continue
            f = c / lead
            qcoeffs[i - db] = f
            for j, bc in enumerate(other.coeffs):
                rem[i - db + j] = rem[i - db + j] - f * bc
        return (
            Poly(qcoeffs, self.mode, self.prec),
            Poly(rem[:db] if db > 0 else [], self.mode, self.prec),
        )

    def divexact(self, other: "Poly") -> "Poly":
        """Divide, verifying the remainder is zero.

        A nonzero remainder raises :class:`DivisibilityError`: it means a
        divisibility invariant was violated upstream, not that rounding
        drifted.
        """
        q, r = divmod(self, other)
        if not r.is_zero:
            raise DivisibilityError(
                f"inexact polynomial division: remainder degree {r.degree}"
            )
        return q

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lead = self.leading
        return Poly(tuple(c / lead for c in self.coeffs), self.mode, self.prec)

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd by the Euclidean algorithm (exact mode only)."""
        if self.mode != EXACT:
            raise ModeError("polynomial gcd requires exact mode")
        a, b = self, other
        while not b.is_zero:
            a, b = b, divmod(a, b)[1]
            # keep coefficient growth in check
            if not b.is_zero:
                b = b.monic()
        if a.is_zero:
            return a
        return a.monic()

    def to_float(self, prec: int) -> "Poly":
        if self.mode == FLOAT:
            if self.prec != prec:
                raise ModeError("changing the precision of a float polynomial")
            return self
        return Poly(tuple(c.to_float(prec) for c in self.coeffs), FLOAT, prec)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}])"


def format_poly(p: Poly, var: str = "x") -> str:
    """Human-readable form, highest degree first: ``x^2 - 1/2``."""
    if p.is_zero:
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c.is_zero:
            continue
        neg = c < 0
        mag = abs(c)
        if k == 0:
            body = scalar_to_str(mag)
        else:
            xk = var if k == 1 else f"{var}^{k}"
            body = xk if mag == 1 else f"{scalar_to_str(mag)}*{xk}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def poly_to_strings(p: Poly) -> list[str]:
    return [scalar_to_str(c) for c in p.coeffs]


def poly_from_strings(strings: Iterable[str], mode: str = EXACT, prec: int | None = None) -> Poly:
    return Poly([scalar_from_str(s, mode, prec) for s in strings], mode, prec)


class RationalFn:
    """Quotient of two polynomials in normal form.

    The denominator is nonzero and monic; in exact mode the numerator and
    denominator are coprime, so normal forms are canonical and ``==`` is an
    identity test.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly((num._one_scalar(),), num.mode, num.prec)
        num._check_mode(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            den = Poly((num._one_scalar(),), num.mode, num.prec)
        elif num.mode == EXACT:
            g = num.gcd(den)
            if g.degree > 0:
                num = num.divexact(g)
                den = den.divexact(g)
            lead = den.leading
            if lead != 1:
                num = num * (num._one_scalar() / lead)
                den = den.monic()
        else:
            lead = den.leading
            if lead != 1:
                num = num * (num._one_scalar() / lead)
                den = den.monic()
        self.num = num
        self.den = den

    # -- constructors / inspection ----------------------------------------

    @staticmethod
    def from_poly(p: Poly) -> "RationalFn":
        return RationalFn(p)

    @property
    def mode(self) -> str:
        return self.num.mode

    @property
    def prec(self):
        return self.num.prec

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_poly(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> Poly:
        """The underlying polynomial; raises if the denominator is not 1.

        After normalization a monic denominator of degree 0 is exactly 1,
        so this is a strict structural check.
        """
        if not self.is_poly:
            raise DivisibilityError(
                f"rational function is not polynomial (denominator degree {self.den.degree})"
            )
        return self.num

    # -- coercion ---------------------------------------------------------

    def _lift(self, other) -> "RationalFn":
        if isinstance(other, RationalFn):
            return other
        if isinstance(other, Poly):
            return RationalFn(other)
        if isinstance(other, (Scalar, int, Fraction)):
            return RationalFn(self.num._coerce_scalar_poly(other))
        raise TypeError(f"cannot use {other!r} in rational-function arithmetic")

    # -- field arithmetic --------------------------------------------------

    def __add__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return RationalFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return RationalFn(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        out = RationalFn.__new__(RationalFn)
        out.num = -self.num
        out.den = self.den
        return out

    def __mul__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return RationalFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        if self.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        o = self._lift(other)
        return RationalFn(o.num * self.den, o.den * self.num)

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        if self.mode == EXACT:
            return self.num == o.num and self.den == o.den
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- evaluation and substitution --------------------------------------

    def __call__(self, x0) -> Scalar:
        d = self.den(x0)
        if d.is_zero:
            raise ZeroDivisionError("rational function evaluated at a pole")
        return self.num(x0) / d

    def scale_arg(self, gamma) -> "RationalFn":
        return RationalFn(self.num.scale_arg(gamma), self.den.scale_arg(gamma))

    def __str__(self):
        if self.is_poly:
            return format_poly(self.num)
        return f"({format_poly(self.num)}) / ({format_poly(self.den)})"

    def __repr__(self):
        return f"RationalFn({self.num!r}, {self.den!r})"


def ratfn_normalize(num: Poly, den: Poly) -> RationalFn:
    """Normal form of ``num/den``: common factors cancelled, denominator
    monic.  Raises ``ZeroDivisionError`` on a zero denominator."""
    return RationalFn(num, den)


class QContext:
    """Fixed base ``q`` in (0, 1) plus the arithmetic mode it lives in.

    Carries the float precision and the truncation tolerance ``tail_tol``
    used by infinite products and Jackson sums in float mode.  Immutable.
    """

    __slots__ = ("q", "mode", "prec", "tail_tol")

    def __init__(self, q: Scalar, tail_tol: Scalar | None = None):
        if not isinstance(q, Scalar):
            raise TypeError("q must be a Scalar; use QContext.exact / QContext.inexact")
        if not (0 < q.value < 1):
            raise ValueError(f"q must lie strictly inside (0, 1), got {q}")
        self.q = q
        self.mode = q.mode
        self.prec = q.prec
        if self.mode == FLOAT:
            if tail_tol is None:
                tail_tol = Scalar.inexact("1e-30", self.prec)
            elif not isinstance(tail_tol, Scalar) or tail_tol.mode != FLOAT:
                raise TypeError("tail_tol must be a float-mode Scalar")
            if not tail_tol > 0:
                raise ValueError("tail_tol must be positive")
        elif tail_tol is not None:
            raise ModeError("tail_tol is a float-mode knob")
        self.tail_tol = tail_tol

    @staticmethod
    def exact(q: int | str | Fraction | Scalar) -> "QContext":
        if not isinstance(q, Scalar):
            q = Scalar.exact(q)
        return QContext(q)

    @staticmethod
    def inexact(q, prec: int = 256, tail_tol="1e-30") -> "QContext":
        if isinstance(q, Scalar) and q.mode == EXACT:
            q = q.value
        if not isinstance(q, Scalar):
            q = Scalar.inexact(q, prec)
        if not isinstance(tail_tol, Scalar):
            tail_tol = Scalar.inexact(tail_tol, prec)
        return QContext(q, tail_tol)

    # -- value constructors -------------------------------------------------

    def scalar(self, v) -> Scalar:
        if isinstance(v, Scalar):
            if v.mode != self.mode or v.prec != self.prec:
                raise ModeError("scalar from another mode handed to this context")
            return v
        if self.mode == EXACT:
            return Scalar.exact(v)
        return Scalar.inexact(v, self.prec)

    @property
    def zero(self) -> Scalar:
        return self.scalar(0)

    @property
    def one(self) -> Scalar:
        return self.scalar(1)

    def qpow(self, k: int) -> Scalar:
        return self.q**k

    def poly(self, coeffs: Iterable) -> Poly:
        return Poly([self.scalar(c) for c in coeffs], self.mode, self.prec)

    def zero_poly(self) -> Poly:
        return Poly.zero(self.mode, self.prec)

    def one_poly(self) -> Poly:
        return self.poly([1])

    def x_poly(self) -> Poly:
        return self.poly([0, 1])

    def require_exact(self, what: str):
        if self.mode != EXACT:
            raise ModeError(f"{what} requires exact mode")

    def require_float(self, what: str):
        if self.mode != FLOAT:
            raise ModeError(f"{what} requires float mode")

    def __repr__(self):
        if self.mode == EXACT:
            return f"QContext(q={self.q})"
        return f"QContext(q={self.q}, prec={self.prec}, tail_tol={self.tail_tol})"
