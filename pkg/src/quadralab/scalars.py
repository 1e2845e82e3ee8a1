"""Exact coefficient arithmetic.

Three scalar domains live here:

* big rationals -- ``fractions.Fraction`` from the standard library, which
  already maintains the gcd-reduced, positive-denominator normal form;
* ``GaussianRational`` -- elements of Q(i), a pair of Fractions;
* ``PrimeFieldElement`` -- residues mod a prime p = 1 (mod 4), used as the
  modular rank backend.  The congruence condition guarantees a square root
  of -1 exists mod p; the chosen root is fixed per field and reported.

Everything is immutable and safe to share.  Scalar literals round-trip
through ``parse_scalar`` / ``str``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotInvertible, ScalarParseError

#: Arbitrary-precision rational numbers (normalized by construction).
BigRational = Fraction


class GaussianRational:
    """An element re + im*i of Q(i), with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, *_):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _raw(cls, re, im):
        # parts must already be Fractions; skips re-normalization in hot loops
        self = object.__new__(cls)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        return self

    # -- ring structure -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational._raw(self.re + other.re, self.im + other.im)
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational._raw(self.re - other.re, self.im - other.im)
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            other = _coerce(other)
            if other is NotImplemented:
                return NotImplemented
        if not self.im and not other.im:
            return GaussianRational._raw(self.re * other.re, self.im)
        return GaussianRational._raw(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self):
        """re^2 + im^2; zero exactly when the element is zero."""
        return self.re * self.re + self.im * self.im

    def inverse(self):
        n = self.norm()
        if not n:
            raise NotInvertible(self, "zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons / hashing ------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_rational(self):
        return not self.im

    # -- formatting ------------------------------------------------------

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"GaussianRational({self})"


def _coerce(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    return NotImplemented


QI_ZERO = GaussianRational(0)
QI_ONE = GaussianRational(1)
QI_I = GaussianRational(0, 1)


def gaussian(re=0, im=0) -> GaussianRational:
    """Shorthand constructor accepting ints, Fractions, or strings."""
    if isinstance(re, str):
        if im:
            raise ValueError("cannot mix a string literal with an im part")
        return parse_scalar(re)
    return GaussianRational(re, im)


# ---------------------------------------------------------------------------
# Scalar literal grammar:
#
#   scalar := sign? part (sign part)?
#   part   := nat ('/' nat)? ('*'? 'i')?  |  'i'
#
# with at most one real and one imaginary part, imaginary last.  Examples:
# "3/5+2/7*i", "-i", "2", "1-2i", "0/1".
# ---------------------------------------------------------------------------


def parse_scalar(text: str) -> GaussianRational:
    """Parse an exact Q(i) literal; raises ScalarParseError with position."""
    s = text.strip()
    if not s:
        raise ScalarParseError(text, 0, "empty literal")
    pos = 0
    parts = []  # (is_imag, Fraction)

    def peek():
        return s[pos] if pos < len(s) else ""

    while pos < len(s):
        if parts and peek() not in "+-":
            raise ScalarParseError(text, pos, "expected '+' or '-'")
        sign = 1
        if peek() in "+-":
            if peek() == "-":
                sign = -1
            pos += 1
        if peek() == "i":
            pos += 1
            parts.append((True, Fraction(sign)))
            continue
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if pos == start:
            raise ScalarParseError(text, pos, "expected digits or 'i'")
        num = int(s[start:pos])
        den = 1
        if peek() == "/":
            pos += 1
            dstart = pos
            while pos < len(s) and s[pos].isdigit():
                pos += 1
            if pos == dstart:
                raise ScalarParseError(text, pos, "expected denominator digits")
            den = int(s[dstart:pos])
            if den == 0:
                raise ScalarParseError(text, dstart, "zero denominator")
        is_imag = False
        if peek() == "*":
            pos += 1
            if peek() != "i":
                raise ScalarParseError(text, pos, "expected 'i' after '*'")
        if peek() == "i":
            pos += 1
            is_imag = True
        parts.append((is_imag, Fraction(sign * num, den)))

    if len(parts) > 2:
        raise ScalarParseError(text, len(s), "more than two parts")
    re = im = Fraction(0)
    seen_real = seen_imag = False
    for is_imag, value in parts:
        if is_imag:
            if seen_imag:
                raise ScalarParseError(text, len(s), "two imaginary parts")
            seen_imag = True
            im = value
        else:
            if seen_real or seen_imag:
                raise ScalarParseError(
                    text, len(s), "real part must come first and only once"
                )
            seen_real = True
            re = value
    return GaussianRational(re, im)


def _imag_str(q: Fraction) -> str:
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    return f"{q}*i"


def format_scalar(z: GaussianRational) -> str:
    """Canonical literal; parse_scalar(format_scalar(z)) == z."""
    if not z:
        return "0"
    if not z.im:
        return str(z.re)
    if not z.re:
        return _imag_str(z.im)
    sign = "+" if z.im > 0 else "-"
    mag = abs(z.im)
    tail = "i" if mag == 1 else f"{mag}*i"
    return f"{z.re}{sign}{tail}"


# ---------------------------------------------------------------------------
# Prime fields, p = 1 (mod 4)
# ---------------------------------------------------------------------------

DEFAULT_PRIME = 65537

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """F_p with p = 1 (mod 4) and a fixed square root of -1.

    The root is the smaller of the two candidates, so runs are reproducible
    and the choice can be recorded in reports.
    """

    def __init__(self, p: int = DEFAULT_PRIME):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p % 4 != 1:
            raise ValueError(f"{p} is not congruent to 1 mod 4")
        self.p = p
        self.sqrt_minus_one = self._find_sqrt_minus_one()

    def _find_sqrt_minus_one(self) -> int:
        p = self.p
        for a in range(2, p):
            s = pow(a, (p - 1) // 4, p)
            if s * s % p == p - 1:
                return min(s, p - s)
        raise AssertionError("unreachable for p = 1 mod 4")

    # -- element constructors -------------------------------------------

    def element(self, value: int) -> "PrimeFieldElement":
        return PrimeFieldElement(value % self.p, self)

    def zero(self):
        return self.element(0)

    def one(self):
        return self.element(1)

    def coerce(self, value) -> "PrimeFieldElement":
        if isinstance(value, PrimeFieldElement):
            if value.field is not self and value.field.p != self.p:
                raise ValueError("element from a different prime field")
            return value
        if isinstance(value, int):
            return self.element(value)
        if isinstance(value, Fraction):
            return self._from_fraction(value)
        if isinstance(value, GaussianRational):
            re = self._from_fraction(value.re)
            im = self._from_fraction(value.im)
            return re + im * self.element(self.sqrt_minus_one)
        raise TypeError(f"cannot reduce {value!r} into F_{self.p}")

    def _from_fraction(self, q: Fraction) -> "PrimeFieldElement":
        if q.denominator % self.p == 0:
            raise NotInvertible(q, f"denominator divisible by {self.p}")
        num = q.numerator % self.p
        den_inv = pow(q.denominator % self.p, self.p - 2, self.p)
        return self.element(num * den_inv)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p}, i={self.sqrt_minus_one})"


class PrimeFieldElement:
    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        object.__setattr__(self, "value", value % field.p)
        object.__setattr__(self, "field", field)

    def __setattr__(self, *_):
        raise AttributeError("PrimeFieldElement is immutable")

    def _lift(self, other):
        if isinstance(other, PrimeFieldElement):
            return other
        try:
            return self.field.coerce(other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value + o.value, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value - o.value, self.field)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value * o.value, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.field)

    def inverse(self):
        if self.value == 0:
            raise NotInvertible(self, f"zero in F_{self.field.p}")
        return PrimeFieldElement(pow(self.value, self.field.p - 2, self.field.p), self.field)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return PrimeFieldElement(pow(self.value, n, self.field.p), self.field)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.value == o.value

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"F{self.field.p}({self.value})"


class RationalField:
    """Field context for GaussianRational scalars (the default field)."""

    def zero(self):
        return QI_ZERO

    def one(self):
        return QI_ONE

    def i(self):
        return QI_I

    def coerce(self, value) -> GaussianRational:
        got = _coerce(value)
        if got is NotImplemented:
            if isinstance(value, str):
                return parse_scalar(value)
            raise TypeError(f"cannot coerce {value!r} into Q(i)")
        return got

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def __repr__(self):
        return "QQi"


#: the shared Q(i) field context
QQi = RationalField()
