"""Root-adjunction towers: K[t]/(t^n - r) over any exact base field.

Each ``ExtensionField`` wraps a base field context (Q(i), a rational
function field, or another extension) and a defining power t^n = r.
Elements are coefficient tuples of length n over the base, so a tower of
adjunctions flattens to the expected product-length coordinate vector.

Arithmetic reduces t^k for k >= n through the defining relation.  The
quotient need not be a field: inversion runs an extended Euclidean
algorithm against t^n - r and raises NotInvertible when it hits a zero
divisor instead of returning garbage.
"""

from __future__ import annotations

from .errors import NotInvertible


class ExtensionField:
    def __init__(self, base, symbol: str, power: int, radicand):
        if power < 2:
            raise ValueError("adjunction power must be at least 2")
        radicand = base.coerce(radicand)
        if not radicand:
            raise ValueError("radicand must be nonzero")
        self.base = base
        self.symbol = symbol
        self.power = power
        self.radicand = radicand

    # -- tower bookkeeping -------------------------------------------------

    def tower(self):
        """All (symbol, power, radicand) levels, innermost first."""
        levels = []
        field = self
        while isinstance(field, ExtensionField):
            levels.append((field.symbol, field.power, field.radicand))
            field = field.base
        return list(reversed(levels))

    def total_degree(self) -> int:
        deg = 1
        for _, n, _ in self.tower():
            deg *= n
        return deg

    # -- constructors --------------------------------------------------------

    def element(self, coeffs) -> "ExtensionElement":
        coeffs = list(coeffs)
        if len(coeffs) > self.power:
            raise ValueError("too many coefficients")
        coeffs = [self.base.coerce(c) for c in coeffs]
        coeffs += [self.base.zero()] * (self.power - len(coeffs))
        return ExtensionElement(self, tuple(coeffs))

    def zero(self):
        return self.element([])

    def one(self):
        return self.element([self.base.one()])

    def root(self) -> "ExtensionElement":
        """The adjoined symbol itself."""
        return self.element([self.base.zero(), self.base.one()])

    def coerce(self, value) -> "ExtensionElement":
        if isinstance(value, ExtensionElement):
            if value.field is self or value.field == self:
                return value
            # an element of some level further down lifts as a constant
            try:
                lifted = self.base.coerce(value)
            except (TypeError, ValueError):
                raise TypeError(f"cannot coerce {value!r} into {self!r}") from None
            return self.element([lifted])
        return self.element([self.base.coerce(value)])

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.symbol == self.symbol
            and other.power == self.power
            and other.base == self.base
            and other.radicand == self.radicand
        )

    def __hash__(self):
        return hash(("ExtensionField", self.symbol, self.power, self.base))

    def __repr__(self):
        return f"{self.base!r}[{self.symbol}; {self.symbol}^{self.power}={self.radicand}]"


def adjoin_root(base, symbol: str, power: int, radicand) -> ExtensionField:
    return ExtensionField(base, symbol, power, radicand)


def adjoin_fourth_root(base, symbol: str, radicand) -> ExtensionField:
    """Adjoin a formal fourth root: symbol^4 = radicand."""
    return ExtensionField(base, symbol, 4, radicand)


def adjoin_square_root(base, symbol: str, radicand) -> ExtensionField:
    return ExtensionField(base, symbol, 2, radicand)


class ExtensionElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: ExtensionField, coeffs: tuple):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *_):
        raise AttributeError("ExtensionElement is immutable")

    def _lift(self, other):
        if isinstance(other, ExtensionElement) and (
            other.field is self.field or other.field == self.field
        ):
            return other
        try:
            return self.field.coerce(other)
        except (TypeError, ValueError):
            return None

    def __bool__(self):
        return any(bool(c) for c in self.coeffs)

    def is_zero(self):
        return not self

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return all(a == b for a, b in zip(self.coeffs, o.coeffs))

    def __hash__(self):
        return hash((self.field.symbol, self.coeffs))

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ExtensionElement(
            self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return ExtensionElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = self.field.power
        r = self.field.radicand
        zero = self.field.base.zero()
        acc = [zero] * n
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if not b:
                    continue
                k = i + j
                v = a * b
                if k >= n:
                    k -= n
                    v = v * r
                acc[k] = acc[k] + v
        return ExtensionElement(self.field, tuple(acc))

    __rmul__ = __mul__

    def __pow__(self, m):
        if not isinstance(m, int):
            return NotImplemented
        if m < 0:
            return self.inverse() ** (-m)
        out = self.field.one()
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def inverse(self) -> "ExtensionElement":
        """Extended Euclid against t^n - r over the base field."""
        if not self:
            raise NotInvertible(self, "zero element")
        base = self.field.base
        n = self.field.power
        zero, one = base.zero(), base.one()
        # modulus t^n - r and the element as coefficient lists
        modulus = [-self.field.radicand] + [zero] * (n - 1) + [one]
        a = list(self.coeffs)
        r0, r1 = modulus, _trim(a, zero)
        s0, s1 = [zero], [one]
        while _degree(r1) > 0:
            q, rem = _poly_divmod(r0, r1, base)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, zero), zero)
            if not r1:
                raise NotInvertible(self, "zero divisor in the adjunction quotient")
        if not r1:
            raise NotInvertible(self, "zero divisor in the adjunction quotient")
        # r1 is a nonzero constant: s1 / r1 is the inverse
        c = r1[0]
        inv_c = _field_inverse(c)
        coeffs = [x * inv_c for x in s1]
        return self.field.element(coeffs[:n])

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

    def constant_part(self):
        """Base-field coefficient of t^0."""
        return self.coeffs[0]

    def is_constant(self):
        return not any(bool(c) for c in self.coeffs[1:])

    def __str__(self):
        parts = []
        sym = self.field.symbol
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(f"({c})")
            elif k == 1:
                parts.append(f"({c})*{sym}")
            else:
                parts.append(f"({c})*{sym}^{k}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"ExtensionElement<{self.field.symbol}>({self})"


def _field_inverse(c):
    if hasattr(c, "inverse"):
        return c.inverse()
    return 1 / c


def _trim(coeffs, zero):
    out = list(coeffs)
    while out and not out[-1]:
        out.pop()
    return out


def _degree(coeffs):
    return len(coeffs) - 1


def _poly_sub(a, b, zero):
    n = max(len(a), len(b))
    a = a + [zero] * (n - len(a))
    b = b + [zero] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)], zero)


def _poly_mul(a, b, zero):
    if not a or not b:
        return []
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if not y:
                continue
            out[i + j] = out[i + j] + x * y
    return _trim(out, zero)


def _poly_divmod(a, b, base):
    zero = base.zero()
    a = _trim(list(a), zero)
    b = _trim(list(b), zero)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = _field_inverse(b[-1])
    q = [zero] * max(0, len(a) - len(b) + 1)
    r = a
    while r and len(r) >= len(b):
        factor = r[-1] * inv_lead
        shift = len(r) - len(b)
        q[shift] = q[shift] + factor
        sub = [zero] * shift + [factor * c for c in b]
        r = _poly_sub(r, sub, zero)
    return q, r
