"""Sparse multivariate polynomials over Q(i) and their fraction field.

Terms are stored as a dict from exponent tuples to GaussianRational
coefficients with no zero entries.  The canonical order is graded
lexicographic in the ring's declared variable order, which makes string
output, leading terms, and "equal up to scalar" comparisons stable.

``RationalFunction`` keeps num/den pairs.  Reduction is best effort
(monomial content, rational content, exact-division probes, and a full
Euclidean gcd in the univariate case); equality is always decided by
cross-multiplication, which needs no gcd at all.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotInvertible
from .scalars import GaussianRational, QI_ONE, QI_ZERO, QQi


class PolyRing:
    """A commutative polynomial ring over Q(i) with named variables."""

    def __init__(self, variables):
        vars_ = tuple(variables)
        if len(set(vars_)) != len(vars_):
            raise ValueError(f"duplicate variable names in {vars_}")
        self.variables = vars_
        self.nvars = len(vars_)
        self._index = {v: k for k, v in enumerate(vars_)}

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.constant(QI_ONE)

    def constant(self, c) -> "MultiPoly":
        c = QQi.coerce(c)
        if not c:
            return self.zero()
        return MultiPoly(self, {(0,) * self.nvars: c})

    def gen(self, name: str) -> "MultiPoly":
        k = self._index[name]
        exp = tuple(1 if j == k else 0 for j in range(self.nvars))
        return MultiPoly(self, {exp: QI_ONE})

    def gens(self):
        return tuple(self.gen(v) for v in self.variables)

    def monomial(self, exponents, coeff=QI_ONE) -> "MultiPoly":
        exponents = tuple(exponents)
        if len(exponents) != self.nvars:
            raise ValueError("exponent tuple has wrong length")
        coeff = QQi.coerce(coeff)
        if not coeff:
            return self.zero()
        return MultiPoly(self, {exponents: coeff})

    def coerce(self, value) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            if value.ring is self:
                return value
            if value.ring.variables == self.variables:
                return MultiPoly(self, dict(value.terms))
            raise TypeError(f"polynomial from foreign ring {value.ring!r}")
        return self.constant(value)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.variables == self.variables

    def __hash__(self):
        return hash(("PolyRing", self.variables))

    def __repr__(self):
        return f"PolyRing{self.variables}"


def _grlex_key(exp):
    return (sum(exp), exp)


class MultiPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, *_):
        raise AttributeError("MultiPoly is immutable")

    # -- basic structure --------------------------------------------------

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                return None
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.ring.constant(other)
        return None

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items(), key=lambda kv: kv[0]))))

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for exp, c in o.terms.items():
            s = terms.get(exp, QI_ZERO) + c
            if s:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        return MultiPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

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
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(exp, QI_ZERO) + c1 * c2
                if s:
                    terms[exp] = s
                else:
                    terms.pop(exp, None)
        return MultiPoly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c) -> "MultiPoly":
        c = QQi.coerce(c)
        if not c:
            return self.ring.zero()
        return MultiPoly(self.ring, {e: v * c for e, v in self.terms.items()})

    # -- inspection --------------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, d: int) -> "MultiPoly":
        return MultiPoly(self.ring, {e: c for e, c in self.terms.items() if sum(e) == d})

    def leading(self):
        """(exponent, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def coefficient(self, exponents) -> GaussianRational:
        return self.terms.get(tuple(exponents), QI_ZERO)

    def constant_term(self) -> GaussianRational:
        return self.terms.get((0,) * self.ring.nvars, QI_ZERO)

    def variables_used(self):
        used = set()
        for e in self.terms:
            for k, p in enumerate(e):
                if p:
                    used.add(k)
        return used

    # -- substitution -------------------------------------------------------

    def substitute(self, mapping: dict) -> "MultiPoly":
        """Replace named variables by MultiPoly values (same ring)."""
        images = []
        for k, name in enumerate(self.ring.variables):
            if name in mapping:
                images.append(self.ring.coerce(mapping[name]))
            else:
                images.append(self.ring.gen(name))
        out = self.ring.zero()
        for exp, c in self.terms.items():
            term = self.ring.constant(c)
            for k, e in enumerate(exp):
                if e:
                    term = term * images[k] ** e
            out = out + term
        return out

    def evaluate(self, values: dict):
        """Evaluate at scalar values (one per variable used); returns a scalar.

        Values may live in any algebra with +,*,** and int coercion for 0/1.
        """
        out = None
        for exp, c in self.terms.items():
            term = c
            for k, e in enumerate(exp):
                if e:
                    name = self.ring.variables[k]
                    if name not in values:
                        raise KeyError(f"no value for variable {name}")
                    term = term * values[name] ** e
            out = term if out is None else out + term
        if out is None:
            return QI_ZERO
        return out

    def split(self, inner_names) -> dict:
        """Collect by monomials in ``inner_names``.

        Returns {inner exponent tuple -> MultiPoly in the remaining
        variables}, all over the same ring (outer exponents zeroed on the
        inner positions and vice versa).
        """
        inner = [self.ring._index[n] for n in inner_names]
        inner_set = set(inner)
        buckets: dict = {}
        for exp, c in self.terms.items():
            key = tuple(exp[k] for k in inner)
            rest = tuple(0 if k in inner_set else e for k, e in enumerate(exp))
            bucket = buckets.setdefault(key, {})
            s = bucket.get(rest, QI_ZERO) + c
            if s:
                bucket[rest] = s
            else:
                bucket.pop(rest, None)
        return {k: MultiPoly(self.ring, v) for k, v in buckets.items() if v}

    # -- division ------------------------------------------------------------

    def divide_exact(self, divisor: "MultiPoly"):
        """Return self/divisor when the division is exact, else None."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self.ring.zero()
        rem = self
        q_terms = {}
        dexp, dc = divisor.leading()
        while rem:
            rexp, rc = rem.leading()
            qexp = tuple(a - b for a, b in zip(rexp, dexp))
            if any(e < 0 for e in qexp):
                return None
            qc = rc / dc
            q_terms[qexp] = qc
            rem = rem - MultiPoly(self.ring, {qexp: qc}) * divisor
        return MultiPoly(self.ring, q_terms)

    # -- rendering -------------------------------------------------------------

    def _term_str(self, exp, coeff):
        factors = []
        for k, e in enumerate(exp):
            if e == 1:
                factors.append(self.ring.variables[k])
            elif e > 1:
                factors.append(f"{self.ring.variables[k]}^{e}")
        mono = "*".join(factors)
        cs = str(coeff)
        if not mono:
            return cs
        if cs == "1":
            return mono
        if cs == "-1":
            return f"-{mono}"
        if coeff.im and coeff.re:
            cs = f"({cs})"
        return f"{cs}*{mono}"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=_grlex_key, reverse=True):
            t = self._term_str(exp, self.terms[exp])
            if parts and not t.startswith("-"):
                parts.append("+" + t)
            else:
                parts.append(t)
        return "".join(parts)

    def __repr__(self):
        return f"MultiPoly({self})"


# ---------------------------------------------------------------------------
# gcd helpers (best effort, exact)
# ---------------------------------------------------------------------------


def monomial_content(p: MultiPoly):
    """Componentwise-min exponent vector over all terms."""
    it = iter(p.terms)
    first = next(it)
    mins = list(first)
    for exp in it:
        for k, e in enumerate(exp):
            if e < mins[k]:
                mins[k] = e
    return tuple(mins)


def shift_down(p: MultiPoly, mono) -> MultiPoly:
    return MultiPoly(p.ring, {tuple(a - b for a, b in zip(e, mono)): c for e, c in p.terms.items()})


def _univar_profile(p: MultiPoly):
    used = p.variables_used()
    if len(used) > 1:
        return None
    return used.pop() if used else -1


def univariate_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Monic gcd of two univariate polynomials in the same variable.

    Constants count as univariate in any variable.
    """
    kf, kg = _univar_profile(f), _univar_profile(g)
    if kf is None or kg is None or (kf >= 0 and kg >= 0 and kf != kg):
        raise ValueError("inputs are not univariate in a common variable")
    a, b = f, g
    while b:
        _, lc = b.leading()
        b_monic = b.scale(lc.inverse())
        r = a
        dexp, _ = b_monic.leading()
        while r and _grlex_key(r.leading()[0]) >= _grlex_key(dexp):
            rexp, rc = r.leading()
            qexp = tuple(x - y for x, y in zip(rexp, dexp))
            r = r - MultiPoly(r.ring, {qexp: rc}) * b_monic
        a, b = b_monic, r
    if not a:
        return a
    _, lc = a.leading()
    return a.scale(lc.inverse())


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------


class RationalFunction:
    """num/den with MultiPoly parts; den is never zero and is kept monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly = None, reduce=True):
        if den is None:
            den = num.ring.one()
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce:
            num, den = _reduce_fraction(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *_):
        raise AttributeError("RationalFunction is immutable")

    @property
    def ring(self):
        return self.num.ring

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            if other.ring != self.ring:
                return None
            return other
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                return None
            return RationalFunction(other, reduce=False)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return RationalFunction(self.ring.constant(other), reduce=False)
        return None

    def __bool__(self):
        return bool(self.num)

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce=False)

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
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise NotInvertible(self, "zero rational function")
        return RationalFunction(self.den, self.num)

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
        out = RationalFunction(self.ring.one(), reduce=False)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        # cross multiplication: exact regardless of reduction quality
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        if self.den == self.ring.one():
            return hash(self.num)
        return hash((self.num, self.den))

    def is_polynomial(self):
        return self.den == self.ring.one()

    def as_scalar(self) -> GaussianRational:
        """The constant value, when num and den are both constants."""
        if self.num.degree() > 0 or self.den.degree() > 0:
            raise ValueError(f"{self} is not a constant")
        return self.num.constant_term() / self.den.constant_term()

    def evaluate(self, values: dict):
        den = self.den.evaluate(values)
        if not den:
            raise ZeroDivisionError(f"denominator vanishes at {values}")
        return self.num.evaluate(values) / den

    def __str__(self):
        if self.den == self.ring.one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"


def _reduce_fraction(num: MultiPoly, den: MultiPoly):
    ring = num.ring
    if num.is_zero():
        return num, ring.one()
    # shared monomial content
    cn, cd = monomial_content(num), monomial_content(den)
    common = tuple(min(a, b) for a, b in zip(cn, cd))
    if any(common):
        num, den = shift_down(num, common), shift_down(den, common)
    # constant denominator
    if den.degree() == 0:
        return num.scale(den.constant_term().inverse()), ring.one()
    # proportionality probes: these catch the common fill-in cases cheaply
    q = num.divide_exact(den)
    if q is not None:
        return q, ring.one()
    q = den.divide_exact(num)
    if q is not None:
        _, lc = q.leading()
        return ring.constant(lc.inverse()), q.scale(lc.inverse())
    # full gcd in the univariate case
    kn, kd = _univar_profile(num), _univar_profile(den)
    if kn is not None and kd is not None and (kn < 0 or kd < 0 or kn == kd):
        g = univariate_gcd(num, den)
        if g.degree() > 0:
            num = num.divide_exact(g)
            den = den.divide_exact(g)
    # normalize: monic denominator
    _, lc = den.leading()
    if lc != QI_ONE:
        inv = lc.inverse()
        num, den = num.scale(inv), den.scale(inv)
    return num, den


class FunctionField:
    """Field context for RationalFunction scalars over a given ring."""

    def __init__(self, ring: PolyRing):
        self.ring = ring

    def zero(self):
        return RationalFunction(self.ring.zero(), reduce=False)

    def one(self):
        return RationalFunction(self.ring.one(), reduce=False)

    def gen(self, name):
        return RationalFunction(self.ring.gen(name), reduce=False)

    def gens(self):
        return tuple(self.gen(v) for v in self.ring.variables)

    def coerce(self, value) -> RationalFunction:
        if isinstance(value, RationalFunction):
            if value.ring != self.ring:
                raise TypeError("rational function from a foreign ring")
            return value
        if isinstance(value, MultiPoly):
            return RationalFunction(self.ring.coerce(value), reduce=False)
        return RationalFunction(self.ring.constant(value), reduce=False)

    def __eq__(self, other):
        return isinstance(other, FunctionField) and other.ring == self.ring

    def __hash__(self):
        return hash(("FunctionField", self.ring))

    def __repr__(self):
        return f"FunctionField({self.ring!r})"


# ---------------------------------------------------------------------------
# matrix determinant and proportionality
# ---------------------------------------------------------------------------


def det4(rows):
    """Determinant of a 4x4 matrix by cofactor expansion.

    Entries may be any ring elements supporting +, -, *.
    """
    if len(rows) != 4 or any(len(r) != 4 for r in rows):
        raise ValueError("expected a 4x4 matrix")

    def det2(a, b, c, d):
        return a * d - b * c

    def det3(m):
        return (
            m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2])
            - m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2])
            + m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1])
        )

    total = None
    for j in range(4):
        minor = [[rows[r][c] for c in range(4) if c != j] for r in range(1, 4)]
        term = rows[0][j] * det3(minor)
        if j % 2 == 1:
            term = -term
        total = term if total is None else total + term
    return total


def _monomials_of_degree(nvars: int, degree: int):
    """All exponent tuples of the given total degree, lexicographically."""
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in _monomials_of_degree(nvars - 1, degree - first):
            yield (first,) + rest


def ideal_slice_membership(f: MultiPoly, generators, degree_bound: int,
                           main_names=None):
    """Decide membership of f in the degree-(deg f) slice of an ideal.

    The slice is the span of {g * m : g a generator, m a monomial,
    deg(g*m) = deg f}, i.e. membership without any division tricks; f must
    be homogeneous in the main variables and satisfy deg f <= degree_bound.

    With ``main_names`` given, degrees and monomials refer to those
    variables only and the remaining variables act as scalar parameters
    (the linear algebra then runs over the corresponding rational function
    field).  Returns (True, certificate) with certificate a list of
    (generator index, exponent tuple, coefficient), or (False, None).
    """
    from .linalg import SparseEchelon

    ring = f.ring
    if main_names is None:
        main_names = ring.variables
    main_names = tuple(main_names)
    param_names = tuple(v for v in ring.variables if v not in main_names)
    field = FunctionField(PolyRing(param_names)) if param_names else None

    def collect(poly):
        buckets = poly.split(main_names)
        if field is None:
            return {k: v.constant_term() for k, v in buckets.items()}
        return {
            k: RationalFunction(_project(v, ring, field.ring), reduce=False)
            for k, v in buckets.items()
        }

    def degree_of(exp):
        return sum(exp)

    f_parts = {k: v for k, v in collect(f).items()}
    if not f_parts:
        return True, []
    degs = {degree_of(k) for k in f_parts}
    if len(degs) > 1:
        raise ValueError(f"f is not homogeneous in {main_names}: degrees {degs}")
    d = degs.pop()
    if d > degree_bound:
        raise ValueError(f"deg f = {d} exceeds the bound {degree_bound}")

    column_index = {}

    def col_of(exp):
        if exp not in column_index:
            column_index[exp] = len(column_index)
        return column_index[exp]

    scalar_field = field if field is not None else _QQI_FIELD
    ech = SparseEchelon(scalar_field, track=True)
    tags = []
    for gi, g in enumerate(generators):
        g_parts = collect(g)
        gdegs = {degree_of(k) for k in g_parts}
        if len(gdegs) != 1:
            raise ValueError(f"generator {gi} is not homogeneous in {main_names}")
        e = gdegs.pop()
        if e > d:
            continue
        for mono in _monomials_of_degree(len(main_names), d - e):
            row = {}
            for k, coeff in g_parts.items():
                exp = tuple(a + b for a, b in zip(k, mono))
                row[col_of(exp)] = coeff
            tag = (gi, mono)
            tags.append(tag)
            ech.insert(row, tag=tag)
    target = {col_of(k): v for k, v in f_parts.items()}
    residual, combo = ech.reduce_with_combo(target)
    if residual:
        return False, None
    certificate = [(gi, mono, coeff) for (gi, mono), coeff in combo.items() if coeff]
    return True, certificate


def verify_slice_certificate(f: MultiPoly, generators, certificate,
                             main_names=None) -> bool:
    """Re-expand a membership certificate and compare against f.

    Handles rational-function coefficients by accumulating over a common
    denominator, so the final comparison is a polynomial identity.
    """
    ring = f.ring
    if main_names is None:
        main_names = ring.variables
    main_idx = [ring._index[v] for v in main_names]
    acc_num = ring.zero()
    acc_den = ring.one()
    for gi, mono, coeff in certificate:
        exp = [0] * ring.nvars
        for k, e in zip(main_idx, mono):
            exp[k] = e
        term = generators[gi] * ring.monomial(tuple(exp))
        if isinstance(coeff, RationalFunction):
            num = _embed(coeff.num, ring)
            den = _embed(coeff.den, ring)
        else:
            num = ring.constant(coeff)
            den = ring.one()
        acc_num = acc_num * den + term * num * acc_den
        acc_den = acc_den * den
    return acc_num == f * acc_den


def _project(poly: MultiPoly, ring: PolyRing, sub: PolyRing) -> MultiPoly:
    """Rewrite a poly supported on sub's variables into sub."""
    keep = [ring._index[v] for v in sub.variables]
    terms = {}
    for exp, c in poly.terms.items():
        terms[tuple(exp[k] for k in keep)] = c
    return MultiPoly(sub, terms)


def _embed(poly: MultiPoly, ring: PolyRing) -> MultiPoly:
    """Embed a poly from a variable-subset ring into the bigger ring."""
    pos = [ring._index[v] for v in poly.ring.variables]
    terms = {}
    for exp, c in poly.terms.items():
        big = [0] * ring.nvars
        for k, e in zip(pos, exp):
            big[k] = e
        terms[tuple(big)] = c
    return MultiPoly(ring, terms)


_QQI_FIELD = QQi


def proportionality_scalar(f: MultiPoly, g: MultiPoly, main_names):
    """If f = s*g for a scalar s rational in the non-main variables, return s.

    ``main_names`` are the variables whose monomials are compared (the x's);
    the ratio may depend on the remaining (parameter) variables.  Returns a
    RationalFunction, or None when f and g are not proportional.  Both zero
    counts as proportional with scalar 1.
    """
    if f.is_zero() and g.is_zero():
        return RationalFunction(f.ring.one(), reduce=False)
    if f.is_zero() or g.is_zero():
        return None
    cf = f.split(main_names)
    cg = g.split(main_names)
    if set(cf) != set(cg):
        return None
    key = max(cg, key=_grlex_key)
    fk, gk = cf[key], cg[key]
    # cross-multiplied comparison: f*gk == g*fk <=> f/g == fk/gk everywhere
    if f * gk != g * fk:
        return None
    return RationalFunction(fk, gk)
