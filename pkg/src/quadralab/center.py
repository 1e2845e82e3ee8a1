"""Central elements and the symbolic identities behind them.

Two independent verification routes are kept deliberately separate:

* ``GradedQuotient.is_central`` certifies centrality by exact degree-3
  ideal membership (one commutator per generator);
* the identity suite expands explicit free-algebra combinations of the
  relations with polynomial coefficients and checks that they reproduce
  the commutators in question, with zero residual.

Both run over symbolic coefficient rings, so the central elements of the
two families are certified for all parameter values at once.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionViolated
from .extension import ExtensionElement
from .freealg import (
    FreeElement,
    anticommutator,
    commutator,
    generators,
)
from .graded import GradedQuotient
from .poly import FunctionField, PolyRing
from .presentations import (
    CHLParams,
    chl_z_relations,
    sklyanin_relations,
    x_to_z_matrix,
)
from .freealg import apply_linear
from .scalars import GaussianRational, QQi
from .symmetry import ChlPsi


# ---------------------------------------------------------------------------
# the degree-two central elements
# ---------------------------------------------------------------------------


def sklyanin_central_pair(alpha, beta, gamma, field=QQi):
    """The two central degree-2 elements of a nondegenerate A(alpha,beta,gamma).

    Requires alpha+beta+gamma+alpha*beta*gamma = 0 and parameters outside
    {0, 1, -1}.  Returns (omega0, omega1) with

        omega0 = -x0^2 + x1^2 + x2^2 + x3^2
        omega1 =  x0^2 + beta*gamma*x1^2 - gamma*x2^2 + beta*x3^2
    """
    al, be, ga = (field.coerce(v) for v in (alpha, beta, gamma))
    if al + be + ga + al * be * ga:
        raise PreconditionViolated("alpha+beta+gamma+alpha*beta*gamma != 0")
    for name, v in (("alpha", al), ("beta", be), ("gamma", ga)):
        if not v or v == field.coerce(1) or v == field.coerce(-1):
            raise PreconditionViolated(f"{name} in {{0, 1, -1}}")
    x = generators(field)
    sq = [g * g for g in x]
    omega0 = -sq[0] + sq[1] + sq[2] + sq[3]
    omega1 = sq[0] + sq[1].scale(be * ga) - sq[2].scale(ga) + sq[3].scale(be)
    return omega0, omega1


def chl_z1(a, b, c, d, field=QQi):
    """The degree-2 central element of R(a,b,c,d), in both bases.

    Returns (x_form, z_form): the x-basis element
    a(x1x3+x3x1) + b(x2x4+x4x2) + c(x2^2+x4^2) + d(x1^2+x3^2) and its
    z-basis rewriting 2(b+c)z0^2 + 2(a+d)z1^2 + 2(d-a)z2^2 + 2(c-b)z3^2.
    The two are verified equal under the basis change.
    """
    a, b, c, d = (field.coerce(v) for v in (a, b, c, d))
    CHLParams(a, b, c, d)  # validates the nonzero-tuple requirement
    x = generators(field)  # read as x1..x4
    x1, x2, x3, x4 = x
    x_form = (
        anticommutator(x1, x3).scale(a)
        + anticommutator(x2, x4).scale(b)
        + (x2 * x2 + x4 * x4).scale(c)
        + (x1 * x1 + x3 * x3).scale(d)
    )
    z = generators(field)  # read as z0..z3
    two = field.coerce(2)
    z_form = (
        (z[0] * z[0]).scale(two * (b + c))
        + (z[1] * z[1]).scale(two * (a + d))
        + (z[2] * z[2]).scale(two * (d - a))
        + (z[3] * z[3]).scale(two * (c - b))
    )
    rewritten = apply_linear(x_to_z_matrix(field), x_form)
    if rewritten != z_form:
        raise AssertionError("x-basis and z-basis forms disagree under the basis change")
    return x_form, z_form


def chl_z1_central(a, b, c, d, field=QQi, quotient=None):
    """(central?, failing generator) for the z-basis element, degree-3 membership."""
    _, z_form = chl_z1(a, b, c, d, field)
    if quotient is None:
        space = chl_z_relations(a, b, c, d, field=field, verify=False)
        quotient = GradedQuotient(space)
    return quotient.is_central(z_form)


def chl_z2(a, b, c, d, field=QQi):
    """The second central element, over the fourth-root tower.

    Z2 = (a+d)(q2 q3)^-2 z0^2 + (b+c)(q2 q3)^2 z1^2
       + (c-b)(q3/q2)^2 z2^2 + (d-a)(q2/q3)^2 z3^2,

    which is exactly psi(Z1)/2 for the order-4 automorphism psi: the z2^2
    coefficient carries tau3^2 = (q3/q2)^2 because psi sends z3 to tau3 z2,
    and symmetrically for z3^2.  The equality with psi(Z1)/2 is asserted.
    Returns (psi, Z2).
    """
    psi = ChlPsi(a, b, c, d, field=field)
    tower = psi.field
    a_, b_, c_, d_ = psi.params.as_tuple()
    q2q3 = psi.q2 * psi.q3
    r23 = psi.q2 / psi.q3
    r32 = psi.q3 / psi.q2
    z = generators(tower)
    z2 = (
        (z[0] * z[0]).scale(tower.coerce(a_ + d_) * (q2q3.inverse() ** 2))
        + (z[1] * z[1]).scale(tower.coerce(b_ + c_) * (q2q3 ** 2))
        + (z[2] * z[2]).scale(tower.coerce(c_ - b_) * (r32 ** 2))
        + (z[3] * z[3]).scale(tower.coerce(d_ - a_) * (r23 ** 2))
    )
    _, z1_form = chl_z1(a, b, c, d, field)
    z1_lifted = FreeElement({w: tower.coerce(v) for w, v in z1_form.terms.items()})
    half = tower.coerce(Fraction(1, 2))
    if psi.map(z1_lifted).scale(half) != z2:
        raise AssertionError("Z2 does not equal psi(Z1)/2")
    return psi, z2


def tower_components(f: FreeElement):
    """Split a tower-coefficient element into base-coefficient components.

    The root-adjunction tower is a free module over its base field, so an
    element is in an ideal defined over the base iff each coordinate
    component is.  Returns {flattened root-monomial index: FreeElement}.
    """
    out = {}
    for word, coeff in f.terms.items():
        for idx, base_val in _flatten(coeff):
            if not base_val:
                continue
            comp = out.setdefault(idx, {})
            comp[word] = comp.get(word, None)
            comp[word] = base_val if comp[word] is None else comp[word] + base_val
    return {idx: FreeElement(terms) for idx, terms in out.items()}


def _flatten(value):
    if isinstance(value, ExtensionElement):
        for k, sub in enumerate(value.coeffs):
            for idx, base_val in _flatten(sub):
                yield (k,) + idx, base_val
    else:
        yield (), value


def _is_base_constant(value) -> bool:
    while isinstance(value, ExtensionElement):
        if not value.is_constant():
            return False
        value = value.constant_part()
    return True


def _to_base(value):
    while isinstance(value, ExtensionElement):
        value = value.constant_part()
    return value


def chl_z2_central(a, b, c, d, field=QQi, quotient=None):
    """Degree-3 membership check for Z2 over the base field.

    Z2 times (q2 q3)^2 has base-field coefficients (the fourth powers of
    the roots collapse), and centrality is invariant under that unit
    scaling, so the commutators are reduced as ordinary base-field
    vectors.  A tower-component fallback handles any coefficient that
    fails to collapse.
    """
    psi, z2 = chl_z2(a, b, c, d, field)
    if quotient is None:
        space = chl_z_relations(a, b, c, d, field=field, verify=False)
        quotient = GradedQuotient(space)
    unit = (psi.q2 * psi.q3) ** 2
    scaled = z2.scale(unit)
    if all(_is_base_constant(v) for v in scaled.terms.values()):
        base = FreeElement({w: _to_base(v) for w, v in scaled.terms.items()})
        return quotient.is_central(base)
    zgens = generators(psi.field)
    for g, zg in enumerate(zgens):
        com = commutator(scaled, zg)
        for component in tower_components(com).values():
            if component.is_zero():
                continue
            if not quotient.contains(component):
                return False, g
    return True, None


# ---------------------------------------------------------------------------
# the free-algebra identity suite
# ---------------------------------------------------------------------------


def _relation_elements(field, alphas):
    """c_i = [x0,xi] - alpha_i {xj,xk}, a_i = {x0,xi} - [xj,xk]."""
    x = generators(field)
    cs, as_ = {}, {}
    cyc = {1: (2, 3), 2: (3, 1), 3: (1, 2)}
    for i, (j, k) in cyc.items():
        cs[i] = commutator(x[0], x[i]) - anticommutator(x[j], x[k]).scale(alphas[i - 1])
        as_[i] = anticommutator(x[0], x[i]) - commutator(x[j], x[k])
    return x, cs, as_


def squares_identity_report(field=None, alphas=None):
    """The four identity families proving the squares central.

    Over Q(i)[a1,a2,a3] (or any supplied coefficient field) and for every
    cyclic (i,j,k), the stated combinations of {x_m, c_i} and [x_m, a_i]
    collapse to (a1+a2+a3+a1*a2*a3) times a single commutator with a
    square.  Returns {(family, i): residual-is-zero}.
    """
    if field is None:
        ring = PolyRing(("a1", "a2", "a3"))
        field = FunctionField(ring)
        alphas = field.gens()
    a1, a2, a3 = alphas
    sigma_pi = a1 + a2 + a3 + a1 * a2 * a3
    x, c, a = _relation_elements(field, alphas)
    al = {1: a1, 2: a2, 3: a3}
    one = field.one()
    report = {}
    for i, j, k in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        ai, aj, ak = al[i], al[j], al[k]
        sq = lambda g: x[g] * x[g]

        lhs = (
            anticommutator(x[i], c[i]).scale(aj + ak)
            - commutator(x[i], a[i]).scale(ai * (aj * ak + one))
            - (anticommutator(x[j], c[j]) + commutator(x[j], a[j])).scale(ai * (ak + one))
            + (anticommutator(x[k], c[k]) + commutator(x[k], a[k])).scale(ai * (aj - one))
        )
        rhs = commutator(x[0], sq(i)).scale(sigma_pi)
        report[("x0-xi2", i)] = (lhs - rhs).is_zero()

        lhs = (
            anticommutator(x[j], a[i]).scale(aj + ak)
            + commutator(x[j], c[i]).scale(aj * ak + one)
            - (anticommutator(x[i], a[j]).scale(aj) + commutator(x[i], c[j])).scale(ak + one)
            + (commutator(x[0], a[k]) - anticommutator(x[0], c[k])).scale(aj - one)
        )
        rhs = commutator(x[k], sq(j)).scale(sigma_pi)
        report[("xk-xj2", i)] = (lhs - rhs).is_zero()

        # the [xi, cj] coefficient here is -(ai*ak + 1); the variant
        # -ai*(aj*ak + 1) fails, as does a minus on the last bracket
        lhs = (
            anticommutator(x[i], a[j]).scale(ai + ak)
            - commutator(x[i], c[j]).scale(ai * ak + one)
            + (anticommutator(x[0], c[k]) - commutator(x[0], a[k])).scale(ai + one)
            + (anticommutator(x[j], a[i]).scale(ai) - commutator(x[j], c[i])).scale(ak - one)
        )
        rhs = commutator(x[k], sq(i)).scale(-sigma_pi)
        report[("xk-xi2", i)] = (lhs - rhs).is_zero()

        # signs fixed by solving the 6-bracket linear system: the first two
        # terms enter positively and the last bracket negatively
        lhs = (
            anticommutator(x[0], c[i]).scale(aj + ak)
            + commutator(x[0], a[i]).scale(ai * (aj * ak + one))
            + (anticommutator(x[k], a[j]).scale(aj) - commutator(x[k], c[j])).scale(ai * (ak + one))
            - (anticommutator(x[j], a[k]).scale(ak) + commutator(x[j], c[k])).scale(ai * (aj - one))
        )
        rhs = commutator(x[i], sq(0)).scale(-sigma_pi)
        report[("xi-x02", i)] = (lhs - rhs).is_zero()
    return report


def central_pair_identity_report():
    """The two identities behind the Sklyanin-type central pair.

    Works over Q(i)(a1, a2) with a3 eliminated through the constraint
    a1+a2+a3+a1*a2*a3 = 0, i.e. a3 = -(a1+a2)/(1+a1*a2); the guard
    1+a1*a2 != 0 holds identically in the function field.
    """
    ring = PolyRing(("a1", "a2"))
    field = FunctionField(ring)
    a1, a2 = field.gens()
    one = field.one()
    a3 = -(a1 + a2) / (one + a1 * a2)
    x, c, a = _relation_elements(field, (a1, a2, a3))
    sq = [g * g for g in x]
    report = {}

    lhs = (
        anticommutator(x[1], c[1]).scale(one + a2 * a3)
        + commutator(x[1], a[1]).scale(a2 * a3)
        + anticommutator(x[2], c[2]).scale(one + a3)
        + commutator(x[2], a[2]).scale(a3)
        + anticommutator(x[3], c[3]).scale(one - a2)
        - commutator(x[3], a[3]).scale(a2)
    )
    rhs = commutator(x[0], sq[1] + sq[2] + sq[3])
    report["x0-com"] = (lhs - rhs).is_zero()

    lhs = (
        (anticommutator(x[0], c[1]) + commutator(x[0], a[1]).scale(a1)).scale(one + a2)
        + commutator(x[3], c[2]).scale(one - a1)
        + anticommutator(x[3], a[2]).scale(one + a1 + a1 * a2 * 2)
        - (commutator(x[2], c[3]) + anticommutator(x[2], a[3])).scale(one + a1 * a2)
    )
    rhs = commutator(x[1], -sq[0] + sq[1] + sq[2] + sq[3]).scale((one + a1) * (one + a2))
    report["x1-omega0"] = (lhs - rhs).is_zero()
    return report


def chl_identity_report():
    """The two commutative identities behind the parameter correspondence.

    First: ab r^2 + ab s^2 + cd p^2 + cd q^2 = 2(ac+bd)(ad+bc), an
    unconditional polynomial identity once p,q,r,s are expanded.  Second:
    the cleared-denominator expression for the parameter-sum combination
    equals 2(ab+cd)(p^2 q^2 - r^2 s^2) modulo the quadric polynomial
    ac+bd, certified by slice membership.
    """
    from .poly import ideal_slice_membership, verify_slice_certificate

    ring = PolyRing(("a", "b", "c", "d"))
    a, b, c, d = ring.gens()
    p, q, r, s = a + b, a - b, c + d, c - d
    report = {}
    first = a * b * (r * r + s * s) + c * d * (p * p + q * q) - (
        (a * c + b * d) * (a * d + b * c)
    ).scale(GaussianRational(2))
    report["square-combination"] = first.is_zero()

    lhs = (
        (r * r - p * p) * (r * r - q * q) * a * b
        + (p * p - s * s) * (q * q - s * s) * a * b
        + (q * q - s * s) * (r * r - q * q) * c * d
        + (r * r - p * p) * (p * p - s * s) * c * d
    )
    rhs = ((a * b + c * d) * (p * p * q * q - r * r * s * s)).scale(GaussianRational(2))
    ok, cert = ideal_slice_membership(lhs - rhs, [a * c + b * d], 6)
    report["sum-product-combination"] = ok and verify_slice_certificate(
        lhs - rhs, [a * c + b * d], cert
    )
    return report


# ---------------------------------------------------------------------------
# generator search for the quantized-enveloping-style presentation
# ---------------------------------------------------------------------------


def uqsl2_generator_search(alpha, field=QQi):
    """Search degree-1 binomials Y+, Y-, K, K' satisfying the four relations

        K Y+ = -i Y+ K,   K Y- = +i Y- K,
        K' Y+ = +i Y+ K', K' Y- = -i Y- K',
        [Y+, Y-] = i (K'^2 - K^2),
        [K, K'] = i alpha (Y+^2 - Y-^2)

    in A(alpha, 1, -1), via degree-2 normal forms.  Candidates are all
    x_m + e*x_n with m < n and e in {1, -1, i, -i}; assignments with Y+
    projectively equal to K or K' (or Y- likewise) are reported separately
    as degenerate.  Returns (solutions, degenerate_hits) where a solution
    records the four chosen binomials by (m, n, e) triples.
    """
    al = field.coerce(alpha)
    if not al or al == field.coerce(1) or al == field.coerce(-1):
        raise PreconditionViolated("alpha must avoid {0, 1, -1}")
    space = sklyanin_relations(al, field.coerce(1), field.coerce(-1), field=field)
    quotient = GradedQuotient(space)
    i = field.coerce(GaussianRational(0, 1))
    x = generators(field)
    units = (field.coerce(1), field.coerce(-1), i, -i)
    candidates = []
    for m in range(4):
        for n in range(m + 1, 4):
            for e in units:
                candidates.append(((m, n, e), x[m] + x[n].scale(e)))

    def in_ideal(f):
        return quotient.contains(f)

    # prune pairwise: braiding pairs (K, Y) with K Y = s i Y K
    braid = {}
    for s, tag in ((-1, "minus"), (1, "plus")):
        si = i if s > 0 else -i
        pairs = []
        for km, kf in candidates:
            for ym, yf in candidates:
                if km == ym:
                    continue
                if in_ideal(kf * yf - (yf * kf).scale(si)):
                    pairs.append((km, ym))
        braid[tag] = set(pairs)

    solutions = []
    degenerate = []
    proj = {}
    for key, f in candidates:
        m, n, e = key
        proj[key] = (m, n, e)

    def proj_equal(k1, k2):
        # x_m + e x_n candidates are projectively equal iff identical here
        return k1 == k2

    for kk, kf in candidates:
        for kpk, kpf in candidates:
            if kk == kpk:
                continue
            for ypk, ypf in candidates:
                if (kk, ypk) not in braid["minus"] or (kpk, ypk) not in braid["plus"]:
                    continue
                for ymk, ymf in candidates:
                    if (kk, ymk) not in braid["plus"] or (kpk, ymk) not in braid["minus"]:
                        continue
                    if ymk == ypk:
                        continue
                    rel3 = commutator(ypf, ymf) - (kpf * kpf - kf * kf).scale(i)
                    if not in_ideal(rel3):
                        continue
                    rel4 = commutator(kf, kpf) - (ypf * ypf - ymf * ymf).scale(i * al)
                    if not in_ideal(rel4):
                        continue
                    assignment = {"Y+": ypk, "Y-": ymk, "K": kk, "K'": kpk}
                    if len({ypk, ymk, kk, kpk}) < 4:
                        degenerate.append(assignment)
                    else:
                        solutions.append(assignment)
    return solutions, degenerate


def literal_assignment_fails(alpha, field=QQi) -> bool:
    """The assignment Y+ = K = x0+x1, Y- = K' = x0-x1 is degenerate and
    fails the braiding relation K Y+ = -i Y+ K in A(alpha, 1, -1)."""
    al = field.coerce(alpha)
    space = sklyanin_relations(al, field.coerce(1), field.coerce(-1), field=field)
    quotient = GradedQuotient(space)
    i = field.coerce(GaussianRational(0, 1))
    x = generators(field)
    yp = x[0] + x[1]
    k = x[0] + x[1]
    rel = k * yp + (yp * k).scale(i)
    return not quotient.contains(rel)
