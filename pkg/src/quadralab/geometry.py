"""The zero locus of the relations in P^3 x P^3.

The six relations of A(alpha,beta,gamma), read as (1,1)-forms, cut out a
subscheme of P^3 x P^3.  Its first projection is the vanishing locus of
the fifteen 4x4 minors of a 6x4 matrix M of linear forms (M x^T = 0
reproduces the relations); the second projection likewise comes from a
4x6 matrix M'.  When alpha*beta*gamma and the quantity
alpha+beta+gamma+alpha*beta*gamma are both nonzero, the locus is twenty
distinct points forming the graph of an explicit bijection, and this
module verifies every piece of that picture by exact evaluation.

Square roots (a, b, c) of the parameters are explicit inputs throughout,
so the twenty-point table stays inside Q(i) for rational fixtures.
"""

from __future__ import annotations

from .errors import DegenerateParameters, PreconditionViolated
from .linalg import make_echelon
from .poly import (
    MultiPoly,
    PolyRing,
    det4,
    ideal_slice_membership,
    proportionality_scalar,
)
from .presentations import sklyanin_relations
from .scalars import QI_I, QI_ONE, QQi

X_VARS = ("x0", "x1", "x2", "x3")
PARAM_VARS = ("alpha", "beta", "gamma")


def x_ring() -> PolyRing:
    return PolyRing(X_VARS)


def symbolic_ring() -> PolyRing:
    return PolyRing(PARAM_VARS + X_VARS)


def _coerce_params(ring, alpha, beta, gamma):
    out = []
    for v in (alpha, beta, gamma):
        if isinstance(v, MultiPoly):
            out.append(ring.coerce(v))
        else:
            out.append(ring.constant(QQi.coerce(v)))
    return out


def matrix_m(alpha, beta, gamma, ring=None):
    """The 6x4 matrix of linear forms with M x^T = 0 in the algebra."""
    ring = ring or x_ring()
    al, be, ga = _coerce_params(ring, alpha, beta, gamma)
    x0, x1, x2, x3 = (ring.gen(v) for v in X_VARS)
    return [
        [-x1, x0, -al * x3, -al * x2],
        [-x2, -be * x3, x0, -be * x1],
        [-x3, -ga * x2, -ga * x1, x0],
        [-x3, -x2, x1, -x0],
        [-x1, -x0, -x3, x2],
        [-x2, x3, -x0, -x1],
    ]


def matrix_m_prime(alpha, beta, gamma, ring=None):
    """The 4x6 matrix of linear forms with x M' = 0 in the algebra."""
    ring = ring or x_ring()
    al, be, ga = _coerce_params(ring, alpha, beta, gamma)
    x0, x1, x2, x3 = (ring.gen(v) for v in X_VARS)
    return [
        [-x1, -x2, -x3, -x3, -x1, -x2],
        [x0, be * x3, ga * x2, x2, -x0, -x3],
        [al * x3, x0, ga * x1, -x1, x3, -x0],
        [al * x2, be * x1, x0, -x0, -x2, x1],
    ]


def _rows_of_bilinear_matrix(matrix, ring, transpose=False):
    """Degree-2 coefficient rows of M x^T (or x M' when transpose=True)."""
    x_index = {v: k for k, v in enumerate(X_VARS)}
    rows = []
    count = len(matrix[0]) if transpose else len(matrix)
    for t in range(count):
        entries = [matrix[k][t] for k in range(4)] if transpose else matrix[t]
        row = {}
        for j, entry in enumerate(entries):
            for exp, coeff in entry.terms.items():
                k = _linear_letter(exp, ring)
                idx = (j * 4 + k) if transpose else (k * 4 + j)
                row[idx] = row.get(idx, QQi.zero()) + coeff
        rows.append({c: v for c, v in row.items() if v})
    return rows


def _linear_letter(exp, ring):
    letters = [k for k, e in enumerate(exp) if e]
    if len(letters) != 1 or exp[letters[0]] != 1:
        raise ValueError("matrix entries must be linear forms in x0..x3")
    name = ring.variables[letters[0]]
    return X_VARS.index(name)


def verify_matrix_consistency(alpha, beta, gamma) -> dict:
    """Check both matrix encodings against the relation rows.

    Each row of M x^T is a signed relation row (the order mixes the
    commutator-type and anticommutator-type relations), and the row spaces
    agree exactly; same for x M'.
    """
    space = sklyanin_relations(alpha, beta, gamma)
    ring = x_ring()
    m_rows = _rows_of_bilinear_matrix(matrix_m(alpha, beta, gamma, ring), ring)
    mp_rows = _rows_of_bilinear_matrix(
        matrix_m_prime(alpha, beta, gamma, ring), ring, transpose=True
    )
    report = {"m_matches": [], "m_prime_matches": []}
    for label, rows, key in (("M", m_rows, "m_matches"),
                             ("M'", mp_rows, "m_prime_matches")):
        ech = make_echelon(space.field)
        for row in rows:
            ech.insert(row)
        if ech.rank != 6 or not all(ech.contains(r) for r in space.rows):
            raise AssertionError(f"{label} rows do not span the relation space")
        for i, row in enumerate(rows):
            match = None
            for j, rel in enumerate(space.rows):
                for sign in (1, -1):
                    if row == {c: v * sign for c, v in rel.items()}:
                        match = (space.row_names[j], sign)
                        break
                if match:
                    break
            if match is None:
                raise AssertionError(f"{label} row {i+1} is not a signed relation row")
            report[key].append(match)
    return report


# ---------------------------------------------------------------------------
# minors and their factorizations
# ---------------------------------------------------------------------------

MINOR_PAIRS = tuple(
    (i, j) for i in range(1, 7) for j in range(i + 1, 7)
)


def minor_h(m_matrix, i: int, j: int) -> MultiPoly:
    """4x4 minor of the 6x4 matrix M with rows i<j (1-based) deleted."""
    rows = [m_matrix[k] for k in range(6) if k + 1 not in (i, j)]
    return det4(rows)


def minor_g(mp_matrix, i: int, j: int) -> MultiPoly:
    """4x4 minor of the 4x6 matrix M' with columns i<j (1-based) deleted."""
    cols = [k for k in range(6) if k + 1 not in (i, j)]
    rows = [[mp_matrix[r][c] for c in cols] for r in range(4)]
    return det4(rows)


def quadrics(alpha, beta, gamma, ring=None):
    """The four quadrics q, q1, q2, q3 attached to the parameters."""
    ring = ring or x_ring()
    al, be, ga = _coerce_params(ring, alpha, beta, gamma)
    x0, x1, x2, x3 = (ring.gen(v) for v in X_VARS)
    sq = [x0 * x0, x1 * x1, x2 * x2, x3 * x3]
    q = sq[0] + sq[1] + sq[2] + sq[3]
    q1 = sq[0] - be * ga * sq[1] - ga * sq[2] + be * sq[3]
    q2 = sq[0] + ga * sq[1] - al * ga * sq[2] - al * sq[3]
    q3 = sq[0] - be * sq[1] + al * sq[2] - al * be * sq[3]
    return q, q1, q2, q3


def quadric_determinant(alpha, beta, gamma):
    """det of the 4x4 coefficient matrix of (q, q1, q2, q3).

    Works for numeric or symbolic parameters; equals the negative square
    of alpha+beta+gamma+alpha*beta*gamma.
    """
    if any(isinstance(v, MultiPoly) for v in (alpha, beta, gamma)):
        ring = alpha.ring
        al, be, ga = (ring.coerce(v) for v in (alpha, beta, gamma))
        one = ring.one()
    else:
        al, be, ga = (QQi.coerce(v) for v in (alpha, beta, gamma))
        one = QQi.one()
    rows = [
        [one, one, one, one],
        [one, -be * ga, -ga, be],
        [one, ga, -al * ga, -al],
        [one, -be, al, -al * be],
    ]
    return det4(rows)


#: stated product factorizations: minor pair -> (bilinear factor spec, quadric tag)
#: the bilinear factor is (xu*xv, coefficient tag, xw*xt) meaning
#: xu*xv + coeff * xw*xt with coeff drawn from {alpha, beta, gamma, +-1}
H_PRODUCT_FORMS = {
    (2, 3): (("x0", "x1"), "-alpha", ("x2", "x3"), "q"),
    (4, 6): (("x0", "x1"), "+alpha", ("x2", "x3"), "q1"),
    (2, 4): (("x0", "x1"), "-1", ("x2", "x3"), "q2"),
    (3, 6): (("x0", "x1"), "+1", ("x2", "x3"), "q3"),
    (1, 3): (("x0", "x2"), "-beta", ("x1", "x3"), "q"),
    (1, 4): (("x0", "x2"), "+1", ("x1", "x3"), "q1"),
    (4, 5): (("x0", "x2"), "+beta", ("x1", "x3"), "q2"),
    (3, 5): (("x0", "x2"), "-1", ("x1", "x3"), "q3"),
    (1, 2): (("x0", "x3"), "-gamma", ("x1", "x2"), "q"),
    (1, 6): (("x0", "x3"), "-1", ("x1", "x2"), "q1"),
    (2, 5): (("x0", "x3"), "+1", ("x1", "x2"), "q2"),
    (5, 6): (("x0", "x3"), "+gamma", ("x1", "x2"), "q3"),
}

#: the three remaining minors: (squares form, q-combination form)
H_SQUARE_FORMS = ((3, 4), (2, 6), (1, 5))


def _coeff_from_tag(tag, al, be, ga, ring):
    sign = -1 if tag[0] == "-" else 1
    name = tag[1:]
    if name == "1":
        base = ring.one()
    else:
        base = {"alpha": al, "beta": be, "gamma": ga}[name]
    return base.scale(QQi.coerce(sign)) if sign < 0 else base


def stated_minor_form(pair, alpha, beta, gamma, ring):
    """The claimed factored expression for the minor at the given pair."""
    al, be, ga = _coerce_params(ring, alpha, beta, gamma)
    q, q1, q2, q3 = quadrics(alpha, beta, gamma, ring)
    qs = {"q": q, "q1": q1, "q2": q2, "q3": q3}
    x = {v: ring.gen(v) for v in X_VARS}
    sq = {v: x[v] * x[v] for v in X_VARS}
    if pair in H_PRODUCT_FORMS:
        (u, v), tag, (w, t), qt = H_PRODUCT_FORMS[pair]
        coeff = _coeff_from_tag(tag, al, be, ga, ring)
        return (x[u] * x[v] + coeff * x[w] * x[t]) * qs[qt]
    if pair == (3, 4):
        return (al * be * sq["x3"] - sq["x0"]) * (sq["x1"] + sq["x2"]) + (
            al * sq["x2"] - be * sq["x1"]
        ) * (sq["x0"] + sq["x3"])
    if pair == (2, 6):
        return (al * ga * sq["x2"] - sq["x0"]) * (sq["x1"] + sq["x3"]) + (
            ga * sq["x1"] - al * sq["x3"]
        ) * (sq["x0"] + sq["x2"])
    if pair == (1, 5):
        return (be * ga * sq["x1"] - sq["x0"]) * (sq["x2"] + sq["x3"]) + (
            be * sq["x3"] - ga * sq["x2"]
        ) * (sq["x0"] + sq["x1"])
    raise KeyError(pair)


def stated_minor_q_form(pair, alpha, beta, gamma, ring):
    """The alternative quadric-combination form for the three square minors."""
    al, be, ga = _coerce_params(ring, alpha, beta, gamma)
    q, q1, q2, q3 = quadrics(alpha, beta, gamma, ring)
    x = {v: ring.gen(v) for v in X_VARS}
    sq = {v: x[v] * x[v] for v in X_VARS}
    if pair == (3, 4):
        return (al * be * sq["x3"] - sq["x0"]) * q + (sq["x0"] + sq["x3"]) * q3
    if pair == (2, 6):
        return (al * ga * sq["x2"] - sq["x0"]) * q + (sq["x0"] + sq["x2"]) * q2
    if pair == (1, 5):
        return (be * ga * sq["x1"] - sq["x0"]) * q + (sq["x0"] + sq["x1"]) * q1
    raise KeyError(pair)


def minor_factorization_report(symbolic=True, alpha=None, beta=None, gamma=None):
    """Verify all fifteen stated minor factorizations up to nonzero scalars.

    With symbolic=True the check runs over Q(i)[alpha,beta,gamma,x0..x3];
    the report lists the computed proportionality scalar for each pair,
    the agreement of the two stated forms for the three square-type
    minors, and the mirror identity g_ij(x) ~ h_ij(-x0,x1,x2,x3).
    """
    if symbolic:
        ring = symbolic_ring()
        al, be, ga = (ring.gen(v) for v in PARAM_VARS)
    else:
        ring = x_ring()
        al, be, ga = alpha, beta, gamma
    m = matrix_m(al, be, ga, ring)
    mp = matrix_m_prime(al, be, ga, ring)
    report = {}
    for pair in MINOR_PAIRS:
        h = minor_h(m, *pair)
        g = minor_g(mp, *pair)
        stated = stated_minor_form(pair, al, be, ga, ring)
        scalar = proportionality_scalar(h, stated, X_VARS)
        if scalar is None or not scalar.num:
            raise AssertionError(f"minor {pair}: stated factorization fails")
        entry = {"scalar": scalar}
        if pair in dict.fromkeys(H_SQUARE_FORMS):
            alt = stated_minor_q_form(pair, al, be, ga, ring)
            if alt != stated:
                raise AssertionError(f"minor {pair}: the two stated forms differ")
            entry["q_form_matches"] = True
        mirror = h.substitute({"x0": -ring.gen("x0")})
        mirror_scalar = proportionality_scalar(g, mirror, X_VARS)
        if mirror_scalar is None or not mirror_scalar.num:
            raise AssertionError(f"minor {pair}: g vs h(-x0) mirror fails")
        entry["mirror_scalar"] = mirror_scalar
        report[pair] = entry
    return report


def minors_vanish_on_common_quadric_locus(alpha, beta, gamma):
    """When the parameter sum vanishes, every minor lies in (q, q1).

    Checked by slice membership of each 4x4 minor in the degree-4 part of
    the ideal generated by q and q1.
    """
    al, be, ga = (QQi.coerce(v) for v in (alpha, beta, gamma))
    if al + be + ga + al * be * ga:
        raise PreconditionViolated("alpha+beta+gamma+alpha*beta*gamma != 0")
    ring = x_ring()
    q, q1, _, _ = quadrics(al, be, ga, ring)
    m = matrix_m(al, be, ga, ring)
    out = {}
    for pair in MINOR_PAIRS:
        h = minor_h(m, *pair)
        ok, cert = ideal_slice_membership(h, [q, q1], 4)
        out[pair] = ok
        if not ok:
            raise AssertionError(f"minor {pair} is not in (q, q1)")
    return out


# ---------------------------------------------------------------------------
# projective points, the twenty-point table, and the bijection
# ---------------------------------------------------------------------------


class ProjectivePoint:
    """Homogeneous coordinate 4-tuple, normalized to leading coefficient 1."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = [QQi.coerce(c) for c in coords]
        if len(coords) != 4:
            raise ValueError("projective points here live in P^3")
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise ValueError("(0,0,0,0) is not a projective point")
        inv = lead.inverse()
        object.__setattr__(self, "coords", tuple(c * inv for c in coords))

    def __setattr__(self, *_):
        raise AttributeError("ProjectivePoint is immutable")

    def __getitem__(self, k):
        return self.coords[k]

    def __iter__(self):
        return iter(self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def negate_first(self) -> "ProjectivePoint":
        c = self.coords
        return ProjectivePoint((-c[0], c[1], c[2], c[3]))

    def sign_flip(self, pattern) -> "ProjectivePoint":
        """Negate the coordinates listed in pattern."""
        return ProjectivePoint(
            tuple(-c if k in pattern else c for k, c in enumerate(self.coords))
        )

    def evaluate(self, poly: MultiPoly):
        values = {name: self.coords[k] for k, name in enumerate(X_VARS)}
        return poly.evaluate(values)

    def __repr__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


#: coordinate sign patterns of the three involutions (indices negated)
GAMMA_PATTERNS = {1: (2, 3), 2: (1, 3), 3: (1, 2)}


class PointTable:
    """The twenty points attached to square roots (a, b, c) of the parameters.

    Stratum "inf" holds the four coordinate points; stratum 0 the orbit of
    (abc, a, b, c) under coordinate sign flips; stratum i the four points
    whose first coordinate is the i-th square root.  Points within each
    nonzero stratum are the images of its top point under the three sign
    involutions, in order.
    """

    def __init__(self, a, b, c):
        a, b, c = (QQi.coerce(v) for v in (a, b, c))
        if not (a and b and c):
            raise DegenerateParameters("square roots a, b, c must be nonzero")
        self.a, self.b, self.c = a, b, c
        i = QI_I
        one = QI_ONE
        e = [ProjectivePoint([one if k == j else 0 for k in range(4)]) for j in range(4)]
        tops = {
            0: ProjectivePoint((a * b * c, a, b, c)),
            1: ProjectivePoint((a, -i * a, -i, -one)),
            2: ProjectivePoint((b, -one, -i * b, -i)),
            3: ProjectivePoint((c, -i, -one, -i * c)),
        }
        self.strata = {"inf": e}
        for s, top in tops.items():
            self.strata[str(s)] = [
                top,
                top.sign_flip(GAMMA_PATTERNS[1]),
                top.sign_flip(GAMMA_PATTERNS[2]),
                top.sign_flip(GAMMA_PATTERNS[3]),
            ]
        self._stratum_of = {}
        for label, pts in self.strata.items():
            for p in pts:
                self._stratum_of[p] = label

    def points(self):
        out = []
        for label in ("inf", "0", "1", "2", "3"):
            out.extend(self.strata[label])
        return out

    def stratum_of(self, p: ProjectivePoint) -> str:
        try:
            return self._stratum_of[p]
        except KeyError:
            raise KeyError(f"{p!r} is not one of the twenty points") from None

    def all_distinct(self) -> bool:
        pts = self.points()
        return len(set(pts)) == len(pts)

    def theta(self, p: ProjectivePoint) -> ProjectivePoint:
        """The bijection: identity on stratum inf, negate-first on stratum 0,
        negate-first composed with the matching sign involution on stratum i."""
        label = self.stratum_of(p)
        if label == "inf":
            return p
        if label == "0":
            return p.negate_first()
        return p.sign_flip(GAMMA_PATTERNS[int(label)]).negate_first()

    def graph(self):
        """The twenty pairs (p, theta(p))."""
        return [(p, self.theta(p)) for p in self.points()]


def point_table(a, b, c) -> PointTable:
    return PointTable(a, b, c)


def theta(a, b, c, p: ProjectivePoint) -> ProjectivePoint:
    """The bijection attached to the roots (a, b, c), at a table point."""
    return point_table(a, b, c).theta(p)


def gamma_graph(a, b, c):
    """The twenty pairs (p, theta(p)) for the given square roots."""
    return point_table(a, b, c).graph()


def evaluate_bilinear(row: dict, p: ProjectivePoint, pp: ProjectivePoint):
    """Value of a degree-2 coefficient row as a (1,1)-form at (p, p')."""
    total = QQi.zero()
    for idx, coeff in row.items():
        k, l = divmod(idx, 4)
        total = total + coeff * p[k] * pp[l]
    return total


class GammaReport:
    def __init__(self):
        self.distinct = None
        self.forms_vanish = None
        self.kernel_dimension = None
        self.kernel_is_relation_space = None
        self.minors_vanish = None
        self.failures = []

    def all_pass(self) -> bool:
        return (
            self.distinct
            and self.forms_vanish
            and self.kernel_dimension == 6
            and self.kernel_is_relation_space
            and self.minors_vanish
        )

    def as_dict(self):
        return {
            "points_distinct": self.distinct,
            "relation_forms_vanish_on_graph": self.forms_vanish,
            "evaluation_kernel_dimension": self.kernel_dimension,
            "kernel_equals_relation_space": self.kernel_is_relation_space,
            "minors_vanish_at_projections": self.minors_vanish,
            "failures": self.failures,
        }


def verify_gamma(alpha, beta, gamma, a, b, c) -> GammaReport:
    """The four-assertion verification of the twenty-point picture.

    (i) the twenty points are pairwise distinct; (ii) all six relation
    forms vanish at every graph pair; (iii) the forms vanishing on the
    graph are exactly the 6-dimensional relation space; (iv) the fifteen
    minors of M vanish at first-projection points and those of M' at
    second-projection points.
    """
    al, be, ga = (QQi.coerce(v) for v in (alpha, beta, gamma))
    a_, b_, c_ = (QQi.coerce(v) for v in (a, b, c))
    if not al * be * ga:
        raise PreconditionViolated("alpha*beta*gamma = 0")
    if not al + be + ga + al * be * ga:
        raise PreconditionViolated("alpha+beta+gamma+alpha*beta*gamma = 0")
    for root, value, name in ((a_, al, "a"), (b_, be, "b"), (c_, ga, "c")):
        if root * root != value:
            raise PreconditionViolated(f"{name}^2 does not equal the parameter")

    report = GammaReport()
    table = point_table(a_, b_, c_)
    graph = table.graph()
    report.distinct = table.all_distinct()
    if not report.distinct:
        report.failures.append("points are not pairwise distinct")

    space = sklyanin_relations(al, be, ga)
    report.forms_vanish = True
    for p, pp in graph:
        for name, row in zip(space.row_names, space.rows):
            value = evaluate_bilinear(row, p, pp)
            if value:
                report.forms_vanish = False
                report.failures.append(f"form {name} is nonzero at ({p!r}, {pp!r})")

    # kernel of the 20x16 evaluation matrix
    ech = make_echelon(QQi)
    for p, pp in graph:
        row = {}
        for k in range(4):
            for l in range(4):
                v = p[k] * pp[l]
                if v:
                    row[k * 4 + l] = v
        ech.insert(row)
    report.kernel_dimension = 16 - ech.rank
    if report.kernel_dimension != 6:
        report.failures.append(
            f"evaluation kernel has dimension {report.kernel_dimension}, not 6"
        )
    # the relation rows already vanish on the graph (checked above), and a
    # 6-dimensional kernel containing the 6-dimensional relation space is it
    report.kernel_is_relation_space = (
        report.kernel_dimension == 6 and report.forms_vanish
    )

    ring = x_ring()
    m = matrix_m(al, be, ga, ring)
    mp = matrix_m_prime(al, be, ga, ring)
    report.minors_vanish = True
    for pair in MINOR_PAIRS:
        h = minor_h(m, *pair)
        g = minor_g(mp, *pair)
        for p, pp in graph:
            if p.evaluate(h):
                report.minors_vanish = False
                report.failures.append(f"minor h{pair} nonzero at {p!r}")
            if pp.evaluate(g):
                report.minors_vanish = False
                report.failures.append(f"minor g{pair} nonzero at {pp!r}")
    return report


# ---------------------------------------------------------------------------
# the eight-point lemma and the elliptic curve with its order-4 map
# ---------------------------------------------------------------------------


def eight_points(lam, mu, nu):
    """Common zero locus of x0x1 - lam^2 x2x3, x0x2 - mu^2 x1x3, x0x3 - nu^2 x1x2."""
    lam, mu, nu = (QQi.coerce(v) for v in (lam, mu, nu))
    if not (lam and mu and nu):
        raise DegenerateParameters("lambda, mu, nu must all be nonzero")
    one = QI_ONE
    pts = [
        ProjectivePoint((0, one, 0, 0)),
        ProjectivePoint((0, 0, one, 0)),
        ProjectivePoint((lam * mu * nu, lam, mu, nu)),
        ProjectivePoint((lam * mu * nu, -lam, -mu, nu)),
        ProjectivePoint((one, 0, 0, 0)),
        ProjectivePoint((0, 0, 0, one)),
        ProjectivePoint((lam * mu * nu, -lam, mu, -nu)),
        ProjectivePoint((lam * mu * nu, lam, -mu, -nu)),
    ]
    ring = x_ring()
    x0, x1, x2, x3 = (ring.gen(v) for v in X_VARS)
    qs = [
        x0 * x1 - x2 * x3 * (lam * lam),
        x0 * x2 - x1 * x3 * (mu * mu),
        x0 * x3 - x1 * x2 * (nu * nu),
    ]
    for p in pts:
        for q in qs:
            if p.evaluate(q):
                raise AssertionError(f"{p!r} misses a defining quadric")
    if len(set(pts)) != 8:
        raise AssertionError("the eight points are not distinct")
    return pts


#: the order-4 coordinate map (x0,x1,x2,x3) -> (x1,x0,x3,-x2)
SIGMA_IMAGES = ((1, 1), (0, 1), (3, 1), (2, -1))


def sigma_point(p: ProjectivePoint) -> ProjectivePoint:
    c = p.coords
    return ProjectivePoint(tuple(c[src] * sgn for src, sgn in SIGMA_IMAGES))


def sigma_matrix(field=QQi):
    one, zero = field.one(), field.zero()
    m = [[zero] * 4 for _ in range(4)]
    for dst, (src, sgn) in enumerate(SIGMA_IMAGES):
        m[dst][src] = one if sgn > 0 else -one
    return m


class CurveContext:
    """The quartic curve cut out by q and the alpha-dependent quadric,
    for the one-parameter family with (beta, gamma) = (1, -1)."""

    def __init__(self, alpha):
        self.symbolic = isinstance(alpha, MultiPoly)
        if self.symbolic:
            self.ring = alpha.ring
            self.alpha = alpha
        else:
            self.alpha = QQi.coerce(alpha)
            if not self.alpha or self.alpha == 1 or self.alpha == -1:
                raise PreconditionViolated("alpha must avoid {0, 1, -1}")
            self.ring = x_ring()
        r = self.ring
        x0, x1, x2, x3 = (r.gen(v) for v in X_VARS)
        al = r.coerce(self.alpha) if self.symbolic else r.constant(self.alpha)
        self.f1 = x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3
        self.f2 = x0 * x0 - x1 * x1 + al * (x2 * x2) - al * (x3 * x3)

    def contains(self, p: ProjectivePoint) -> bool:
        if self.symbolic:
            raise ValueError("point membership needs a numeric alpha")
        return not p.evaluate(self.f1) and not p.evaluate(self.f2)


def curve_relations_certificate(symbolic=True, alpha=None):
    """Each entry of M . sigma(x)^T lies in the ideal of the two curve quadrics.

    The product is computed in the commutative coordinate ring; membership
    of each (degree-2) entry is certified by slice membership with degree
    bound 4.  Returns the list of certificates, one per matrix row.
    """
    if symbolic:
        ring = PolyRing(("alpha",) + X_VARS)
        al = ring.gen("alpha")
        main = X_VARS
    else:
        ring = x_ring()
        al = QQi.coerce(alpha)
        main = None
    one = ring.one()
    curve = CurveContext(al if symbolic else al)
    m = matrix_m(al, one if symbolic else QI_ONE, -one if symbolic else -QI_ONE, ring)
    x = [ring.gen(v) for v in X_VARS]
    sigma_x = [x[src] if sgn > 0 else -x[src] for src, sgn in SIGMA_IMAGES]
    gens = [curve.f1, curve.f2]
    certificates = []
    for row in m:
        entry = ring.zero()
        for e, s in zip(row, sigma_x):
            entry = entry + e * s
        ok, cert = ideal_slice_membership(entry, gens, 4, main_names=main)
        if not ok:
            raise AssertionError("matrix-times-sigma entry is outside the curve ideal")
        certificates.append(cert)
    return certificates
