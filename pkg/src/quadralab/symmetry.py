"""Graded automorphisms: the Heisenberg-type generators and their action.

The maps psi_1, psi_2, psi_3 permute-and-scale the generators using the
square roots (a, b, c) of the parameters; together with the scalar i they
generate a group of order 4^3 acting on A(alpha,beta,gamma) whenever
alpha*beta*gamma is nonzero.  The sign involutions gamma_i = psi_i^2 up to
scalar form a Klein four-group that acts for every parameter choice.

Points of the twenty-point configuration transform by the inverse
transpose of the generator matrices (the dual-space action); with that
convention psi_1 sends (abc, a, b, c) to (a, -ia, i, 1).

The R(a,b,c,d) side has an order-4 automorphism in the z-basis whose
coefficients live in a fourth-root tower; its defining identities are
verified both numerically and with formal roots.
"""

from __future__ import annotations

from .errors import DegenerateParameters, PreconditionViolated
from .extension import adjoin_fourth_root
from .freealg import FreeElement, apply_linear, generators
from .geometry import ProjectivePoint
from .linalg import (
    make_echelon,
    mat_inverse,
    mat_mul,
    mat_transpose,
    mats_equal,
    identity_matrix,
    proportional_matrices,
    scalar_matrix,
)
from .presentations import (
    CHLParams,
    RelationSpace,
    chl_z_coefficients,
    chl_z_relations,
)
from .scalars import QI_I, QQi


class LinearAutomorphism:
    """An invertible substitution on the four generators.

    The matrix convention matches apply_linear: column j holds the
    coefficients of the image of generator j.
    """

    def __init__(self, field, matrix, label=""):
        self.field = field
        self.matrix = [[field.coerce(v) for v in row] for row in matrix]
        self.label = label
        try:
            self._inverse_matrix = mat_inverse(field, self.matrix)
        except ValueError:
            raise DegenerateParameters(f"{label or 'map'} is singular") from None

    def __call__(self, f: FreeElement) -> FreeElement:
        return apply_linear(self.matrix, f)

    def compose(self, other: "LinearAutomorphism") -> "LinearAutomorphism":
        """self after other."""
        return LinearAutomorphism(
            self.field,
            mat_mul(self.matrix, other.matrix),
            label=f"{self.label}*{other.label}",
        )

    def inverse(self) -> "LinearAutomorphism":
        return LinearAutomorphism(
            self.field, self._inverse_matrix, label=f"{self.label}^-1"
        )

    def power(self, n: int) -> "LinearAutomorphism":
        if n < 0:
            return self.inverse().power(-n)
        out = LinearAutomorphism(
            self.field, identity_matrix(self.field), label="id"
        )
        for _ in range(n):
            out = self.compose(out)
        return out

    def on_point(self, p: ProjectivePoint) -> ProjectivePoint:
        """Dual action: coordinates transform by the inverse transpose."""
        mt = mat_transpose(self._inverse_matrix)
        return ProjectivePoint(
            tuple(
                sum_entries(mt[r], p) for r in range(4)
            )
        )

    def is_scalar(self):
        """The scalar c with matrix = c*id, or None."""
        return proportional_matrices(
            self.field, self.matrix, identity_matrix(self.field)
        )

    def __repr__(self):
        return f"LinearAutomorphism({self.label or self.matrix})"


def sum_entries(row, p):
    total = None
    for c, v in zip(row, p):
        term = c * v
        total = term if total is None else total + term
    return total


# ---------------------------------------------------------------------------
# the generator tables
# ---------------------------------------------------------------------------


def psi_maps(a, b, c, field=QQi):
    """The three permute-and-scale maps built from the square roots.

    psi_i sends x0 -> a_j a_k x_i, x_i -> -i x0, x_j -> -i a_j x_k,
    x_k -> -a_k x_j for the cyclic (i,j,k).
    """
    a, b, c = (field.coerce(v) for v in (a, b, c))
    if not (a and b and c):
        raise DegenerateParameters("square roots a, b, c must be nonzero")
    i = field.coerce(QI_I)
    zero = field.zero()
    roots = {1: a, 2: b, 3: c}
    out = []
    for idx, (j, k) in zip((1, 2, 3), ((2, 3), (3, 1), (1, 2))):
        m = [[zero] * 4 for _ in range(4)]
        m[idx][0] = roots[j] * roots[k]
        m[0][idx] = -i
        m[k][j] = -i * roots[j]
        m[j][k] = -roots[k]
        out.append(LinearAutomorphism(field, m, label=f"psi{idx}"))
    return tuple(out)


def gamma_maps(field=QQi):
    """The three diagonal sign involutions."""
    one = field.one()
    zero = field.zero()
    signs = {1: (1, 1, -1, -1), 2: (1, -1, 1, -1), 3: (1, -1, -1, 1)}
    out = []
    for idx, pattern in signs.items():
        m = [[(one if s > 0 else -one) if r == col else zero for col in range(4)]
             for r, s in zip(range(4), pattern)]
        out.append(LinearAutomorphism(field, m, label=f"gamma{idx}"))
    return tuple(out)


def contragredient_table(a, b, c, field=QQi):
    """The dual-basis substitution matrices for psi_1..psi_3.

    These coincide exactly with the inverses of the psi matrices, which
    is verified by heisenberg_checks.  (The x1* entry of the third row is
    -b^-1 x2*: an extra factor of i sometimes quoted there fails even up
    to overall scalar.)
    """
    a, b, c = (field.coerce(v) for v in (a, b, c))
    i = field.coerce(QI_I)
    zero = field.zero()
    tables = []
    specs = [
        # psi1*: x0*->i x1*, x1*->(bc)^-1 x0*, x2*->-c^-1 x3*, x3*->i b^-1 x2*
        {(1, 0): i, (0, 1): (b * c).inverse(), (3, 2): -c.inverse(), (2, 3): i / b},
        # psi2*: x0*->i x2*, x1*->i c^-1 x3*, x2*->(ac)^-1 x0*, x3*->-a^-1 x1*
        {(2, 0): i, (3, 1): i / c, (0, 2): (a * c).inverse(), (1, 3): -a.inverse()},
        # psi3*: x0*->i x3*, x1*->-b^-1 x2*, x2*->i a^-1 x1*, x3*->(ab)^-1 x0*
        {(3, 0): i, (2, 1): -b.inverse(), (1, 2): i / a, (0, 3): (a * b).inverse()},
    ]
    for spec in specs:
        m = [[zero] * 4 for _ in range(4)]
        for (r, col), v in spec.items():
            m[r][col] = v
        tables.append(m)
    return tables


# ---------------------------------------------------------------------------
# relation preservation and the scalar criterion
# ---------------------------------------------------------------------------


def preserves_relations(phi: LinearAutomorphism, space: RelationSpace) -> bool:
    """True iff the induced degree-2 map fixes the relation row space."""
    transformed = [phi(e) for e in space.elements]
    rows = [t.coefficient_vector(2) for t in transformed]
    ech = make_echelon(space.field)
    for row in rows:
        ech.insert(row)
    if ech.rank != 6:
        return False
    return all(space.echelon.contains(r) for r in rows) and all(
        ech.contains(r) for r in space.rows
    )


def permutation_type_map(lambdas, cyclic, field=QQi) -> LinearAutomorphism:
    """x0 -> l0 xi, xi -> li x0, xj -> lj xk, xk -> lk xj."""
    l0, li, lj, lk = (field.coerce(v) for v in lambdas)
    i, j, k = cyclic
    zero = field.zero()
    m = [[zero] * 4 for _ in range(4)]
    m[i][0] = l0
    m[0][i] = li
    m[k][j] = lj
    m[j][k] = lk
    return LinearAutomorphism(field, m, label="perm-type")


def sklyanin_criterion(lambdas, alphas, cyclic=(1, 2, 3), field=QQi) -> bool:
    """The three scalar conditions for a permute-and-scale map to extend.

    l0*li/(lj*lk) = -1, l0*lj/(lk*li) = -alpha_j, l0*lk/(li*lj) = alpha_k,
    with indices read along the cyclic triple.
    """
    l0, li, lj, lk = (field.coerce(v) for v in lambdas)
    if not (l0 and li and lj and lk):
        raise DegenerateParameters("all four scalars must be nonzero")
    i, j, k = cyclic
    alpha = {1: field.coerce(alphas[0]), 2: field.coerce(alphas[1]),
             3: field.coerce(alphas[2])}
    return (
        l0 * li / (lj * lk) == field.coerce(-1)
        and l0 * lj / (lk * li) == -alpha[j]
        and l0 * lk / (li * lj) == alpha[k]
    )


# ---------------------------------------------------------------------------
# group-structure report
# ---------------------------------------------------------------------------


class HeisenbergReport:
    def __init__(self):
        self.checks = {}

    def record(self, name, ok):
        self.checks[name] = bool(ok)

    def all_pass(self):
        return all(self.checks.values())

    def as_dict(self):
        return dict(self.checks)


def heisenberg_checks(a, b, c, alphas=None, field=QQi) -> HeisenbergReport:
    """Verify the stated group relations among the generator maps.

    With alphas omitted they default to (a^2, b^2, c^2).  Checks:
    psi_i psi_{i+1} = i psi_{i+1} psi_i; psi_i^2 equals the stated scalar
    times the matching sign involution; the fourth powers of the
    normalized maps are the identity (computed through nu_i^4, no root
    adjunction needed); the sign involutions compose as a Klein
    four-group; the stated dual-basis matrices are the inverses of the
    psi matrices; and each psi satisfies the scalar criterion.
    """
    a, b, c = (field.coerce(v) for v in (a, b, c))
    if alphas is None:
        alphas = (a * a, b * b, c * c)
    report = HeisenbergReport()
    psis = psi_maps(a, b, c, field)
    gammas = gamma_maps(field)
    i = field.coerce(QI_I)

    # braiding: psi1 psi2 = i psi2 psi1 and cyclic variants
    for (u, v) in ((0, 1), (1, 2), (2, 0)):
        lhs = mat_mul(psis[u].matrix, psis[v].matrix)
        rhs = mat_mul(psis[v].matrix, psis[u].matrix)
        rhs = [[i * x for x in row] for row in rhs]
        report.record(f"psi{u+1}psi{v+1} = i psi{v+1}psi{u+1}", mats_equal(lhs, rhs))

    # squares: psi1^2 = -i b c gamma1 etc.
    scalars = (-i * b * c, -i * a * c, -i * a * b)
    for t in range(3):
        sq = mat_mul(psis[t].matrix, psis[t].matrix)
        target = [[scalars[t] * x for x in row] for row in gammas[t].matrix]
        report.record(f"psi{t+1}^2 = scalar * gamma{t+1}", mats_equal(sq, target))

    # normalized fourth powers: psi_t^4 equals nu_t^4 times the identity,
    # where a nu1^2 = b nu2^2 = c nu3^2 = -i a b c
    nu_sq = ((-i) * a * b * c / a, (-i) * a * b * c / b, (-i) * a * b * c / c)
    for t in range(3):
        p4 = psis[t].power(4)
        target = scalar_matrix(field, nu_sq[t] * nu_sq[t])
        report.record(f"epsilon{t+1}^4 = identity", mats_equal(p4.matrix, target))

    # Klein four-group of sign involutions
    g12 = mat_mul(gammas[0].matrix, gammas[1].matrix)
    report.record("gamma1 gamma2 = gamma3", mats_equal(g12, gammas[2].matrix))
    for t in range(3):
        sq = mat_mul(gammas[t].matrix, gammas[t].matrix)
        report.record(
            f"gamma{t+1}^2 = identity", mats_equal(sq, identity_matrix(field))
        )

    # stated dual-basis matrices are the inverses of the psi matrices
    stated = contragredient_table(a, b, c, field)
    for t in range(3):
        report.record(
            f"dual table {t+1} = psi{t+1}^-1",
            mats_equal(stated[t], psis[t]._inverse_matrix),
        )

    # scalar criterion for the psi maps; lambdas listed as (l0, li, lj, lk)
    lambda_sets = (
        ((b * c, -i, -i * b, -c), (1, 2, 3)),
        ((a * c, -i, -i * c, -a), (2, 3, 1)),
        ((a * b, -i, -i * a, -b), (3, 1, 2)),
    )
    for t, (lams, cyc) in enumerate(lambda_sets):
        report.record(
            f"scalar criterion psi{t+1}",
            sklyanin_criterion(lams, alphas, cyc, field),
        )
    return report


# ---------------------------------------------------------------------------
# orbits on point sets
# ---------------------------------------------------------------------------


def orbits(points, maps) -> list:
    """Orbit partition of the points under the group generated by the maps.

    Breadth-first closure with normalized-point equality; maps act on
    points through their dual (inverse-transpose) matrices.  Orbits are
    reported in the order their seeds appear.
    """
    gens = list(maps) + [m.inverse() for m in maps]
    remaining = list(points)
    out = []
    seen = set()
    for seed in points:
        if seed in seen:
            continue
        orbit = {seed}
        frontier = [seed]
        while frontier:
            p = frontier.pop()
            for g in gens:
                q = g.on_point(p)
                if q not in orbit:
                    orbit.add(q)
                    frontier.append(q)
        seen |= orbit
        out.append(sorted(orbit, key=lambda p: tuple(str(c) for c in p.coords)))
    return out


def point_action_is_faithful(points, psi1, psi2) -> bool:
    """The 16 projective classes psi1^m psi2^n act by distinct permutations."""
    pts = list(points)
    index = {p: k for k, p in enumerate(pts)}
    perms = set()
    for m in range(4):
        for n in range(4):
            g = psi1.power(m).compose(psi2.power(n))
            perm = tuple(index[g.on_point(p)] for p in pts)
            perms.add(perm)
    return len(perms) == 16


# ---------------------------------------------------------------------------
# the order-4 automorphism on the R(a,b,c,d) side
# ---------------------------------------------------------------------------


def chl_rho_values(params: CHLParams):
    """(rho2, rho3): the fourth powers of the scaling roots.

    rho2 = mu2*nu2/(kappa2*lambda2) and rho3 = -mu3*nu3/(kappa3*lambda3)
    = -da/(bc).  The sign on rho3 is forced: the map below multiplies the
    third relation pair by tau0*tau3/(tau1*tau2) = -q3^4, and that ratio
    must equal +da/(bc) for the images to be relation multiples.  (A
    sign-free da/(bc) fails: the images then land outside the relation
    row space, which verify() would report.)
    """
    a, b, c, d = params.as_tuple()
    num2 = (a + b - c + d) * (-a + b - c - d)
    den2 = (-a + b + c + d) * (a + b + c - d)
    if not den2:
        raise PreconditionViolated("denominator of rho2 vanishes")
    if not (b * c):
        raise PreconditionViolated("denominator of rho3 vanishes")
    return num2 / den2, -(d * a) / (b * c)


class ChlPsi:
    """The z-basis map z0 -> t0 z1, z1 -> t1 z0, z2 -> t2 z3, z3 -> t3 z2
    with t0 = -q2 q3, t1 = 1/(q2 q3), t2 = q2/q3, t3 = q3/q2 for formal
    fourth roots q2, q3 of rho2, rho3."""

    def __init__(self, a, b, c, d, field=QQi):
        a, b, c, d = (field.coerce(v) for v in (a, b, c, d))
        self.params = CHLParams(a, b, c, d)
        self.base_field = field
        rho2, rho3 = chl_rho_values(self.params)
        self.rho2, self.rho3 = rho2, rho3
        tower = adjoin_fourth_root(field, "q2", rho2)
        tower = adjoin_fourth_root(tower, "q3", rho3)
        self.field = tower
        q2 = tower.coerce(tower.base.root())
        q3 = tower.root()
        self.q2, self.q3 = q2, q3
        t0 = -(q2 * q3)
        t1 = (q2 * q3).inverse()
        t2 = q2 / q3
        t3 = q3 / q2
        self.taus = (t0, t1, t2, t3)
        zero = tower.zero()
        m = [[zero] * 4 for _ in range(4)]
        m[1][0] = t0
        m[0][1] = t1
        m[3][2] = t2
        m[2][3] = t3
        self.map = LinearAutomorphism(tower, m, label="psi")

    def verify(self) -> dict:
        """Order-4 facts and relation preservation, over the formal tower.

        Relation preservation is certified by the six scalar identities
        expressing each transformed relation as a multiple of a relation:
        with c_i, a_i the z-basis relation elements,

            psi(c1) =  t2 t3 c1            psi(a1) = -t2 t3 a1
            psi(c2) = -(mu2/lam2) t3 t1 a2  psi(a2) = (nu2/kap2) t3 t1 c2
            psi(c3) = -(mu3/lam3) t1 t2 a3  psi(a3) = -(nu3/kap3) t1 t2 c3
        """
        tower = self.field
        t0, t1, t2, t3 = self.taus
        out = {}
        sq = self.map.compose(self.map)
        out["psi^2(z0) = -z0"] = sq.matrix[0][0] == tower.coerce(-1)
        p4 = self.map.power(4)
        out["psi^4 = identity"] = mats_equal(p4.matrix, identity_matrix(tower))
        out["tau0 tau1 = -1"] = t0 * t1 == tower.coerce(-1)
        out["tau2 tau3 = 1"] = t2 * t3 == tower.one()

        space = chl_z_relations(*self.params.as_tuple(), field=self.base_field,
                                verify=False)
        lifted = [
            FreeElement({w: tower.coerce(v) for w, v in e.terms.items()})
            for e in space.elements
        ]
        c_rel = {1: lifted[0], 2: lifted[2], 3: lifted[4]}
        a_rel = {1: lifted[1], 2: lifted[3], 3: lifted[5]}
        coeffs = chl_z_coefficients(self.params)
        (k1, m1, l1, n1), (k2, m2, l2, n2), (k3, m3, l3, n3) = coeffs
        expectations = [
            ("psi(c1)", c_rel[1], c_rel[1].scale(t2 * t3)),
            ("psi(a1)", a_rel[1], a_rel[1].scale(-(t2 * t3))),
            ("psi(c2)", c_rel[2], a_rel[2].scale(-(tower.coerce(m2 / l2)) * t3 * t1)),
            ("psi(a2)", a_rel[2], c_rel[2].scale(tower.coerce(n2 / k2) * t3 * t1)),
            ("psi(c3)", c_rel[3], a_rel[3].scale(-(tower.coerce(m3 / l3)) * t1 * t2)),
            ("psi(a3)", a_rel[3], c_rel[3].scale(-(tower.coerce(n3 / k3)) * t1 * t2)),
        ]
        for name, source, expected in expectations:
            image = self.map(source)
            out[f"{name} is the stated relation multiple"] = image == expected
        return out

    def preserves_z_relations(self) -> bool:
        results = self.verify()
        return all(v for k, v in results.items() if k.startswith("psi("))
