"""Degree-truncated computation in the quotient TV/(R).

The degree-n slice of the two-sided ideal (R) is spanned by the rows
w * r * w' with r a relation and |w| + |w'| = n - 2.  Slices are built
recursively:

    W_n = V (x) W_{n-1}  +  R (x) V^{(n-2)}

The first summand contributes four disjoint column blocks (one per leading
letter) that are already in echelon form, so only the 6*4^(n-2) relation
rows need actual reduction.  dim A_n = 4^n - rank W_n.

Two backends: exact sparse elimination over the relation space's own field
(authoritative, used for all membership certificates and centrality), and
dense elimination mod a prime p = 1 (mod 4) (fast rank evidence for higher
degrees).  Over Q the modular rank can only drop, so modular dimensions are
upper bounds for the exact ones and are labeled as evidence, not proof.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import DegreeCapExceeded, PreconditionViolated
from .freealg import NGENS, FreeElement, commutator, from_vector, generators
from .linalg import SparseEchelon, make_echelon, rref_mod_p, reduce_block_mod_p
from .presentations import RelationSpace
from .scalars import GaussianRational, PrimeField, DEFAULT_PRIME

DEFAULT_DEGREE_CAP = 7
ENV_DEGREE_CAP = "QUADRALAB_DEGREE_CAP"


def degree_cap() -> int:
    value = os.environ.get(ENV_DEGREE_CAP)
    if value is None:
        return DEFAULT_DEGREE_CAP
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{ENV_DEGREE_CAP} must be an integer, got {value!r}") from None


def _check_cap(n: int, force: bool):
    cap = degree_cap()
    if n > cap and not force:
        raise DegreeCapExceeded(n, cap)


class ExactSlices:
    """Sparse echelon bases of the ideal slices over the exact field."""

    def __init__(self, space: RelationSpace):
        self.space = space
        self.field = space.field
        self._cache = {}

    def slice(self, n: int, force=False):
        if n < 2:
            raise ValueError("ideal slices start at degree 2")
        _check_cap(n, force)
        if n not in self._cache:
            self._cache[n] = self._build(n, force)
        return self._cache[n]

    def _build(self, n: int, force: bool):
        ech = make_echelon(self.field)
        if n == 2:
            for row in self.space.rows:
                ech.insert(row)
            return ech
        prev = self.slice(n - 1, force)
        width = NGENS ** (n - 1)
        # x_g (x) W_{n-1}: shifted copies of the previous echelon rows
        for g in range(NGENS):
            base = g * width
            for col, ridx in sorted(prev.pivot_of.items()):
                row = prev.rows[ridx]
                ech.insert_independent(
                    {base + c: v for c, v in row.items()}, base + col
                )
        # R (x) V^{(n-2)}: the only rows that need honest reduction
        suffix_count = NGENS ** (n - 2)
        for rel in self.space.rows:
            for suffix in range(suffix_count):
                ech.insert({c * suffix_count + suffix: v for c, v in rel.items()})
        return ech

    def rank(self, n: int, force=False) -> int:
        return self.slice(n, force).rank

    def reduce(self, vec: dict, n: int, force=False) -> dict:
        return self.slice(n, force).reduce(vec)


class ModularSlices:
    """Dense RREF bases of the ideal slices mod p."""

    def __init__(self, space: RelationSpace, p: int = DEFAULT_PRIME):
        self.space = space
        self.prime_field = PrimeField(p)
        self.p = p
        self.rel_rows = self._reduced_relations()
        self._cache = {}

    def _reduced_relations(self) -> np.ndarray:
        rows = np.zeros((6, 16), dtype=np.int64)
        for i, row in enumerate(self.space.rows):
            for c, v in row.items():
                if not isinstance(v, GaussianRational):
                    raise PreconditionViolated(
                        "modular backend needs Q(i) relation coefficients"
                    )
                rows[i, c] = self.prime_field.coerce(v).value
        return rows

    def slice(self, n: int, force=False):
        """(rref matrix, pivot column list) of the degree-n slice mod p."""
        if n < 2:
            raise ValueError("ideal slices start at degree 2")
        _check_cap(n, force)
        if n not in self._cache:
            self._cache[n] = self._build(n, force)
        return self._cache[n]

    def _build(self, n: int, force: bool):
        p = self.p
        if n == 2:
            return rref_mod_p(self.rel_rows.copy(), p)
        basis_prev, pivots_prev = self.slice(n - 1, force)
        width = NGENS ** (n - 1)
        cols = NGENS ** n
        suffix_count = NGENS ** (n - 2)
        comp = np.zeros((6 * suffix_count, cols), dtype=np.int64)
        for i in range(6):
            row = self.rel_rows[i]
            for c in row.nonzero()[0]:
                base = int(c) * suffix_count
                block = comp[i * suffix_count : (i + 1) * suffix_count]
                block[np.arange(suffix_count), base + np.arange(suffix_count)] = row[c]
        # reduce against each leading-letter block of V (x) W_{n-1}
        for g in range(NGENS):
            lo = g * width
            reduce_block_mod_p(
                comp[:, lo : lo + width], basis_prev, pivots_prev, p
            )
        comp %= p
        comp_rref, comp_pivots = rref_mod_p(comp, p)
        # assemble the full RREF basis: shifted previous blocks + complement
        block_rank = len(pivots_prev)
        total = NGENS * block_rank + len(comp_pivots)
        full = np.zeros((total, cols), dtype=np.int64)
        pivots = []
        r = 0
        for g in range(NGENS):
            lo = g * width
            full[r : r + block_rank, lo : lo + width] = basis_prev
            pivots.extend(lo + c for c in pivots_prev)
            r += block_rank
        full[r:] = comp_rref
        pivots.extend(comp_pivots)
        # clear complement pivot columns inside the block rows (restores RREF)
        if comp_pivots:
            reduce_block_mod_p(full[: NGENS * block_rank], comp_rref, comp_pivots, p)
        order = np.argsort(pivots)
        return full[order], sorted(pivots)

    def rank(self, n: int, force=False) -> int:
        return len(self.slice(n, force)[1])


class GradedQuotient:
    """Hilbert data, ideal membership, and normal forms for TV/(R)."""

    def __init__(self, space: RelationSpace, p: int = DEFAULT_PRIME):
        self.space = space
        self.exact = ExactSlices(space)
        self._modular = None
        self.p = p

    @property
    def modular(self) -> ModularSlices:
        if self._modular is None:
            self._modular = ModularSlices(self.space, self.p)
        return self._modular

    # -- dimensions ------------------------------------------------------

    def dimension(self, n: int, backend="exact", force=False) -> int:
        if n == 0:
            return 1
        if n == 1:
            return NGENS
        if backend == "exact":
            return NGENS ** n - self.exact.rank(n, force)
        if backend == "modular":
            return NGENS ** n - self.modular.rank(n, force)
        raise ValueError(f"unknown backend {backend!r}")

    def hilbert_function(self, top_degree: int, backend="auto", force=False):
        """HilbertProfile up to the requested degree.

        backend "exact" or "modular" applies to every degree; "auto" uses
        exact arithmetic through degree 4 and the modular backend above.
        """
        _check_cap(top_degree, force)
        dims, tags = [], []
        for n in range(top_degree + 1):
            tag = backend
            if backend == "auto":
                tag = "exact" if n <= 4 else "modular"
            dims.append(self.dimension(n, "exact" if tag == "exact" else "modular", force))
            tags.append(tag if n >= 2 else "exact")
        return HilbertProfile(dims, tags, self.space.label, self.p,
                              self.modular_sqrt_minus_one() if "modular" in tags else None)

    def modular_sqrt_minus_one(self):
        return self.modular.prime_field.sqrt_minus_one

    # -- membership and normal forms (always exact) -----------------------

    def contains(self, f: FreeElement, force=False) -> bool:
        if f.is_zero():
            return True
        n = f.degree()
        if n < 2:
            return False
        return not self.exact.reduce(f.coefficient_vector(n), n, force)

    def normal_form(self, f: FreeElement, force=False) -> FreeElement:
        """The canonical representative of f + (R) supported off pivot words."""
        if f.is_zero():
            return f
        n = f.degree()
        if n < 2:
            return f
        residual = self.exact.reduce(f.coefficient_vector(n), n, force)
        return from_vector(residual, n)

    def is_central(self, z: FreeElement, force=False):
        """(True, None) or (False, index of a generator that fails).

        Centrality in each degree is the finite condition [z, x_g] in (R)
        for all four generators; exact backend only.
        """
        if z.is_zero():
            return True, None
        m = z.degree()
        gens = generators(self.space.field)
        for g, xg in enumerate(gens):
            if not self.contains(commutator(z, xg), force):
                return False, g
        return True, None

    def membership_certificate(self, f: FreeElement, force=False):
        """Express f as sum lambda * w * rel * w', or None.

        Returns a list of (left word, relation index, right word, coeff).
        Builds a tracked echelon from scratch, so keep to small degrees.
        """
        if f.is_zero():
            return []
        n = f.degree()
        if n < 2:
            return None
        _check_cap(n, force)
        ech = SparseEchelon(self.space.field, track=True)
        from .freealg import index_word
        for a in range(n - 1):
            left_count = NGENS ** a
            right_count = NGENS ** (n - 2 - a)
            for rel_idx, rel in enumerate(self.space.rows):
                for li in range(left_count):
                    for ri in range(right_count):
                        row = {
                            (li * 16 + c) * right_count + ri: v
                            for c, v in rel.items()
                        }
                        tag = (index_word(li, a), rel_idx, index_word(ri, n - 2 - a))
                        ech.insert(row, tag=tag)
        residual, combo = ech.reduce_with_combo(f.coefficient_vector(n))
        if residual:
            return None
        return [(lw, rel, rw, coeff) for (lw, rel, rw), coeff in combo.items()]


class HilbertProfile:
    """Graded dimensions with their provenance."""

    def __init__(self, dims, backends, label, p, sqrt_minus_one):
        self.dims = list(dims)
        self.backends = list(backends)
        self.label = label
        self.p = p
        self.sqrt_minus_one = sqrt_minus_one

    @property
    def backend(self) -> str:
        # degrees 0 and 1 are combinatorial; only degree >= 2 involves ranks
        kinds = set(self.backends[2:]) or {"exact"}
        if kinds == {"exact"}:
            return "exact"
        if "exact" in kinds:
            return f"exact<=4, modular p={self.p} above"
        return f"modular p={self.p}"

    def all_exact(self) -> bool:
        return set(self.backends[2:] or ["exact"]) == {"exact"}

    def as_dict(self):
        out = {
            "algebra": self.label,
            "dims": self.dims,
            "backend": self.backend,
            "per_degree": self.backends,
        }
        if self.sqrt_minus_one is not None:
            out["modular_sqrt_minus_one"] = self.sqrt_minus_one
        return out

    def __repr__(self):
        return f"HilbertProfile({self.label}: {self.dims}, {self.backend})"


def verify_certificate(space: RelationSpace, certificate, expected: FreeElement) -> bool:
    """Re-expand a membership certificate and compare with the target."""
    total = FreeElement()
    for left, rel_idx, right, coeff in certificate:
        w = FreeElement.from_word(left, space.field.one())
        r = space.elements[rel_idx]
        wp = FreeElement.from_word(right, space.field.one())
        total = total + (w * r * wp).scale(coeff)
    return total == expected
