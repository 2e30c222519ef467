"""Lie algebras over F_q presented by structure constants.

An algebra element is a tuple of ``dim`` field codes (coefficients in the
chosen basis).  Structure constants are stored only for basis pairs ``i < j``;
the bracket of equal basis elements is zero and the ``i > j`` case is the
negation, so antisymmetry holds by construction rather than by validation.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field
from itertools import combinations, product

from .errors import CapExceeded, JacobiViolation
from .gf import Field, field_new
from .linalg import Subspace, kernel_basis, mat_rank

DEFAULT_ELEMENT_CAP = 4096


def element_cap():
    """Size cap on q^dim, overridable via the LIE_NCG_CAP environment variable."""
    raw = os.environ.get("LIE_NCG_CAP")
    return int(raw) if raw else DEFAULT_ELEMENT_CAP


@dataclass(frozen=True)
class AlgebraSpec:
    """A textual presentation: basis names plus the nonzero basis brackets.

    ``brackets`` maps nothing implicitly: unspecified pairs default to zero.
    Each entry is ``(left_name, right_name, {name: coefficient_code})``.
    """

    q: int
    dim: int
    basis: tuple
    brackets: tuple = dc_field(default_factory=tuple)


class LieAlgebra:
    """A finite-dimensional Lie algebra over F_q, immutable after construction."""

    def __init__(self, field, dim, structure, basis_names=None, validate=True):
        self.field = field
        self.dim = dim
        self.basis_names = tuple(basis_names) if basis_names else tuple(
            f"e{i}" for i in range(dim)
        )
        # structure: dict (i, j) -> coefficient tuple, only for i < j and
        # only nonzero entries need be present.
        zero = (0,) * dim
        self.structure = {
            (i, j): tuple(structure.get((i, j), zero)) for i, j in combinations(range(dim), 2)
        }
        if validate:
            self._check_jacobi()

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim} over F_{self.field.q})"

    # -- bracket ------------------------------------------------------------

    def zero(self):
        return (0,) * self.dim

    def basis_vector(self, i):
        return tuple(1 if j == i else 0 for j in range(self.dim))

    def bracket_basis(self, i, j):
        if i == j:
            return self.zero()
        if i < j:
            return self.structure[(i, j)]
        f = self.field
        return tuple(f.neg(c) for c in self.structure[(j, i)])

    def bracket(self, u, v):
        """Bilinear extension of the structure constants to arbitrary elements."""
        f = self.field
        out = [0] * self.dim
        for (i, j), cij in self.structure.items():
            if cij == (0,) * self.dim:
                continue
            # coefficient of [e_i, e_j] in [u, v] is u_i v_j - u_j v_i
            s = f.sub(f.mul(u[i], v[j]), f.mul(u[j], v[i]))
            if s:
                for k, c in enumerate(cij):
                    if c:
                        out[k] = f.add(out[k], f.mul(s, c))
        return tuple(out)

    def _check_jacobi(self):
        for i, j, k in combinations(range(self.dim), 3):
            acc = [0] * self.dim
            for a, (b, c) in ((i, (j, k)), (k, (i, j)), (j, (k, i))):
                inner = self.bracket_basis(b, c)
                outer = self.bracket(self.basis_vector(a), inner)
                acc = [self.field.add(x, y) for x, y in zip(acc, outer)]
            if any(acc):
                raise JacobiViolation((i, j, k))

    # -- derived structure --------------------------------------------------

    def ad_matrix(self, x):
        """Matrix of y -> [x, y]; column j holds the coefficients of [x, e_j]."""
        cols = [self.bracket(x, self.basis_vector(j)) for j in range(self.dim)]
        return [tuple(col[i] for col in cols) for i in range(self.dim)]

    def centralizer(self, x):
        rows = self.ad_matrix(x)
        return Subspace(self.field, self.dim, kernel_basis(self.field, rows, self.dim))

    def centralizer_order(self, x):
        """|C_L(x)| via rank-nullity, cheaper than building the subspace."""
        r = mat_rank(self.field, self.ad_matrix(x))
        return self.field.q ** (self.dim - r)

    def center(self):
        rows = []
        for i in range(self.dim):
            rows.extend(self.ad_matrix(self.basis_vector(i)))
        return Subspace(self.field, self.dim, kernel_basis(self.field, rows, self.dim))

    def derived_subalgebra(self):
        return Subspace(self.field, self.dim, list(self.structure.values()))

    def is_abelian(self):
        zero = self.zero()
        return all(c == zero for c in self.structure.values())

    def is_nilpotent(self):
        """True iff the lower central series reaches the zero subspace."""
        current = Subspace.full(self.field, self.dim)
        for _ in range(self.dim + 1):
            rows = []
            for i in range(self.dim):
                for b in current.basis_matrix:
                    rows.append(self.bracket(self.basis_vector(i), b))
            nxt = Subspace(self.field, self.dim, rows)
            if nxt.dim == 0:
                return True
            if nxt.dim == current.dim:
                return False
            current = nxt
        return False

    # -- element enumeration -------------------------------------------------

    @property
    def order(self):
        return self.field.q ** self.dim

    def index_of(self, vec):
        """Bijective base-q little-endian index of an element in [0, q^dim)."""
        idx = 0
        for c in reversed(vec):
            idx = idx * self.field.q + c
        return idx

    def element_from_index(self, idx):
        q = self.field.q
        out = []
        for _ in range(self.dim):
            out.append(idx % q)
            idx //= q
        return tuple(out)

    def enumerate_elements(self, cap=None):
        cap = element_cap() if cap is None else cap
        if self.order > cap:
            raise CapExceeded(f"q^dim = {self.order} exceeds the element cap {cap}")
        for coeffs in product(self.field.elements(), repeat=self.dim):
            # product varies the last coordinate fastest; re-order so the
            # stream is increasing in the little-endian index
            yield tuple(reversed(coeffs))

    def element_label(self, vec):
        """Render an element like ``x+y+z`` or ``2x+y`` in basis order."""
        terms = []
        for c, name in zip(vec, self.basis_names):
            if c == 0:
                continue
            terms.append(name if c == 1 else f"{c}{name}")
        return "+".join(terms) if terms else "0"


def algebra_from_spec(spec):
    """Build and validate a LieAlgebra from an AlgebraSpec.

    Raises the spec-validation errors from :mod:`lie_ncg.errors`; Jacobi is
    checked on every basis triple before the algebra is returned.
    """
    from .errors import DuplicateBracket, ParseError, SelfBracketNonzero, UnknownBasisName

    field = field_new(spec.q)
    names = list(spec.basis)
    if len(names) != spec.dim or len(set(names)) != len(names):
        raise UnknownBasisName("basis must list exactly dim distinct names")
    index = {name: i for i, name in enumerate(names)}
    structure = {}
    seen = set()
    for left, right, value in spec.brackets:
        if left not in index or right not in index:
            raise UnknownBasisName(f"bracket [{left}, {right}] uses an undeclared name")
        for name in value:
            if name not in index:
                raise UnknownBasisName(f"bracket value uses undeclared name {name!r}")
        i, j = index[left], index[right]
        if i == j:
            if any(value.values()):
                raise SelfBracketNonzero(f"[{left}, {left}] must be zero")
            continue
        key = (min(i, j), max(i, j))
        if key in seen:
            raise DuplicateBracket(f"bracket for pair [{left}, {right}] given twice")
        seen.add(key)
        vec = [0] * spec.dim
        for name, coeff in value.items():
            if not 0 <= coeff < spec.q:
                raise ParseError(f"coefficient {coeff} out of range [0, {spec.q})")
            vec[index[name]] = coeff
        if i > j:
            vec = [field.neg(c) for c in vec]
        structure[key] = tuple(vec)
    return LieAlgebra(field, spec.dim, structure, basis_names=names)
