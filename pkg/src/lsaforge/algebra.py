"""Finite-dimensional algebras over Q given by structure constants.

An Algebra stores the products of basis vectors: table[i][j] is the
coordinate vector of e_i . e_j.  One type covers every species handled
here (left-symmetric, Lie, associative, ...); the species are predicates
checked by `check`, not subclasses.  Lie algebras are stored with the
bracket as the product, so consumers requiring a bracket first assert
the `jacobi_antisym` predicate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .exact import (Mat, Subspace, ZERO, basis_vec, dot, is_zero_vec, vec,
                    vec_add, vec_scale, vec_sub, zero_vec)
from .report import InternalInconsistency, Report, failing, passing

PREDICATES = ("left_symmetric", "associative", "commutative",
              "lie_admissible", "jacobi_antisym", "abelian")


def _default_basis(n: int) -> Tuple[str, ...]:
    return tuple("e%d" % (i + 1) for i in range(n))


class Algebra:
    """An algebra on Q^n with product table[i][j] = e_i . e_j."""

    __slots__ = ("dim", "basis", "table")

    def __init__(self, table: Sequence[Sequence[Sequence]], basis=None):
        n = len(table)
        tab = tuple(tuple(vec(cell) for cell in row) for row in table)
        for row in tab:
            if len(row) != n or any(len(cell) != n for cell in row):
                raise ValueError("structure constant table must be n x n x n")
        if basis is None:
            basis = _default_basis(n)
        basis = tuple(basis)
        if len(basis) != n:
            raise ValueError("basis label count mismatch")
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "table", tab)

    def __setattr__(self, name, value):
        raise AttributeError("Algebra is immutable")

    @staticmethod
    def zero(n: int, basis=None) -> "Algebra":
        z = zero_vec(n)
        return Algebra([[z for _ in range(n)] for _ in range(n)], basis)

    def __eq__(self, other):
        return (isinstance(other, Algebra) and self.dim == other.dim
                and self.table == other.table)

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return "Algebra(dim=%d)" % self.dim

    # -- products ---------------------------------------------------------
    def product(self, u: Sequence, v: Sequence) -> tuple:
        n = self.dim
        out = [ZERO] * n
        for i, a in enumerate(u):
            if a == 0:
                continue
            row = self.table[i]
            for j, b in enumerate(v):
                if b == 0:
                    continue
                cell = row[j]
                c = a * b
                for k in range(n):
                    if cell[k]:
                        out[k] += c * cell[k]
        return tuple(out)

    def left_mult(self, u: Sequence) -> Mat:
        n = self.dim
        cols = [self.product(u, basis_vec(n, j)) for j in range(n)]
        return Mat.from_cols(cols)

    def right_mult(self, u: Sequence) -> Mat:
        n = self.dim
        cols = [self.product(basis_vec(n, j), u) for j in range(n)]
        return Mat.from_cols(cols)

    def is_antisymmetric(self) -> bool:
        n = self.dim
        return all(self.table[i][j] == vec_sub(zero_vec(n), self.table[j][i])
                   for i in range(n) for j in range(n))

    def commutator_algebra(self) -> "Algebra":
        n = self.dim
        return Algebra([[vec_sub(self.table[i][j], self.table[j][i])
                         for j in range(n)] for i in range(n)], self.basis)

    def bracket_algebra(self) -> "Algebra":
        """The Lie bracket attached to this product.

        For an antisymmetric product (a stored Lie algebra) the product
        itself; otherwise the commutator.
        """
        return self if self.is_antisymmetric() else self.commutator_algebra()

    def bracket(self, u: Sequence, v: Sequence) -> tuple:
        return vec_sub(self.product(u, v), self.product(v, u)) \
            if not self.is_antisymmetric() else self.product(u, v)

    def ad(self, u: Sequence) -> Mat:
        return self.bracket_algebra().left_mult(u)

    # -- algebra arithmetic -------------------------------------------------
    def scale(self, c) -> "Algebra":
        c = Fraction(c)
        n = self.dim
        return Algebra([[vec_scale(c, self.table[i][j]) for j in range(n)]
                        for i in range(n)], self.basis)

    def add(self, other: "Algebra") -> "Algebra":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        n = self.dim
        return Algebra([[vec_add(self.table[i][j], other.table[i][j])
                         for j in range(n)] for i in range(n)], self.basis)

    def is_zero_product(self) -> bool:
        return all(is_zero_vec(cell) for row in self.table for cell in row)

    def conjugate(self, p: Mat) -> "Algebra":
        """Transport by the basis matrix p (columns = new basis vectors)."""
        if p.rows != self.dim or not p.is_invertible():
            raise ValueError("basis matrix must be invertible of matching size")
        pinv = p.inverse()
        n = self.dim
        cols = [p.col(i) for i in range(n)]
        return Algebra([[pinv.apply(self.product(cols[i], cols[j]))
                         for j in range(n)] for i in range(n)], self.basis)


@dataclass(frozen=True)
class Endo:
    """An endomorphism of the underlying space of an algebra."""

    on: Algebra
    matrix: Mat

    def __post_init__(self):
        if self.matrix.rows != self.on.dim or self.matrix.cols != self.on.dim:
            raise ValueError("endomorphism shape mismatch")

    def apply(self, v):
        return self.matrix.apply(v)


def _mat(x) -> Mat:
    return x.matrix if isinstance(x, Endo) else x


class BilinMap:
    """A bilinear map Q^n x Q^n -> Q^n given on basis pairs."""

    __slots__ = ("dim", "table")

    def __init__(self, table: Sequence[Sequence[Sequence]]):
        n = len(table)
        tab = tuple(tuple(vec(cell) for cell in row) for row in table)
        for row in tab:
            if len(row) != n or any(len(cell) != n for cell in row):
                raise ValueError("bilinear map table must be n x n x n")
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "table", tab)

    def __setattr__(self, name, value):
        raise AttributeError("BilinMap is immutable")

    @staticmethod
    def from_function(n: int, fn) -> "BilinMap":
        return BilinMap([[fn(basis_vec(n, i), basis_vec(n, j))
                          for j in range(n)] for i in range(n)])

    def __call__(self, u: Sequence, v: Sequence) -> tuple:
        n = self.dim
        out = [ZERO] * n
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                cell = self.table[i][j]
                c = a * b
                for k in range(n):
                    if cell[k]:
                        out[k] += c * cell[k]
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, BilinMap) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def is_zero(self) -> bool:
        return all(is_zero_vec(cell) for row in self.table for cell in row)

    def scale(self, c) -> "BilinMap":
        c = Fraction(c)
        n = self.dim
        return BilinMap([[vec_scale(c, self.table[i][j]) for j in range(n)]
                         for i in range(n)])

    def sub(self, other: "BilinMap") -> "BilinMap":
        n = self.dim
        return BilinMap([[vec_sub(self.table[i][j], other.table[i][j])
                          for j in range(n)] for i in range(n)])

    def as_algebra(self, basis=None) -> Algebra:
        return Algebra(self.table, basis)


def multiply(alg: Algebra, u, v) -> tuple:
    return alg.product(u, v)


def left_op(alg: Algebra, u) -> Mat:
    return alg.left_mult(u)


def right_op(alg: Algebra, u) -> Mat:
    return alg.right_mult(u)


def commutator(alg: Algebra) -> Algebra:
    return alg.commutator_algebra()


def associator(alg: Algebra, u, v, w) -> tuple:
    return vec_sub(alg.product(alg.product(u, v), w),
                   alg.product(u, alg.product(v, w)))


def curvature(alg: Algebra, u, v) -> Mat:
    """K(u,v) = [L_u, L_v] - L_[u,v] for the commutator bracket."""
    lu = alg.left_mult(u)
    lv = alg.left_mult(v)
    br = vec_sub(alg.product(u, v), alg.product(v, u))
    return lu.commutator(lv) - alg.left_mult(br)


def nijenhuis(a, alg: Algebra) -> BilinMap:
    """Torsion N_A(u,v) = [Au,Av] - A[Au,v] - A[u,Av] + A^2 [u,v].

    The bracket is the Lie bracket attached to alg (the product itself
    when it is already antisymmetric, the commutator otherwise).
    """
    m = _mat(a)
    br = alg.bracket_algebra()
    m2 = m * m

    def torsion(u, v):
        au, av = m.apply(u), m.apply(v)
        t = br.product(au, av)
        t = vec_sub(t, m.apply(br.product(au, v)))
        t = vec_sub(t, m.apply(br.product(u, av)))
        return vec_add(t, m2.apply(br.product(u, v)))

    return BilinMap.from_function(alg.dim, torsion)


def is_derivation(d, alg: Algebra) -> Report:
    m = _mat(d)
    n = alg.dim
    for i in range(n):
        for j in range(n):
            lhs = m.apply(alg.table[i][j])
            rhs = vec_add(alg.product(m.apply(basis_vec(n, i)), basis_vec(n, j)),
                          alg.product(basis_vec(n, i), m.apply(basis_vec(n, j))))
            if lhs != rhs:
                return failing("is_derivation", "D(u.v) == D(u).v + u.D(v)",
                               witness=(i, j))
    return passing("is_derivation", "D(u.v) == D(u).v + u.D(v)")


# -- predicate checks -------------------------------------------------------

def _check_left_symmetric(alg: Algebra):
    n = alg.dim
    for i, j, k in itertools.product(range(n), repeat=3):
        if j <= i:
            continue
        a = associator(alg, basis_vec(n, i), basis_vec(n, j), basis_vec(n, k))
        b = associator(alg, basis_vec(n, j), basis_vec(n, i), basis_vec(n, k))
        if a != b:
            return (i, j, k)
    return None


def _check_associative(alg: Algebra):
    n = alg.dim
    for i, j, k in itertools.product(range(n), repeat=3):
        if not is_zero_vec(associator(alg, basis_vec(n, i), basis_vec(n, j),
                                      basis_vec(n, k))):
            return (i, j, k)
    return None


def _check_commutative(alg: Algebra):
    n = alg.dim
    for i in range(n):
        for j in range(i + 1, n):
            if alg.table[i][j] != alg.table[j][i]:
                return (i, j)
    return None


def _jacobi_witness(br: Algebra):
    n = br.dim
    for i, j, k in itertools.combinations(range(n), 3):
        u, v, w = basis_vec(n, i), basis_vec(n, j), basis_vec(n, k)
        s = vec_add(vec_add(br.product(br.product(u, v), w),
                            br.product(br.product(v, w), u)),
                    br.product(br.product(w, u), v))
        if not is_zero_vec(s):
            return (i, j, k)
    return None


def _check_jacobi_antisym(alg: Algebra):
    n = alg.dim
    for i in range(n):
        for j in range(i, n):
            if alg.table[i][j] != vec_sub(zero_vec(n), alg.table[j][i]):
                return (i, j)
    return _jacobi_witness(alg)


def _check_lie_admissible(alg: Algebra):
    """Commutator satisfies Jacobi; checked both through the cyclic
    curvature sum and directly, which must agree."""
    n = alg.dim
    via_curvature = None
    for i, j, k in itertools.combinations(range(n), 3):
        u, v, w = basis_vec(n, i), basis_vec(n, j), basis_vec(n, k)
        s = vec_add(vec_add(curvature(alg, u, v).apply(w),
                            curvature(alg, v, w).apply(u)),
                    curvature(alg, w, u).apply(v))
        if not is_zero_vec(s):
            via_curvature = (i, j, k)
            break
    via_jacobi = _jacobi_witness(alg.commutator_algebra())
    if (via_curvature is None) != (via_jacobi is None):
        raise InternalInconsistency(
            "cyclic curvature sum and commutator Jacobi check disagree")
    return via_curvature if via_curvature is not None else via_jacobi


_ANCHORS = {
    "left_symmetric": "ass(u,v,w) == ass(v,u,w)",
    "associative": "(u.v).w == u.(v.w)",
    "commutative": "u.v == v.u",
    "abelian": "u.v == v.u",
    "lie_admissible": "cyclic sum K(u,v)w == 0 (equivalently commutator Jacobi)",
    "jacobi_antisym": "[u,v] == -[v,u] and cyclic sum [[u,v],w] == 0",
}

_CHECKS = {
    "left_symmetric": _check_left_symmetric,
    "associative": _check_associative,
    "commutative": _check_commutative,
    "abelian": _check_commutative,
    "lie_admissible": _check_lie_admissible,
    "jacobi_antisym": _check_jacobi_antisym,
}


def check(alg: Algebra, predicate: str) -> Report:
    if predicate not in _CHECKS:
        raise ValueError("unknown predicate %r (expected one of %s)"
                         % (predicate, ", ".join(PREDICATES)))
    witness = _CHECKS[predicate](alg)
    name = "check:%s" % predicate
    if witness is None:
        return passing(name, _ANCHORS[predicate])
    return failing(name, _ANCHORS[predicate], witness=witness)


# -- subspace products ------------------------------------------------------

def subspace_product(alg: Algebra, s: Subspace, t: Subspace) -> Subspace:
    vecs = [alg.product(a, b) for a in s.basis for b in t.basis]
    return Subspace(alg.dim, vecs)


def product_subspaces(alg: Algebra) -> dict:
    """U.U, its symmetric/antisymmetric spans, and the powers U^1..U^4.

    U^k is the span of all products of k elements, computed as the sum of
    U^i . U^j over i + j = k.
    """
    n = alg.dim
    uu_vecs, d_vecs, s_vecs = [], [], []
    for i in range(n):
        for j in range(n):
            uu_vecs.append(alg.table[i][j])
            d_vecs.append(vec_sub(alg.table[i][j], alg.table[j][i]))
            s_vecs.append(vec_add(alg.table[i][j], alg.table[j][i]))
    uu = Subspace(n, uu_vecs)
    powers = [Subspace.full(n), uu]
    for k in (3, 4):
        acc = Subspace.zero(n)
        for i in range(1, k):
            j = k - i
            acc = acc.add(subspace_product(alg, powers[i - 1], powers[j - 1]))
        powers.append(acc)
    return {
        "UU": uu,
        "DUU": Subspace(n, d_vecs),
        "SUU": Subspace(n, s_vecs),
        "powers": tuple(powers),
    }


# -- tensor invariance engine ------------------------------------------------

INVARIANCE_TAGS = ("ad", "L", "ad_dual", "L_dual")


def _tensor_shape(t):
    shape = []
    node = t
    while isinstance(node, (list, tuple)) and not isinstance(node, str):
        shape.append(len(node))
        node = node[0]
    return tuple(shape)


def _flatten_tensor(t, order):
    if order == 0:
        return [Fraction(t)]
    out = []
    for sub in t:
        out.extend(_flatten_tensor(sub, order - 1))
    return out


def _slot_apply(flat, shape, slot, m: Mat):
    """Apply matrix m to one index of a flat tensor."""
    n = shape[slot]
    strides = [1] * len(shape)
    for i in range(len(shape) - 2, -1, -1):
        strides[i] = strides[i + 1] * shape[i + 1]
    out = [ZERO] * len(flat)
    stride = strides[slot]
    block = stride * n
    for base in range(0, len(flat), block):
        for off in range(stride):
            col = [flat[base + a * stride + off] for a in range(n)]
            new = m.apply(col)
            for a in range(n):
                out[base + a * stride + off] = new[a]
    return out


def _rep_matrix(tag: str, alg: Algebra, m: int) -> Mat:
    e = basis_vec(alg.dim, m)
    if tag == "ad":
        return alg.ad(e)
    if tag == "L":
        return alg.left_mult(e)
    if tag == "ad_dual":
        return -alg.ad(e).transpose()
    if tag == "L_dual":
        return -alg.left_mult(e).transpose()
    raise ValueError("unknown representation tag %r (expected one of %s)"
                     % (tag, ", ".join(INVARIANCE_TAGS)))


def invariance_check(tensor, reps: Sequence[str], alg: Algebra,
                     name: str = "invariance") -> Report:
    """Diagonal-action invariance of a tensor under per-slot representations.

    The tensor is a nested array all of whose index ranges equal the
    algebra dimension; reps names one representation per slot.  For each
    basis element X the representing matrix of each slot's tag is applied
    directly to that index and the results summed; the tensor is
    invariant when this vanishes for every X.  With this convention the
    bracket tensor of a Lie algebra is annihilated exactly by
    (ad_dual, ad_dual, ad), which is the Jacobi identity.
    """
    shape = _tensor_shape(tensor)
    if len(shape) != len(reps):
        raise ValueError("slot count %d does not match tensor order %d"
                         % (len(reps), len(shape)))
    if any(s != alg.dim for s in shape):
        raise ValueError("tensor index ranges must equal the algebra dimension")
    flat = _flatten_tensor(tensor, len(shape))
    anchor = "sum over slots of %s action == 0" % (tuple(reps),)
    for m in range(alg.dim):
        mats = [_rep_matrix(tag, alg, m) for tag in reps]
        total = [ZERO] * len(flat)
        for slot, mat in enumerate(mats):
            contrib = _slot_apply(flat, shape, slot, mat)
            total = [a + b for a, b in zip(total, contrib)]
        for pos, val in enumerate(total):
            if val != 0:
                idx = []
                rem = pos
                for s in reversed(shape):
                    idx.append(rem % s)
                    rem //= s
                return failing(name, anchor,
                               witness=(m,) + tuple(reversed(idx)))
    return passing(name, anchor)


def bilinmap_tensor(bm: BilinMap):
    """Order-3 array T[i][j][k]: the e_k coordinate of bm(e_i, e_j)."""
    return [[list(cell) for cell in row] for row in bm.table]


def endo_tensor(m: Mat):
    """Order-2 array for an endomorphism: T[j][k] = e_k coordinate of M e_j."""
    return [[m[k, j] for k in range(m.rows)] for j in range(m.cols)]
