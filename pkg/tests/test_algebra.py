import random
from fractions import Fraction

import pytest

from lsaforge import (Algebra, BilinMap, Endo, Mat, check, invariance_check,
                      is_derivation, product_subspaces)
from lsaforge.algebra import associator, bilinmap_tensor, curvature, endo_tensor
from lsaforge.exact import basis_vec


def test_predicates_on_fixtures(aff, heis, nab_lsa, ab_lsa):
    assert check(aff, "jacobi_antisym")
    assert check(heis, "jacobi_antisym")
    assert check(heis, "left_symmetric")      # two-step nilpotent bracket
    assert not check(aff, "left_symmetric")   # bracket of a solvable algebra
    assert check(nab_lsa, "left_symmetric")
    assert check(ab_lsa, "left_symmetric")
    assert check(ab_lsa, "commutative")
    assert not check(nab_lsa, "commutative")
    assert check(nab_lsa, "lie_admissible")
    assert not check(nab_lsa, "associative")


def test_bracket_and_ad(aff):
    x, y = basis_vec(2, 0), basis_vec(2, 1)
    assert aff.bracket(x, y) == (Fraction(1), Fraction(0))
    assert aff.ad(y).apply(x) == (Fraction(-1), Fraction(0))


def test_conjugate_preserves_predicates(nab_lsa):
    rng = random.Random(5)
    for _ in range(10):
        p = Mat(2, 2, [Fraction(rng.randint(-3, 3)) for _ in range(4)])
        if not p.is_invertible():
            continue
        moved = nab_lsa.conjugate(p)
        assert bool(check(moved, "left_symmetric"))
        assert bool(check(moved, "lie_admissible"))
    assert nab_lsa.conjugate(Mat.identity(2)) == nab_lsa


def test_product_subspaces(nab_lsa, ab_lsa):
    subs = product_subspaces(nab_lsa)
    assert subs["UU"].dim == 2
    assert subs["DUU"].dim == 1
    assert subs["SUU"].dim == 1
    subs = product_subspaces(ab_lsa)
    assert subs["UU"].dim == 1
    assert subs["powers"][2].is_zero()


def test_bracket_tensor_invariance(aff, heis, sl2):
    for lie in (aff, heis, sl2):
        tensor = bilinmap_tensor(
            BilinMap.from_function(lie.dim, lie.bracket))
        assert invariance_check(tensor, ("ad_dual", "ad_dual", "ad"), lie)


def test_ad_is_derivation(sl2):
    for i in range(3):
        assert is_derivation(sl2.ad(basis_vec(3, i)), sl2)


def test_associator_and_curvature(ab_lsa):
    n = ab_lsa.dim
    for i in range(n):
        for j in range(n):
            u, v = basis_vec(n, i), basis_vec(n, j)
            # left symmetry: curvature vanishes
            assert curvature(ab_lsa, u, v).is_zero()
    x = basis_vec(2, 1)
    assert associator(ab_lsa, x, x, x) == ab_lsa.product(
        ab_lsa.product(x, x), x)


def test_endo_tensor_convention():
    m = Mat.from_rows([[1, 2], [3, 4]])
    t = endo_tensor(m)
    # T[j][k] = e_k coordinate of M e_j (column j)
    assert t[0] == [Fraction(1), Fraction(3)]
    assert t[1] == [Fraction(2), Fraction(4)]


def test_scale_add_conjugate_roundtrip(nab_lsa):
    doubled = nab_lsa.scale(2)
    assert doubled.add(nab_lsa.scale(-2)).is_zero_product()
    p = Mat.from_rows([[2, 1], [1, 1]])
    assert nab_lsa.conjugate(p).conjugate(p.inverse()) == nab_lsa


def test_bad_table_rejected():
    with pytest.raises(ValueError):
        Algebra([[(0, 0)]])


def test_endo_wraps(nab_lsa):
    e = Endo(nab_lsa, Mat.identity(2))
    assert e.matrix == Mat.identity(2)
