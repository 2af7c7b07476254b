import random
from fractions import Fraction

import pytest

from lsaforge import (Mat, build_hyper, build_symp_double,
                      build_theta_double, check, compat_curvature, delta_op,
                      is_compatible, lts_from_o, lts_from_yb, myb_residual,
                      o_op, oeq_check, pencil, pencil_identity, tu_product,
                      yb)
from lsaforge.catalog import (canonical, catalog_algebras, rand_fraction,
                              rand_symplectic)
from lsaforge.exact import basis_vec


def test_family1_compatible():
    pair = canonical("compat_family1", {"a": 1, "b": 1})
    bullet, circ = pair["bullet"], pair["circ"]
    assert check(bullet, "left_symmetric")
    assert check(circ, "left_symmetric")
    assert is_compatible(bullet, circ)
    assert pencil_identity(bullet, circ)


def test_pencil_left_symmetric():
    pair = canonical("compat_family1", {"a": 1, "b": 1})
    bullet, circ = pair["bullet"], pair["circ"]
    for a, b in [(1, 1), (Fraction(1, 2), 3), (-2, Fraction(2, 3)),
                 (0, 1), (5, -1)]:
        assert check(pencil(bullet, circ, a, b), "left_symmetric")


def test_tu_product_matches_compatibility(nab_lsa, ab_lsa, omega2):
    # a compatible pair: tu product is Lie-admissible
    pair = canonical("compat_family1", {"a": 1, "b": 1})
    assert bool(check(tu_product(pair["bullet"], pair["circ"]),
                      "lie_admissible")) == \
        bool(is_compatible(pair["bullet"], pair["circ"]))
    # an incompatible pair found by seeded search
    p = rand_symplectic(omega2.matrix, random.Random(3))
    moved = nab_lsa.conjugate(p)
    assert not is_compatible(nab_lsa, moved)
    assert not check(tu_product(nab_lsa, moved), "lie_admissible")
    assert bool(check(tu_product(nab_lsa, ab_lsa), "lie_admissible")) == \
        bool(is_compatible(nab_lsa, ab_lsa))


def test_compat_curvature_values():
    e2 = basis_vec(2, 1)
    pair = canonical("compat_family1", {"a": 1, "b": 1})
    k = compat_curvature(pair["bullet"], pair["circ"], e2, e2)
    assert k == Mat.from_rows([[0, -2], [0, 0]])
    pair = canonical("compat_family2", {"a": 1, "b": 1, "c": 2})
    k = compat_curvature(pair["bullet"], pair["circ"], e2, e2)
    assert k == Mat.from_rows([[0, 6], [0, 0]])


def test_build_hyper_self_double(nab_lsa, omega2):
    data = build_hyper(nab_lsa, nab_lsa, omega2)
    assert data.cert.passed
    assert data.complex_product.lie.dim == 4
    pair = canonical("compat_family1", {"a": 1, "b": 1})
    assert build_hyper(pair["bullet"], pair["circ"],
                       pair["omega"]).cert.passed


def test_yb_identity_recovers_bracket(aff, sl2):
    for lie in (aff, sl2):
        n = lie.dim
        got = yb(Mat.identity(n), lie)
        for i in range(n):
            for j in range(n):
                assert got.table[i][j] == \
                    tuple(lie.bracket(basis_vec(n, i), basis_vec(n, j)))


def test_delta_o_of_identity_vanish(nab_lsa):
    ident = Mat.identity(2)
    assert delta_op(ident, nab_lsa).is_zero()
    assert o_op(ident, nab_lsa).is_zero()
    assert oeq_check(ident, nab_lsa)


def test_oeq_random_operators():
    rng = random.Random(13)
    for entry in catalog_algebras():
        n = entry.alg.dim
        for _ in range(5):
            a = Mat(n, n, [rand_fraction(rng) for _ in range(n * n)])
            assert oeq_check(a, entry.alg)


def test_modified_yb_residual(aff):
    a = Mat.from_rows([[0, 1], [-1, 0]])
    assert myb_residual(a, aff, -1)
    assert not myb_residual(a, aff, 1)


def test_symp_double_accepts_and_rejects(aff, omega2):
    zero = canonical("dim2_abelian", {"a": 1})["alg"].scale(0)
    for lam in (Fraction(1), Fraction(1, 2)):
        data = build_symp_double(zero, omega2, Mat.identity(2).scale(lam))
        assert data.cert.passed
        assert data.bracket.dim == 4
    with pytest.raises(ValueError):
        build_symp_double(aff, omega2, Mat.identity(2))


def test_theta_double(ab_lsa, omega2):
    data = build_theta_double(ab_lsa, omega2, Mat.identity(2))
    assert data.cert.passed
    assert data.j * data.j == Mat.identity(4).scale(-1)


def test_lie_triples_from_operators(aff, ab_lsa):
    lts = lts_from_yb(aff, Mat.identity(2).scale(2))
    assert lts.check().passed
    lts2 = lts_from_o(ab_lsa, Mat.identity(2))
    assert lts2.check().passed
