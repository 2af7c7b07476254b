from fractions import Fraction

import pytest

from lsaforge import (Bilinear, Mat, build_phase, check, cocycle_check,
                      is_lie_extendible, verify_para_kahler)
from lsaforge.algebra import Algebra
from lsaforge.exact import basis_vec, zero_vec


def _zero_alg(n):
    zero = tuple(Fraction(0) for _ in range(n))
    return Algebra([[zero] * n for _ in range(n)])


def test_build_phase_shape(nab_lsa):
    ps = build_phase(nab_lsa)
    assert ps.extended.dim == 4
    assert ps.omega0.kind == "skew"
    expected = Mat.block([[Mat.zeros(2, 2), Mat.identity(2)],
                          [Mat.identity(2).scale(-1), Mat.zeros(2, 2)]])
    assert ps.omega0.matrix == expected
    assert check(ps.extended, "left_symmetric")


def test_build_phase_mixed_products(ab_lsa):
    ps = build_phase(ab_lsa)
    ext = ps.extended
    n = ab_lsa.dim
    x = basis_vec(2 * n, 1)          # e2 in the base
    a = basis_vec(2 * n, n + 1)      # e2* in the dual copy
    # base.base stays the base product; dual.dual is the dual product (zero)
    prod_xx = ext.product(x, x)
    assert prod_xx[:n] == ab_lsa.product(basis_vec(n, 1), basis_vec(n, 1))
    assert all(c == 0 for c in prod_xx[n:])
    assert ext.product(a, a) == zero_vec(2 * n)
    # x.a = -(L_x)^t a lives in the dual summand
    mixed = ext.product(x, a)
    assert all(c == 0 for c in mixed[:n])
    lt = ab_lsa.left_mult(basis_vec(n, 1)).transpose()
    assert mixed[n:] == tuple(-c for c in lt.col(1))


def test_build_phase_rejects_non_lsa(aff):
    with pytest.raises(ValueError):
        build_phase(aff)


def test_extendibility_agreement(ab_lsa, nab_lsa):
    pairs = [
        (ab_lsa, _zero_alg(2)),
        (nab_lsa, _zero_alg(2)),
        (ab_lsa, ab_lsa),
        (nab_lsa, nab_lsa),
        (nab_lsa, ab_lsa),
    ]
    for u, dual in pairs:
        ext = bool(is_lie_extendible(u, dual))
        coc = bool(cocycle_check(u, dual))
        assert ext == coc
        ps = build_phase(u, dual)
        assert ext == bool(check(ps.extended, "lie_admissible"))


def test_para_kahler_certificate(nab_lsa):
    ps = build_phase(nab_lsa)
    lie = ps.extended.commutator_algebra()
    n = nab_lsa.dim
    k = Mat.block([[Mat.identity(n), Mat.zeros(n, n)],
                   [Mat.zeros(n, n), Mat.identity(n).scale(-1)]])
    metric = Bilinear(ps.omega0.matrix * k, "symmetric")
    cert = verify_para_kahler(lie, metric, k)
    assert cert.passed
    names = {r.name for r in cert.reports}
    assert {"bracket", "involution", "eigenspace_split", "parallel_k",
            "omega_skew", "omega_cocycle"} <= names
    assert all(line.strip().startswith("PASS") for line in cert.lines())


def test_para_kahler_tampered_metric(nab_lsa):
    ps = build_phase(nab_lsa)
    lie = ps.extended.commutator_algebra()
    n = nab_lsa.dim
    k = Mat.block([[Mat.identity(n), Mat.zeros(n, n)],
                   [Mat.zeros(n, n), Mat.identity(n).scale(-1)]])
    bad = Bilinear(Mat.identity(2 * n), "symmetric")
    cert = verify_para_kahler(lie, bad, k)
    assert not cert.passed
    first = cert.first_failure()
    assert first is not None and not first.passed
