import random
from fractions import Fraction

import pytest

from lsaforge import Bilinear, Mat, check, is_invariant_form
from lsaforge.algebra import Algebra
from lsaforge.catalog import (DEFAULT_SCALARS, FAMILIES, _model_params,
                              build_quadratic_symplectic, canonical,
                              catalog_algebras, catalog_families,
                              catalog_load, check_type_two_constraints,
                              classify_compatible_dim2, cybe_double,
                              derivation_phase, eval_linear, flat_double,
                              graded_tensor_algebra, killing_form,
                              normalize_assoc_symp, normalize_dim2_slsa,
                              rand_symplectic, rand_type_one_params,
                              rand_type_two_params, type_one_template_params,
                              type_two_family_params)
from lsaforge.report import InternalInconsistency


def test_families_listed():
    assert set(FAMILIES) == {
        "dim2_abelian", "dim2_nonabelian", "compat_family1",
        "compat_family2", "assoc_type_one", "assoc_type_two"}
    assert set(catalog_families()) == set(FAMILIES)


def test_canonical_validation_errors():
    with pytest.raises(ValueError, match="nonzero"):
        canonical("dim2_nonabelian", {"a": Fraction(0)})
    with pytest.raises(ValueError, match="missing parameter"):
        canonical("dim2_nonabelian", {})
    with pytest.raises(ValueError, match="family"):
        canonical("no_such_family", {})


def test_type_two_constraint_gate():
    good = type_two_family_params(1, 0, 1, 0)
    assert check_type_two_constraints(good).passed
    bad = dict(good)
    bad["d"] = (Mat.from_rows([[1, 0], [0, 0]]), Mat.zeros(2, 2))
    cert = check_type_two_constraints(bad)
    assert not cert.passed
    assert cert.first_failure().name == "constraint_mixed"
    with pytest.raises(ValueError, match="constraint"):
        canonical("assoc_type_two", bad)


def test_catalog_entries_self_consistent():
    entries = catalog_algebras()
    assert len(entries) == 9
    for entry in entries:
        assert check(entry.alg, "left_symmetric")
        assert is_invariant_form(entry.omega, entry.alg)


def test_dim2_normalize_roundtrip(omega2):
    rng = random.Random(17)
    for family, a in (("dim2_abelian", Fraction(3, 2)),
                      ("dim2_nonabelian", Fraction(-2))):
        model = canonical(family, {"a": a})["alg"]
        for _ in range(5):
            p = rand_symplectic(omega2.matrix, rng)
            moved = model.conjugate(p)
            cid = normalize_dim2_slsa(moved, omega2)
            assert cid.family == family
            back = moved.conjugate(cid.change_of_basis.matrix)
            assert back == canonical(family, cid.params)["alg"]


def test_dim2_normalize_trivial(omega2):
    zero = Algebra([[(0, 0), (0, 0)], [(0, 0), (0, 0)]])
    cid = normalize_dim2_slsa(zero, omega2)
    assert cid.family == "trivial"


def test_classify_verdicts(nab_lsa, omega2):
    pair = canonical("compat_family1", {"a": 1, "b": 1})
    v = classify_compatible_dim2(pair["bullet"], pair["circ"], pair["omega"])
    assert v.kind == "compat_family1"
    assert v.canonical.params["a"] == 1 and v.canonical.params["b"] == 1
    # same product twice up to scale
    v = classify_compatible_dim2(pair["bullet"], pair["bullet"].scale(2),
                                 pair["omega"])
    assert v.kind == "trivially compatible"
    # incompatible pair (deterministic seeded construction)
    p = rand_symplectic(omega2.matrix, random.Random(3))
    v = classify_compatible_dim2(nab_lsa, nab_lsa.conjugate(p), omega2)
    assert v.kind == "incompatible"
    assert v.witness is not None
    # swapped arguments still identified
    pair2 = canonical("compat_family2", {"a": 1, "b": 1, "c": 1})
    v = classify_compatible_dim2(pair2["circ"], pair2["bullet"],
                                 pair2["omega"])
    assert v.kind == "compat_family2"


def test_eval_linear():
    assert eval_linear("1-a10", {"a10": Fraction(3)}) == -2
    assert eval_linear("-a00", {"a00": Fraction(2)}) == -2
    assert eval_linear("2/3", {}) == Fraction(2, 3)
    assert eval_linear("2*a+1", {"a": Fraction(1, 2)}) == 2
    with pytest.raises(ValueError, match="unknown parameter"):
        eval_linear("zz+1", {})


def test_catalog_load_matches_canonical():
    for family in FAMILIES:
        data = catalog_load(family)
        model = canonical(family, _model_params(family, data["scalars"]))
        for key, value in model.items():
            assert data[key] == value
    override = catalog_load("dim2_nonabelian", {"a": Fraction(2)})
    assert override["alg"] == canonical("dim2_nonabelian",
                                        {"a": Fraction(2)})["alg"]
    with pytest.raises(ValueError, match="unknown parameter"):
        catalog_load("dim2_nonabelian", {"bogus": 1})


def test_default_scalars_cover_families():
    assert set(DEFAULT_SCALARS) == set(FAMILIES)


def test_killing_form_nondegenerate(sl2, heis):
    assert killing_form(sl2).matrix.is_invertible()
    assert killing_form(heis).matrix.is_zero()


def test_cybe_double(heis, sl2):
    good = Mat.from_rows([[0, 0, 1], [0, 0, 0], [-1, 0, 0]])
    data = cybe_double(heis, good, Mat.zeros(3, 3))
    assert data.cert.passed
    assert data.bracket.dim == 6
    with pytest.raises(ValueError, match="Yang-Baxter"):
        cybe_double(heis, Mat.from_rows([[0, 1, 0], [-1, 0, 0], [0, 0, 0]]),
                    Mat.zeros(3, 3))
    killing = killing_form(sl2)
    b = Mat.from_rows([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
    data = cybe_double(sl2, b, killing.matrix)
    assert data.cert.passed


def test_graded_tensor_and_derivation_phase(aff):
    graded, deriv = graded_tensor_algebra(aff, 2)
    assert graded.dim == 4
    assert check(graded, "jacobi_antisym")
    dp = derivation_phase(graded, deriv)
    assert dp.cert.passed
    with pytest.raises(ValueError, match="invertible"):
        derivation_phase(graded, Mat.zeros(4, 4))
    # higher truncation is still a Lie algebra with nilpotent products
    deep, _ = graded_tensor_algebra(aff, 3)
    assert check(deep, "jacobi_antisym")
    from lsaforge.algebra import product_subspaces
    assert product_subspaces(deep)["powers"][-1].is_zero()


def test_quadratic_and_flat_double(aff):
    q = build_quadratic_symplectic(aff, 2)
    assert q.cert.passed
    assert q.lie.dim == 8
    fd = flat_double(q.lie, q.metric)
    assert fd.cert.passed
    assert fd.bracket.dim == 16


def test_rand_symplectic_property(omega2):
    rng = random.Random(23)
    for _ in range(10):
        m = rand_symplectic(omega2.matrix, rng)
        assert m.transpose() * omega2.matrix * m == omega2.matrix


def test_assoc_normalize_roundtrip():
    rng = random.Random(31)
    for _ in range(5):
        params = rand_type_one_params(rng)
        data = canonical("assoc_type_one", params)
        p = rand_symplectic(data["omega"].matrix, rng)
        cid = normalize_assoc_symp(data["alg"].conjugate(p), data["omega"])
        assert cid.family == "assoc_type_one"
    for _ in range(5):
        params = rand_type_two_params(rng)
        data = canonical("assoc_type_two", params)
        p = rand_symplectic(data["omega"].matrix, rng)
        cid = normalize_assoc_symp(data["alg"].conjugate(p), data["omega"])
        assert cid.family == "assoc_type_two"


def test_type_one_template_params():
    params = type_one_template_params(1, 1, 2)
    data = canonical("assoc_type_one", params)
    assert check(data["alg"], "associative")
