from fractions import Fraction

from lsaforge import LieTriple


def test_double_bracket_is_lie_triple(sl2):
    lts = LieTriple.from_function(
        3, lambda x, y, z: sl2.bracket(sl2.bracket(x, y), z))
    cert = lts.check()
    assert cert.passed
    assert {r.name for r in cert.reports} == \
        {"alternating", "cyclic", "derivation"}


def test_zero_triple():
    zero = tuple(Fraction(0) for _ in range(3))
    lts = LieTriple.from_function(3, lambda x, y, z: zero)
    assert lts.is_zero()
    assert lts.check().passed


def test_corrupted_table_fails():
    n = 2
    table = [[[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
             for _ in range(n)]
    table[0][0][1][0] = Fraction(1)   # [x,x,y] != 0 breaks alternation
    cert = LieTriple(table).check()
    assert not cert.passed
    assert cert.first_failure().name == "alternating"
