import pytest

from lsaforge import Algebra, Bilinear, Mat


@pytest.fixture
def aff():
    """Two-dimensional non-abelian Lie algebra: [e1, e2] = e1."""
    return Algebra([[(0, 0), (1, 0)], [(-1, 0), (0, 0)]])


@pytest.fixture
def heis():
    """Heisenberg Lie algebra: [e1, e2] = e3, e3 central."""
    return Algebra([[(0, 0, 0), (0, 0, 1), (0, 0, 0)],
                    [(0, 0, -1), (0, 0, 0), (0, 0, 0)],
                    [(0, 0, 0), (0, 0, 0), (0, 0, 0)]])


@pytest.fixture
def sl2():
    """Basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    return Algebra([[(0, 0, 0), (0, 2, 0), (0, 0, -2)],
                    [(0, -2, 0), (0, 0, 0), (1, 0, 0)],
                    [(0, 0, 2), (-1, 0, 0), (0, 0, 0)]])


@pytest.fixture
def ab_lsa():
    """Two-dimensional left-symmetric algebra with e2.e2 = e1 only."""
    return Algebra([[(0, 0), (0, 0)], [(0, 0), (1, 0)]])


@pytest.fixture
def nab_lsa():
    """e1.e2 = -e2.e1 = e1, e2.e2 = e2."""
    return Algebra([[(0, 0), (1, 0)], [(-1, 0), (0, 1)]])


@pytest.fixture
def omega2():
    return Bilinear(Mat.from_rows([[0, 1], [-1, 0]]), "skew")
