import pytest

from invseq.errors import DomainError
from invseq.polys import TSeries
from invseq.recurrences import lagrange_coeff
from invseq.series import (
    R_WEIGHTS,
    X,
    XBAR,
    ZERO_X,
    e_diag_series,
    f_n_aw,
    f_polys_aw,
    ggm_series,
    ode_lhs,
    pt_x,
    r_series,
    verify_aw_feq,
    verify_ggm_feq,
    verify_kernel_identity,
    verify_lagrange,
    verify_ode,
    y_series,
    U,
    V,
)

from conftest import AW, E3


def test_ggm_feq():
    assert verify_ggm_feq(8).ok
    assert verify_ggm_feq(10).ok


def test_ggm_feq_detects_corruption():
    e = ggm_series(6)
    coeffs = [e[n] for n in range(7)]
    coeffs[4] = coeffs[4] + U * V
    check = verify_ggm_feq(6, TSeries(coeffs, 6, e[0]))
    assert not check.ok
    assert check.counterexample["t"] <= 5


def test_aw_recursion():
    assert f_n_aw(1) == U * V
    values = [f.evaluate({"u": 1, "v": 1}) for f in f_polys_aw(8)]
    assert values == list(AW)
    assert verify_aw_feq(10).ok


def test_y_series():
    y = y_series(8)
    assert y[1] == 1 + X
    assert y[1].coeff(0) == lagrange_coeff(1, 0, 1) == 1
    one = TSeries([1 + 0 * X], 8, ZERO_X)
    ex = TSeries([X], 8, ZERO_X)
    rhs = ((y + one) * (y + ex)).map(lambda c: c * (1 + XBAR)).shift().truncate(8)
    assert (y - rhs) == TSeries([], 8, ZERO_X)


def test_r_series():
    r = r_series(8)
    assert r[0].is_zero()
    assert r[1] == (X + 1) * R_WEIGHTS[0]
    assert [r[n].coeff(0) for n in range(1, 9)] == list(E3)


def test_pt_x():
    s = TSeries([XBAR + 1 + X], 0, ZERO_X)
    assert pt_x(s)[0] == 1 + X


def test_e_diag():
    d = e_diag_series(8)
    assert d[1] == (1 + X) ** 2
    assert [d[n].coeff(0) for n in range(1, 9)] == list(E3)


def test_kernel_identity():
    assert verify_kernel_identity(10).ok


def test_lagrange():
    assert verify_lagrange(10, 4, 6).ok


@pytest.mark.parametrize("which", ["E", "F", "C"])
def test_odes(which):
    assert verify_ode(which, 30).ok


def test_ode_constant_term():
    assert ode_lhs("E", 10)[0] == 30


def test_ode_rejects():
    with pytest.raises(DomainError):
        verify_ode("Q", 10)
    with pytest.raises(DomainError):
        verify_ode("E", 2)
