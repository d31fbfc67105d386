"""Symmetric-polynomial plumbing: basis conversions and straightening."""

import pytest

from schubfire.errors import NonSymmetricInputError
from schubfire.sympoly import (
    complete_x,
    e_monomial_m_expansion,
    elementary_x,
    m_to_elementary,
    m_to_schur,
    monomial_sym_x,
    poly_add,
    poly_mul,
    poly_scale,
    schur_m_expansion,
    x_to_m,
)

from _oracles import schur_x_jt


def test_elementary_and_complete():
    assert elementary_x(0, 2) == {(0, 0): 1}
    assert elementary_x(2, 2) == {(1, 1): 1}
    assert elementary_x(3, 2) == {}
    assert complete_x(2, 2) == {(2, 0): 1, (1, 1): 1, (0, 2): 1}


def test_x_to_m_detects_asymmetry():
    with pytest.raises(NonSymmetricInputError):
        x_to_m({(2, 0): 1}, 2)  # incomplete orbit
    with pytest.raises(NonSymmetricInputError):
        x_to_m({(2, 0): 1, (0, 2): 2}, 2)  # uneven coefficients
    assert x_to_m({(2, 0): 3, (0, 2): 3}, 2) == {(2, 0): 3}


def test_m_elem_fold_matches_direct_expansion():
    # e1^2 e2 in 3 variables, via the cached m-space fold
    got = e_monomial_m_expansion((2, 1, 1), 3)
    direct = poly_mul(poly_mul(elementary_x(2, 3), elementary_x(1, 3)), elementary_x(1, 3))
    assert got == x_to_m(direct, 3)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_schur_expansion_matches_jacobi_trudi(k):
    shapes = [(), (1,), (2,), (1, 1), (2, 1), (3,), (2, 2), (3, 1), (2, 1, 1), (2, 2, 1)]
    for lam in shapes:
        if len(lam) > k:
            assert schur_m_expansion(lam, k) == {}
            continue
        assert schur_m_expansion(lam, k) == x_to_m(schur_x_jt(lam, k), k), lam


def test_m_to_schur_round_trip():
    for lam in [(2, 1), (3, 1), (2, 2), (3, 2, 1)]:
        m = schur_m_expansion(lam, 3)
        if not m:
            continue
        assert m_to_schur(m, 3) == {lam: 1}


def test_m_to_elementary_round_trip():
    # s_{2,1} = e2 e1 - e3
    assert m_to_elementary(schur_m_expansion((2, 1), 3), 3) == {
        (1, 1, 0): 1,
        (0, 0, 1): -1,
    }
    # h_2 = e1^2 - e2
    assert m_to_elementary(x_to_m(complete_x(2, 3), 3), 3) == {
        (2, 0, 0): 1,
        (0, 1, 0): -1,
    }


def test_monomial_sym_and_scale():
    m2 = monomial_sym_x((2,), 2)
    assert m2 == {(2, 0): 1, (0, 2): 1}
    assert poly_scale(m2, 0) == {}
    assert poly_add(m2, poly_scale(m2, -1)) == {}
