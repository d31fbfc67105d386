"""Expected dimension, total classes, and the two-component splits."""

from math import comb

import pytest

from schubfire.bundles import segre, sym, total_chern, ustar
from schubfire.chow import GrassCtx, integral, schubert_string
from schubfire.errors import RankCapExceededError
from schubfire.limiting import (
    ProblemParams,
    expected_dim,
    is_generically_empty,
    sigma_direct,
    sigma_pb,
    split,
    total_class,
    verify_identity,
)


def test_params_validation():
    with pytest.raises(ValueError):
        ProblemParams(2, 2, 3)
    with pytest.raises(ValueError):
        ProblemParams(1, 3, 0)
    with pytest.raises(ValueError):
        ProblemParams(1, 3, 3, 3)
    p = ProblemParams(1, 3, 3, 1)
    assert p.l == 2


def test_expected_dim():
    assert expected_dim(1, 3, 3) == 0
    assert expected_dim(3, 8, 3) == 0
    assert expected_dim(1, 4, 5) == 0  # 2*3 - C(6,5)
    assert expected_dim(2, 4, 2) == 0
    assert expected_dim(1, 2, 3) == -2


def test_total_class_values():
    # quadrics and planes: the top class is 8 z (x y - z) wherever it fits
    for n in (5, 6, 7):
        ctx = GrassCtx(2, n)
        x, y, z = (ctx.sigma((1,) * i) for i in (1, 2, 3))
        assert total_class(2, n, 2) == 8 * z * (x * y - z)
    assert integral(total_class(2, 7, 4)) == 3297280
    assert total_class(2, 4, 2) == GrassCtx(2, 4).zero()


def test_generic_emptiness():
    assert is_generically_empty(2, 4, 2)
    assert not is_generically_empty(1, 3, 3)
    assert not is_generically_empty(3, 8, 3)
    # a smooth quadric carries no r-plane once r exceeds (n-1)/2
    assert is_generically_empty(2, 3, 2)
    assert is_generically_empty(3, 6, 2)


def test_sigma_direct_examples():
    assert integral(sigma_direct(1, 3, 3, 1)) == 15
    assert integral(sigma_direct(1, 3, 3, 2)) == 12
    assert integral(sigma_direct(2, 7, 4, 2)) == 1648640


def test_sigma_pb_examples():
    ctx = GrassCtx(2, 6)
    x, y, z = (ctx.sigma((1,) * i) for i in (1, 2, 3))
    assert sigma_pb(2, 6, 2, 1) == 4 * z * (x * y - z)
    assert sigma_pb(2, 4, 2, 1) == GrassCtx(2, 4).zero()
    assert integral(sigma_pb(3, 8, 3, 2)) == 0
    assert integral(sigma_pb(3, 8, 3, 1)) == 321489


def test_split_examples():
    res = split(2, 7, 4, 3)
    assert (res.count_k, res.count_l, res.count_total) == (483840, 2813440, 3297280)
    assert res.identity_ok and res.status == "ok"

    res = split(1, 3, 3, 1)
    assert (res.count_k, res.count_l, res.count_total) == (15, 12, 27)

    res = split(3, 8, 3, 2)
    assert (res.count_k, res.count_l, res.count_total) == (0, 321489, 321489)
    assert res.sigma_k == GrassCtx(3, 8).zero()


def test_split_no_counts_above_dimension_zero():
    res = split(1, 4, 3, 1)  # m = 6 - 4 = 2
    assert res.m == 2
    assert res.count_total is None and res.count_k is None and res.count_l is None
    assert res.identity_ok


def test_split_negative_expected_dimension():
    res = split(1, 2, 4, 2)  # m = 2 - 5 < 0
    assert res.m < 0
    assert res.status == "negative-expected-dimension"
    assert not res.total and not res.sigma_k and not res.sigma_l
    assert res.identity_ok


def test_verify_identity_examples():
    assert verify_identity(1, 3, 3, 1)
    assert verify_identity(2, 7, 4, 2)
    assert verify_identity(2, 4, 2, 1)  # both sides vanish


def test_swap_symmetry():
    for (r, n, d, k) in [(1, 3, 3, 1), (2, 6, 3, 1), (2, 7, 4, 3)]:
        l = d - k
        assert sigma_direct(r, n, d, k) == split(r, n, d, l).sigma_l


def _lines_split_formula(n, d, k):
    """Independently coded specialization of the split class to lines.

    For r = 1 the ranks collapse to d+1, k+1, l+1 and the class is

        c_(k+1)(Sym^k U*) * sum_(i<=l) sum_(j<=l-i) sum_(h<=l-i-j)
            C(d-i, k+h) c_i(Sym^d U*) c_j(Sym^l U*)
            s_h(Sym^k U*) s_(l-h-i-j)(Sym^l U*).
    """
    ctx = GrassCtx(1, n)
    l = d - k
    cd = total_chern(sym(d, ustar()), ctx)
    cl = total_chern(sym(l, ustar()), ctx)
    sk = segre(sym(k, ustar()), ctx)
    sl = segre(sym(l, ustar()), ctx)
    dim = ctx.dim

    def at(series, i):
        return series[i] if 0 <= i <= dim else ctx.zero()

    acc = ctx.zero()
    for i in range(l + 1):
        for j in range(l - i + 1):
            for h in range(l - i - j + 1):
                coeff = comb(d - i, k + h)
                if not coeff:
                    continue
                term = at(cd, i) * at(cl, j) * at(sk, h) * at(sl, l - h - i - j)
                acc = acc + coeff * term
    return at(total_chern(sym(k, ustar()), ctx), k + 1) * acc


def test_lines_specialization_matches_direct():
    for n in (2, 3, 4):
        for d in range(2, 6):
            for k in range(1, d):
                assert _lines_split_formula(n, d, k) == sigma_direct(1, n, d, k), (
                    n,
                    d,
                    k,
                )


def test_counts_nonnegative_at_expected_dimension_zero():
    for r in range(1, 4):
        for n in range(r + 1, 9):
            for d in range(2, 5):
                if expected_dim(r, n, d) != 0 or comb(r + d, d) > 64:
                    continue
                for k in range(1, d):
                    res = split(r, n, d, k)
                    assert res.count_k >= 0 and res.count_l >= 0, (r, n, d, k)
                    assert res.count_k + res.count_l == res.count_total


def test_degenerate_projective_space_case():
    # r = 0: points on a binary form; a degree-d form has d roots, and a
    # first-order degeneration into degree-k and degree-l factors leaves
    # k limiting roots on one and l on the other
    for d in (2, 3, 5):
        for k in range(1, d):
            res = split(0, 1, d, k, route="both")
            assert res.count_total == d
            assert (res.count_k, res.count_l) == (k, d - k)
            assert res.identity_ok


def test_rank_guardrail(monkeypatch):
    monkeypatch.setenv("SCHUBFIRE_RANK_CAP", "5")
    with pytest.raises(RankCapExceededError):
        total_class(2, 7, 4)  # rank 15 > 5
    with pytest.raises(RankCapExceededError):
        sigma_direct(2, 7, 4, 2)
    monkeypatch.setenv("SCHUBFIRE_RANK_CAP", "not-a-number")
    with pytest.raises(ValueError):
        total_class(1, 3, 3)
    monkeypatch.delenv("SCHUBFIRE_RANK_CAP")
    assert integral(total_class(1, 3, 3)) == 27


def test_route_mismatch_guard():
    # the "both" route must agree on a nontrivial case without raising
    res = split(1, 3, 3, 1, route="both")
    assert res.identity_ok
    res_pb = split(1, 3, 3, 1, route="pb")
    assert res_pb.count_k == res.count_k == 15


def test_repr_is_readable():
    assert "27*s[2,2]" in schubert_string(total_class(1, 3, 3))
