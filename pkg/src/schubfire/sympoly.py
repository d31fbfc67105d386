"""Exact dict-based arithmetic for symmetric polynomials in k variables.

Three coordinate systems show up:

* x-monomials: exponent tuples of length k, one slot per variable;
* m-coordinates: partition-shaped exponent tuples (sorted descending,
  padded to length k), one entry per monomial-symmetric orbit;
* e-monomials: exponent tuples (a1..ak) standing for e1^a1 * ... * ek^ak
  in the elementary generators.

All coefficients are Python ints, so nothing can overflow.  Conversion out
of the x/m world is done by straightening: repeatedly read off the
lexicographically greatest exponent vector (always a partition for a
symmetric input) and subtract the matching elementary monomial or Schur
expansion until nothing is left.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from math import factorial

from .errors import NonSymmetricInputError

XPoly = dict[tuple[int, ...], int]


def poly_mul(p: XPoly, q: XPoly, cap: int | None = None) -> XPoly:
    """Product of exponent-tuple dicts, optionally dropping degrees > cap."""
    out: XPoly = {}
    for ea, ca in p.items():
        for eb, cb in q.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            if cap is not None and sum(key) > cap:
                continue
            c = out.get(key, 0) + ca * cb
            if c:
                out[key] = c
            elif key in out:
                del out[key]
    return out


def poly_add(p: XPoly, q: XPoly) -> XPoly:
    out = dict(p)
    for e, c in q.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        elif e in out:
            del out[e]
    return out


def poly_scale(p: XPoly, c: int) -> XPoly:
    if c == 0:
        return {}
    return {e: c * v for e, v in p.items()}


def elementary_x(i: int, k: int) -> XPoly:
    """e_i(x1..xk) as an x-poly; zero for i > k."""
    if i < 0 or i > k:
        return {}
    out: XPoly = {}
    for chosen in combinations(range(k), i):
        exps = [0] * k
        for j in chosen:
            exps[j] = 1
        out[tuple(exps)] = 1
    return out


def complete_x(i: int, k: int) -> XPoly:
    """h_i(x1..xk) as an x-poly."""
    if i < 0:
        return {}
    from itertools import combinations_with_replacement

    out: XPoly = {}
    for chosen in combinations_with_replacement(range(k), i):
        exps = [0] * k
        for j in chosen:
            exps[j] += 1
        key = tuple(exps)
        out[key] = out.get(key, 0) + 1
    return out


def monomial_sym_x(lam: tuple[int, ...], k: int) -> XPoly:
    """m_lam(x1..xk): the orbit sum of x^lam."""
    if len(lam) > k:
        return {}
    padded = tuple(lam) + (0,) * (k - len(lam))
    return {w: 1 for w in set(permutations(padded))}


def _distinct_perm_count(key: tuple[int, ...]) -> int:
    mult: dict[int, int] = {}
    for v in key:
        mult[v] = mult.get(v, 0) + 1
    out = factorial(len(key))
    for m in mult.values():
        out //= factorial(m)
    return out


def x_to_m(p: XPoly, k: int, check: bool = True) -> dict[tuple[int, ...], int]:
    """Collapse a symmetric x-poly to m-coordinates.

    With check=True, raises NonSymmetricInputError unless every orbit is
    complete and carries a constant coefficient.
    """
    m: dict[tuple[int, ...], int] = {}
    census: dict[tuple[int, ...], int] = {}
    for key, c in p.items():
        if len(key) != k:
            raise ValueError(f"exponent tuple {key} is not length {k}")
        skey = tuple(sorted(key, reverse=True))
        census[skey] = census.get(skey, 0) + 1
        if key == skey:
            m[skey] = c
    if check:
        for key, c in p.items():
            skey = tuple(sorted(key, reverse=True))
            if m.get(skey) != c:
                raise NonSymmetricInputError(
                    f"coefficient of x^{key} differs within its orbit"
                )
        for skey, seen in census.items():
            if seen != _distinct_perm_count(skey):
                raise NonSymmetricInputError(f"orbit of {skey} is incomplete")
    return {key: c for key, c in m.items() if c}


def m_elem_step(m: dict[tuple[int, ...], int], p: int, k: int) -> dict[tuple[int, ...], int]:
    """Multiply an m-coordinate dict by e_p, staying in m-coordinates."""
    if p == 0:
        return dict(m)
    if p > k:
        return {}
    out: dict[tuple[int, ...], int] = {}
    for nu, c in m.items():
        bucket: dict[tuple[int, ...], int] = {}
        for w in set(permutations(nu)):
            for chosen in combinations(range(k), p):
                v = list(w)
                for i in chosen:
                    v[i] += 1
                vt = tuple(v)
                bucket[vt] = bucket.get(vt, 0) + 1
        for vt, cnt in bucket.items():
            if all(vt[i] >= vt[i + 1] for i in range(k - 1)):
                val = out.get(vt, 0) + c * cnt
                if val:
                    out[vt] = val
                elif vt in out:
                    del out[vt]
    return out


@lru_cache(maxsize=None)
def e_monomial_m_expansion(cols: tuple[int, ...], k: int) -> dict[tuple[int, ...], int]:
    """m-expansion of a product of elementary polynomials.

    cols is the weakly decreasing tuple of elementary indices; prefixes are
    shared through the cache.  Callers must treat the result as read-only.
    """
    if not cols:
        return {(0,) * k: 1}
    prev = e_monomial_m_expansion(cols[:-1], k)
    return m_elem_step(prev, cols[-1], k)


def _e_exps_to_cols(exps: tuple[int, ...]) -> tuple[int, ...]:
    cols: list[int] = []
    for i in range(len(exps), 0, -1):
        cols.extend([i] * exps[i - 1])
    return tuple(cols)


def m_to_elementary(m: dict[tuple[int, ...], int], k: int) -> dict[tuple[int, ...], int]:
    """Rewrite an m-coordinate dict as a polynomial in e1..ek."""
    work = {key: c for key, c in m.items() if c}
    out: dict[tuple[int, ...], int] = {}
    while work:
        lam = max(work)
        c = work[lam]
        exps = tuple(lam[i] - lam[i + 1] for i in range(k - 1)) + (lam[k - 1],)
        out[exps] = out.get(exps, 0) + c
        for key, cnt in e_monomial_m_expansion(_e_exps_to_cols(exps), k).items():
            v = work.get(key, 0) - c * cnt
            if v:
                work[key] = v
            elif key in work:
                del work[key]
    return {e: c for e, c in out.items() if c}


@lru_cache(maxsize=None)
def schur_m_expansion(lam: tuple[int, ...], k: int) -> dict[tuple[int, ...], int]:
    """m-expansion of the Schur polynomial s_lam(x1..xk).

    Enumerates semistandard tableaux of shape lam with entries in 1..k and
    reads off the contents; the partition-shaped contents carry the Kostka
    numbers.  Zero (empty dict) when lam has more than k rows.
    """
    if len(lam) > k:
        return {}
    if not lam:
        return {(0,) * k: 1}
    contents: dict[tuple[int, ...], int] = {}

    def fill(row: int, above: tuple[int, ...], content: list[int]) -> None:
        width = lam[row]

        def cells(j: int, prev: int) -> None:
            if j == width:
                if row + 1 == len(lam):
                    key = tuple(content)
                    contents[key] = contents.get(key, 0) + 1
                else:
                    fill(row + 1, tuple(current_row), content)
                return
            lo = prev
            if row > 0:
                lo = max(lo, above[j] + 1)
            for v in range(lo, k + 1):
                current_row[j] = v
                content[v - 1] += 1
                cells(j + 1, v)
                content[v - 1] -= 1

        current_row = [0] * width
        cells(0, 1)

    fill(0, (), [0] * k)
    return {
        key: c
        for key, c in contents.items()
        if all(key[i] >= key[i + 1] for i in range(k - 1))
    }


def m_to_schur(m: dict[tuple[int, ...], int], k: int) -> dict[tuple[int, ...], int]:
    """Rewrite an m-coordinate dict in the Schur basis.

    Keys of the result are partitions with trailing zeros stripped.
    """
    work = {key: c for key, c in m.items() if c}
    out: dict[tuple[int, ...], int] = {}
    while work:
        lam = max(work)
        c = work[lam]
        stripped = lam
        while stripped and stripped[-1] == 0:
            stripped = stripped[:-1]
        out[stripped] = out.get(stripped, 0) + c
        for key, cnt in schur_m_expansion(stripped, k).items():
            v = work.get(key, 0) - c * cnt
            if v:
                work[key] = v
            elif key in work:
                del work[key]
    return {e: c for e, c in out.items() if c}
