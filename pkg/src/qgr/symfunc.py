"""Schur and monomial symmetric polynomials, and expansion in the Schur basis."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .rings import MultiPoly, QPoly


class NotSymmetricError(ValueError):
    def __init__(self, index: int):
        super().__init__(f"polynomial is not symmetric under the transposition s_{index}")
        self.index = index


def _trim(lam: Sequence[int]) -> tuple:
    lam = list(lam)
    while lam and lam[-1] == 0:
        lam.pop()
    return tuple(lam)


@lru_cache(maxsize=None)
def _complete_terms(m: int, r: int) -> dict:
    """Monomials of ``h_r(x_1..x_m)`` as a dict exponent tuple -> 1."""
    if r < 0:
        return {}
    if r == 0:
        return {(0,) * m: 1}
    if m == 0:
        return {}
    out = {e + (0,): 1 for e in _complete_terms(m - 1, r)}
    for e in _complete_terms(m, r - 1):
        key = e[:-1] + (e[-1] + 1,)
        out[key] = 1
    return out


def complete_homogeneous(r: int, m: int) -> MultiPoly:
    return MultiPoly._raw(m, {e + (0,): c for e, c in _complete_terms(m, r).items()})


def elementary(r: int, m: int) -> MultiPoly:
    if r < 0 or r > m:
        return MultiPoly.zero(m)
    terms = {}
    for perm in set(permutations([1] * r + [0] * (m - r))):
        terms[perm + (0,)] = 1
    return MultiPoly._raw(m, terms)


@lru_cache(maxsize=None)
def _schur_cached(lam: tuple, m: int) -> MultiPoly:
    ell = len(lam)
    if ell > m:
        return MultiPoly.zero(m)
    if ell == 0:
        return MultiPoly.one(m)
    h = {}

    def entry(i, j):
        r = lam[i] - i + j
        if r not in h:
            h[r] = complete_homogeneous(r, m)
        return h[r]

    # Laplace expansion along rows, memoised on the set of used columns
    memo = {}

    def det(row, used):
        if row == ell:
            return MultiPoly.one(m)
        key = (row, used)
        if key in memo:
            return memo[key]
        total = MultiPoly.zero(m)
        sign = 1
        for j in range(ell):
            if used >> j & 1:
                continue
            e = entry(row, j)
            if e:
                total = total + (e * det(row + 1, used | 1 << j)).scale(sign)
            sign = -sign
        memo[key] = total
        return total

    return det(0, 0)


def schur_poly(lam: Sequence[int], m: int) -> MultiPoly:
    """``s_lam(x_1..x_m)`` from the Jacobi-Trudi determinant in the ``h_r``."""
    lam = _trim(lam)
    if any(a < b for a, b in zip(lam, lam[1:])) or any(p < 0 for p in lam):
        raise ValueError(f"{lam} is not a partition")
    return _schur_cached(lam, m)


def monomial_sym(alpha: Sequence[int], m: int) -> MultiPoly:
    alpha = _trim(alpha)
    if len(alpha) > m:
        return MultiPoly.zero(m)
    padded = alpha + (0,) * (m - len(alpha))
    return MultiPoly._raw(m, {p + (0,): 1 for p in set(permutations(padded))})


def check_symmetric(p: MultiPoly, m: int) -> None:
    """Raise ``NotSymmetricError`` unless ``p`` is symmetric in its first ``m`` variables."""
    for i in range(m - 1):
        if p.swap(i, i + 1) != p:
            raise NotSymmetricError(i + 1)


def expand_in_schur(p: MultiPoly, m: int | None = None) -> dict:
    """Expand ``p`` in the Schur basis of its first ``m`` variables.

    Returns a map ``partition -> coefficient``; partitions have exactly ``m``
    parts.  The coefficient is a ``QPoly`` when ``p`` has only ``m`` variables
    and otherwise a ``MultiPoly`` in the remaining variables.  Laurent input is
    allowed, in which case parts may be negative.
    """
    m = p.nvars if m is None else m
    check_symmetric(p, m)
    rest = p.nvars - m
    work: dict[tuple, dict[tuple, int]] = {}
    for key, c in p.raw_items():
        work.setdefault(key[:m], {})[key[m:]] = c
    out = {}
    while work:
        lead = max(work)
        coeff = dict(work[lead])
        shift = min(lead) if m else 0
        shape = tuple(e - shift for e in lead)
        basis = schur_poly(shape, m)
        for key, a in basis.raw_items():
            e = tuple(v + shift for v in key[:m])
            bucket = work.setdefault(e, {})
            for ck, cv in coeff.items():
                v = bucket.get(ck, 0) - a * cv
                if v:
                    bucket[ck] = v
                else:
                    bucket.pop(ck, None)
            if not bucket:
                del work[e]
        if lead in work:
            raise ArithmeticError("Schur expansion failed to eliminate its leading term")
        if rest:
            out[lead] = MultiPoly._raw(rest, dict(coeff))
        else:
            out[lead] = QPoly({ck[0]: cv for ck, cv in coeff.items()})
    return dict(sorted(out.items()))


def from_schur(expansion: dict, m: int, rest: int = 0) -> MultiPoly:
    """Inverse of ``expand_in_schur``."""
    total = MultiPoly.zero(m + rest)
    for lam, c in expansion.items():
        shift = min(lam) if lam else 0
        s = schur_poly(tuple(v - shift for v in lam), m).mul_monomial((shift,) * m)
        s = s.extend(m + rest)
        if isinstance(c, MultiPoly):
            c = c.extend(m + rest, offset=m)
        else:
            c = MultiPoly.constant(c, m + rest)
        total = total + s * c
    return total


def hook_content_eval(lam: Sequence[int], n: int) -> Fraction:
    """``s_lam(1, ..., 1)`` with ``n`` ones, via the hook-content formula."""
    lam = _trim(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    value = Fraction(1)
    for i, row in enumerate(lam):
        for j in range(row):
            hook = (row - j - 1) + (conj[j] - i - 1) + 1
            value *= Fraction(n + j - i, hook)
    return value
