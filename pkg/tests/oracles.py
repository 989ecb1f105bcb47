"""Independent classical oracles, written without touching the qgr internals.

Partitions here are plain tuples; trailing zeros are ignored.
"""

from __future__ import annotations

from collections import Counter
from itertools import product


def _strip(lam):
    return tuple(p for p in lam if p)


def skew_cells(outer, inner):
    outer, inner = _strip(outer), _strip(inner)
    inner = inner + (0,) * (len(outer) - len(inner))
    if len(inner) > len(outer) or any(i > o for i, o in zip(inner, outer)):
        return None
    return [(r, c) for r, o in enumerate(outer) for c in range(inner[r], o)]


def skew_ssyt(outer, inner, m):
    """All semistandard fillings of ``outer/inner`` with entries ``1..m`` (dicts cell -> entry)."""
    cells = skew_cells(outer, inner)
    if cells is None:
        return []
    out = []
    filling = {}

    def rec(i):
        if i == len(cells):
            out.append(dict(filling))
            return
        r, c = cells[i]
        lo = 1
        if (r, c - 1) in filling:
            lo = max(lo, filling[(r, c - 1)])
        if (r - 1, c) in filling:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, m + 1):
            filling[(r, c)] = v
            rec(i + 1)
        filling.pop((r, c), None)

    rec(0)
    return out


def skew_kostka(outer, inner, weight):
    m = len(weight)
    want = tuple(weight)
    return sum(1 for t in skew_ssyt(outer, inner, m)
               if tuple(Counter(t.values()).get(i, 0) for i in range(1, m + 1)) == want)


def skew_schur_terms(outer, inner, m):
    """``{exponent tuple: coefficient}`` for the skew Schur polynomial in ``m`` variables."""
    terms = Counter()
    for t in skew_ssyt(outer, inner, m):
        counts = Counter(t.values())
        terms[tuple(counts.get(i, 0) for i in range(1, m + 1))] += 1
    return dict(terms)


def lr_coefficient(lam, mu, nu):
    """``c^nu_{lam, mu}``: SSYT of shape ``nu/lam`` and content ``mu`` whose reverse
    row reading word is a lattice word."""
    lam, mu, nu = _strip(lam), _strip(mu), _strip(nu)
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    cells = skew_cells(nu, lam)
    if cells is None:
        return 0
    count = 0
    for t in skew_ssyt(nu, lam, len(mu)):
        if Counter(t.values()) != Counter({i + 1: m for i, m in enumerate(mu)}):
            continue
        word = [t[cell] for cell in sorted(t, key=lambda rc: (rc[0], -rc[1]))]
        seen = Counter()
        ok = True
        for v in word:
            seen[v] += 1
            if v > 1 and seen[v] > seen[v - 1]:
                ok = False
                break
        count += ok
    return count


def brute_force_schur_eval(lam, point):
    """Evaluate ``s_lam`` at a numeric point via the SSYT sum."""
    total = 0
    for t in skew_ssyt(lam, (), len(point)):
        term = 1
        for v in t.values():
            term *= point[v - 1]
        total += term
    return total


def partitions_in_box(n, k):
    return [tuple(sorted(p, reverse=True)) for p in product(range(k + 1), repeat=n)
            if list(p) == sorted(p, reverse=True)]
