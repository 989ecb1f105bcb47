"""Divided-difference operators and the Demazure route to toric Schur polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .boxes import Box
from .rings import MultiPoly, all_exponent_vectors
from .symfunc import NotSymmetricError, expand_in_schur, schur_poly


@dataclass(frozen=True)
class DividedDifferenceOp:
    index: int
    nvars: int

    def __post_init__(self):
        if not 1 <= self.index <= self.nvars - 1:
            raise ValueError(f"index {self.index} outside 1..{self.nvars - 1}")

    def __call__(self, p: MultiPoly) -> MultiPoly:
        return divided_difference(self.index, p)


def divided_difference(i: int, p: MultiPoly) -> MultiPoly:
    """``(1 - x_{i+1}/x_i)^{-1} (s_i - 1)`` acting termwise (``i`` is 1-based)."""
    if not 1 <= i < p.nvars:
        raise ValueError(f"divided difference d_{i} needs at least {i + 1} variables")
    a_pos, b_pos = i - 1, i
    out: dict[tuple, int] = {}
    for key, c in p.raw_items():
        a, b = key[a_pos], key[b_pos]
        if a == b:
            continue
        lo, hi, sign = (a, b, 1) if a < b else (b, a, -1)
        for r in range(hi - lo):
            new = list(key)
            new[a_pos], new[b_pos] = hi - r, lo + r
            new = tuple(new)
            out[new] = out.get(new, 0) + sign * c
    return MultiPoly._raw(p.nvars, {k: v for k, v in out.items() if v}, p.names)


def nabla(i: int, n: int, p: MultiPoly) -> MultiPoly:
    """``d_{n-1+i} ... d_{i+1} d_i`` with ``d_i`` acting first."""
    for j in range(i, n + i):
        p = divided_difference(j, p)
    return p


def generating_function(lam: Sequence[int], box: Box) -> MultiPoly:
    """``s_lam(y) prod_i (1 + (-1)^n q x_i^N)`` with ``y_i = x_{i+n}``."""
    n, N = box.n, box.N
    nvars = 2 * n
    f = schur_poly(lam, n).extend(nvars, offset=n)
    sign = -1 if n % 2 else 1
    for i in range(n):
        exps = [0] * nvars
        exps[i] = N
        f = f * (MultiPoly.one(nvars) + MultiPoly.monomial(exps, sign, 1))
    return f


def demazure_image(lam: Sequence[int], box: Box) -> MultiPoly:
    """``x^{-delta} nabla_1 ... nabla_n y^{delta} F_lam`` (``nabla_n`` acts first)."""
    n = box.n
    delta = [0] * n + [n - j for j in range(n)]
    p = generating_function(lam, box).mul_monomial(delta)
    for i in range(n, 0, -1):
        p = nabla(i, n, p)
    return p.mul_monomial([-(n - j) for j in range(n)] + [0] * n)


def demazure_toric(lam: Sequence[int], box: Box) -> dict:
    """``mu -> sum_d q^d s_{lam/d/mu}(y)`` read off from the Schur expansion in ``x``."""
    image = demazure_image(lam, box)
    if any(e < 0 for key, _ in image.raw_items() for e in key[:-1]):
        raise ArithmeticError("Demazure image is not polynomial")
    try:
        expansion = expand_in_schur(image, box.n)
    except NotSymmetricError as exc:
        raise ArithmeticError(f"Demazure image is not symmetric in x: {exc}") from None
    out = {}
    for mu, coeff in expansion.items():
        if not box.contains(mu):
            raise ArithmeticError(f"Schur index {mu} leaves the box")
        out[tuple(mu)] = coeff
    return dict(sorted(out.items()))


def demazure_table(box: Box) -> dict:
    """``(lam, mu) -> {nu: QPoly}``, the Schur expansion of every Demazure coefficient."""
    table = {}
    for lam in box.partitions():
        for mu, poly in demazure_toric(lam, box).items():
            entry = {nu: c for nu, c in expand_in_schur(poly, box.n).items() if c}
            if entry:
                table[(tuple(lam), mu)] = entry
    return dict(sorted(table.items()))


def nilhecke_relations_residual(m: int, max_degree: int = 4) -> dict:
    """Failures of ``d_i^2 = -d_i``, the braid relation and far commutation.

    Checked on every monomial of total degree ``<= max_degree`` in ``m``
    variables.  Returns ``relation -> list of (monomial, residual)``; empty
    lists mean the relations hold.
    """
    if m < 3:
        raise ValueError("need at least three variables")
    report = {"square": [], "braid": [], "commute": []}
    for deg in range(max_degree + 1):
        for exps in all_exponent_vectors(m, deg):
            mono = MultiPoly.monomial(exps)
            for i in range(1, m):
                d = divided_difference(i, mono)
                res = divided_difference(i, d) + d
                if res:
                    report["square"].append((exps, res))
            for i in range(1, m - 1):
                lhs = divided_difference(i, divided_difference(i + 1, divided_difference(i, mono)))
                rhs = divided_difference(i + 1, divided_difference(i, divided_difference(i + 1, mono)))
                if lhs != rhs:
                    report["braid"].append((exps, lhs - rhs))
            for i in range(1, m):
                for j in range(i + 2, m):
                    res = (divided_difference(i, divided_difference(j, mono))
                           - divided_difference(j, divided_difference(i, mono)))
                    if res:
                        report["commute"].append((exps, res))
    return report
