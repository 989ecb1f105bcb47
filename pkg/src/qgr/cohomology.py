"""Quantum products, Gromov-Witten invariants and toric Schur polynomials."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .boxes import (Box, conjugate, cylindric_shape, enumerate_cylindric_tableaux, max_degree,
                    partition_of_word, size, word_of_partition)
from .rings import MultiPoly, QPoly
from .symfunc import elementary, expand_in_schur, hook_content_eval, schur_poly
from .walkers import OSCULATING, VICIOUS, enumerate_configs, partition_function
from .yang_baxter import SpinOperator, identity, yba_operator, zero


class InternalConsistencyError(AssertionError):
    """Two independent computations of the same quantity disagree."""


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def giambelli_operator(lam: tuple, box: Box) -> SpinOperator:
    """``S_lam = det(H_{lam_i - i + j})`` expanded as a permutation sum."""
    n, N = box.n, box.N
    lam = tuple(lam)
    total = zero(N)
    for p in permutations(range(n)):
        op = identity(N)
        for i in range(n):
            r = lam[i] - i + p[i]
            if r < 0 or r > N:
                op = None
                break
            op = op @ yba_operator("H", r, N)
        if op is not None:
            total = total + op.scale(_perm_sign(p))
    total.name = f"S{lam}"
    return total


def product_state(lam: Sequence[int], mu: Sequence[int], box: Box) -> dict:
    """``S_lam |mu>`` as ``nu -> QPoly``."""
    op = giambelli_operator(tuple(lam), box)
    image = op.image(word_of_partition(mu, box))
    return {partition_of_word(w, box): c for w, c in image.items()}


def gw_invariant(lam, mu, nu, d: int, box: Box) -> int:
    """``C_{lam mu}^{nu, d}``, the coefficient of ``q^d`` in ``<nu|S_lam|mu>``."""
    if size(lam) + size(mu) - size(nu) != d * box.N:
        return 0
    return product_state(lam, mu, box).get(tuple(nu), QPoly()).coeff(d)


def quantum_product(lam, mu, box: Box) -> dict:
    """``s_lam * s_mu`` as ``(nu, d) -> C``, sorted by ``(d, nu)``."""
    out = {}
    for nu, c in product_state(lam, mu, box).items():
        for d, v in c.items():
            if v:
                out[(nu, d)] = v
    return dict(sorted(out.items(), key=lambda kv: (kv[0][1], kv[0][0])))


def format_product(expansion: dict) -> str:
    terms = []
    for (nu, d), c in expansion.items():
        label = "s[" + ",".join(str(p) for p in nu if p) + "]"
        coeff = "" if c == 1 else f"{c} * "
        qpart = "" if d == 0 else ("q * " if d == 1 else f"q^{d} * ")
        terms.append(f"{coeff}{qpart}{label}")
    return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# toric Schur polynomials

def toric_schur_tableaux(nu, d: int, mu, box: Box, m: int) -> MultiPoly:
    """``sum_T x^T`` over toric tableaux of shape ``nu/d/mu`` with entries ``<= m``."""
    shape = cylindric_shape(nu, d, mu, box)
    out: dict[tuple, int] = {}
    if shape.is_toric:
        for t in enumerate_cylindric_tableaux(shape, m):
            key = t.weight(m) + (0,)
            out[key] = out.get(key, 0) + 1
    return MultiPoly(m, out)


def toric_schur_gw(nu, d: int, mu, box: Box) -> MultiPoly:
    """``sum_lam C_{lam mu}^{nu,d} s_lam(x_1..x_n)``."""
    total = MultiPoly.zero(box.n)
    for lam in box.partitions():
        c = gw_invariant(lam, mu, nu, d, box)
        if c:
            total = total + schur_poly(lam, box.n).scale(c)
    return total


def toric_schur(nu, d: int, mu, box: Box, m: int | None = None, check: bool = True) -> MultiPoly:
    """Toric Schur polynomial ``s_{nu/d/mu}(x_1..x_m)``.

    The tableau sum is returned; for ``m == n`` it is also compared with the
    Gromov-Witten expansion when ``check`` is set.
    """
    m = box.n if m is None else m
    if m < 1:
        raise ValueError("need at least one variable")
    via_tableaux = toric_schur_tableaux(nu, d, mu, box, m)
    if check and m == box.n:
        via_gw = toric_schur_gw(nu, d, mu, box)
        if via_gw != via_tableaux:
            raise InternalConsistencyError(
                f"toric Schur {nu}/{d}/{mu}: tableaux give {via_tableaux}, GW give {via_gw}")
    return via_tableaux


def coproduct(nu, box: Box, method: str = "giambelli") -> dict:
    """``mu -> {lam: QPoly}`` with ``sum_d q^d s_{nu/d/mu} = sum_lam c_lam s_lam``.

    ``method`` is ``giambelli`` (GW invariants), ``walker`` (partition
    functions) or ``tableau`` (toric tableaux).
    """
    out = {}
    for mu in box.partitions():
        if method == "giambelli":
            entry: dict[tuple, QPoly] = {}
            for lam in box.partitions():
                state = product_state(lam, mu, box)
                c = state.get(tuple(nu))
                if c:
                    entry[lam] = c
        elif method == "walker":
            entry = expand_in_schur(partition_function(nu, mu, box, VICIOUS), box.n)
        elif method == "tableau":
            poly = MultiPoly.zero(box.n)
            for d in range(max_degree(nu, mu, box) + 1):
                poly = poly + toric_schur_tableaux(nu, d, mu, box, box.n).mul_monomial(
                    (0,) * box.n, d)
            entry = expand_in_schur(poly, box.n)
        else:
            raise ValueError(f"unknown method {method!r}")
        entry = {lam: c for lam, c in entry.items() if c}
        if entry:
            out[tuple(mu)] = dict(sorted(entry.items()))
    return out


def coproduct_table(box: Box, method: str = "giambelli") -> dict:
    """``(nu, mu) -> {lam: QPoly}`` over all pairs with a nonzero entry."""
    table = {}
    for nu in box.partitions():
        for mu, entry in coproduct(nu, box, method).items():
            table[(tuple(nu), mu)] = entry
    return dict(sorted(table.items()))


# ---------------------------------------------------------------------------
# path counts

@dataclass
class PathCountCertificate:
    nu: tuple
    mu: tuple
    box: Box
    enumeration: int
    transfer_matrix: int
    kostka_sum: int
    hook_content_sum: Fraction
    osculating: int
    details: dict = field(default_factory=dict)

    @property
    def value(self) -> int:
        return self.enumeration

    @property
    def consistent(self) -> bool:
        hc = self.hook_content_sum
        return (hc.denominator == 1 and
                len({self.enumeration, self.transfer_matrix, self.kostka_sum,
                     int(hc), self.osculating}) == 1)

    def as_dict(self) -> dict:
        return {"nu": list(self.nu), "mu": list(self.mu),
                "box": {"n": self.box.n, "k": self.box.k},
                "enumeration": self.enumeration, "transfer_matrix": self.transfer_matrix,
                "kostka_sum": self.kostka_sum,
                "hook_content_sum": str(self.hook_content_sum),
                "osculating": self.osculating, "consistent": self.consistent}


def path_count(nu, mu, box: Box) -> PathCountCertificate:
    """Number of vicious configurations from ``mu`` to ``nu``, four ways plus the dual model."""
    nu, mu = tuple(nu), tuple(mu)
    n, N = box.n, box.N
    enumeration = sum(1 for _ in enumerate_configs(nu, mu, box, VICIOUS))

    # (sum_r H_r)^n at q = 1
    vec = {word_of_partition(mu, box): 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for w, a in vec.items():
            for r in range(N + 1):
                for v, c in yba_operator("H", r, N).image(w).items():
                    nxt[v] = nxt.get(v, 0) + a * int(c.evaluate(1))
        vec = nxt
    transfer = vec.get(word_of_partition(nu, box), 0)

    kostka = 0
    hook = Fraction(0)
    per_degree = {}
    for d in range(max_degree(nu, mu, box) + 1):
        shape = cylindric_shape(nu, d, mu, box)
        count = sum(1 for _ in enumerate_cylindric_tableaux(shape, n)) if shape.is_toric else 0
        kostka += count
        gw_part = Fraction(0)
        for lam in box.partitions():
            c = gw_invariant(lam, mu, nu, d, box)
            if c:
                gw_part += c * hook_content_eval(lam, n)
        hook += gw_part
        per_degree[d] = {"kostka": count, "hook_content": str(gw_part)}

    dual = box.transpose()
    osc = sum(1 for _ in enumerate_configs(conjugate(nu, box), conjugate(mu, box), dual, OSCULATING))
    return PathCountCertificate(nu, mu, box, enumeration, transfer, kostka, hook, osc,
                                {"per_degree": per_degree})


# ---------------------------------------------------------------------------
# sum identity

def toric_sum_identity(lam, r: int, box: Box) -> MultiPoly:
    """Residual of ``e_r(x^N) = (-1)^{nr} sum (-1)^{|lam|-|mu|} s_{lam'/d'/mu'} s_{mu/d/lam}``.

    Only square boxes are supported.  The sign ``(-1)^{nr}`` is trivial for
    even ``n``.
    """
    n, k, N = box.n, box.k, box.N
    if n != k:
        raise NotImplementedError("the sum identity is implemented for n = k only")
    if not 0 <= r <= n:
        raise ValueError(f"r must lie in 0..{n}")
    lam = tuple(lam)
    lhs = MultiPoly.zero(n)
    for key, c in elementary(r, n).raw_items():
        lhs = lhs + MultiPoly.monomial([e * N for e in key[:-1]], c)
    dual = box.transpose()
    lam_c = conjugate(lam, box)
    rhs = MultiPoly.zero(n)
    for mu in box.partitions():
        mu_c = conjugate(mu, box)
        sign = -1 if (size(lam) - size(mu)) % 2 else 1
        for d in range(r + 1):
            left = toric_schur_tableaux(lam_c, r - d, mu_c, dual, n)
            if not left:
                continue
            right = toric_schur_tableaux(mu, d, lam, box, n)
            if right:
                rhs = rhs + (left * right).scale(sign)
    if (n * r) % 2:
        rhs = -rhs
    return lhs - rhs
