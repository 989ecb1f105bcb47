"""Bethe roots and eigenvectors of the row transfer matrices (floating point)."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .boxes import Box, word_of_partition
from .yang_baxter import yba_operator

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class BetheRoots:
    lam: tuple
    box: Box
    q_value: complex
    roots: tuple

    def array(self) -> np.ndarray:
        return np.array(self.roots, dtype=complex)


def bethe_roots(lam: Sequence[int], box: Box, q_value: complex = 1.0) -> BetheRoots:
    """``y_j = q^{1/N} exp(2 pi i (ell_j - (n+1)/2) / N)`` with ``ell_j = lam_{n+1-j} + j``."""
    if q_value == 0:
        raise ValueError("q must be nonzero")
    n, N = box.n, box.N
    qroot = complex(q_value) ** (1.0 / N)
    roots = []
    for j in range(1, n + 1):
        ell = lam[n - j] + j
        roots.append(qroot * cmath.exp(2j * math.pi * (ell - (n + 1) / 2) / N))
    return BetheRoots(tuple(lam), box, complex(q_value), tuple(roots))


def schur_numeric(mu: Sequence[int], ys: Sequence[complex]) -> complex:
    """Bialternant ``det(y_i^{mu_j + n - j}) / det(y_i^{n - j})``."""
    n = len(ys)
    if n == 0:
        return 1.0 + 0j
    ys = np.asarray(ys, dtype=complex)
    mu = list(mu) + [0] * (n - len(mu))
    num = np.array([[y ** (mu[j] + n - 1 - j) for j in range(n)] for y in ys])
    den = np.array([[y ** (n - 1 - j) for j in range(n)] for y in ys])
    return complex(np.linalg.det(num) / np.linalg.det(den))


def bethe_vector(lam, box: Box, q_value: complex = 1.0) -> np.ndarray:
    """Amplitudes ``s_mu(y^{-1})`` in the order of ``box.partitions()``."""
    ys = bethe_roots(lam, box, q_value).array()
    return np.array([schur_numeric(mu, 1 / ys) for mu in box.partitions()])


def norm_sq(lam, box: Box, q_value: complex = 1.0) -> complex:
    ys = bethe_roots(lam, box, q_value).array()
    return sum(schur_numeric(mu, ys) * schur_numeric(mu, 1 / ys) for mu in box.partitions())


def norm_closed_form(lam, box: Box, q_value: complex = 1.0) -> float:
    """``N^n / prod_{i<j} |y_i - y_j|^2``."""
    ys = bethe_roots(lam, box, q_value).array()
    n = len(ys)
    denom = 1.0
    for i in range(n):
        for j in range(i + 1, n):
            denom *= abs(ys[i] - ys[j]) ** 2
    return box.N ** n / denom


def norm_printed_form(lam, box: Box) -> float:
    """The sine-product expression ``2^{n(1-n)/2} k N^k / prod sin^2(pi(lam_i - lam_j + i - j)/N)``.

    Returned for diagnostics only; it may be infinite.
    """
    n, k, N = box.n, box.k, box.N
    denom = 1.0
    for i in range(n):
        for j in range(i + 1, n):
            denom *= math.sin(math.pi * (lam[i] - lam[j] + i - j) / N) ** 2
    num = 2.0 ** (n * (1 - n) / 2) * k * N ** k
    return math.inf if abs(denom) < 1e-300 else num / denom


def dual_bethe_vector(lam, box: Box, q_value: complex = 1.0) -> np.ndarray:
    ys = bethe_roots(lam, box, q_value).array()
    nrm = norm_sq(lam, box, q_value)
    return np.array([schur_numeric(mu, ys) / nrm for mu in box.partitions()])


@lru_cache(maxsize=None)
def _dense(family: str, r: int, box: Box, q_value: complex) -> np.ndarray:
    parts = box.partitions()
    words = [word_of_partition(p, box) for p in parts]
    index = {w: i for i, w in enumerate(words)}
    mat = np.zeros((len(words), len(words)), dtype=complex)
    op = yba_operator(family, r, box.N)
    for j, w in enumerate(words):
        for v, c in op.image(w).items():
            mat[index[v], j] += complex(c.evaluate(complex(q_value)))
    mat.setflags(write=False)
    return mat


def dense_matrix(family: str, r: int, box: Box, q_value: complex = 1.0) -> np.ndarray:
    """Matrix of a row-operator coefficient on ``V_n`` in the partition basis."""
    return _dense(family, r, box, complex(q_value))


def transfer_matrix(family: str, x: complex, box: Box, q_value: complex = 1.0) -> np.ndarray:
    return sum(x ** r * dense_matrix(family, r, box, q_value) for r in range(box.N + 1))


def eigenvalue(family: str, x: complex, roots: BetheRoots) -> complex:
    ys = roots.array()
    n, N = roots.box.n, roots.box.N
    if family == "E":
        return complex(np.prod(1 + x * ys))
    if family == "H":
        denom = np.prod(1 - x * ys)
        if abs(denom) < 1e-12:
            raise ZeroDivisionError(f"x = {x} hits the reciprocal of a Bethe root")
        return complex((1 + (-1) ** n * roots.q_value * x ** N) / denom)
    raise ValueError(f"unknown family {family!r}")


def eigen_residual(lam, family: str, x: complex, box: Box, q_value: complex = 1.0) -> float:
    """``|Op(x) e_lam - Lambda(x) e_lam|_2``."""
    roots = bethe_roots(lam, box, q_value)
    vec = bethe_vector(lam, box, q_value)
    lhs = transfer_matrix(family, x, box, q_value) @ vec
    return float(np.linalg.norm(lhs - eigenvalue(family, x, roots) * vec))


def bethe_basis(box: Box, q_value: complex = 1.0) -> tuple[np.ndarray, np.ndarray]:
    """Columns ``e_lam`` and rows ``e*_lam``."""
    parts = box.partitions()
    primal = np.column_stack([bethe_vector(l, box, q_value) for l in parts])
    dual = np.vstack([dual_bethe_vector(l, box, q_value) for l in parts])
    return primal, dual


def biorthogonality_error(box: Box, q_value: complex = 1.0) -> float:
    primal, dual = bethe_basis(box, q_value)
    return float(np.max(np.abs(dual @ primal - np.eye(primal.shape[1]))))


@lru_cache(maxsize=None)
def schur_tables(box: Box, q_value: complex = 1.0) -> tuple:
    """Arrays ``S[alpha, mu] = s_mu(y(alpha))``, ``Sinv[alpha, mu] = s_mu(y(alpha)^{-1})``
    and the norms ``|e_alpha|^2``, rows and columns in ``box.partitions()`` order."""
    parts = box.partitions()
    S = np.empty((len(parts), len(parts)), dtype=complex)
    Sinv = np.empty_like(S)
    for a, alpha in enumerate(parts):
        ys = bethe_roots(alpha, box, q_value).array()
        for m, mu in enumerate(parts):
            S[a, m] = schur_numeric(mu, ys)
            Sinv[a, m] = schur_numeric(mu, 1 / ys)
    norms = (S * Sinv).sum(axis=1)
    for arr in (S, Sinv, norms):
        arr.setflags(write=False)
    return S, Sinv, norms


def vi_gw(lam, mu, nu, box: Box) -> complex:
    """``sum_alpha s_lam(y) s_mu(y) s_nu(y^{-1}) / |e_alpha|^2`` at ``q = 1``."""
    parts = box.partitions()
    S, Sinv, norms = schur_tables(box)
    i, j, l = parts.index(tuple(lam)), parts.index(tuple(mu)), parts.index(tuple(nu))
    return complex(np.sum(S[:, i] * S[:, j] * Sinv[:, l] / norms))


def idempotent_coordinates(box: Box) -> np.ndarray:
    """Coefficients ``a[alpha, lam]`` with ``|lam> = sum_alpha a[alpha, lam] e^_alpha``.

    ``e^_alpha = e_alpha / |e_alpha|^2``; found by solving a linear system.
    """
    parts = box.partitions()
    primal, _ = bethe_basis(box)
    norms = np.array([norm_sq(a, box) for a in parts])
    normalised = primal / norms
    return np.linalg.solve(normalised, np.eye(len(parts)))


def idempotent_structure_constants(box: Box) -> dict:
    """``(lam, mu, nu) -> coefficient of |nu>`` in ``|lam> * |mu>`` transported to the idempotents."""
    parts = box.partitions()
    primal, _ = bethe_basis(box)
    norms = np.array([norm_sq(a, box) for a in parts])
    normalised = primal / norms
    coords = idempotent_coordinates(box)
    out = {}
    for i, lam in enumerate(parts):
        for j, mu in enumerate(parts):
            vec = normalised @ (coords[:, i] * coords[:, j])
            for l, nu in enumerate(parts):
                out[(lam, mu, nu)] = complex(vec[l])
    return out


def unit_reconstruction_error(box: Box) -> float:
    """``| |empty> - sum_alpha e^_alpha |``."""
    parts = box.partitions()
    primal, _ = bethe_basis(box)
    norms = np.array([norm_sq(a, box) for a in parts])
    total = (primal / norms).sum(axis=1)
    target = np.zeros(len(parts))
    target[0] = 1.0
    return float(np.max(np.abs(total - target)))
