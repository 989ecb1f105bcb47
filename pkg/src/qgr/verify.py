"""Verification suites shared by the command line and the test-suite."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .boxes import Box, cylindric_shape, partition_of_word, size, word_of_partition
from .rings import QPoly


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, **detail) -> bool:
        self.checks += 1
        if not ok:
            self.failures.append({k: _jsonable(v) for k, v in detail.items()})
        return ok

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "checks": self.checks,
                "failures": self.failures, "info": {k: _jsonable(v) for k, v in self.info.items()}}


def _jsonable(v):
    if isinstance(v, (int, float, str, bool)) or v is None:
        return v
    if isinstance(v, complex):
        return [v.real, v.imag]
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return str(v)


def boxes_up_to(max_N: int, min_N: int = 1, interior: bool = False) -> list[Box]:
    """All boxes with ``min_N <= N <= max_N``; ``interior`` drops ``n = 0`` and ``k = 0``."""
    out = []
    for N in range(min_N, max_N + 1):
        for n in range(N + 1):
            if interior and n in (0, N):
                continue
            out.append(Box(n, N - n))
    return out


# ---------------------------------------------------------------------------

def suite_ybe() -> SuiteResult:
    import sympy

    from .yang_baxter import r_determinant, rdblprime_kernel, verify_ybe, X, Y

    res = SuiteResult("ybe")
    for which in ("vicious", "osculating", "mixed"):
        m = verify_ybe(which)
        res.check(m.is_zero_matrix, identity=which, residual=str(m))
    det = r_determinant()
    res.check(sympy.simplify(det + Y ** 2 / X ** 2) == 0, quantity="det R", value=str(det))
    ker = rdblprime_kernel(-1)
    res.check(len(ker) == 3, quantity="dim ker R''(-1)", value=len(ker))
    res.info["det_R"] = str(det)
    res.info["kernel_dim"] = len(ker)
    return res


def strip_rule(mu, r: int, box: Box, kind: str, dual: bool = False) -> dict:
    """Cylindric Pieri prediction as ``word -> QPoly``.

    ``kind`` is ``horizontal`` or ``vertical``.  Without ``dual`` the strips
    ``nu/delta/mu`` are added with weight ``q^delta``; with ``dual`` the strips
    ``mu/delta/lam`` are removed with weight ``q^-delta``.
    """
    out = {}
    for other in box.partitions():
        for delta in (0, 1):
            if dual:
                shape = cylindric_shape(mu, delta, other, box)
            else:
                shape = cylindric_shape(other, delta, mu, box)
            if not shape.is_toric or shape.size != r:
                continue
            ok = shape.is_cyl_horizontal_strip if kind == "horizontal" else shape.is_cyl_vertical_strip
            if ok:
                w = word_of_partition(other, box)
                out[w] = out.get(w, QPoly()) + QPoly.q(-delta if dual else delta)
    return {w: c for w, c in out.items() if c}


def suite_pieri(max_N: int = 7, max_N_dual: int = 6) -> SuiteResult:
    from .yang_baxter import yba_operator

    res = SuiteResult("pieri")
    for box in boxes_up_to(max_N, interior=True):
        N = box.N
        for mu in box.partitions():
            w = word_of_partition(mu, box)
            for r in range(N + 1):
                for family, kind in (("H", "horizontal"), ("E", "vertical")):
                    got = yba_operator(family, r, N).image(w)
                    want = strip_rule(mu, r, box, kind)
                    res.check(got == want, box=str(box), mu=mu, r=r, family=family,
                              got={partition_of_word(k, box): str(v) for k, v in got.items()},
                              want={partition_of_word(k, box): str(v) for k, v in want.items()})
                    if N <= max_N_dual:
                        got = yba_operator(family + "star", r, N).image(w)
                        want = strip_rule(mu, r, box, kind, dual=True)
                        res.check(got == want, box=str(box), mu=mu, r=r, family=family + "star")
    return res


def suite_levelrank(max_N: int = 7) -> SuiteResult:
    from .yang_baxter import sector, theta, yba_operator

    res = SuiteResult("levelrank")
    for N in range(1, max_N + 1):
        H = [yba_operator("H", r, N) for r in range(N + 1)]
        E = [yba_operator("E", r, N) for r in range(N + 1)]
        words = list(range(1 << N))
        for r in range(N + 1):
            for s in range(N + 1):
                for name, a, b in (("HH", H[r], H[s]), ("EE", E[r], E[s]), ("HE", H[r], E[s])):
                    if name != "HE" and s <= r:
                        continue
                    ok = (a @ b).equals_on(b @ a, words)
                    res.check(ok, N=N, r=r, s=s, commutator=name)
            for w in words:
                lhs = E[r].image(w)
                rhs = {theta(v, N): c for v, c in H[r].image(theta(w, N)).items()}
                res.check(lhs == rhs, N=N, r=r, word=w, relation="theta H theta = E")
        for n in range(N + 1):
            k = N - n
            for w in sector(N, n):
                for r in range(k + 1, N + 1):
                    res.check(not H[r].image(w), N=N, n=n, r=r, relation="H_r = 0 for r > k")
                for r in range(n + 1, N + 1):
                    res.check(not E[r].image(w), N=N, n=n, r=r, relation="E_r = 0 for r > n")
    return res


def suite_functional(max_N: int = 6) -> SuiteResult:
    from .yang_baxter import functional_relation_residual, scalar_relation_coefficients

    res = SuiteResult("functional")
    for N in range(1, max_N + 1):
        report = functional_relation_residual(N)
        for m, bad in report.items():
            res.check(not bad, N=N, degree=m, nonzero=len(bad))
        for n in range(N + 1):
            box = Box(n, N - n)
            coeffs = scalar_relation_coefficients(box)
            for m, table in coeffs.items():
                if m == 0:
                    want = QPoly(1)
                elif m == N:
                    want = QPoly.q(1, (-1) ** n)
                else:
                    want = QPoly()
                ok = all(img == ({w: want} if want else {}) for w, img in table.items())
                res.check(ok, box=str(box), degree=m)
    return res


def suite_sumrule(max_N: int = 6) -> SuiteResult:
    from .cohomology import path_count

    res = SuiteResult("sumrule")
    for box in boxes_up_to(max_N):
        for nu in box.partitions():
            for mu in box.partitions():
                cert = path_count(nu, mu, box)
                res.check(cert.consistent, **cert.as_dict())
    return res


def suite_bethe(max_N: int = 8, tol: float = 1e-9, q_value: complex = 1.0) -> SuiteResult:
    from .bethe import biorthogonality_error, eigen_residual, norm_closed_form, norm_sq

    res = SuiteResult("bethe")
    samples = (0.3, 0.7, -0.2 + 0.4j)
    worst = 0.0
    worst_bi = 0.0
    for box in boxes_up_to(max_N):
        for lam in box.partitions():
            for family in ("H", "E"):
                for x in samples:
                    r = eigen_residual(lam, family, x, box, q_value)
                    worst = max(worst, r)
                    res.check(r < tol, box=str(box), lam=lam, family=family, x=x, residual=r)
            nrm = norm_sq(lam, box, q_value)
            scale = max(1.0, abs(nrm))
            res.check(abs(nrm.imag) < 1e-12 * scale
                      and abs(nrm.real - norm_closed_form(lam, box, q_value)) < tol * scale,
                      box=str(box), lam=lam, norm=nrm)
        err = biorthogonality_error(box, q_value)
        worst_bi = max(worst_bi, err)
        res.check(err < 1e-8, box=str(box), biorthogonality=err)
    b = Box(2, 2)
    for lam, want in (((0, 0), 8.0), ((2, 1), 4.0)):
        got = norm_sq(lam, b)
        res.check(abs(got - want) < tol, lam=lam, norm=got, expected=want)
    res.info.update(max_eigen_residual=worst, max_biorthogonality_error=worst_bi)
    return res


def suite_vi(boxes=((2, 2), (2, 3), (3, 3)), tol: float = 1e-6) -> SuiteResult:
    from .bethe import idempotent_structure_constants, unit_reconstruction_error, vi_gw
    from .cohomology import gw_invariant, product_state

    res = SuiteResult("vi")
    for n, k in boxes:
        box = Box(n, k)
        parts = box.partitions()
        for lam in parts:
            for mu in parts:
                for nu in parts:
                    excess = size(lam) + size(mu) - size(nu)
                    exact = gw_invariant(lam, mu, nu, excess // box.N, box) if excess % box.N == 0 else 0
                    got = vi_gw(lam, mu, nu, box)
                    res.check(abs(got - exact) < tol, box=str(box), lam=lam, mu=mu, nu=nu,
                              exact=exact, numeric=got)
        consts = idempotent_structure_constants(box)
        for lam in parts:
            for mu in parts:
                state = product_state(lam, mu, box)
                for nu in parts:
                    exact = state.get(nu, QPoly()).evaluate(1)
                    got = consts[(lam, mu, nu)]
                    res.check(abs(got - exact) < tol, box=str(box), lam=lam, mu=mu, nu=nu,
                              exact=int(exact), idempotent=got)
        res.check(unit_reconstruction_error(box) < 1e-9, box=str(box), relation="unit = sum of idempotents")
    return res


def suite_demazure(boxes=((2, 2), (2, 3))) -> SuiteResult:
    from .cohomology import coproduct_table
    from .demazure import demazure_table, nilhecke_relations_residual

    res = SuiteResult("demazure")
    report = nilhecke_relations_residual(4)
    for rel, bad in report.items():
        res.check(not bad, relation=rel, failures=len(bad))
    for n, k in boxes:
        box = Box(n, k)
        res.check(demazure_table(box) == coproduct_table(box, "giambelli"), box=str(box))
    return res


def suite_toric_identity(boxes=(1, 2, 3)) -> SuiteResult:
    from .cohomology import toric_sum_identity

    res = SuiteResult("toric-identity")
    for n in boxes:
        box = Box(n, n)
        for lam in box.partitions():
            for r in range(0, n + 1):
                residual = toric_sum_identity(lam, r, box)
                res.check(not residual, box=str(box), lam=lam, r=r, residual=str(residual))
    return res


def suite_table(boxes=((2, 2), (2, 3))) -> SuiteResult:
    from .cohomology import coproduct_table
    from .demazure import demazure_table

    res = SuiteResult("table")
    for n, k in boxes:
        box = Box(n, k)
        ref = coproduct_table(box, "giambelli")
        res.check(coproduct_table(box, "walker") == ref, box=str(box), method="walker")
        res.check(demazure_table(box) == ref, box=str(box), method="demazure")
        res.check(coproduct_table(box, "tableau") == ref, box=str(box), method="tableau")
    return res


def suite_bijection(max_N: int = 6, random_box: Box = Box(4, 5), samples: int = 1000,
                    seed: int = 0) -> SuiteResult:
    from .walkers import (MODELS, config_to_tableau, enumerate_configs, random_config,
                          tableau_to_config)

    res = SuiteResult("bijection")

    def one(c):
        t = config_to_tableau(c)
        back = tableau_to_config(t, c.model)
        res.check(back == c and t.weight(len(c.rows)) == c.weights,
                  config=c.to_json())

    for box in boxes_up_to(max_N):
        for nu in box.partitions():
            for mu in box.partitions():
                for model in MODELS:
                    for c in enumerate_configs(nu, mu, box, model):
                        one(c)
    rng = random.Random(seed)
    for i in range(samples):
        one(random_config(random_box, rng, MODELS[i % 2]))
    return res


def suite_double_expansion(boxes=((2, 2), (2, 3), (3, 3)), max_d: int = 2) -> SuiteResult:
    from .cohomology import toric_schur_gw, toric_schur_tableaux

    res = SuiteResult("double-expansion")
    for n, k in boxes:
        box = Box(n, k)
        for nu in box.partitions():
            for mu in box.partitions():
                for d in range(max_d + 1):
                    a = toric_schur_tableaux(nu, d, mu, box, box.n)
                    b = toric_schur_gw(nu, d, mu, box)
                    res.check(a == b, box=str(box), nu=nu, mu=mu, d=d)
    return res


SUITES: dict[str, Callable[[], SuiteResult]] = {
    "ybe": suite_ybe,
    "pieri": suite_pieri,
    "levelrank": suite_levelrank,
    "functional": suite_functional,
    "sumrule": suite_sumrule,
    "bethe": suite_bethe,
    "vi": suite_vi,
    "demazure": suite_demazure,
    "toric-identity": suite_toric_identity,
    "table": suite_table,
    "bijection": suite_bijection,
    "double-expansion": suite_double_expansion,
}
