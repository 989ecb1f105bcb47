from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qgr.boxes import Box, compositions, quantum_kostka
from qgr.rings import MultiPoly, QPoly
from qgr.symfunc import (NotSymmetricError, expand_in_schur, hook_content_eval, monomial_sym,
                         schur_poly)

from oracles import brute_force_schur_eval

x1, x2 = MultiPoly.var(0, 2), MultiPoly.var(1, 2)


class TestQPoly:
    def test_product(self):
        assert QPoly({0: 1, 1: 1}) * QPoly({0: 1, 1: -1}) == QPoly({0: 1, 2: -1})

    def test_coeff(self):
        assert QPoly({0: 1, 1: 3}).coeff(1) == 3

    def test_laurent_unit(self):
        assert QPoly.q(-1) * QPoly.q(1) == QPoly(1)

    @given(st.dictionaries(st.integers(-3, 3), st.integers(-5, 5)),
           st.dictionaries(st.integers(-3, 3), st.integers(-5, 5)))
    def test_ring_axioms(self, a, b):
        a, b = QPoly(a), QPoly(b)
        assert a * b == b * a
        assert (a + b) - b == a
        assert (a * (a + b)).evaluate(2) == a.evaluate(2) * (a + b).evaluate(2)


class TestMultiPoly:
    def test_square(self):
        assert (x1 + x2) ** 2 == x1 * x1 + (x1 * x2).scale(2) + x2 * x2

    def test_eval(self):
        assert (x1 ** 2 * x2 ** 2).evaluate((1, 1)) == 1

    def test_laurent_cancellation(self):
        assert (x1 ** 2 * x2).mul_monomial((-2, -1)) == MultiPoly.one(2)

    def test_canonical_text(self):
        assert str((x1 + x2) ** 2) == "x1^2 + 2*x1*x2 + x2^2"

    @settings(max_examples=50)
    @given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-4, 4),
                           max_size=5))
    def test_evaluation_is_a_homomorphism(self, terms):
        p = MultiPoly.zero(2)
        for exps, c in terms.items():
            p = p + MultiPoly.monomial(exps, c)
        q = p * (x1 + x2) - x1
        pt = (Fraction(2, 3), Fraction(-5, 7))
        assert q.evaluate(pt) == p.evaluate(pt) * (pt[0] + pt[1]) - pt[0]


class TestSchur:
    def test_examples(self):
        assert schur_poly((2, 0), 2) == x1 ** 2 + x1 * x2 + x2 ** 2
        assert schur_poly((), 3) == MultiPoly.one(3)
        assert schur_poly((2, 1), 2) == x1 ** 2 * x2 + x1 * x2 ** 2

    def test_monomials(self):
        assert monomial_sym((1, 1), 2) == x1 * x2
        assert monomial_sym((2,), 2) == x1 ** 2 + x2 ** 2
        assert monomial_sym((2, 1), 2) == x1 ** 2 * x2 + x1 * x2 ** 2

    def test_expansion_examples(self):
        assert expand_in_schur(x1 ** 2 + x1 * x2 + x2 ** 2, 2) == {(2, 0): QPoly(1)}
        assert expand_in_schur(monomial_sym((2,), 2), 2) == {(2, 0): QPoly(1), (1, 1): QPoly(-1)}
        s1 = schur_poly((1,), 2)
        assert expand_in_schur(s1 * s1, 2) == {(2, 0): QPoly(1), (1, 1): QPoly(1)}

    def test_non_symmetric_input_reports_index(self):
        with pytest.raises(NotSymmetricError) as info:
            expand_in_schur(x1 ** 2, 2)
        assert info.value.index == 1

    @pytest.mark.parametrize("lam", [(a, b, c) for a in range(4) for b in range(a + 1)
                                     for c in range(b + 1)])
    def test_expand_is_inverse(self, lam):
        assert expand_in_schur(schur_poly(lam, 3), 3) == {lam: QPoly(1)}

    @pytest.mark.parametrize("lam", [(a, b) for a in range(5) for b in range(a + 1)])
    def test_hook_content_matches_evaluation(self, lam):
        for n in (2, 3, 4):
            assert hook_content_eval(lam, n) == schur_poly(lam, n).evaluate((1,) * n)

    def test_hook_content_examples(self):
        assert hook_content_eval((2, 1), 2) == 2
        assert hook_content_eval((), 5) == 1
        assert hook_content_eval((2, 2), 2) == 1

    @pytest.mark.parametrize("lam", [(2, 1), (3, 1), (2, 2, 1), (4, 2)])
    def test_kostka_consistency(self, lam):
        m = 3
        n = len(lam)
        box = Box(max(n, m), max(lam))
        padded = tuple(lam) + (0,) * (box.n - n)
        total = MultiPoly.zero(m)
        for alpha in compositions(sum(lam), m):
            k = quantum_kostka(padded, 0, (0,) * box.n, alpha, box)
            if k:
                total = total + MultiPoly.monomial(alpha, k)
        assert total == schur_poly(lam, m)

    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.integers(0, 3), min_size=3, max_size=3),
           st.lists(st.integers(-3, 3), min_size=3, max_size=3))
    def test_against_tableau_sum(self, lam, point):
        lam = tuple(sorted(lam, reverse=True))
        assert schur_poly(lam, 3).evaluate(point) == brute_force_schur_eval(lam, point)
