import json
import random

import pytest

from qgr.boxes import Box, compositions, parse_word, quantum_kostka, word_str
from qgr.rings import MultiPoly
from qgr.walkers import (OSCULATING, VICIOUS, column_sums, column_theta, config_to_tableau,
                         config_weight, d_min, enumerate_configs, enumerate_row_transitions,
                         is_non_intersecting, partition_function, random_config, render_ascii,
                         tableau_to_config)

B22 = Box(2, 2)


def test_row_transitions_from_empty():
    ts = enumerate_row_transitions(parse_word("1100"), 4, VICIOUS)
    got = [(word_str(t.word_out, 4), t.weight_degree, t.wrapped) for t in ts]
    assert sorted(got) == [("1001", 2, 0), ("1010", 1, 0), ("1100", 0, 0)]


def test_row_transition_wraps_from_full():
    ts = enumerate_row_transitions(parse_word("0011"), 4, VICIOUS)
    wraps = [(word_str(t.word_out, 4), t.weight_degree) for t in ts if t.wrapped]
    assert ("1010", 1) in wraps


def test_transitions_sorted_by_output_word():
    ts = enumerate_row_transitions(parse_word("0101"), 4, VICIOUS)
    outs = [word_str(t.word_out, 4) for t in ts]
    assert outs == sorted(outs)


class TestConfigs:
    def test_two_configs_for_10_10(self):
        cs = list(enumerate_configs((1, 0), (1, 0), B22))
        assert sorted((c.degree, c.weights) for c in cs) == [(0, (0, 0)), (1, (2, 2))]

    def test_single_straight_config(self):
        cs = list(enumerate_configs((0, 0), (0, 0), B22))
        assert len(cs) == 1 and cs[0].weights == (0, 0)
        assert config_weight(cs[0]) == MultiPoly.one(2)

    def test_wrapped_config_weight(self):
        (c,) = enumerate_configs((1, 0), (1, 0), B22, d_filter=1)
        assert config_weight(c) == MultiPoly.monomial((2, 2), 1, 1)

    def test_json_form(self):
        (c,) = enumerate_configs((1, 0), (1, 0), B22, d_filter=1)
        doc = json.loads(c.dumps())
        assert set(doc) == {"model", "box", "mu", "nu", "d", "rows"}
        assert doc["d"] == 1 and doc["model"] == VICIOUS
        assert render_ascii(c)


class TestPartitionFunction:
    def test_examples(self):
        expected = MultiPoly.one(2) + MultiPoly.monomial((2, 2), 1, 1)
        assert partition_function((1, 0), (1, 0), B22) == expected
        assert partition_function((0, 0), (0, 0), B22) == MultiPoly.one(2)
        assert partition_function((1, 0), (1, 0), B22.transpose(), OSCULATING) == expected

    @pytest.mark.parametrize("box", [Box(2, 2), Box(2, 3), Box(3, 3)], ids=str)
    def test_coefficients_are_quantum_kostka(self, box):
        n = box.n
        for nu in box.partitions():
            for mu in box.partitions():
                Z = partition_function(nu, mu, box)
                for d in range(3):
                    part = Z.q_part(d)
                    total = sum(nu) + d * box.N - sum(mu)
                    if total < 0:
                        assert not part
                        continue
                    for alpha in compositions(total, n):
                        want = quantum_kostka(nu, d, mu, alpha, box)
                        assert part.coefficient(alpha).constant() == want

    @pytest.mark.parametrize("box", [Box(1, 3), Box(2, 3), Box(3, 2)], ids=str)
    def test_q_degree_bounds(self, box):
        for nu in box.partitions():
            for mu in box.partitions():
                assert max(partition_function(nu, mu, box).q_degrees(), default=0) <= box.n
                osc = partition_function(nu, mu, box, OSCULATING)
                assert max(osc.q_degrees(), default=0) <= box.k


class TestTheta:
    def test_equal_ends(self):
        for d in range(3):
            assert column_theta((2, 1), (2, 1), d, B22) == (d,) * 4

    def test_corrected_example(self):
        assert column_theta((1, 0), (0, 0), 0, B22) == (0, 1, 0, 0)
        assert d_min((1, 0), (0, 0), B22) == 0

    @pytest.mark.parametrize("model", [VICIOUS, OSCULATING])
    def test_column_sums_match_theta(self, model):
        for nu in B22.partitions():
            for mu in B22.partitions():
                for c in enumerate_configs(nu, mu, B22, model):
                    if model == VICIOUS:
                        assert column_sums(c) == column_theta(nu, mu, c.degree, B22)
                    assert is_non_intersecting(c)


class TestBijection:
    def test_wrapped_example(self):
        (c,) = enumerate_configs((1, 0), (1, 0), B22, d_filter=1)
        t = config_to_tableau(c)
        assert t.shape.outer == (1, 0) and t.shape.d == 1 and t.shape.inner == (1, 0)
        assert t.weight(2) == (2, 2)
        assert tableau_to_config(t) == c

    def test_empty_config(self):
        (c,) = enumerate_configs((0, 0), (0, 0), B22)
        t = config_to_tableau(c)
        assert t.entries == ()
        assert tableau_to_config(t) == c

    @pytest.mark.parametrize("seed", range(20))
    @pytest.mark.parametrize("model", [VICIOUS, OSCULATING])
    def test_random_round_trip(self, seed, model):
        c = random_config(Box(3, 4), random.Random(seed), model)
        t = config_to_tableau(c)
        assert tableau_to_config(t, model) == c
        assert t.weight(len(c.rows)) == c.weights
