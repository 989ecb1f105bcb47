"""Vicious and osculating walkers on the cylinder.

A configuration is a chain of row transitions.  Row ``i`` (counted from the
bottom word ``w(mu)``) carries the spectral variable ``x_i``; its fired
positions are the horizontal edges crossed by the paths in that row, position
``N`` being the edge that wraps around the cylinder.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .boxes import (Box, CylindricTableau, conjugate, cylindric_shape, loop_to_partition,
                    CylindricLoop, partition_of_word, prefix_ones, word_of_partition, word_str)
from .rings import MultiPoly
from .yang_baxter import hop_chains, theta

VICIOUS = "vicious"
OSCULATING = "osculating"
MODELS = (VICIOUS, OSCULATING)


@dataclass(frozen=True)
class RowTransition:
    word_in: int
    word_out: int
    fired: tuple
    N: int

    @property
    def weight_degree(self) -> int:
        return len(self.fired)

    @property
    def wrapped(self) -> int:
        return int(self.N in self.fired)

    def to_json(self) -> dict:
        return {"in": word_str(self.word_in, self.N), "out": word_str(self.word_out, self.N),
                "fired": list(self.fired)}


@lru_cache(maxsize=None)
def _transitions(word: int, N: int, model: str) -> tuple:
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}")
    found = []
    top = 1 << (N - 1) if N else 0
    if model == VICIOUS:
        for fired, out in hop_chains(word, N, True):
            found.append(RowTransition(word, out, fired, N))
        if N and not word & 1:
            for fired, out in hop_chains(word | 1, N, True):
                if out & top:
                    found.append(RowTransition(word, out ^ top, fired + (N,), N))
    else:
        for fired, out in hop_chains(word, N, False):
            found.append(RowTransition(word, out, fired, N))
        if N and word & top:
            for fired, out in hop_chains(word ^ top, N, False):
                if not out & 1:
                    found.append(RowTransition(word, out | 1, fired + (N,), N))
    found.sort(key=lambda t: (word_str(t.word_out, N), t.fired))
    return tuple(found)


def enumerate_row_transitions(word: int, N: int, model: str = VICIOUS) -> tuple:
    """One transition per non-annihilated monomial of ``sum_r H_r`` (or ``E_r``)."""
    return _transitions(word, N, model)


@dataclass(frozen=True)
class LatticeConfig:
    model: str
    box: Box
    bottom: int
    rows: tuple

    @property
    def degree(self) -> int:
        return sum(r.wrapped for r in self.rows)

    @property
    def weights(self) -> tuple:
        return tuple(r.weight_degree for r in self.rows)

    @property
    def mu(self) -> tuple:
        return partition_of_word(self.bottom, self.box)

    @property
    def nu(self) -> tuple:
        return partition_of_word(self.words()[-1], self.box)

    def words(self) -> list[int]:
        return [self.bottom] + [r.word_out for r in self.rows]

    def to_json(self) -> dict:
        return {"model": self.model, "box": {"n": self.box.n, "k": self.box.k},
                "mu": list(self.mu), "nu": list(self.nu), "d": self.degree,
                "rows": [r.to_json() for r in self.rows]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def n_rows(box: Box, model: str) -> int:
    return box.n if model == VICIOUS else box.k


def enumerate_configs(nu: Sequence[int], mu: Sequence[int], box: Box, model: str = VICIOUS,
                      d_filter: int | None = None) -> Iterator[LatticeConfig]:
    """All transition chains from ``w(mu)`` to ``w(nu)``, depth first."""
    N = box.N
    start, target = word_of_partition(mu, box), word_of_partition(nu, box)
    depth = n_rows(box, model)

    def rec(word, rows):
        if len(rows) == depth:
            if word == target:
                yield tuple(rows)
            return
        for t in _transitions(word, N, model):
            rows.append(t)
            yield from rec(t.word_out, rows)
            rows.pop()

    if depth == 0:
        if start == target and d_filter in (None, 0):
            yield LatticeConfig(model, box, start, ())
        return
    for rows in rec(start, []):
        c = LatticeConfig(model, box, start, rows)
        if d_filter is None or c.degree == d_filter:
            yield c


def config_weight(c: LatticeConfig, nvars: int | None = None) -> MultiPoly:
    """``q^d prod_i x_i^{deg_i}``."""
    nvars = len(c.rows) if nvars is None else nvars
    exps = list(c.weights) + [0] * (nvars - len(c.rows))
    return MultiPoly.monomial(exps, 1, c.degree)


def partition_function(nu: Sequence[int], mu: Sequence[int], box: Box,
                       model: str = VICIOUS) -> MultiPoly:
    """Sum of configuration weights, by dynamic programming over the row words."""
    N = box.N
    m = n_rows(box, model)
    layer = {word_of_partition(mu, box): MultiPoly.one(m)}
    for i in range(m):
        nxt: dict[int, MultiPoly] = {}
        for w, amp in layer.items():
            for t in _transitions(w, N, model):
                exps = [0] * m
                exps[i] = t.weight_degree
                term = amp.mul_monomial(exps, t.wrapped)
                nxt[t.word_out] = nxt[t.word_out] + term if t.word_out in nxt else term
        layer = nxt
    return layer.get(word_of_partition(nu, box), MultiPoly.zero(m))


def column_theta(nu: Sequence[int], mu: Sequence[int], d: int, box: Box) -> tuple:
    """Expected number of horizontal edges in each lattice column ``1..N``."""
    return tuple(d + prefix_ones(mu, i, box) - prefix_ones(nu, i, box)
                 for i in range(1, box.N + 1))


def d_min(nu: Sequence[int], mu: Sequence[int], box: Box) -> int:
    return max((prefix_ones(nu, i, box) - prefix_ones(mu, i, box)
                for i in range(1, box.N + 1)), default=0)


def column_sums(c: LatticeConfig) -> tuple:
    sums = [0] * c.box.N
    for r in c.rows:
        for p in r.fired:
            sums[p - 1] += 1
    return tuple(sums)


# ---------------------------------------------------------------------------
# vertices

def vertices(c: LatticeConfig) -> list[list[tuple]]:
    """Per row and site, the edge occupations ``(left, bottom, right, top)``.

    The left edge of site 1 is the wrapping edge at position ``N``.
    """
    N = c.box.N
    out = []
    for r in c.rows:
        fired = set(r.fired)
        row = []
        for p in range(1, N + 1):
            left = int((p - 1 if p > 1 else N) in fired)
            right = int(p in fired)
            bottom = r.word_in >> (p - 1) & 1
            top = r.word_out >> (p - 1) & 1
            row.append((left, bottom, right, top))
        out.append(row)
    return out


def is_non_intersecting(c: LatticeConfig) -> bool:
    """Every vertex conserves paths and no vertex is fed from the left and from below.

    Osculating configurations are checked on their level-rank image, where
    touching points become ordinary vicious vertices.
    """
    if c.model == OSCULATING:
        c = _to_vicious(c)
    for row in vertices(c):
        for left, bottom, right, top in row:
            if left + bottom != right + top or (left and bottom):
                return False
    return True


# ---------------------------------------------------------------------------
# bijection with toric tableaux

def _to_vicious(c: LatticeConfig) -> LatticeConfig:
    """Level-rank image of an osculating configuration."""
    N = c.box.N
    rows = []
    for r in c.rows:
        fired = sorted((N - p) if p < N else N for p in r.fired)
        rows.append(RowTransition(theta(r.word_in, N), theta(r.word_out, N), tuple(fired), N))
    return LatticeConfig(VICIOUS, c.box.transpose(), theta(c.bottom, N), tuple(rows))


def _from_vicious(c: LatticeConfig) -> LatticeConfig:
    N = c.box.N
    rows = []
    for r in c.rows:
        fired = sorted((N - p) if p < N else N for p in r.fired)
        rows.append(RowTransition(theta(r.word_in, N), theta(r.word_out, N), tuple(fired), N))
    return LatticeConfig(OSCULATING, c.box.transpose(), theta(c.bottom, N), tuple(rows))


def config_to_tableau(c: LatticeConfig) -> CylindricTableau:
    """Cells added by row ``i`` receive the entry ``i``.

    Osculating configurations are first mapped to vicious ones in the
    transposed box, so their tableaux have shape ``nu'/d/mu'``.
    """
    if c.model == OSCULATING:
        c = _to_vicious(c)
    box = c.box
    words = c.words()
    shifts = [0]
    for r in c.rows:
        shifts.append(shifts[-1] + r.wrapped)
    loops = [CylindricLoop(partition_of_word(w, box), s, box) for w, s in zip(words, shifts)]
    shape = cylindric_shape(loops[-1].base, shifts[-1], loops[0].base, box)
    entries = {}
    for i in range(1, len(loops)):
        lo, hi = loops[i - 1], loops[i]
        for row in range(1, box.n + 1):
            for col in range(lo.row(row) + 1, hi.row(row) + 1):
                entries[(row, col)] = i
    cells = shape.cells
    if set(entries) != set(cells):
        raise ValueError("configuration does not tile its cylindric shape")
    return CylindricTableau(shape, tuple((cell, entries[cell]) for cell in cells))


def tableau_to_config(t: CylindricTableau, model: str = VICIOUS) -> LatticeConfig:
    """Inverse of ``config_to_tableau``; raises ``ValueError`` if no configuration exists.

    For the osculating model the tableau lives in the transposed box.
    """
    shape = t.shape
    box = shape.box
    n_steps = box.n
    filling = t.as_dict()
    if max(filling.values(), default=0) > n_steps:
        raise ValueError("tableau has more distinct entries than lattice rows")
    inner = [CylindricLoop(shape.inner, 0, box).row(r) for r in range(1, box.n + 1)]
    rows = []
    prev_word = word_of_partition(shape.inner, box)
    prev_shift = 0
    for i in range(1, n_steps + 1):
        loop_rows = [inner[r - 1] + sum(1 for (rr, _), v in filling.items() if rr == r and v <= i)
                     for r in range(1, box.n + 1)]
        lam, shift = loop_to_partition(loop_rows, box)
        word = word_of_partition(lam, box)
        weight = sum(1 for v in filling.values() if v == i)
        wrap = shift - prev_shift
        match = [tr for tr in _transitions(prev_word, box.N, VICIOUS)
                 if tr.word_out == word and tr.wrapped == wrap and tr.weight_degree == weight]
        if len(match) != 1:
            raise ValueError(f"no unique row transition realises entry {i} of the tableau")
        rows.append(match[0])
        prev_word, prev_shift = word, shift
    c = LatticeConfig(VICIOUS, box, word_of_partition(shape.inner, box), tuple(rows))
    if model == OSCULATING:
        c = _from_vicious(c)
    return c


def random_config(box: Box, rng: random.Random, model: str = VICIOUS) -> LatticeConfig:
    """Uniform choice of the start word, then a uniform transition in every row."""
    lam = rng.choice(box.partitions())
    word = start = word_of_partition(lam, box)
    rows = []
    for _ in range(n_rows(box, model)):
        t = rng.choice(_transitions(word, box.N, model))
        rows.append(t)
        word = t.word_out
    return LatticeConfig(model, box, start, tuple(rows))


def render_ascii(c: LatticeConfig) -> str:
    """Top row first; ``o`` marks an occupied site, ``=`` a horizontal edge to the right."""
    N = c.box.N
    lines = []

    def sites(word):
        return " ".join("o" if word >> i & 1 else "." for i in range(N))

    for i in range(len(c.rows) - 1, -1, -1):
        r = c.rows[i]
        lines.append(f"    {sites(r.word_out)}")
        marks = [" "] * (2 * N)
        for p in r.fired:
            marks[2 * p - 1 if p < N else 2 * N - 1] = "="
            if p == N:
                marks[0] = "="
        lines.append(f"x{i + 1:<2} " + "".join(marks).rstrip())
    lines.append(f"    {sites(c.bottom)}")
    return "\n".join(lines)


def conjugate_pair(nu, mu, box: Box) -> tuple:
    return conjugate(nu, box), conjugate(mu, box)
