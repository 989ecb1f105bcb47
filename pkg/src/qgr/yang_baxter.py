"""Vertex matrices and the Yang-Baxter algebra acting on 01-words.

Small matrices follow the convention ``M[out][in]`` on the basis
``v_a (x) v_b -> 2a + b`` (and ``4a + 2b + c`` for three factors).

Spin operators act on words stored as bitmasks (letter ``i`` is bit ``i-1``).
Every generator is realised by the signed hop-monomial expansion:

* ``f_i`` moves a 1-letter from position ``i`` to ``i+1``,
* ``sigma+_1`` turns letter 1 from 0 into 1, ``sigma-_N`` turns letter N from 1 into 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Sequence

import sympy

from .boxes import Box, all_words, reverse_word, word_of_partition
from .rings import MultiPoly, QPoly

X, Y = sympy.symbols("x y")
T = sympy.Symbol("t")  # spectral ratio x/y for the primed R-matrices


# ---------------------------------------------------------------------------
# small matrices

def build_vertex_matrix(kind: str, x=X, y=Y) -> sympy.Matrix:
    """``kind`` is one of ``L``, ``Lprime``, ``R``, ``Rprime``, ``Rdblprime``.

    ``R`` depends on ``(x, y)``; the primed R-matrices on the ratio ``x/y``.
    """
    if kind == "L":
        return sympy.Matrix([[1, 0, 0, 0], [0, 1, x, 0], [0, 1, x, 0], [0, 0, 0, 0]])
    if kind == "Lprime":
        return sympy.Matrix([[1, 0, 0, 0], [0, 1, x, 0], [0, 1, 0, 0], [0, 0, 0, x]])
    if kind == "R":
        u = y / x
        return sympy.Matrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, u, 1 - u, 0], [0, 0, 0, u]])
    if kind == "Rprime":
        t = x / y
        return sympy.Matrix([[1, 0, 0, 0], [0, 1 - t, t, 0], [0, 1, 0, 0], [0, 0, 0, t]])
    if kind == "Rdblprime":
        t = x / y
        return sympy.Matrix([[1 + t, 0, 0, 0], [0, 1, t, 0], [0, 1, t, 0], [0, 0, 0, 0]])
    raise ValueError(f"unknown vertex matrix {kind!r}")


def embed(m: sympy.Matrix, i: int, j: int) -> sympy.Matrix:
    """Lift a 4x4 matrix acting on factors ``(i, j)`` of a triple tensor product."""
    out = sympy.zeros(8, 8)
    for col in range(8):
        bits = [(col >> 2) & 1, (col >> 1) & 1, col & 1]
        for a2 in range(2):
            for b2 in range(2):
                entry = m[2 * a2 + b2, 2 * bits[i] + bits[j]]
                if entry == 0:
                    continue
                new = list(bits)
                new[i], new[j] = a2, b2
                row = 4 * new[0] + 2 * new[1] + new[2]
                out[row, col] += entry
    return out


YBE_KINDS = {
    "vicious": ("R", "L", "L"),
    "osculating": ("Rprime", "Lprime", "Lprime"),
    "mixed": ("Rdblprime", "L", "Lprime"),
}


def verify_ybe(which: str) -> sympy.Matrix:
    """Residual ``R12 L13(x) L23(y) - L23(y) L13(x) R12``, entrywise simplified."""
    r_kind, l1_kind, l2_kind = YBE_KINDS[which]
    r12 = embed(build_vertex_matrix(r_kind), 0, 1)
    l13 = embed(build_vertex_matrix(l1_kind, x=X), 0, 2)
    l23 = embed(build_vertex_matrix(l2_kind, x=Y), 1, 2)
    residual = r12 * l13 * l23 - l23 * l13 * r12
    return residual.applyfunc(sympy.cancel)


def r_determinant() -> sympy.Expr:
    return sympy.cancel(build_vertex_matrix("R").det())


def rdblprime_kernel(ratio=-1) -> list:
    """Basis of ``ker R''`` at ``x/y = ratio``."""
    m = build_vertex_matrix("Rdblprime").subs(X, ratio * Y)
    return m.applyfunc(sympy.cancel).nullspace()


def format_matrix(m: sympy.Matrix) -> str:
    rows = []
    for i in range(m.rows):
        rows.append("\t".join(str(m[i, j]) for j in range(m.cols)))
    return "\n".join(rows)


# ---------------------------------------------------------------------------
# hop monomials on words

def _bit(word: int, i: int) -> int:
    return word >> (i - 1) & 1


def hop_chains(word: int, N: int, ascending: bool = True) -> Iterator[tuple[tuple, int]]:
    """All non-annihilated products of distinct ``f_i`` (``1 <= i < N``).

    With ``ascending`` the factors act in the order ``f_1, f_2, ...``;
    otherwise ``f_{N-1}`` acts first.  Yields ``(fired, result)``.
    """
    order = range(1, N) if ascending else range(N - 1, 0, -1)
    order = list(order)

    def rec(pos, w, fired):
        if pos == len(order):
            yield tuple(sorted(fired)), w
            return
        yield from rec(pos + 1, w, fired)
        i = order[pos]
        if _bit(w, i) and not _bit(w, i + 1):
            yield from rec(pos + 1, w ^ (0b11 << (i - 1)), fired + [i])

    yield from rec(0, word, [])


def _raise_first(word: int) -> int | None:
    return None if word & 1 else word | 1


def _lower_last(word: int, N: int) -> int | None:
    top = 1 << (N - 1)
    return word ^ top if word & top else None


def _family_terms(family: str, word: int, N: int) -> Iterator[tuple[int, int, int]]:
    """Yield ``(r, qpower, out)`` for every monomial of ``family(x)`` acting on ``word``."""
    if N == 0:
        if family in ("A", "Aprime", "H", "E", "Hstar", "Estar"):
            yield 0, 0, word
        return
    if family in ("A", "H"):
        for fired, out in hop_chains(word, N, True):
            yield len(fired), 0, out
    if family in ("D", "H"):
        w = _raise_first(word)
        if w is not None:
            for fired, out in hop_chains(w, N, True):
                out = _lower_last(out, N)
                if out is not None:
                    yield len(fired) + 1, int(family == "H"), out
    if family == "B":
        w = _raise_first(word)
        if w is not None:
            for fired, out in hop_chains(w, N, True):
                yield len(fired) + 1, 0, out
    if family == "C":
        for fired, out in hop_chains(word, N, True):
            out = _lower_last(out, N)
            if out is not None:
                yield len(fired), 0, out
    if family in ("Aprime", "E"):
        for fired, out in hop_chains(word, N, False):
            yield len(fired), 0, out
    if family in ("Dprime", "E"):
        w = _lower_last(word, N)
        if w is not None:
            for fired, out in hop_chains(w, N, False):
                out = _raise_first(out)
                if out is not None:
                    yield len(fired) + 1, int(family == "E"), out
    if family == "Bprime":
        for fired, out in hop_chains(word, N, False):
            out = _raise_first(out)
            if out is not None:
                yield len(fired) + 1, 0, out
    if family == "Cprime":
        w = _lower_last(word, N)
        if w is not None:
            for fired, out in hop_chains(w, N, False):
                yield len(fired), 0, out


FAMILIES = ("A", "B", "C", "D", "Aprime", "Bprime", "Cprime", "Dprime",
            "H", "E", "Hstar", "Estar")


# ---------------------------------------------------------------------------
# sparse states and operators

@dataclass(frozen=True)
class SpinState:
    """Finitely supported vector ``sum c_w |w>`` over words of length ``N``."""

    N: int
    amplitudes: Mapping[int, object] = field(default_factory=dict)

    @classmethod
    def basis(cls, word: int, N: int, coeff=None) -> "SpinState":
        return cls(N, {word: QPoly(1) if coeff is None else coeff})

    @classmethod
    def of_partition(cls, lam: Sequence[int], box: Box) -> "SpinState":
        return cls.basis(word_of_partition(lam, box), box.N)

    def __getitem__(self, word: int):
        return self.amplitudes.get(word, 0)

    def __add__(self, other: "SpinState") -> "SpinState":
        if other.N != self.N:
            raise ValueError("box mismatch")
        out = dict(self.amplitudes)
        for w, c in other.amplitudes.items():
            v = out[w] + c if w in out else c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return SpinState(self.N, out)

    def scale(self, c) -> "SpinState":
        return SpinState(self.N, {w: a * c for w, a in self.amplitudes.items() if a * c})

    def __eq__(self, other):
        if not isinstance(other, SpinState):
            return NotImplemented
        return self.N == other.N and dict(self.amplitudes) == dict(other.amplitudes)

    def items(self):
        return sorted(self.amplitudes.items())


class SpinOperator:
    """Linear map on the span of words of length ``N`` given by a basis rule.

    ``rule(word)`` returns a dict ``word -> QPoly``.  Images are cached, so an
    operator behaves like a lazily materialised sparse matrix.
    """

    def __init__(self, N: int, rule: Callable[[int], Mapping[int, QPoly]], name: str = "op"):
        self.N = N
        self._rule = rule
        self._cache: dict[int, dict[int, QPoly]] = {}
        self.name = name

    def image(self, word: int) -> dict[int, QPoly]:
        got = self._cache.get(word)
        if got is None:
            got = {w: c for w, c in self._rule(word).items() if c}
            self._cache[word] = got
        return got

    def __call__(self, state: SpinState) -> SpinState:
        return apply_operator(self, state)

    def __matmul__(self, other: "SpinOperator") -> "SpinOperator":
        """``self @ other`` applies ``other`` first."""
        _check_same(self, other)

        def rule(word):
            out: dict[int, QPoly] = {}
            for mid, c1 in other.image(word).items():
                for w, c2 in self.image(mid).items():
                    out[w] = out.get(w, QPoly()) + c1 * c2
            return out

        return SpinOperator(self.N, rule, f"{self.name}*{other.name}")

    def __add__(self, other: "SpinOperator") -> "SpinOperator":
        _check_same(self, other)

        def rule(word):
            out = dict(self.image(word))
            for w, c in other.image(word).items():
                out[w] = out.get(w, QPoly()) + c
            return out

        return SpinOperator(self.N, rule, f"{self.name}+{other.name}")

    def scale(self, c) -> "SpinOperator":
        c = c if isinstance(c, QPoly) else QPoly(c)
        return SpinOperator(self.N, lambda w: {v: a * c for v, a in self.image(w).items()},
                            f"{c}*{self.name}")

    def __sub__(self, other: "SpinOperator") -> "SpinOperator":
        return self + other.scale(-1)

    def matrix(self, words_in: Sequence[int], words_out: Sequence[int] | None = None) -> list:
        """Dense ``[out][in]`` matrix of ``QPoly`` entries."""
        words_out = words_in if words_out is None else words_out
        index = {w: i for i, w in enumerate(words_out)}
        rows = [[QPoly() for _ in words_in] for _ in words_out]
        for j, w in enumerate(words_in):
            for v, c in self.image(w).items():
                if v not in index:
                    if c:
                        raise ValueError("image leaves the requested output basis")
                    continue
                rows[index[v]][j] = c
        return rows

    def is_zero_on(self, words: Iterable[int]) -> bool:
        return all(not self.image(w) for w in words)

    def equals_on(self, other: "SpinOperator", words: Iterable[int]) -> bool:
        return all(self.image(w) == other.image(w) for w in words)


def _check_same(a: SpinOperator, b: SpinOperator):
    if a.N != b.N:
        raise ValueError(f"box mismatch: operators on N={a.N} and N={b.N}")


def apply_operator(op: SpinOperator, state: SpinState) -> SpinState:
    if op.N != state.N:
        raise ValueError(f"box mismatch: operator on N={op.N}, state on N={state.N}")
    out: dict[int, object] = {}
    for w, a in state.amplitudes.items():
        for v, c in op.image(w).items():
            term = a * c
            out[v] = out[v] + term if v in out else term
    return SpinState(op.N, {w: c for w, c in out.items() if c})


def identity(N: int) -> SpinOperator:
    return SpinOperator(N, lambda w: {w: QPoly(1)}, "1")


def zero(N: int) -> SpinOperator:
    return SpinOperator(N, lambda w: {}, "0")


def _series_rule(family: str, r: int, N: int):
    def rule(word):
        out: dict[int, QPoly] = {}
        for deg, qpow, w in _family_terms(family, word, N):
            if deg == r:
                out[w] = out.get(w, QPoly()) + QPoly.q(qpow)
        return out
    return rule


@lru_cache(maxsize=None)
def _yba_cached(family: str, r: int, N: int) -> SpinOperator:
    if family not in FAMILIES:
        raise ValueError(f"unknown operator family {family!r}")
    if r < 0 or r > N:
        return zero(N)
    if family in ("Hstar", "Estar"):
        base = _yba_cached(family[0], r, N)

        def rule(word):
            return {reverse_word(w, N): c.invert_q()
                    for w, c in base.image(reverse_word(word, N)).items()}

        return SpinOperator(N, rule, f"{family}_{r}")
    return SpinOperator(N, _series_rule(family, r, N), f"{family}_{r}")


def yba_operator(family: str, r: int, box: Box | int) -> SpinOperator:
    """Coefficient of ``x^r`` in the named row operator.

    ``box`` may be a ``Box`` or just the word length ``N``; the operator acts on
    all words of that length.
    """
    N = box.N if isinstance(box, Box) else int(box)
    return _yba_cached(family, r, N)


def transfer_product(family: str, parts: Sequence[int], box: Box | int) -> SpinOperator:
    """``F_{parts[0]} F_{parts[1]} ...`` (the last factor acts first)."""
    N = box.N if isinstance(box, Box) else int(box)
    op = identity(N)
    for r in parts:
        op = op @ yba_operator(family, r, N)
    return op


def matrix_element(bra: Sequence[int], op: SpinOperator, ket: Sequence[int], box: Box) -> QPoly:
    if op.N != box.N:
        raise ValueError("box mismatch")
    out = op.image(word_of_partition(ket, box))
    return out.get(word_of_partition(bra, box), QPoly())


def theta(word: int, N: int) -> int:
    """Level-rank map on words: reverse and flip every letter."""
    return reverse_word(word, N) ^ ((1 << N) - 1)


def sector(N: int, n: int) -> list[int]:
    """Words of length ``N`` with ``n`` ones, in ascending bitmask order."""
    return all_words(N, n)


def sigma_z_product(word: int) -> int:
    return -1 if bin(word).count("1") % 2 else 1


def functional_relation_residual(N: int, words: Iterable[int] | None = None) -> dict:
    """Coefficients of ``H(x)E(-x) - 1 - q x^N prod sigma^z`` by ``x``-degree.

    Returns ``degree -> {word: {image word: QPoly}}`` restricted to nonzero
    entries; an identically vanishing residual gives an empty dict per degree.
    """
    words = list(range(1 << N)) if words is None else list(words)
    report = {}
    for m in range(2 * N + 1):
        bad = {}
        for w in words:
            acc: dict[int, QPoly] = {}
            for i in range(max(0, m - N), min(m, N) + 1):
                j = m - i
                sign = -1 if j % 2 else 1
                for mid, c1 in yba_operator("E", j, N).image(w).items():
                    for v, c2 in yba_operator("H", i, N).image(mid).items():
                        acc[v] = acc.get(v, QPoly()) + c1 * c2 * sign
            if m == 0:
                acc[w] = acc.get(w, QPoly()) - 1
            if m == N:
                acc[w] = acc.get(w, QPoly()) - QPoly.q(1, sigma_z_product(w))
            acc = {v: c for v, c in acc.items() if c}
            if acc:
                bad[w] = acc
        report[m] = bad
    return report


def scalar_relation_coefficients(box: Box) -> dict:
    """``sum_{i+j=m} (-1)^j H_i E_j`` restricted to ``V_n``, as ``m -> {word: {word: QPoly}}``."""
    N = box.N
    out = {}
    for m in range(2 * N + 1):
        table = {}
        for w in sector(N, box.n):
            acc: dict[int, QPoly] = {}
            for i in range(max(0, m - N), min(m, N) + 1):
                j = m - i
                sign = -1 if j % 2 else 1
                for mid, c1 in yba_operator("E", j, N).image(w).items():
                    for v, c2 in yba_operator("H", i, N).image(mid).items():
                        acc[v] = acc.get(v, QPoly()) + c1 * c2 * sign
            table[w] = {v: c for v, c in acc.items() if c}
        out[m] = table
    return out


# ---------------------------------------------------------------------------
# generating-function products over polynomial coefficients

def apply_series(family: str, var: int, nvars: int, state: SpinState) -> SpinState:
    """Apply ``family(x_var) = sum_r x_var^r family_r`` to a state with ``MultiPoly`` amplitudes."""
    N = state.N
    out: dict[int, MultiPoly] = {}
    for w, amp in state.amplitudes.items():
        for deg, qpow, v in _family_terms(family, w, N):
            exps = [0] * nvars
            exps[var] = deg
            term = amp.mul_monomial(exps, qpow)
            out[v] = out[v] + term if v in out else term
    return SpinState(N, {w: c for w, c in out.items() if c})


def creation_chain(family: str, variables: Sequence[int], start: int, N: int, nvars: int) -> SpinState:
    """Apply ``family(x_{v})`` for ``v`` in ``variables``, first entry acting first."""
    state = SpinState(N, {start: MultiPoly.one(nvars)})
    for v in variables:
        state = apply_series(family, v, nvars, state)
    return state


def b_chain(box: Box, order: str = "descending") -> SpinState:
    """``B(x_n)...B(x_1)|0>`` (``descending``: ``x_1`` acts first) or ``B(x_1)...B(x_n)|0>``."""
    n = box.n
    variables = list(range(n)) if order == "descending" else list(range(n - 1, -1, -1))
    return creation_chain("B", variables, 0, box.N, n)


def staircase_prefactor(box: Box, order: str = "descending") -> tuple:
    """Exponent vector of the monomial multiplying ``s_lam(x)`` in the ``B``-chain.

    Determined from the amplitude of the empty partition.
    """
    state = b_chain(box, order)
    amp = state[word_of_partition((0,) * box.n, box)]
    terms = list(amp.raw_items()) if amp else []
    if len(terms) != 1:
        raise ArithmeticError(f"amplitude of the empty partition is not a monomial: {amp}")
    key, coeff = terms[0]
    if coeff != 1 or key[-1] != 0:
        raise ArithmeticError(f"unexpected normalisation {amp}")
    return tuple(key[:-1])


def vertex_matrix_element(lam: Sequence[int], box: Box, h_factors: bool = True,
                          order: str = "descending", normalise: bool = True) -> MultiPoly:
    """``<lam| H(y_n)...H(y_1) B(x_n)...B(x_1) |0>`` in ``2n`` variables.

    Variables ``0..n-1`` are the ``x`` and ``n..2n-1`` the ``y``.  With
    ``normalise`` the result is divided by the computed staircase monomial in
    ``x``.  Without ``h_factors`` only the ``B``-chain is taken.
    """
    n = box.n
    nvars = 2 * n
    xs = list(range(n)) if order == "descending" else list(range(n - 1, -1, -1))
    state = SpinState(box.N, {0: MultiPoly.one(nvars)})
    for v in xs:
        state = apply_series("B", v, nvars, state)
    if h_factors:
        for v in range(n, 2 * n):
            state = apply_series("H", v, nvars, state)
    amp = state[word_of_partition(lam, box)]
    amp = amp if amp else MultiPoly.zero(nvars)
    if normalise:
        shift = staircase_prefactor(box, order)
        amp = amp.mul_monomial(tuple(-e for e in shift) + (0,) * n)
    return amp


def cprime_chain(box: Box, order: str = "ascending") -> SpinState:
    """``C'(x_1)...C'(x_k)|N>`` (``ascending``: ``x_k`` acts first) or the reverse order."""
    k = box.k
    variables = list(range(k - 1, -1, -1)) if order == "ascending" else list(range(k))
    return creation_chain("Cprime", variables, (1 << box.N) - 1, box.N, k)
