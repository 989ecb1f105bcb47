"""Exact Laurent polynomial arithmetic.

``QPoly`` is a Laurent polynomial in the single quantum parameter ``q``.
``MultiPoly`` is a Laurent polynomial in ``x_1..x_m`` whose coefficients are
``QPoly``; internally the ``q`` exponent is stored as one extra trailing slot of
the exponent key so that products stay flat dictionaries of Python ints.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _cartesian
from typing import Iterable, Mapping, Sequence


class QPoly:
    """Laurent polynomial in ``q`` with arbitrary-precision integer coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | int | None = None):
        if coeffs is None:
            self._c = {}
        elif isinstance(coeffs, int):
            self._c = {0: coeffs} if coeffs else {}
        else:
            self._c = {int(e): int(c) for e, c in coeffs.items() if c}
        self._hash = None

    @classmethod
    def q(cls, power: int = 1, coeff: int = 1) -> "QPoly":
        return cls({power: coeff})

    @staticmethod
    def _coerce(other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly(other)
        return NotImplemented

    # ring operations
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for e, c in other._c.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return _qpoly_raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _qpoly_raw({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) != 1:
                raise ValueError("only Laurent monomials are invertible")
            (e, c), = self._c.items()
            if c not in (1, -1):
                raise ValueError("coefficient not a unit")
            return QPoly({e * k: c ** (-k)})
        result = QPoly(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    # accessors
    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def items(self):
        return sorted(self._c.items())

    def exponents(self) -> list[int]:
        return sorted(self._c)

    @property
    def degree(self) -> int:
        """Largest exponent; -1 for the zero polynomial."""
        return max(self._c) if self._c else -1

    def invert_q(self) -> "QPoly":
        """Substitute ``q -> q^{-1}``."""
        return _qpoly_raw({-e: c for e, c in self._c.items()})

    def evaluate(self, q):
        base = Fraction(q) if isinstance(q, int) else q
        return sum((c * base ** e for e, c in self._c.items()), 0)

    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    def constant(self) -> int:
        return self._c.get(0, 0)

    def __repr__(self):
        return f"QPoly({self})"

    def __str__(self):
        return format_terms([((e,), c) for e, c in sorted(self._c.items())], ("q",))


def _qpoly_raw(d: dict) -> QPoly:
    p = QPoly.__new__(QPoly)
    p._c = d
    p._hash = None
    return p


def _fmt_monomial(exps: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for e, name in zip(exps, names):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def format_terms(terms, names) -> str:
    """Canonical text for a list of ``(exponent tuple, int coefficient)``."""
    if not terms:
        return "0"
    out = []
    for exps, c in terms:
        mono = _fmt_monomial(exps, names)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


class MultiPoly:
    """Laurent polynomial in ``nvars`` variables with coefficients in ``Z[q, q^-1]``.

    Keys of the internal dictionary are ``(e_1, ..., e_m, e_q)``.
    """

    __slots__ = ("nvars", "_t", "names")

    def __init__(self, nvars: int, terms: Mapping[tuple, int] | None = None,
                 names: Sequence[str] | None = None):
        self.nvars = nvars
        self._t = {}
        if terms:
            for key, c in terms.items():
                if c:
                    if len(key) != nvars + 1:
                        raise ValueError(f"exponent key {key} does not match {nvars} variables")
                    self._t[tuple(key)] = self._t.get(tuple(key), 0) + c
            self._t = {k: c for k, c in self._t.items() if c}
        self.names = tuple(names) if names else tuple(f"x{i + 1}" for i in range(nvars))

    # constructors
    @classmethod
    def _raw(cls, nvars, terms, names=None):
        p = cls.__new__(cls)
        p.nvars = nvars
        p._t = terms
        p.names = names if names else tuple(f"x{i + 1}" for i in range(nvars))
        return p

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, c, nvars: int) -> "MultiPoly":
        zero = (0,) * nvars
        if isinstance(c, QPoly):
            return cls._raw(nvars, {zero + (e,): v for e, v in c.items()})
        return cls._raw(nvars, {zero + (0,): c} if c else {})

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls.constant(1, nvars)

    @classmethod
    def var(cls, i: int, nvars: int) -> "MultiPoly":
        """The variable ``x_{i+1}`` (0-based index)."""
        exps = [0] * (nvars + 1)
        exps[i] = 1
        return cls._raw(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1, qexp: int = 0) -> "MultiPoly":
        return cls._raw(len(exps), {tuple(exps) + (qexp,): coeff} if coeff else {})

    @classmethod
    def q(cls, nvars: int, power: int = 1) -> "MultiPoly":
        return cls._raw(nvars, {(0,) * nvars + (power,): 1})

    @classmethod
    def from_terms(cls, nvars: int, terms: Mapping[tuple, QPoly | int]) -> "MultiPoly":
        """Build from a map ``x-exponent tuple -> QPoly``."""
        out: dict[tuple, int] = {}
        for exps, c in terms.items():
            c = c if isinstance(c, QPoly) else QPoly(c)
            for e, v in c.items():
                key = tuple(exps) + (e,)
                out[key] = out.get(key, 0) + v
        return cls._raw(nvars, {k: v for k, v in out.items() if v})

    def with_names(self, names: Sequence[str]) -> "MultiPoly":
        return MultiPoly._raw(self.nvars, self._t, tuple(names))

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, QPoly)):
            return MultiPoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._t)
        for k, c in other._t.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return MultiPoly._raw(self.nvars, out, self.names)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {k: -c for k, c in self._t.items()}, self.names)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple, int] = {}
        for k1, c1 in self._t.items():
            for k2, c2 in other._t.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + c1 * c2
        return MultiPoly._raw(self.nvars, {k: v for k, v in out.items() if v}, self.names)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials; use mul_monomial")
        result = MultiPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, QPoly)):
            other = MultiPoly.constant(other, self.nvars)
        if not isinstance(other, MultiPoly):
            return False
        return self.nvars == other.nvars and self._t == other._t

    def __hash__(self):
        return hash((self.nvars, frozenset(self._t.items())))

    def __bool__(self):
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def scale(self, c: int) -> "MultiPoly":
        if not c:
            return MultiPoly.zero(self.nvars)
        return MultiPoly._raw(self.nvars, {k: v * c for k, v in self._t.items()}, self.names)

    def mul_monomial(self, exps: Sequence[int], qexp: int = 0) -> "MultiPoly":
        """Multiply by ``x^exps q^qexp``; negative exponents allowed."""
        if len(exps) != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {len(exps)}")
        shift = tuple(exps) + (qexp,)
        return MultiPoly._raw(
            self.nvars, {tuple(a + b for a, b in zip(k, shift)): c for k, c in self._t.items()},
            self.names)

    # structure
    def raw_items(self):
        return self._t.items()

    def terms(self) -> dict[tuple, QPoly]:
        """Map ``x-exponent tuple -> QPoly`` coefficient."""
        grouped: dict[tuple, dict[int, int]] = {}
        for k, c in self._t.items():
            grouped.setdefault(k[:-1], {})[k[-1]] = c
        return {e: QPoly(d) for e, d in grouped.items()}

    def coefficient(self, exps: Sequence[int]) -> QPoly:
        exps = tuple(exps)
        return QPoly({k[-1]: c for k, c in self._t.items() if k[:-1] == exps})

    def q_part(self, d: int) -> "MultiPoly":
        """Coefficient of ``q^d`` (as a ``q``-free polynomial)."""
        return MultiPoly._raw(
            self.nvars, {k[:-1] + (0,): c for k, c in self._t.items() if k[-1] == d}, self.names)

    def q_degrees(self) -> list[int]:
        return sorted({k[-1] for k in self._t})

    def subs_q(self, value: int) -> "MultiPoly":
        """Substitute an integer (``+-1`` for Laurent safety) for ``q``."""
        out: dict[tuple, int] = {}
        for k, c in self._t.items():
            if k[-1] < 0 and value not in (1, -1):
                raise ValueError("negative q power with non-unit substitution")
            key = k[:-1] + (0,)
            out[key] = out.get(key, 0) + c * value ** abs(k[-1])
        return MultiPoly._raw(self.nvars, {k: v for k, v in out.items() if v}, self.names)

    def permute(self, perm: Sequence[int]) -> "MultiPoly":
        """Variable ``i`` is sent to variable ``perm[i]``."""
        out = {}
        for k, c in self._t.items():
            new = [0] * (self.nvars + 1)
            for i, e in enumerate(k[:-1]):
                new[perm[i]] = e
            new[-1] = k[-1]
            out[tuple(new)] = c
        return MultiPoly._raw(self.nvars, out, self.names)

    def swap(self, i: int, j: int) -> "MultiPoly":
        perm = list(range(self.nvars))
        perm[i], perm[j] = j, i
        return self.permute(perm)

    def extend(self, nvars: int, offset: int = 0) -> "MultiPoly":
        """Embed into ``nvars`` variables, old variable ``i`` becoming ``i + offset``."""
        out = {}
        for k, c in self._t.items():
            new = [0] * (nvars + 1)
            new[offset:offset + self.nvars] = k[:-1]
            new[-1] = k[-1]
            out[tuple(new)] = c
        return MultiPoly._raw(nvars, out)

    def restrict(self, keep: Sequence[int]) -> "MultiPoly":
        """Drop variables not in ``keep``; they must not occur."""
        keep = list(keep)
        dropped = [i for i in range(self.nvars) if i not in keep]
        out = {}
        for k, c in self._t.items():
            if any(k[i] for i in dropped):
                raise ValueError("cannot drop a variable that occurs")
            out[tuple(k[i] for i in keep) + (k[-1],)] = c
        return MultiPoly._raw(len(keep), out)

    def substitute_zero(self, indices: Iterable[int]) -> "MultiPoly":
        idx = set(indices)
        return MultiPoly._raw(
            self.nvars, {k: c for k, c in self._t.items() if not any(k[i] for i in idx)},
            self.names)

    def negate_variables(self, indices: Iterable[int]) -> "MultiPoly":
        """Substitute ``x_i -> -x_i`` for the given 0-based indices."""
        idx = list(indices)
        return MultiPoly._raw(
            self.nvars,
            {k: (-c if sum(k[i] for i in idx) % 2 else c) for k, c in self._t.items()},
            self.names)

    def min_exponents(self) -> tuple:
        if not self._t:
            return (0,) * self.nvars
        return tuple(min(k[i] for k in self._t) for i in range(self.nvars))

    def total_degrees(self) -> set[int]:
        return {sum(k[:-1]) for k in self._t}

    def evaluate(self, point: Sequence, q=1):
        """Numeric value at ``point`` (ints, Fractions, floats or complex)."""
        if len(point) != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {len(point)}")
        total = 0
        for k, c in self._t.items():
            term = c
            for v, e in zip(point, k[:-1]):
                if e > 0:
                    term *= v ** e
                elif e < 0:
                    term /= v ** (-e) if not isinstance(v, int) else Fraction(v) ** (-e)
            e = k[-1]
            if e > 0:
                term *= q ** e
            elif e < 0:
                term /= q ** (-e) if not isinstance(q, int) else Fraction(q) ** (-e)
            total += term
        return total

    def sorted_items(self):
        """Terms in graded-lex order (total x-degree descending, then lex), then q."""
        return sorted(self._t.items(), key=lambda kv: (-sum(kv[0][:-1]), [-e for e in kv[0]]))

    def __str__(self):
        # q-coefficients grouped per x-monomial
        groups = self.terms()
        if not groups:
            return "0"
        keys = sorted(groups, key=lambda e: (-sum(e), [-v for v in e]))
        pieces = []
        for exps in keys:
            c = groups[exps]
            mono = _fmt_monomial(exps, self.names)
            items = c.items()
            if len(items) == 1 and items[0][0] == 0:
                pieces.append(format_terms([(exps, items[0][1])], self.names))
            elif len(items) == 1:
                e, v = items[0]
                qtxt = format_terms([((e,), v)], ("q",))
                pieces.append(f"{qtxt}*{mono}" if mono else qtxt)
            else:
                pieces.append(f"({c})*{mono}" if mono else f"({c})")
        text = pieces[0]
        for p in pieces[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self})"


def parse_monomial_key(text: str) -> tuple:
    """Inverse of the exponent serialization used in JSON dumps (``"2,0,1"``)."""
    return tuple(int(t) for t in text.split(",")) if text else ()


def all_exponent_vectors(nvars: int, degree: int):
    """Every exponent vector of ``nvars`` non-negative entries summing to ``degree``."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    for head in range(degree, -1, -1):
        for tail in all_exponent_vectors(nvars - 1, degree - head):
            yield (head,) + tail


def bounded_exponent_vectors(nvars: int, bound: int):
    return _cartesian(range(bound + 1), repeat=nvars)
