"""Partitions in an n x k box, 01-words, cylindric loops and toric tableaux.

Conventions
-----------
A partition is a tuple of exactly ``n`` weakly decreasing parts, each ``<= k``.
A 01-word is an ``int`` bitmask; letter ``i`` (1-based) is bit ``i - 1``.
The 1-letters of ``w(lam)`` sit at ``ell_i = lam_{n+1-i} + i``.

Cylindric cells are stored in the fundamental domain, rows ``1..n``; the cell
``<i, j>`` is identified with ``<i + n, j - k>``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterator, Sequence

MAX_N = 63

Partition = tuple


@dataclass(frozen=True, order=True)
class Box:
    """The bounding box with ``n`` rows and ``k`` columns."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise ValueError(f"box dimensions must be non-negative, got n={self.n}, k={self.k}")
        if self.n + self.k > MAX_N:
            raise ValueError(f"N = {self.n + self.k} exceeds the supported maximum {MAX_N}")

    @property
    def N(self) -> int:
        return self.n + self.k

    def transpose(self) -> "Box":
        return Box(self.k, self.n)

    def __str__(self):
        return f"n={self.n},k={self.k}"

    @cached_property
    def _partitions(self) -> tuple:
        out = []

        def rec(prefix, bound):
            if len(prefix) == self.n:
                out.append(tuple(prefix))
                return
            for part in range(bound + 1):
                rec(prefix + [part], part)

        rec([], self.k)
        return tuple(sorted(out))

    def partitions(self) -> tuple:
        """All partitions in the box, lexicographically ascending."""
        return self._partitions

    def partition(self, parts: Sequence[int]) -> Partition:
        """Zero-pad and validate ``parts``."""
        parts = [int(p) for p in parts]
        while len(parts) > self.n and parts[-1] == 0:
            parts.pop()
        if len(parts) > self.n:
            raise ValueError(f"partition {tuple(parts)} has more than n={self.n} parts")
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {tuple(parts)}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts of {tuple(parts)} are not weakly decreasing")
        if parts and parts[0] > self.k:
            raise ValueError(f"part exceeds k={self.k} in {tuple(parts)}")
        return tuple(parts) + (0,) * (self.n - len(parts))

    def contains(self, lam: Sequence[int]) -> bool:
        try:
            return tuple(self.partition(lam)) == tuple(lam)
        except ValueError:
            return False

    def words(self) -> list[int]:
        return [word_of_partition(lam, self) for lam in self.partitions()]

    def full_mask(self) -> int:
        return (1 << self.N) - 1


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)


def parse_partition(text: str, box: Box) -> Partition:
    text = text.strip()
    if text in ("", "0", "[]", "()", "empty"):
        return box.partition([])
    try:
        parts = [int(t) for t in text.strip("()[]").split(",") if t.strip() != ""]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return box.partition(parts)


def parse_box(text: str) -> Box:
    fields = dict(item.split("=") for item in text.split(","))
    return Box(int(fields["n"]), int(fields["k"]))


# 01-words ------------------------------------------------------------------

def word_of_partition(lam: Sequence[int], box: Box) -> int:
    n = box.n
    mask = 0
    for i in range(1, n + 1):
        ell = lam[n - i] + i
        mask |= 1 << (ell - 1)
    return mask


def partition_of_word(word: int, box: Box) -> Partition:
    if word >> box.N:
        raise ValueError(f"word has letters beyond N={box.N}")
    ones = [i + 1 for i in range(box.N) if word >> i & 1]
    if len(ones) != box.n:
        raise ValueError(f"word {word_str(word, box.N)} has {len(ones)} ones, expected n={box.n}")
    n = box.n
    # ell_i = lam_{n+1-i} + i
    return tuple(ones[n - j] - (n + 1 - j) for j in range(1, n + 1))


def word_str(word: int, N: int) -> str:
    return "".join("1" if word >> i & 1 else "0" for i in range(N))


def parse_word(text: str) -> int:
    if any(ch not in "01" for ch in text):
        raise ValueError(f"malformed 01-word {text!r}")
    return sum(1 << i for i, ch in enumerate(text) if ch == "1")


def letter(word: int, i: int) -> int:
    """The 1-based letter ``w_i``."""
    return word >> (i - 1) & 1


def reverse_word(word: int, N: int) -> int:
    out = 0
    for i in range(N):
        if word >> i & 1:
            out |= 1 << (N - 1 - i)
    return out


def transform(word: int, N: int, kind: str) -> int:
    """Apply one of the word maps ``vee``, ``prime``, ``hash`` or ``rot``."""
    full = (1 << N) - 1
    if kind == "vee":
        return reverse_word(word, N)
    if kind == "prime":
        return reverse_word(word, N) ^ full
    if kind == "hash":
        return word ^ full
    if kind == "rot":
        # w_2 w_3 ... w_N w_1
        if N == 0:
            return word
        return (word >> 1) | ((word & 1) << (N - 1))
    raise ValueError(f"unknown transform {kind!r}")


def complement(lam: Sequence[int], box: Box) -> Partition:
    return tuple(box.k - p for p in reversed(lam))


def conjugate(lam: Sequence[int], box: Box) -> Partition:
    """Conjugate partition, living in ``box.transpose()``."""
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, box.k + 1))


def rot(lam: Sequence[int], box: Box) -> Partition:
    if box.n == 0:
        return tuple(lam)
    if lam[-1] > 0:
        return tuple(p - 1 for p in lam)
    return (box.k,) + tuple(lam[:-1])


def prefix_ones(lam: Sequence[int], ell: int, box: Box) -> int:
    """``n_ell(lam)``, the number of 1-letters among the first ``ell`` letters,
    extended to all integers by ``n_{ell+N} = n_ell + n``."""
    N = box.N
    if N == 0:
        return 0
    q, r = divmod(ell, N)
    word = word_of_partition(lam, box)
    return q * box.n + bin(word & ((1 << r) - 1)).count("1")


# cylindric loops -------------------------------------------------------------

def extended_part(lam: Sequence[int], j: int, box: Box) -> int:
    """``lam_j`` for any integer ``j`` under ``lam_{j+n} = lam_j - k``."""
    n = box.n
    j0 = (j - 1) % n + 1
    return lam[j0 - 1] - ((j - j0) // n) * box.k


@dataclass(frozen=True)
class CylindricLoop:
    base: Partition
    shift: int
    box: Box

    def row(self, i: int) -> int:
        """``lam[r]_i = lam_{i-r} + r``."""
        return extended_part(self.base, i - self.shift, self.box) + self.shift


def loop_to_partition(rows: Sequence[int], box: Box) -> tuple[Partition, int]:
    """Recover ``(lam, r)`` from the rows ``1..n`` of the loop ``lam[r]``, ``r >= 0``."""
    n, N = box.n, box.N
    if n == 0:
        raise ValueError("a loop in a box with n = 0 has no rows")
    # ell_{i+r} = lam[r]_{n+1-i} + i
    ells = [rows[n - i] + i for i in range(1, n + 1)]
    positions = sorted((e - 1) % N + 1 for e in ells)
    shift = sum((e - 1) // N for e in ells)
    word = 0
    for p in positions:
        word |= 1 << (p - 1)
    if len(set(positions)) != n:
        raise ValueError(f"rows {tuple(rows)} do not describe a cylindric loop")
    lam = partition_of_word(word, box)
    if tuple(CylindricLoop(lam, shift, box).row(i) for i in range(1, n + 1)) != tuple(rows):
        raise ValueError(f"rows {tuple(rows)} do not describe a cylindric loop")
    return lam, shift


# cylindric shapes ----------------------------------------------------------

@dataclass(frozen=True)
class CylindricShape:
    """The cells of ``outer/d/inner`` in the fundamental domain."""

    box: Box
    outer: Partition
    d: int
    inner: Partition
    bounds: tuple = field(default=())  # per row: (inner row, outer row)

    @property
    def is_valid(self) -> bool:
        return all(hi >= lo for lo, hi in self.bounds)

    @cached_property
    def cells(self) -> tuple:
        if not self.is_valid:
            return ()
        return tuple((i, j) for i, (lo, hi) in enumerate(self.bounds, start=1)
                     for j in range(lo + 1, hi + 1))

    @cached_property
    def cell_set(self) -> frozenset:
        return frozenset(self.cells)

    @property
    def size(self) -> int:
        return len(self.cells)

    def row_lengths(self) -> tuple:
        return tuple(hi - lo for lo, hi in self.bounds)

    @property
    def is_toric(self) -> bool:
        return self.is_valid and all(hi - lo <= self.box.k for lo, hi in self.bounds)

    @property
    def is_cyl_horizontal_strip(self) -> bool:
        if not self.is_valid:
            return False
        k = self.box.k
        if k == 0:
            return not self.cells
        seen = set()
        for _, j in self.cells:
            if j % k in seen:
                return False
            seen.add(j % k)
        return True

    @property
    def is_cyl_vertical_strip(self) -> bool:
        return self.is_valid and all(hi - lo <= 1 for lo, hi in self.bounds)

    def below(self, cell):
        i, j = cell
        return (i + 1, j) if i < self.box.n else (1, j + self.box.k)

    def above(self, cell):
        i, j = cell
        return (i - 1, j) if i > 1 else (self.box.n, j - self.box.k)


def cylindric_shape(outer: Sequence[int], d: int, inner: Sequence[int], box: Box) -> CylindricShape:
    outer_loop = CylindricLoop(tuple(outer), d, box)
    inner_loop = CylindricLoop(tuple(inner), 0, box)
    bounds = tuple((inner_loop.row(i), outer_loop.row(i)) for i in range(1, box.n + 1))
    return CylindricShape(box, tuple(outer), d, tuple(inner), bounds)


def max_degree(outer: Sequence[int], inner: Sequence[int], box: Box) -> int:
    """Largest ``d`` with ``|outer| + dN - |inner| <= nk`` (toric shapes fit ``n*k`` cells)."""
    N = box.N
    if N == 0:
        return 0
    room = box.n * box.k - size(outer) + size(inner)
    return max(room // N, -1)


# cylindric tableaux --------------------------------------------------------

@dataclass(frozen=True)
class CylindricTableau:
    shape: CylindricShape
    entries: tuple  # ((cell, value), ...) in lexicographic cell order

    def as_dict(self) -> dict:
        return dict(self.entries)

    def weight(self, m: int | None = None) -> tuple:
        top = max((v for _, v in self.entries), default=0)
        m = top if m is None else m
        w = [0] * m
        for _, v in self.entries:
            w[v - 1] += 1
        return tuple(w)


def enumerate_cylindric_tableaux(shape: CylindricShape, max_entry: int,
                                 weight: Sequence[int] | None = None) -> Iterator[CylindricTableau]:
    """Semistandard fillings with entries in ``1..max_entry``, rows weakly
    increasing and columns strictly increasing across the wrap.

    Cells are filled in lexicographic order and values tried in ascending
    order, so the output order is deterministic.  ``weight`` restricts the
    count of every entry.
    """
    if not shape.is_valid:
        return
    cells = shape.cells
    cell_set = shape.cell_set
    if weight is not None:
        weight = list(weight)
        if len(weight) != max_entry or sum(weight) != len(cells):
            return
    neighbours = []
    for c in cells:
        i, j = c
        left = (i, j - 1) if (i, j - 1) in cell_set else None
        right = (i, j + 1) if (i, j + 1) in cell_set else None
        up = shape.above(c)
        up = up if up in cell_set and up != c else None
        down = shape.below(c)
        down = down if down in cell_set and down != c else None
        if shape.above(c) == c or shape.below(c) == c:
            # a cell sitting directly below itself admits no strict filling
            return
        neighbours.append((left, right, up, down))
    filling: dict = {}
    remaining = list(weight) if weight is not None else None

    def rec(pos):
        if pos == len(cells):
            yield CylindricTableau(shape, tuple((c, filling[c]) for c in cells))
            return
        c = cells[pos]
        left, right, up, down = neighbours[pos]
        lo, hi = 1, max_entry
        if left in filling:
            lo = max(lo, filling[left])
        if up in filling:
            lo = max(lo, filling[up] + 1)
        if right in filling:
            hi = min(hi, filling[right])
        if down in filling:
            hi = min(hi, filling[down] - 1)
        for v in range(lo, hi + 1):
            if remaining is not None:
                if not remaining[v - 1]:
                    continue
                remaining[v - 1] -= 1
            filling[c] = v
            yield from rec(pos + 1)
            del filling[c]
            if remaining is not None:
                remaining[v - 1] += 1

    yield from rec(0)


def quantum_kostka(outer: Sequence[int], d: int, inner: Sequence[int],
                   weight: Sequence[int], box: Box) -> int:
    """Number of cylindric tableaux of shape ``outer/d/inner`` with the given weight."""
    weight = tuple(weight)
    if sum(weight) != size(outer) + d * box.N - size(inner):
        return 0
    shape = cylindric_shape(outer, d, inner, box)
    if not shape.is_valid:
        return 0
    return sum(1 for _ in enumerate_cylindric_tableaux(shape, len(weight), weight))


def compositions(total: int, parts: int, bound: int | None = None) -> Iterator[tuple]:
    """Weak compositions of ``total`` into ``parts`` parts, each ``<= bound``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    top = total if bound is None else min(total, bound)
    for head in range(top, -1, -1):
        for tail in compositions(total - head, parts - 1, bound):
            yield (head,) + tail


def all_words(N: int, ones: int) -> list[int]:
    return sorted(sum(1 << p for p in c) for c in combinations(range(N), ones))
