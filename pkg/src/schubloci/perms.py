"""Permutations of finite support in one-line notation.

A permutation of [n] is stored as the tuple (w(1), ..., w(n)).  Binary
operations pad the shorter operand with fixed points, so w and w x 1
behave identically under composition and Demazure products.  Equality is
structural, so callers that want to identify w with w x 1 should compare
``trimmed()`` forms.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

Cell = tuple[int, int]


class PermutationError(ValueError):
    pass


@dataclass(frozen=True, slots=True, order=True)
class Permutation:
    oneline: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.oneline) != list(range(1, len(self.oneline) + 1)):
            raise PermutationError(f"not a permutation: {self.oneline}")

    # construction

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, i: int, n: int | None = None) -> Permutation:
        """The transposition s_i = (i, i+1) in S_n (n defaults to i+1)."""
        n = max(n or 0, i + 1)
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(tuple(w))

    @classmethod
    def from_word(cls, word: Iterable[int], n: int | None = None) -> Permutation:
        """Product s_{a1} s_{a2} ... of simple transpositions."""
        word = list(word)
        size = max([n or 0] + [a + 1 for a in word])
        w = list(range(1, size + 1))
        # w * s_a swaps positions a, a+1
        for a in word:
            w[a - 1], w[a] = w[a], w[a - 1]
        return cls(tuple(w))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]], n: int | None = None) -> Permutation:
        cycles = [tuple(c) for c in cycles]
        size = max([n or 0] + [max(c) for c in cycles if c])
        w = list(range(1, size + 1))
        seen: set[int] = set()
        for c in cycles:
            for k, a in enumerate(c):
                if a < 1 or a in seen:
                    raise PermutationError(f"bad cycle notation: {cycles}")
                seen.add(a)
                w[a - 1] = c[(k + 1) % len(c)]
        return cls(tuple(w))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> Permutation:
        """Parse one-line ("3 5 1 4 2", "35142", "[3,5,1,4,2]") or cycle
        notation ("(1,5)(2,4)", "()")."""
        s = text.strip()
        if not s:
            raise PermutationError("empty permutation text")
        if s.startswith("("):
            if not re.fullmatch(r"(\(\s*(\d+\s*(,\s*\d+\s*)*)?\)\s*)+", s):
                raise PermutationError(f"malformed cycle notation: {text!r}")
            cycles = []
            for body in re.findall(r"\(([^)]*)\)", s):
                body = body.strip()
                if body:
                    cycles.append([int(t) for t in body.split(",")])
            return cls.from_cycles(cycles, n)
        s = s.strip("[]")
        if re.fullmatch(r"\d+", s):
            vals = [int(ch) for ch in s]
        elif re.fullmatch(r"\d+([\s,]+\d+)*", s):
            vals = [int(t) for t in re.split(r"[\s,]+", s)]
        else:
            raise PermutationError(f"malformed one-line notation: {text!r}")
        w = cls(tuple(vals))
        return w.padded(n) if n else w

    # basic access

    @property
    def n(self) -> int:
        return len(self.oneline)

    def __call__(self, i: int) -> int:
        return self.oneline[i - 1] if 1 <= i <= len(self.oneline) else i

    def __len__(self) -> int:
        return len(self.oneline)

    def __iter__(self) -> Iterator[int]:
        return iter(self.oneline)

    def __str__(self) -> str:
        if self.n < 10:
            return "".join(map(str, self.oneline)) or "()"
        return " ".join(map(str, self.oneline))

    def __repr__(self) -> str:
        return f"Permutation({str(self)})"

    def padded(self, n: int) -> Permutation:
        if n <= self.n:
            return self
        return Permutation(self.oneline + tuple(range(self.n + 1, n + 1)))

    def trimmed(self) -> Permutation:
        w = list(self.oneline)
        while w and w[-1] == len(w):
            w.pop()
        return Permutation(tuple(w))

    # group structure

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition (self * other)(i) = self(other(i))."""
        n = max(self.n, other.n)
        return Permutation(tuple(self(other(i)) for i in range(1, n + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.oneline, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        return _length(self.oneline)

    def descents(self) -> list[int]:
        return [i for i in range(1, self.n) if self(i) > self(i + 1)]

    def right_mul_simple(self, i: int) -> Permutation:
        w = list(self.padded(i + 1).oneline)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    def left_mul_simple(self, i: int) -> Permutation:
        return Permutation(tuple(
            i + 1 if v == i else i if v == i + 1 else v
            for v in self.padded(i + 1).oneline))

    def reduced_word(self) -> tuple[int, ...]:
        """One reduced word, found by repeatedly removing the last descent."""
        word = []
        w = self
        while True:
            ds = w.descents()
            if not ds:
                break
            i = ds[-1]
            word.append(i)
            w = w.right_mul_simple(i)
        return tuple(reversed(word))

    def reduced_words(self) -> list[tuple[int, ...]]:
        return sorted(_reduced_words(self.trimmed().oneline))

    # involutions

    def is_involution(self) -> bool:
        return all(self(v) == i for i, v in enumerate(self.oneline, 1))

    def is_fpf_involution(self) -> bool:
        return self.is_involution() and all(v != i for i, v in enumerate(self.oneline, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its minimum, sorted."""
        seen = set()
        out = []
        for i in range(1, self.n + 1):
            if i in seen or self(i) == i:
                continue
            c = [i]
            seen.add(i)
            j = self(i)
            while j != i:
                c.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(c))
        return out

    def two_cycles(self) -> list[tuple[int, int]]:
        if not self.is_involution():
            raise PermutationError(f"{self} is not an involution")
        return [(a, b) for a, b in self.cycles()]

    def cycle_string(self) -> str:
        cs = self.cycles()
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cs) or "()"


@lru_cache(maxsize=None)
def _length(w: tuple[int, ...]) -> int:
    return sum(1 for a, b in itertools.combinations(w, 2) if a > b)


@lru_cache(maxsize=None)
def _reduced_words(w: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    out = set()
    found = False
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            found = True
            v = list(w)
            v[i - 1], v[i] = v[i], v[i - 1]
            for word in _reduced_words(tuple(v)):
                out.add(word + (i,))
    if not found:
        return frozenset({()})
    return frozenset(out)


# Demazure products


def demazure_right(w: Permutation, i: int) -> Permutation:
    """w o s_i: equals w s_i when that is longer, else w."""
    if w(i) < w(i + 1):
        return w.right_mul_simple(i)
    return w


def demazure_left(i: int, w: Permutation) -> Permutation:
    """s_i o w."""
    winv = w.inverse()
    if winv(i) < winv(i + 1):
        return w.left_mul_simple(i)
    return w


def demazure(u: Permutation, v: Permutation) -> Permutation:
    """The Demazure product u o v."""
    w = u.padded(v.n)
    for a in v.reduced_word():
        w = demazure_right(w, a)
    return w


def inverse_conjugate(w: Permutation, z: Permutation) -> Permutation:
    """w^{-1} o z o w."""
    return demazure(demazure(w.inverse(), z), w)


# padding


def one_times(m: int, w: Permutation) -> Permutation:
    """1_m x w: fixes 1..m and sends i to w(i-m)+m above that."""
    return Permutation(tuple(range(1, m + 1)) + tuple(v + m for v in w.oneline))


def times_one(w: Permutation, m: int) -> Permutation:
    return w.padded(w.n + m)


def fpf_identity(n: int) -> Permutation:
    """(1,2)(3,4)...(n-1,n); n must be even."""
    if n % 2:
        raise PermutationError("fixed-point-free identity needs even size")
    return Permutation.from_cycles([(2 * k + 1, 2 * k + 2) for k in range(n // 2)], n)


def pad(w: Permutation, m: int, side: str = "left", flavor: str = "O") -> Permutation:
    """Stabilize w by m extra letters.  Flavor "O" adds fixed points,
    flavor "Sp" adds 2-cycles (1,2)(3,4)... so m must be even."""
    if flavor not in ("O", "Sp"):
        raise PermutationError(f"unknown flavor {flavor!r}")
    if flavor == "O":
        block = Permutation.identity(m)
    else:
        block = fpf_identity(m)
    if side == "left":
        return direct_sum(block, w)
    if side == "right":
        return direct_sum(w, block)
    raise PermutationError(f"side must be 'left' or 'right', got {side!r}")


def direct_sum(u: Permutation, v: Permutation) -> Permutation:
    return Permutation(u.oneline + tuple(x + u.n for x in v.oneline))


# enumeration


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


@lru_cache(maxsize=None)
def _involutions(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    # n is fixed or paired with some k < n
    for y in _involutions(n - 1):
        out.append(y + (n,))
    for k in range(1, n):
        for y in _involutions(n - 2):
            # insert: relabel y on [n] minus {k, n}
            rest = [a for a in range(1, n) if a != k]
            w = [0] * n
            for idx, v in enumerate(y):
                w[rest[idx] - 1] = rest[v - 1]
            w[k - 1] = n
            w[n - 1] = k
            out.append(tuple(w))
    return tuple(sorted(out))


def involutions(n: int) -> list[Permutation]:
    return [Permutation(y) for y in _involutions(n)]


def fpf_involutions(n: int) -> list[Permutation]:
    if n % 2:
        return []
    return [y for y in involutions(n) if y.is_fpf_involution()]


# diagrams


def rothe_diagram(w: Permutation) -> frozenset[Cell]:
    winv = w.inverse()
    n = w.n
    return frozenset((i, j) for i in range(1, n + 1) for j in range(1, n + 1)
                     if j < w(i) and i < winv(j))


def essential_set(diagram: Iterable[Cell]) -> frozenset[Cell]:
    d = set(diagram)
    return frozenset((i, j) for (i, j) in d if (i, j + 1) not in d and (i + 1, j) not in d)


def chain_le(a: Cell, b: Cell) -> bool:
    """a <=_NE b: a is weakly southwest of b."""
    return a[0] >= b[0] and a[1] <= b[1]


def chain_sorted(cells: Iterable[Cell]) -> list[Cell]:
    """Cells ordered from southwest to northeast."""
    return sorted(cells, key=lambda c: (-c[0], c[1]))


def is_chain(cells: Iterable[Cell]) -> bool:
    cs = chain_sorted(cells)
    return all(chain_le(a, b) for a, b in zip(cs, cs[1:]))


def rank(w: Permutation, i: int, j: int) -> int:
    """rank of the upper-left i x j submatrix of the permutation matrix."""
    return sum(1 for a in range(1, i + 1) if w(a) <= j)


def code(w: Permutation) -> tuple[int, ...]:
    return tuple(sum(1 for j in range(i + 1, w.n + 1) if w(j) < w(i)) for i in range(1, w.n + 1))


def conjugate(parts: Iterable[int]) -> tuple[int, ...]:
    parts = sorted((p for p in parts if p > 0), reverse=True)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= k) for k in range(1, parts[0] + 1))


def shape(w: Permutation) -> tuple[int, ...]:
    return conjugate(code(w))


def contains_pattern(w: Permutation, pattern: tuple[int, ...]) -> bool:
    k = len(pattern)
    order = sorted(range(k), key=lambda t: pattern[t])
    for idx in itertools.combinations(range(w.n), k):
        vals = [w.oneline[t] for t in idx]
        if all(vals[order[t]] < vals[order[t + 1]] for t in range(k - 1)):
            return True
    return False


def is_vexillary(w: Permutation) -> bool:
    return not contains_pattern(w, (2, 1, 4, 3))
