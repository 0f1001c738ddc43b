"""Schubert, back-stable Schubert, double Schubert and Stanley polynomials.

Everything "back-stable" is evaluated at a finite window m: the letters
x_{-m}, ..., x_{-1} are kept and all letters further left are set to 0.
This agrees with the padded object 1_m x w with its variables shifted down
by m (see ``shift_down``), which the tests check directly.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .perms import Permutation, _length
from .poly import (ONE, ZERO, Polynomial, divided_difference, window_indices)


# compatible sequences (the definitional route)


def compatible_sequences(word: Sequence[int], lo: int | None = None,
                         hi: int | None = None) -> Iterator[tuple[int, ...]]:
    """All compatible sequences for ``word`` with entries in [lo, hi] \\ {0}.

    Entries weakly increase, are bounded above by the letters of the word,
    and strictly increase wherever the word ascends.  ``lo`` defaults to 1
    (ordinary Schubert polynomials); ``hi=None`` leaves only the word bound.
    """
    lo = 1 if lo is None else lo
    ell = len(word)

    def rec(j: int, prev: int, acc: list[int]):
        if j == ell:
            yield tuple(acc)
            return
        start = prev
        if j > 0 and word[j - 1] < word[j]:
            start = prev + 1
        if start == 0:
            start = 1
        top = word[j] if hi is None else min(word[j], hi)
        for i in range(start, top + 1):
            if i == 0:
                continue
            acc.append(i)
            yield from rec(j + 1, i, acc)
            acc.pop()

    yield from rec(0, lo, [])


def monomial_of(indices: Sequence[int], alphabet: str = "x") -> Polynomial:
    exps: dict[tuple[str, int], int] = {}
    for i in indices:
        exps[(alphabet, i)] = exps.get((alphabet, i), 0) + 1
    return Polynomial.monomial(exps)


def compatible_sum(words, lo: int, hi: int | None = None, alphabet: str = "x") -> Polynomial:
    """Sum of x_{i_1}...x_{i_l} over the words and their compatible sequences."""
    acc: dict = {}
    for a in words:
        for seq in compatible_sequences(a, lo, hi):
            mono = monomial_of(seq, alphabet)
            for m, c in mono.items():
                acc[m] = acc.get(m, 0) + c
    return Polynomial(acc)


# grouped enumeration: a compatible sequence splits its word into strictly
# decreasing blocks, one block per index value, so the sum over (word,
# sequence) pairs is a sum over length-additive factorizations into
# decreasing elements.


def _left_descent(u: tuple[int, ...], a: int) -> bool:
    # l(s_a u) < l(u) iff a+1 appears before a in u
    if a + 1 > len(u):
        return False
    return u.index(a + 1) < u.index(a)


def _left_mul(u: tuple[int, ...], a: int) -> tuple[int, ...]:
    out = tuple(a + 1 if v == a else a if v == a + 1 else v for v in u)
    k = len(out)
    while k and out[k - 1] == k:
        k -= 1
    return out[:k]


def _decreasing_prefixes(u: tuple[int, ...], below: int, least: int):
    """Yield (k, rest) with u = s_{a1}...s_{ak} rest length-additively and
    below > a1 > ... > ak >= least."""
    yield 0, u
    for a in range(min(below - 1, len(u) - 1), least - 1, -1):
        if _left_descent(u, a):
            for k, rest in _decreasing_prefixes(_left_mul(u, a), a, least):
                yield k + 1, rest


@lru_cache(maxsize=None)
def _block_sum(u: tuple[int, ...], indices: tuple[int, ...], alphabet: str) -> Polynomial:
    if not u:
        return ONE
    if not indices:
        return ZERO
    i, rest_idx = indices[0], indices[1:]
    least = max(i, 1)
    if least > len(u):
        return ZERO
    out = ZERO
    for k, rest in _decreasing_prefixes(u, len(u) + 1, least):
        sub = _block_sum(rest, rest_idx, alphabet)
        if sub:
            out = out + (Polynomial.var(alphabet, i, k) * sub if k else sub)
    return out


def _trim(w: Permutation) -> tuple[int, ...]:
    return w.trimmed().oneline


def schubert_bjs(w: Permutation, m: int = 0, alphabet: str = "x") -> Polynomial:
    """Back-stable Schubert polynomial at window m (m=0: the Schubert
    polynomial), as the compatible-sequence sum over reduced words."""
    if m < 0:
        raise ValueError("window must be nonnegative")
    u = _trim(w)
    return _block_sum(u, tuple(window_indices(m, max(len(u) - 1, 0))), alphabet)


def stanley(w: Permutation, m: int, alphabet: str = "x") -> Polynomial:
    """Stanley symmetric function in the window letters x_{-m..-1}."""
    if m < 1 and _trim(w):
        raise ValueError("the Stanley function needs a window m >= 1")
    return _block_sum(_trim(w), tuple(range(-m, 0)), alphabet)


def schubert_literal(w: Permutation, m: int = 0, alphabet: str = "x") -> Polynomial:
    """Direct enumeration over reduced words and compatible sequences."""
    return compatible_sum(w.reduced_words(), -m if m else 1, None, alphabet)


def stanley_literal(w: Permutation, m: int, alphabet: str = "x") -> Polynomial:
    return compatible_sum(w.reduced_words(), -m, -1, alphabet)


# divided-difference route


def top_schubert(n: int) -> Polynomial:
    """x_1^{n-1} x_2^{n-2} ... x_{n-1}."""
    exps = {("x", i): n - i for i in range(1, n)}
    return Polynomial.monomial(exps)


@lru_cache(maxsize=None)
def _dd(w: tuple[int, ...], n: int) -> Polynomial:
    if w == tuple(range(n, 0, -1)):
        return top_schubert(n)
    # climb one step toward w0 along an ascent, then apply d_i back down
    for i in range(1, n):
        if w[i - 1] < w[i]:
            up = list(w)
            up[i - 1], up[i] = up[i], up[i - 1]
            return divided_difference(_dd(tuple(up), n), i)
    raise AssertionError("unreachable: only w0 has no ascent")


def schubert_dd(w: Permutation) -> Polynomial:
    """Schubert polynomial from x_1^{n-1}...x_{n-1} by divided differences."""
    w = w.trimmed()
    if w.n == 0:
        return ONE
    return _dd(w.oneline, w.n)


# double Schubert polynomials


def length_additive_factorizations(w: Permutation) -> list[tuple[Permutation, Permutation]]:
    """All (u, v) with uv = w and l(u) + l(v) = l(w)."""
    # v runs over the suffixes: strip left descents from w one at a time
    w = w.trimmed()
    n = max(w.n, 1)
    w = w.padded(n)
    seen = {w}
    stack = [w]
    while stack:
        v = stack.pop()
        for a in range(1, n):
            if v.inverse()(a) > v.inverse()(a + 1):
                nxt = v.left_mul_simple(a)
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return sorted((w * v.inverse(), v) for v in seen)


def double_schubert(w: Permutation, m: int = 0) -> Polynomial:
    """sum over uv = w length-additive of (-1)^{l(u)} S_{u^-1}(y) S_v(x)."""
    out = ZERO
    for u, v in length_additive_factorizations(w):
        term = schubert_bjs(u.inverse(), m, "y") * schubert_bjs(v, m, "x")
        out = out + (term if u.length() % 2 == 0 else -term)
    return out


# windows and padding


def shift_down(p: Polynomial, m: int) -> Polynomial:
    """Relabel x_i -> x_{i-m} (and y likewise), skipping index 0."""
    def f(al, i):
        if i <= 0:
            raise ValueError("shift_down expects positive indices")
        j = i - m
        return (al, j if j > 0 else j - 1)
    return p.rename(f)


def negate_alphabet(p: Polynomial, alphabet: str = "y") -> Polynomial:
    """Substitute v -> -v for every variable of ``alphabet``."""
    out = {}
    for mono, c in p.items():
        deg = sum(e for al, _, e in mono if al == alphabet)
        out[mono] = -c if deg % 2 else c
    return Polynomial(out)


def kill_alphabet(p: Polynomial, alphabet: str) -> Polynomial:
    return p.zero_out(lambda al, i: al == alphabet)


def kill_negative(p: Polynomial) -> Polynomial:
    return p.zero_out(lambda al, i: i < 0)


def check_dd_recurrence(w: Permutation, i: int, m: int = 0) -> tuple[bool, Polynomial, Polynomial]:
    """Compare d_i S_w with S_{ws_i} (or 0) at window m."""
    lhs = divided_difference(schubert_bjs(w, m), i)
    ws = w.right_mul_simple(i)
    if _length(ws.oneline) < _length(w.padded(i + 1).oneline):
        rhs = schubert_bjs(ws, m)
    else:
        rhs = ZERO
    return lhs == rhs, lhs, rhs
