"""Pfaffians, Schur Q and P functions, and their multiparameter deformation.

Q_lambda is computed two ways: as a Pfaffian of two-row Q functions built
from a family of series c(1), c(2), ... (classically every c(i) is
sum_d Q_d), and as a sum over marked shifted tableaux.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Callable, Sequence

from .poly import (ONE, ZERO, Polynomial, RatioSeries, UnitSeries, Var, xs)

Series = object  # anything indexable by degree, returning a Polynomial


class ShapeError(ValueError):
    pass


# Pfaffians and determinants


def _check_skew(a: Sequence[Sequence]) -> int:
    n = len(a)
    if any(len(row) != n for row in a):
        raise ShapeError("matrix is not square")
    if n % 2:
        raise ShapeError("Pfaffian needs an even-size matrix")
    for i in range(n):
        if a[i][i] != 0:
            raise ShapeError(f"nonzero diagonal entry at {i}")
        for j in range(i + 1, n):
            if a[i][j] != -a[j][i]:
                raise ShapeError(f"matrix is not skew-symmetric at ({i}, {j})")
    return n


def pfaffian(a: Sequence[Sequence], check: bool = True):
    """Pfaffian by expansion along the first remaining row, memoized on the
    set of surviving indices.  Entries may be ints or Polynomials."""
    n = _check_skew(a) if check else len(a)
    memo: dict[tuple[int, ...], object] = {}

    def pf(idx: tuple[int, ...]):
        if not idx:
            return 1
        if idx in memo:
            return memo[idx]
        i, rest = idx[0], idx[1:]
        total = 0
        for k, j in enumerate(rest):
            if a[i][j] == 0:
                continue
            sub = pf(rest[:k] + rest[k + 1:])
            term = a[i][j] * sub
            total = total + term if k % 2 == 0 else total - term
        memo[idx] = total
        return total

    return pf(tuple(range(n)))


def determinant(a: Sequence[Sequence]):
    """Laplace expansion along the first row, memoized on column subsets."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise ShapeError("matrix is not square")
    memo: dict[tuple[int, ...], object] = {}

    def det(row: int, cols: tuple[int, ...]):
        if row == n:
            return 1
        if cols in memo:
            return memo[cols]
        total = 0
        for k, c in enumerate(cols):
            if a[row][c] == 0:
                continue
            term = a[row][c] * det(row + 1, cols[:k] + cols[k + 1:])
            total = total + term if k % 2 == 0 else total - term
        memo[cols] = total
        return total

    return det(0, tuple(range(n)))


# two-row functions and generic Pfaffians


def classical_q_series(variables: Sequence[Var]) -> RatioSeries:
    """sum_d Q_d: the expansion of prod (1+x)/(1-x) over ``variables``."""
    v = tuple(variables)
    return RatioSeries(v, v)


def q_row(d: int, c) -> Polynomial:
    return c[d] if d >= 0 else ZERO


def q_pair(a: int, b: int, c1, c2) -> Polynomial:
    """Q_{(a,b)}(c1, c2) = c1_a c2_b + 2 sum_{p=1}^{b} (-1)^p c1_{a+p} c2_{b-p}."""
    if a == 0 and b == 0:
        return ZERO
    out = c1[a] * c2[b]
    for p in range(1, b + 1):
        t = c1[a + p] * c2[b - p]
        if t:
            out = out + t.scale(2 if p % 2 == 0 else -2)
    return out


def q_lambda(lam: Sequence[int], family: Sequence) -> Polynomial:
    """Pfaffian of the matrix of Q_{(lam_i, lam_j)}(c(i), c(j)), with lam
    padded by a zero part (and c by the unit series) to even length."""
    lam = list(lam)
    if len(family) != len(lam):
        raise ShapeError(f"need {len(lam)} series, got {len(family)}")
    if not lam:
        return ONE
    fam = list(family)
    odd = len(lam) % 2 == 1
    if odd:
        lam.append(0)
        fam.append(UnitSeries())
    r = len(lam)
    mat: list[list] = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            if odd and j == r - 1:
                # the padding column holds the one-row values, so Q_(0) = 1
                v = q_row(lam[i], fam[i])
            else:
                v = q_pair(lam[i], lam[j], fam[i], fam[j])
            mat[i][j] = v
            mat[j][i] = -v
    out = pfaffian(mat, check=False)
    return out if isinstance(out, Polynomial) else Polynomial.const(out)


def p_lambda(lam: Sequence[int], family: Sequence) -> Polynomial:
    """2^{-len(lam)} Q_lam; raises if the division is not exact."""
    return q_lambda(lam, family).exact_div_scalar(2 ** len(lam))


def schur_q(lam: Sequence[int], variables: Sequence[Var]) -> Polynomial:
    s = classical_q_series(variables)
    return q_lambda(lam, [s] * len(lam))


def schur_p(lam: Sequence[int], variables: Sequence[Var]) -> Polynomial:
    s = classical_q_series(variables)
    return p_lambda(lam, [s] * len(lam))


def normalize_sequence(seq: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Rewrite Q_seq as sign * Q_lam with lam a strict partition.

    Parts are sorted decreasingly with the sign of the sorting permutation;
    a repeated part (two zeros included) makes the function vanish, and a
    single zero part is dropped.
    """
    if any(p < 0 for p in seq):
        raise ShapeError("negative parts are not allowed")
    parts = list(seq)
    if len(set(parts)) != len(parts):
        return 0, ()
    inversions = sum(1 for i in range(len(parts)) for j in range(i + 1, len(parts))
                     if parts[i] < parts[j])
    sign = -1 if inversions % 2 else 1
    lam = tuple(p for p in sorted(parts, reverse=True) if p > 0)
    return sign, lam


def is_strict_partition(lam: Sequence[int]) -> bool:
    return all(p > 0 for p in lam) and all(a > b for a, b in zip(lam, lam[1:]))


def strict_partitions_inside(outer: Sequence[int]) -> list[tuple[int, ...]]:
    """All strict partitions contained in ``outer`` (including the empty one)."""
    out = []

    def rec(i: int, cap: int, acc: list[int]):
        out.append(tuple(acc))
        if i >= len(outer):
            return
        for p in range(min(cap - 1, outer[i]), 0, -1):
            acc.append(p)
            rec(i + 1, p, acc)
            acc.pop()

    rec(0, 10 ** 9, [])
    return sorted(out)


# marked shifted tableaux
#
# A letter is encoded as an integer code 2a-1 for a' and 2a for a, where a
# is the position (1-based) in the ordered alphabet, so that 1' < 1 < 2' < 2.


def shifted_cells(lam: Sequence[int]) -> list[tuple[int, int]]:
    return [(i, j) for i, p in enumerate(lam, 1) for j in range(i, i + p)]


def marked_shifted_tableaux(lam: Sequence[int], size: int,
                            allowed: Callable[[int], bool] | None = None):
    """Yield fillings as dicts cell -> letter code over an alphabet of
    ``size`` letters; ``allowed(code)`` optionally restricts the letters."""
    if not is_strict_partition(lam) and lam:
        raise ShapeError(f"{tuple(lam)} is not a strict partition")
    cells = shifted_cells(lam)
    codes = [c for c in range(1, 2 * size + 1) if allowed is None or allowed(c)]
    filling: dict[tuple[int, int], int] = {}

    def rec(k: int):
        if k == len(cells):
            yield dict(filling)
            return
        i, j = cells[k]
        left = filling.get((i, j - 1))
        up = filling.get((i - 1, j))
        for c in codes:
            if left is not None:
                if c < left or (c == left and c % 2 == 1):
                    continue
            if up is not None:
                if c < up or (c == up and c % 2 == 0):
                    continue
            filling[(i, j)] = c
            yield from rec(k + 1)
            del filling[(i, j)]

    yield from rec(0)


def _letter(code: int) -> int:
    return (code + 1) // 2


def _primed(code: int) -> bool:
    return code % 2 == 1


def q_lambda_tableaux(lam: Sequence[int], variables: Sequence[Var] | int,
                      allowed: Callable[[int], bool] | None = None) -> Polynomial:
    """sum over marked shifted tableaux T of prod x_{|T(i,j)|}.

    ``variables`` is either an ordered variable list or a count N meaning
    x_1..x_N.
    """
    if isinstance(variables, int):
        variables = xs(range(1, variables + 1))
    variables = list(variables)
    counts: Counter = Counter()
    for t in marked_shifted_tableaux(lam, len(variables), allowed):
        counts[tuple(sorted(_letter(c) for c in t.values()))] += 1
    out: dict = {}
    for letters, c in counts.items():
        exps: dict[Var, int] = {}
        for a in letters:
            v = variables[a - 1]
            exps[v] = exps.get(v, 0) + 1
        mono = Polynomial.monomial(exps)
        for m, _ in mono.items():
            out[m] = out.get(m, 0) + c
    return Polynomial(out)


def multiparameter_q(lam: Sequence[int], variables: Sequence[Var] | int,
                     t: Sequence[Polynomial | int]) -> Polynomial:
    """sum over T of prod (x_{|T(i,j)|} - eps(T(i,j)) t_{j-i+1}), where eps is
    +1 on unprimed and -1 on primed letters."""
    if isinstance(variables, int):
        variables = xs(range(1, variables + 1))
    variables = list(variables)
    if lam and len(t) < lam[0]:
        raise ShapeError(f"need at least {lam[0]} parameters, got {len(t)}")
    tp = [Polynomial.const(v) if isinstance(v, int) else v for v in t]
    counts: Counter = Counter()
    for tab in marked_shifted_tableaux(lam, len(variables)):
        key = tuple(sorted((_letter(c), _primed(c), j - i + 1) for (i, j), c in tab.items()))
        counts[key] += 1
    factor_cache: dict = {}
    out = ZERO
    for key, c in counts.items():
        term = Polynomial.const(c)
        for f in key:
            if f not in factor_cache:
                a, primed, d = f
                xv = Polynomial.var(*variables[a - 1])
                factor_cache[f] = xv + tp[d - 1] if primed else xv - tp[d - 1]
            term = term * factor_cache[f]
        out = out + term
    return out


def q_expansion(f: Polynomial, variables: Sequence[Var]) -> dict[tuple[int, ...], Fraction]:
    """Coefficients a_lam with f = sum a_lam Q_lam(variables).

    Triangular elimination: the lex-leading monomial of Q_lam is
    2^len(lam) x^lam, so repeatedly peel off the leading term of f.  Raises
    ShapeError when a leading exponent is not a strict partition, which
    means f is not in the span.
    """
    order = {v: pos for pos, v in enumerate(variables)}
    cache: dict[tuple[int, ...], Polynomial] = {}
    out: dict[tuple[int, ...], Fraction] = {}

    def exponent_vector(mono) -> tuple[int, ...]:
        vec = [0] * len(order)
        for al, i, e in mono:
            if (al, i) not in order:
                raise ShapeError(f"variable {al}{i} is outside the alphabet")
            vec[order[(al, i)]] = e
        return tuple(vec)

    rest = f
    while rest:
        mono, c = max(rest.items(), key=lambda t: exponent_vector(t[0]))
        vec = exponent_vector(mono)
        k = len(vec)
        while k and vec[k - 1] == 0:
            k -= 1
        lam = vec[:k]
        if not is_strict_partition(lam):
            raise ShapeError(f"leading exponent {vec} is not a strict partition")
        if lam not in cache:
            cache[lam] = q_lambda_tableaux(lam, variables)
        a = Fraction(c) / 2 ** len(lam)
        out[lam] = out.get(lam, 0) + a
        rest = rest - cache[lam].scale(a)
    return dict(sorted(out.items()))
