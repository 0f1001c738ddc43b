import random

import pytest
from hypothesis import given, strategies as st

from schubloci.poly import ONE, Polynomial, complete, elementary, x, xs
from schubloci.schurpq import (ShapeError, classical_q_series, determinant,
                               marked_shifted_tableaux, multiparameter_q, p_lambda, pfaffian,
                               q_expansion, q_lambda, q_lambda_tableaux, q_pair, schur_p,
                               schur_q, strict_partitions_inside)

STRICT = strict_partitions_inside((4, 3, 2, 1))


def random_skew(n, rng):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a[i][j] = rng.randint(-9, 9)
            a[j][i] = -a[i][j]
    return a


def test_pfaffian_small():
    assert pfaffian([[0, 7], [-7, 0]]) == 7
    a = [[Polynomial.var("t", 10 * i + j) if i < j else 0 for j in range(1, 5)] for i in range(1, 5)]
    for i in range(4):
        for j in range(i):
            a[i][j] = -a[j][i]
    t = lambda i, j: Polynomial.var("t", 10 * i + j)
    assert pfaffian(a) == t(1, 2) * t(3, 4) - t(1, 3) * t(2, 4) + t(1, 4) * t(2, 3)
    assert pfaffian([]) == 1


def test_pfaffian_rejects():
    with pytest.raises(ShapeError):
        pfaffian([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])
    with pytest.raises(ShapeError):
        pfaffian([[0, 1], [1, 0]])
    with pytest.raises(ShapeError):
        pfaffian([[1, 1], [-1, 0]])


@given(st.integers(0, 4), st.integers(0, 10 ** 6))
def test_pfaffian_squared_is_determinant(half, seed):
    a = random_skew(2 * half, random.Random(seed))
    assert pfaffian(a) ** 2 == determinant(a)


def test_classical_goldens():
    v = xs([1, 2])
    assert schur_q((), v) == ONE and schur_p((), v) == ONE
    assert schur_q((1,), v) == 2 * (x(1) + x(2))
    w = xs([1, 2, 3])
    assert schur_p((2,), w) == complete(2, w) + elementary(2, w)
    assert q_lambda_tableaux((1,), 1) == 2 * x(1)
    assert q_lambda_tableaux((), 3) == ONE
    assert schur_q((2, 1), xs(range(1, 5))) == q_lambda_tableaux((2, 1), 4)


def test_tableau_count():
    # Q_(1) on one letter: the fillings 1' and 1
    assert len(list(marked_shifted_tableaux((1,), 1))) == 2
    with pytest.raises(ShapeError):
        list(marked_shifted_tableaux((1, 1), 2))


@pytest.mark.parametrize("lam", STRICT)
@pytest.mark.parametrize("n", [3, 4])
def test_pfaffian_route_matches_tableaux(lam, n):
    assert schur_q(lam, xs(range(1, n + 1))) == q_lambda_tableaux(lam, n)


@pytest.mark.parametrize("lam", STRICT)
def test_p_integrality(lam):
    v = xs(range(1, 5))
    p = schur_p(lam, v)
    assert all(isinstance(c, int) for _, c in p.items())
    assert p.scale(2 ** len(lam)) == schur_q(lam, v)


@given(st.integers(0, 4), st.integers(0, 4))
def test_two_row_antisymmetry(a, b):
    c = classical_q_series(xs([1, 2, 3]))
    assert q_pair(a, b, c, c) == -q_pair(b, a, c, c)


@pytest.mark.parametrize("lam", [l for l in STRICT if len(l) % 2])
def test_zero_padding(lam):
    v = xs(range(1, 4))
    c = classical_q_series(v)
    assert q_lambda(list(lam) + [0], [c] * (len(lam) + 1)) == schur_q(lam, v)


@pytest.mark.parametrize("lam", [(), (1,), (2, 1), (3, 1), (3, 2, 1)])
def test_multiparameter_at_zero(lam):
    for n in range(1, 4):
        assert multiparameter_q(lam, n, [0] * max(lam or (0,))) == q_lambda_tableaux(lam, n)


def test_multiparameter_golden():
    t1 = Polynomial.var("t", 1)
    assert multiparameter_q((1,), 1, [t1]) == 2 * x(1)
    with pytest.raises(ShapeError):
        multiparameter_q((2,), 2, [1])


@given(st.lists(st.integers(-5, 5), min_size=5, max_size=5))
def test_multiparameter_ignores_tail(t):
    lam = (2, 1)
    assert multiparameter_q(lam, 3, t) == multiparameter_q(lam, 3, t[:2] + [0, 0, 0])


def test_q_expansion():
    v = xs(range(1, 4))
    f = schur_q((2, 1), v) + schur_q((3,), v).scale(3)
    assert q_expansion(f, v) == {(2, 1): 1, (3,): 3}
    with pytest.raises(ShapeError):
        q_expansion(x(1) * x(2), v)


def test_p_lambda_halves_q_lambda():
    v = xs(range(1, 4))
    c = classical_q_series(v)
    assert p_lambda((3, 1), [c, c]).scale(4) == q_lambda((3, 1), [c, c])


def test_zero_parts():
    c = classical_q_series(xs([1, 2]))
    assert q_lambda((0,), [c]) == ONE
    assert q_lambda((0, 0), [c, c]) == 0
    assert q_lambda((0, 1), [c, c]) == -schur_q((1,), xs([1, 2]))
