"""Exhaustive sweeps of structural invariants over small n."""

import itertools

import pytest
from hypothesis import given, strategies as st

from schubloci.involution import (atoms, inv_schubert, inv_stanley, involution_diagram,
                                  involution_length, is_sp_vexillary,
                                  reduced_involution_words)
from schubloci.loci import extract_data
from schubloci.perms import (all_permutations, demazure, direct_sum,
                             essential_set, fpf_identity, fpf_involutions, involutions,
                             is_chain, is_vexillary, one_times, rothe_diagram)
from schubloci.poly import (ONE, ZERO, Polynomial, RatioSeries, TruncatedSeries,
                            divided_difference, xs)
from schubloci.schubert import double_schubert, schubert_bjs, shift_down, stanley
from schubloci.schurpq import classical_q_series, normalize_sequence, q_lambda, schur_q

from test_poly import polys

S4 = all_permutations(4)
S5 = all_permutations(5)
I5 = involutions(5)
FPF6 = fpf_involutions(6)


def swap(f, a, b):
    return f.swap(("x", a), ("x", b))


def test_involution_diagram_sizes():
    for y in involutions(6):
        assert len(involution_diagram(y, "O")) == involution_length(y, "O") \
            == len(reduced_involution_words(y, "O")[0] if involution_length(y, "O") else ())
    for z in FPF6:
        assert len(involution_diagram(z, "Sp")) == involution_length(z, "Sp")


def test_vexillary_row_sets_nest():
    for w in all_permutations(6):
        d = rothe_diagram(w)
        rows = [frozenset(j for i, j in d if i == r) for r in range(1, 7)]
        nested = all(a <= b or b <= a for a, b in itertools.combinations(rows, 2))
        assert is_vexillary(w) == is_chain(essential_set(d)) == nested


def test_demazure_associative():
    for u, v, w in itertools.product(S4, repeat=3):
        assert demazure(demazure(u, v), w) == demazure(u, demazure(v, w))


def test_atoms_nonempty_and_equal_length():
    for flavor, family in (("O", involutions(6)), ("Sp", FPF6)):
        for y in family:
            lengths = {w.length() for w in atoms(y, flavor)}
            assert len(lengths) == 1


@given(polys(3), st.sampled_from([-2, -1, 1, 2]))
def test_braid_and_nilpotence(f, i):
    j = 1 if i == -1 else i + 1
    d = divided_difference
    assert d(d(f, i), i) == ZERO
    assert d(d(d(f, i), j), i) == d(d(d(f, j), i), j)


def _geometric(v, cap):
    return TruncatedSeries([Polynomial.var(*v) ** d for d in range(cap + 1)], cap)


def _linear(v, cap):
    return TruncatedSeries([ONE, Polynomial.var(*v)], cap)


@pytest.mark.parametrize("num_size", range(5))
@pytest.mark.parametrize("den_size", range(5))
def test_ratio_series_matches_product_of_factors(num_size, den_size):
    cap = 6
    num, den = xs(range(1, num_size + 1)), xs(range(1, den_size + 1), "y")
    prod = TruncatedSeries.one(cap)
    for v in num:
        prod = prod * _linear(v, cap)
    for v in den:
        prod = prod * _geometric(v, cap)
    assert RatioSeries(num, den).truncate(cap) == prod


@given(st.lists(polys(2), min_size=3, max_size=3), st.lists(polys(2), min_size=3, max_size=3),
       st.lists(polys(2), min_size=3, max_size=3))
def test_truncated_series_associative(a, b, c):
    a, b, c = (TruncatedSeries(p, 2) for p in (a, b, c))
    assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("m", [0, 1, 2])
def test_schubert_stability(m):
    for w in S4:
        assert schubert_bjs(w.padded(5), m) == schubert_bjs(w, m)


def test_stanley_symmetric_in_window():
    for w in S5:
        f = stanley(w, 3)
        for a, b in itertools.combinations((-3, -2, -1), 2):
            assert swap(f, a, b) == f


def test_double_schubert_recurrence():
    for w in S4:
        for i in range(1, 4):
            lhs = divided_difference(double_schubert(w), i)
            ws = w.right_mul_simple(i)
            rhs = double_schubert(ws) if ws.length() < w.length() else ZERO
            assert lhs == rhs


def test_involution_degree():
    for y in I5:
        d = involution_length(y, "O")
        assert all(sum(e for _, _, e in mono) == d for mono, _ in inv_schubert(y, "O").items())
    for z in FPF6:
        d = involution_length(z, "Sp")
        assert all(sum(e for _, _, e in mono) == d for mono, _ in inv_schubert(z, "Sp").items())


def test_involution_window_coherence():
    for y in I5:
        for m in (1, 2):
            assert inv_schubert(y, "O", m) == shift_down(inv_schubert(one_times(m, y), "O"), m)
    pad = fpf_identity(2)
    for z in FPF6:
        assert inv_schubert(z, "Sp", 2) == shift_down(inv_schubert(direct_sum(pad, z), "Sp"), 2)


def test_involution_stanley_symmetric():
    for flavor, family in (("O", I5), ("Sp", FPF6)):
        for y in family:
            f = inv_stanley(y, flavor, 3)
            for a, b in itertools.combinations((-3, -2, -1), 2):
                assert swap(f, a, b) == f


def test_q_alternating_and_zero_padding():
    c = classical_q_series(xs(range(1, 4)))
    for length in (1, 2, 3):
        for seq in itertools.product(range(5), repeat=length):
            q = q_lambda(seq, [c] * length)
            if 0 not in seq:
                # with a zero already present the padded sequence repeats 0
                assert q_lambda(seq + (0,), [c] * (length + 1)) == q
            sign, lam = normalize_sequence(seq)
            assert q == (schur_q(lam, xs(range(1, 4))).scale(sign) if sign else ZERO)
            for i in range(length - 1):
                s = list(seq)
                s[i], s[i + 1] = s[i + 1], s[i]
                if s[i] and s[i + 1]:
                    assert q_lambda(s, [c] * length) == -q


def test_extract_data_matches_shapes():
    # extract_data raises when its partition disagrees with the combinatorial shape
    for w in all_permutations(6):
        if is_vexillary(w):
            extract_data(w, "Gr")
    for y in involutions(6):
        if is_vexillary(y):
            extract_data(y, "LG")
    for z in FPF6:
        if is_sp_vexillary(z):
            extract_data(z, "OG")
