import pytest
from hypothesis import given, strategies as st

from schubloci.involution import (atoms, check_inv_recurrence, classify, cyc, dearc,
                                  descent_target, inv_schubert, inv_stanley, involution_diagram,
                                  involution_essential_set, involution_length, involution_shape,
                                  minimal_element, normalized, reduced_involution_words)
from schubloci.perms import (Permutation, PermutationError, demazure, fpf_identity,
                             fpf_involutions, involutions, is_vexillary, pad)
from schubloci.poly import ONE, ZERO, complete, divided_difference, elementary, x, xs
from schubloci.schubert import schubert_literal

P = Permutation.parse
inv5 = st.sampled_from(involutions(5))
fpf6 = st.sampled_from(fpf_involutions(6))


def test_atoms_and_words():
    assert sorted(a.oneline for a in atoms(P("(1,3)"), "O")) == [(2, 3, 1), (3, 1, 2)]
    assert sorted(a.oneline for a in atoms(P("(1,4)(2,3)"), "Sp")) == [(1, 3, 4, 2), (3, 1, 2, 4)]
    assert [a.trimmed() for a in atoms(Permutation.identity(3), "O")] == [Permutation(())]
    assert reduced_involution_words(P("(1,3)"), "O") == [(1, 2), (2, 1)]
    assert sorted(reduced_involution_words(P("(1,4)(2,3)"), "Sp")) == [(2, 1), (2, 3)]
    assert sorted(reduced_involution_words(P("(1,4)(2,3)"), "O")) == sorted(
        [(1, 3, 2, 3), (1, 2, 3, 2), (3, 1, 2, 3), (2, 1, 3, 2),
         (2, 3, 1, 2), (3, 2, 1, 2), (3, 1, 2, 1), (1, 3, 2, 1)])


def test_goldens():
    assert inv_schubert(P("(1,2)"), "O") == x(1)
    assert inv_schubert(P("(1,4)(2,3)"), "Sp") == (x(1) + x(2)) * (x(1) + x(3))
    assert inv_schubert(Permutation.identity(4), "O") == ONE
    assert inv_schubert(fpf_identity(4), "Sp") == ONE
    win = xs(range(-3, 0))
    assert inv_stanley(P("(1,4)(2,3)"), "Sp", 3) == elementary(2, win) + complete(2, win)
    assert inv_stanley(Permutation.identity(3), "O", 2) == ONE
    # F^O_(1,3) at m=2 from the words 12 and 21
    expect = schubert_literal(P("231"), 2).zero_out(lambda al, i: i > 0) \
        + schubert_literal(P("312"), 2).zero_out(lambda al, i: i > 0)
    assert inv_stanley(P("(1,3)"), "O", 2) == expect


def test_cyc():
    assert cyc(Permutation.identity(3)) == 0
    assert cyc(P("(1,2)(3,4)")) == 2
    assert cyc(fpf_identity(8)) == 4


def test_recurrence_goldens():
    z = P("(1,4)(2,3)")
    v = check_inv_recurrence(z, "Sp", 1)
    assert v.ok and v.lhs == x(1) + x(2) and v.target == P("(1,3)(2,4)")
    v = check_inv_recurrence(z, "Sp", 2)
    assert v.ok and v.target is None and v.lhs == ZERO
    for i in (1, 2, 3):
        assert check_inv_recurrence(minimal_element(4, "O"), "O", i).lhs == ZERO
        assert check_inv_recurrence(minimal_element(4, "Sp"), "Sp", i).lhs == ZERO


def test_diagrams():
    y = P("(1,3)(2,5)")
    assert involution_essential_set(y, "O") == {(2, 2), (4, 2)}
    assert involution_essential_set(y, "Sp") == {(2, 1), (4, 2)}
    assert involution_diagram(Permutation.identity(4), "O") == frozenset()
    assert involution_diagram(P("(1,4)(2,3)"), "Sp") == {(2, 1), (3, 1)}
    assert involution_shape(P("(1,4)(2,3)"), "Sp") == (2,)
    assert involution_shape(fpf_identity(6), "Sp") == ()
    assert involution_shape(Permutation.identity(4), "O") == ()


def test_shape_of_grassmannian_example():
    # the diagram has rows of size 1, 2, 2, 3, so the shape has 8 boxes
    y = P("(1,5)(2,6)(4,7)")
    assert sorted(len([c for c in involution_diagram(y, "O") if c[0] == r]) for r in range(1, 8)) \
        == [0, 0, 0, 1, 2, 2, 3]
    assert involution_shape(y, "O") == (4, 3, 1)


def test_dearc():
    z = P("(1,3)(2,5)(4,6)")
    assert dearc(z, "R") == P("(2,5)(4,6)", 6)
    assert dearc(z, "L") == P("(1,3)(2,5)", 6)
    assert dearc(P("(1,2)"), "R") == Permutation.identity(2)
    assert dearc(P("(1,4)(2,3)"), "R") == dearc(P("(1,4)(2,3)"), "L") == P("(1,4)", 4)
    with pytest.raises(PermutationError):
        dearc(P("(1,3)"), "R")


def test_classify():
    c = classify(P("(1,5)(2,6)(4,7)"))
    assert c.i_grassmannian == 4 and c.essential_o == ((4, 2), (4, 4))
    c = classify(P("(1,3)(2,5)"))
    assert c.vexillary and not c.sp_vexillary
    c = classify(P("(1,2)(3,4)"))
    assert not c.vexillary and c.essential_sp == ()
    c = classify(P("(1,3)(2,5)(4,6)"))
    assert c.fpf_i_grassmannian and c.i_grassmannian is None
    with pytest.raises(PermutationError):
        classify(P("231"))


def test_validation():
    with pytest.raises(PermutationError):
        inv_schubert(P("231"), "O")
    with pytest.raises(PermutationError):
        inv_schubert(P("(1,3)"), "Sp")
    with pytest.raises(ValueError):
        inv_schubert(P("(1,2)"), "B")


@given(inv5)
def test_atoms_conjugate_to_z(z):
    one = Permutation.identity(z.n)
    for w in atoms(z, "O"):
        assert demazure(demazure(w.inverse(), one), w).padded(z.n) == z
        assert w.length() == involution_length(z, "O")


@given(fpf6)
def test_sp_atoms(z):
    one = fpf_identity(z.n)
    for w in atoms(z, "Sp"):
        assert demazure(demazure(w.inverse(), one), w).padded(z.n) == z


@given(inv5, st.integers(1, 4), st.integers(0, 1))
def test_o_recurrence(z, i, m):
    assert check_inv_recurrence(z, "O", i, m).ok


@given(fpf6, st.integers(1, 5), st.integers(0, 1))
def test_sp_recurrence(z, i, m):
    assert check_inv_recurrence(z, "Sp", i, m).ok


@given(inv5)
def test_o_diagram_size_is_involution_length(y):
    assert len(involution_diagram(y, "O")) == involution_length(y, "O")
    assert sum(involution_shape(y, "O")) == involution_length(y, "O")


@given(fpf6)
def test_sp_diagram_size(z):
    assert len(involution_diagram(z, "Sp")) == involution_length(z, "Sp")


@given(inv5)
def test_padding_invariance(y):
    assert inv_schubert(pad(y, 2, "right"), "O") == inv_schubert(y, "O")


@given(fpf6)
def test_sp_padding_invariance(z):
    assert inv_schubert(pad(z, 2, "right", "Sp"), "Sp") == inv_schubert(z, "Sp")


@given(inv5)
def test_normalized_has_even_coefficients_o(y):
    if cyc(y):
        assert all(c % 2 == 0 for _, c in normalized(y, "O").items())


@given(fpf6)
def test_dearc_preserves_sp_data(z):
    assert involution_diagram(dearc(z, "L"), "Sp") == involution_diagram(z, "Sp")
    for side in ("L", "R"):
        assert involution_shape(dearc(z, side), "Sp") == involution_shape(z, "Sp")


def test_descent_target_leaves_fpf_family():
    assert descent_target(P("(1,2)(3,4)"), 1, "Sp") is None
    assert descent_target(P("(1,2)"), 1, "O") == Permutation.identity(2)


@given(inv5)
def test_vexillary_involution_stanley_is_symmetric(y):
    f = inv_stanley(y, "O", 3)
    assert divided_difference(f, -3) == ZERO
    if is_vexillary(y):
        assert f.is_homogeneous() or f == ONE
