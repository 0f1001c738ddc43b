"""Involution combinatorics and involution Schubert/Stanley polynomials.

Two flavors appear throughout: "O" works with all involutions and starts
from the identity, "Sp" works with fixed-point-free involutions and starts
from (1,2)(3,4)...(n-1,n).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .perms import (Cell, Permutation, PermutationError, conjugate, demazure_left,
                    demazure_right, fpf_identity, rothe_diagram, essential_set,
                    is_chain, is_vexillary, chain_sorted)
from .poly import ZERO, Polynomial, divided_difference
from .schubert import schubert_bjs, stanley

FLAVORS = ("O", "Sp")


def check_flavor(flavor: str) -> None:
    if flavor not in FLAVORS:
        raise ValueError(f"flavor must be one of {FLAVORS}, got {flavor!r}")


def validate(z: Permutation, flavor: str) -> None:
    check_flavor(flavor)
    if not z.is_involution():
        raise PermutationError(f"{z} is not an involution")
    if flavor == "Sp" and not z.is_fpf_involution():
        raise PermutationError(f"{z.cycle_string()} is not fixed-point-free")


def minimal_element(n: int, flavor: str) -> Permutation:
    return Permutation.identity(n) if flavor == "O" else fpf_identity(n)


def cyc(y: Permutation) -> int:
    return sum(1 for i in range(1, y.n + 1) if y(i) > i)


def conjugate_step(z: Permutation, i: int) -> Permutation:
    """s_i o z o s_i (Demazure)."""
    return demazure_left(i, demazure_right(z, i))


# breadth-first search from the minimal element


@dataclass
class _Layer:
    length: dict[tuple[int, ...], int]
    preds: dict[tuple[int, ...], list[tuple[tuple[int, ...], int]]]


@lru_cache(maxsize=None)
def _search(n: int, flavor: str) -> _Layer:
    start = minimal_element(n, flavor)
    length = {start.oneline: 0}
    preds: dict[tuple[int, ...], list] = {start.oneline: []}
    frontier = [start]
    level = 0
    while frontier:
        level += 1
        nxt = []
        for z in frontier:
            for i in range(1, n):
                zz = conjugate_step(z, i)
                if zz == z:
                    continue
                key = zz.oneline
                if key not in length:
                    length[key] = level
                    preds[key] = []
                    nxt.append(zz)
                if length[key] == level:
                    preds[key].append((z.oneline, i))
        frontier = nxt
    return _Layer(length, preds)


def _layer_for(z: Permutation, flavor: str) -> _Layer:
    validate(z, flavor)
    if flavor == "Sp" and z.n % 2:
        raise PermutationError("Sp flavor needs an even size")
    return _search(z.n, flavor)


def involution_length(z: Permutation, flavor: str) -> int:
    return _layer_for(z, flavor).length[z.oneline]


@lru_cache(maxsize=None)
def _atoms(key: tuple[int, ...], n: int, flavor: str) -> frozenset[tuple[int, ...]]:
    layer = _search(n, flavor)
    if not layer.preds[key]:
        return frozenset({tuple(range(1, n + 1))})
    out = set()
    for pred, i in layer.preds[key]:
        for w in _atoms(pred, n, flavor):
            v = list(w)
            v[i - 1], v[i] = v[i], v[i - 1]
            assert v[i - 1] > v[i], "atom extension must increase length"
            out.add(tuple(v))
    return frozenset(out)


def atoms(z: Permutation, flavor: str) -> list[Permutation]:
    """Minimal-length w with w^{-1} o 1^K o w = z, sorted."""
    layer = _layer_for(z, flavor)
    assert z.oneline in layer.length
    return sorted(Permutation(w) for w in _atoms(z.oneline, z.n, flavor))


def reduced_involution_words(z: Permutation, flavor: str) -> list[tuple[int, ...]]:
    words = set()
    for w in atoms(z, flavor):
        words.update(w.reduced_words())
    return sorted(words)


def descent_target(z: Permutation, i: int, flavor: str) -> Permutation | None:
    """The involution z' one step below z with s_i o z' o s_i = z, or None.

    When z(i) = i+1 the Demazure conjugate of z by s_i is z itself, and the
    involution below is z s_i (this leaves the fpf family, so Sp gets None).
    """
    if z(i) < z(i + 1):
        return None
    if z(i) == i + 1:
        if flavor == "Sp":
            return None
        return z.right_mul_simple(i)
    return z.left_mul_simple(i).right_mul_simple(i)


# polynomials


def inv_schubert(z: Permutation, flavor: str, m: int = 0) -> Polynomial:
    """Involution Schubert polynomial at window m: the compatible-sequence
    sum over all reduced involution words, grouped by atom."""
    out = ZERO
    for w in atoms(z, flavor):
        out = out + schubert_bjs(w, m)
    return out


def inv_stanley(z: Permutation, flavor: str, m: int) -> Polynomial:
    out = ZERO
    for w in atoms(z, flavor):
        out = out + stanley(w, m)
    return out


def normalized(z: Permutation, flavor: str, m: int = 0) -> Polynomial:
    """2^{cyc} S^O_z for O, and S^Sp_z for Sp."""
    p = inv_schubert(z, flavor, m)
    return p.scale(2 ** cyc(z)) if flavor == "O" else p


@dataclass(frozen=True)
class RecurrenceVerdict:
    z: Permutation
    flavor: str
    i: int
    window: int
    target: Permutation | None
    factor: int
    lhs: Polynomial
    rhs: Polynomial

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def check_inv_recurrence(z: Permutation, flavor: str, i: int, m: int = 0) -> RecurrenceVerdict:
    """Check d_i (2^{cyc(z)} S_z) = 2^{cyc(z)-cyc(z')} (2^{cyc(z')} S_z') for O,
    and d_i S_z = S_z' for Sp, where z' is ``descent_target`` (or 0).

    The power of 2 is attached to the normalized polynomials; on the raw
    polynomials it cancels and the rule reads d_i S_z = S_z'.
    """
    validate(z, flavor)
    lhs = divided_difference(normalized(z, flavor, m), i)
    target = descent_target(z, i, flavor)
    if target is None:
        return RecurrenceVerdict(z, flavor, i, m, None, 0, lhs, ZERO)
    factor = 2 ** (cyc(z) - cyc(target)) if flavor == "O" else 1
    rhs = normalized(target, flavor, m).scale(factor)
    return RecurrenceVerdict(z, flavor, i, m, target, factor, lhs, rhs)


# diagrams, codes and shapes


def involution_diagram(y: Permutation, flavor: str) -> frozenset[Cell]:
    check_flavor(flavor)
    d = rothe_diagram(y)
    if flavor == "O":
        return frozenset(c for c in d if c[0] >= c[1])
    return frozenset(c for c in d if c[0] > c[1])


def involution_essential_set(y: Permutation, flavor: str) -> frozenset[Cell]:
    return essential_set(involution_diagram(y, flavor))


def involution_code(y: Permutation, flavor: str) -> tuple[int, ...]:
    check_flavor(flavor)
    off = 0 if flavor == "O" else 1
    return tuple(sum(1 for j in range(1, i + 1 - off) if y(i) > j and y(j) > i)
                 for i in range(1, y.n + 1))


def involution_shape(y: Permutation, flavor: str) -> tuple[int, ...]:
    return conjugate(involution_code(y, flavor))


def is_sp_vexillary(y: Permutation) -> bool:
    return is_vexillary(y) and is_chain(involution_essential_set(y, "Sp"))


def dearc(z: Permutation, side: str) -> Permutation:
    """Drop the 2-cycles (a, b) of an fpf involution that have no other
    endpoint strictly inside them on the given side; keep the size n."""
    if not z.is_fpf_involution():
        raise PermutationError(f"{z.cycle_string()} is not fixed-point-free")
    if side not in ("L", "R"):
        raise ValueError("side must be 'L' or 'R'")
    cycles = z.two_cycles()
    kept = []
    for a, b in cycles:
        ends = [bj for _, bj in cycles] if side == "R" else [aj for aj, _ in cycles]
        if any(a < e < b for e in ends):
            kept.append((a, b))
    return Permutation.from_cycles(kept, z.n)


def i_grassmannian_row(y: Permutation) -> int | None:
    """The m with Ess(D^O(y)) inside row m (0 when empty), else None."""
    ess = involution_essential_set(y, "O")
    rows = {i for i, _ in ess}
    if not rows:
        return 0
    if len(rows) == 1:
        return rows.pop()
    return None


def is_fpf_i_grassmannian(z: Permutation) -> bool:
    return i_grassmannian_row(dearc(z, "R")) is not None


@dataclass(frozen=True)
class Classification:
    vexillary: bool
    sp_vexillary: bool
    i_grassmannian: int | None
    fpf_i_grassmannian: bool | None
    essential_o: tuple[Cell, ...]
    essential_sp: tuple[Cell, ...]
    shape_o: tuple[int, ...]
    shape_sp: tuple[int, ...] | None


def classify(y: Permutation) -> Classification:
    if not y.is_involution():
        raise PermutationError(f"{y} is not an involution")
    fpf = y.is_fpf_involution()
    return Classification(
        vexillary=is_vexillary(y),
        sp_vexillary=is_sp_vexillary(y),
        i_grassmannian=i_grassmannian_row(y),
        fpf_i_grassmannian=is_fpf_i_grassmannian(y) if fpf else None,
        essential_o=tuple(chain_sorted(involution_essential_set(y, "O"))),
        essential_sp=tuple(chain_sorted(involution_essential_set(y, "Sp"))),
        shape_o=involution_shape(y, "O"),
        shape_sp=involution_shape(y, "Sp") if fpf else None,
    )
