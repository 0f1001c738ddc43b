"""Determinant and Pfaffian formulas driven by essential-set data.

Each formula reads a chain of essential cells (i_p, j_p), sorted from
southwest to northeast, and builds series c(k) for k in (k_{p-1}, k_p]:

* Gr (vexillary w): prod (1+x_a)/prod (1-y_b) with a <= i_p, b <= j_p,
  evaluated as det(c(k)_{lam_k + t - k}).
* LG (vexillary involution y): prod (1+x_a)/prod (1-x_b), evaluated as a
  Q Pfaffian.
* OG (fpf involution z through an Sp-vexillary representative): the
  complete symmetric part plus a signed monomial x_{j_p+1}...x_{i_p} in
  degree i_p - j_p, evaluated as a P Pfaffian.

At window m the products also run over the letters x_{-m..-1} (and
y_{-m..-1}), which is the pad-and-shift of 1_m x w.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .involution import (dearc, involution_essential_set, involution_shape, inv_schubert,
                         is_sp_vexillary)
from .perms import (Cell, Permutation, PermutationError, chain_le, chain_sorted, essential_set,
                    fpf_involutions, is_chain, is_vexillary, rank, rothe_diagram, shape)
from .poly import (Polynomial, PolynomialError, RatioSeries, CorrectedSeries, window_indices, xs)
from .schurpq import determinant, multiparameter_q, p_lambda, q_lambda, q_lambda_tableaux


class LocusError(ValueError):
    pass


@dataclass(frozen=True)
class VexillaryData:
    flavor: str
    positions: tuple[Cell, ...]
    k: tuple[int, ...]
    mu: tuple[int, ...]
    lam: tuple[int, ...]

    def block(self, kk: int) -> int:
        """The index p with k_{p-1} < kk <= k_p."""
        for p, kp in enumerate(self.k):
            if kk <= kp:
                return p
        raise IndexError(kk)


def extract_data(source: Permutation, flavor: str) -> VexillaryData:
    """Essential-set data for flavor "Gr", "LG" or "OG".

    The partition is computed from the data and then compared with the
    combinatorial shape; a mismatch raises, since it would mean the source
    is outside the formula's hypotheses.
    """
    if flavor == "Gr":
        if not is_vexillary(source):
            raise LocusError(f"{source} is not vexillary")
        ess = essential_set(rothe_diagram(source))
    elif flavor == "LG":
        if not source.is_involution() or not is_vexillary(source):
            raise LocusError(f"{source.cycle_string()} is not a vexillary involution")
        ess = involution_essential_set(source, "O")
    elif flavor == "OG":
        if not source.is_involution() or not is_sp_vexillary(source):
            raise LocusError(f"{source.cycle_string()} is not Sp-vexillary")
        ess = involution_essential_set(source, "Sp")
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    if not is_chain(ess):
        raise LocusError("essential set is not a chain")
    positions = tuple(chain_sorted(ess))
    ks = tuple(j - rank(source, i, j) for i, j in positions)
    if any(a >= b for a, b in zip(ks, ks[1:])):
        raise LocusError(f"k values are not increasing: {ks}")
    n = source.n
    lam: list[int] = []
    mu: list[int] = []
    prev = 0
    for (i, j), kp in zip(positions, ks):
        if flavor == "Gr":
            mu.append(n + i - j)
            lam.extend([i - rank(source, i, j)] * (kp - prev))
        elif flavor == "LG":
            mu.append(i - j + 1)
            lam.extend(i - j + 1 + kp - kk for kk in range(prev + 1, kp + 1))
        else:
            mu.append(i - j)
            lam.extend(i - j + kp - kk for kk in range(prev + 1, kp + 1))
        prev = kp
    expected = {"Gr": shape, "LG": lambda y: involution_shape(y, "O"),
                "OG": lambda y: involution_shape(y, "Sp")}[flavor](source)
    if tuple(lam) != expected:
        raise LocusError(f"partition {tuple(lam)} from essential data differs from shape {expected}")
    return VexillaryData(flavor, positions, ks, tuple(mu), tuple(lam))


def _family(data: VexillaryData, make: Callable[[int, int], object]) -> list:
    fam = []
    cache: dict[int, object] = {}
    for kk in range(1, len(data.lam) + 1):
        p = data.block(kk)
        if p not in cache:
            i, j = data.positions[p]
            cache[p] = make(p, i, j)
        fam.append(cache[p])
    return fam


# Gr


def det_formula_gr(w: Permutation, m: int = 0) -> Polynomial:
    """det(c(k)_{lam_k + t - k}); equals S_w(x; -y) at window m."""
    data = extract_data(w, "Gr")
    fam = _family(data, lambda p, i, j: RatioSeries(xs(window_indices(m, i), "x"),
                                                     xs(window_indices(m, j), "y")))
    r = len(data.lam)
    mat = [[fam[k][data.lam[k] + t - k] for t in range(r)] for k in range(r)]
    out = determinant(mat)
    return out if isinstance(out, Polynomial) else Polynomial.const(out)


# LG


def pf_formula_lg(y: Permutation, m: int = 0) -> Polynomial:
    """Q_lam(c(1), ..., c(k_s)); equals 2^{cyc(y)} S^O_y at window m."""
    data = extract_data(y, "LG")
    fam = _family(data, lambda p, i, j: RatioSeries(xs(window_indices(m, i)),
                                                     xs(window_indices(m, j))))
    return q_lambda(data.lam, fam)


# OG


# The correction sign is a convention parameter.  The first three rules are
# the candidates one reads off directly; the last is the parity of
# rank y[i_p][j_p] = j_p - k_p.  ``calibrate_sign_rules`` picks the rule that
# matches the enumeration oracle.
SIGN_RULES: dict[str, Callable[[int, int, int], int]] = {
    "(-1)^j": lambda i, j, k: (-1) ** j,
    "(-1)^(j+1)": lambda i, j, k: (-1) ** (j + 1),
    "(-1)^k": lambda i, j, k: (-1) ** k,
    "(-1)^(j+k)": lambda i, j, k: (-1) ** (j + k),
}
LISTED_RULES = ("(-1)^j", "(-1)^(j+1)", "(-1)^k")
LITERAL_RULE = "(-1)^j"
CALIBRATION_WITNESS = "(1,4)(2,3)"
REPRESENTATIVE_ORDER = ("z", "R", "L")


def og_representatives(z: Permutation, order: Sequence[str] = REPRESENTATIVE_ORDER
                       ) -> list[tuple[str, Permutation]]:
    """The Sp-vexillary members of (z, dearc^R z, dearc^L z), in order."""
    if not z.is_fpf_involution():
        raise PermutationError(f"{z.cycle_string()} is not fixed-point-free")
    cands = {"z": z, "R": dearc(z, "R"), "L": dearc(z, "L")}
    return [(name, cands[name]) for name in order if is_sp_vexillary(cands[name])]


def og_family(y: Permutation, m: int, rule: str) -> tuple[VexillaryData, list]:
    data = extract_data(y, "OG")
    if rule not in SIGN_RULES:
        raise ValueError(f"unknown sign rule {rule!r}; choose from {sorted(SIGN_RULES)}")
    sign = SIGN_RULES[rule]

    def make(p, i, j):
        base = RatioSeries(xs(window_indices(m, i)), xs(window_indices(m, j)))
        mono = Polynomial.monomial({("x", a): 1 for a in range(j + 1, i + 1)})
        return CorrectedSeries(base, i - j, mono.scale(sign(i, j, data.k[p])))

    return data, _family(data, make)


def pf_formula_og_raw(y: Permutation, m: int, rule: str) -> Polynomial:
    """P_lam of the corrected family read off the Sp-vexillary y itself."""
    data, fam = og_family(y, m, rule)
    return p_lambda(data.lam, fam)


def pf_formula_og(z: Permutation, m: int = 0, rule: str | None = None,
                  order: Sequence[str] = REPRESENTATIVE_ORDER,
                  representative: Permutation | None = None) -> Polynomial:
    """P_lam(c(1), ..., c(k_s)) for fpf z via an Sp-vexillary representative;
    equals S^Sp_z at window m under the calibrated sign rule (checked
    exhaustively for n <= 6)."""
    rule = rule or calibrated_sign_rule()
    if representative is None:
        reps = og_representatives(z, order)
        if not reps:
            raise LocusError(f"{z.cycle_string()} has no Sp-vexillary representative "
                             "(not Sp-vexillary, nor after dearc)")
        representative = reps[0][1]
    lam = involution_shape(z, "Sp")
    data, fam = og_family(representative, m, rule)
    if data.lam != lam:
        raise LocusError(f"representative shape {data.lam} differs from {lam}")
    return p_lambda(lam, fam)


@dataclass(frozen=True)
class SignCalibration:
    n: int
    windows: tuple[int, ...]
    rules: tuple[str, ...]
    passes: tuple[int, ...]
    failures: tuple[int, ...]
    survivors: tuple[str, ...]
    literal_fails_on_witness: bool

    @property
    def chosen(self) -> str | None:
        return self.survivors[0] if len(self.survivors) == 1 else None

    def as_dict(self) -> dict:
        return {"n": self.n, "windows": list(self.windows),
                "rules": {r: {"pass": p, "fail": f}
                          for r, p, f in zip(self.rules, self.passes, self.failures)},
                "chosen": self.chosen,
                "literal_rule": LITERAL_RULE,
                "literal_fails_on": CALIBRATION_WITNESS if self.literal_fails_on_witness else None}


def _og_matches(y: Permutation, m: int, rule: str, target: Polynomial) -> bool:
    try:
        return pf_formula_og_raw(y, m, rule) == target
    except PolynomialError:
        # Q_lam not divisible by 2^len(lam): certainly not the target
        return False


def calibrate_sign_rules(n: int = 6, windows: Sequence[int] = (0, 1),
                         rules: Sequence[str] | None = None,
                         order: Sequence[str] = REPRESENTATIVE_ORDER) -> SignCalibration:
    """Test each sign rule against S^Sp_z for every fpf z of size n and every
    Sp-vexillary representative, at each window."""
    rules = tuple(rules or SIGN_RULES)
    passes = dict.fromkeys(rules, 0)
    fails = dict.fromkeys(rules, 0)
    for z in fpf_involutions(n):
        reps = og_representatives(z, order)
        for m in windows:
            if not reps:
                continue
            target = inv_schubert(z, "Sp", m)
            for _, y in reps:
                for r in rules:
                    if _og_matches(y, m, r, target):
                        passes[r] += 1
                    else:
                        fails[r] += 1
    w = Permutation.parse(CALIBRATION_WITNESS)
    literal_fails = not _og_matches(w, 0, LITERAL_RULE, inv_schubert(w, "Sp", 0))
    survivors = tuple(r for r in rules if fails[r] == 0 and passes[r] > 0)
    return SignCalibration(n, tuple(windows), rules, tuple(passes[r] for r in rules),
                           tuple(fails[r] for r in rules), survivors, literal_fails)


@lru_cache(maxsize=None)
def sign_calibration() -> SignCalibration:
    return calibrate_sign_rules()


def calibrated_sign_rule() -> str:
    cal = sign_calibration()
    if cal.chosen is None:
        raise LocusError(f"sign calibration is ambiguous: survivors {cal.survivors}")
    return cal.chosen


# essential paths and the tableau formula


@dataclass(frozen=True)
class EssentialPath:
    points: tuple[Cell, ...]

    @property
    def start(self) -> int:
        return self.points[0][0]

    def steps(self) -> list[tuple[str, int]]:
        """("S", row left) or ("W", column left) for each step."""
        out = []
        for (a, b), (c, d) in zip(self.points, self.points[1:]):
            if c == a + 1 and d == b:
                out.append(("S", a))
            elif c == a and d == b - 1:
                out.append(("W", b))
            else:
                raise LocusError(f"step {(a, b)} -> {(c, d)} is not a unit south or west step")
        return out

    def x_p(self) -> tuple[Polynomial, ...]:
        out = [Polynomial.const(0)]
        for kind, v in self.steps():
            out.append(Polynomial.var("x", v + 1) if kind == "S" else -Polynomial.var("x", v))
        return tuple(out)


def _require_vexillary_involution(y: Permutation) -> None:
    if not y.is_involution() or not is_vexillary(y):
        raise LocusError(f"{y} is not a vexillary involution")


def essential_paths(y: Permutation) -> list[EssentialPath]:
    """All south/west unit-step paths from a diagonal point (j, j) to (n, 0)
    passing through every cell of Ess(D^O(y)), sorted by their points."""
    _require_vexillary_involution(y)
    n = y.n
    ess = involution_essential_set(y, "O")
    out = []

    def walk(pts: list[Cell]):
        a, b = pts[-1]
        if (a, b) == (n, 0):
            if ess <= set(pts):
                out.append(EssentialPath(tuple(pts)))
            return
        for nxt in ((a + 1, b), (a, b - 1)):
            if nxt[0] > n or nxt[1] < 0:
                continue
            # every essential cell not yet visited must stay reachable
            if all(c in pts or chain_le(c, nxt) for c in ess):
                pts.append(nxt)
                walk(pts)
                pts.pop()

    for j in range(n + 1):
        walk([(j, j)])
    return sorted(out, key=lambda p: p.points)


def check_path(y: Permutation, path: EssentialPath) -> None:
    n = y.n
    pts = path.points
    if len(pts) != n + 1 or pts[0][0] != pts[0][1] or pts[-1] != (n, 0):
        raise LocusError("an essential path has n+1 points from the diagonal to (n, 0)")
    path.steps()
    missing = involution_essential_set(y, "O") - set(pts)
    if missing:
        raise LocusError(f"path misses essential cells {sorted(missing)}")


def tableau_formula_lg(y: Permutation, path: EssentialPath, m: int = 0) -> Polynomial:
    """Q_lam(x_{-m..j}; -x^P) with lam = sh^O(y) and (j, j) the start of
    the path; equals 2^{cyc(y)} S^O_y at window m."""
    _require_vexillary_involution(y)
    check_path(y, path)
    lam = involution_shape(y, "O")
    t = [-v for v in path.x_p()]
    return multiparameter_q(lam, xs(window_indices(m, path.start)), t)


# the single-essential-cell monomial formula


def single_cell_parameters(y: Permutation) -> tuple[int, int, int]:
    """(a, mhat, k) with y = (a, mhat+1)(a+1, mhat+2)...(a+k-1, mhat+k)."""
    cycles = y.two_cycles() if y.is_involution() else None
    if not cycles:
        raise LocusError(f"{y} is not a nontrivial involution")
    a, b = cycles[0]
    k = len(cycles)
    if any(c != (a + t, b + t) for t, c in enumerate(cycles)) or a + k - 1 > b - 1:
        raise LocusError(f"{y.cycle_string()} is not of the form (a,m+1)(a+1,m+2)...(a+k-1,m+k)")
    return a, b - 1, k


def semistandard_formula(y: Permutation, m: int = 0) -> Polynomial:
    """Sum over marked shifted tableaux of shape sh^O(y) on x_{-m..mhat}
    whose entries with index above a+k-1 are all primed.

    For a = 1 the bound is k.  For a > 1 the bound must be a+k-1; with k
    the sum misses the unprimed letters a..a+k-1 (e.g. y = (4,5)).
    """
    if y.is_involution() and not y.two_cycles():
        return Polynomial.const(1)
    a, mhat, k = single_cell_parameters(y)
    indices = window_indices(m, mhat)
    bound = a + k - 1

    def allowed(code: int) -> bool:
        return indices[(code + 1) // 2 - 1] <= bound or code % 2 == 1

    return q_lambda_tableaux(involution_shape(y, "O"), xs(indices), allowed)
