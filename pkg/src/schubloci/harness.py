"""Batch verification of the library's identities.

A suite turns a size bound n into a list of instance keys (tuples of plain
values, so they cross process boundaries) and checks one key at a time.
Reports are sorted by key before they are emitted, so the output does not
depend on scheduling.  Wall-clock time is kept on the report object but is
not part of its JSON form.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from . import __version__
from .involution import (check_inv_recurrence, cyc, dearc, i_grassmannian_row, inv_schubert,
                         inv_stanley, involution_code, involution_diagram, involution_essential_set,
                         involution_shape, is_fpf_i_grassmannian, is_sp_vexillary, normalized)
from .loci import (REPRESENTATIVE_ORDER, det_formula_gr, essential_paths,
                   og_representatives, pf_formula_lg, pf_formula_og, semistandard_formula,
                   sign_calibration, tableau_formula_lg)
from .perms import (Permutation, all_permutations, chain_sorted, code, essential_set,
                    fpf_identity, fpf_involutions, involutions, is_vexillary, one_times, rank,
                    rothe_diagram, shape, direct_sum)
from .poly import Polynomial, PolynomialError, xs
from .schubert import (check_dd_recurrence, double_schubert, kill_alphabet, negate_alphabet,
                       schubert_bjs, schubert_dd, schubert_literal, shift_down)
from .schurpq import (ShapeError, multiparameter_q, q_expansion, q_lambda, q_lambda_tableaux,
                      q_pair, schur_p, schur_q, strict_partitions_inside, classical_q_series)
from .serialize import canonical, to_doc

P = Permutation.parse


@dataclass(frozen=True)
class Outcome:
    key: tuple
    ok: bool
    lhs: Any = None
    rhs: Any = None


@dataclass
class VerificationReport:
    suite: str
    n: int
    outcomes: list[Outcome]
    metadata: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def failures(self) -> list[Outcome]:
        return [o for o in self.outcomes if not o.ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    def reproduce(self, o: Outcome) -> str:
        return (f"schubloci verify {self.suite} --n {self.n} "
                f"--instance '{canonical(list(o.key))}'")

    def to_doc(self, timing: bool = False) -> dict:
        """JSON form; wall-clock time is left out unless asked for, so that
        equal runs give byte-identical documents."""
        doc = {
            "suite": self.suite,
            "n": self.n,
            "version": __version__,
            "instances": len(self.outcomes),
            "passed": len(self.outcomes) - len(self.failures),
            "failed": len(self.failures),
            "failures": [{"instance": list(o.key), "lhs": _doc(o.lhs), "rhs": _doc(o.rhs),
                          "reproduce": self.reproduce(o)} for o in self.failures],
            "metadata": self.metadata,
        }
        if timing:
            doc["seconds"] = round(self.seconds, 3)
        return doc

    def human(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        lines = [f"{self.suite} (n={self.n}): {status} "
                 f"{len(self.outcomes) - len(self.failures)}/{len(self.outcomes)} "
                 f"in {self.seconds:.2f}s"]
        for k, v in sorted(self.metadata.items()):
            lines.append(f"  {k}: {canonical(v)}")
        for o in self.failures:
            lines.append(f"  failed {canonical(list(o.key))}")
            lines.append(f"    lhs: {_text(o.lhs)}")
            lines.append(f"    rhs: {_text(o.rhs)}")
            lines.append(f"    reproduce: {self.reproduce(o)}")
        return "\n".join(lines)


def _doc(v):
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, (list, tuple)) and all(isinstance(a, (int, str)) for a in v):
        return list(v)
    return to_doc(v)


def _text(v) -> str:
    return str(v) if isinstance(v, Polynomial) else canonical(_doc(v))


@dataclass(frozen=True)
class Suite:
    name: str
    default_n: int
    instances: Callable[[int], list[tuple]]
    check: Callable[[tuple], tuple[bool, Any, Any]]
    metadata: Callable[[int], dict] = lambda n: {}


def _even(n: int) -> int:
    return n + n % 2


def _staircase(k: int) -> tuple[int, ...]:
    return tuple(range(k, 0, -1))


def _inside(lam, outer) -> bool:
    return len(lam) <= len(outer) and all(a <= b for a, b in zip(lam, outer))


# instance lists and checks, one pair per suite


def _dd_instances(n):
    return [(str(w), i, m) for w in all_permutations(n) for i in range(1, n) for m in (0, 1)]


def _dd_check(key):
    w, i, m = key
    ok, lhs, rhs = check_dd_recurrence(P(w), i, m)
    return ok, lhs, rhs


def _routes_instances(n):
    return [(str(w), route) for w in all_permutations(n) for route in ("dd", "literal", "double")]


def _routes_check(key):
    w, route = key
    w = P(w)
    lhs = schubert_bjs(w)
    if route == "dd":
        rhs = schubert_dd(w)
    elif route == "literal":
        rhs = schubert_literal(w)
    else:
        rhs = kill_alphabet(double_schubert(w), "y")
    return lhs == rhs, lhs, rhs


def _vex_det_instances(n):
    return [(str(w), m) for w in all_permutations(n) if is_vexillary(w) for m in (0, 1, 2)]


def double_schubert_negated(w: Permutation, m: int) -> Polynomial:
    """S_{1_m x w}(x; -y) with all variables shifted down by m."""
    p = double_schubert(one_times(m, w)) if m else double_schubert(w)
    return negate_alphabet(shift_down(p, m) if m else p, "y")


def _vex_det_check(key):
    w, m = key
    lhs = det_formula_gr(P(w), m)
    rhs = double_schubert_negated(P(w), m)
    return lhs == rhs, lhs, rhs


def _inv_rec_instances(n):
    out = [("O", str(y), i, m) for y in involutions(n) for i in range(1, n) for m in (0, 1)]
    if n:
        k = _even(n)
        out += [("Sp", str(z), i, m) for z in fpf_involutions(k) for i in range(1, k)
                for m in (0, 1)]
    return out


def _inv_rec_check(key):
    flavor, z, i, m = key
    v = check_inv_recurrence(P(z), flavor, i, m)
    return v.ok, v.lhs, v.rhs


def _vex_lg_instances(n):
    return [(str(y), m) for y in involutions(n) if is_vexillary(y) for m in (0, 1)]


def _vex_lg_check(key):
    y, m = key
    lhs = pf_formula_lg(P(y), m)
    rhs = normalized(P(y), "O", m)
    return lhs == rhs, lhs, rhs


def _fpf_og_instances(n):
    if not n:
        return []
    return [(str(z), name, m) for z in fpf_involutions(_even(n))
            for name, _ in og_representatives(z) for m in (0, 1)]


def _fpf_og_check(key):
    z, name, m = key
    z = P(z)
    rep = dict(og_representatives(z))[name]
    try:
        lhs = pf_formula_og(z, m, representative=rep)
    except PolynomialError as exc:
        return False, str(exc), inv_schubert(z, "Sp", m)
    rhs = inv_schubert(z, "Sp", m)
    return lhs == rhs, lhs, rhs


def _fpf_og_metadata(n):
    cal = sign_calibration()
    return {"sign_rule": cal.chosen, "calibration": cal.as_dict(),
            "representative_order": list(REPRESENTATIVE_ORDER)}


def _pq_instances(n):
    if n < 2:
        return []
    out = []
    for lam in strict_partitions_inside(_staircase(n - 1)):
        for letters in sorted({max(n - 2, 1), n - 1}):
            out.append(("cross", list(lam), letters))
        if lam:
            out.append(("two-row", list(lam), n - 1))
    return out


def _pq_check(key):
    kind, lam, letters = key
    lam = tuple(lam)
    v = xs(range(1, letters + 1))
    if kind == "cross":
        lhs = schur_q(lam, v)
        rhs = q_lambda_tableaux(lam, v)
        try:
            schur_p(lam, v)
        except PolynomialError as exc:
            return False, "P not integral", str(exc)
        if len(lam) % 2:
            padded = q_lambda(lam + (0,), [classical_q_series(v)] * (len(lam) + 1))
            if padded != lhs:
                return False, padded, lhs
        return lhs == rhs, lhs, rhs
    # antisymmetry Q_(a,b) = -Q_(b,a) and Q_(a,0) = Q_a for the leading two parts
    c = classical_q_series(v)
    a = lam[0]
    b = lam[1] if len(lam) > 1 else 0
    lhs = q_pair(a, b, c, c)
    rhs = -q_pair(b, a, c, c) if b else c[a]
    return lhs == rhs, lhs, rhs


def _multiq_instances(n):
    if n < 2:
        return []
    return [(list(lam), letters) for lam in strict_partitions_inside(_staircase(n - 1)) if lam
            for letters in range(1, n)]


def _multiq_check(key):
    lam, letters = key
    lam = tuple(lam)
    rng = random.Random(canonical(list(key)))
    zero = [0] * (lam[0] + 2)
    base = q_lambda_tableaux(lam, letters)
    at_zero = multiparameter_q(lam, letters, zero)
    if at_zero != base:
        return False, at_zero, base
    t = [rng.randint(-5, 5) for _ in range(lam[0])]
    t1 = t + [rng.randint(-5, 5) for _ in range(2)]
    t2 = t + [rng.randint(-5, 5) for _ in range(2)]
    lhs = multiparameter_q(lam, letters, t1)
    rhs = multiparameter_q(lam, letters, t2)
    return lhs == rhs, lhs, rhs


def _tableau_instances(n):
    out = []
    for y in involutions(n):
        if is_vexillary(y):
            for k in range(len(essential_paths(y))):
                out += [("path", str(y), k, m) for m in (0, 1)]
        if len(involution_essential_set(y, "O")) == 1:
            out += [("single", str(y), 0, m) for m in (0, 1)]
    return out


def _tableau_check(key):
    kind, y, k, m = key
    y = P(y)
    rhs = normalized(y, "O", m)
    if kind == "path":
        lhs = tableau_formula_lg(y, essential_paths(y)[k], m)
    else:
        lhs = semistandard_formula(y, m)
    return lhs == rhs, lhs, rhs


def _dearc_instances(n):
    if not n:
        return []
    return [(str(z), kind) for z in fpf_involutions(_even(n)) for kind in ("shape", "diagram")]


def _dearc_check(key):
    z, kind = key
    z = P(z)
    if kind == "shape":
        lhs = [list(involution_shape(z, "Sp"))]
        rhs = [list(involution_shape(dearc(z, s), "Sp")) for s in ("R", "L")]
        return all(r == lhs[0] for r in rhs), lhs, rhs
    lhs = sorted(involution_diagram(z, "Sp"))
    rhs = sorted(involution_diagram(dearc(z, "L"), "Sp"))
    return lhs == rhs, [list(c) for c in lhs], [list(c) for c in rhs]


# combinatorial lemmas


def _ks(w: Permutation, cells) -> list[tuple[int, int, int]]:
    return [(i, j, j - rank(w, i, j)) for i, j in chain_sorted(cells)]


def _lemma_code_ks(w):
    ks = {k for _, _, k in _ks(w, essential_set(rothe_diagram(w)))}
    return ks == set(code(w)) - {0}, sorted(ks), sorted(set(code(w)) - {0})


def _lemma_vex_shape(w):
    data = _ks(w, essential_set(rothe_diagram(w)))
    pred, prev = [], 0
    for i, j, k in data:
        pred += [i - rank(w, i, j)] * (k - prev)
        prev = k
    return tuple(pred) == shape(w), pred, list(shape(w))


def _lemma_k_step(w):
    d = rothe_diagram(w)
    data = _ks(w, essential_set(d))
    bad = [p for p in range(1, len(data))
           if (data[p][0], data[p][1] - 1) not in d and data[p][2] != data[p - 1][2] + 1]
    return not bad, bad, []


def _lemma_vex_inv_code(y):
    ess = involution_essential_set(y, "O")
    jmax = max((j for _, j in ess), default=0)
    c = code(y)
    moved = [i for i in range(1, y.n + 1) if y(i) != i]
    pred_o = [sum(1 for j in moved if j <= i) if i <= jmax else c[i - 1]
              for i in range(1, y.n + 1)]
    pred_sp = [sum(1 for j in moved if j <= i - 1) if i <= jmax else c[i - 1]
               for i in range(1, y.n + 1)]
    lhs = [list(involution_code(y, "O")), list(involution_code(y, "Sp"))]
    return lhs == [pred_o, pred_sp], lhs, [pred_o, pred_sp]


def _lemma_inv_code_parts(y):
    data = _ks(y, involution_essential_set(y, "O"))
    ks = [k for _, _, k in data]
    ks_max = ks[-1] if ks else 0
    c = involution_code(y, "O")
    if set(c) - {0} != set(range(1, ks_max + 1)):
        return False, sorted(set(c) - {0}), list(range(1, ks_max + 1))
    lonely = [k for k in range(1, ks_max + 1) if k not in ks and c.count(k) != 1]
    return not lonely, lonely, []


def _shape_prediction(data, offset: int) -> list[int]:
    pred, prev = [], 0
    for i, j, kp in data:
        pred += [i - j + offset + kp - k for k in range(prev + 1, kp + 1)]
        prev = kp
    return pred


def _lemma_inv_shape(y):
    pred = _shape_prediction(_ks(y, involution_essential_set(y, "O")), 1)
    return tuple(pred) == involution_shape(y, "O"), pred, list(involution_shape(y, "O"))


def _lemma_fpf_inv_shape(y):
    pred = _shape_prediction(_ks(y, involution_essential_set(y, "Sp")), 0)
    return tuple(pred) == involution_shape(y, "Sp"), pred, list(involution_shape(y, "Sp"))


LEMMAS: dict[str, tuple[str, Callable]] = {
    "code-ks": ("vex", _lemma_code_ks),
    "vex-shape": ("vex", _lemma_vex_shape),
    "k-step": ("vex", _lemma_k_step),
    "vex-inv-code": ("vexinv", _lemma_vex_inv_code),
    "inv-code-parts": ("vexinv", _lemma_inv_code_parts),
    "inv-shape": ("vexinv", _lemma_inv_shape),
    "fpf-inv-shape": ("spvex", _lemma_fpf_inv_shape),
}


def _shapes_instances(n):
    out = []
    for name, (family, _) in LEMMAS.items():
        if family == "vex":
            ws = [w for w in all_permutations(n) if is_vexillary(w)]
        elif family == "vexinv":
            ws = [y for y in involutions(n) if is_vexillary(y)]
        else:
            ws = []
            for size in range(2, n + 1, 2):
                for y in fpf_involutions(size):
                    if is_sp_vexillary(y):
                        pad = fpf_identity(2)
                        ws += [y, direct_sum(y, pad), direct_sum(pad, y)]
        out += [(name, str(w)) for w in ws]
    return out


def _shapes_check(key):
    name, w = key
    return LEMMAS[name][1](P(w))


# corollaries for Grassmannian-type involutions


def _grass_instances(n):
    out = []
    for size in range(1, n + 1):
        for y in involutions(size):
            if size > 1 and y(size) == size:
                continue
            if i_grassmannian_row(y) is None:
                continue
            if _inside(involution_shape(y, "O"), (4, 3, 2, 1)):
                out += [("O", str(y), m) for m in (4, 5)]
    if n >= 2:
        for z in fpf_involutions(n - n % 2):
            if is_fpf_i_grassmannian(z) and _inside(involution_shape(z, "Sp"), (3, 2, 1)):
                out += [("Sp", str(z), m) for m in (4, 5)]
    return out


def _grass_check(key):
    flavor, y, m = key
    y = P(y)
    letters = xs(range(-m, 0))
    if flavor == "O":
        lhs = inv_stanley(y, "O", m).scale(2 ** cyc(y))
        rhs = q_lambda_tableaux(involution_shape(y, "O"), letters)
    else:
        lam = involution_shape(y, "Sp")
        lhs = inv_stanley(y, "Sp", m)
        rhs = q_lambda_tableaux(lam, letters).exact_div_scalar(2 ** len(lam))
    return lhs == rhs, lhs, rhs


def _positivity_instances(n):
    return [(str(y),) for y in involutions(n)]


def _positivity_check(key):
    y = P(key[0])
    m = max(y.n, 1)
    f = inv_stanley(y, "O", m).scale(2 ** cyc(y))
    try:
        coeffs = q_expansion(f, xs(range(-m, 0)))
    except ShapeError as exc:
        return False, str(exc), None
    shown = [[list(lam), str(c)] for lam, c in coeffs.items()]
    ok = all(c >= 0 and c.denominator == 1 for c in coeffs.values())
    return ok, shown, "nonnegative integers"


SUITES: dict[str, Suite] = {s.name: s for s in [
    Suite("dd-recurrence", 5, _dd_instances, _dd_check),
    Suite("bjs-vs-dd", 5, _routes_instances, _routes_check),
    Suite("vex-det", 5, _vex_det_instances, _vex_det_check),
    Suite("inv-recurrence", 5, _inv_rec_instances, _inv_rec_check),
    Suite("vex-lg", 5, _vex_lg_instances, _vex_lg_check),
    Suite("fpf-og", 6, _fpf_og_instances, _fpf_og_check, _fpf_og_metadata),
    Suite("schur-pq-cross", 5, _pq_instances, _pq_check),
    Suite("multiq", 4, _multiq_instances, _multiq_check),
    Suite("tableau-lg", 4, _tableau_instances, _tableau_check),
    Suite("dearc", 8, _dearc_instances, _dearc_check),
    Suite("shapes", 6, _shapes_instances, _shapes_check),
    Suite("grassmannian-cors", 8, _grass_instances, _grass_check),
    Suite("q-positivity", 5, _positivity_instances, _positivity_check),
]}


def _run_one(job: tuple[str, tuple]) -> Outcome:
    name, key = job
    ok, lhs, rhs = SUITES[name].check(key)
    return Outcome(key, bool(ok), None if ok else lhs, None if ok else rhs)


def _sort_key(o: Outcome) -> str:
    return canonical(list(o.key))


def run_suite(name: str, n: int | None = None, jobs: int = 1,
              instance: tuple | None = None,
              where: Callable[[tuple], bool] | None = None) -> VerificationReport:
    """Check every instance of suite ``name`` at size n (or only ``instance``,
    or only the keys accepted by ``where``)."""
    suite = SUITES[name]
    n = suite.default_n if n is None else n
    start = time.perf_counter()
    keys = suite.instances(n)
    if where is not None:
        keys = [k for k in keys if where(k)]
    if instance is not None:
        wanted = canonical(list(instance))
        keys = [k for k in keys if canonical(list(k)) == wanted]
        if not keys:
            raise ValueError(f"{wanted} is not an instance of {name} at n={n}")
    work = [(name, tuple(k)) for k in keys]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_run_one, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        outcomes = [_run_one(w) for w in work]
    outcomes.sort(key=_sort_key)
    meta = suite.metadata(n) if outcomes else {}
    return VerificationReport(name, n, outcomes, meta, time.perf_counter() - start)


def run_suites(names: Iterable[str], n: int | None = None, jobs: int = 1
               ) -> list[VerificationReport]:
    return [run_suite(s, n, jobs) for s in names]
