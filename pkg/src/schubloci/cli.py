"""Command line interface.

    schubloci schubert 2143
    schubloci inv-schubert "(1,4)(2,3)" --flavor Sp --format json
    schubloci classify "(1,5)(2,6)(4,7)"
    schubloci verify vex-det --n 5 --jobs 4

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Any, Callable

from .harness import SUITES, run_suite
from .involution import classify, dearc, involution_length, inv_schubert, inv_stanley
from .loci import (REPRESENTATIVE_ORDER, LocusError, SIGN_RULES, det_formula_gr, essential_paths,
                   og_representatives, pf_formula_lg, pf_formula_og, sign_calibration,
                   tableau_formula_lg)
from .perms import Permutation, PermutationError
from .poly import Polynomial, PolynomialError, set_term_limit, xs
from .render import render_diagram
from .schubert import double_schubert, schubert_bjs, stanley
from .schurpq import ShapeError, is_strict_partition, multiparameter_q, schur_p, schur_q
from .serialize import SerializationError, canonical, to_doc

TERM_LIMIT_ENV = "SCHUBLOCI_MAX_TERMS"


class UsageError(ValueError):
    pass


def parse_partition(text: str) -> tuple[int, ...]:
    s = text.strip().strip("()[]").strip()
    if not s:
        return ()
    if not re.fullmatch(r"\d+([\s,]+\d+)*", s):
        raise UsageError(f"malformed partition {text!r}")
    parts = tuple(int(t) for t in re.split(r"[\s,]+", s))
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise UsageError(f"{parts} is not weakly decreasing")
    return tuple(p for p in parts if p)


def parse_strict(text: str) -> tuple[int, ...]:
    lam = parse_partition(text)
    if not is_strict_partition(lam):
        raise UsageError(f"{lam} is not a strict partition")
    return lam


def parse_perm(text: str) -> Permutation:
    return Permutation.parse(text)


def _parse_t(text: str | None, count: int) -> list:
    if text is None:
        return [Polynomial.var("t", d) for d in range(1, count + 1)]
    vals = [int(v) for v in re.split(r"[\s,]+", text.strip()) if v]
    return vals + [0] * (count - len(vals))


# object computations: each returns (result, metadata)


def _window(args, default: int) -> int:
    m = default if args.window is None else args.window
    if m < 0:
        raise UsageError("window must be nonnegative")
    return m


def _c_schubert(a):
    return schubert_bjs(parse_perm(a.arg), _window(a, 0)), {}


def _c_double(a):
    return double_schubert(parse_perm(a.arg), _window(a, 0)), {}


def _c_backstable(a):
    w = parse_perm(a.arg)
    return schubert_bjs(w, _window(a, w.length())), {}


def _c_stanley(a):
    w = parse_perm(a.arg)
    return stanley(w, _window(a, max(w.length(), 1))), {}


def _c_inv_schubert(a):
    return inv_schubert(parse_perm(a.arg), a.flavor, _window(a, 0)), {}


def _c_inv_stanley(a):
    z = parse_perm(a.arg)
    return inv_stanley(z, a.flavor, _window(a, max(involution_length(z, a.flavor), 1))), {}


def _letters(a, lam) -> int:
    return a.letters if a.letters is not None else max(sum(lam), 1)


def _c_schurq(a):
    lam = parse_strict(a.arg)
    return schur_q(lam, xs(range(1, _letters(a, lam) + 1))), {}


def _c_schurp(a):
    lam = parse_strict(a.arg)
    return schur_p(lam, xs(range(1, _letters(a, lam) + 1))), {}


def _c_multiq(a):
    lam = parse_strict(a.arg)
    t = _parse_t(a.t, lam[0] if lam else 0)
    return multiparameter_q(lam, _letters(a, lam), t), {}


def _c_det_gr(a):
    return det_formula_gr(parse_perm(a.arg), _window(a, 0)), {}


def _c_pf_lg(a):
    return pf_formula_lg(parse_perm(a.arg), _window(a, 0)), {}


def _c_pf_og(a):
    z = parse_perm(a.arg)
    order = tuple(a.order.split(","))
    if sorted(order) != sorted(REPRESENTATIVE_ORDER):
        raise UsageError("--order must be a permutation of z,R,L")
    reps = og_representatives(z, order) if z.is_fpf_involution() else []
    rule = a.rule or sign_calibration().chosen
    out = pf_formula_og(z, _window(a, 0), rule, order)
    return out, {"sign_rule": rule, "representative": reps[0][0] if reps else None}


def _c_tableau_lg(a):
    y = parse_perm(a.arg)
    paths = essential_paths(y)
    if a.path is not None:
        if not 0 <= a.path < len(paths):
            raise UsageError(f"path index must be in [0, {len(paths)})")
        paths = [paths[a.path]]
    m = _window(a, 0)
    return [(p, tableau_formula_lg(y, p, m)) for p in paths], {}


def _c_diagram(a):
    flavor = None if a.flavor == "none" else a.flavor
    return render_diagram(parse_perm(a.arg), flavor), {}


def _c_classify(a):
    return classify(parse_perm(a.arg)), {}


def _c_dearc(a):
    z = parse_perm(a.arg)
    return {"R": dearc(z, "R"), "L": dearc(z, "L")}, {}


COMPUTE: dict[str, tuple[Callable, str]] = {
    "schubert": (_c_schubert, "Schubert polynomial (window m shifts in x_{-m..-1})"),
    "double": (_c_double, "double Schubert polynomial S_w(x; y)"),
    "backstable": (_c_backstable, "back-stable Schubert polynomial at window m (default l(w))"),
    "inv-schubert": (_c_inv_schubert, "involution Schubert polynomial, flavor O or Sp"),
    "stanley": (_c_stanley, "Stanley symmetric function on x_{-m..-1}"),
    "inv-stanley": (_c_inv_stanley, "involution Stanley symmetric function"),
    "schurq": (_c_schurq, "Schur Q function (Pfaffian route)"),
    "schurp": (_c_schurp, "Schur P function (Pfaffian route)"),
    "multiq": (_c_multiq, "multiparameter Q_lambda(x; t)"),
    "det-gr": (_c_det_gr, "determinant formula for a vexillary permutation"),
    "pf-lg": (_c_pf_lg, "Q Pfaffian formula for a vexillary involution"),
    "pf-og": (_c_pf_og, "P Pfaffian formula for a fixed-point-free involution"),
    "tableau-lg": (_c_tableau_lg, "multiparameter Q along essential paths"),
    "diagram": (_c_diagram, "draw D(w), D^O(y) or D^Sp(z)"),
    "classify": (_c_classify, "vexillary / Grassmannian data of an involution"),
    "dearc": (_c_dearc, "dearc^R and dearc^L of a fixed-point-free involution"),
}


# output


def _human(obj: str, result: Any) -> str:
    if isinstance(result, (Polynomial, str)):
        return str(result)
    if obj == "tableau-lg":
        lines = []
        for path, poly in result:
            pts = " ".join(f"({a},{b})" for a, b in path.points)
            xp = ", ".join(str(v) for v in path.x_p())
            lines.append(f"path {pts}\n  xP = ({xp})\n  {poly}")
        return "\n".join(lines)
    if obj == "dearc":
        return "\n".join(f"dearc^{s}: {result[s].cycle_string()}" for s in ("R", "L"))
    if obj == "classify":
        c = result
        def cells(cs):
            return " ".join(f"({i},{j})" for i, j in cs) or "(empty)"
        grass = "no" if c.i_grassmannian is None else f"yes, m={c.i_grassmannian}"
        lines = [f"vexillary: {'yes' if c.vexillary else 'no'}",
                 f"Sp-vexillary: {'yes' if c.sp_vexillary else 'no'}",
                 f"I-Grassmannian: {grass}"]
        if c.fpf_i_grassmannian is not None:
            lines.append(f"fpf-I-Grassmannian: {'yes' if c.fpf_i_grassmannian else 'no'}")
        lines += [f"Ess(D^O): {cells(c.essential_o)}",
                  f"Ess(D^Sp): {cells(c.essential_sp)}",
                  f"sh^O: {tuple(c.shape_o)}"]
        if c.shape_sp is not None:
            lines.append(f"sh^Sp: {tuple(c.shape_sp)}")
        return "\n".join(lines)
    return canonical(to_doc(result))


def _json_result(obj: str, result: Any) -> Any:
    if isinstance(result, str):
        return {"lines": result.split("\n")}
    if obj == "tableau-lg":
        return [{"path": to_doc(p), "value": to_doc(v)} for p, v in result]
    if obj == "dearc":
        return {s: to_doc(v) for s, v in result.items()}
    return to_doc(result)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schubloci",
                                     description="Exact Schubert-type polynomial computations.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMPUTE.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("arg", help="permutation (one-line or cycles) or partition")
        p.add_argument("--window", "-m", type=int, default=None)
        p.add_argument("--format", choices=("human", "json"), default="human")
        if name in ("inv-schubert", "inv-stanley"):
            p.add_argument("--flavor", choices=("O", "Sp"), default="O")
        if name == "diagram":
            p.add_argument("--flavor", choices=("none", "O", "Sp"), default="none")
        if name in ("schurq", "schurp", "multiq"):
            p.add_argument("--letters", "-N", type=int, default=None)
        if name == "multiq":
            p.add_argument("--t", default=None, help="comma-separated integers; default symbolic")
        if name == "pf-og":
            p.add_argument("--rule", choices=sorted(SIGN_RULES), default=None)
            p.add_argument("--order", default=",".join(REPRESENTATIVE_ORDER))
        if name == "tableau-lg":
            p.add_argument("--path", type=int, default=None)
    v = sub.add_parser("verify", help="run an identity suite")
    v.add_argument("suite", choices=sorted(SUITES) + ["all"])
    v.add_argument("--n", type=int, default=None)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("human", "json"), default="human")
    v.add_argument("--instance", default=None, help="run one instance (JSON list)")
    v.add_argument("--timing", action="store_true", help="include wall-clock seconds in JSON")
    return parser


def _verify(args, out) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    if args.n is not None and args.n < 0:
        raise UsageError("--n must be nonnegative")
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    instance = None
    if args.instance is not None:
        if args.suite == "all":
            raise UsageError("--instance needs a single suite")
        try:
            key = json.loads(args.instance)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--instance is not JSON: {exc.msg}") from None
        if not isinstance(key, list):
            raise UsageError("--instance must be a JSON list")
        instance = tuple(key)
    reports = [run_suite(s, args.n, args.jobs, instance) for s in names]
    if args.format == "json":
        docs = [r.to_doc(args.timing) for r in reports]
        doc = docs[0] if args.suite != "all" else {"reports": docs}
        out.write(canonical(doc) + "\n")
    else:
        for r in reports:
            out.write(r.human() + "\n")
    return 0 if all(r.ok for r in reports) else 1


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    limit = os.environ.get(TERM_LIMIT_ENV)
    if limit:
        try:
            set_term_limit(int(limit))
        except ValueError:
            err.write(f"error: {TERM_LIMIT_ENV} must be an integer\n")
            return 2
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        if args.command == "verify":
            return _verify(args, out)
        fn, _ = COMPUTE[args.command]
        result, meta = fn(args)
    except (UsageError, PermutationError, LocusError, ShapeError, PolynomialError,
            SerializationError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    if args.format == "json":
        doc = {"object": args.command, "input": args.arg,
               "result": _json_result(args.command, result)}
        if getattr(args, "window", None) is not None:
            doc["window"] = args.window
        if meta:
            doc["metadata"] = meta
        out.write(canonical(doc) + "\n")
    else:
        out.write(_human(args.command, result) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
