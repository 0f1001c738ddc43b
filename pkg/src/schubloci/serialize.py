"""Canonical JSON for the domain objects.

Every object is a JSON object whose key set identifies its type, so a
document can be read back without a separate tag.  Output uses sorted keys
and no insignificant whitespace, which makes it byte-stable.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .involution import Classification
from .loci import EssentialPath, SignCalibration, VexillaryData
from .perms import Permutation
from .poly import ALPHABETS, Polynomial


class SerializationError(ValueError):
    pass


def canonical(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


# coefficients are decimal strings so that no JSON reader loses precision;
# rationals (only produced by expansions, never by the polynomial routes)
# are written "p/q"
_COEFF = re.compile(r"-?(0|[1-9]\d*)(/[1-9]\d*)?")


def _coeff_out(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def _coeff_in(v, where: str):
    if not isinstance(v, str) or not _COEFF.fullmatch(v):
        raise SerializationError(f"{where}: coefficient must be a decimal string such as \"-3\"")
    f = Fraction(v)
    if "/" in v and (f.denominator == 1 or f"{f.numerator}/{f.denominator}" != v):
        raise SerializationError(f"{where}: rational {v!r} is not in lowest terms")
    return f.numerator if f.denominator == 1 else f


def to_doc(obj: Any) -> Any:
    """The JSON-ready structure for ``obj``."""
    if isinstance(obj, Polynomial):
        return {"terms": [{"c": _coeff_out(c), "m": [list(v) for v in mono]}
                          for mono, c in obj.sorted_terms()]}
    if isinstance(obj, Permutation):
        return {"oneline": list(obj.oneline)}
    if isinstance(obj, VexillaryData):
        return {"flavor": obj.flavor, "positions": [list(c) for c in obj.positions],
                "k": list(obj.k), "mu": list(obj.mu), "lambda": list(obj.lam)}
    if isinstance(obj, EssentialPath):
        return {"path": [list(p) for p in obj.points], "xP": [to_doc(v) for v in obj.x_p()]}
    if isinstance(obj, Classification):
        d = {
            "vexillary": obj.vexillary,
            "sp_vexillary": obj.sp_vexillary,
            "i_grassmannian": obj.i_grassmannian,
            "fpf_i_grassmannian": obj.fpf_i_grassmannian,
            "essential_o": [list(c) for c in obj.essential_o],
            "essential_sp": [list(c) for c in obj.essential_sp],
            "shape_o": list(obj.shape_o),
            "shape_sp": None if obj.shape_sp is None else list(obj.shape_sp),
        }
        return {"classification": d}
    if isinstance(obj, SignCalibration):
        return {"calibration": obj.as_dict()}
    if isinstance(obj, (list, tuple)):
        return [to_doc(v) for v in obj]
    if hasattr(obj, "to_doc"):
        return obj.to_doc()
    raise SerializationError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return canonical(to_doc(obj))


# reading


def _expect(cond: bool, where: str, msg: str) -> None:
    if not cond:
        raise SerializationError(f"{where}: {msg}")


def _int_list(v, where: str) -> list[int]:
    _expect(isinstance(v, list) and all(isinstance(a, int) and not isinstance(a, bool) for a in v),
            where, "expected a list of integers")
    return v


def _cells(v, where: str) -> tuple[tuple[int, int], ...]:
    _expect(isinstance(v, list), where, "expected a list of cells")
    out = []
    for n, c in enumerate(v):
        _int_list(c, f"{where}/{n}")
        _expect(len(c) == 2, f"{where}/{n}", "a cell has two coordinates")
        out.append((c[0], c[1]))
    return tuple(out)


def _polynomial(doc: dict, where: str = "") -> Polynomial:
    terms = doc["terms"]
    _expect(isinstance(terms, list), f"{where}/terms", "expected a list")
    acc: dict = {}
    for n, t in enumerate(terms):
        here = f"{where}/terms/{n}"
        _expect(isinstance(t, dict) and set(t) == {"c", "m"}, here,
                "a term has exactly the keys c and m")
        c = _coeff_in(t["c"], f"{here}/c")
        mono = t["m"]
        _expect(isinstance(mono, list), f"{here}/m", "expected a list")
        exps = {}
        for r, v in enumerate(mono):
            vw = f"{here}/m/{r}"
            _expect(isinstance(v, list) and len(v) == 3 and isinstance(v[0], str)
                    and all(isinstance(a, int) and not isinstance(a, bool) for a in v[1:]),
                    vw, "a factor is [alphabet, index, exponent]")
            _expect(v[0] in ALPHABETS, vw, f"alphabet must be one of {ALPHABETS}")
            _expect(v[1] != 0, vw, "variable index 0 does not exist")
            _expect(v[2] > 0, vw, "exponents are positive")
            _expect((v[0], v[1]) not in exps, vw, "repeated variable")
            exps[(v[0], v[1])] = v[2]
        key = next(iter(Polynomial.monomial(exps).terms))
        _expect(key not in acc, here, "repeated monomial")
        _expect(c != 0, f"{here}/c", "zero coefficients are not stored")
        acc[key] = c
    return Polynomial(acc)


def from_doc(doc: Any, where: str = "") -> Any:
    if isinstance(doc, list):
        return [from_doc(v, f"{where}/{n}") for n, v in enumerate(doc)]
    _expect(isinstance(doc, dict), where or "/", "expected a JSON object")
    keys = set(doc)
    if keys == {"terms"}:
        return _polynomial(doc, where)
    if keys == {"oneline"}:
        v = _int_list(doc["oneline"], f"{where}/oneline")
        _expect(sorted(v) == list(range(1, len(v) + 1)), f"{where}/oneline", "not a permutation")
        return Permutation(tuple(v))
    if keys == {"flavor", "positions", "k", "mu", "lambda"}:
        _expect(doc["flavor"] in ("Gr", "LG", "OG"), f"{where}/flavor", "unknown flavor")
        return VexillaryData(doc["flavor"], _cells(doc["positions"], f"{where}/positions"),
                             tuple(_int_list(doc["k"], f"{where}/k")),
                             tuple(_int_list(doc["mu"], f"{where}/mu")),
                             tuple(_int_list(doc["lambda"], f"{where}/lambda")))
    if keys == {"path", "xP"}:
        path = EssentialPath(_cells(doc["path"], f"{where}/path"))
        _expect(isinstance(doc["xP"], list), f"{where}/xP", "expected a list")
        xp = [from_doc(v, f"{where}/xP/{n}") for n, v in enumerate(doc["xP"])]
        _expect(tuple(xp) == path.x_p(), f"{where}/xP", "does not match the path")
        return path
    if keys == {"classification"}:
        d = doc["classification"]
        here = f"{where}/classification"
        _expect(isinstance(d, dict), here, "expected an object")
        try:
            return Classification(
                vexillary=d["vexillary"], sp_vexillary=d["sp_vexillary"],
                i_grassmannian=d["i_grassmannian"], fpf_i_grassmannian=d["fpf_i_grassmannian"],
                essential_o=_cells(d["essential_o"], f"{here}/essential_o"),
                essential_sp=_cells(d["essential_sp"], f"{here}/essential_sp"),
                shape_o=tuple(_int_list(d["shape_o"], f"{here}/shape_o")),
                shape_sp=None if d["shape_sp"] is None
                else tuple(_int_list(d["shape_sp"], f"{here}/shape_sp")))
        except KeyError as exc:
            raise SerializationError(f"{here}: missing key {exc.args[0]!r}") from None
    raise SerializationError(f"{where or '/'}: unrecognized object with keys {sorted(keys)}")


def loads(text: str) -> Any:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SerializationError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: "
                                 f"{exc.msg}") from None
    return from_doc(doc)
