"""Sparse polynomials with integer (or rational) coefficients.

Variables are ``(alphabet, i)`` with alphabet x, y or t and a nonzero
integer index i; negative indices are the letters that make back-stable
objects work.  Publicly a monomial is a sorted tuple of
``(alphabet, index, exponent)`` triples.  Internally each variable owns a
16-bit field of one Python int, so multiplying monomials is integer
addition.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

Var = tuple[str, int]
Monomial = tuple[tuple[str, int, int], ...]
Scalar = Union[int, Fraction]

ALPHABETS = ("x", "y", "t")


class PolynomialError(ArithmeticError):
    pass


# Internally a monomial is packed into one integer: each variable owns a
# fixed 16-bit field (assigned on first use), so multiplying monomials is
# integer addition.  The public API only ever shows sorted triples.

_TERM_LIMIT: int | None = None


def set_term_limit(limit: int | None) -> None:
    """Refuse to build products with more than ``limit`` terms (None: no cap)."""
    global _TERM_LIMIT
    _TERM_LIMIT = limit if limit else None


_BITS = 16
_MASK = (1 << _BITS) - 1
_SLOTS: dict[Var, int] = {}
_SLOT_VARS: list[Var] = []


def _slot(v: Var) -> int:
    s = _SLOTS.get(v)
    if s is None:
        s = _SLOTS[v] = len(_SLOT_VARS)
        _SLOT_VARS.append(v)
    return s


def _encode(mono: Iterable[tuple[str, int, int]]) -> int:
    key = 0
    for al, i, e in mono:
        if e < 0 or e > _MASK:
            raise PolynomialError(f"exponent {e} out of range")
        key += e << (_BITS * _slot((al, i)))
    return key


@lru_cache(maxsize=1 << 18)
def _decode(key: int) -> Monomial:
    out = []
    s = 0
    while key:
        e = key & _MASK
        if e:
            al, i = _SLOT_VARS[s]
            out.append((al, i, e))
        key >>= _BITS
        s += 1
    out.sort()
    return tuple(out)


def _normalize_coeff(c: Scalar) -> Scalar:
    if type(c) is int:
        return c
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Polynomial:
    """Immutable mapping monomial -> nonzero coefficient.

    Coefficients are ints; Fractions appear only after ``scale`` by a
    non-integer and are reduced back to ints whenever possible.
    """

    __slots__ = ("_terms", "_hash", "_deg")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        self._terms: dict[int, Scalar] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    k = _encode(m)
                    v = self._terms.get(k, 0) + c
                    if v:
                        self._terms[k] = _normalize_coeff(v)
                    else:
                        del self._terms[k]
        self._hash = None
        self._deg = None

    @classmethod
    def _raw(cls, terms: dict[int, Scalar]) -> Polynomial:
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        p._deg = None
        return p

    def __reduce__(self):
        # packed keys depend on this process's variable slots
        return (Polynomial, (self.terms,))

    @classmethod
    def const(cls, c: Scalar) -> Polynomial:
        return cls._raw({0: _normalize_coeff(c)}) if c else cls()

    @classmethod
    def var(cls, alphabet: str, index: int, exponent: int = 1) -> Polynomial:
        if alphabet not in ALPHABETS:
            raise PolynomialError(f"unknown alphabet {alphabet!r}")
        if index == 0:
            raise PolynomialError("variable index 0 does not exist")
        if exponent == 0:
            return cls.const(1)
        return cls({((alphabet, index, exponent),): 1})

    @classmethod
    def monomial(cls, exps: Mapping[Var, int], coeff: Scalar = 1) -> Polynomial:
        key = tuple(sorted((al, i, e) for (al, i), e in exps.items() if e))
        return cls({key: coeff})

    # mapping protocol

    @property
    def terms(self) -> dict[Monomial, Scalar]:
        return {_decode(k): c for k, c in self._terms.items()}

    def items(self):
        return ((_decode(k), c) for k, c in self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, mono: Monomial) -> Scalar:
        return self._terms.get(_encode(mono), 0)

    def constant_term(self) -> Scalar:
        return self._terms.get(0, 0)

    def variables(self) -> set[Var]:
        return {(al, i) for m, _ in self.items() for al, i, _ in m}

    def degree(self) -> int:
        if self._deg is None:
            self._deg = max((sum(e for _, _, e in m) for m, _ in self.items()), default=-1)
        return self._deg

    def is_homogeneous(self) -> bool:
        return len({sum(e for _, _, e in m) for m, _ in self.items()}) <= 1

    def homogeneous_part(self, d: int) -> Polynomial:
        return Polynomial._raw({k: c for k, c in self._terms.items()
                                if sum(e for _, _, e in _decode(k)) == d})

    # arithmetic

    @staticmethod
    def _coerce(other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(other)
        return NotImplemented

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = _normalize_coeff(v)
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self._terms or not other._terms:
            return Polynomial()
        if self.degree() + other.degree() > _MASK:
            raise PolynomialError("product degree exceeds the exponent range")
        out: dict[int, Scalar] = {}
        get = out.get
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 + m2
                out[m] = get(m, 0) + c1 * c2
        if _TERM_LIMIT is not None and len(out) > _TERM_LIMIT:
            raise PolynomialError(f"product has {len(out)} terms, above the limit {_TERM_LIMIT}")
        return Polynomial._raw({m: _normalize_coeff(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> Polynomial:
        if not c:
            return Polynomial()
        return Polynomial._raw({m: _normalize_coeff(v * c) for m, v in self._terms.items()})

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise PolynomialError("negative power")
        out = Polynomial.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            # constants hash like the scalars they compare equal to
            if not self._terms or list(self._terms) == [0]:
                self._hash = hash(self._terms.get(0, 0))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def exact_div_scalar(self, c: int) -> Polynomial:
        out = {}
        for m, v in self._terms.items():
            q, r = divmod(v, c)
            if r:
                raise PolynomialError(f"coefficient {v} not divisible by {c}")
            out[m] = q
        return Polynomial._raw(out)

    # substitution

    def substitute(self, mapping: Mapping[Var, Polynomial | Scalar]) -> Polynomial:
        """Replace variables by polynomials; unmapped variables stay."""
        out = Polynomial()
        powers: dict[tuple[Var, int], Polynomial] = {}
        for m, c in self.items():
            term = Polynomial.const(c)
            rest = []
            for al, i, e in m:
                if (al, i) in mapping:
                    key = ((al, i), e)
                    if key not in powers:
                        powers[key] = Polynomial._coerce(mapping[(al, i)]) ** e
                    term = term * powers[key]
                else:
                    rest.append((al, i, e))
            if rest:
                term = term * Polynomial({tuple(rest): 1})
            out = out + term
        return out

    def rename(self, fn) -> Polynomial:
        """Apply an injective relabeling fn(alphabet, index) -> (alphabet, index)."""
        out: dict[Monomial, Scalar] = {}
        for m, c in self.items():
            exps: dict[Var, int] = {}
            for al, i, e in m:
                v = fn(al, i)
                exps[v] = exps.get(v, 0) + e
            key = tuple(sorted((a, i, e) for (a, i), e in exps.items()))
            out[key] = out.get(key, 0) + c
        return Polynomial(out)

    def swap(self, a: Var, b: Var) -> Polynomial:
        return self.rename(lambda al, i: b if (al, i) == a else a if (al, i) == b else (al, i))

    def zero_out(self, pred) -> Polynomial:
        """Set every variable v with pred(alphabet, index) true to zero."""
        return Polynomial._raw({k: c for k, c in self._terms.items()
                                if not any(pred(al, i) for al, i, _ in _decode(k))})

    def evaluate(self, values: Mapping[Var, Scalar]) -> Scalar:
        total: Scalar = 0
        for m, c in self.items():
            t = c
            for al, i, e in m:
                t = t * values[(al, i)] ** e
            total += t
        return _normalize_coeff(total)

    # display

    def sorted_terms(self) -> list[tuple[Monomial, Scalar]]:
        """Terms by degree (high first), then lexicographically with larger
        exponents on earlier variables first."""
        def key(item):
            m, _ = item
            return (-sum(e for _, _, e in m), tuple((al, i, -e) for al, i, e in m))
        return sorted(self.items(), key=key)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Polynomial({render(self)})"


def var_name(alphabet: str, index: int) -> str:
    return f"{alphabet}{index}" if index > 0 else f"{alphabet}[{index}]"


def render(p: Polynomial) -> str:
    """Human form such as ``x1^2 + x1*x2 - y1*x3``."""
    if p.is_zero():
        return "0"
    pieces = []
    for k, (m, c) in enumerate(p.sorted_terms()):
        factors = [var_name(al, i) + (f"^{e}" if e > 1 else "") for al, i, e in m]
        mag = -c if c < 0 else c
        if factors:
            body = "*".join(factors)
            if mag != 1:
                body = f"{mag}*{body}"
        else:
            body = str(mag)
        if k == 0:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces)


ZERO = Polynomial()
ONE = Polynomial.const(1)


def x(i: int) -> Polynomial:
    return Polynomial.var("x", i)


def y(i: int) -> Polynomial:
    return Polynomial.var("y", i)


def window_indices(m: int, top: int) -> list[int]:
    """Indices -m, ..., -1, 1, ..., top."""
    return list(range(-m, 0)) + list(range(1, top + 1))


# divided differences


def exact_divide_linear(g: Polynomial, a: Var, b: Var) -> Polynomial:
    """Quotient of g by (a - b); raises if the division leaves a remainder."""
    # write g = sum_k c_k a^k with c_k free of a and synthetically divide
    coeffs: dict[int, dict[Monomial, Scalar]] = {}
    for m, c in g.items():
        k = 0
        rest = []
        for al, i, e in m:
            if (al, i) == a:
                k = e
            else:
                rest.append((al, i, e))
        coeffs.setdefault(k, {})[tuple(rest)] = c
    if not coeffs:
        return Polynomial()
    top = max(coeffs)
    vb = Polynomial.var(*b)
    q: dict[int, Polynomial] = {}
    carry = Polynomial()
    for k in range(top, 0, -1):
        carry = Polynomial(coeffs.get(k, {})) + carry
        q[k - 1] = carry
        carry = carry * vb
    remainder = Polynomial(coeffs.get(0, {})) + carry
    if not remainder.is_zero():
        raise PolynomialError(f"{render(g)} is not divisible by {var_name(*a)} - {var_name(*b)}")
    out = Polynomial()
    va = Polynomial.var(*a)
    for k, ck in q.items():
        out = out + ck * va ** k
    return out


def next_index(i: int) -> int:
    """The letter after x_i in the order ... x_{-1}, x_1, x_2 ..."""
    return 1 if i == -1 else i + 1


def divided_difference(f: Polynomial, i: int, alphabet: str = "x") -> Polynomial:
    """(f - s_i f) / (x_i - x_{i+1}), treating every other variable as a scalar.

    For negative i, ``i+1`` means the next letter of the ordered alphabet,
    so ``divided_difference(f, -1)`` exchanges x_{-1} and x_1.
    """
    if i == 0:
        raise PolynomialError("there is no divided difference at index 0")
    a = (alphabet, i)
    b = (alphabet, next_index(i))
    g = f - f.swap(a, b)
    return exact_divide_linear(g, a, b)


def divided_difference_word(f: Polynomial, word: Sequence[int]) -> Polynomial:
    """Apply d_{a_1}, then d_{a_2}, ... (leftmost letter acts first)."""
    for a in word:
        f = divided_difference(f, a)
    return f


# symmetric functions in explicit variable lists


@lru_cache(maxsize=None)
def elementary(d: int, variables: tuple[Var, ...]) -> Polynomial:
    if d < 0 or d > len(variables):
        return ZERO
    if d == 0:
        return ONE
    head, rest = variables[0], variables[1:]
    return elementary(d, rest) + Polynomial.var(*head) * elementary(d - 1, rest)


@lru_cache(maxsize=None)
def complete(d: int, variables: tuple[Var, ...]) -> Polynomial:
    if d < 0:
        return ZERO
    if d == 0:
        return ONE
    if not variables:
        return ZERO
    head, rest = variables[0], variables[1:]
    return complete(d, rest) + Polynomial.var(*head) * complete(d - 1, variables)


def xs(indices: Iterable[int], alphabet: str = "x") -> tuple[Var, ...]:
    return tuple((alphabet, i) for i in indices)


class TruncatedSeries:
    """Power series sum_d c_d, stored as homogeneous parts c_0..c_cap.

    Multiplication truncates at the cap, so degree-d coefficients of a
    product are exact whenever d <= cap.
    """

    __slots__ = ("parts", "cap")

    def __init__(self, parts: Sequence[Polynomial], cap: int):
        self.cap = cap
        ps = list(parts[: cap + 1])
        ps += [ZERO] * (cap + 1 - len(ps))
        self.parts = tuple(ps)

    @classmethod
    def one(cls, cap: int) -> TruncatedSeries:
        return cls([ONE], cap)

    def __getitem__(self, d: int) -> Polynomial:
        if d < 0:
            return ZERO
        if d > self.cap:
            raise PolynomialError(f"degree {d} is beyond the truncation cap {self.cap}")
        return self.parts[d]

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        cap = min(self.cap, other.cap)
        out = []
        for d in range(cap + 1):
            acc = ZERO
            for a in range(d + 1):
                if self.parts[a] and other.parts[d - a]:
                    acc = acc + self.parts[a] * other.parts[d - a]
            out.append(acc)
        return TruncatedSeries(out, cap)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        cap = min(self.cap, other.cap)
        return TruncatedSeries([self.parts[d] + other.parts[d] for d in range(cap + 1)], cap)

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self.cap == other.cap and self.parts == other.parts

    def __repr__(self) -> str:
        return "TruncatedSeries(" + ", ".join(render(p) for p in self.parts) + ")"


class RatioSeries:
    """prod_{a in num} (1 + a) / prod_{b in den} (1 - b), degree by degree.

    Coefficients are computed on demand, so there is no truncation cap:
    the degree-d part is sum_{i+j=d} e_i(num) h_j(den).
    """

    __slots__ = ("num", "den", "_cache")

    def __init__(self, num: Iterable[Var], den: Iterable[Var]):
        self.num = tuple(num)
        self.den = tuple(den)
        self._cache: dict[int, Polynomial] = {}

    def __getitem__(self, d: int) -> Polynomial:
        if d < 0:
            return ZERO
        if d not in self._cache:
            acc = ZERO
            for i in range(min(d, len(self.num)) + 1):
                acc = acc + elementary(i, self.num) * complete(d - i, self.den)
            self._cache[d] = acc
        return self._cache[d]

    def truncate(self, cap: int) -> TruncatedSeries:
        return TruncatedSeries([self[d] for d in range(cap + 1)], cap)


def ratio_series(num: Iterable[Var], den: Iterable[Var], cap: int) -> TruncatedSeries:
    return RatioSeries(num, den).truncate(cap)


class UnitSeries:
    """The constant series 1, used to pad an odd-length family."""

    def __getitem__(self, d: int) -> Polynomial:
        return ONE if d == 0 else ZERO


class CorrectedSeries:
    """A series equal to ``base`` except in one degree, where ``extra`` is added."""

    __slots__ = ("base", "degree", "extra")

    def __init__(self, base, degree: int, extra: Polynomial):
        self.base = base
        self.degree = degree
        self.extra = extra

    def __getitem__(self, d: int) -> Polynomial:
        if d == self.degree:
            return self.base[d] + self.extra
        return self.base[d]
