"""Exact sparse polynomials with optional degree truncation.

Coefficients are arbitrary-precision integers; exponents of the one-variable
weight series are exact rationals.  Everything here is a plain value: no
mutation after construction, so instances can be shared freely.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Mapping


class Monomial:
    """A product of variables x_i with positive integer exponents.

    Variables are opaque integer ids.  The empty monomial is the constant 1.
    """

    __slots__ = ("powers", "degree", "_hash")

    def __init__(self, powers: Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        for var, exp in powers:
            if exp == 0:
                continue
            if exp < 0:
                raise ValueError("negative exponent")
            acc[var] = acc.get(var, 0) + exp
        self.powers = tuple(sorted(acc.items()))
        self.degree = sum(acc.values())
        self._hash = hash(self.powers)

    @staticmethod
    def one() -> "Monomial":
        return _MONOMIAL_ONE

    @staticmethod
    def var(v: int, exp: int = 1) -> "Monomial":
        return Monomial(((v, exp),))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.powers + other.powers)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self.powers == other.powers

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Monomial({self.render() or '1'})"

    def render(self) -> str:
        parts = []
        for var, exp in self.powers:
            parts.append(f"x{var}" if exp == 1 else f"x{var}^{exp}")
        return "*".join(parts)


_MONOMIAL_ONE = Monomial()


def _cmp_monomials(a: Monomial, b: Monomial) -> int:
    """Graded-lex comparison used for canonical printing.

    Lower degree first; at equal degree the monomial with the higher exponent
    on the earliest differing variable sorts later, so e.g. x3*x7 precedes
    x1^2.
    """
    if a.degree != b.degree:
        return -1 if a.degree < b.degree else 1
    da, db = dict(a.powers), dict(b.powers)
    for var in sorted(set(da) | set(db)):
        ea, eb = da.get(var, 0), db.get(var, 0)
        if ea != eb:
            return 1 if ea > eb else -1
    return 0


_MONO_KEY = cmp_to_key(_cmp_monomials)


def _render_terms(pairs: list[tuple[str, int]]) -> str:
    """Shared sign/coefficient formatting: pairs of (body, coefficient)."""
    if not pairs:
        return "0"
    chunks: list[str] = []
    for i, (body, coeff) in enumerate(pairs):
        mag = abs(coeff)
        if body == "":
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if i == 0:
            chunks.append(text if coeff > 0 else f"-{text}")
        else:
            chunks.append(f" + {text}" if coeff > 0 else f" - {text}")
    return "".join(chunks)


class TruncatedPolynomial:
    """Integer-coefficient polynomial, optionally truncated at a total degree.

    The term map never stores zero coefficients and never holds a monomial
    above the cap, so equal polynomials have identical maps.
    """

    __slots__ = ("terms", "cap")

    def __init__(self, terms: Mapping[Monomial, int] | None = None,
                 cap: int | None = None):
        clean: dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff == 0:
                    continue
                if cap is not None and mono.degree > cap:
                    continue
                clean[mono] = clean.get(mono, 0) + coeff
        self.terms = clean
        self.cap = cap

    @staticmethod
    def zero(cap: int | None = None) -> "TruncatedPolynomial":
        return TruncatedPolynomial({}, cap)

    @staticmethod
    def one(cap: int | None = None) -> "TruncatedPolynomial":
        return TruncatedPolynomial({Monomial.one(): 1}, cap)

    @staticmethod
    def variable(v: int, cap: int | None = None) -> "TruncatedPolynomial":
        return TruncatedPolynomial({Monomial.var(v): 1}, cap)

    @staticmethod
    def from_term(coeff: int, mono: Monomial,
                  cap: int | None = None) -> "TruncatedPolynomial":
        return TruncatedPolynomial({mono: coeff}, cap)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Monomial) -> int:
        return self.terms.get(mono, 0)

    def truncate(self, d: int) -> "TruncatedPolynomial":
        return TruncatedPolynomial(
            {m: c for m, c in self.terms.items() if m.degree <= d}, d)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, TruncatedPolynomial)
                and self.terms == other.terms)

    def __neg__(self) -> "TruncatedPolynomial":
        return TruncatedPolynomial({m: -c for m, c in self.terms.items()},
                                   self.cap)

    def __add__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        return add(self, other)

    def __sub__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        return add(self, -other)

    def __mul__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        return mul_trunc(self, other, _combined_cap(self.cap, other.cap))

    def __repr__(self) -> str:
        return f"TruncatedPolynomial({self.render()})"

    def render(self) -> str:
        order = sorted(self.terms, key=_MONO_KEY)
        return _render_terms([(m.render(), self.terms[m]) for m in order])


def _combined_cap(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def add(p: TruncatedPolynomial, q: TruncatedPolynomial) -> TruncatedPolynomial:
    """Coefficient-wise sum; caps must agree where both are set."""
    if p.cap is not None and q.cap is not None and p.cap != q.cap:
        raise ValueError(f"incompatible caps {p.cap} and {q.cap}")
    out = dict(p.terms)
    for mono, coeff in q.terms.items():
        s = out.get(mono, 0) + coeff
        if s:
            out[mono] = s
        else:
            out.pop(mono, None)
    return TruncatedPolynomial(out, _combined_cap(p.cap, q.cap))


def mul_trunc(p: TruncatedPolynomial, q: TruncatedPolynomial,
              d: int | None) -> TruncatedPolynomial:
    """Product with every term of total degree above d discarded."""
    out: dict[Monomial, int] = {}
    for ma, ca in p.terms.items():
        if d is not None and ma.degree > d:
            continue
        for mb, cb in q.terms.items():
            if d is not None and ma.degree + mb.degree > d:
                continue
            mono = ma * mb
            s = out.get(mono, 0) + ca * cb
            if s:
                out[mono] = s
            else:
                del out[mono]
    return TruncatedPolynomial(out, d)


def product_trunc(factors: Iterable[tuple[int, Monomial]],
                  d: int) -> TruncatedPolynomial:
    """Expansion of prod (1 + sign*m) over the factors, truncated at degree d.

    Equals the sum over finite subsets of factors of the product of their
    signed monomials, restricted to total degree <= d.  Factors of degree 0
    are rejected: with them a truncation could not be computed from finitely
    many factors.
    """
    if d < 0:
        raise ValueError("negative truncation degree")
    acc: dict[Monomial, int] = {Monomial.one(): 1}
    for sign, mono in factors:
        if sign not in (1, -1):
            raise ValueError(f"factor sign must be +-1, got {sign!r}")
        if mono.degree == 0:
            raise ValueError("degree-0 factor breaks truncation soundness")
        if mono.degree > d:
            continue
        updates: dict[Monomial, int] = {}
        for cur, coeff in acc.items():
            if cur.degree + mono.degree > d:
                continue
            nm = cur * mono
            updates[nm] = updates.get(nm, 0) + sign * coeff
        for nm, delta in updates.items():
            s = acc.get(nm, 0) + delta
            if s:
                acc[nm] = s
            else:
                del acc[nm]
    return TruncatedPolynomial(acc, d)


class WeightSeries:
    """Finite sum of integer multiples of z^q with exact rational exponents q."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Fraction | int, int] | None = None):
        clean: dict[Fraction, int] = {}
        if terms:
            for q, coeff in terms.items():
                if coeff == 0:
                    continue
                key = Fraction(q)
                s = clean.get(key, 0) + coeff
                if s:
                    clean[key] = s
                else:
                    del clean[key]
        self.terms = clean

    @staticmethod
    def zero() -> "WeightSeries":
        return WeightSeries()

    @staticmethod
    def one() -> "WeightSeries":
        return WeightSeries({Fraction(0): 1})

    @staticmethod
    def power(q: Fraction | int, coeff: int = 1) -> "WeightSeries":
        return WeightSeries({Fraction(q): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, q: Fraction | int) -> int:
        return self.terms.get(Fraction(q), 0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeightSeries) and self.terms == other.terms

    def __neg__(self) -> "WeightSeries":
        return WeightSeries({q: -c for q, c in self.terms.items()})

    def __add__(self, other: "WeightSeries") -> "WeightSeries":
        out = dict(self.terms)
        for q, coeff in other.terms.items():
            s = out.get(q, 0) + coeff
            if s:
                out[q] = s
            else:
                del out[q]
        return WeightSeries(out)

    def __sub__(self, other: "WeightSeries") -> "WeightSeries":
        return self + (-other)

    def scaled(self, factor: int) -> "WeightSeries":
        return WeightSeries({q: factor * c for q, c in self.terms.items()})

    def __repr__(self) -> str:
        return f"WeightSeries({self.render()})"

    def render(self) -> str:
        pairs = []
        for q in sorted(self.terms):
            if q == 0:
                body = ""
            elif q == 1:
                body = "z"
            elif q.denominator == 1:
                body = f"z^{q.numerator}"
            else:
                body = f"z^({q})"
            pairs.append((body, self.terms[q]))
        return _render_terms(pairs)


def weight_series_from_poly(p: TruncatedPolynomial,
                            weight_of_var: Mapping[int, Fraction]
                            ) -> WeightSeries:
    """Substitute x_v := z^{weight_of_var[v]} into every term of p."""
    out: dict[Fraction, int] = {}
    for mono, coeff in p.terms.items():
        q = Fraction(0)
        for var, exp in mono.powers:
            q += Fraction(weight_of_var[var]) * exp
        s = out.get(q, 0) + coeff
        if s:
            out[q] = s
        else:
            del out[q]
    return WeightSeries(out)
