"""Exact multivariate polynomials in splitting-scheme stage coefficients.

This is the coefficient ring used by every symbolic computation in the
package: commutative polynomials over arbitrary-precision rationals
(``fractions.Fraction``) in the stage symbols a1..as, b1..bs of a splitting
scheme.

Representation
--------------
A monomial is a tuple of (Symbol, exponent) pairs, sorted by the canonical
symbol order a1 < b1 < a2 < b2 < ..., with all exponents > 0.  The empty
tuple is the monomial 1.

A polynomial maps monomials to nonzero Fraction coefficients:

    a1*b2/2 - a2*b1   ->   {((a1,1),(b2,1)): 1/2, ((b1,1),(a2,1)): -1}

The zero polynomial has an empty term map.  All operations return results in
this canonical form, so equality is plain dict comparison.  Poly values are
immutable by convention: no method mutates ``self`` or its arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Fraction

SYMBOL_KINDS = ("a", "b")


class MissingAssignment(LookupError):
    """Evaluation point does not assign a value to a symbol of the polynomial."""


@dataclass(frozen=True)
class Symbol:
    """One stage coefficient of a splitting scheme: a_j or b_j."""

    kind: str
    stage: int

    def __post_init__(self) -> None:
        if self.kind not in SYMBOL_KINDS:
            raise ValueError(f"symbol kind must be one of {SYMBOL_KINDS}, got {self.kind!r}")
        if self.stage < 1:
            raise ValueError(f"stage index must be >= 1, got {self.stage}")

    def sort_key(self) -> tuple[int, int]:
        # canonical order a1 < b1 < a2 < b2 < ...
        return (self.stage, SYMBOL_KINDS.index(self.kind))

    def __str__(self) -> str:
        return f"{self.kind}{self.stage}"


# A monomial: sorted tuple of (Symbol, exponent>0) pairs; () is the monomial 1.
Monomial = tuple[tuple[Symbol, int], ...]

Scalar = Union[int, Fraction]

_ONE_MONO: Monomial = ()


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps: dict[Symbol, int] = dict(m1)
    for sym, e in m2:
        exps[sym] = exps.get(sym, 0) + e
    return tuple(sorted(exps.items(), key=lambda item: item[0].sort_key()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_str(m: Monomial) -> str:
    # factors display kind-major (a1*a2*...*b1*b2) like handwritten products
    factors = sorted(m, key=lambda item: (item[0].kind, item[0].stage))
    return "*".join(f"{sym}^{e}" if e > 1 else str(sym) for sym, e in factors)


class Poly:
    """Sparse exact polynomial in the stage symbols, immutable by convention."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        canonical: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                value = Fraction(coeff)
                if value != 0:
                    canonical[mono] = value
        self.terms = canonical

    @classmethod
    def const(cls, value: Scalar) -> "Poly":
        return cls({_ONE_MONO: Fraction(value)})

    @classmethod
    def symbol(cls, kind: str, stage: int) -> "Poly":
        return cls({((Symbol(kind, stage), 1),): Fraction(1)})

    @staticmethod
    def _coerce(value: "Poly" | Scalar) -> "Poly":
        if isinstance(value, Poly):
            return value
        if isinstance(value, (int, Fraction)):
            return Poly.const(value)
        return NotImplemented  # type: ignore[return-value]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Poly" | Scalar) -> "Poly":
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + coeff
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({mono: -coeff for mono, coeff in self.terms.items()})

    def __sub__(self, other: "Poly" | Scalar) -> "Poly":
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "Poly":
        return Poly._coerce(other) - self

    def __mul__(self, other: "Poly" | Scalar) -> "Poly":
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _mono_mul(m1, m2)
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = Poly.const(1)
        for _ in range(exponent):
            result = result * self
        return result

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree 0."""
        if not self.terms:
            return 0
        return max(_mono_degree(m) for m in self.terms)

    def symbols(self) -> list[Symbol]:
        """All symbols occurring in the polynomial, in canonical order."""
        seen = {sym for mono in self.terms for sym, _ in mono}
        return sorted(seen, key=Symbol.sort_key)

    def constant(self) -> Fraction:
        """Coefficient of the monomial 1."""
        return self.terms.get(_ONE_MONO, Fraction(0))

    def evaluate(self, point: Mapping[Symbol, Scalar]) -> Fraction:
        """Exact value of the polynomial at a rational point.

        Every symbol occurring in the polynomial must be assigned, otherwise
        MissingAssignment is raised.
        """
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            value = coeff
            for sym, e in mono:
                if sym not in point:
                    raise MissingAssignment(f"no value assigned to symbol {sym}")
                value *= Fraction(point[sym]) ** e
            total += value
        return total

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- rendering -----------------------------------------------------------

    def _sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        # graded lexicographic, highest first: degree, then exponent vector
        # over the symbols of this polynomial in canonical order.
        syms = self.symbols()
        index = {sym: i for i, sym in enumerate(syms)}

        def key(item: tuple[Monomial, Fraction]):
            mono, _ = item
            vec = [0] * len(syms)
            for sym, e in mono:
                vec[index[sym]] = e
            return (_mono_degree(mono), tuple(vec))

        return sorted(self.terms.items(), key=key, reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for mono, coeff in self._sorted_terms():
            body = _mono_str(mono)
            magnitude = abs(coeff)
            if not body:
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}*{body}"
            if not pieces:
                pieces.append(text if coeff > 0 else f"-{text}")
            else:
                pieces.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Poly({self})"


ZERO = Poly()
ONE = Poly.const(1)


def as_poly(value: Poly | Scalar) -> Poly:
    """Coerce an int or Fraction to a constant Poly; pass Poly through."""
    coerced = Poly._coerce(value)
    if coerced is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a polynomial")
    return coerced


def stage_point(
    a: Iterable[Scalar], b: Iterable[Scalar]
) -> dict[Symbol, Fraction]:
    """Assignment {a1: ..., b1: ..., a2: ...} from two coefficient lists."""
    point: dict[Symbol, Fraction] = {}
    for kind, values in (("a", a), ("b", b)):
        for j, value in enumerate(values, start=1):
            point[Symbol(kind, j)] = Fraction(value)
    return point
