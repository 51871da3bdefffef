"""Truncated formal power series in non-commuting letters.

Series live over a finite alphabet of letters (0 -> A, 1 -> B, ...) with
polynomial coefficients from :mod:`splitcond.poly`.  A word's length is its
degree, and the grading doubles as the power of the step size t: in a
splitting product every exponent is (scalar) * (letter) * t, so a word of
length j always carries exactly t^j.  "Vanishes through degree p" therefore
means the same thing as O(t^{p+1}).

The truncation degree is fixed at construction and preserved by every
operation; combining series with different truncations or alphabets raises
instead of silently re-truncating.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from .poly import Poly, Scalar, as_poly

Word = tuple[int, ...]

EMPTY_WORD: Word = ()

_LETTER_NAMES = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"


class TruncationMismatch(ValueError):
    """Operands carry different truncation degrees."""


class AlphabetMismatch(ValueError):
    """Operands carry different alphabet sizes."""


class NonzeroConstantTerm(ValueError):
    """exp() needs a series with zero constant term."""


class ConstantTermNotOne(ValueError):
    """log() needs a series with constant term exactly 1."""


class DegreeBeyondTruncation(ValueError):
    """Requested homogeneous degree exceeds the truncation degree."""


def word_str(word: Word) -> str:
    """Render a word as a letter string, e.g. (0, 0, 1) -> "AAB"."""
    if not word:
        return "1"
    return "".join(_LETTER_NAMES[i] for i in word)


class NCSeries:
    """Truncated series: map word -> Poly, all words of length <= truncation."""

    __slots__ = ("truncation", "alphabet_size", "terms")

    def __init__(
        self,
        truncation: int,
        alphabet_size: int = 2,
        terms: Mapping[Word, Union[Poly, Scalar]] | None = None,
    ):
        if truncation < 0:
            raise ValueError(f"truncation degree must be >= 0, got {truncation}")
        if alphabet_size < 1:
            raise ValueError(f"alphabet size must be >= 1, got {alphabet_size}")
        self.truncation = truncation
        self.alphabet_size = alphabet_size
        canonical: dict[Word, Poly] = {}
        if terms:
            for word, coeff in terms.items():
                word = tuple(word)
                if len(word) > truncation:
                    raise DegreeBeyondTruncation(
                        f"word {word_str(word)} exceeds truncation degree {truncation}"
                    )
                if any(i < 0 or i >= alphabet_size for i in word):
                    raise ValueError(f"word {word!r} uses letters outside the alphabet")
                poly = as_poly(coeff)
                if not poly.is_zero:
                    canonical[word] = poly
        self.terms = canonical

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, truncation: int, alphabet_size: int = 2) -> "NCSeries":
        return cls(truncation, alphabet_size)

    @classmethod
    def unit(cls, truncation: int, alphabet_size: int = 2) -> "NCSeries":
        return cls(truncation, alphabet_size, {EMPTY_WORD: 1})

    @classmethod
    def letter(
        cls,
        index: int,
        truncation: int,
        alphabet_size: int = 2,
        coeff: Union[Poly, Scalar] = 1,
    ) -> "NCSeries":
        return cls(truncation, alphabet_size, {(index,): coeff})

    # -- structure -----------------------------------------------------------

    def coefficient(self, word: Word) -> Poly:
        """Coefficient of a word; zero polynomial if the word is absent."""
        word = tuple(word)
        if len(word) > self.truncation:
            raise DegreeBeyondTruncation(
                f"word {word_str(word)} exceeds truncation degree {self.truncation}"
            )
        return self.terms.get(word, Poly())

    @property
    def constant_term(self) -> Poly:
        return self.terms.get(EMPTY_WORD, Poly())

    def homogeneous_part(self, degree: int) -> "NCSeries":
        """The degree-j component, as a series with the same truncation."""
        if degree > self.truncation:
            raise DegreeBeyondTruncation(
                f"degree {degree} exceeds truncation degree {self.truncation}"
            )
        picked = {w: c for w, c in self.terms.items() if len(w) == degree}
        return NCSeries(self.truncation, self.alphabet_size, picked)

    def is_zero(self) -> bool:
        return not self.terms

    def max_degree_present(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def _check_compatible(self, other: "NCSeries") -> None:
        if self.truncation != other.truncation:
            raise TruncationMismatch(
                f"truncation degrees differ: {self.truncation} vs {other.truncation}"
            )
        if self.alphabet_size != other.alphabet_size:
            raise AlphabetMismatch(
                f"alphabet sizes differ: {self.alphabet_size} vs {other.alphabet_size}"
            )

    # -- linear structure ------------------------------------------------------

    def __add__(self, other: "NCSeries") -> "NCSeries":
        if not isinstance(other, NCSeries):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.terms)
        for word, coeff in other.terms.items():
            out[word] = out.get(word, Poly()) + coeff
        return NCSeries(self.truncation, self.alphabet_size, out)

    def __neg__(self) -> "NCSeries":
        return NCSeries(
            self.truncation, self.alphabet_size, {w: -c for w, c in self.terms.items()}
        )

    def __sub__(self, other: "NCSeries") -> "NCSeries":
        if not isinstance(other, NCSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Union[Poly, Scalar]) -> "NCSeries":
        factor = as_poly(factor)
        return NCSeries(
            self.truncation,
            self.alphabet_size,
            {w: c * factor for w, c in self.terms.items()},
        )

    def __mul__(self, other: Union["NCSeries", Poly, Scalar]) -> "NCSeries":
        """Concatenation product with a series, or coefficient-wise scaling."""
        if isinstance(other, NCSeries):
            self._check_compatible(other)
            out: dict[Word, Poly] = {}
            for u, cu in self.terms.items():
                room = self.truncation - len(u)
                for v, cv in other.terms.items():
                    if len(v) > room:
                        continue
                    word = u + v
                    prod = cu * cv
                    if word in out:
                        out[word] = out[word] + prod
                    else:
                        out[word] = prod
            return NCSeries(self.truncation, self.alphabet_size, out)
        if isinstance(other, (Poly, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Union[Poly, Scalar]) -> "NCSeries":
        if isinstance(other, (Poly, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "NCSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series exponent must be a nonnegative integer")
        result = NCSeries.unit(self.truncation, self.alphabet_size)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCSeries):
            return NotImplemented
        return (
            self.truncation == other.truncation
            and self.alphabet_size == other.alphabet_size
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.truncation, self.alphabet_size, frozenset(self.terms.items())))

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[tuple[str, str]] = []  # (sign, body)
        for word in sorted(self.terms, key=lambda w: (len(w), w)):
            poly = self.terms[word]
            sign = "+"
            if len(poly.terms) == 1:
                # pull the sign out of single-term coefficients
                ((_, coeff),) = poly.terms.items()
                if coeff < 0:
                    sign = "-"
                    poly = -poly
                pstr = str(poly)
                wrapped = pstr
            else:
                pstr = str(poly)
                wrapped = f"({pstr})"
            if not word:
                pieces.append((sign, wrapped))
            elif poly == 1:
                pieces.append((sign, word_str(word)))
            else:
                pieces.append((sign, f"{wrapped}*{word_str(word)}"))
        first_sign, first_body = pieces[0]
        text = first_body if first_sign == "+" else f"-{first_body}"
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"NCSeries(N={self.truncation}, {self})"


def exp(g: NCSeries) -> NCSeries:
    """Truncated exponential sum_{j<=N} g^j / j!.

    Requires a zero constant term, else the composition is undefined.
    Evaluated Horner style: 1 + g(1 + g/2(1 + g/3(...))), costing one series
    product per degree.
    """
    if not g.constant_term.is_zero:
        raise NonzeroConstantTerm("exp() requires a series with zero constant term")
    unit = NCSeries.unit(g.truncation, g.alphabet_size)
    result = unit
    for k in range(g.truncation, 0, -1):
        result = unit + (g * result).scale(Fraction(1, k))
    return result


def log(f: NCSeries) -> NCSeries:
    """Truncated logarithm of a series with constant term exactly 1.

    Mercator series in x = f - 1, evaluated Horner style:
    x(1 - x(1/2 - x(1/3 - ...))).  Inverse of exp() up to the truncation.
    """
    if f.constant_term != 1:
        raise ConstantTermNotOne("log() requires a series with constant term 1")
    x = f - NCSeries.unit(f.truncation, f.alphabet_size)
    acc = NCSeries.zero(f.truncation, f.alphabet_size)
    unit = NCSeries.unit(f.truncation, f.alphabet_size)
    for k in range(f.truncation, 0, -1):
        acc = unit.scale(Fraction(1, k)) - (x * acc)
    return x * acc
