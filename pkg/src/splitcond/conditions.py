"""Order conditions for exponential splitting schemes, by two routes.

A scheme with stage coefficients a_1..a_s, b_1..b_s approximates e^{(A+B)t}
by the product e^{a_1 A t} e^{b_1 B t} ... e^{a_s A t} e^{b_s B t}.  It has
order p when the local error (product minus exact exponential) vanishes
through degree p.  This module turns that requirement into polynomial
condition systems on the stage coefficients:

* the logarithm route: take log of the splitting product, subtract A + B,
  and decompose each homogeneous degree over the Lyndon basis;
* the Taylor route: expand the q-th t-derivative of the local error at t = 0
  by the multinomial formula and read off the coefficients of the Lyndon
  words themselves.

The two resulting systems are not textually identical but cut out the same
solution sets; systems_equivalent() is the falsification harness for that.
Both routes emit, per degree q <= p and per Lyndon word of that degree, one
polynomial that must vanish.  No lower-order conditions are substituted
during generation, so the polynomials trace directly back to the series.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .lyndon import LieDecomposition, lie_decompose, lyndon_words_of_degree
from .poly import Poly, Scalar, Symbol, stage_point
from .series import NCSeries, Word, exp, log, word_str

ROUTES = ("taylor", "bch")


class NotOrderP(ValueError):
    """Scheme does not satisfy the order-p conditions it was claimed to."""


def _as_fraction_tuple(values: Iterable[Scalar]) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class ConcreteScheme:
    """A splitting scheme with explicit rational stage coefficients."""

    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    name: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _as_fraction_tuple(self.a))
        object.__setattr__(self, "b", _as_fraction_tuple(self.b))
        if len(self.a) != len(self.b):
            raise ValueError("coefficient lists a and b must have equal length")
        if not self.a:
            raise ValueError("a scheme needs at least one stage")

    @property
    def stages(self) -> int:
        return len(self.a)

    def point(self) -> dict[Symbol, Fraction]:
        return stage_point(self.a, self.b)

    def padded(self, stages: int) -> "ConcreteScheme":
        """Same scheme embedded in a larger stage count by zero coefficients."""
        if stages < self.stages:
            raise ValueError("cannot pad to fewer stages")
        extra = stages - self.stages
        return ConcreteScheme(
            self.a + (Fraction(0),) * extra,
            self.b + (Fraction(0),) * extra,
            self.name,
        )

    def __str__(self) -> str:
        label = self.name or "scheme"
        a = ", ".join(str(x) for x in self.a)
        b = ", ".join(str(x) for x in self.b)
        return f"{label}(a=[{a}], b=[{b}])"


@dataclass(frozen=True)
class SymbolicScheme:
    """Stage coefficients as polynomials; generic() gives the symbols a_j, b_j."""

    a: tuple[Poly, ...]
    b: tuple[Poly, ...]

    @property
    def stages(self) -> int:
        return len(self.a)

    @classmethod
    def generic(cls, stages: int) -> "SymbolicScheme":
        if stages < 1:
            raise ValueError("stage count must be >= 1")
        return cls(
            tuple(Poly.symbol("a", j) for j in range(1, stages + 1)),
            tuple(Poly.symbol("b", j) for j in range(1, stages + 1)),
        )

    @classmethod
    def from_concrete(cls, scheme: ConcreteScheme) -> "SymbolicScheme":
        return cls(
            tuple(Poly.const(x) for x in scheme.a),
            tuple(Poly.const(x) for x in scheme.b),
        )


def splitting_product(scheme: SymbolicScheme, truncation: int) -> NCSeries:
    """The series of e^{a_1 A} e^{b_1 B} ... e^{a_s A} e^{b_s B}."""
    result = NCSeries.unit(truncation)
    for a_j, b_j in zip(scheme.a, scheme.b):
        result = result * exp(NCSeries.letter(0, truncation, coeff=a_j))
        result = result * exp(NCSeries.letter(1, truncation, coeff=b_j))
    return result


def exp_of_sum(truncation: int) -> NCSeries:
    """The reference flow e^{A+B} as a truncated series."""
    ab = NCSeries.letter(0, truncation) + NCSeries.letter(1, truncation)
    return exp(ab)


def local_error_series(scheme: SymbolicScheme, truncation: int) -> NCSeries:
    """Splitting product minus e^{A+B}; the degree-0 part cancels exactly."""
    return splitting_product(scheme, truncation) - exp_of_sum(truncation)


def _compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    # all tuples of `parts` nonnegative integers summing to `total`
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def taylor_derivative(scheme: SymbolicScheme, q: int) -> NCSeries:
    """q-th t-derivative at 0 of the local error, via the multinomial formula.

    sum over compositions k of q into s parts of
        multinomial(q; k) * prod_j sum_l C(k_j, l) a_j^l b_j^{k_j-l} A^l B^{k_j-l}
    minus (A+B)^q.  Homogeneous of degree q; equals q! times the degree-q
    part of local_error_series.
    """
    if q < 0:
        raise ValueError("derivative order must be >= 0")
    if q == 0:
        return NCSeries.zero(0)
    s = scheme.stages
    total = NCSeries.zero(q)
    for k in _compositions(q, s):
        multinomial = math.factorial(q)
        for kj in k:
            multinomial //= math.factorial(kj)
        product = NCSeries.unit(q)
        for j, kj in enumerate(k):
            factor_terms: dict[Word, Poly] = {}
            for l in range(kj + 1):
                word = (0,) * l + (1,) * (kj - l)
                coeff = (scheme.a[j] ** l) * (scheme.b[j] ** (kj - l)) * math.comb(kj, l)
                factor_terms[word] = factor_terms.get(word, Poly()) + coeff
            product = product * NCSeries(q, 2, factor_terms)
        total = total + product.scale(multinomial)
    ab = NCSeries.letter(0, q) + NCSeries.letter(1, q)
    return total - ab**q


@dataclass(frozen=True)
class ConditionEntry:
    """One order condition: a polynomial attached to a degree and Lyndon word."""

    degree: int
    word: Word
    polynomial: Poly
    rhs: Fraction = Fraction(0)

    def residual(self, scheme: ConcreteScheme) -> Fraction:
        return self.polynomial.evaluate(scheme.point()) - self.rhs

    def __str__(self) -> str:
        return f"deg {self.degree}  {word_str(self.word)}  {self.polynomial} = {self.rhs}"


@dataclass(frozen=True)
class ConditionSystem:
    """Ordered conditions whose simultaneous vanishing gives order p."""

    stages: int
    order: int
    route: str
    entries: tuple[ConditionEntry, ...]

    def residuals(self, scheme: ConcreteScheme) -> list[tuple[int, Word, Fraction]]:
        if scheme.stages != self.stages:
            raise ValueError(
                f"scheme has {scheme.stages} stages, system expects {self.stages}"
            )
        point = scheme.point()
        return [
            (e.degree, e.word, e.polynomial.evaluate(point) - e.rhs)
            for e in self.entries
        ]

    def satisfied_by(self, scheme: ConcreteScheme, tol: Scalar = 0) -> bool:
        """Exact satisfaction when tol == 0; |residual| <= tol otherwise."""
        return all(abs(r) <= tol for _, _, r in self.residuals(scheme))

    def to_records(self) -> list[dict[str, str | int]]:
        return [
            {
                "order": e.degree,
                "lyndon": word_str(e.word),
                "polynomial": str(e.polynomial),
                "rhs": str(e.rhs),
            }
            for e in self.entries
        ]

    def __str__(self) -> str:
        header = f"{self.route} conditions, s={self.stages}, p={self.order}"
        return "\n".join([header] + [f"  {e}" for e in self.entries])


@functools.lru_cache(maxsize=None)
def conditions_taylor(stages: int, p: int) -> ConditionSystem:
    """Order conditions from Lyndon-word coefficients of the Taylor derivatives."""
    if p < 1:
        raise ValueError("target order must be >= 1")
    scheme = SymbolicScheme.generic(stages)
    entries: list[ConditionEntry] = []
    for q in range(1, p + 1):
        derivative = taylor_derivative(scheme, q)
        for word in lyndon_words_of_degree(2, q):
            entries.append(ConditionEntry(q, word, derivative.coefficient(word)))
    return ConditionSystem(stages, p, "taylor", tuple(entries))


@functools.lru_cache(maxsize=None)
def _log_deviation(stages: int, truncation: int) -> NCSeries:
    # log of the splitting product minus (A + B), the series whose
    # homogeneous parts encode all order conditions at once
    scheme = SymbolicScheme.generic(stages)
    z = log(splitting_product(scheme, truncation))
    ab = NCSeries.letter(0, truncation) + NCSeries.letter(1, truncation)
    return z - ab


@functools.lru_cache(maxsize=None)
def _log_deviation_decomposition(stages: int, truncation: int, q: int) -> LieDecomposition:
    deviation = _log_deviation(stages, truncation)
    return lie_decompose(deviation.homogeneous_part(q), q)


@functools.lru_cache(maxsize=None)
def conditions_bch(stages: int, p: int) -> ConditionSystem:
    """Order conditions from the Lyndon decomposition of the product logarithm.

    Degrees >= 2 of the logarithm are Lie elements, so the decomposition
    cannot fail; the degree-1 part is affine in A and B and decomposes over
    the single-letter Lyndon words.  Internal series are truncated at p + 1
    so the leading error term of an order-p scheme falls out of the same
    computation.
    """
    if p < 1:
        raise ValueError("target order must be >= 1")
    entries: list[ConditionEntry] = []
    for q in range(1, p + 1):
        decomposition = _log_deviation_decomposition(stages, p + 1, q)
        for word in lyndon_words_of_degree(2, q):
            entries.append(ConditionEntry(q, word, decomposition.coefficient(word)))
    return ConditionSystem(stages, p, "bch", tuple(entries))


def condition_system(stages: int, p: int, route: str) -> ConditionSystem:
    if route not in ROUTES:
        raise ValueError(f"route must be one of {ROUTES}, got {route!r}")
    if route == "taylor":
        return conditions_taylor(stages, p)
    return conditions_bch(stages, p)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one scheme against one condition system."""

    scheme: ConcreteScheme
    order: int
    route: str
    satisfied: bool
    residuals: tuple[tuple[int, Word, Fraction], ...]

    def nonzero_residuals(self) -> list[tuple[int, Word, Fraction]]:
        return [(q, w, r) for q, w, r in self.residuals if r != 0]


def verify_scheme(
    scheme: ConcreteScheme, p: int, route: str = "bch"
) -> VerificationReport:
    """Evaluate the order-p condition system at the scheme, exactly."""
    system = condition_system(scheme.stages, p, route)
    residuals = tuple(system.residuals(scheme))
    satisfied = all(r == 0 for _, _, r in residuals)
    return VerificationReport(scheme, p, route, satisfied, residuals)


@dataclass(frozen=True)
class WitnessVerdict:
    scheme: ConcreteScheme
    satisfied_first: bool
    satisfied_second: bool
    residuals_first: tuple[tuple[int, Word, Fraction], ...]
    residuals_second: tuple[tuple[int, Word, Fraction], ...]

    @property
    def agree(self) -> bool:
        return self.satisfied_first == self.satisfied_second


@dataclass(frozen=True)
class EquivalenceReport:
    """Per-witness verdicts of two condition systems; a falsification harness."""

    verdicts: tuple[WitnessVerdict, ...]

    @property
    def all_agree(self) -> bool:
        return all(v.agree for v in self.verdicts)

    def disagreements(self) -> list[WitnessVerdict]:
        return [v for v in self.verdicts if not v.agree]


def systems_equivalent(
    first: ConditionSystem,
    second: ConditionSystem,
    witnesses: Sequence[ConcreteScheme],
    tol: Scalar = 0,
) -> EquivalenceReport:
    """Check that every witness satisfies both systems or neither.

    With tol == 0 satisfaction is exact; a positive tol admits witnesses
    produced by floating-point root refinement.  Agreement on a witness set
    can falsify equivalence, never prove it.
    """
    if (first.stages, first.order) != (second.stages, second.order):
        raise ValueError("systems compare only at equal stage count and order")
    verdicts = []
    for scheme in witnesses:
        r1 = tuple(first.residuals(scheme))
        r2 = tuple(second.residuals(scheme))
        verdicts.append(
            WitnessVerdict(
                scheme,
                all(abs(r) <= tol for _, _, r in r1),
                all(abs(r) <= tol for _, _, r in r2),
                r1,
                r2,
            )
        )
    return EquivalenceReport(tuple(verdicts))


def leading_error_term(scheme: ConcreteScheme, p: int) -> LieDecomposition:
    """Lyndon decomposition of the first nonvanishing local-error term.

    Requires the scheme to satisfy the order-p conditions (NotOrderP
    otherwise).  The degree-(p+1) part of the local error then equals the
    degree-(p+1) part of log(product) - (A+B), which is decomposed
    symbolically once per (stages, p) and evaluated at the scheme.
    """
    report = verify_scheme(scheme, p, "bch")
    if not report.satisfied:
        raise NotOrderP(f"{scheme} does not satisfy the order-{p} conditions")
    symbolic = _log_deviation_decomposition(scheme.stages, p + 1, p + 1)
    point = scheme.point()
    coefficients = {}
    for word, coeff in symbolic.coefficients.items():
        value = coeff.evaluate(point)
        if value != 0:
            coefficients[word] = Poly.const(value)
    return LieDecomposition(p + 1, coefficients)
