"""
Virtual Bundle Algebra Module

This module provides the bundle expression language over a single complex line bundle xi:
- BundleExpr: integer combinations of xi^m, the trivial complex line and the trivial real line
- Tensor and dual rules for line bundles
- Total Chern, Pontrjagin and Stiefel-Whitney classes (Whitney product formula)
- Solving a stable bundle equation for its unknown summand

Classes are computed in the truncated ring of series_ring; c denotes c_1(xi).
"""

import logging
import operator
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from charclass.series_ring import (
    DEFAULT_CAP,
    TruncSeries,
    TruncSeriesMod2,
    invert,
    mul,
    reduce_mod2,
)

logger = logging.getLogger(__name__)

REAL_ISOMORPHISM_CAVEAT = (
    "the stable tangent equation is an isomorphism of real bundles; Chern classes of the "
    "virtual difference assume both sides carry compatible complex structures"
)


class NotComplexError(ValueError):
    """Raised when Chern classes are requested for an expression with trivial real summands."""


@dataclass(frozen=True)
class BundleExpr:
    """
    Formal Z-linear combination of line powers xi^m, trivial complex and trivial real lines.

    line_terms holds (exponent, multiplicity) pairs; it is normalized on construction
    (merged, sorted, zero multiplicities dropped, xi^0 folded into trivial_complex).
    """
    line_terms: Tuple[Tuple[int, int], ...] = ()
    trivial_complex: int = 0
    trivial_real: int = 0

    def __post_init__(self):
        merged: Dict[int, int] = {}
        trivial_complex = operator.index(self.trivial_complex)
        for exponent, multiplicity in self.line_terms:
            exponent = operator.index(exponent)
            multiplicity = operator.index(multiplicity)
            if exponent == 0:
                trivial_complex += multiplicity
                continue
            merged[exponent] = merged.get(exponent, 0) + multiplicity

        object.__setattr__(
            self, "line_terms", tuple(sorted((m, k) for m, k in merged.items() if k != 0))
        )
        object.__setattr__(self, "trivial_complex", trivial_complex)
        object.__setattr__(self, "trivial_real", operator.index(self.trivial_real))

    @classmethod
    def zero(cls) -> "BundleExpr":
        return cls()

    @classmethod
    def line(cls, exponent: int, multiplicity: int = 1) -> "BundleExpr":
        """multiplicity copies of xi^exponent."""
        return cls(((exponent, multiplicity),))

    @classmethod
    def trivial(cls, complex_rank: int = 0, real_rank: int = 0) -> "BundleExpr":
        return cls((), complex_rank, real_rank)

    @property
    def complex_rank(self) -> int:
        return sum(k for _, k in self.line_terms) + self.trivial_complex

    @property
    def real_rank(self) -> int:
        return 2 * self.complex_rank + self.trivial_real

    @property
    def is_complex(self) -> bool:
        return self.trivial_real == 0

    def complex_part(self) -> "BundleExpr":
        """The expression without its trivial real summands."""
        return BundleExpr(self.line_terms, self.trivial_complex, 0)

    def dual(self) -> "BundleExpr":
        """Complex conjugate: xi^m -> xi^-m."""
        return BundleExpr(
            tuple((-m, k) for m, k in self.line_terms), self.trivial_complex, self.trivial_real
        )

    def scaled(self, factor: int) -> "BundleExpr":
        """factor-fold direct sum (negative factors give virtual bundles)."""
        factor = operator.index(factor)
        return BundleExpr(
            tuple((m, factor * k) for m, k in self.line_terms),
            factor * self.trivial_complex,
            factor * self.trivial_real,
        )

    def __add__(self, other: "BundleExpr") -> "BundleExpr":
        if not isinstance(other, BundleExpr):
            return NotImplemented
        return BundleExpr(
            self.line_terms + other.line_terms,
            self.trivial_complex + other.trivial_complex,
            self.trivial_real + other.trivial_real,
        )

    def __neg__(self) -> "BundleExpr":
        return self.scaled(-1)

    def __sub__(self, other: "BundleExpr") -> "BundleExpr":
        if not isinstance(other, BundleExpr):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, factor: int) -> "BundleExpr":
        if not isinstance(factor, int):
            return NotImplemented
        return self.scaled(factor)

    def __str__(self) -> str:
        from charclass.formatters import format_bundle
        return format_bundle(self)


@dataclass(frozen=True)
class CharClassReport:
    """
    Total characteristic classes of a (virtual) bundle expression.

    total_pontrjagin stores p_k at index 2k (p_k has cohomological degree 4k);
    total_sw stores w_2i at index i. total_chern is only present when requested.
    """
    total_pontrjagin: TruncSeries
    total_sw: TruncSeriesMod2
    complex_rank: int
    real_rank: int
    total_chern: Optional[TruncSeries] = None
    caveats: Tuple[str, ...] = field(default_factory=tuple)

    def pontrjagin_class(self, k: int) -> int:
        """Coefficient of c^(2k) in p_k."""
        return self.total_pontrjagin[2 * k]

    def sw_class(self, degree: int) -> int:
        return self.total_sw.sw_class(degree)

    def chern_class(self, i: int) -> int:
        if self.total_chern is None:
            raise ValueError("Chern classes were not requested for this report")
        return self.total_chern[i]


def tensor_lines(m1: int, m2: int) -> BundleExpr:
    """
    xi^m1 (x) xi^m2 = xi^(m1 + m2); first Chern classes of lines add.

    Examples:
        >>> tensor_lines(-2, 3) == BundleExpr.line(1)
        True
    """
    return BundleExpr.line(operator.index(m1) + operator.index(m2))


def tensor(e1: BundleExpr, e2: BundleExpr) -> BundleExpr:
    """
    Tensor product of two complex line-generated expressions, distributed over direct sums.

    Raises:
        NotComplexError: If either side has trivial real summands
    """
    if not (e1.is_complex and e2.is_complex):
        raise NotComplexError("tensor product is only defined here for complex expressions")

    def summands(e: BundleExpr):
        terms = list(e.line_terms)
        if e.trivial_complex:
            terms.append((0, e.trivial_complex))
        return terms

    pairs = [
        (a + b, ka * kb)
        for a, ka in summands(e1)
        for b, kb in summands(e2)
    ]
    return BundleExpr(tuple(pairs))


def total_chern(e: BundleExpr, cap: int = DEFAULT_CAP) -> TruncSeries:
    """
    Product of (1 + m c)^mult over the line terms; negative multiplicities via invert.

    Raises:
        NotComplexError: If e has trivial real summands

    Examples:
        >>> total_chern(BundleExpr.line(-1, 5) + BundleExpr.line(-2, 5)).coeffs
        (1, -15, 100)
    """
    if not e.is_complex:
        raise NotComplexError(
            f"Chern classes need a complex expression; found {e.trivial_real} trivial real summand(s)"
        )

    result = TruncSeries.one(cap)
    for exponent, multiplicity in e.line_terms:
        result = mul(result, TruncSeries.linear(exponent, cap).power(multiplicity))
    return result


def pontrjagin_from_chern(chern: TruncSeries) -> TruncSeries:
    """
    Read p_k off (1 - c_1 + c_2 - ...)(1 + c_1 + c_2 + ...) = 1 - p_1 + p_2 - ...

    The product has no odd-index terms; p_k is (-1)^k times its c^(2k) coefficient.
    """
    product = mul(chern.conjugate(), chern)
    coeffs = [0] * (chern.cap + 1)
    for index in range(0, chern.cap + 1, 2):
        sign = -1 if (index // 2) % 2 else 1
        coeffs[index] = sign * product[index]
    return TruncSeries(tuple(coeffs))


def total_pontrjagin(e: BundleExpr, cap: int = DEFAULT_CAP) -> TruncSeries:
    """
    Total Pontrjagin class of the underlying real (virtual) bundle.

    Trivial real summands contribute nothing.

    Examples:
        >>> total_pontrjagin(BundleExpr.line(3)).coeffs
        (1, 0, 9)
    """
    return pontrjagin_from_chern(total_chern(e.complex_part(), cap))


def total_sw(e: BundleExpr, cap: int = DEFAULT_CAP) -> TruncSeriesMod2:
    """
    Total Stiefel-Whitney class: w_2i = c_i mod 2, odd classes vanish.

    Examples:
        >>> total_sw(BundleExpr.line(3)).coeffs
        (1, 1, 0)
    """
    return reduce_mod2(total_chern(e.complex_part(), cap))


def characteristic_classes(
    e: BundleExpr,
    cap: int = DEFAULT_CAP,
    with_chern: bool = False
) -> CharClassReport:
    """
    Collect all total classes of one expression.

    Args:
        e: Bundle expression
        cap: Truncation cap
        with_chern: Include the total Chern class (requires a complex expression)

    Returns:
        CharClassReport
    """
    return CharClassReport(
        total_pontrjagin=total_pontrjagin(e, cap),
        total_sw=total_sw(e, cap),
        complex_rank=e.complex_rank,
        real_rank=e.real_rank,
        total_chern=total_chern(e, cap) if with_chern else None,
    )


def solve_stable(
    e_lhs_known: BundleExpr,
    e_rhs: BundleExpr,
    cap: int = DEFAULT_CAP,
    with_chern: bool = False
) -> CharClassReport:
    """
    Classes of the unknown summand tau in  tau + e_lhs_known = e_rhs  (stably).

    The Pontrjagin class is p(rhs) * p(known)^-1 and the Stiefel-Whitney class is the
    mod-2 reduction of c(rhs) * c(known)^-1, with trivial real summands ignored.

    Args:
        e_lhs_known: Known summand on the left-hand side
        e_rhs: Right-hand side
        cap: Truncation cap
        with_chern: Also report c(rhs) * c(known)^-1, tagged with a caveat

    Returns:
        CharClassReport of the virtual difference e_rhs - e_lhs_known

    Raises:
        NotInvertibleError: If the known factor has no inverse
    """
    known_chern_inverse = invert(total_chern(e_lhs_known.complex_part(), cap))
    chern_ratio = mul(total_chern(e_rhs.complex_part(), cap), known_chern_inverse)

    pontrjagin = mul(
        total_pontrjagin(e_rhs, cap),
        invert(total_pontrjagin(e_lhs_known, cap))
    )

    difference = e_rhs - e_lhs_known
    logger.debug(f"Solved stable equation: tau = {difference} (cap {cap})")

    return CharClassReport(
        total_pontrjagin=pontrjagin,
        total_sw=reduce_mod2(chern_ratio),
        complex_rank=difference.complex_rank,
        real_rank=difference.real_rank,
        total_chern=chern_ratio if with_chern else None,
        caveats=(REAL_ISOMORPHISM_CAVEAT,) if with_chern else (),
    )
