"""
Truncated Graded Ring Module

This module provides the exact arithmetic in which every characteristic class lives:
- TruncSeries: integer polynomials in one degree-2 generator c, truncated at a cap
- TruncSeriesMod2: the same ring with coefficients reduced modulo 2
- MultiPoly: graded-truncated polynomials in formal Chern roots (sympy PolyRing over ZZ)
- RootBag: multisets of linear forms, the splitting-principle oracle

Terms above the cap are discarded silently; this is the arithmetic of the quotient ring
Z[c]/(c^(cap+1)). All values are immutable.
"""

import operator
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

# Retain 1, c, c^2 (cohomological degree <= 4)
DEFAULT_CAP = 2


class CapMismatchError(ValueError):
    """Raised when two operands of a binary operation carry different caps."""


class NotInvertibleError(ArithmeticError):
    """Raised when inverting a series whose constant term is not a unit."""


class UnmappedVariableError(ValueError):
    """Raised when a formal variable has no image under an evaluation map."""


def _check_cap(cap: int) -> int:
    cap = operator.index(cap)
    if cap < 0:
        raise ValueError(f"cap must be non-negative, got {cap}")
    return cap


def _check_same_cap(a, b, op_name: str):
    if a.cap != b.cap:
        raise CapMismatchError(f"{op_name}: cap mismatch ({a.cap} vs {b.cap})")


@dataclass(frozen=True)
class TruncSeries:
    """
    Integer series sum(coeffs[i] * c^i) for i = 0..cap.

    The cap is len(coeffs) - 1; use from_coeffs() to pad or truncate to a given cap.
    """
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("a series needs at least its constant coefficient")
        object.__setattr__(self, "coeffs", tuple(operator.index(c) for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], cap: int = DEFAULT_CAP) -> "TruncSeries":
        """
        Build a series at the given cap, dropping coefficients above it.

        Examples:
            >>> TruncSeries.from_coeffs([1, 2], cap=2).coeffs
            (1, 2, 0)
        """
        cap = _check_cap(cap)
        values = [operator.index(c) for c in coeffs][: cap + 1]
        values.extend([0] * (cap + 1 - len(values)))
        return cls(tuple(values))

    @classmethod
    def one(cls, cap: int = DEFAULT_CAP) -> "TruncSeries":
        return cls.from_coeffs([1], cap)

    @classmethod
    def zero(cls, cap: int = DEFAULT_CAP) -> "TruncSeries":
        return cls.from_coeffs([0], cap)

    @classmethod
    def linear(cls, a: int, cap: int = DEFAULT_CAP) -> "TruncSeries":
        """Total Chern class 1 + a*c of the line bundle with first Chern class a*c."""
        return cls.from_coeffs([1, a], cap)

    @property
    def cap(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_unit(self) -> bool:
        return self.coeffs[0] in (1, -1)

    def __getitem__(self, index: int) -> int:
        if 0 <= index <= self.cap:
            return self.coeffs[index]
        return 0

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return add(self, other)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return add(self, -other)

    def __mul__(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return mul(self, other)
        if isinstance(other, int):
            return TruncSeries(tuple(other * c for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncSeries":
        return self.power(exponent)

    def power(self, exponent: int) -> "TruncSeries":
        """
        Integer power; negative exponents go through invert().

        Examples:
            >>> TruncSeries.linear(1).power(-1).coeffs
            (1, -1, 1)
        """
        exponent = operator.index(exponent)
        if exponent < 0:
            return invert(self).power(-exponent)

        result = TruncSeries.one(self.cap)
        base = self
        while exponent:
            if exponent & 1:
                result = mul(result, base)
            exponent >>= 1
            if exponent:
                base = mul(base, base)
        return result

    def conjugate(self) -> "TruncSeries":
        """Sign alternation c^i -> (-1)^i c^i (total class of the conjugate bundle)."""
        return TruncSeries(tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)))

    def invert(self) -> "TruncSeries":
        return invert(self)

    def reduce_mod2(self) -> "TruncSeriesMod2":
        return reduce_mod2(self)

    def __str__(self) -> str:
        from charclass.formatters import format_series
        return format_series(self)


@dataclass(frozen=True)
class TruncSeriesMod2:
    """
    Series with coefficients in Z/2; bit i multiplies w^i where w is the mod-2 image of c.
    """
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("a series needs at least its constant coefficient")
        object.__setattr__(self, "coeffs", tuple(operator.index(c) % 2 for c in self.coeffs))

    @classmethod
    def from_bits(cls, bits: Iterable[int], cap: int = DEFAULT_CAP) -> "TruncSeriesMod2":
        cap = _check_cap(cap)
        values = [operator.index(b) % 2 for b in bits][: cap + 1]
        values.extend([0] * (cap + 1 - len(values)))
        return cls(tuple(values))

    @classmethod
    def one(cls, cap: int = DEFAULT_CAP) -> "TruncSeriesMod2":
        return cls.from_bits([1], cap)

    @property
    def cap(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, index: int) -> int:
        if 0 <= index <= self.cap:
            return self.coeffs[index]
        return 0

    def sw_class(self, degree: int) -> int:
        """
        Coefficient of the Stiefel-Whitney class in the given cohomological degree.

        Odd degrees are always zero; degree 2i reads the coefficient of w^i.
        """
        if degree % 2:
            return 0
        return self[degree // 2]

    def __add__(self, other: "TruncSeriesMod2") -> "TruncSeriesMod2":
        if not isinstance(other, TruncSeriesMod2):
            return NotImplemented
        _check_same_cap(self, other, "add")
        return TruncSeriesMod2(tuple(a ^ b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "TruncSeriesMod2") -> "TruncSeriesMod2":
        if not isinstance(other, TruncSeriesMod2):
            return NotImplemented
        _check_same_cap(self, other, "mul")
        cap = self.cap
        out = [0] * (cap + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(cap + 1 - i):
                out[i + j] ^= other.coeffs[j]
        return TruncSeriesMod2(tuple(out))

    def invert(self) -> "TruncSeriesMod2":
        if self.coeffs[0] != 1:
            raise NotInvertibleError("mod-2 series with zero constant term is not invertible")
        inverse = [1] + [0] * self.cap
        for i in range(1, self.cap + 1):
            total = 0
            for j in range(1, i + 1):
                total ^= self.coeffs[j] & inverse[i - j]
            inverse[i] = total
        return TruncSeriesMod2(tuple(inverse))

    def __str__(self) -> str:
        from charclass.formatters import format_series
        return format_series(self, variable="w")


def add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """
    Coefficientwise sum.

    Raises:
        CapMismatchError: If a and b carry different caps

    Examples:
        >>> add(TruncSeries((1, 2, 0)), TruncSeries((0, 3, 1))).coeffs
        (1, 5, 1)
    """
    _check_same_cap(a, b, "add")
    return TruncSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """
    Cauchy product, terms above the cap discarded.

    Raises:
        CapMismatchError: If a and b carry different caps

    Examples:
        >>> mul(TruncSeries((1, 1, 1)), TruncSeries((1, 1, 0))).coeffs
        (1, 2, 2)
    """
    _check_same_cap(a, b, "mul")
    cap = a.cap
    out = [0] * (cap + 1)
    for i, a_i in enumerate(a.coeffs):
        if a_i == 0:
            continue
        for j in range(cap + 1 - i):
            out[i + j] += a_i * b.coeffs[j]
    return TruncSeries(tuple(out))


def invert(a: TruncSeries) -> TruncSeries:
    """
    Multiplicative inverse by iterative coefficient solving.

    Raises:
        NotInvertibleError: If the constant term is not 1 or -1

    Examples:
        >>> invert(TruncSeries((1, -3, 0))).coeffs
        (1, 3, 9)
    """
    a0 = a.coeffs[0]
    if not a.is_unit:
        raise NotInvertibleError(f"constant term {a0} is not a unit in Z")

    # a0 is its own inverse
    inverse = [a0] + [0] * a.cap
    for i in range(1, a.cap + 1):
        total = sum(a.coeffs[j] * inverse[i - j] for j in range(1, i + 1))
        inverse[i] = -a0 * total
    return TruncSeries(tuple(inverse))


def reduce_mod2(a: TruncSeries) -> TruncSeriesMod2:
    """
    Reduce every coefficient modulo 2.

    Examples:
        >>> reduce_mod2(TruncSeries((1, 6, 24))).coeffs
        (1, 0, 0)
    """
    return TruncSeriesMod2(tuple(c % 2 for c in a.coeffs))


@dataclass(frozen=True)
class MultiPoly:
    """
    Polynomial in formal variables with every term of total degree > cap dropped.

    Backed by a sympy PolyRing over ZZ; rings are cached by sympy, so generators created
    from the same variable names combine freely.
    """
    poly: PolyElement
    cap: int

    def __post_init__(self):
        cap = _check_cap(self.cap)
        object.__setattr__(self, "cap", cap)
        object.__setattr__(self, "poly", _truncate(self.poly, cap))

    @classmethod
    def generators(cls, names: Sequence[str], cap: int = DEFAULT_CAP) -> Tuple["MultiPoly", ...]:
        """
        Create one generator per variable name, all in the same ring.

        Examples:
            >>> x, y = MultiPoly.generators(["x", "y"], cap=2)
        """
        if not names:
            raise ValueError("at least one variable name is required")
        ring = PolyRing(tuple(names), ZZ, grlex)
        return tuple(cls(gen, cap) for gen in ring.gens)

    @classmethod
    def constant(cls, value: int, like: "MultiPoly") -> "MultiPoly":
        return cls(like.poly.ring.one * operator.index(value), like.cap)

    @property
    def variables(self) -> Tuple[str, ...]:
        return tuple(str(symbol) for symbol in self.poly.ring.symbols)

    @property
    def terms(self) -> Dict[Tuple[int, ...], int]:
        """Exponent vector -> integer coefficient."""
        return {tuple(monom): int(coeff) for monom, coeff in self.poly.items()}

    def homogeneous(self, degree: int) -> "MultiPoly":
        """Component of the given total degree."""
        ring = self.poly.ring
        part = {m: c for m, c in self.poly.items() if sum(m) == degree}
        return MultiPoly(ring.from_dict(part) if part else ring.zero, self.cap)

    def _coerce(self, other) -> Optional[PolyElement]:
        if isinstance(other, MultiPoly):
            if other.poly.ring != self.poly.ring:
                raise ValueError(
                    f"variables differ: {self.variables} vs {other.variables}"
                )
            _check_same_cap(self, other, "multipoly")
            return other.poly
        if isinstance(other, int):
            return self.poly.ring.one * other
        return None

    def __add__(self, other) -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return MultiPoly(self.poly + rhs, self.cap)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(-self.poly, self.cap)

    def __sub__(self, other) -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return MultiPoly(self.poly - rhs, self.cap)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return MultiPoly(self.poly * rhs, self.cap)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.cap == other.cap and self.variables == other.variables and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.cap, self.variables, frozenset(self.terms.items())))

    def __str__(self) -> str:
        return str(self.poly.as_expr()) if self.poly else "0"


def _truncate(poly: PolyElement, cap: int) -> PolyElement:
    if all(sum(monom) <= cap for monom in poly.keys()):
        return poly
    ring = poly.ring
    kept = {m: c for m, c in poly.items() if sum(m) <= cap}
    return ring.from_dict(kept) if kept else ring.zero


def multipoly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Graded-truncated product of two polynomials over the same variables and cap."""
    return a * b


def multipoly_eval_symmetric(
    p: MultiPoly,
    target: Mapping[str, int],
    cap: Optional[int] = None
) -> TruncSeries:
    """
    Substitute every formal root x by target[x] * c and collect powers of c.

    Args:
        p: Polynomial in formal roots
        target: Variable name -> integer multiple of c
        cap: Cap of the result (defaults to p.cap)

    Returns:
        TruncSeries in c

    Raises:
        UnmappedVariableError: If a variable of p has no image

    Examples:
        >>> x, y = MultiPoly.generators(["x", "y"])
        >>> multipoly_eval_symmetric(1 + x + y, {"x": 2, "y": -3}).coeffs
        (1, -1, 0)
    """
    names = p.variables
    missing = [name for name in names if name not in target]
    if missing:
        raise UnmappedVariableError(f"no image for variable(s): {', '.join(missing)}")

    cap = p.cap if cap is None else _check_cap(cap)
    point = [
        (gen, operator.index(target[name]))
        for gen, name in zip(p.poly.ring.gens, names)
    ]
    # the degree-d component evaluated at the target is the coefficient of c^d
    out = [int(p.homogeneous(degree).poly.evaluate(point)) for degree in range(cap + 1)]
    return TruncSeries(tuple(out))


@dataclass(frozen=True)
class RootBag:
    """
    Multiset of formal Chern roots, each a linear form in named variables.

    A root is stored as a sorted tuple of (variable, coefficient) pairs; the bag of a
    rank-r bundle has r roots and its total Chern class is the product of (1 + root).
    """
    roots: Tuple[Tuple[Tuple[str, int], ...], ...] = ()

    def __post_init__(self):
        normalized = []
        for root in self.roots:
            merged: Dict[str, int] = {}
            for name, coeff in root:
                merged[name] = merged.get(name, 0) + operator.index(coeff)
            normalized.append(tuple(sorted((n, c) for n, c in merged.items() if c)))
        object.__setattr__(self, "roots", tuple(normalized))

    @classmethod
    def formal(cls, names: Sequence[str]) -> "RootBag":
        """One root per variable: the bag of a sum of line bundles with roots x_1, ..., x_r."""
        return cls(tuple(((name, 1),) for name in names))

    @property
    def rank(self) -> int:
        return len(self.roots)

    @property
    def variables(self) -> Tuple[str, ...]:
        return tuple(sorted({name for root in self.roots for name, _ in root}))

    def direct_sum(self, other: "RootBag") -> "RootBag":
        return RootBag(self.roots + other.roots)

    def tensor(self, other: "RootBag") -> "RootBag":
        """Roots of a tensor product are all pairwise sums x_i + y_j."""
        return RootBag(tuple(r + s for r in self.roots for s in other.roots))

    def dual(self) -> "RootBag":
        return RootBag(tuple(tuple((n, -c) for n, c in root) for root in self.roots))

    def _linear_forms(self, cap: int, names: Optional[Sequence[str]]):
        names = tuple(names) if names is not None else self.variables
        if not names:
            # Constant bag (all roots zero); keep a dummy variable for the ring
            names = ("t",)
        gens = dict(zip(names, MultiPoly.generators(names, cap)))
        one = MultiPoly.constant(1, next(iter(gens.values())))
        forms = []
        for root in self.roots:
            form = one * 0
            for name, coeff in root:
                if name not in gens:
                    raise UnmappedVariableError(f"root uses variable {name!r} outside {names}")
                form = form + gens[name] * coeff
            forms.append(form)
        return one, forms

    def chern_polynomial(self, cap: int = DEFAULT_CAP, names: Optional[Sequence[str]] = None) -> MultiPoly:
        """Product of (1 + root) over all roots."""
        one, forms = self._linear_forms(cap, names)
        result = one
        for form in forms:
            result = multipoly_mul(result, one + form)
        return result

    def pontrjagin_polynomial(self, cap: int = DEFAULT_CAP, names: Optional[Sequence[str]] = None) -> MultiPoly:
        """Product of (1 + root^2): the total Pontrjagin class of the underlying real bundle."""
        one, forms = self._linear_forms(cap, names)
        result = one
        for form in forms:
            result = multipoly_mul(result, one + form * form)
        return result
