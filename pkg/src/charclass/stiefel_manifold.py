"""
Stiefel Manifold Model Module

This module models the right generalized complex projective Stiefel manifold W(n,k;l),
the quotient of the complex Stiefel manifold of orthonormal k-frames in C^n by the circle
acting as z.(v_1, ..., v_k) = (z^l_1 v_1, ..., z^l_k v_k).

It provides:
- Parameter validation (the action is free iff gcd(l) = 1)
- Dimension
- The stable tangent-bundle equation in terms of xi = xi(n,k;l)
- The table of low-degree cohomology facts that license nonvanishing conclusions
- Enumeration of canonical parameters
"""

import logging
import math
import operator
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator, Sequence, Tuple

from charclass.bundle_algebra import BundleExpr, tensor_lines

logger = logging.getLogger(__name__)


class InvalidParametersError(ValueError):
    """Raised for parameters outside n >= 2, 1 <= k <= n, len(l) == k."""


class NotAManifoldError(InvalidParametersError):
    """Raised when gcd(l) != 1, so the circle action is not free."""

    def __init__(self, gcd: int):
        self.gcd = gcd
        super().__init__(f"not a manifold: gcd(l) = {gcd}")


@dataclass(frozen=True)
class StiefelParams:
    """
    Parameters (n, k, l) of W(n,k;l). Build through validate() to enforce the invariants.
    """
    n: int
    k: int
    l: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "n", operator.index(self.n))
        object.__setattr__(self, "k", operator.index(self.k))
        object.__setattr__(self, "l", tuple(operator.index(x) for x in self.l))

    @property
    def even_weight_count(self) -> int:
        """r: the number of even weights."""
        return sum(1 for x in self.l if x % 2 == 0)

    @property
    def weight_sum(self) -> int:
        return sum(self.l)

    @property
    def weight_square_sum(self) -> int:
        return sum(x * x for x in self.l)

    @property
    def is_projective_stiefel(self) -> bool:
        """All weights 1: the classical complex projective Stiefel manifold."""
        return all(x == 1 for x in self.l)

    def canonical(self) -> "StiefelParams":
        """Same manifold with nondecreasing weights."""
        return StiefelParams(self.n, self.k, tuple(sorted(self.l)))

    def label(self) -> str:
        return f"W({self.n},{self.k};{','.join(str(x) for x in self.l)})"


@dataclass(frozen=True)
class CohomologyFacts:
    """
    Low-degree integral cohomology of W(n,k;l).

    When applicable (k < n-1), H^2 and H^4 are infinite cyclic on c_1 and c_1^2, with
    c_1 = c_1(xi). Otherwise nothing is claimed and both flags are False.
    """
    h2_free_on_c1: bool
    h4_free_on_c1_sq: bool
    applicable: bool
    stiefel_connectivity: int


@dataclass(frozen=True)
class TangentEquation:
    """
    tau + known = rhs as real bundles, where
    known = (k+1) eps_R + sum_{j<i} xi^-l_i (x) xi^l_j   and   rhs = n * sum_i xi^-l_i.
    """
    known: BundleExpr
    rhs: BundleExpr
    dimension: int

    def tangent_virtual(self) -> BundleExpr:
        return self.rhs - self.known

    def rank_balanced(self) -> bool:
        """Total real rank of the left-hand side equals that of the right-hand side."""
        return self.dimension + self.known.real_rank == self.rhs.real_rank


def _as_int(value, name: str) -> int:
    if isinstance(value, bool):
        raise InvalidParametersError(f"{name} must be an integer, got {value!r}")
    try:
        return operator.index(value)
    except TypeError:
        raise InvalidParametersError(f"{name} must be an integer, got {value!r}") from None


def validate(n: int, k: int, l: Sequence[int]) -> StiefelParams:
    """
    Validate (n, k, l) and return StiefelParams.

    Weights may be zero or negative; the gcd is taken on absolute values.

    Raises:
        InvalidParametersError: If n < 2, k outside 1..n, or len(l) != k
        NotAManifoldError: If gcd(l) != 1 (including all-zero weights, gcd 0)

    Examples:
        >>> validate(4, 2, (0, 1)).l
        (0, 1)
    """
    n = _as_int(n, "n")
    k = _as_int(k, "k")
    weights = tuple(_as_int(x, f"l[{i}]") for i, x in enumerate(l))

    if n < 2:
        raise InvalidParametersError(f"invalid parameters: n must be >= 2, got n = {n}")
    if k < 1 or k > n:
        raise InvalidParametersError(f"invalid parameters: need 1 <= k <= n, got k = {k}, n = {n}")
    if len(weights) != k:
        raise InvalidParametersError(
            f"invalid parameters: l must have k = {k} entries, got {len(weights)}"
        )

    g = math.gcd(*weights)
    if g != 1:
        raise NotAManifoldError(g)

    return StiefelParams(n, k, weights)


def dimension(p: StiefelParams) -> int:
    """
    Real dimension n^2 - (n-k)^2 - 1 = 2nk - k^2 - 1.

    Examples:
        >>> dimension(validate(2, 1, (1,)))
        2
    """
    return 2 * p.n * p.k - p.k * p.k - 1


def stiefel_connectivity(n: int, k: int) -> int:
    """The complex Stiefel manifold U(n)/U(n-k) is 2(n-k)-connected."""
    return 2 * (n - k)


def tangent_stable_equation(p: StiefelParams) -> TangentEquation:
    """
    Build the stable tangent equation of W(n,k;l).

    Examples:
        >>> eq = tangent_stable_equation(validate(5, 2, (1, 2)))
        >>> eq.known == BundleExpr.trivial(real_rank=3) + BundleExpr.line(-1)
        True
    """
    known = BundleExpr.trivial(real_rank=p.k + 1)
    for i in range(p.k):
        for j in range(i):
            known = known + tensor_lines(-p.l[i], p.l[j])

    rhs = BundleExpr.zero()
    for weight in p.l:
        rhs = rhs + BundleExpr.line(-weight, p.n)

    equation = TangentEquation(known=known, rhs=rhs, dimension=dimension(p))
    if not equation.rank_balanced():
        # Unreachable for validated parameters: (k+1) + k(k-1) + dim = 2nk
        logger.error(f"Rank bookkeeping failed for {p.label()}")
    return equation


def cohomology_facts(p: StiefelParams) -> CohomologyFacts:
    """
    Encoded cohomology facts; applicable iff k < n-1 (W(n,k) is then at least 4-connected).

    Examples:
        >>> cohomology_facts(validate(4, 3, (1, 1, 1))).applicable
        False
    """
    applicable = p.k < p.n - 1
    return CohomologyFacts(
        h2_free_on_c1=applicable,
        h4_free_on_c1_sq=applicable,
        applicable=applicable,
        stiefel_connectivity=stiefel_connectivity(p.n, p.k),
    )


def iter_canonical_params(n_max: int, l_max: int, n_min: int = 2) -> Iterator[StiefelParams]:
    """
    Yield every valid (n, k, l) with n_min <= n <= n_max, 1 <= k <= n and
    1 <= l_1 <= ... <= l_k <= l_max, in lexicographic order.

    Raises:
        ValueError: If n_max < 2 or l_max < 1
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    if l_max < 1:
        raise ValueError(f"l_max must be >= 1, got {l_max}")

    for n in range(max(n_min, 2), n_max + 1):
        for k in range(1, n + 1):
            for weights in combinations_with_replacement(range(1, l_max + 1), k):
                if math.gcd(*weights) == 1:
                    yield StiefelParams(n, k, weights)
