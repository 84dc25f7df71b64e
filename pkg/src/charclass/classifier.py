"""
Parallelizability Classifier Module

This module turns the manifold model into verdicts:
- parallelizability and stable parallelizability
- the p_1 coefficient (of c_1^2) computed three independent ways
- the w_2 coefficient (of w_2(xi)) computed three independent ways
- the w_2 nonvanishing condition
- the three cases in which span equals stable span
- batch evaluation over parameter grids
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import FrozenSet, Iterable, List, Optional, Tuple

from charclass.bundle_algebra import (
    CharClassReport,
    solve_stable,
    total_chern,
    total_pontrjagin,
)
from charclass.series_ring import DEFAULT_CAP, TruncSeries, TruncSeriesMod2
from charclass.stiefel_manifold import (
    StiefelParams,
    cohomology_facts,
    dimension,
    tangent_stable_equation,
)

logger = logging.getLogger(__name__)

CAVEAT_NOT_APPLICABLE = (
    "cohomology facts not applicable for k >= n-1: c_1^2 may vanish, so the p1 and w2 "
    "coefficients support no nonvanishing conclusion"
)
CAVEAT_SPAN_VERBATIM = (
    "span conditions applied verbatim; whether they also require k < n-1 is not stated"
)
CAVEAT_SPAN_UNKNOWN = (
    "no span case applies: equality of span and stable span is undecided, not refuted"
)


class DerivationMismatchError(RuntimeError):
    """Raised when independent derivations of the same coefficient disagree."""


@dataclass(frozen=True)
class DerivationStep:
    """One line of a derivation trace."""
    rule: str
    bundle: str
    total_class: str


@dataclass(frozen=True)
class Classification:
    """
    Full verdict for one W(n,k;l).
    """
    params: StiefelParams
    dimension: int
    parallelizable: bool
    stably_parallelizable: bool
    p1_coefficient: int
    w2_coefficient: int
    w2_possibly_nonzero: bool
    span_cases: FrozenSet[int]
    cohomology_applicable: bool
    tangent_pontrjagin: TruncSeries
    tangent_sw: TruncSeriesMod2
    orientable: bool = True
    odd_sw_vanish: bool = True
    caveats: Tuple[str, ...] = field(default_factory=tuple)
    derivation: Tuple[DerivationStep, ...] = field(default_factory=tuple)

    @property
    def even_weight_count(self) -> int:
        return self.params.even_weight_count

    @property
    def is_projective_stiefel(self) -> bool:
        return self.params.is_projective_stiefel

    def invariant_violations(self) -> List[str]:
        """
        Check the record against its own invariants.

        Returns:
            List of violation messages (empty if consistent)
        """
        violations = []
        if self.parallelizable and not self.stably_parallelizable:
            violations.append("parallelizable but not stably parallelizable")
        if self.cohomology_applicable and self.stably_parallelizable:
            violations.append("cohomology applicable but stably parallelizable")
        if self.cohomology_applicable and self.p1_coefficient <= 0:
            violations.append(f"cohomology applicable but p1 coefficient {self.p1_coefficient} <= 0")
        if not self.orientable:
            violations.append("not orientable")
        if self.w2_possibly_nonzero and not (self.cohomology_applicable and self.w2_coefficient):
            violations.append("w2 flagged nonzero without applicable cohomology and odd coefficient")
        if not self.span_cases <= {1, 2, 3}:
            violations.append(f"unexpected span cases {sorted(self.span_cases)}")
        return violations


def is_parallelizable(p: StiefelParams) -> bool:
    """k in {n-1, n}, except (n, k) = (2, 1), the 2-sphere."""
    return p.k >= p.n - 1 and (p.n, p.k) != (2, 1)


def is_stably_parallelizable(p: StiefelParams) -> bool:
    return p.k >= p.n - 1


def p1_closed_form(p: StiefelParams) -> int:
    """(n-k) * sum(l_i^2) + (sum l_i)^2."""
    return (p.n - p.k) * p.weight_square_sum + p.weight_sum ** 2


def p1_intermediate_form(p: StiefelParams) -> int:
    """n * sum(l_i^2) - sum_{j<i} (l_j - l_i)^2."""
    pair_sum = sum(
        (p.l[j] - p.l[i]) ** 2
        for i in range(p.k)
        for j in range(i)
    )
    return p.n * p.weight_square_sum - pair_sum


def _tangent_report(
    p: StiefelParams,
    cap: int,
    report: Optional[CharClassReport]
) -> CharClassReport:
    if report is not None:
        return report
    equation = tangent_stable_equation(p)
    return solve_stable(equation.known, equation.rhs, cap)


def p1_from_bundles(
    p: StiefelParams,
    cap: int = DEFAULT_CAP,
    report: Optional[CharClassReport] = None
) -> int:
    """
    Coefficient of c^2 in p(rhs) * p(known)^-1 of the stable tangent equation.

    A report already solved for p (e.g. by derive_tangent_classes) is read instead of re-solving.
    """
    return _tangent_report(p, cap, report).pontrjagin_class(1)


def p1_coefficient(
    p: StiefelParams,
    cap: int = DEFAULT_CAP,
    report: Optional[CharClassReport] = None
) -> int:
    """
    Coefficient of c_1(xi)^2 in p_1 of the tangent bundle.

    Raises:
        DerivationMismatchError: If the three derivations disagree

    Examples:
        >>> from charclass.stiefel_manifold import validate
        >>> p1_coefficient(validate(5, 2, (1, -2)))
        16
    """
    values = (p1_closed_form(p), p1_intermediate_form(p), p1_from_bundles(p, cap, report))
    if len(set(values)) != 1:
        raise DerivationMismatchError(
            f"p1 derivations disagree for {p.label()}: closed={values[0]}, "
            f"intermediate={values[1]}, bundles={values[2]}"
        )
    return values[0]


def w2_closed_form(p: StiefelParams) -> int:
    """(n + r)(k - r) mod 2 with r the number of even weights."""
    r = p.even_weight_count
    return ((p.n + r) * (p.k - r)) % 2


def w2_intermediate_form(p: StiefelParams) -> int:
    """[n * sum(l_i) - sum_{j<i} (l_j - l_i)] mod 2."""
    pair_sum = sum(
        p.l[j] - p.l[i]
        for i in range(p.k)
        for j in range(i)
    )
    return (p.n * p.weight_sum - pair_sum) % 2


def w2_from_bundles(
    p: StiefelParams,
    cap: int = DEFAULT_CAP,
    report: Optional[CharClassReport] = None
) -> int:
    """Coefficient of w_2(xi) in the mod-2 reduction of c(rhs) * c(known)^-1."""
    return _tangent_report(p, cap, report).sw_class(2)


def w2_coefficient(
    p: StiefelParams,
    cap: int = DEFAULT_CAP,
    report: Optional[CharClassReport] = None
) -> int:
    """
    Coefficient of w_2(xi) in w_2 of the tangent bundle.

    Raises:
        DerivationMismatchError: If the three derivations disagree
    """
    values = (w2_closed_form(p), w2_intermediate_form(p), w2_from_bundles(p, cap, report))
    if len(set(values)) != 1:
        raise DerivationMismatchError(
            f"w2 derivations disagree for {p.label()}: closed={values[0]}, "
            f"intermediate={values[1]}, bundles={values[2]}"
        )
    return values[0]


def w2_parity_condition(p: StiefelParams) -> bool:
    """(n, k odd and r even) or (n, k even and r odd)."""
    n_odd, k_odd, r_odd = p.n % 2 == 1, p.k % 2 == 1, p.even_weight_count % 2 == 1
    return (n_odd and k_odd and not r_odd) or (not n_odd and not k_odd and r_odd)


def w2_possibly_nonzero(p: StiefelParams, cap: int = DEFAULT_CAP) -> bool:
    return w2_coefficient(p, cap) == 1 and cohomology_facts(p).applicable


def span_cases(p: StiefelParams) -> FrozenSet[int]:
    """
    Cases in which span equals stable span:
    1. k > 1 odd;
    2. k = 2 mod 4, k > 2, n odd;
    3. k = 2 mod 4, k > 2, n even, r even.

    An empty set means undecided.
    """
    cases = set()
    if p.k > 1 and p.k % 2 == 1:
        cases.add(1)
    if p.k > 2 and p.k % 4 == 2:
        if p.n % 2 == 1:
            cases.add(2)
        elif p.even_weight_count % 2 == 0:
            cases.add(3)
    return frozenset(cases)


def derive_tangent_classes(
    p: StiefelParams,
    cap: int = DEFAULT_CAP
) -> Tuple[CharClassReport, Tuple[DerivationStep, ...]]:
    """
    Total Pontrjagin and Stiefel-Whitney classes of the tangent bundle, with a trace.

    Args:
        p: Validated parameters
        cap: Truncation cap (>= 2)

    Returns:
        Tuple of (CharClassReport of the tangent bundle, derivation steps)
    """
    equation = tangent_stable_equation(p)
    report = solve_stable(equation.known, equation.rhs, cap)

    steps = (
        DerivationStep(
            rule="Whitney product over the right-hand side n * sum xi^-l_i",
            bundle=str(equation.rhs),
            total_class=f"c = {total_chern(equation.rhs, cap)}",
        ),
        DerivationStep(
            rule="tensor rule c_1(xi^-l_i (x) xi^l_j) = (l_j - l_i) c; trivial reals add nothing",
            bundle=str(equation.known),
            total_class=f"c = {total_chern(equation.known.complex_part(), cap)}",
        ),
        DerivationStep(
            rule="Chern-to-Pontrjagin relation on the right-hand side",
            bundle=str(equation.rhs),
            total_class=f"p = {total_pontrjagin(equation.rhs, cap)}",
        ),
        DerivationStep(
            rule="Chern-to-Pontrjagin relation on the known summand",
            bundle=str(equation.known),
            total_class=f"p = {total_pontrjagin(equation.known, cap)}",
        ),
        DerivationStep(
            rule="solve stably: p(tau) = p(rhs) * p(known)^-1",
            bundle=str(equation.tangent_virtual()),
            total_class=f"p = {report.total_pontrjagin}",
        ),
        DerivationStep(
            rule="mod-2 reduction: w(tau) = c(rhs) * c(known)^-1 mod 2",
            bundle=str(equation.tangent_virtual()),
            total_class=f"w = {report.total_sw}",
        ),
    )
    return report, steps


def classify(p: StiefelParams, cap: int = DEFAULT_CAP, explain: bool = False) -> Classification:
    """
    Classify W(n,k;l).

    Args:
        p: Validated parameters
        cap: Truncation cap for the symbolic derivation (>= 2)
        explain: Attach the derivation trace

    Returns:
        Classification

    Raises:
        ValueError: If cap < 2
        DerivationMismatchError: If independent derivations disagree
    """
    if cap < 2:
        raise ValueError(f"cap must be >= 2 to carry p_1, got {cap}")

    facts = cohomology_facts(p)
    report, steps = derive_tangent_classes(p, cap)
    cases = span_cases(p)
    w2 = w2_coefficient(p, cap, report)

    caveats = []
    if not facts.applicable:
        caveats.append(CAVEAT_NOT_APPLICABLE)
    if cases and not facts.applicable:
        caveats.append(CAVEAT_SPAN_VERBATIM)
    if not cases:
        caveats.append(CAVEAT_SPAN_UNKNOWN)

    classification = Classification(
        params=p,
        dimension=dimension(p),
        parallelizable=is_parallelizable(p),
        stably_parallelizable=is_stably_parallelizable(p),
        p1_coefficient=p1_coefficient(p, cap, report),
        w2_coefficient=w2,
        w2_possibly_nonzero=w2 == 1 and facts.applicable,
        span_cases=cases,
        cohomology_applicable=facts.applicable,
        tangent_pontrjagin=report.total_pontrjagin,
        tangent_sw=report.total_sw,
        caveats=tuple(caveats),
        derivation=steps if explain else (),
    )
    logger.debug(f"Classified {p.label()}: parallelizable={classification.parallelizable}")
    return classification


def classify_grid(
    params: Iterable[StiefelParams],
    cap: int = DEFAULT_CAP,
    workers: int = 1
) -> List[Classification]:
    """
    Classify many parameter sets; results are returned in input order.

    Args:
        params: Validated parameters
        cap: Truncation cap
        workers: Number of worker processes (1 = evaluate in this process)

    Returns:
        List of Classification objects
    """
    params = list(params)
    logger.info(f"Classifying {len(params)} parameter sets with {workers} worker(s)")

    if workers <= 1:
        return [classify(p, cap) for p in params]

    chunksize = max(1, len(params) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(partial(classify, cap=cap), params, chunksize=chunksize))
