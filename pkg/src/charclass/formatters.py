"""
Formatting Utilities

This module provides formatting functions for consistent display of
series, bundle expressions, weight lists and classification reports.
"""

from typing import Iterable, List

# Symbols used in bundle expressions
XI = "ξ"
EPS_C = "ε_ℂ"
EPS_R = "ε_ℝ"


def format_series(series, variable: str = "c") -> str:
    """
    Format a truncated series as a polynomial in one variable.

    Args:
        series: TruncSeries or TruncSeriesMod2 (anything with .coeffs)
        variable: Variable name

    Returns:
        Formatted string

    Examples:
        >>> from charclass.series_ring import TruncSeries
        >>> format_series(TruncSeries((1, -15, 100)))
        '1 - 15c + 100c^2'
        >>> format_series(TruncSeries((0, 0, 0)))
        '0'
    """
    parts: List[str] = []
    for index, coeff in enumerate(series.coeffs):
        if coeff == 0:
            continue
        magnitude = abs(coeff)
        if index == 0:
            body = str(magnitude)
        else:
            monomial = variable if index == 1 else f"{variable}^{index}"
            body = monomial if magnitude == 1 else f"{magnitude}{monomial}"

        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if coeff > 0 else '-'} {body}")

    return " ".join(parts) if parts else "0"


def _summand(multiplicity: int, symbol: str) -> str:
    return symbol if multiplicity == 1 else f"{multiplicity}{symbol}"


def format_bundle(expr) -> str:
    """
    Format a BundleExpr as a direct sum; negative multiplicities print with ⊖.

    Examples:
        >>> from charclass.bundle_algebra import BundleExpr
        >>> format_bundle(BundleExpr.line(-1, 5) + BundleExpr.trivial(real_rank=3))
        '5ξ^-1 ⊕ 3ε_ℝ'
    """
    summands = [(k, f"{XI}^{m}") for m, k in expr.line_terms]
    if expr.trivial_complex:
        summands.append((expr.trivial_complex, EPS_C))
    if expr.trivial_real:
        summands.append((expr.trivial_real, EPS_R))

    parts: List[str] = []
    for multiplicity, symbol in summands:
        body = _summand(abs(multiplicity), symbol)
        if not parts:
            parts.append(body if multiplicity > 0 else f"⊖ {body}")
        else:
            parts.append(f"{'⊕' if multiplicity > 0 else '⊖'} {body}")

    return " ".join(parts) if parts else "0"


def format_weights(weights: Iterable[int]) -> str:
    """
    Comma-join weights.

    Examples:
        >>> format_weights((1, 2))
        '1,2'
    """
    return ",".join(str(w) for w in weights)


def format_span_cases(cases: Iterable[int]) -> str:
    """Sorted, comma-joined span cases; empty string when none apply."""
    return ",".join(str(c) for c in sorted(cases))


def format_bool(value: bool) -> str:
    return "yes" if value else "no"


def format_report_text(doc, explain: bool = False) -> str:
    """
    Render a ReportDocument as plain text.

    Args:
        doc: ReportDocument
        explain: Include the derivation trace

    Returns:
        Multi-line report string
    """
    label = f"W({doc.n},{doc.k};{format_weights(doc.l)})"
    span = format_span_cases(doc.span_cases) or "unknown"

    lines = [
        f"{'=' * 72}",
        f"{label}",
        f"{'=' * 72}",
        f"dimension:               {doc.dimension}",
        f"orientable:              {format_bool(doc.orientable)}",
        f"parallelizable:          {format_bool(doc.parallelizable)}",
        f"stably parallelizable:   {format_bool(doc.stably_parallelizable)}",
        f"p1 coefficient:          {doc.p1_coefficient}  (p1 = {doc.p1_coefficient} c1^2)",
        f"w2 coefficient:          {doc.w2_coefficient}  (r = {doc.even_weight_count})",
        f"w2 possibly nonzero:     {format_bool(doc.w2_possibly_nonzero)}",
        f"span = stable span:      {span}",
        f"cohomology applicable:   {format_bool(doc.cohomology_applicable)}",
        f"total Pontrjagin class:  {doc.tangent_pontrjagin}",
        f"total SW class:          {doc.tangent_sw}",
    ]

    if doc.caveats:
        lines.append("caveats:")
        lines.extend(f"  - {caveat}" for caveat in doc.caveats)

    if explain and doc.derivation:
        lines.append("derivation:")
        for number, step in enumerate(doc.derivation, start=1):
            lines.append(f"  {number}. {step['rule']}")
            lines.append(f"     bundle: {step['bundle']}")
            lines.append(f"     class:  {step['total_class']}")

    return "\n".join(lines)
