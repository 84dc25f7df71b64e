"""
Report Document Module

Builds the versioned single-instance report and serializes it deterministically
(sorted keys, fixed indentation) for golden-file testing.
"""

import json
import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from charclass.classifier import Classification
from charclass.formatters import format_series
from charclass.schema_definitions import get_required_columns
from charclass.settings import SETTINGS

logger = logging.getLogger(__name__)


@dataclass
class ReportDocument:
    """
    Serializable classification report.
    """
    schema_version: str
    n: int
    k: int
    l: List[int]
    dimension: int
    orientable: bool
    parallelizable: bool
    stably_parallelizable: bool
    p1_coefficient: int
    w2_coefficient: int
    w2_possibly_nonzero: bool
    span_cases: List[int]
    cohomology_applicable: bool
    even_weight_count: int
    is_projective_stiefel: bool
    odd_sw_vanish: bool
    tangent_pontrjagin: str
    tangent_sw: str
    caveats: List[str] = field(default_factory=list)
    derivation: Optional[List[Dict[str, str]]] = None

    @classmethod
    def from_classification(
        cls,
        classification: Classification,
        include_derivation: bool = False
    ) -> "ReportDocument":
        """
        Build a report from a Classification.

        Args:
            classification: Classification to report
            include_derivation: Embed the derivation trace

        Returns:
            ReportDocument
        """
        p = classification.params
        derivation = None
        if include_derivation:
            derivation = [
                {"rule": step.rule, "bundle": step.bundle, "total_class": step.total_class}
                for step in classification.derivation
            ]

        return cls(
            schema_version=SETTINGS["schema_version"],
            n=p.n,
            k=p.k,
            l=list(p.l),
            dimension=classification.dimension,
            orientable=classification.orientable,
            parallelizable=classification.parallelizable,
            stably_parallelizable=classification.stably_parallelizable,
            p1_coefficient=classification.p1_coefficient,
            w2_coefficient=classification.w2_coefficient,
            w2_possibly_nonzero=classification.w2_possibly_nonzero,
            span_cases=sorted(classification.span_cases),
            cohomology_applicable=classification.cohomology_applicable,
            even_weight_count=classification.even_weight_count,
            is_projective_stiefel=classification.is_projective_stiefel,
            odd_sw_vanish=classification.odd_sw_vanish,
            tangent_pontrjagin=format_series(classification.tangent_pontrjagin),
            tangent_sw=format_series(classification.tangent_sw, variable="w"),
            caveats=list(classification.caveats),
            derivation=derivation,
        )

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        if data["derivation"] is None:
            del data["derivation"]
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ReportDocument":
        """
        Rebuild a report from its dictionary form.

        Raises:
            ValueError: If a required field is missing
        """
        missing = [col for col in get_required_columns("report") if col not in data]
        if missing:
            raise ValueError(f"Report is missing required fields: {', '.join(missing)}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))


def error_document(condition: str, kind: str) -> str:
    """
    Structured JSON error for a rejected input.

    Args:
        condition: Violated condition, e.g. 'not a manifold: gcd(l) = 2'
        kind: Error kind ('not_a_manifold', 'invalid_parameters')

    Returns:
        JSON string
    """
    return json.dumps(
        {"schema_version": SETTINGS["schema_version"], "error": kind, "condition": condition},
        sort_keys=True,
        indent=2,
        ensure_ascii=False,
    )
