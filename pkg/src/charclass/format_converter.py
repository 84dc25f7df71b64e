"""
Format Converter Module

This module provides multi-format export of enumeration grids:
- TSV (header row, tab-separated, weights comma-joined)
- JSON-lines (one record per line, weights and span cases as lists)
- Parquet (columnar, via pyarrow)
"""

import logging
from pathlib import Path
from typing import Dict, Iterable, List

import pandas as pd

from charclass.classifier import Classification
from charclass.formatters import format_span_cases, format_weights
from charclass.schema_definitions import get_columns, get_schema

logger = logging.getLogger(__name__)

SUPPORTED_FORMATS = ("tsv", "json-lines", "parquet")

FILE_EXTENSIONS: Dict[str, str] = {
    "tsv": "tsv",
    "json-lines": "jsonl",
    "parquet": "parquet",
}


def classification_row(classification: Classification, joined: bool = True) -> Dict:
    """
    One enumeration row.

    Args:
        classification: Classification to flatten
        joined: Render weights and span cases as comma-joined strings (else lists)

    Returns:
        Dictionary keyed by the enumeration schema columns
    """
    p = classification.params
    weights = list(p.l)
    cases = sorted(classification.span_cases)
    return {
        "n": p.n,
        "k": p.k,
        "l": format_weights(weights) if joined else weights,
        "dim": classification.dimension,
        "parallelizable": classification.parallelizable,
        "stably": classification.stably_parallelizable,
        "p1": classification.p1_coefficient,
        "w2": classification.w2_coefficient,
        "span_cases": format_span_cases(cases) if joined else cases,
    }


class FormatConverter:
    """
    Format converter for enumeration grids.

    Supports export to TSV, JSON-lines and Parquet.
    """

    def rows_to_dataframe(
        self,
        classifications: Iterable[Classification],
        joined: bool = True
    ) -> pd.DataFrame:
        """
        Build the enumeration table with columns in schema order.

        Args:
            classifications: Classified grid points, already in output order
            joined: Comma-join list-valued columns

        Returns:
            DataFrame with the enumeration columns
        """
        rows = [classification_row(c, joined=joined) for c in classifications]
        df = pd.DataFrame(rows, columns=get_columns("enumeration"))
        self.check_columns(df)
        return df

    def check_columns(self, df: pd.DataFrame) -> List[str]:
        """
        Check the table against the enumeration schema.

        Returns:
            List of warning messages (dtype mismatches are warnings, not errors)

        Raises:
            ValueError: If a required column is missing
        """
        schema = get_schema("enumeration")
        missing = [col for col in schema if col not in df.columns]
        if missing:
            raise ValueError(f"Enumeration table is missing columns: {', '.join(missing)}")

        # Flexible type matching
        type_matches = {
            'int64': ['int64', 'int32'],
            'bool': ['bool'],
            'string': ['object', 'string'],
        }
        warnings = []
        if df.empty:
            return warnings
        for col, spec in schema.items():
            actual = str(df[col].dtype)
            if actual not in type_matches.get(spec['dtype'], [spec['dtype']]):
                warnings.append(f"Column '{col}': expected {spec['dtype']}, got {actual}")
                logger.warning(warnings[-1])
        return warnings

    def export_to_tsv(self, df: pd.DataFrame, output_path: Path) -> Path:
        """
        Export to TSV with a header row.

        Args:
            df: Enumeration table (joined form)
            output_path: Target file

        Returns:
            Path to created file
        """
        output_path = Path(output_path)
        try:
            output_path.parent.mkdir(parents=True, exist_ok=True)
            df.to_csv(output_path, sep="\t", index=False, lineterminator="\n", encoding="utf-8")
        except OSError as e:
            logger.error(f"Failed to export TSV to {output_path}: {e}")
            raise
        logger.info(f"Exported {len(df)} rows to TSV: {output_path}")
        return output_path

    def export_to_json_lines(self, df: pd.DataFrame, output_path: Path) -> Path:
        """
        Export to JSON-lines, one record per grid point.

        Args:
            df: Enumeration table (list form)
            output_path: Target file

        Returns:
            Path to created file
        """
        output_path = Path(output_path)
        try:
            output_path.parent.mkdir(parents=True, exist_ok=True)
            df.to_json(output_path, orient="records", lines=True, force_ascii=False)
        except OSError as e:
            logger.error(f"Failed to export JSON-lines to {output_path}: {e}")
            raise
        logger.info(f"Exported {len(df)} rows to JSON-lines: {output_path}")
        return output_path

    def export_to_parquet(
        self,
        df: pd.DataFrame,
        output_path: Path,
        compression: str = 'snappy'
    ) -> Path:
        """
        Export to Parquet.

        Args:
            df: Enumeration table (joined form)
            output_path: Target file
            compression: Compression algorithm ('snappy', 'gzip', 'brotli')

        Returns:
            Path to created file
        """
        output_path = Path(output_path)
        try:
            output_path.parent.mkdir(parents=True, exist_ok=True)
            df.to_parquet(output_path, engine="pyarrow", compression=compression, index=False)
        except OSError as e:
            logger.error(f"Failed to export Parquet to {output_path}: {e}")
            raise
        logger.info(f"Exported {len(df)} rows to Parquet: {output_path}")
        return output_path

    def export(
        self,
        classifications: List[Classification],
        output_path: Path,
        fmt: str = "tsv"
    ) -> Path:
        """
        Export an enumeration grid in one format.

        Args:
            classifications: Classified grid points in output order
            output_path: Target file
            fmt: 'tsv', 'json-lines' or 'parquet'

        Returns:
            Path to created file

        Raises:
            ValueError: If the format is unknown
            OSError: If the file cannot be written
        """
        if fmt not in SUPPORTED_FORMATS:
            raise ValueError(f"Unknown format {fmt!r}; expected one of {', '.join(SUPPORTED_FORMATS)}")

        if fmt == "json-lines":
            df = self.rows_to_dataframe(classifications, joined=False)
            return self.export_to_json_lines(df, output_path)

        df = self.rows_to_dataframe(classifications, joined=True)
        if fmt == "parquet":
            return self.export_to_parquet(df, output_path)
        return self.export_to_tsv(df, output_path)
