"""
Characteristic classes of right generalized complex projective Stiefel manifolds.

This package provides tools for:
- Exact arithmetic in truncated cohomology rings (integral and mod 2)
- Virtual bundle expressions over a line bundle and their total classes
- The stable tangent bundle equation of W(n,k;l)
- Parallelizability, stable parallelizability and span verdicts
- Grid enumeration and export (TSV, JSON-lines, Parquet)
- Property-based self-verification
"""

__version__ = "1.0.0"
