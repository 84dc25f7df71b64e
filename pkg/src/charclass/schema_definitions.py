"""
Schema Definitions for Reports and Enumeration Tables

This module defines the expected columns (name, data type, description) of the
enumeration table and the fields of the single-instance JSON report.
"""

from typing import Dict, List

# Schema definitions
# Format: {
#   'column_name': {
#       'dtype': 'data type',
#       'required': True/False,
#       'description': 'Column description'
#   }
# }

SCHEMA_ENUMERATION = {
    'n': {
        'dtype': 'int64',
        'required': True,
        'description': 'Ambient complex dimension'
    },
    'k': {
        'dtype': 'int64',
        'required': True,
        'description': 'Frame size'
    },
    'l': {
        'dtype': 'string',
        'required': True,
        'description': 'Weights, nondecreasing, comma-joined'
    },
    'dim': {
        'dtype': 'int64',
        'required': True,
        'description': 'Real dimension 2nk - k^2 - 1'
    },
    'parallelizable': {
        'dtype': 'bool',
        'required': True,
        'description': 'Tangent bundle is trivial'
    },
    'stably': {
        'dtype': 'bool',
        'required': True,
        'description': 'Tangent bundle is stably trivial'
    },
    'p1': {
        'dtype': 'int64',
        'required': True,
        'description': 'Coefficient of c_1(xi)^2 in p_1 of the tangent bundle'
    },
    'w2': {
        'dtype': 'int64',
        'required': True,
        'description': 'Coefficient of w_2(xi) in w_2 of the tangent bundle'
    },
    'span_cases': {
        'dtype': 'string',
        'required': True,
        'description': 'Span = stable span cases that apply, comma-joined (empty = undecided)'
    },
}

SCHEMA_REPORT = {
    'schema_version': {'dtype': 'string', 'required': True, 'description': 'Report schema version'},
    'n': {'dtype': 'int64', 'required': True, 'description': 'Ambient complex dimension'},
    'k': {'dtype': 'int64', 'required': True, 'description': 'Frame size'},
    'l': {'dtype': 'list', 'required': True, 'description': 'Weights as given'},
    'dimension': {'dtype': 'int64', 'required': True, 'description': 'Real dimension'},
    'orientable': {'dtype': 'bool', 'required': True, 'description': 'Always true'},
    'parallelizable': {'dtype': 'bool', 'required': True, 'description': 'Tangent bundle trivial'},
    'stably_parallelizable': {'dtype': 'bool', 'required': True, 'description': 'Stably trivial'},
    'p1_coefficient': {'dtype': 'int64', 'required': True, 'description': 'Coefficient of c_1^2 in p_1'},
    'w2_coefficient': {'dtype': 'int64', 'required': True, 'description': 'Coefficient of w_2(xi) in w_2'},
    'w2_possibly_nonzero': {'dtype': 'bool', 'required': True, 'description': 'w_2 may be nonzero'},
    'span_cases': {'dtype': 'list', 'required': True, 'description': 'Applicable span cases'},
    'cohomology_applicable': {'dtype': 'bool', 'required': True, 'description': 'k < n-1'},
    'even_weight_count': {'dtype': 'int64', 'required': True, 'description': 'r, number of even weights'},
    'is_projective_stiefel': {'dtype': 'bool', 'required': True, 'description': 'All weights equal 1'},
    'odd_sw_vanish': {'dtype': 'bool', 'required': True, 'description': 'Odd Stiefel-Whitney classes vanish'},
    'tangent_pontrjagin': {'dtype': 'string', 'required': True, 'description': 'Total Pontrjagin class in c'},
    'tangent_sw': {'dtype': 'string', 'required': True, 'description': 'Total Stiefel-Whitney class in w'},
    'caveats': {'dtype': 'list', 'required': True, 'description': 'Caveats attached to the verdict'},
    'derivation': {'dtype': 'list', 'required': False, 'description': 'Derivation trace (--explain)'},
}

# Schema name to schema mapping
SCHEMAS = {
    'enumeration': SCHEMA_ENUMERATION,
    'report': SCHEMA_REPORT,
}


def get_schema(name: str) -> Dict:
    """
    Get schema definition by name.

    Args:
        name: Schema name ('enumeration' or 'report')

    Returns:
        Dictionary containing schema definition

    Raises:
        KeyError: If name not found
    """
    if name not in SCHEMAS:
        raise KeyError(f"Schema not found: {name}")
    return SCHEMAS[name]


def get_columns(name: str) -> List[str]:
    """Column names of a schema in declaration order."""
    return list(get_schema(name).keys())


def get_required_columns(name: str) -> List[str]:
    """
    Get list of required columns for a schema.

    Args:
        name: Schema name

    Returns:
        List of required column names
    """
    schema = get_schema(name)
    return [col for col, spec in schema.items() if spec['required']]
