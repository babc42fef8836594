"""
Data Package
File formats for truth tables, parity-check codes and pattern graphs
"""

from .file_formats import (
    PatternFile,
    read_code,
    read_packed_table,
    read_pattern,
    read_truth_table,
    write_code,
    write_packed_table,
    write_pattern,
    write_truth_table,
)

__all__ = [
    'PatternFile',
    'read_code',
    'read_packed_table',
    'read_pattern',
    'read_truth_table',
    'write_code',
    'write_packed_table',
    'write_pattern',
    'write_truth_table',
]
