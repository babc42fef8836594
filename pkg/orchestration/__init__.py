"""
Orchestration Package
Run configuration, command orchestration, the self-test battery and report rendering
"""

from .run_config import COMMANDS, OUTPUT_FORMATS, RunConfig, parse_range
from .report_writer import format_fraction, normalize, parse_fraction, render, render_data, render_text, write_report
from .selftest import SELFTEST_CHECKS, CheckResult, run_selftest, selftest_table
from .analysis_orchestrator import AnalysisOrchestrator, RunResult, parse_bent_spec, parse_code_spec

__all__ = [
    'COMMANDS',
    'OUTPUT_FORMATS',
    'RunConfig',
    'parse_range',
    'format_fraction',
    'normalize',
    'parse_fraction',
    'render',
    'render_data',
    'render_text',
    'write_report',
    'SELFTEST_CHECKS',
    'CheckResult',
    'run_selftest',
    'selftest_table',
    'AnalysisOrchestrator',
    'RunResult',
    'parse_bent_spec',
    'parse_code_spec',
]
