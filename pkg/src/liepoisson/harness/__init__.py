"""Command-line study harness."""
from .config import StudyConfig, read_config_file
from .output import render, to_csv, to_json, write_report
from .study import StudyReport, compare, convergence_order, defect_study, fit_loglog, run_trajectory

__all__ = [
    "StudyConfig",
    "StudyReport",
    "compare",
    "convergence_order",
    "defect_study",
    "fit_loglog",
    "read_config_file",
    "render",
    "run_trajectory",
    "to_csv",
    "to_json",
    "write_report",
]
