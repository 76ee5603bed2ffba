"""Workbench: configuration, serialization, verification suites and the
command-line entry point."""

# Authors: pyOrbital developers
#
# License: BSD (3-clause)

from .config import RESULTS_ENV, WorkbenchConfig, results_dir
from .serialize import canonical_json, digest, to_payload
from .serialize import parse_element, parse_central, parse_function
from .serialize import parse_unitary_family, parse_point, parse_gamma
from .serialize import parse_laurent
from .report import VerificationReport, read_ledger
from .verify import SUITES, collect, verify
from .cli import ROUTES, VERBS, run, main

__all__ = [
    "RESULTS_ENV", "WorkbenchConfig", "results_dir",
    "canonical_json", "digest", "to_payload",
    "parse_element", "parse_central", "parse_function",
    "parse_unitary_family", "parse_point", "parse_gamma", "parse_laurent",
    "VerificationReport", "read_ledger",
    "SUITES", "collect", "verify",
    "ROUTES", "VERBS", "run", "main"
]
