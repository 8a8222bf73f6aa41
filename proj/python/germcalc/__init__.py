"""Exact local invariants of analytic germs.

Polynomials are written as text in the named variables, for example
``milnor(["x", "y"], "x^3 + y^4")``.  Colengths come back as ``int`` or
``None`` for an infinite dimension.  All randomness flows from the ``seed``
arguments; identical inputs give identical results on every platform.
"""

import json as _json

try:
    from ._germcalc import (
        BudgetError,
        CertificationError,
        PolynomialParseError,
        ProblemFileError,
        bruce_roberts,
        chern_index,
        chern_numbers,
        commands,
        cusps,
        identities,
        lcv_cm,
        milnor,
        milnor_restricted,
        run_report,
        suspension_check,
        tjurina,
    )
except ImportError:  # development tree: the module sits next to the package
    from _germcalc import (
        BudgetError,
        CertificationError,
        PolynomialParseError,
        ProblemFileError,
        bruce_roberts,
        chern_index,
        chern_numbers,
        commands,
        cusps,
        identities,
        lcv_cm,
        milnor,
        milnor_restricted,
        run_report,
        suspension_check,
        tjurina,
    )

__version__ = "1.0.0"


def run(command, problem_text, **kwargs):
    """Runs one command against problem-file text and parses the report.

    Returns the report as a dict; raises RuntimeError when the run exits
    unsuccessfully (the structured error record is in the message).
    """
    code, text = run_report(command, problem_text, **kwargs)
    report = _json.loads(text)
    if code != 0:
        raise RuntimeError(f"exit code {code}: {report.get('error')}")
    return report


__all__ = [
    "BudgetError",
    "CertificationError",
    "PolynomialParseError",
    "ProblemFileError",
    "bruce_roberts",
    "chern_index",
    "chern_numbers",
    "commands",
    "cusps",
    "identities",
    "lcv_cm",
    "milnor",
    "milnor_restricted",
    "run",
    "run_report",
    "suspension_check",
    "tjurina",
]
