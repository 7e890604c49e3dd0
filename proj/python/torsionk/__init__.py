"""Exact tools for linear constraint systems over Z/d."""

import json

from ._torsionk import (
    CW2Complex,
    IncompatibleInput,
    LinearConstraintSystem,
    OperatorSolution,
    ParseError,
    UnverifiedSolution,
    builtin,
    builtin_names,
    class_of_solution,
    cohomology,
    det_cochain,
    homotopy_group,
    run_cli,
    smith_normal_form,
    solve_mod,
    verify,
)

__all__ = [
    "CW2Complex",
    "IncompatibleInput",
    "LinearConstraintSystem",
    "OperatorSolution",
    "ParseError",
    "UnverifiedSolution",
    "builtin",
    "builtin_names",
    "class_of_solution",
    "cohomology",
    "complex_from_dict",
    "det_cochain",
    "homotopy_group",
    "lcs_from_dict",
    "run_cli",
    "smith_normal_form",
    "solution_from_dict",
    "solve_mod",
    "verify",
]


def lcs_from_dict(data):
    return LinearConstraintSystem.from_json(json.dumps(data))


def complex_from_dict(data):
    return CW2Complex.from_json(json.dumps(data))


def solution_from_dict(data):
    return OperatorSolution.from_json(json.dumps(data))
