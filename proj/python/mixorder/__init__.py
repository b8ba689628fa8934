"""Python access to the mixorder library.

Models and h-functions are native objects. Scenario-based checks take a
scenario as a dict (the same layout as the JSON scenario files) and return
plain dicts with the field names used by the command-line tool.
"""

import json

from ._mixorder import (
    Baseline,
    DomainError,
    FormatError,
    InfiniteMeanSuspected,
    MixorderError,
    MixtureModel,
    NumericalError,
    ParameterError,
    PreconditionError,
    ShapeError,
    TailError,
    h_hr,
    h_pa,
    h_plambda,
)
from . import _mixorder as _ext


def _text(scenario):
    return scenario if isinstance(scenario, str) else json.dumps(scenario)


def normalize_scenario(scenario):
    """Parse and re-serialize a scenario, filling defaults."""
    return json.loads(_ext._normalize_scenario(_text(scenario)))


def load_scenario(path):
    with open(path, encoding="utf-8") as fh:
        return normalize_scenario(fh.read())


def check_order(scenario, order):
    return json.loads(_ext._check_order(_text(scenario), order))


def check_theorem(theorem_id, scenario, waived=()):
    return json.loads(_ext._check_theorem(theorem_id, _text(scenario), list(waived)))


def verify_example(k):
    return json.loads(_ext._verify_example(int(k)))


def search(theorem_id, trials, seed, drop_balance=False):
    return json.loads(_ext._search(theorem_id, int(trials), int(seed), bool(drop_balance)))


__all__ = [
    "Baseline",
    "MixtureModel",
    "h_pa",
    "h_plambda",
    "h_hr",
    "normalize_scenario",
    "load_scenario",
    "check_order",
    "check_theorem",
    "verify_example",
    "search",
    "MixorderError",
    "ParameterError",
    "DomainError",
    "ShapeError",
    "PreconditionError",
    "NumericalError",
    "TailError",
    "FormatError",
    "InfiniteMeanSuspected",
]
