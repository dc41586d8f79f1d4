"""Problem documents: parsing and validation of the JSON input format.

    {"variables": ["x", "y"],
     "I": [[3, 0], [2, 1], [0, 2]],
     "valuations": [{"weights": [2, 3], "e": 6}],
     "J": [[[3, 7]], [[4, 6]]]}

Generators may also be written as strings such as ``"x^3*y^7"`` using the
declared variable names. Errors name the offending field path.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Optional

from .errors import SamuelConeError
from .monomial import MonomialIdeal, ideal_minimalize
from .newton import MonomialValuation


class InputError(SamuelConeError, ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class ProblemInput:
    variables: tuple
    I: Optional[MonomialIdeal]
    valuations: Optional[tuple]  # of MonomialValuation
    J: tuple  # of MonomialIdeal

    @property
    def var_count(self) -> int:
        return len(self.variables)


_FACTOR = re.compile(r"^\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:\^\s*(\d+))?\s*$")


def parse_monomial_text(text: str, variables, path: str) -> tuple:
    exps = [0] * len(variables)
    pos = {name: i for i, name in enumerate(variables)}
    text = text.strip()
    if text == "1":
        return tuple(exps)
    for factor in text.split("*"):
        m = _FACTOR.match(factor)
        if not m:
            raise InputError(path, f"cannot parse monomial factor {factor!r}")
        name, power = m.group(1), m.group(2)
        if name not in pos:
            raise InputError(path, f"unknown variable {name!r}")
        exps[pos[name]] += int(power) if power is not None else 1
    return tuple(exps)


def _exponent_vector(raw, variables, path: str) -> tuple:
    if isinstance(raw, str):
        return parse_monomial_text(raw, variables, path)
    if not isinstance(raw, list):
        raise InputError(path, "expected an exponent list or a monomial string")
    if len(raw) != len(variables):
        raise InputError(path, f"expected {len(variables)} exponents, got {len(raw)}")
    for i, x in enumerate(raw):
        if isinstance(x, bool) or not isinstance(x, int) or x < 0:
            raise InputError(f"{path}[{i}]", f"exponent must be a nonnegative integer, got {x!r}")
    return tuple(raw)


def _ideal(raw, variables, path: str) -> MonomialIdeal:
    if not isinstance(raw, list) or not raw:
        raise InputError(path, "expected a nonempty list of generators")
    gens = [_exponent_vector(g, variables, f"{path}[{i}]") for i, g in enumerate(raw)]
    return ideal_minimalize(gens)


def _valuation(raw, variables, path: str) -> MonomialValuation:
    if not isinstance(raw, dict) or "weights" not in raw or "e" not in raw:
        raise InputError(path, 'expected {"weights": [...], "e": integer}')
    w = raw["weights"]
    if not isinstance(w, list) or len(w) != len(variables):
        raise InputError(f"{path}.weights", f"expected {len(variables)} weights")
    for i, x in enumerate(w):
        if isinstance(x, bool) or not isinstance(x, int) or x < 0:
            raise InputError(f"{path}.weights[{i}]", f"weight must be a nonnegative integer, got {x!r}")
    if not any(w):
        raise InputError(f"{path}.weights", "weights cannot all be zero")
    e = raw["e"]
    if isinstance(e, bool) or not isinstance(e, int) or e <= 0:
        raise InputError(f"{path}.e", f"e must be a positive integer, got {e!r}")
    return MonomialValuation(tuple(w), e)


def parse_input(document: str) -> ProblemInput:
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise InputError("$", f"malformed JSON: {exc}") from exc
    return problem_from_dict(data)


def problem_from_dict(data) -> ProblemInput:
    if not isinstance(data, dict):
        raise InputError("$", "top level must be an object")
    variables = data.get("variables")
    if not isinstance(variables, list) or not variables or not all(isinstance(v, str) for v in variables):
        raise InputError("$.variables", "expected a nonempty list of variable names")
    if len(set(variables)) != len(variables):
        raise InputError("$.variables", "duplicate variable names")

    i_ideal = None
    if data.get("I") is not None:
        i_ideal = _ideal(data["I"], variables, "$.I")

    vals = None
    if data.get("valuations") is not None:
        raw = data["valuations"]
        if not isinstance(raw, list) or not raw:
            raise InputError("$.valuations", "expected a nonempty list")
        vals = tuple(_valuation(v, variables, f"$.valuations[{i}]") for i, v in enumerate(raw))
        if len({v.weights for v in vals}) != len(vals):
            raise InputError("$.valuations", "duplicate weight vectors")

    raw_j = data.get("J", [])
    if not isinstance(raw_j, list):
        raise InputError("$.J", "expected a list of ideals")
    js = tuple(_ideal(j, variables, f"$.J[{i}]") for i, j in enumerate(raw_j))

    if i_ideal is None and vals is None:
        raise InputError("$", "one of I or valuations is required")
    return ProblemInput(tuple(variables), i_ideal, vals, js)
