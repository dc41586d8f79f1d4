"""Rees valuations of monomial ideals from the Newton polyhedron.

For a monomial ideal ``I`` with generator exponents ``b_1..b_t`` the Newton
polyhedron is ``conv{b_i} + R^r_{>=0}``. Each facet not lying in a
coordinate hyperplane has an inner normal ``w >= 0`` and level
``e = min_i w·b_i > 0``; these pairs are the Rees valuations of ``I`` and

    vbar_I(x^a) = min_j (w_j · a) / e_j.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import DimensionError, DomainError
from .monomial import MonomialIdeal
from .rational import nullspace, primitive_integer_vector

COMPUTED = "computed-from-ideal"
USER_SUPPLIED = "user-supplied"


def _wdot(w, a) -> int:
    if len(w) != len(a):
        raise DimensionError(f"weight of length {len(w)} applied to exponent of length {len(a)}")
    return sum(x * y for x, y in zip(w, a))


@dataclass(frozen=True)
class MonomialValuation:
    weights: tuple
    e: int

    def __post_init__(self):
        w = tuple(self.weights)
        object.__setattr__(self, "weights", w)
        if any(isinstance(x, bool) or not isinstance(x, int) or x < 0 for x in w):
            raise DomainError(f"weights must be nonnegative integers, got {w}")
        if not any(w):
            raise DomainError("zero weight vector")
        if not isinstance(self.e, int) or self.e <= 0:
            raise DomainError(f"e must be a positive integer, got {self.e!r}")

    def __call__(self, a: Sequence[int]) -> int:
        return _wdot(self.weights, a)

    def normalized(self, a: Sequence[int]) -> Fraction:
        return Fraction(self(a), self.e)

    def to_json(self) -> dict:
        return {"weights": list(self.weights), "e": self.e}


@dataclass(frozen=True)
class ValuationSet:
    valuations: tuple
    source: str = COMPUTED

    def __post_init__(self):
        vals = tuple(self.valuations)
        object.__setattr__(self, "valuations", vals)
        if not vals:
            raise DomainError("a valuation set cannot be empty")
        seen = set()
        for v in vals:
            if v.weights in seen:
                raise DomainError(f"duplicate weight vector {v.weights}")
            seen.add(v.weights)
        dims = {len(v.weights) for v in vals}
        if len(dims) != 1:
            raise DimensionError("valuations over different variable counts")

    @property
    def var_count(self) -> int:
        return len(self.valuations[0].weights)

    def __len__(self):
        return len(self.valuations)

    def __iter__(self):
        return iter(self.valuations)

    def weight_vectors(self) -> list:
        return [v.weights for v in self.valuations]


def valuation_of_ideal(v: MonomialValuation, ideal: MonomialIdeal) -> int:
    return min(v(c) for c in ideal.generators)


def _candidate_normal(anchor, vectors) -> Optional[tuple]:
    """Primitive nonnegative normal to ``vectors``, or None if not a single ray in the orthant."""
    basis = nullspace(vectors)
    if len(basis) != 1:
        return None
    n = basis[0]
    if all(x <= 0 for x in n):
        n = tuple(-x for x in n)
    if any(x < 0 for x in n):
        return None
    return primitive_integer_vector(n)


def rees_valuations(ideal: MonomialIdeal) -> ValuationSet:
    """One valuation per facet of the Newton polyhedron with positive level.

    Facets are found by brute force: a candidate hyperplane passes through a
    generator ``b_p`` and is spanned by ``r-1`` vectors drawn from the
    differences ``b_q - b_p`` and the coordinate directions. A normal is kept
    when it is nonnegative and ``b_p`` minimises it over every generator.
    """
    r = ideal.var_count
    gens = ideal.generators
    if ideal.is_unit():
        raise DomainError("the unit ideal has no Rees valuations")
    units = [tuple(1 if k == j else 0 for k in range(r)) for j in range(r)]
    found = {}
    for p, anchor in enumerate(gens):
        directions = [tuple(q - a for q, a in zip(other, anchor)) for i, other in enumerate(gens) if i != p]
        directions += units
        for combo in itertools.combinations(directions, r - 1):
            if r == 1:
                w = (1,)
            else:
                w = _candidate_normal(anchor, combo)
                if w is None:
                    continue
            if w in found:
                continue
            level = _wdot(w, anchor)
            if level <= 0:
                continue
            if all(_wdot(w, b) >= level for b in gens):
                found[w] = level
    vals = tuple(MonomialValuation(w, e) for w, e in sorted(found.items()))
    return ValuationSet(vals, COMPUTED)


def user_valuations(entries: Iterable, ideal: Optional[MonomialIdeal] = None) -> ValuationSet:
    """Build a user-supplied valuation set.

    With an ideal at hand each ``e`` is checked against ``min w·b``; without
    one the data is taken verbatim.
    """
    vals = []
    for item in entries:
        if isinstance(item, MonomialValuation):
            v = item
        elif isinstance(item, dict):
            v = MonomialValuation(tuple(item["weights"]), item["e"])
        else:
            w, e = item
            v = MonomialValuation(tuple(w), e)
        if ideal is not None:
            actual = valuation_of_ideal(v, ideal)
            if actual != v.e:
                raise DomainError(f"valuation {v.weights} has e={v.e} but min over generators is {actual}")
        vals.append(v)
    return ValuationSet(tuple(vals), USER_SUPPLIED)


def vbar(vs: ValuationSet, a: Sequence[int]) -> Fraction:
    """Asymptotic order of ``x^a`` with respect to ``I``: ``min_j w_j·a / e_j``."""
    return min(v.normalized(a) for v in vs.valuations)


def in_integral_closure(vs: ValuationSet, a: Sequence[int], n: int) -> bool:
    """``x^a`` lies in the integral closure of ``I^n``."""
    if n < 0:
        raise DomainError("negative power")
    return all(v(a) >= n * v.e for v in vs.valuations)
