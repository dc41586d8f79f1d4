"""Monomials and monomial ideals as exponent vectors in N^r.

A monomial ideal is stored by its minimal generators, sorted
lexicographically. Membership of a monomial in a power ``I^n`` is the
integer feasibility problem

    exists y in N^t, sum(y) = n, sum_i y_i * b_i <= a  (componentwise)

which :func:`monomial_in_power` decides by depth-first search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import DimensionError, DomainError, EmptyIdealError

Monomial = tuple  # tuple[int, ...]


def _check_monomial(a) -> Monomial:
    a = tuple(a)
    for x in a:
        if isinstance(x, bool) or not isinstance(x, int):
            raise DomainError(f"exponent {x!r} is not an integer")
        if x < 0:
            raise DomainError(f"negative exponent in {a}")
    return a


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """``x^a | x^b``, i.e. ``a <= b`` componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Sequence[int], b: Sequence[int]) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def support(a: Sequence[int]) -> frozenset:
    return frozenset(j for j, x in enumerate(a) if x)


@dataclass(frozen=True)
class MonomialIdeal:
    var_count: int
    generators: tuple

    def __post_init__(self):
        if not self.generators:
            raise EmptyIdealError("a monomial ideal needs at least one generator")
        for g in self.generators:
            if len(g) != self.var_count:
                raise DimensionError(f"generator {g} has length {len(g)}, expected {self.var_count}")

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return ideal_minimalize(gens)

    @classmethod
    def unit(cls, r: int) -> "MonomialIdeal":
        return cls(r, ((0,) * r,))

    @property
    def t(self) -> int:
        return len(self.generators)

    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.var_count,)

    def contains(self, a: Sequence[int]) -> bool:
        return any(divides(b, a) for b in self.generators)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def ideal_minimalize(gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    pts = sorted({_check_monomial(g) for g in gens})
    if not pts:
        raise EmptyIdealError("empty generator list")
    r = len(pts[0])
    if any(len(p) != r for p in pts):
        raise DimensionError("generators of mixed length")
    # in lex order a divisor always precedes what it divides
    kept = []
    for p in pts:
        if not any(divides(q, p) for q in kept):
            kept.append(p)
    return MonomialIdeal(r, tuple(kept))


def ideal_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.var_count != b.var_count:
        raise DimensionError("ideals live in different rings")
    return ideal_minimalize(mono_mul(p, q) for p in a.generators for q in b.generators)


def ideal_power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise DomainError("negative power")
    result = MonomialIdeal.unit(ideal.var_count)
    if ideal.t == 1:
        return MonomialIdeal(ideal.var_count, (tuple(n * x for x in ideal.generators[0]),))
    # repeated squaring keeps intermediate generator lists minimal
    base = ideal
    while n:
        if n & 1:
            result = ideal_product(result, base)
        n >>= 1
        if n:
            base = ideal_product(base, base)
    return result


def multiset_power_generators(ideal: MonomialIdeal, m: int) -> list:
    """All sums of ``m`` generators (with repetition), before minimalisation."""
    r = ideal.var_count
    out = []
    for combo in itertools.combinations_with_replacement(ideal.generators, m):
        v = [0] * r
        for g in combo:
            for j, x in enumerate(g):
                v[j] += x
        out.append(tuple(v))
    return out


@dataclass(frozen=True)
class MembershipCertificate:
    """Multiplicities ``y`` with ``sum(y) = n`` and ``sum y_i b_i <= target``."""

    y: tuple

    @property
    def n(self) -> int:
        return sum(self.y)

    def verify(self, a: Sequence[int], ideal: MonomialIdeal) -> bool:
        if len(self.y) != ideal.t or any(v < 0 for v in self.y):
            return False
        used = [0] * ideal.var_count
        for yi, b in zip(self.y, ideal.generators):
            for j, x in enumerate(b):
                used[j] += yi * x
        return all(u <= x for u, x in zip(used, a))


def _bound_weights(ideal: MonomialIdeal, extra: Iterable[Sequence[int]] = ()) -> tuple:
    """Nonnegative integer weights used for the relaxation bound in the search.

    For a weight ``w`` and remaining budget ``beta`` at most
    ``floor(w·beta / min_i w·b_i)`` more generators fit. Coordinate
    directions and the all-ones vector are always included; callers may add
    sharper weights (for example the Rees valuation normals).
    """
    r = ideal.var_count
    ws = {tuple(1 if k == j else 0 for k in range(r)) for j in range(r)}
    ws.add((1,) * r)
    for w in extra:
        ws.add(tuple(int(x) for x in w))
    return tuple(sorted(ws))


def _search(a: Monomial, gens: tuple, n: int, weights: tuple) -> Optional[tuple]:
    t = len(gens)
    r = len(a)
    # suffix minima of w·b for every weight: mins[i][k] = min_{i' >= i} w_k·b_{i'}
    wb = [[sum(w[j] * g[j] for j in range(r)) for w in weights] for g in gens]
    mins = [[0] * len(weights) for _ in range(t)]
    for i in range(t - 1, -1, -1):
        for k in range(len(weights)):
            v = wb[i][k]
            if i + 1 < t:
                v = min(v, mins[i + 1][k])
            mins[i][k] = v

    def capacity(i, budget):
        cap = None
        for k, w in enumerate(weights):
            den = mins[i][k]
            if den > 0:
                c = sum(w[j] * budget[j] for j in range(r)) // den
                if cap is None or c < cap:
                    cap = c
        return cap  # None: unbounded, some generator in the tail is free

    @lru_cache(maxsize=None)
    def go(i, need, budget):
        if need == 0:
            return ()
        if i == t:
            return None
        cap = capacity(i, budget)
        if cap is not None and cap < need:
            return None
        g = gens[i]
        hi = need
        for j in range(r):
            if g[j]:
                hi = min(hi, budget[j] // g[j])
        if i == t - 1:
            return (need,) if hi == need else None
        for yi in range(hi, -1, -1):
            rest = tuple(budget[j] - yi * g[j] for j in range(r))
            sub = go(i + 1, need - yi, rest)
            if sub is not None:
                return (yi,) + sub
        return None

    found = go(0, n, tuple(a))
    go.cache_clear()
    if found is None:
        return None
    return found + (0,) * (t - len(found))


def monomial_in_power(a: Sequence[int], ideal: MonomialIdeal, n: int, bound_weights: Iterable = ()):
    """Decide ``x^a ∈ I^n``. Returns ``(True, certificate)`` or ``(False, None)``."""
    a = _check_monomial(a)
    if len(a) != ideal.var_count:
        raise DimensionError(f"monomial of length {len(a)} against ideal in {ideal.var_count} variables")
    if n < 0:
        raise DomainError("negative power")
    if n == 0:
        return True, MembershipCertificate((0,) * ideal.t)
    y = _search(a, ideal.generators, n, _bound_weights(ideal, bound_weights))
    if y is None:
        return False, None
    return True, MembershipCertificate(y)


def monomial_order(a: Sequence[int], ideal: MonomialIdeal, upper: Optional[int] = None, bound_weights: Iterable = ()) -> int:
    """Largest ``n`` with ``x^a ∈ I^n``; ``upper`` is a known valid upper bound.

    Membership is antitone in ``n``, so we descend from the bound. Raises
    :class:`DomainError` if the order is unbounded (I is the unit ideal).
    """
    a = _check_monomial(a)
    weights = _bound_weights(ideal, bound_weights)
    if upper is None:
        upper = _relaxation_cap(a, ideal, weights)
    n = upper
    while n > 0:
        if _search(a, ideal.generators, n, weights) is not None:
            return n
        n -= 1
    return 0


def _relaxation_cap(a, ideal, weights) -> int:
    r = ideal.var_count
    cap = None
    for w in weights:
        den = min(sum(w[j] * g[j] for j in range(r)) for g in ideal.generators)
        if den > 0:
            c = sum(w[j] * a[j] for j in range(r)) // den
            cap = c if cap is None else min(cap, c)
    if cap is None:
        raise DomainError("the unit ideal contains every power; the order is infinite")
    return cap


def ideal_contains_power(j_ideal: MonomialIdeal, m: int, i_ideal: MonomialIdeal, n: int, bound_weights: Iterable = ()) -> bool:
    """``J^m ⊆ I^n``, checked generator by generator on ``J^m``."""
    if j_ideal.var_count != i_ideal.var_count:
        raise DimensionError("ideals live in different rings")
    if m < 0 or n < 0:
        raise DomainError("negative exponent")
    if n == 0:
        return True
    gens = ideal_power(j_ideal, m).generators if j_ideal.t > 1 else [tuple(m * x for x in j_ideal.generators[0])]
    return all(monomial_in_power(g, i_ideal, n, bound_weights)[0] for g in gens)


def radical_contains(i_ideal: MonomialIdeal, j_ideal: MonomialIdeal) -> bool:
    """``J ⊆ √I``: each generator of J is divisible, up to a power, by some generator of I."""
    if j_ideal.var_count != i_ideal.var_count:
        raise DimensionError("ideals live in different rings")
    supports = [support(b) for b in i_ideal.generators]
    return all(any(s <= support(c) for s in supports) for c in j_ideal.generators)
