"""Samuel's functions v_I(J, m), w_J(I, n) and their limits for monomial ideals.

``L_J(I) = inf{m/n : J^m ⊆ I^n}`` and ``l_I(J) = 1 / L_J(I)``. For a
principal ``J = (x^c)`` and ``I`` with generators ``b_1..b_t`` the infimum
is the value of

    minimise tau  subject to  sum_i b_ij z_i <= tau * c_j  (all j),
                              z >= 0,  sum_i z_i = 1,

which is solved piecewise: on the region where coordinate ``k`` attains the
maximum of ``sum_i b_ij z_i / c_j`` the objective is linear.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .errors import DimensionError, DomainError, HypothesisError, InconsistencyError
from .monomial import (
    MembershipCertificate,
    MonomialIdeal,
    ideal_power,
    ideal_product,
    monomial_in_power,
    monomial_order,
    radical_contains,
)
from .newton import ValuationSet, rees_valuations, vbar
from .rational import lcm_of_denominators
from .simplex import EQ, GE, LE, Constraint, LinearProgram, lp_solve

cached_rees_valuations = lru_cache(maxsize=256)(rees_valuations)


@dataclass(frozen=True)
class LimitResult:
    L: Fraction
    l: Fraction
    witness_m: int
    witness_n: int
    optimizer_z: tuple
    active_regions: tuple
    # principal generator the witness pair refers to (J itself when principal)
    witness_generator: Optional[tuple] = None
    certificate: Optional[MembershipCertificate] = None

    def __post_init__(self):
        if self.L * self.l != 1:
            raise InconsistencyError(f"L={self.L} and l={self.l} are not reciprocal")


def _require_radical(i_ideal: MonomialIdeal, j_ideal: MonomialIdeal) -> None:
    if not radical_contains(i_ideal, j_ideal):
        raise HypothesisError("J is not contained in the radical of I; the Samuel limits are infinite")


def _weights(i_ideal: MonomialIdeal) -> list:
    return cached_rees_valuations(i_ideal).weight_vectors()


def order_in(i_ideal: MonomialIdeal, a: Sequence[int], cap: Optional[int] = None) -> int:
    """Largest ``n`` with ``x^a ∈ I^n``, searched downward from ``floor(vbar(a))``."""
    vs = cached_rees_valuations(i_ideal)
    upper = math.floor(vbar(vs, a))
    if cap is not None:
        upper = min(upper, cap)
    return monomial_order(a, i_ideal, upper, vs.weight_vectors())


def _min_order(i_ideal: MonomialIdeal, gens) -> int:
    vs = cached_rees_valuations(i_ideal)
    best = None
    for g in sorted(gens, key=lambda g: vbar(vs, g)):
        best = order_in(i_ideal, g, best)
        if best == 0:
            break
    return best


def v_of(i_ideal: MonomialIdeal, j_ideal: MonomialIdeal, m: int) -> int:
    """Largest ``n`` such that ``J^m ⊆ I^n``."""
    if m < 0:
        raise DomainError("m must be nonnegative")
    _require_radical(i_ideal, j_ideal)
    if m == 0:
        return 0
    return _min_order(i_ideal, ideal_power(j_ideal, m).generators)


def contains(j_ideal: MonomialIdeal, m: int, i_ideal: MonomialIdeal, n: int) -> bool:
    """``J^m ⊆ I^n`` with the Rees valuations of ``I`` sharpening the search bound."""
    if n == 0:
        return True
    weights = _weights(i_ideal)
    return all(monomial_in_power(g, i_ideal, n, weights)[0] for g in ideal_power(j_ideal, m).generators)


def w_of(i_ideal: MonomialIdeal, j_ideal: MonomialIdeal, n: int) -> int:
    """Smallest ``m`` such that ``J^m ⊆ I^n``."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    _require_radical(i_ideal, j_ideal)
    if n == 0:
        return 0
    # v(m) <= l*m, so m >= n / l
    lim = limit_L_general(i_ideal, j_ideal)
    m = max(1, math.ceil(n * lim.L))
    while not contains(j_ideal, m, i_ideal, n):
        m += 1
    return m


def region_program(i_ideal: MonomialIdeal, c: Sequence[int], k: int) -> LinearProgram:
    """Linear program for the region where coordinate ``k`` (0-based) dominates.

    Minimise ``sum_i b_ik z_i / c_k`` over the simplex subject to
    ``c_j * sum_i b_ik z_i >= c_k * sum_i b_ij z_i`` for ``j != k``; a
    coordinate with ``c_j = 0`` instead forces ``sum_i b_ij z_i <= 0``.
    """
    gens = i_ideal.generators
    t = len(gens)
    ck = c[k]
    if ck <= 0:
        raise DomainError(f"coordinate {k} has zero exponent in J and defines no region")
    objective = tuple(Fraction(b[k], ck) for b in gens)
    cons = [Constraint((1,) * t, EQ, 1)]
    for j, cj in enumerate(c):
        if j == k:
            continue
        if cj == 0:
            cons.append(Constraint(tuple(b[j] for b in gens), LE, 0))
        else:
            cons.append(Constraint(tuple(cj * b[k] - ck * b[j] for b in gens), GE, 0))
    return LinearProgram(objective, tuple(cons))


def certificate_from_optimizer(i_ideal: MonomialIdeal, c: Sequence[int], z: Sequence[Fraction], L: Fraction):
    """Clear denominators in an optimal ``z`` to get ``(m, n, y)`` with ``J^m ⊆ I^n``.

    ``n`` is the least common multiple of the denominators of ``z`` and of
    ``L``; then ``y = n z`` is integral and ``m = L n``.
    """
    n = math.lcm(lcm_of_denominators(z), Fraction(L).denominator)
    y = tuple(int(zi * n) for zi in z)
    m = int(L * n)
    return m, n, MembershipCertificate(y)


def limit_L(i_ideal: MonomialIdeal, c: Sequence[int], *, reverse: bool = False) -> LimitResult:
    """``L_J(I)`` and ``l_I(J)`` for the principal ideal ``J = (x^c)``."""
    c = tuple(c)
    if len(c) != i_ideal.var_count:
        raise DimensionError(f"exponent vector of length {len(c)} for ideal in {i_ideal.var_count} variables")
    if not any(c):
        raise HypothesisError("J is the unit ideal, which is not inside the radical of a proper I")
    j_ideal = MonomialIdeal(len(c), (c,))
    _require_radical(i_ideal, j_ideal)

    order = [k for k in range(len(c)) if c[k] > 0]
    if reverse:
        order.reverse()
    values = {}
    points = {}
    for k in order:
        res = lp_solve(region_program(i_ideal, c, k))
        if res.optimal:
            values[k] = res.value
            points[k] = res.point
    if not values:
        raise InconsistencyError("no region program is feasible although J ⊆ √I")
    L = min(values.values())
    active = tuple(sorted(k + 1 for k, v in values.items() if v == L))
    z = points[active[0] - 1]
    l = 1 / L

    m, n, cert = certificate_from_optimizer(i_ideal, c, z, L)
    if not cert.verify(tuple(m * x for x in c), i_ideal):
        raise InconsistencyError(f"optimizer {z} does not yield a certificate")
    # reduce to the smallest multiple of the lowest-terms pair that still works
    m0, n0 = l.denominator, l.numerator
    weights = _weights(i_ideal)
    for mult in range(1, n // n0):
        ok, small = monomial_in_power(tuple(mult * m0 * x for x in c), i_ideal, mult * n0, weights)
        if ok:
            m, n, cert = mult * m0, mult * n0, small
            break
    return LimitResult(L, l, m, n, z, active, c, cert)


def limit_L_general(i_ideal: MonomialIdeal, j_ideal: MonomialIdeal) -> LimitResult:
    """Reduce to principal ideals: ``L_J(I)`` is the maximum over J's generators."""
    if j_ideal.var_count != i_ideal.var_count:
        raise DimensionError("ideals live in different rings")
    _require_radical(i_ideal, j_ideal)
    best = None
    for g in j_ideal.generators:
        res = limit_L(i_ideal, g)
        if best is None or res.L > best.L:
            best = res
    return best


def cross_check_l(i_ideal: MonomialIdeal, j_ideal: MonomialIdeal):
    """``l_I(J)`` by the region programs and by the Rees valuations; returns both and whether they agree."""
    via_lp = limit_L_general(i_ideal, j_ideal).l
    vs = rees_valuations(i_ideal)
    via_vals = min(vbar(vs, g) for g in j_ideal.generators)
    return via_lp, via_vals, via_lp == via_vals


def v_multi(i_ideal: MonomialIdeal, j_ideals: Sequence[MonomialIdeal], ms: Sequence[int]) -> int:
    """Largest ``n`` such that ``J_1^{m_1} ... J_k^{m_k} ⊆ I^n``."""
    if len(j_ideals) != len(ms):
        raise DimensionError("one exponent per ideal is required")
    for j in j_ideals:
        if j.var_count != i_ideal.var_count:
            raise DimensionError("ideals live in different rings")
        _require_radical(i_ideal, j)
    if any(m < 0 for m in ms):
        raise DomainError("exponents must be nonnegative")
    product = MonomialIdeal.unit(i_ideal.var_count)
    for j, m in zip(j_ideals, ms):
        if m:
            product = ideal_product(product, ideal_power(j, m))
    if product.is_unit():
        return 0
    return _min_order(i_ideal, product.generators)


def valuations_for(i_ideal: MonomialIdeal) -> ValuationSet:
    return cached_rees_valuations(i_ideal)
