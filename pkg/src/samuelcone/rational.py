"""Exact rational scalars and vectors.

``fractions.Fraction`` already keeps numerator and denominator in lowest
terms with the sign on the numerator, on top of Python's unbounded ints, so
it is used directly as the scalar type. This module adds the vector helpers,
a tiny exact linear algebra kit and the ``"p/q"`` string form used in JSON.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DimensionError, InvalidDenominatorError

Rational = Fraction
RatVector = tuple  # tuple[Fraction, ...]; fixed length by construction

RationalLike = Union[int, Fraction, str]


def rat_make(p: int, q: int = 1) -> Fraction:
    if q == 0:
        raise InvalidDenominatorError(f"denominator of {p}/{q} is zero")
    return Fraction(p, q)


def as_rational(x: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string; floats are rejected."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        text = x.strip()
        if "/" in text:
            p, _, q = text.partition("/")
            return rat_make(int(p), int(q))
        return Fraction(int(text))
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def rat_cmp(a: Fraction, b: Fraction) -> int:
    """Return -1, 0 or 1. Cross-multiplies, so no rounding is involved."""
    lhs = a.numerator * b.denominator
    rhs = b.numerator * a.denominator
    return (lhs > rhs) - (lhs < rhs)


def rat_str(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def ratvec(values: Iterable[RationalLike]) -> tuple:
    return tuple(as_rational(v) for v in values)


def dot(a: Sequence, b: Sequence) -> Fraction:
    if len(a) != len(b):
        raise DimensionError(f"dot product of lengths {len(a)} and {len(b)}")
    return sum((Fraction(x) * y for x, y in zip(a, b)), Fraction(0))


def lcm_of_denominators(values: Iterable[Fraction]) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, Fraction(v).denominator)
    return out


def primitive_integer_vector(v: Sequence[Fraction]) -> tuple:
    """Scale a nonzero rational vector to the integer vector with gcd 1 on the same ray."""
    scale = lcm_of_denominators(v)
    ints = [int(x * scale) for x in v]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in ints)


def nullspace(rows: Sequence[Sequence]) -> list:
    """Basis of the right nullspace of a rational matrix, by exact row reduction.

    Returns a list of tuples; empty when the matrix has full column rank.
    ``rows`` may be empty, in which case ``ncols`` cannot be inferred and an
    empty list is returned.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    mat = [[Fraction(x) for x in row] for row in rows]
    if any(len(row) != ncols for row in mat):
        raise DimensionError("ragged matrix")
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -mat[i][fc]
        basis.append(tuple(vec))
    return basis


def solve_square(a: Sequence[Sequence], b: Sequence) -> tuple | None:
    """Solve ``a x = b`` for square ``a``; ``None`` when singular."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(rhs)] for row, rhs in zip(a, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(row[n] for row in aug)
