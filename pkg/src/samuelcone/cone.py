"""The closure of the cone C(J_1..J_k; I) in R^{k+1}.

With valuations ``(v_j, e_j)`` of ``I`` put ``alpha[s][j] = v_j(J_s) / e_j``.
The closure of ``C`` is

    {(m, n) : m >= 0, 0 <= n <= min_j sum_s alpha[s][j] m_s}

and only the columns ``j`` whose region ``D_j`` (where column ``j`` attains
that minimum) is more than the origin contribute a facet.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DimensionError, DomainError, UnsupportedDimensionError
from .monomial import MonomialIdeal
from .newton import ValuationSet, valuation_of_ideal
from .rational import as_rational, dot, rat_str
from .simplex import EQ, LE, Constraint, lp_feasible

INTERIOR = "interior"
BOUNDARY = "boundary"
OUTSIDE = "outside"


@dataclass(frozen=True)
class AlphaMatrix:
    entries: tuple  # k rows, h columns

    def __post_init__(self):
        rows = tuple(tuple(as_rational(x) for x in row) for row in self.entries)
        if not rows or not rows[0]:
            raise DimensionError("alpha matrix needs at least one row and one column")
        h = len(rows[0])
        if any(len(r) != h for r in rows):
            raise DimensionError("ragged alpha matrix")
        if any(x < 0 for r in rows for x in r):
            raise DomainError("alpha entries must be nonnegative")
        object.__setattr__(self, "entries", rows)

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def h(self) -> int:
        return len(self.entries[0])

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def to_json(self) -> list:
        return [[rat_str(x) for x in row] for row in self.entries]


@dataclass(frozen=True)
class RegionD:
    index: int  # 1-based valuation index
    constraints: tuple  # Constraint rows in the variables m_1..m_k (m >= 0 implicit)


@dataclass(frozen=True)
class ConeClosure:
    upper_hyperplanes: tuple  # coefficient rows: n <= row · m

    @property
    def k(self) -> int:
        return len(self.upper_hyperplanes[0])

    @property
    def dimension(self) -> int:
        return self.k + 1

    def bound(self, m: Sequence) -> Fraction:
        return min(dot(row, m) for row in self.upper_hyperplanes)

    def to_json(self) -> dict:
        return {"hyperplanes": [[rat_str(x) for x in row] for row in self.upper_hyperplanes]}


def alpha_matrix(vs: ValuationSet, j_ideals: Sequence[MonomialIdeal]) -> AlphaMatrix:
    for j in j_ideals:
        if j.var_count != vs.var_count:
            raise DimensionError(f"ideal in {j.var_count} variables, valuations in {vs.var_count}")
    return AlphaMatrix(tuple(
        tuple(Fraction(valuation_of_ideal(v, j), v.e) for v in vs.valuations) for j in j_ideals
    ))


def region(a: AlphaMatrix, j: int) -> RegionD:
    """``D_j`` for the 0-based column ``j``, as inequalities ``(col_j - col_l) · m <= 0``."""
    cj = a.column(j)
    cons = []
    for l in range(a.h):
        if l != j:
            cl = a.column(l)
            cons.append(Constraint(tuple(x - y for x, y in zip(cj, cl)), LE, 0))
    return RegionD(j + 1, tuple(cons))


def relevant_valuations(a: AlphaMatrix) -> list:
    """1-based indices ``j`` with ``D_j != {0}``, tested on the slice ``sum(m) = 1``."""
    out = []
    for j in range(a.h):
        cons = (Constraint((1,) * a.k, EQ, 1),) + region(a, j).constraints
        ok, _ = lp_feasible(cons, a.k)
        if ok:
            out.append(j + 1)
    return out


def cone_closure(a: AlphaMatrix) -> ConeClosure:
    rows = []
    for j in relevant_valuations(a):
        col = a.column(j - 1)
        if col not in rows:
            rows.append(col)
    return ConeClosure(tuple(rows))


def classify_point(cc: ConeClosure, point: Sequence) -> str:
    """Place ``(m_1..m_k, n)`` relative to the closure.

    Rational interior points lie in ``C``; outside points do not; nothing is
    claimed for the boundary.
    """
    p = tuple(as_rational(x) for x in point)
    if len(p) != cc.dimension:
        raise DimensionError(f"point of length {len(p)} for a cone in dimension {cc.dimension}")
    if any(x < 0 for x in p):
        raise DomainError("points must have nonnegative coordinates")
    *m, n = p
    b = cc.bound(m)
    if n < b:
        return INTERIOR
    if n == b:
        return BOUNDARY
    return OUTSIDE


def limit_exists(a: AlphaMatrix, weights: Sequence) -> Optional[Fraction]:
    """The limit of ``v_I(J; m) / (a · m)``, or ``None`` when it does not exist.

    It exists exactly when every relevant column of ``alpha`` is one and the
    same multiple ``l * a`` of the weight vector.
    """
    w = tuple(as_rational(x) for x in weights)
    if len(w) != a.k:
        raise DimensionError(f"{len(w)} weights for {a.k} ideals")
    if any(x <= 0 for x in w):
        raise DomainError("weights must be positive")
    l = None
    for j in relevant_valuations(a):
        for s, x in enumerate(a.column(j - 1)):
            ratio = x / w[s]
            if l is None:
                l = ratio
            elif ratio != l:
                return None
    return l


def _mesh_number(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    # exact decimal when the denominator has only 2s and 5s, otherwise "p/q"
    d = x.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return rat_str(x)
    digits = max(twos, fives)
    scaled = x * 10**digits
    sign = "-" if scaled < 0 else ""
    q = abs(scaled.numerator)
    whole, frac = divmod(q, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def _clip_polygon(poly, coeffs):
    """Keep the part of a convex polygon with ``coeffs · (x, y, 1) <= 0``."""
    a, b, c = coeffs
    out = []
    for i, p in enumerate(poly):
        q = poly[(i + 1) % len(poly)]
        fp = a * p[0] + b * p[1] + c
        fq = a * q[0] + b * q[1] + c
        if fp <= 0:
            out.append(p)
        if (fp < 0 < fq) or (fq < 0 < fp):
            s = fp / (fp - fq)
            out.append((p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1])))
    # drop consecutive duplicates produced by clipping through a vertex
    dedup = []
    for p in out:
        if not dedup or dedup[-1] != p:
            dedup.append(p)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


def emit_mesh(cc: ConeClosure, bound: int) -> str:
    """Wavefront-style text mesh of the surface ``n = min_j row_j · m`` over ``[0, bound]^2``.

    Each relevant hyperplane contributes the convex piece of the square where
    it attains the minimum, fan-triangulated; seams where two rows tie are
    emitted as ``l`` polylines.
    """
    if cc.k != 2:
        raise UnsupportedDimensionError(f"mesh output needs k = 2, got k = {cc.k}")
    if bound <= 0:
        raise DomainError("bound must be positive")
    B = Fraction(bound)
    square = [(Fraction(0), Fraction(0)), (B, Fraction(0)), (B, B), (Fraction(0), B)]
    rows = cc.upper_hyperplanes
    vertices = []
    index = {}
    faces = []
    pieces = []

    def vid(p):
        z = min(r[0] * p[0] + r[1] * p[1] for r in rows)
        key = (p[0], p[1], z)
        if key not in index:
            vertices.append(key)
            index[key] = len(vertices)
        return index[key]

    for j, row in enumerate(rows):
        poly = square
        for l, other in enumerate(rows):
            if l != j:
                # row_j · m <= row_l · m
                poly = _clip_polygon(poly, (row[0] - other[0], row[1] - other[1], 0))
                if len(poly) < 3:
                    break
        if len(poly) < 3:
            continue
        pieces.append((j, poly))
        ids = [vid(p) for p in poly]
        for i in range(1, len(ids) - 1):
            faces.append((ids[0], ids[i], ids[i + 1]))

    seams = []
    for j in range(len(rows)):
        for l in range(j + 1, len(rows)):
            diff = (rows[j][0] - rows[l][0], rows[j][1] - rows[l][1])
            pts = _segment_on_square(diff, B)
            pts = [p for p in pts if rows[j][0] * p[0] + rows[j][1] * p[1] == min(r[0] * p[0] + r[1] * p[1] for r in rows)]
            if len(pts) == 2 and pts[0] != pts[1]:
                seams.append((j + 1, l + 1, [vid(p) for p in pts]))

    lines = ["# surface n = min_j row_j . m over [0, %d]^2" % bound]
    for j, row in enumerate(rows):
        lines.append(f"# plane {j + 1}: n = {rat_str(row[0])}*m1 + {rat_str(row[1])}*m2")
    for x, y, z in vertices:
        lines.append(f"v {_mesh_number(x)} {_mesh_number(y)} {_mesh_number(z)}")
    for f in faces:
        lines.append("f %d %d %d" % f)
    for j, l, ids in seams:
        lines.append(f"# seam between planes {j} and {l}")
        lines.append("l " + " ".join(str(i) for i in ids))
    return "\n".join(lines) + "\n"


def _segment_on_square(diff, B):
    """Endpoints of ``{m in [0,B]^2 : diff · m = 0}`` when it is a segment through the origin."""
    a, b = diff
    if a == 0 and b == 0:
        return []
    # the zero set is the line a*x + b*y = 0 through the origin; it meets the
    # closed positive quadrant only if a and b have opposite signs or one is 0
    if a == 0:
        return [(Fraction(0), Fraction(0)), (B, Fraction(0))]
    if b == 0:
        return [(Fraction(0), Fraction(0)), (Fraction(0), B)]
    if (a > 0) == (b > 0):
        return []
    # direction (b, -a) or (-b, a), whichever is nonnegative
    dx, dy = (-b, a) if -b > 0 else (b, -a)
    s = min(B / dx, B / dy)
    return [(Fraction(0), Fraction(0)), (dx * s, dy * s)]
