"""The sequence v(m) = v_I(J, m): increments, empirical period, deviation from l*m."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DomainError, InconsistencyError, InsufficientDataError
from .limits import limit_L_general, v_of
from .monomial import MonomialIdeal
from .rational import rat_str


@dataclass(frozen=True)
class Period:
    t: int
    onset: int  # 1-based index m from which v(m + t) - v(m) is constant
    constant: int


@dataclass(frozen=True)
class SequenceReport:
    values: tuple
    diffs: tuple
    period: Optional[Period]
    max_deviation: Fraction
    sup_attained: bool
    l: Fraction

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "v", "diff", "deviation"])
        for i, v in enumerate(self.values):
            diff = self.diffs[i] if i < len(self.diffs) else ""
            w.writerow([i + 1, v, diff, rat_str(self.l * (i + 1) - v)])
        return buf.getvalue()


def compute_sequence(i_ideal: MonomialIdeal, j_ideal: MonomialIdeal, max_m: int) -> list:
    if max_m <= 0:
        raise DomainError("max_m must be positive")
    return [v_of(i_ideal, j_ideal, m) for m in range(1, max_m + 1)]


def default_window(max_m: int) -> int:
    return max(1, min(10, math.ceil(max_m / 3)))


def detect_period(values: Sequence[int], window: int) -> Optional[Period]:
    """Smallest ``t <= window`` with ``v(m+t) - v(m)`` constant over the tail.

    The tail is the last ``2*window - t`` admissible ``m``. The onset is then
    pushed back as far as the constancy persists. This is a finite-window
    observation, not a proof of periodicity.
    """
    if window <= 0:
        raise DomainError("window must be positive")
    n = len(values)
    if n < 2 * window:
        raise InsufficientDataError(f"need at least {2 * window} values, got {n}")
    for t in range(1, window + 1):
        steps = [values[i + t] - values[i] for i in range(n - t)]
        tail = steps[-(2 * window - t):]
        if len(set(tail)) != 1:
            continue
        const = tail[0]
        start = len(steps) - len(tail)
        while start > 0 and steps[start - 1] == const:
            start -= 1
        return Period(t, start + 1, const)
    return None


def deviation_report(values: Sequence[int], l: Fraction):
    """``(max_m (l*m - v(m)), whether some v(m) equals l*m)``.

    ``l`` is the supremum of ``v(m)/m``, so ``v(m) > l*m`` can only come from a
    bug upstream and raises :class:`InconsistencyError`.
    """
    l = Fraction(l)
    if l <= 0:
        raise DomainError("l must be positive")
    if not values:
        raise InsufficientDataError("empty sequence")
    worst = None
    attained = False
    for m, v in enumerate(values, start=1):
        dev = l * m - v
        if dev < 0:
            raise InconsistencyError(f"v({m}) = {v} exceeds l*m = {l * m}")
        if dev == 0:
            attained = True
        if worst is None or dev > worst:
            worst = dev
    return worst, attained


def analyze(i_ideal: MonomialIdeal, j_ideal: MonomialIdeal, max_m: int, window: Optional[int] = None) -> SequenceReport:
    values = compute_sequence(i_ideal, j_ideal, max_m)
    l = limit_L_general(i_ideal, j_ideal).l
    if window is None:
        window = default_window(max_m)
    period = detect_period(values, window) if len(values) >= 2 * window else None
    worst, attained = deviation_report(values, l)
    diffs = tuple(b - a for a, b in zip(values, values[1:]))
    return SequenceReport(tuple(values), diffs, period, worst, attained, l)
