"""Exact asymptotics of powers of monomial ideals.

Samuel's functions and limits, Rees valuations from Newton polyhedra, and the
closure of the cone of exponents (m_1, ..., m_k, n) with
J_1^{m_1} ... J_k^{m_k} ⊆ I^n, all in exact rational arithmetic.
"""

from .cone import AlphaMatrix, ConeClosure, alpha_matrix, classify_point, cone_closure, emit_mesh, limit_exists, relevant_valuations
from .limits import LimitResult, cross_check_l, limit_L, limit_L_general, v_multi, v_of, w_of
from .monomial import MonomialIdeal, ideal_contains_power, ideal_minimalize, ideal_power, monomial_in_power, radical_contains
from .newton import MonomialValuation, ValuationSet, in_integral_closure, rees_valuations, valuation_of_ideal, vbar
from .rational import dot, rat_cmp, rat_make
from .sequence import SequenceReport, analyze, compute_sequence, detect_period, deviation_report
from .simplex import LinearProgram, LPResult, lp_feasible, lp_solve

__version__ = "0.1.0"
