"""Gaps and pure gaps on quotients of the Hermitian curve y^m = x^q + x."""

from ._core import (
    CountBreakdown,
    CountTerm,
    CurveParams,
    KummerShape,
    PureGapsError,
    SnAContext,
    bezout_for,
    binom_solutions,
    brute_force_pure_gaps,
    count_in_box,
    count_pure_gaps_hermitian,
    count_pure_gaps_quotient,
    decompose,
    ell,
    enumerate_pure_gaps,
    gap_set_infinity,
    gap_set_oracle,
    gap_set_single,
    gaps_pair_via_homma,
    hermitian,
    hermitian_pair_closed,
    is_pure_gap_kummer,
    is_pure_gap_kummer_inf,
    is_pure_gap_oracle,
    is_pure_gap_quotient,
    is_semigroup_member,
    make_curve,
    pair_closed_gaps,
    pair_closed_pure,
    s_n_A,
    s_n_hermitian,
    sum_gaps_single,
)

__all__ = [name for name in dir() if not name.startswith("_")]
