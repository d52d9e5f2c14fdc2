"""Exact evaluation and cross-validation of centred binomial sums.

U_r(n) = sum_k C(n,k) |n/2 - k|^r and S_r(n) = U_r(2n), computed by the
defining sum, recurrences, polynomial families, Dumont-Foata polynomials,
explicit double sums and generating functions.
"""
from .closed_forms import FormulaId, cross_validate, u_closed
from .direct_eval import s_direct, u_direct, u_direct_halfrange, walk_moment_mc
from .dumont_foata import df_carlitz, df_eval, df_poly, family_from_df, u_from_df
from .poly_families import FamilyId, family_poly, u_from_family
from .recurrences import s_recurrence, u_recurrence

__version__ = "0.1.0"

__all__ = [
    "FamilyId",
    "FormulaId",
    "cross_validate",
    "df_carlitz",
    "df_eval",
    "df_poly",
    "family_from_df",
    "family_poly",
    "s_direct",
    "s_recurrence",
    "u_closed",
    "u_direct",
    "u_direct_halfrange",
    "u_from_df",
    "u_from_family",
    "u_recurrence",
    "walk_moment_mc",
]
