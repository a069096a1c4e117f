"""Hypergeometric expansions of Mellin transforms of the fractional part and the log-sine."""
from .blocks import (IdentityCase, H_lhs, I_series, M_lhs, R_remainder, bound_checks, F_sk, f_sk,
                     g_sk, hurwitz_continued, logsine_mellin_finite, logsine_mellin_tail, ls_closed,
                     theorem1_sides, theorem2_sides, zeta_neg_recurrence)
from .errors import (BranchError, ConvergenceError, DomainError, PoleError, RegimeError,
                     UsageError, ZMError)
from .quadrature import I_oracle, IntegrandSpec, integrate
from .special import EvalResult, SeriesControl

__version__ = "0.1.0"

__all__ = [
    "IdentityCase", "H_lhs", "I_series", "M_lhs", "R_remainder", "bound_checks", "F_sk", "f_sk",
    "g_sk", "hurwitz_continued", "logsine_mellin_finite", "logsine_mellin_tail", "ls_closed",
    "theorem1_sides", "theorem2_sides", "zeta_neg_recurrence", "BranchError", "ConvergenceError",
    "DomainError", "PoleError", "RegimeError", "UsageError", "ZMError", "I_oracle", "IntegrandSpec",
    "integrate", "EvalResult", "SeriesControl",
]
