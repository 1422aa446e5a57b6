"""Exact and asymptotic analysis of hook sums of SYT counts.

The hook sum S_{k,l}^{(p)}(n) adds (f^lambda)**p over all partitions of n
with lambda_{k+1} <= l, where f^lambda counts standard Young tableaux.
"""
from ._backend import BACKEND
from .asymptotics import (
    AsymptoticForm,
    ScaledCoordinates,
    c_theta,
    coords_from_decomposition,
    full_I,
    g_hook,
    hook_asymptotic,
    log_a_hook,
    log_a_hook_half,
    psi_selberg,
    scaled_I_k,
    selberg_I,
    single_f_hook_estimate,
    single_f_strip_estimate,
    strip_asymptotics,
)
from .errors import (
    BoundExceeded,
    DegenerateShape,
    DomainError,
    HookSumError,
    RectangleNotContained,
    UnsupportedClosedForm,
    UnsupportedPower,
    WorkLimitExceeded,
)
from .exact import (
    binomial_sum_s21,
    f_lambda,
    f_lambda_oracle,
    hook_lengths,
    hook_sum_exact,
    motzkin_identity_check,
    s11_closed,
    s21_closed,
)
from .partitions import (
    HookDecomposition,
    HookShape,
    Partition,
    conjugate,
    count_hook,
    decompose,
    enumerate_hook,
    reassemble,
)
from .special import gamma, log_big, log_gamma
from .verification import (
    McEstimate,
    RatioRow,
    gaussian_J,
    lhs_221,
    mc_full_I,
    mc_selberg,
    ratio_table,
    single_f_convergence,
)

__version__ = "0.1.0"
