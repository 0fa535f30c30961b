"""Numerics for q-series, q-Fourier transforms, and uncertainty
inequalities on the geometric grid {q^n : n in Z}, 0 < q < 1.

Layers, bottom up: qcore (q-arithmetic and Gamma_q), qspecial (q-trig,
1phi1, third Jackson q-Bessel, all with certified adaptive precision),
qgrid (grid functions, q-derivatives, Jackson integrals, CSV), qfourier
(cosine/sine transforms with kernel caching), quncertainty (dispersions,
Heisenberg-type bounds, operator framework), verify (named check suites),
service / cli (HTTP and command-line surfaces).
"""

from .qcore import (
    DEFAULT_CONFIG,
    NonConvergenceError,
    PoleError,
    QParam,
    SeriesConfig,
    admissible_q,
    golden_q,
    integer_condition,
    q_factorial,
    q_gamma,
    q_number,
    q_pochhammer,
    q_pochhammer_inf,
)
from .qspecial import (
    EvalResult,
    bessel_bound_constant,
    phi11,
    q_bessel3,
    q_bessel3_order,
    q_cos,
    q_cos_grid,
    q_sin,
    q_sin_grid,
)
from .qgrid import (
    GridMismatchError,
    GridRange,
    QFunction,
    change_of_variable_check,
    d_q,
    d_q_plus,
    improper_integral,
    inner_product,
    integration_by_parts_check,
    jackson_integral_0_a,
    jackson_integral_0_inf,
    jackson_integral_interval,
    lq_norm,
    read_csv,
    write_csv,
)
from .qfourier import (
    TransformSpec,
    c_q_constant,
    derivative_exchange_check,
    fourier_cosine,
    fourier_sine,
    inverse_cosine,
    inverse_sine,
    sine_kernel_constant,
)
from .quncertainty import (
    UncertaintyReport,
    ZeroFunctionError,
    adjointness_check,
    commutator_AC_check,
    cosine_bound_constant,
    dispersion,
    hilbert_uncertainty_check,
    op_A,
    op_B,
    op_C,
    q_commutator_check,
    sine_bound_constant,
    uncertainty_cosine,
    uncertainty_sine,
    uph_inequality_check,
)
from .report import VerificationReport
from .verify import SUITES, SuiteConfig, run_suite

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
