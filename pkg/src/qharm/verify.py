"""Named verification suites over the whole library.

Each suite runs a family of identity / inequality checks with seeded
random test functions and returns a list of VerificationReport rows; the
CLI and the HTTP service expose them by name. All randomness flows from
the seed in SuiteConfig, so identical configs give identical reports.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import mpmath as mp

from .qcore import QParam, SeriesConfig, admissible_q, q_gamma, q_number
from .qgrid import (
    GridRange,
    QFunction,
    change_of_variable_check,
    inner_product,
    integration_by_parts_check,
    lq_norm,
)
from .qfourier import (
    COSINE,
    SINE,
    TransformSpec,
    derivative_exchange_check,
    fourier_cosine,
    fourier_sine,
    inverse_cosine,
    inverse_sine,
    kernel_value,
    sine_kernel_constant,
)
from .qspecial import _trig_mp, bessel_bound_constant, q_bessel3, q_bessel3_order
from .quncertainty import (
    adjointness_check,
    commutator_AC_check,
    cosine_bound_constant,
    hilbert_uncertainty_check,
    ibp_step_check,
    op_A,
    q_commutator_check,
    sine_bound_constant,
    uncertainty_cosine,
    uncertainty_sine,
    uph_inequality_check,
)
from .report import VerificationReport, bound_check, compare


@dataclass(frozen=True)
class SuiteConfig:
    """Run-time knobs shared by every suite (and by the CLI/service)."""

    q: float = 0.5
    n_min: int = -30
    n_max: int = 60
    tol: float = 1e-8
    precision_bits: int = 256
    seed: int = 0

    def __post_init__(self) -> None:
        if not (0.0 < self.q < 1.0):
            raise ValueError("q must lie strictly between 0 and 1")
        if self.n_min > self.n_max:
            raise ValueError("n_min must not exceed n_max")
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.precision_bits < 53:
            raise ValueError("precision_bits must be at least 53")

    def param(self) -> QParam:
        """QParam for this q; side_k is attached automatically when q is
        (to float accuracy) a root of q^k + q - 1, which switches the
        trig evaluators to exact-q mode."""
        for k in range(1, 24):
            if abs(self.q**k + self.q - 1.0) <= 1e-12:
                return QParam(self.q, side_k=k)
        return QParam(self.q)

    def series(self) -> SeriesConfig:
        return SeriesConfig(tol_abs=min(self.tol, 1e-10),
                            precision_bits=self.precision_bits)

    def window(self) -> GridRange:
        return GridRange(self.n_min, self.n_max)


def _rng(cfg: SuiteConfig, salt: int = 0) -> random.Random:
    return random.Random(cfg.seed * 1009 + salt)


def _random_function(p: QParam, rng: random.Random, lo: int = -3,
                     hi: int = 3) -> QFunction:
    return QFunction(p, {n: rng.uniform(-1.0, 1.0) for n in range(lo, hi + 1)})


def _transform_test_functions(p: QParam, cfg: SuiteConfig) -> list[tuple[str, QFunction]]:
    """e_0, e_3, and 20 seeded random functions supported in [-3, 3]."""
    rng = _rng(cfg, 1)
    fns = [("e_0", QFunction.unit(p, 0)), ("e_3", QFunction.unit(p, 3))]
    for i in range(20):
        fns.append((f"rand_{i}", _random_function(p, rng)))
    return fns


# ---------------------------------------------------------------------------
# individual suites
# ---------------------------------------------------------------------------


def suite_gamma(cfg: SuiteConfig) -> list[VerificationReport]:
    """Gamma_q(x+1) = [x]_q Gamma_q(x) on 50 sampled x, plus the pinned
    values Gamma_q(1) = Gamma_q(2) = 1."""
    p = cfg.param()
    sc = cfg.series()
    rng = _rng(cfg, 2)
    worst = 0.0
    worst_x = None
    for _ in range(50):
        x = rng.uniform(0.1, 10.0)
        lhs = q_gamma(p, x + 1.0, sc)
        rhs = q_number(p, x) * q_gamma(p, x, sc)
        rel = abs(lhs - rhs) / abs(lhs)
        if rel > worst:
            worst, worst_x = rel, x
    out = [VerificationReport("gamma-functional-equation", worst, 0.0, worst,
                              worst, 1e-10, worst <= 1e-10,
                              detail=f"worst at x={worst_x}")]
    out.append(compare("gamma-at-1", q_gamma(p, 1.0, sc), 1.0, 1e-12))
    out.append(compare("gamma-at-2", q_gamma(p, 2.0, sc), 1.0, 1e-12))
    return out


def _trig_value(p: QParam, s: int, exponent: int):
    """cos/sin(q^exponent; q^2) as an mpf, with an absolute tolerance tight
    enough that q-difference quotients at that exponent keep >= 1e-12
    absolute accuracy after the 1/((1-q)q^n) amplification."""
    q = p.q
    if exponent < 0:
        tol = 1e-13 * q ** (exponent * exponent)
    else:
        tol = 1e-13 * q ** (2 * exponent)
    v, _, _, _ = _trig_mp(p, None, s, tol, 500_000, x_exp=exponent)
    return v


def suite_trig_derivatives(cfg: SuiteConfig) -> list[VerificationReport]:
    """D_q cos(.;q^2) = -q^{-1} sin(q .;q^2) and D_q sin = cos at x = q^n,
    n in [-10, 20], to 1e-10 absolute."""
    p = cfg.param()
    dev_cos = 0.0
    dev_sin = 0.0
    with mp.workprec(300):
        qm = mp.mpf(p.q)
        for n in range(-10, 21):
            denom = (1 - qm) * qm**n
            dqc = (_trig_value(p, 0, n) - _trig_value(p, 0, n + 1)) / denom
            dqs = (_trig_value(p, 1, n) - _trig_value(p, 1, n + 1)) / denom
            dev_cos = max(dev_cos, float(abs(dqc + _trig_value(p, 1, n + 1) / qm)))
            dev_sin = max(dev_sin, float(abs(dqs - _trig_value(p, 0, n))))
    return [
        VerificationReport("dq-cos-identity", dev_cos, 0.0, dev_cos, dev_cos,
                           1e-10, dev_cos <= 1e-10),
        VerificationReport("dq-sin-identity", dev_sin, 0.0, dev_sin, dev_sin,
                           1e-10, dev_sin <= 1e-10),
    ]


_SYMMETRY_PAIRS = [(0.0, 1.0), (0.5, 1.5), (1.0, 2.0), (0.5, 3.0),
                   (1.5, 2.5), (0.0, 0.5)]


def suite_bessel_symmetry(cfg: SuiteConfig) -> list[VerificationReport]:
    """J_alpha(q^beta;q^2) = J_beta(q^alpha;q^2) within combined certified
    error for integer / half-integer pairs."""
    p = cfg.param()
    sc = cfg.series()
    out = []
    for alpha, beta in _SYMMETRY_PAIRS:
        a = q_bessel3(p, alpha, 0.0, sc, z_exponent=beta)
        b = q_bessel3(p, beta, 0.0, sc, z_exponent=alpha)
        tol = a.abs_error_bound + b.abs_error_bound + 1e-13
        dev = abs(a.value - b.value)
        out.append(VerificationReport(
            f"bessel-symmetry-{alpha}-{beta}", a.value, b.value, dev,
            dev / max(abs(a.value), abs(b.value), 1e-300), tol, dev <= tol))
    return out


def suite_bessel_bound(cfg: SuiteConfig) -> list[VerificationReport]:
    """|J_alpha(q^{-m};q^2)| <= C(alpha,q) q^{m^2} for m = 1..10."""
    p = cfg.param()
    sc = cfg.series()
    out = []
    for alpha in (0.5, 1.0):
        c = bessel_bound_constant(p, alpha, sc)
        worst = -math.inf
        for m in range(1, 11):
            v = q_bessel3(p, alpha, 0.0, sc, z_exponent=-m)
            margin = (abs(v.value) + v.abs_error_bound) / (c * p.q ** (m * m))
            worst = max(worst, margin)
        out.append(bound_check(f"bessel-bound-alpha-{alpha}", worst, 1.0))
    return out


def suite_orthogonality_bessel(cfg: SuiteConfig) -> list[VerificationReport]:
    """sum_k q^{2k} q^{n+m} J_{n+k}(x;q^2) J_{m+k}(x;q^2) = delta_{nm} at
    x = q^{1/2}, negative orders rerouted through the symmetry relation."""
    p = cfg.param()
    sc = cfg.series()
    q = p.q

    def J(nu: int) -> float:
        return q_bessel3_order(p, nu, 0.5, sc).value

    # positive tail ~ q^{3k}; negative tail crushed by the q^{(n+k)^2} decay
    k_hi = int(math.ceil(40.0 * math.log(10.0) / (3.0 * math.log(1.0 / q))))
    k_lo = -int(math.ceil(6.0 + 4.0 / math.log10(1.0 / q)))
    out = []
    for n, m in [(0, 0), (1, 1), (0, 1), (0, 2)]:
        s = 0.0
        for k in range(k_lo, k_hi + 1):
            s += q ** (2 * k + n + m) * J(n + k) * J(m + k)
        target = 1.0 if n == m else 0.0
        out.append(compare(f"bessel-orthogonality-{n}-{m}", s, target,
                           max(cfg.tol, 1e-10), relative=False))
    return out


def _sine_diagonal_sum(p: QParam, a: int, b: int,
                       sc: SeriesConfig) -> tuple[float, bool, str]:
    """sqrt(q^{a+b}) (1-q) sum_n q^n sin(q^{a+n};q^2) sin(q^{b+n};q^2),
    certified bilateral truncation. Returns (sum, converged, detail)."""
    q = p.q
    n_hi = int(math.ceil(40.0 * math.log(10.0) / (3.0 * math.log(1.0 / q))))
    total = 0.0
    for n in range(0, n_hi + 1):
        total += q**n * kernel_value(p, SINE, a + n, sc)[0] \
            * kernel_value(p, SINE, b + n, sc)[0]
    # negative side: under the side condition the terms decay superfast;
    # without it they grow without bound, which we detect and report
    prev = math.inf
    grew = 0
    n = -1
    while n >= -40:
        t = q**n * kernel_value(p, SINE, a + n, sc)[0] \
            * kernel_value(p, SINE, b + n, sc)[0]
        total += t
        at = abs(t)
        if at < 1e-20:
            break
        if at > prev and at > 1.0:
            grew += 1
            if grew >= 3:
                return total, False, f"terms growing at n={n}; side condition fails"
        prev = at
        n -= 1
    else:
        return total, False, "no certified decay within 40 negative exponents"
    scale = math.sqrt(q ** (a + b)) * p.one_minus_q
    return scale * total, True, ""


def suite_orthogonality_sine(cfg: SuiteConfig) -> list[VerificationReport]:
    """The sine-kernel orthogonality integral: sqrt(xy) int sin(xt) sin(yt)
    d_q t equals K_q on the diagonal and vanishes for x != y on the grid."""
    p = cfg.param()
    sc = cfg.series()
    kq = sine_kernel_constant(p, sc)
    out = []
    diag, ok, why = _sine_diagonal_sum(p, 0, 0, sc)
    if ok:
        out.append(compare("sine-orthogonality-diagonal", diag, kq, 1e-8,
                           relative=True))
    else:
        out.append(VerificationReport("sine-orthogonality-diagonal", diag, kq,
                                      math.inf, math.inf, 1e-8, False, detail=why))
    for a, b in [(0, 1), (0, 2)]:
        s, ok, why = _sine_diagonal_sum(p, a, b, sc)
        if ok:
            out.append(bound_check(f"sine-orthogonality-offdiag-{a}-{b}",
                                   abs(s), 1e-8 * kq))
        else:
            out.append(VerificationReport(f"sine-orthogonality-offdiag-{a}-{b}",
                                          s, 0.0, math.inf, math.inf,
                                          1e-8 * kq, False, detail=why))
    return out


def suite_plancherel_cosine(cfg: SuiteConfig) -> list[VerificationReport]:
    """||F_q f||_{q,2} = ||f||_{q,2} over the test-function family."""
    p = cfg.param()
    spec = TransformSpec(COSINE, cfg.window(), cfg.series())
    out = []
    for name, f in _transform_test_functions(p, cfg):
        g = fourier_cosine(f, spec)
        out.append(compare(f"plancherel-cosine-{name}", lq_norm(g, 2),
                           lq_norm(f, 2), 1e-6, relative=True))
    return out


def suite_plancherel_sine(cfg: SuiteConfig) -> list[VerificationReport]:
    """||_qF f||_{q,2} = q ||f||_{q,2} over the test-function family."""
    p = cfg.param()
    spec = TransformSpec(SINE, cfg.window(), cfg.series())
    out = []
    for name, f in _transform_test_functions(p, cfg):
        g = fourier_sine(f, spec)
        out.append(compare(f"plancherel-sine-{name}", lq_norm(g, 2),
                           p.q * lq_norm(f, 2), 1e-6, relative=True))
    return out


def suite_inversion(cfg: SuiteConfig) -> list[VerificationReport]:
    """F_q o F_q = id and q^{-2} (_qF) o (_qF) = id, max pointwise <= 1e-6."""
    p = cfg.param()
    win = cfg.window()
    sc = cfg.series()
    out = []
    for name, f in _transform_test_functions(p, cfg):
        back_spec = TransformSpec(COSINE, GridRange(min(f.support, default=0) - 1,
                                                    max(f.support, default=0) + 1), sc)
        gc = fourier_cosine(f, TransformSpec(COSINE, win, sc))
        dev_c = inverse_cosine(gc, back_spec).max_abs_diff(f)
        gs = fourier_sine(f, TransformSpec(SINE, win, sc))
        dev_s = inverse_sine(gs, TransformSpec(SINE, back_spec.output_range, sc)
                             ).max_abs_diff(f)
        dev = max(dev_c, dev_s)
        out.append(VerificationReport(f"inversion-{name}", dev, 0.0, dev, dev,
                                      1e-6, dev <= 1e-6,
                                      detail=f"cos={dev_c:.3g} sin={dev_s:.3g}"))
    return out


def suite_derivative_exchange(cfg: SuiteConfig) -> list[VerificationReport]:
    """Both transform/derivative exchange identities over m in [-5, 20]."""
    p = cfg.param()
    spec = TransformSpec(COSINE, GridRange(-5, 20), cfg.series())
    rng = _rng(cfg, 3)
    out = []
    fams = [("e_0", QFunction.unit(p, 0))]
    fams += [(f"rand_{i}", _random_function(p, rng)) for i in range(3)]
    for name, f in fams:
        r = derivative_exchange_check(f, spec, tolerance=1e-8)
        out.append(VerificationReport(f"derivative-exchange-{name}", r.lhs,
                                      r.rhs, r.abs_err, r.rel_err, r.tolerance,
                                      r.passed))
    return out


def _uncertainty_suite(cfg: SuiteConfig, kind: str) -> list[VerificationReport]:
    p = cfg.param()
    spec = TransformSpec(COSINE if kind == "cosine" else SINE, cfg.window(),
                         cfg.series())
    run = uncertainty_cosine if kind == "cosine" else uncertainty_sine
    rng = _rng(cfg, 4)
    fams = [("e_0", QFunction.unit(p, 0)),
            ("e_0+e_1", QFunction.unit(p, 0) + QFunction.unit(p, 1))]
    fams += [(f"rand_{i}", _random_function(p, rng)) for i in range(5)]
    out = []
    for name, f in fams:
        rep = run(f, spec)
        out.append(VerificationReport(
            f"uncertainty-{kind}-ratio-{name}", rep.lhs, rep.rhs,
            max(0.0, rep.rhs - rep.lhs), abs(rep.ratio - 1.0), 1e-6,
            rep.ratio >= 1.0 - 1e-6, detail=f"ratio={rep.ratio:.6g}"))
        out.append(compare(f"uncertainty-{kind}-dual-route-{name}",
                           rep.freq_dispersion, rep.freq_dispersion_deriv,
                           1e-5, relative=True))
    return out


def suite_uncertainty_cosine(cfg: SuiteConfig) -> list[VerificationReport]:
    """Heisenberg bound and dual-route dispersion for the cosine transform."""
    return _uncertainty_suite(cfg, "cosine")


def suite_uncertainty_sine(cfg: SuiteConfig) -> list[VerificationReport]:
    """Heisenberg bound and dual-route dispersion for the sine transform."""
    return _uncertainty_suite(cfg, "sine")


def suite_commutators(cfg: SuiteConfig) -> list[VerificationReport]:
    """[A,B]_q = -i, [A,C] = -i q^{-1} shift, B* = C, A self-adjoint, over
    100 seeded random functions."""
    p = cfg.param()
    rng = _rng(cfg, 5)
    fams = [_random_function(p, rng, -5, 5) for _ in range(100)]
    worst_ab = max(q_commutator_check(f).abs_err for f in fams)
    worst_ac = max(commutator_AC_check(f).abs_err for f in fams)
    worst_adj = 0.0
    worst_a = 0.0
    for i in range(0, 40, 2):
        f, g = fams[i], fams[i + 1]
        worst_adj = max(worst_adj, adjointness_check(f, g).abs_err)
        worst_a = max(worst_a, abs(inner_product(op_A(f), g)
                                   - inner_product(f, op_A(g))))
    return [
        VerificationReport("commutator-AB", worst_ab, 0.0, worst_ab, worst_ab,
                           1e-12, worst_ab <= 1e-12),
        VerificationReport("commutator-AC", worst_ac, 0.0, worst_ac, worst_ac,
                           1e-12, worst_ac <= 1e-12),
        VerificationReport("adjointness-B-C", worst_adj, 0.0, worst_adj,
                           worst_adj, 1e-12, worst_adj <= 1e-12),
        VerificationReport("self-adjoint-A", worst_a, 0.0, worst_a, worst_a,
                           1e-14, worst_a <= 1e-14),
    ]


def suite_hilbert(cfg: SuiteConfig) -> list[VerificationReport]:
    """The operator uncertainty inequality for (A,B) at s=q and (A,C) at s=1."""
    p = cfg.param()
    rng = _rng(cfg, 6)
    fams = [QFunction.unit(p, 0)] + [_random_function(p, rng, -5, 5)
                                     for _ in range(10)]
    out = []
    for i, f in enumerate(fams):
        for rep in hilbert_uncertainty_check(f):
            out.append(VerificationReport(f"{rep.check_name}-{i}", rep.lhs,
                                          rep.rhs, rep.abs_err, rep.rel_err,
                                          rep.tolerance, rep.passed,
                                          detail=rep.detail))
    return out


def suite_ibp(cfg: SuiteConfig) -> list[VerificationReport]:
    """Integration by parts, both variants, plus the boundary-free step
    used inside the cosine uncertainty proof."""
    p = cfg.param()
    rng = _rng(cfg, 7)
    worst_std = 0.0
    worst_plus = 0.0
    worst_step = 0.0
    intervals = [(0.0, p.q**-5), (p.q**5, p.q**-5)]
    for _ in range(20):
        f = _random_function(p, rng, -4, 4)
        g = _random_function(p, rng, -4, 4)
        for a, b in intervals:
            worst_std = max(worst_std, integration_by_parts_check(
                f, g, a, b, "standard").abs_err)
            worst_plus = max(worst_plus, integration_by_parts_check(
                f, g, a, b, "plus").abs_err)
        worst_step = max(worst_step, ibp_step_check(f).rel_err)
    return [
        VerificationReport("ibp-standard", worst_std, 0.0, worst_std,
                           worst_std, 1e-12, worst_std <= 1e-12),
        VerificationReport("ibp-plus", worst_plus, 0.0, worst_plus,
                           worst_plus, 1e-12, worst_plus <= 1e-12),
        VerificationReport("ibp-step-upc", worst_step, 0.0, worst_step,
                           worst_step, 1e-12, worst_step <= 1e-12),
    ]


def suite_change_of_variable(cfg: SuiteConfig) -> list[VerificationReport]:
    """u(x) = alpha x^beta substitutions: two analytic-integrand cases on
    [0,1], and the sine-kernel substitution u = (1-q)x/q at the side-
    condition q with 1-q = q^2, where (1-q)/q = q keeps u on the grid."""
    p = cfg.param()
    sc = cfg.series()
    out = []
    r1 = change_of_variable_check(p, lambda u: u * u, 1.5, 1.0, 0.0, 1.0, sc,
                                  tolerance=1e-12)
    out.append(VerificationReport("change-of-variable-linear", r1.lhs, r1.rhs,
                                  r1.abs_err, r1.rel_err, r1.tolerance, r1.passed))
    r2 = change_of_variable_check(p, lambda u: 1.0 / (1.0 + u), 1.0, 2.0,
                                  0.0, 1.0, sc, tolerance=1e-10)
    out.append(VerificationReport("change-of-variable-square", r2.lhs, r2.rhs,
                                  r2.abs_err, r2.rel_err, r2.tolerance, r2.passed))
    # substitution case: at q with 1-q = q^2 the sine-diagonal integral is
    # invariant under u = q x (exact grid reindex) and equals K_q
    pg = p if p.side_k == 2 else admissible_q(2)
    kq = sine_kernel_constant(pg, sc)
    lhs, ok1, why1 = _sine_diagonal_sum(pg, 0, 0, sc)
    shifted, ok2, why2 = _sine_diagonal_sum(pg, 1, 1, sc)
    rhs = shifted  # alpha (1-q) sum_n q^n f(alpha q^n) with alpha = q
    if ok1 and ok2:
        out.append(compare("change-of-variable-substitution", lhs, rhs, 1e-12))
        out.append(compare("change-of-variable-substitution-kq", lhs, kq, 1e-8,
                           relative=True))
    else:
        out.append(VerificationReport("change-of-variable-substitution", lhs,
                                      rhs, math.inf, math.inf, 1e-12, False,
                                      detail=why1 or why2))
    return out


_QLIMIT_SWEEP = (0.9, 0.99, 0.999)


def suite_q_limit(cfg: SuiteConfig) -> list[VerificationReport]:
    """q -> 1 convergence: Gamma_q(1/2) -> sqrt(pi) and both uncertainty
    bound constants -> 1/2, with strictly decreasing gaps along the sweep."""
    sc = cfg.series()
    out = []
    sweeps = [
        ("gamma-half-to-sqrt-pi",
         lambda q: q_gamma(QParam(q), 0.5, sc), math.sqrt(math.pi)),
        ("bound-cosine-to-half", cosine_bound_constant, 0.5),
        ("bound-sine-to-half", sine_bound_constant, 0.5),
    ]
    for name, fn, target in sweeps:
        gaps = [abs(fn(q) - target) for q in _QLIMIT_SWEEP]
        mono = all(gaps[i] > gaps[i + 1] for i in range(len(gaps) - 1))
        out.append(VerificationReport(
            name, gaps[0], gaps[-1], gaps[-1], gaps[-1] / abs(target),
            math.inf, mono,
            detail="gaps " + ", ".join(f"{g:.3e}" for g in gaps)))
    return out


def suite_uph(cfg: SuiteConfig) -> list[VerificationReport]:
    """Both display lines of the Hilbert-space uncertainty inequality on
    100 random functions, plus the empirical ||D_q^+ f|| / ||D_q f||
    relation, which must come out the same for every function."""
    p = cfg.param()
    rng = _rng(cfg, 8)
    labels = set()
    worst_rel = 0.0
    all_line1 = True
    all_line2 = True
    for _ in range(100):
        f = _random_function(p, rng, -5, 5)
        rep = uph_inequality_check(f)
        labels.add(rep["satisfied_relation"])
        worst_rel = max(worst_rel, rep["relation_rel_err"])
        all_line1 &= rep["pass_sum_of_norms"]
        all_line2 &= rep["pass_single_norm"]
    consistent = len(labels) == 1
    label = labels.pop() if consistent else "inconsistent: " + ", ".join(sorted(labels))
    return [
        VerificationReport("uph-sum-of-norms", 1.0 if all_line1 else 0.0, 1.0,
                           0.0 if all_line1 else 1.0, 0.0, 0.0, all_line1),
        VerificationReport("uph-single-norm", 1.0 if all_line2 else 0.0, 1.0,
                           0.0 if all_line2 else 1.0, 0.0, 0.0, all_line2),
        VerificationReport("uph-derivative-norm-relation", worst_rel, 0.0,
                           worst_rel, worst_rel, 1e-10, consistent,
                           detail=f"||D_q^+ f|| = {label} ||D_q f|| "
                                  f"on 100/100 functions"),
    ]


SUITES = {
    "gamma": suite_gamma,
    "trig-derivatives": suite_trig_derivatives,
    "bessel-symmetry": suite_bessel_symmetry,
    "bessel-bound": suite_bessel_bound,
    "orthogonality-bessel": suite_orthogonality_bessel,
    "orthogonality-sine": suite_orthogonality_sine,
    "plancherel-cosine": suite_plancherel_cosine,
    "plancherel-sine": suite_plancherel_sine,
    "inversion": suite_inversion,
    "derivative-exchange": suite_derivative_exchange,
    "uncertainty-cosine": suite_uncertainty_cosine,
    "uncertainty-sine": suite_uncertainty_sine,
    "commutators": suite_commutators,
    "hilbert": suite_hilbert,
    "ibp": suite_ibp,
    "change-of-variable": suite_change_of_variable,
    "q-limit": suite_q_limit,
    "uph": suite_uph,
}


def _run_one(name: str, cfg: SuiteConfig) -> list[VerificationReport]:
    try:
        return SUITES[name](cfg)
    except (ArithmeticError, ValueError) as exc:
        # blow-ups (e.g. transform windows at q violating the side
        # condition) become failing reports instead of crashes
        return [VerificationReport(f"{name}-aborted", math.inf, 0.0, math.inf,
                                   math.inf, 0.0, False,
                                   detail=f"{type(exc).__name__}: {exc}")]


def run_suite(name: str, cfg: SuiteConfig) -> list[VerificationReport]:
    """Run one named suite, or every suite for name == 'all'."""
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(_run_one(key, cfg))
        return out
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from "
                         f"{', '.join([*SUITES, 'all'])}")
    return _run_one(name, cfg)


def report_document(name: str, cfg: SuiteConfig,
                    checks: list[VerificationReport]) -> dict:
    """The JSON report body: config, per-check rows, aggregate pass."""
    return {
        "suite": name,
        "config": {
            "q": cfg.q, "n_min": cfg.n_min, "n_max": cfg.n_max,
            "tol": cfg.tol, "precision_bits": cfg.precision_bits,
            "seed": cfg.seed,
        },
        "checks": [c.to_dict() for c in checks],
        "pass": all(c.passed for c in checks),
    }
