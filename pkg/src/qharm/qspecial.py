"""Basic hypergeometric series, the third Jackson q-Bessel function, and
the q-trigonometric functions.

All series here alternate in sign, and for arguments |x| > 1 they cancel
catastrophically: at x = q^{-m} the result is of order q^{m^2} while
individual terms reach order q^{-m^2}. Fixed double precision returns
pure noise there, so every evaluator

  1. walks the term magnitudes in cheap float logarithms to estimate the
     largest term and picks a working precision that leaves room between
     that peak and the requested absolute tolerance, then
  2. sums in mpmath at that precision with a certified stopping rule
     (next-term-ratio geometric tail bound), and
  3. verifies a rounding-error budget, escalating precision and retrying
     if the budget is blown.

The returned abs_error_bound covers both truncation and rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath as mp

from .qcore import (
    DEFAULT_CONFIG,
    NonConvergenceError,
    PoleError,
    QParam,
    SeriesConfig,
    _mp_pochhammer_inf,
    _mp_q_gamma,
    q_at_working_precision,
)


@dataclass(frozen=True)
class EvalResult:
    value: float
    abs_error_bound: float
    terms_used: int
    precision_used_bits: int


# ---------------------------------------------------------------------------
# q-cosine / q-sine power series
#
#   cos(x;q^2) = sum_n (-1)^n q^{n(n-1)} x^{2n}   / [2n]_q!
#   sin(x;q^2) = sum_n (-1)^n q^{n(n-1)} x^{2n+1} / [2n+1]_q!
#
# term ratio: t_{n+1}/t_n = -q^{2n} x^2 / ([2n+s+1]_q [2n+s+2]_q), s = 0|1.
# ---------------------------------------------------------------------------


def _qnum_log2(q: float, k: int) -> float:
    return math.log2((1.0 - q**k) / (1.0 - q))


def _trig_bits_hint(p: QParam, log2x: float, s: int, log2tol: float) -> tuple[int, int]:
    """(precision bits, term-count estimate) for the trig series."""
    q = p.q
    log2q = math.log2(q)
    cur = s * log2x
    peak = cur
    n = 0
    while n < 100_000:
        lr = 2 * n * log2q + 2 * log2x \
            - _qnum_log2(q, 2 * n + s + 1) - _qnum_log2(q, 2 * n + s + 2)
        cur += lr
        n += 1
        peak = max(peak, cur)
        if lr < 0 and cur < log2tol - 8:
            break
    bits = max(64, int(peak - log2tol) + 40)
    return bits, n + 4


def _trig_mp(p: QParam, x, s: int, tol, max_terms: int, min_bits: int = 64,
             x_exp: float | None = None):
    """cos (s=0) or sin (s=1) of (x; q^2) as mpf at adaptive precision.

    ``x`` may be float or mpf; ``tol`` may be float or mpf (absolute).
    For grid arguments pass ``x_exp`` instead, so that x = q^x_exp is
    formed *at working precision*: off-grid perturbations as small as one
    float ulp change large-argument values catastrophically, because the
    q^{m^2}-small grid values sit in deep cancellation valleys.
    Returns (value, abs_error_bound, terms_used, bits); value and bound
    are mpf valid at the returned precision.
    """
    tol = mp.mpf(tol)
    if x_exp is None and x == 0:
        return mp.mpf(1 - s), mp.mpf(0), 1, 53
    if x_exp is not None:
        log2x = x_exp * math.log2(p.q)
    else:
        log2x = float(mp.log(abs(mp.mpf(x)), 2))
    log2tol = float(mp.log(tol, 2))
    bits, _ = _trig_bits_hint(p, log2x, s, log2tol)
    bits = max(bits, min_bits)
    for _ in range(6):
        with mp.workprec(bits):
            # side-aware: at side-condition q the result at x = q^{-m} is a
            # q^{m^2}-deep cancellation that only survives if q satisfies
            # 1-q = q^k to full working precision
            qm = q_at_working_precision(p)
            one = mp.mpf(1)
            xm = qm ** mp.mpf(x_exp) if x_exp is not None else mp.mpf(x)
            x2 = xm * xm

            def qnum(k: int):
                return (one - qm**k) / (one - qm)

            t = xm if s else one
            total = t
            maxabs = abs(t)
            k = 0
            tail = None
            while k < max_terms:
                t = t * (-(qm ** (2 * k)) * x2) / (qnum(2 * k + s + 1) * qnum(2 * k + s + 2))
                total += t
                ab = abs(t)
                maxabs = max(maxabs, ab)
                k += 1
                # the ratio is strictly decreasing in k, so once it is < 1
                # the tail is dominated by a geometric series
                r = (qm ** (2 * k)) * x2 / (qnum(2 * k + s + 1) * qnum(2 * k + s + 2))
                if r < 1:
                    tail = ab * r / (1 - r)
                    if tail < tol / 2:
                        break
            else:
                raise NonConvergenceError("q-trig series hit max_terms")
            rounding = (k + 2) * maxabs * mp.mpf(2) ** (3 - bits)
            if rounding <= tol / 2:
                return total, tail + rounding, k + 1, bits
            deficit = int(mp.log(rounding / (tol / 2), 2)) + 16
        bits += max(deficit, 32)
    raise NonConvergenceError("q-trig series: precision escalation failed")


def q_cos(p: QParam, x: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    """cos(x;q^2) with a certified absolute error bound."""
    v, e, n, b = _trig_mp(p, x, 0, cfg.tol_abs, cfg.max_terms, cfg.precision_bits)
    return EvalResult(float(v), float(e), n, b)


def q_sin(p: QParam, x: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    """sin(x;q^2) with a certified absolute error bound; odd in x."""
    v, e, n, b = _trig_mp(p, x, 1, cfg.tol_abs, cfg.max_terms, cfg.precision_bits)
    return EvalResult(float(v), float(e), n, b)


def q_cos_grid(p: QParam, exponent: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    """cos(q^exponent; q^2) with the grid point formed at working precision."""
    v, e, n, b = _trig_mp(p, None, 0, cfg.tol_abs, cfg.max_terms,
                          cfg.precision_bits, x_exp=exponent)
    return EvalResult(float(v), float(e), n, b)


def q_sin_grid(p: QParam, exponent: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    """sin(q^exponent; q^2) with the grid point formed at working precision."""
    v, e, n, b = _trig_mp(p, None, 1, cfg.tol_abs, cfg.max_terms,
                          cfg.precision_bits, x_exp=exponent)
    return EvalResult(float(v), float(e), n, b)


# ---------------------------------------------------------------------------
# 1phi1(0; b; Q, z), base Q = p.q:
#   t_0 = 1,  t_{n+1}/t_n = (-z) Q^n / ((1 - Q^{n+1})(1 - b Q^n))
# ---------------------------------------------------------------------------


def _phi11_bits_hint(Q: float, b: float, log2z: float, log2tol: float) -> int:
    log2Q = math.log2(Q)
    cur = 0.0
    peak = 0.0
    n = 0
    while n < 100_000:
        d1 = 1.0 - Q ** (n + 1)
        d2 = abs(1.0 - b * Q**n)
        if d2 < 1e-300:
            raise PoleError(f"1phi1 denominator parameter pole: b={b}, Q={Q}, n={n}")
        lr = log2z + n * log2Q - math.log2(d1) - math.log2(d2)
        cur += lr
        n += 1
        peak = max(peak, cur)
        if lr < 0 and cur < log2tol - 8:
            break
    return max(64, int(peak - log2tol) + 40)


def _phi11_mp(p: QParam, b: float, z, tol, max_terms: int, min_bits: int = 64,
              z_exp: float | None = None, base_param: QParam | None = None,
              base_power: int = 1, b_exp: float | None = None):
    """1phi1(0; b; Q, z) with Q = p.q, as mpf at adaptive precision.

    When the series sits in a deep cancellation valley (q-Bessel at grid
    points q^{-m}) every ingredient must be an exact power of one q at
    working precision: pass ``base_param`` (with Q = base^base_power),
    ``z_exp`` (z = base^z_exp) and ``b_exp`` (b = base^b_exp). A one-ulp
    float rounding of Q or b alone perturbs the terms by ~1e-16 of the
    largest, which dwarfs results of order q^{m^2}.
    """
    tol = mp.mpf(tol)
    if z_exp is None and z == 0:
        return mp.mpf(1), mp.mpf(0), 1, 53
    base = p.q if base_param is None else base_param.q
    if z_exp is not None:
        log2z = z_exp * math.log2(base)
    else:
        log2z = float(mp.log(abs(mp.mpf(z)), 2))
    log2tol = float(mp.log(tol, 2))
    bits = max(_phi11_bits_hint(p.q, b, log2z, log2tol), min_bits)
    for _ in range(6):
        with mp.workprec(bits):
            one = mp.mpf(1)
            if base_param is not None:
                qb = q_at_working_precision(base_param)
                Q = qb**base_power
                bm = qb ** mp.mpf(b_exp) if b_exp is not None else mp.mpf(b)
                zm = qb ** mp.mpf(z_exp) if z_exp is not None else mp.mpf(z)
            else:
                Q = q_at_working_precision(p)
                bm = mp.mpf(b)
                zm = mp.mpf(z)
            t = one
            total = t
            maxabs = abs(t)
            n = 0
            tail = None
            prev_r = mp.inf
            while n < max_terms:
                den = (one - Q ** (n + 1)) * (one - bm * Q**n)
                if den == 0:
                    raise PoleError("1phi1 parameter pole inside summation")
                t = t * (-zm) * Q**n / den
                total += t
                ab = abs(t)
                maxabs = max(maxabs, ab)
                n += 1
                r = abs(zm) * Q**n / abs((one - Q ** (n + 1)) * (one - bm * Q**n))
                if r < 1 and r <= prev_r:
                    tail = ab * r / (1 - r)
                    if tail < tol / 2:
                        break
                prev_r = r
            else:
                raise NonConvergenceError("1phi1 series hit max_terms")
            rounding = (n + 2) * maxabs * mp.mpf(2) ** (3 - bits)
            if rounding <= tol / 2:
                return total, tail + rounding, n + 1, bits
            deficit = int(mp.log(rounding / (tol / 2), 2)) + 16
        bits += max(deficit, 32)
    raise NonConvergenceError("1phi1 series: precision escalation failed")


def phi11(p: QParam, b: float, z: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    """The basic hypergeometric series 1phi1(0; b; Q, z) with base Q = p.q."""
    v, e, n, bits = _phi11_mp(p, b, z, cfg.tol_abs, cfg.max_terms, cfg.precision_bits)
    return EvalResult(float(v), float(e), n, bits)


# ---------------------------------------------------------------------------
# Third Jackson q-Bessel function
#   J_alpha(z;q^2) = z^alpha / ((1-q^2)^alpha Gamma_{q^2}(alpha+1))
#                    * 1phi1(0; q^{2 alpha + 2}; q^2, q^2 z^2)
# ---------------------------------------------------------------------------


def bessel_bound_constant(p: QParam, alpha: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """C(alpha,q) = (-q^2;q^2)_oo (-q^{2(alpha+1)};q^2)_oo / (q^2;q^2)_oo.

    For alpha > -1 this dominates |J_alpha(x;q^2)| on the grid, with an
    extra factor q^{(log x/log q)^2} when x > 1.
    """
    if alpha <= -1:
        raise ValueError("the magnitude bound requires alpha > -1")
    q2 = p.q**2
    with mp.workprec(max(cfg.precision_bits, 80)):
        tol = mp.mpf(cfg.tol_abs)
        a1 = _mp_pochhammer_inf(q2, -q2, tol, cfg.max_terms)
        a2 = _mp_pochhammer_inf(q2, -(p.q ** (2 * (alpha + 1))), tol, cfg.max_terms)
        a3 = _mp_pochhammer_inf(q2, q2, tol, cfg.max_terms)
        return float(a1 * a2 / a3)


def _bessel_magnitude_log2(p: QParam, alpha: float, z) -> float:
    """log2 of the (asj) magnitude envelope of J_alpha(z;q^2), used only
    to scale internal tolerances so large-argument values keep relative
    accuracy."""
    lz = float(mp.log(abs(mp.mpf(z)), 2)) if z != 0 else 0.0
    if lz <= 0:
        return 0.0
    m = lz / math.log2(1.0 / p.q)  # z = q^{-m}
    return -(m * m) * math.log2(1.0 / p.q)


def q_bessel3(p: QParam, alpha: float, z: float, cfg: SeriesConfig = DEFAULT_CONFIG,
              z_exponent: float | None = None) -> EvalResult:
    """The third Jackson q-Bessel function J_alpha(z;q^2), z >= 0.

    For grid arguments pass ``z_exponent`` so that z = q^z_exponent is
    formed at working precision (see _trig_mp).
    """
    if z_exponent is not None:
        z = p.q**z_exponent  # nominal value, used for branching/magnitude only
    if z < 0:
        raise ValueError("q_bessel3 requires z >= 0")
    if z == 0:
        if alpha > 0:
            return EvalResult(0.0, 0.0, 0, 53)
        if alpha == 0:
            return EvalResult(1.0, 0.0, 1, 53)
        raise ValueError("q_bessel3 at z=0 requires alpha >= 0")
    q2p = QParam(p.q**2)
    # scale the target tolerance down to the expected magnitude of the
    # result, so that x > 1 evaluations stay *relatively* accurate
    mag = _bessel_magnitude_log2(p, alpha, z)
    with mp.workprec(max(cfg.precision_bits, 80, int(-mag) + 120)):
        qm = mp.mpf(p.q)
        zm = qm ** mp.mpf(z_exponent) if z_exponent is not None else mp.mpf(z)
        tol = mp.mpf(cfg.tol_abs) * mp.mpf(2) ** mag
        pref = zm**alpha / ((1 - qm**2) ** alpha
                            * _mp_q_gamma(p.q**2, alpha + 1, mp.mpf(1e-30), cfg.max_terms))
        phi_tol = tol / (2 * abs(pref))
        if z_exponent is not None:
            v, e, n, bits = _phi11_mp(q2p, p.q ** (2 * alpha + 2), None, phi_tol,
                                      cfg.max_terms, z_exp=2 + 2 * z_exponent,
                                      base_param=p, base_power=2,
                                      b_exp=2 * alpha + 2)
        else:
            v, e, n, bits = _phi11_mp(q2p, p.q ** (2 * alpha + 2), qm**2 * zm**2,
                                      phi_tol, cfg.max_terms)
        val = pref * v
        err = abs(pref) * e + abs(val) * mp.mpf(2) ** (6 - min(bits, mp.mp.prec))
        return EvalResult(float(val), float(err), n, bits)


def q_bessel3_order(p: QParam, nu: float, z_exp: float,
                    cfg: SeriesConfig = DEFAULT_CONFIG) -> EvalResult:
    """J_nu(q^{z_exp}; q^2), rerouted through the symmetry
    J_alpha(q^beta;q^2) = J_beta(q^alpha;q^2) when the direct series
    would sit on a Gamma_{q^2} pole (nu <= -1)."""
    if nu > -1:
        return q_bessel3(p, nu, 0.0, cfg, z_exponent=z_exp)
    return q_bessel3(p, z_exp, 0.0, cfg, z_exponent=nu)
