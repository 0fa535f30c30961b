"""q-arithmetic primitives.

Everything here is a pure function of a deformation parameter 0 < q < 1:
q-numbers [x]_q = (1-q^x)/(1-q), q-factorials, finite and infinite
q-shifted factorials (a;q)_n and (a;q)_oo, and Jackson's q-Gamma function

    Gamma_q(x) = (q;q)_oo / (q^x;q)_oo * (1-q)^(1-x).

Infinite products are truncated with a certified tail bound: once |a q^K|
is small, the remaining factors satisfy |log prod_{k>=K}(1 - a q^k)| <=
|a| q^K / ((1-q)(1 - |a| q^K)), so the stopping rule controls the
relative truncation error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import mpmath as mp


class NonConvergenceError(ArithmeticError):
    """A series or product failed to meet its tolerance within max_terms."""


class PoleError(ValueError):
    """Evaluation requested at (or too close to) a pole."""


@dataclass(frozen=True)
class QParam:
    """The deformation parameter q in (0,1) with cached derived constants.

    ``side_k``, when set, declares that q is the root in (0,1) of
    q^k + q - 1 = 0, i.e. 1-q = q^k exactly (the integer side condition
    ln(1-q)/ln(q) = k). Evaluators that are catastrophically sensitive to
    q (the q-trig and q-Bessel series at large grid arguments) then
    regenerate q from the polynomial at their working precision instead
    of trusting the 53-bit ``q`` field: the grid decay cos/sin(q^{-m};q^2)
    ~ q^{m^2} exists only at such q, and only to the precision with which
    q satisfies the relation.
    """

    q: float
    side_k: int | None = None
    one_minus_q: float = field(init=False)
    log_q: float = field(init=False)

    def __post_init__(self) -> None:
        if not (0.0 < self.q < 1.0):
            raise ValueError(f"q must lie strictly between 0 and 1, got {self.q}")
        if self.side_k is not None:
            if self.side_k < 1:
                raise ValueError("side_k must be a positive integer")
            if abs(self.q**self.side_k + self.q - 1.0) > 1e-12:
                raise ValueError(
                    f"q={self.q} does not satisfy 1-q = q^{self.side_k}")
        object.__setattr__(self, "one_minus_q", 1.0 - self.q)
        object.__setattr__(self, "log_q", math.log(self.q))


@dataclass(frozen=True)
class SeriesConfig:
    """Evaluation policy for infinite series and products.

    tol_abs is an absolute truncation target; precision_bits is the
    *minimum* working precision (cancellation-heavy evaluations escalate
    beyond it as needed).
    """

    tol_abs: float = 1e-12
    max_terms: int = 500_000
    precision_bits: int = 256

    def __post_init__(self) -> None:
        if self.tol_abs <= 0:
            raise ValueError("tol_abs must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")
        if self.precision_bits < 53:
            raise ValueError("precision_bits must be at least 53")


DEFAULT_CONFIG = SeriesConfig()


def q_number(p: QParam, x: float) -> float:
    """[x]_q = (1 - q^x)/(1 - q)."""
    return (1.0 - p.q**x) / p.one_minus_q


def q_factorial(p: QParam, n: int) -> float:
    """[n]_q! = (q;q)_n / (1-q)^n = [1]_q [2]_q ... [n]_q."""
    if n < 0:
        raise ValueError("q_factorial requires n >= 0")
    out = 1.0
    for k in range(1, n + 1):
        out *= q_number(p, k)
    return out


def q_pochhammer(p: QParam, a: float, n: int) -> float:
    """(a;q)_n = prod_{k=0}^{n-1} (1 - a q^k)."""
    if n < 0:
        raise ValueError("q_pochhammer requires n >= 0")
    out = 1.0
    aq = a
    for _ in range(n):
        out *= 1.0 - aq
        aq *= p.q
    return out


def _mp_pochhammer_inf(q, a, tol, max_terms: int):
    """(a;q)_oo at the current mpmath working precision.

    Returns an mpf/mpc; certified so the dropped tail perturbs the result
    by at most ~tol relatively.
    """
    one = mp.mpf(1)
    prod = one
    aq = mp.mpf(a)
    qm = mp.mpf(q)
    for _ in range(max_terms):
        prod *= one - aq
        aq *= qm
        t = abs(aq)
        if t < 0.5:
            # |log of remaining product| <= t / ((1-q)(1-t))
            bound = t / ((one - qm) * (one - t))
            if bound * (1 + bound) < tol:
                return prod
    raise NonConvergenceError(
        f"(a;q)_oo with a={a}, q={q} did not converge within {max_terms} factors"
    )


def q_pochhammer_inf(p: QParam, a: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """(a;q)_oo = prod_{k>=0} (1 - a q^k), certified truncation."""
    with mp.workprec(max(cfg.precision_bits, 53)):
        return float(_mp_pochhammer_inf(p.q, a, mp.mpf(cfg.tol_abs), cfg.max_terms))


def _mp_q_gamma(q, x, tol, max_terms: int):
    """Jackson's Gamma_q(x) at the current working precision."""
    xr = mp.mpf(x)
    if xr <= 0 and abs(xr - mp.nint(xr)) < mp.mpf("1e-12"):
        raise PoleError(f"Gamma_q has a pole at x={x}")
    qm = mp.mpf(q)
    num = _mp_pochhammer_inf(qm, qm, tol, max_terms)
    den = _mp_pochhammer_inf(qm, qm**xr, tol, max_terms)
    return num / den * (1 - qm) ** (1 - xr)


def q_gamma(p: QParam, x: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """Jackson's q-Gamma function Gamma_q(x), x not in {0, -1, -2, ...}."""
    with mp.workprec(max(cfg.precision_bits, 53)):
        return float(_mp_q_gamma(p.q, x, mp.mpf(cfg.tol_abs), cfg.max_terms))


def integer_condition(p: QParam, tol: float = 1e-9) -> bool:
    """Whether ln(1-q)/ln(q) is within tol of an integer.

    Equivalently: 1-q is an integer power of q, so q/(1-q) lies on the
    geometric grid. Advisory only; nothing here rejects a q that fails it.
    """
    r = math.log(p.one_minus_q) / p.log_q
    return abs(r - round(r)) <= tol


def golden_q() -> float:
    """The q in (0,1) with 1-q = q^2, i.e. q = (sqrt(5)-1)/2.

    The smallest nontrivial solution of the integer side condition after
    q = 1/2; handy for tests that need q/(1-q) = q^{-1} on the grid.
    """
    return (math.sqrt(5.0) - 1.0) / 2.0


def admissible_q(k: int) -> QParam:
    """The QParam whose q is the unique root in (0,1) of q^k + q - 1 = 0.

    k=1 gives q=1/2, k=2 the golden value, and the sequence increases to 1.
    These are exactly the q with ln(1-q)/ln(q) = k, the side condition under
    which the q-trig kernels decay like q^{m^2} along q^{-m} and the sine
    Plancherel theory holds. The returned param carries side_k so precision-
    sensitive evaluators can regenerate q exactly at working precision.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k == 1:
        return QParam(0.5, side_k=1)
    with mp.workprec(80):
        root = mp.findroot(lambda x: x**k + x - 1, mp.mpf("0.7"))
    return QParam(float(root), side_k=k)


_q_mp_cache: dict[tuple[int, int], mp.mpf] = {}


def q_at_working_precision(p: QParam):
    """q as an mpf at the current mpmath working precision.

    For a plain QParam this is just mpf(p.q) (the float IS the parameter).
    When side_k is set the root of q^k + q - 1 is re-solved at the current
    precision, with a few guard bits, so powers like q^{m^2} keep full
    relative accuracy.
    """
    if p.side_k is None:
        return mp.mpf(p.q)
    k = p.side_k
    key = (k, mp.mp.prec)
    hit = _q_mp_cache.get(key)
    if hit is not None:
        return +hit
    with mp.extraprec(20):
        root = mp.findroot(lambda x: x**k + x - 1, mp.mpf(p.q))
    out = +root
    _q_mp_cache[key] = out
    return out
