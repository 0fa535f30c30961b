"""Dispersion functionals, the q-Heisenberg uncertainty theorems for both
q-Fourier transforms, and the Hilbert-space operator framework

    A: f(x) -> x f(x),   B: f -> i D_q f,   C: f -> i D_q^+ f

with the deformed commutator [A,B]_q = qAB - BA and [A,C] = AC - CA.
On grid functions every quantity below is an exact finite sum; the only
windowed object is the frequency dispersion computed from a transform,
which is therefore also reported through its exact derivative-identity
route (q ||D_q f||^2 for cosine, q^4 ||D_q f||^2 for sine).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .qgrid import QFunction, d_q, d_q_plus, inner_product, lq_norm
from .qfourier import TransformSpec, fourier_cosine, fourier_sine
from .report import VerificationReport


class ZeroFunctionError(ValueError):
    """Uncertainty ratios are undefined for the zero function."""


@dataclass
class UncertaintyReport:
    time_dispersion: float
    freq_dispersion: float
    freq_dispersion_deriv: float  # exact route via the derivative identity
    lhs: float
    bound_constant: float
    rhs: float
    ratio: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "time_dispersion": self.time_dispersion,
            "freq_dispersion": self.freq_dispersion,
            "freq_dispersion_deriv": self.freq_dispersion_deriv,
            "lhs": self.lhs,
            "bound_constant": self.bound_constant,
            "rhs": self.rhs,
            "ratio": self.ratio,
            "pass": self.passed,
        }


def dispersion(f: QFunction) -> float:
    """int_0^oo t^2 |f(t)|^2 d_q t = (1-q) sum_n q^{3n} |f(q^n)|^2."""
    p = f.param
    total = 0.0
    for n, v in f.items():
        total += p.q ** (3 * n) * abs(v) ** 2
    return p.one_minus_q * total


def cosine_bound_constant(q: float) -> float:
    """q / (q^{3/2} + 1); tends to the classical 1/2 as q -> 1."""
    return q / (q**1.5 + 1.0)


def sine_bound_constant(q: float) -> float:
    """q / (q^{-3/2} + 1); tends to the classical 1/2 as q -> 1."""
    return q / (q**-1.5 + 1.0)


def _uncertainty(f: QFunction, spec: TransformSpec, kind: str,
                 tol_slack: float = 1e-6) -> UncertaintyReport:
    if f.is_zero:
        raise ZeroFunctionError("uncertainty report requires a nonzero function")
    p = f.param
    td = dispersion(f)
    if kind == "cosine":
        g = fourier_cosine(f, spec)
        fd_deriv = p.q * lq_norm(d_q(f), 2) ** 2
        bound = cosine_bound_constant(p.q)
    else:
        g = fourier_sine(f, spec)
        fd_deriv = p.q**4 * lq_norm(d_q(f), 2) ** 2
        bound = sine_bound_constant(p.q)
    fd = dispersion(g)
    lhs = math.sqrt(td) * math.sqrt(fd)
    rhs = bound * lq_norm(f, 2) ** 2
    ratio = lhs / rhs if rhs > 0 else math.inf
    return UncertaintyReport(td, fd, fd_deriv, lhs, bound, rhs, ratio,
                             lhs >= rhs * (1.0 - tol_slack))


def uncertainty_cosine(f: QFunction, spec: TransformSpec,
                       tol_slack: float = 1e-6) -> UncertaintyReport:
    """Heisenberg-type bound for the q-Fourier-cosine transform."""
    return _uncertainty(f, spec, "cosine", tol_slack)


def uncertainty_sine(f: QFunction, spec: TransformSpec,
                     tol_slack: float = 1e-6) -> UncertaintyReport:
    """Heisenberg-type bound for the q-Fourier-sine transform."""
    return _uncertainty(f, spec, "sine", tol_slack)


# ---------------------------------------------------------------------------
# Operators on H = {f in L_q^2 : f(0)=0}
# ---------------------------------------------------------------------------


def op_A(f: QFunction) -> QFunction:
    """Multiplication by x; diagonal on the grid."""
    p = f.param
    return QFunction(p, {n: p.q**n * v for n, v in f.items()})


def op_B(f: QFunction) -> QFunction:
    """f -> i D_q f."""
    return d_q(f) * 1j


def op_C(f: QFunction) -> QFunction:
    """f -> i D_q^+ f; the adjoint of B on finitely supported functions."""
    return d_q_plus(f) * 1j


def q_commutator_check(f: QFunction, tolerance: float = 1e-12) -> VerificationReport:
    """[A,B]_q f = (qAB - BA) f should equal -i f pointwise."""
    lhs = op_A(op_B(f)) * f.param.q - op_B(op_A(f))
    dev = lhs.max_abs_diff(f * (-1j))
    return VerificationReport("q-commutator-AB", dev, 0.0, dev, dev,
                              tolerance, dev <= tolerance)


def commutator_AC_check(f: QFunction, tolerance: float = 1e-12) -> VerificationReport:
    """[A,C] f = (AC - CA) f should equal -i q^{-1} f(q^{-1} x)."""
    p = f.param
    lhs = op_A(op_C(f)) - op_C(op_A(f))
    rhs = f.shift(-1) * (-1j / p.q)
    dev = lhs.max_abs_diff(rhs)
    return VerificationReport("commutator-AC", dev, 0.0, dev, dev,
                              tolerance, dev <= tolerance)


def adjointness_check(f: QFunction, g: QFunction,
                      tolerance: float = 1e-12) -> VerificationReport:
    """<Bf, g> = <f, Cg> on finitely supported functions."""
    lhs = inner_product(op_B(f), g)
    rhs = inner_product(f, op_C(g))
    dev = abs(lhs - rhs)
    return VerificationReport("adjointness-B-C", abs(lhs), abs(rhs), dev, dev,
                              tolerance, dev <= tolerance)


def hilbert_uncertainty_check(f: QFunction, s: float | None = None,
                              tol_slack: float = 1e-9) -> list[VerificationReport]:
    """The operator uncertainty inequality

        ||Au|| ||B*u|| + s ||Bu|| ||A*u||  >=  |<[A,B]_s u, u>|

    for the pair (A,B) at s = q (where [A,B]_q u = -i u) and the pair
    (A,C) at s = 1, using A* = A, B* = C, C* = B.
    """
    p = f.param
    out = []
    for name, op, op_star, s_val in (
        ("hilbert-A-B", op_B, op_C, p.q if s is None else s),
        ("hilbert-A-C", op_C, op_B, 1.0),
    ):
        au = op_A(f)
        bu = op(f)
        lhs = (lq_norm(au, 2) * lq_norm(op_star(f), 2)
               + s_val * lq_norm(bu, 2) * lq_norm(au, 2))
        comm = op_A(op(f)) * s_val - op(op_A(f))
        rhs = abs(inner_product(comm, f))
        ok = lhs >= rhs * (1.0 - tol_slack)
        out.append(VerificationReport(name, lhs, rhs, max(0.0, rhs - lhs),
                                      abs(rhs - lhs) / max(lhs, rhs, 1e-300),
                                      tol_slack, ok, detail=f"s={s_val}"))
    return out


def uph_inequality_check(f: QFunction, tol_slack: float = 1e-9) -> dict:
    """Both display lines of the Hilbert-space uncertainty inequality

      line 1:  ||f||^2 <= (||D_q^+ f|| + q ||D_q f||) * dispersion^{1/2}
      line 2:  ||f||^2 <= ((1+q^{3/2})/q^{1/2}) ||D_q f|| * dispersion^{1/2}

    plus the empirical relation between ||D_q^+ f|| and ||D_q f||: the
    ratio is classified against q^{1/2} and q^{-1/2} and recorded, not
    assumed (the two candidate constants disagree between the derivation
    routes, so the data decides).
    """
    if f.is_zero:
        raise ZeroFunctionError("uph check requires a nonzero function")
    p = f.param
    norm2 = lq_norm(f, 2) ** 2
    ndq = lq_norm(d_q(f), 2)
    ndqp = lq_norm(d_q_plus(f), 2)
    disp_half = math.sqrt(dispersion(f))
    rhs1 = (ndqp + p.q * ndq) * disp_half
    rhs2 = (1 + p.q**1.5) / p.q**0.5 * ndq * disp_half
    ratio = ndqp / ndq if ndq > 0 else math.inf
    cands = {"q^(1/2)": p.q**0.5, "q^(-1/2)": p.q**-0.5}
    label, const = min(cands.items(), key=lambda kv: abs(ratio - kv[1]))
    return {
        "norm_sq": norm2,
        "rhs_sum_of_norms": rhs1,
        "rhs_single_norm": rhs2,
        "pass_sum_of_norms": norm2 <= rhs1 * (1.0 + tol_slack),
        "pass_single_norm": norm2 <= rhs2 * (1.0 + tol_slack),
        "dq_norm": ndq,
        "dq_plus_norm": ndqp,
        "norm_ratio": ratio,
        "satisfied_relation": label,
        "relation_rel_err": abs(ratio - const) / const,
    }


def ibp_step_check(f: QFunction, tolerance: float = 1e-12) -> VerificationReport:
    """int t D_q(f conj f)(t) d_q t = -(1/q) int |f|^2 d_q t, the
    integration-by-parts step inside the cosine uncertainty proof."""
    from .qgrid import jackson_integral_0_inf

    p = f.param
    ff = QFunction(p, {n: abs(f(n)) ** 2 for n in f.support})
    x_dff = QFunction(p, {n: p.q**n * v for n, v in d_q(ff).items()})
    lhs = complex(jackson_integral_0_inf(x_dff)).real
    rhs = -lq_norm(f, 2) ** 2 / p.q
    dev = abs(lhs - rhs)
    rel = dev / max(abs(lhs), abs(rhs), 1e-300)
    return VerificationReport("ibp-step-upc", lhs, rhs, dev, rel,
                              tolerance, rel <= tolerance)
