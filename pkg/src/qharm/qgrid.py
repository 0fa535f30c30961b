"""Functions on the geometric grid {q^n : n in Z}, q-derivatives, Jackson
integrals, L_q^p norms, and the integration-by-parts / change-of-variable
identities as testable transforms.

Grid functions are finitely supported by construction, so every bilateral
Jackson sum over them is an exact finite sum. Analytic integrands enter
only as evaluable callbacks, for which the bilateral sums are truncated
with sampled geometric tail bounds.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .qcore import DEFAULT_CONFIG, NonConvergenceError, QParam, SeriesConfig
from .report import VerificationReport, compare


@dataclass(frozen=True)
class GridRange:
    """Integer exponent window [n_min, n_max]; x = q^n decreases in n."""

    n_min: int
    n_max: int

    def __post_init__(self) -> None:
        if self.n_min > self.n_max:
            raise ValueError("GridRange requires n_min <= n_max")

    def exponents(self) -> range:
        return range(self.n_min, self.n_max + 1)

    def __len__(self) -> int:
        return self.n_max - self.n_min + 1


class GridMismatchError(ValueError):
    """CSV x column disagrees with q^n."""


class QFunction:
    """A finitely supported function on {q^n : n in Z}.

    Samples map integer exponents n to values f(q^n); exponents outside
    the map are implicitly zero. Values may be complex. Instances are
    immutable; operations return new instances.
    """

    __slots__ = ("param", "_samples", "error_bound")

    def __init__(self, param: QParam, samples: Mapping[int, complex],
                 error_bound: float = 0.0):
        cleaned: dict[int, complex] = {}
        for n, v in samples.items():
            v = complex(v)
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise ValueError(f"non-finite sample at exponent {n}: {v}")
            if v != 0:
                cleaned[int(n)] = v
        self.param = param
        self._samples = cleaned
        self.error_bound = float(error_bound)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def unit(cls, param: QParam, k: int) -> "QFunction":
        """The indicator e_k of the grid point q^k."""
        return cls(param, {k: 1.0})

    @classmethod
    def from_values(cls, param: QParam, exponents: Iterable[int],
                    values: Iterable[complex]) -> "QFunction":
        return cls(param, dict(zip(exponents, values)))

    # -- basic access ---------------------------------------------------------

    @property
    def support(self) -> list[int]:
        return sorted(self._samples)

    def __call__(self, n: int) -> complex:
        return self._samples.get(n, 0.0)

    def items(self):
        """(exponent, value) pairs in ascending exponent order."""
        return sorted(self._samples.items())

    @property
    def is_zero(self) -> bool:
        return not self._samples

    @property
    def is_real(self) -> bool:
        return all(v.imag == 0 for v in self._samples.values())

    def __eq__(self, other) -> bool:
        return (isinstance(other, QFunction)
                and self.param == other.param
                and self._samples == other._samples)

    def __repr__(self) -> str:
        return f"QFunction(q={self.param.q}, support={self.support})"

    # -- algebra --------------------------------------------------------------

    def __add__(self, other: "QFunction") -> "QFunction":
        if other.param != self.param:
            raise ValueError("QFunction parameters differ")
        out = dict(self._samples)
        for n, v in other._samples.items():
            out[n] = out.get(n, 0.0) + v
        return QFunction(self.param, out, self.error_bound + other.error_bound)

    def __sub__(self, other: "QFunction") -> "QFunction":
        return self + (other * -1.0)

    def __mul__(self, scalar: complex) -> "QFunction":
        return QFunction(self.param,
                         {n: v * scalar for n, v in self._samples.items()},
                         self.error_bound * abs(scalar))

    __rmul__ = __mul__

    def conj(self) -> "QFunction":
        return QFunction(self.param,
                         {n: v.conjugate() for n, v in self._samples.items()},
                         self.error_bound)

    def shift(self, j: int) -> "QFunction":
        """x -> f(q^j x), i.e. exponent n -> value f(q^{n+j})."""
        return QFunction(self.param,
                         {n - j: v for n, v in self._samples.items()},
                         self.error_bound)

    def max_abs_diff(self, other: "QFunction") -> float:
        exps = set(self._samples) | set(other._samples)
        return max((abs(self(n) - other(n)) for n in exps), default=0.0)


# ---------------------------------------------------------------------------
# q-derivatives
# ---------------------------------------------------------------------------


def d_q(f: QFunction) -> QFunction:
    """(D_q f)(x) = (f(x) - f(qx)) / ((1-q)x) on the grid."""
    p = f.param
    out: dict[int, complex] = {}
    for n in set(f.support) | {n - 1 for n in f.support}:
        num = f(n) - f(n + 1)
        if num != 0:
            out[n] = num / (p.one_minus_q * p.q**n)
    return QFunction(p, out)


def d_q_plus(f: QFunction) -> QFunction:
    """(D_q^+ f)(x) = (f(q^{-1}x) - f(x)) / ((1-q)x) on the grid."""
    p = f.param
    out: dict[int, complex] = {}
    for n in set(f.support) | {n + 1 for n in f.support}:
        num = f(n - 1) - f(n)
        if num != 0:
            out[n] = num / (p.one_minus_q * p.q**n)
    return QFunction(p, out)


# ---------------------------------------------------------------------------
# Jackson integrals
# ---------------------------------------------------------------------------


def jackson_integral_0_inf(f: QFunction):
    """int_0^oo f d_q x = (1-q) sum_n q^n f(q^n); exact finite sum.

    Summation ascends in exponent (small x first) for determinism.
    """
    p = f.param
    total = 0.0 + 0.0j
    for n, v in f.items():
        total += p.q**n * v
    total *= p.one_minus_q
    return total.real if f.is_real else total


def jackson_integral_0_a(p: QParam, f: Callable[[float], float], a: float,
                         cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """int_0^a f d_q x = (1-q) a sum_{n>=0} f(a q^n) q^n for an evaluable f.

    Truncated once a sampled bound B on |f| near 0 gives a geometric tail
    a * B * q^{n+1} below tol_abs.
    """
    if a <= 0:
        if a == 0:
            return 0.0
        raise ValueError("jackson_integral_0_a requires a > 0")
    q = p.q
    total = 0.0
    recent: list[float] = []
    x = a
    w = 1.0
    for n in range(cfg.max_terms):
        fx = f(x)
        total += fx * w
        recent.append(abs(fx))
        if len(recent) > 10:
            recent.pop(0)
        if n >= 5 and a * max(recent) * w * q < cfg.tol_abs:
            return p.one_minus_q * a * total
        x *= q
        w *= q
    raise NonConvergenceError("jackson_integral_0_a hit max_terms")


def jackson_integral_interval(p: QParam, f: Callable[[float], float], a: float,
                              b: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """int_a^b f d_q x = int_0^b - int_0^a."""
    return jackson_integral_0_a(p, f, b, cfg) - jackson_integral_0_a(p, f, a, cfg)


def _bilateral_sum(p: QParam, term: Callable[[int], float],
                   cfg: SeriesConfig) -> float:
    """sum_{n in Z} term(n), truncated when each tail is certified by a
    sampled geometric decay bound; fails loudly if no decay is detected."""
    half = cfg.max_terms // 2

    def one_side(step: int) -> float:
        total = 0.0
        prev = None
        small = 0
        growing = 0
        n = 0 if step > 0 else -1
        for _ in range(half):
            try:
                t = term(n)
            except OverflowError:
                raise NonConvergenceError(
                    "bilateral Jackson sum: term overflow; no decay") from None
            total += t
            at = abs(t)
            if prev is not None and prev > 0:
                ratio = at / prev
            else:
                ratio = 1.0
            if at < cfg.tol_abs / 4 and (at == 0.0 or ratio < 0.9):
                small += 1
                if small >= 3:
                    return total
            else:
                small = 0
            if at > 1e12 and ratio > 1.0:
                growing += 1
                if growing >= 30:
                    raise NonConvergenceError(
                        "bilateral Jackson sum: terms growing; no decay")
            else:
                growing = 0
            prev = at if at > 0 else prev
            n += step
        raise NonConvergenceError("bilateral Jackson sum: no certified decay")

    return one_side(+1) + one_side(-1)


def improper_integral(p: QParam, f: Callable[[float], float], A: float,
                      cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """int_0^{oo/A} f d_q x = (1-q) sum_{n in Z} f(q^n/A) q^n/A."""
    if A <= 0:
        raise ValueError("improper_integral requires A > 0")
    q = p.q

    def term(n: int) -> float:
        x = q**n / A
        return f(x) * x

    return p.one_minus_q * _bilateral_sum(p, term, cfg)


def lq_norm(f: QFunction, power: float = 2.0) -> float:
    """||f||_{q,p} = ((1-q) sum_n q^n |f(q^n)|^p)^{1/p}; exact finite sum."""
    if power < 1:
        raise ValueError("lq_norm requires p >= 1")
    p = f.param
    total = 0.0
    for n, v in f.items():
        total += p.q**n * abs(v) ** power
    return (p.one_minus_q * total) ** (1.0 / power)


def inner_product(f: QFunction, g: QFunction) -> complex:
    """<f,g> = int_0^oo f(t) conj(g(t)) d_q t (conjugate-linear in g)."""
    p = f.param
    total = 0.0 + 0.0j
    for n in sorted(set(f.support) & set(g.support)):
        total += p.q**n * f(n) * g(n).conjugate()
    return p.one_minus_q * total


# ---------------------------------------------------------------------------
# Identity checks
# ---------------------------------------------------------------------------


def _grid_exponent(p: QParam, x: float) -> int:
    n = round(math.log(x) / p.log_q)
    if not math.isclose(p.q**n, x, rel_tol=1e-9):
        raise ValueError(f"{x} is not a grid point q^n for q={p.q}")
    return n


def _integral_on_interval(f: QFunction, a: float, b: float) -> complex:
    """int_a^b of a grid function, a,b in {q^n} or 0; exact finite sum."""
    p = f.param
    n_hi = _grid_exponent(p, b)  # b = q^{n_hi}, largest point included
    n_lo = None if a == 0 else _grid_exponent(p, a)  # exclusive upper exponent
    total = 0.0 + 0.0j
    for n, v in f.items():
        if n >= n_hi and (n_lo is None or n < n_lo):
            total += p.q**n * v
    return p.one_minus_q * total


def integration_by_parts_check(f: QFunction, g: QFunction, a: float, b: float,
                               variant: str = "standard",
                               tolerance: float = 1e-12) -> VerificationReport:
    """Both sides of the q-integration-by-parts identity on [a,b].

    standard: int g D_q f = f(b)g(b) - f(a)g(a) - int f(q.) D_q g
    plus:     int g D_q f = f(b)g(b/q) - f(a)g(a/q) - int f D_q^+ g
    """
    if variant not in ("standard", "plus"):
        raise ValueError(f"unknown variant {variant!r}")
    p = f.param

    def boundary(x: float, offset: int) -> complex:
        if x == 0:
            return 0.0  # finitely supported grid functions vanish at 0+
        n = _grid_exponent(p, x)
        return f(n) * g(n + offset)

    lhs = _integral_on_interval(_pointwise_mul(g, d_q(f)), a, b)
    if variant == "standard":
        rhs = (boundary(b, 0) - boundary(a, 0)
               - _integral_on_interval(_pointwise_mul(f.shift(1), d_q(g)), a, b))
    else:
        rhs = (boundary(b, -1) - boundary(a, -1)
               - _integral_on_interval(_pointwise_mul(f, d_q_plus(g)), a, b))
    return compare(f"integration-by-parts-{variant}", _as_real(lhs), _as_real(rhs),
                   tolerance)


def _pointwise_mul(f: QFunction, g: QFunction) -> QFunction:
    out = {n: f(n) * g(n) for n in set(f.support) & set(g.support)}
    return QFunction(f.param, out)


def _as_real(z: complex) -> float:
    z = complex(z)
    return z.real if abs(z.imag) < 1e-300 else abs(z)


def change_of_variable_check(p: QParam, f: Callable[[float], float], alpha: float,
                             beta: float, a: float, b: float,
                             cfg: SeriesConfig = DEFAULT_CONFIG,
                             tolerance: float = 1e-10) -> VerificationReport:
    """Compare both sides of the change-of-variable identity for
    u(x) = alpha x^beta:

        int_{u(a)}^{u(b)} f(u) d_q u
          = int_a^b f(u(x)) D_{q^(1/beta)} u(x) d_{q^(1/beta)} x

    b = inf runs both sides as bilateral sums over the whole grid.
    """
    if beta <= 0:
        raise ValueError("change of variable requires beta > 0")
    root = QParam(p.q ** (1.0 / beta))
    # D_{q^{1/beta}} u(x) = alpha x^{beta-1} (1-q)/(1-q^{1/beta})
    du_scale = alpha * p.one_minus_q / root.one_minus_q

    def rhs_integrand(x: float) -> float:
        return f(alpha * x**beta) * du_scale * x ** (beta - 1.0)

    if math.isinf(b):
        if a != 0:
            raise ValueError("infinite interval supported only as [0, inf)")
        lhs = improper_integral(p, f, 1.0, cfg)
        rhs = improper_integral(root, rhs_integrand, 1.0, cfg)
    else:
        ua, ub = alpha * a**beta, alpha * b**beta
        lhs = jackson_integral_interval(p, f, ua, ub, cfg)
        rhs = jackson_integral_interval(root, rhs_integrand, a, b, cfg)
    return compare("change-of-variable", lhs, rhs, tolerance)


# ---------------------------------------------------------------------------
# CSV interchange:  header "n,x,value_re[,value_im]"
# ---------------------------------------------------------------------------


def write_csv(f: QFunction, path: str) -> None:
    complex_out = not f.is_real
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        header = ["n", "x", "value_re"] + (["value_im"] if complex_out else [])
        w.writerow(header)
        for n, v in f.items():
            row = [n, f"{f.param.q ** n:.17g}", f"{v.real:.17g}"]
            if complex_out:
                row.append(f"{v.imag:.17g}")
            w.writerow(row)


def read_csv(path: str, param: QParam) -> QFunction:
    samples: dict[int, complex] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header[:3]] != ["n", "x", "value_re"]:
            raise GridMismatchError("expected header n,x,value_re[,value_im]")
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            try:
                n = int(row[0])
                x = float(row[1])
                re = float(row[2])
                im = float(row[3]) if len(row) > 3 and row[3] != "" else 0.0
            except (ValueError, IndexError) as exc:
                raise GridMismatchError(f"row {lineno}: malformed values") from exc
            expected = param.q**n
            if not math.isclose(x, expected, rel_tol=1e-12):
                raise GridMismatchError(
                    f"row {lineno}: x={x} does not match q^{n}={expected}")
            samples[n] = complex(re, im)
    return QFunction(param, samples)
