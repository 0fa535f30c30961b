"""HTTP surface over the library.

Endpoints mirror the CLI verbs one-to-one: /eval, /transform, /verify,
/qlimit, plus /health. The CLI itself talks to this app in-process, so
every code path the service exposes is exercised by the CLI tests.
"""

from __future__ import annotations

import math
from typing import Literal

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field, field_validator

from .qcore import PoleError, QParam, q_factorial, q_gamma, q_number
from .qgrid import GridRange, QFunction
from .qfourier import COSINE, SINE, TransformSpec, fourier_cosine, fourier_sine, \
    inverse_cosine, inverse_sine
from .qspecial import q_bessel3, q_cos, q_sin
from .quncertainty import cosine_bound_constant, sine_bound_constant
from .verify import SuiteConfig, SUITES, report_document, run_suite


class ConfigModel(BaseModel):
    q: float = 0.5
    n_min: int = -30
    n_max: int = 60
    tol: float = Field(default=1e-8, gt=0)
    precision_bits: int = Field(default=256, ge=53)
    seed: int = Field(default=0, ge=0)

    @field_validator("q")
    @classmethod
    def _q_open_unit(cls, v: float) -> float:
        if not (0.0 < v < 1.0):
            raise ValueError("q must lie strictly between 0 and 1")
        return v

    def suite_config(self) -> SuiteConfig:
        return SuiteConfig(q=self.q, n_min=self.n_min, n_max=self.n_max,
                           tol=self.tol, precision_bits=self.precision_bits,
                           seed=self.seed)


class EvalRequest(BaseModel):
    function: str
    points: list[float]
    config: ConfigModel = ConfigModel()


class EvalRow(BaseModel):
    input: float
    value: float
    abs_error_bound: float


class EvalResponse(BaseModel):
    function: str
    rows: list[EvalRow]


class Sample(BaseModel):
    n: int
    value_re: float
    value_im: float = 0.0


class TransformRequest(BaseModel):
    kind: Literal["cosine", "sine", "inverse-cosine", "inverse-sine"]
    samples: list[Sample]
    config: ConfigModel = ConfigModel()


class TransformResponse(BaseModel):
    kind: str
    samples: list[Sample]
    error_bound: float


class VerifyRequest(BaseModel):
    suite: str
    config: ConfigModel = ConfigModel()


class QLimitRequest(BaseModel):
    quantity: str
    q_values: list[float]


class QLimitRow(BaseModel):
    q: float
    value: float
    target: float
    gap: float


class QLimitResponse(BaseModel):
    quantity: str
    rows: list[QLimitRow]
    gaps_decreasing: bool


app = FastAPI(title="qharm", version="1.0.0")


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


def _evaluator(name: str, cfg: SuiteConfig):
    p = cfg.param()
    sc = cfg.series()
    if name == "q_gamma":
        return lambda x: (q_gamma(p, x, sc), sc.tol_abs)
    if name == "q_cos":
        return lambda x: (lambda r: (r.value, r.abs_error_bound))(q_cos(p, x, sc))
    if name == "q_sin":
        return lambda x: (lambda r: (r.value, r.abs_error_bound))(q_sin(p, x, sc))
    if name == "q_number":
        return lambda x: (q_number(p, x), 0.0)
    if name == "q_factorial":
        return lambda x: (q_factorial(p, _as_index(x)), 0.0)
    if name.startswith("q_bessel3:"):
        try:
            alpha = float(name.split(":", 1)[1])
        except ValueError:
            raise HTTPException(422, f"bad q_bessel3 order in {name!r}")
        return lambda x: (lambda r: (r.value, r.abs_error_bound))(
            q_bessel3(p, alpha, x, sc))
    raise HTTPException(422, f"unknown function {name!r}; expected one of "
                             "q_gamma, q_cos, q_sin, q_bessel3:<alpha>, "
                             "q_number, q_factorial")


def _as_index(x: float) -> int:
    n = round(x)
    if abs(x - n) > 1e-9 or n < 0:
        raise HTTPException(422, f"q_factorial needs a nonnegative integer, got {x}")
    return n


@app.post("/eval", response_model=EvalResponse)
def eval_endpoint(req: EvalRequest) -> EvalResponse:
    fn = _evaluator(req.function, req.config.suite_config())
    rows = []
    for x in req.points:
        try:
            v, e = fn(x)
        except HTTPException:
            raise
        except (PoleError, ValueError, ArithmeticError) as exc:
            raise HTTPException(422, f"evaluation failed at {x}: {exc}")
        rows.append(EvalRow(input=x, value=v, abs_error_bound=e))
    return EvalResponse(function=req.function, rows=rows)


_TRANSFORMS = {
    "cosine": (COSINE, fourier_cosine),
    "sine": (SINE, fourier_sine),
    "inverse-cosine": (COSINE, inverse_cosine),
    "inverse-sine": (SINE, inverse_sine),
}


@app.post("/transform", response_model=TransformResponse)
def transform_endpoint(req: TransformRequest) -> TransformResponse:
    cfg = req.config.suite_config()
    p = cfg.param()
    f = QFunction(p, {s.n: complex(s.value_re, s.value_im) for s in req.samples})
    kind, run = _TRANSFORMS[req.kind]
    spec = TransformSpec(kind, GridRange(cfg.n_min, cfg.n_max), cfg.series())
    g = run(f, spec)
    out = [Sample(n=n, value_re=v.real, value_im=v.imag) for n, v in g.items()]
    return TransformResponse(kind=req.kind, samples=out, error_bound=g.error_bound)


@app.post("/verify")
def verify_endpoint(req: VerifyRequest) -> dict:
    if req.suite != "all" and req.suite not in SUITES:
        raise HTTPException(422, f"unknown suite {req.suite!r}")
    checks = run_suite(req.suite, req.config.suite_config())
    return report_document(req.suite, req.config.suite_config(), checks)


def _qlimit_quantity(name: str):
    if name == "bound-cosine":
        return cosine_bound_constant, 0.5
    if name == "bound-sine":
        return sine_bound_constant, 0.5
    if name.startswith("gamma:"):
        try:
            x = float(name.split(":", 1)[1])
        except ValueError:
            raise HTTPException(422, f"bad gamma argument in {name!r}")
        return (lambda q: q_gamma(QParam(q), x)), math.gamma(x)
    raise HTTPException(422, f"unknown quantity {name!r}; expected gamma:<x>, "
                             "bound-cosine, or bound-sine")


@app.post("/qlimit", response_model=QLimitResponse)
def qlimit_endpoint(req: QLimitRequest) -> QLimitResponse:
    fn, target = _qlimit_quantity(req.quantity)
    rows = []
    for q in req.q_values:
        if not (0.0 < q < 1.0):
            raise HTTPException(422, f"q={q} is outside (0,1)")
        try:
            v = fn(q)
        except (PoleError, ValueError, ArithmeticError) as exc:
            raise HTTPException(422, f"evaluation failed at q={q}: {exc}")
        rows.append(QLimitRow(q=q, value=v, target=target, gap=abs(v - target)))
    gaps = [r.gap for r in rows]
    decreasing = all(gaps[i] > gaps[i + 1] for i in range(len(gaps) - 1))
    return QLimitResponse(quantity=req.quantity, rows=rows,
                          gaps_decreasing=decreasing)
