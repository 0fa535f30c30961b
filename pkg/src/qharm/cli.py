"""Command-line interface.

A thin client: every subcommand builds a request, sends it to the FastAPI
app in-process, and formats the response. Exit codes: 0 on success, 1
when a verification check fails (or a q-limit sweep is not monotone), 2
for usage and input errors.
"""

from __future__ import annotations

import csv
import io
import json
import sys

import click

from .qgrid import GridMismatchError, QFunction, read_csv, write_csv
from .verify import SUITES


def _client():
    import warnings

    with warnings.catch_warnings():
        # the in-process client is an implementation detail; its import-time
        # deprecation chatter must not leak into command output
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _config_options(fn):
    opts = [
        click.option("--q", type=float, default=0.5, show_default=True,
                     help="Deformation parameter in (0,1)."),
        click.option("--nmin", type=int, default=-30, show_default=True,
                     help="Smallest grid exponent of the working window."),
        click.option("--nmax", type=int, default=60, show_default=True,
                     help="Largest grid exponent of the working window."),
        click.option("--tol", type=float, default=1e-8, show_default=True,
                     help="Absolute series tolerance."),
        click.option("--precision", type=int, default=256, show_default=True,
                     help="Minimum working precision in bits."),
        click.option("--seed", type=int, default=0, show_default=True,
                     help="Seed for random test functions."),
        click.option("--format", "output_format",
                     type=click.Choice(["csv", "json"]), default="json",
                     show_default=True, help="Output format."),
    ]
    for opt in reversed(opts):
        fn = opt(fn)
    return fn


def _config_body(q, nmin, nmax, tol, precision, seed) -> dict:
    return {"q": q, "n_min": nmin, "n_max": nmax, "tol": tol,
            "precision_bits": precision, "seed": seed}


def _post(path: str, body: dict) -> dict:
    resp = _client().post(path, json=body)
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        raise click.UsageError(str(detail))
    return resp.json()


def _emit_rows(rows: list[dict], columns: list[str], output_format: str) -> None:
    if output_format == "json":
        click.echo(json.dumps(rows, indent=2))
        return
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([row[c] for c in columns])
    click.echo(buf.getvalue(), nl=False)


@click.group(context_settings={"auto_envvar_prefix": "QHARM"})
def main() -> None:
    """Numerics and verification for q-series, q-Fourier transforms, and
    the associated uncertainty inequalities on the geometric grid."""


@main.command("eval")
@click.argument("function_name")
@click.argument("points", type=float, nargs=-1, required=True)
@_config_options
def cmd_eval(function_name, points, q, nmin, nmax, tol, precision, seed,
             output_format) -> None:
    """Evaluate FUNCTION_NAME (q_gamma, q_cos, q_sin, q_bessel3:<alpha>,
    q_number, q_factorial) at POINTS."""
    body = {"function": function_name, "points": list(points),
            "config": _config_body(q, nmin, nmax, tol, precision, seed)}
    data = _post("/eval", body)
    _emit_rows(data["rows"], ["input", "value", "abs_error_bound"], output_format)


@main.command("transform")
@click.argument("kind", type=click.Choice(["cosine", "sine", "inverse-cosine",
                                           "inverse-sine"]))
@click.argument("input_csv", type=click.Path(exists=True, dir_okay=False))
@click.option("--output", "-o", "output_csv", required=True,
              type=click.Path(dir_okay=False),
              help="Destination CSV; an error-bound sidecar JSON is written "
                   "next to it.")
@_config_options
def cmd_transform(kind, input_csv, output_csv, q, nmin, nmax, tol, precision,
                  seed, output_format) -> None:
    """Transform the grid function in INPUT_CSV (header n,x,value_re[,value_im])."""
    cfg = _config_body(q, nmin, nmax, tol, precision, seed)
    try:
        f = read_csv(input_csv, _param_for(q))
    except GridMismatchError as exc:
        raise click.UsageError(f"{input_csv}: {exc}")
    body = {"kind": kind, "config": cfg,
            "samples": [{"n": n, "value_re": v.real, "value_im": v.imag}
                        for n, v in f.items()]}
    data = _post("/transform", body)
    g = QFunction(_param_for(q),
                  {s["n"]: complex(s["value_re"], s["value_im"])
                   for s in data["samples"]})
    write_csv(g, output_csv)
    with open(output_csv + ".meta.json", "w", encoding="utf-8") as fh:
        json.dump({"kind": kind, "config": cfg,
                   "error_bound": data["error_bound"]}, fh, indent=2)
        fh.write("\n")
    click.echo(f"wrote {output_csv} (error bound {data['error_bound']:.3g})")


def _param_for(q: float):
    from .verify import SuiteConfig

    return SuiteConfig(q=q).param()


@main.command("verify")
@click.argument("suite", type=click.Choice([*SUITES, "all"]))
@_config_options
def cmd_verify(suite, q, nmin, nmax, tol, precision, seed, output_format) -> None:
    """Run the named verification SUITE and print its report."""
    body = {"suite": suite,
            "config": _config_body(q, nmin, nmax, tol, precision, seed)}
    data = _post("/verify", body)
    if output_format == "json":
        click.echo(json.dumps(data, indent=2))
    else:
        rows = [{k: c.get(k, "") for k in ("check_name", "lhs", "rhs", "abs_err",
                                           "rel_err", "tolerance", "pass")}
                for c in data["checks"]]
        _emit_rows(rows, ["check_name", "lhs", "rhs", "abs_err", "rel_err",
                          "tolerance", "pass"], "csv")
    if not data["pass"]:
        sys.exit(1)


@main.command("qlimit")
@click.argument("quantity")
@click.argument("q_values", type=float, nargs=-1, required=True)
@click.option("--format", "output_format", type=click.Choice(["csv", "json"]),
              default="json", show_default=True, help="Output format.")
def cmd_qlimit(quantity, q_values, output_format) -> None:
    """Sweep QUANTITY (gamma:<x>, bound-cosine, bound-sine) over Q_VALUES
    and report the gap to the classical q->1 limit; fails if the gaps are
    not strictly decreasing."""
    data = _post("/qlimit", {"quantity": quantity, "q_values": list(q_values)})
    _emit_rows(data["rows"], ["q", "value", "target", "gap"], output_format)
    if not data["gaps_decreasing"]:
        click.echo("gaps are not strictly decreasing", err=True)
        sys.exit(1)


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def cmd_serve(host, port) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
