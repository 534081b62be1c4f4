"""Command-line client for the walk-experiment service.

Each subcommand posts one request to the HTTP service and renders the JSON
response as CSV (default) or JSON.  Without ``--server`` the service app is
mounted in-process, so no running server is needed; with ``--server URL``
the same requests go over the wire.

Exit codes: 0 success, 2 usage or validation error, 3 numerical failure,
4 I/O failure.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from typing import Any, Callable

import httpx

USAGE_EXIT = 2
NUMERICAL_EXIT = 3
IO_EXIT = 4

_LOCAL_BASE_URL = "http://coinwalk.local"


class ClientError(Exception):
    """Failure with a dedicated exit code and a message for stderr."""

    def __init__(self, exit_code: int, message: str) -> None:
        super().__init__(message)
        self.exit_code = exit_code


def _post(server: str | None, path: str, payload: dict[str, Any]) -> dict[str, Any]:
    async def go() -> httpx.Response:
        if server is None:
            from .service.app import create_app

            transport = httpx.ASGITransport(app=create_app())
            async with httpx.AsyncClient(
                transport=transport, base_url=_LOCAL_BASE_URL, timeout=None
            ) as client:
                return await client.post(path, json=payload)
        async with httpx.AsyncClient(base_url=server, timeout=None) as client:
            return await client.post(path, json=payload)

    try:
        response = asyncio.run(go())
    except httpx.HTTPError as exc:
        raise ClientError(IO_EXIT, f"service request failed: {exc}") from exc

    if response.status_code == 200:
        return response.json()
    try:
        body = response.json()
    except ValueError:
        body = {}
    detail = body.get("detail", response.text)
    if isinstance(detail, list):  # FastAPI schema-validation payload
        detail = "; ".join(
            f"{'.'.join(str(p) for p in item.get('loc', []))}: {item.get('msg', '')}"
            for item in detail
        )
    if response.status_code in (400, 422):
        raise ClientError(USAGE_EXIT, f"invalid request: {detail}")
    raise ClientError(NUMERICAL_EXIT, f"computation failed: {detail}")


def _fmt(value: Any, precision: int) -> str:
    if isinstance(value, float):
        return format(value, f".{precision}g")
    return str(value)


def _csv(
    header: list[str],
    rows: list[list[Any]],
    precision: int,
    trailer: list[str] | None = None,
) -> str:
    lines = [",".join(header)]
    lines += [",".join(_fmt(v, precision) for v in row) for row in rows]
    lines += trailer or []
    return "\n".join(lines) + "\n"


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise ClientError(IO_EXIT, f"cannot write {out}: {exc}") from exc


def _sweep_payload(args: argparse.Namespace) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "walk": args.walk,
        "basis": args.basis,
        "t_max": args.tmax,
    }
    if args.alpha is not None:
        payload["alpha"] = args.alpha
    return payload


def _sweep_csv(body: dict[str, Any], precision: int) -> str:
    rows = [[r["t"], r["entropy"]] for r in body["rows"]]
    return _csv(["t", "entropy"], rows, precision)


def _grid_payload(args: argparse.Namespace) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "t": args.t,
        "theta_points": args.theta_points,
        "phi_points": args.phi_points,
    }
    if args.alpha is not None:
        payload["alpha"] = args.alpha
    return payload


def _grid_csv(body: dict[str, Any], precision: int) -> str:
    rows = [[r["theta"], r["phi"], r["entropy"]] for r in body["rows"]]
    trailer = [
        "# argmax," + _fmt(body["argmax"]["theta"], precision)
        + "," + _fmt(body["argmax"]["phi"], precision),
        "# argmin," + _fmt(body["argmin"]["theta"], precision)
        + "," + _fmt(body["argmin"]["phi"], precision),
    ]
    return _csv(["theta", "phi", "entropy"], rows, precision, trailer)


def _random_run_payload(args: argparse.Namespace) -> dict[str, Any]:
    samples, seed = args.samples, args.seed
    if args.basis is not None:
        spec = args.basis.strip().lower()
        if not spec.startswith("random:"):
            raise ClientError(USAGE_EXIT, "random-run accepts only random:samples,seed bases")
        parts = spec[len("random:") :].split(",")
        try:
            basis_samples, basis_seed = (int(p) for p in parts)
        except ValueError:
            raise ClientError(
                USAGE_EXIT, f"expected random:<samples>,<seed>, got {args.basis!r}"
            ) from None
        if args.samples is not None and args.samples != basis_samples:
            raise ClientError(USAGE_EXIT, "--samples conflicts with --basis random:...")
        if args.seed is not None and args.seed != basis_seed:
            raise ClientError(USAGE_EXIT, "--seed conflicts with --basis random:...")
        samples, seed = basis_samples, basis_seed
    if seed is None:
        raise ClientError(USAGE_EXIT, "random-run requires an explicit --seed")
    if samples is None:
        samples = 500
    return {"t_min": args.tmin, "t_max": args.tmax, "samples": samples, "seed": seed}


def _random_run_csv(body: dict[str, Any], precision: int) -> str:
    rows = [[r["sample"], r["t"], r["entropy"]] for r in body["rows"]]
    return _csv(["sample", "t", "entropy"], rows, precision)


def _compare_payload(args: argparse.Namespace) -> dict[str, Any]:
    return {"mode": args.mode, "t_max": args.tmax}


def _compare_csv(body: dict[str, Any], precision: int) -> str:
    rows = [
        [r["t"], r["alternate_entropy"], r["grover_entropy"], r["difference"]]
        for r in body["rows"]
    ]
    return _csv(
        ["t", "alternate_entropy", "grover_entropy", "difference"], rows, precision
    )


def _evolve_payload(args: argparse.Namespace) -> dict[str, Any]:
    payload: dict[str, Any] = {"walk": args.walk, "t": args.t}
    if args.alpha is not None:
        payload["alpha"] = args.alpha
    return payload


def _evolve_csv(body: dict[str, Any], precision: int) -> str:
    rows = [[r["x"], r["y"], r["coin"], r["re"], r["im"]] for r in body["rows"]]
    return _csv(["x", "y", "coin", "re", "im"], rows, precision)


def _measure_payload(args: argparse.Namespace) -> dict[str, Any]:
    payload: dict[str, Any] = {"walk": args.walk, "t": args.t, "basis": args.basis}
    if args.alpha is not None:
        payload["alpha"] = args.alpha
    return payload


def _measure_csv(body: dict[str, Any], precision: int) -> str:
    rows = [[r["outcome"], r["probability"], r["entropy"]] for r in body["rows"]]
    return _csv(["outcome", "probability", "entropy"], rows, precision)


_COMMANDS: dict[str, tuple[str, Callable, Callable]] = {
    "sweep-time": ("/sweep-time", _sweep_payload, _sweep_csv),
    "grid": ("/grid", _grid_payload, _grid_csv),
    "random-run": ("/random-run", _random_run_payload, _random_run_csv),
    "compare": ("/compare", _compare_payload, _compare_csv),
    "evolve": ("/evolve", _evolve_payload, _evolve_csv),
    "measure": ("/measure", _measure_payload, _measure_csv),
}


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", metavar="PATH", help="output file (default stdout)")
    parser.add_argument(
        "--precision", type=int, default=12, help="significant digits in CSV output"
    )
    parser.add_argument("--server", metavar="URL", help="remote service URL")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coinwalk",
        description="Measurement-induced spatial entanglement in 2D coined walks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep-time", help="entanglement against step count")
    sweep.add_argument("--walk", choices=("alternate", "grover"), required=True)
    sweep.add_argument("--basis", default="computational")
    sweep.add_argument("--alpha", help="initial coin phase (alternate walk only)")
    sweep.add_argument("--tmax", type=int, default=20)
    _add_output_flags(sweep)

    grid = sub.add_parser("grid", help="entanglement surface over (theta, phi)")
    grid.add_argument("--t", type=int, required=True)
    grid.add_argument("--alpha", help="initial coin phase")
    grid.add_argument("--theta-points", type=int, default=51)
    grid.add_argument("--phi-points", type=int, default=51)
    _add_output_flags(grid)

    random_run = sub.add_parser("random-run", help="Haar-random bases on the Grover walk")
    random_run.add_argument("--tmin", type=int, default=10)
    random_run.add_argument("--tmax", type=int, default=15)
    random_run.add_argument("--samples", type=int)
    random_run.add_argument("--seed", type=int)
    random_run.add_argument("--basis", help="alternative random:samples,seed form")
    _add_output_flags(random_run)

    compare = sub.add_parser("compare", help="both walks under paired bases")
    compare.add_argument("--mode", choices=("computational", "optimal"), required=True)
    compare.add_argument("--tmax", type=int, default=12)
    _add_output_flags(compare)

    evolve = sub.add_parser("evolve", help="dump the full amplitude table")
    evolve.add_argument("--walk", choices=("alternate", "grover"), required=True)
    evolve.add_argument("--t", type=int, required=True)
    evolve.add_argument("--alpha", help="initial coin phase (alternate walk only)")
    _add_output_flags(evolve)

    measure = sub.add_parser("measure", help="outcome probabilities and entropies")
    measure.add_argument("--walk", choices=("alternate", "grover"), required=True)
    measure.add_argument("--t", type=int, required=True)
    measure.add_argument("--basis", default="computational")
    measure.add_argument("--alpha", help="initial coin phase (alternate walk only)")
    _add_output_flags(measure)

    serve = sub.add_parser("serve", help="run the HTTP service with uvicorn")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "serve":
        import uvicorn

        uvicorn.run("coinwalk.service.app:app", host=args.host, port=args.port)
        return 0

    path, make_payload, to_csv = _COMMANDS[args.command]
    try:
        payload = make_payload(args)
        body = _post(args.server, path, payload)
        if args.format == "json":
            text = json.dumps(body, indent=2) + "\n"
        else:
            text = to_csv(body, args.precision)
        _write(text, args.out)
    except ClientError as exc:
        print(f"coinwalk: {exc}", file=sys.stderr)
        return exc.exit_code
    return 0


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
