"""Command-line client for the analysis service.

Every subcommand is a thin HTTP client: requests go either to a remote
server (--server or SEQLAB_SERVER) or to an in-process instance of the
service over an ASGI transport, so both paths exercise the same API.
Failures print one machine-readable JSON line on stderr and exit nonzero.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys
from pathlib import Path

import httpx

from .errors import SeqlabError
from .pipeline import ingest_signal
from .reports import canonical_json, series_csv

_ENV_SERVER = "SEQLAB_SERVER"
_ENV_SEED = "SEQLAB_SEED"


class ServiceFailure(Exception):
    """A request that came back with an error payload."""

    def __init__(self, error_type: str, message: str) -> None:
        super().__init__(message)
        self.error_type = error_type


def _call(method: str, path: str, payload: dict | None, server: str | None) -> dict:
    if server:
        with httpx.Client(base_url=server, timeout=300.0) as client:
            response = client.request(method, path, json=payload)
            return _unwrap(response.status_code, response.json())

    from .service.app import app

    async def run() -> tuple[int, dict]:
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport, base_url="http://seqlab") as client:
            response = await client.request(method, path, json=payload)
            return response.status_code, response.json()

    status, body = asyncio.run(run())
    return _unwrap(status, body)


def _unwrap(status: int, body: dict) -> dict:
    if status == 200:
        return body
    error = body.get("error") if isinstance(body, dict) else None
    if isinstance(error, dict):
        raise ServiceFailure(error.get("type", "ServiceError"), error.get("message", ""))
    raise ServiceFailure("ServiceError", json.dumps(body))


def _resolve_seed(value: int | None) -> int | None:
    if value is not None:
        return value
    env = os.environ.get(_ENV_SEED)
    if env is None or env == "":
        return None
    try:
        return int(env)
    except ValueError as exc:
        raise ServiceFailure("ParseError", f"{_ENV_SEED} must be an integer, got '{env}'") from exc


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_transform(args: argparse.Namespace) -> int:
    values = [float(v) for v in ingest_signal(args.infile)]
    body = _call(
        "POST",
        "/v1/transform",
        {"values": values, "order": args.order, "engine": args.engine},
        args.server,
    )
    _write_or_print(series_csv(body["coefficients"]), args.out)
    return 0


def _cmd_zero_crossings(args: argparse.Namespace) -> int:
    body = _call("POST", "/v1/zero-crossings", {"n": args.n, "s": args.s}, args.server)
    print(canonical_json({"n": body["n"], "s": body["s"], "bits": body["bits"], "count": body["count"]}))
    return 0


def _cmd_table1(args: argparse.Namespace) -> int:
    body = _call("GET", "/v1/table1", None, args.server)
    print(body["text"])
    if args.out:
        Path(args.out).write_text(body["csv"], encoding="utf-8")
    return 0


def _cmd_band_energy(args: argparse.Namespace) -> int:
    values = [float(v) for v in ingest_signal(args.infile)]
    payload = {
        "values": values,
        "a": args.a,
        "m": args.m,
        "mode": args.estimate,
        "shots": args.shots,
        "seed": _resolve_seed(args.seed),
        "label": Path(args.infile).stem,
    }
    body = _call("POST", "/v1/band-energy", payload, args.server)
    text = canonical_json(body) + "\n"
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    return 0


def _cmd_reproduce(args: argparse.Namespace) -> int:
    body = _call("POST", "/v1/reproduce", {"scenario": args.scenario}, args.server)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for blob in body["files"]:
        path = out_dir / blob["name"]
        path.write_text(blob["content"], encoding="utf-8")
        print(f"wrote {path}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("seqlab.service.app:app", host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqlab",
        description="Sequency-band energy analysis of sampled signals.",
    )
    parser.add_argument(
        "--server",
        default=os.environ.get(_ENV_SERVER),
        help="analysis server URL (default: run the service in-process)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    transform = commands.add_parser("transform", help="Walsh transform of a signal file")
    transform.add_argument("--in", dest="infile", required=True, help="input signal file")
    transform.add_argument("--order", choices=["natural", "sequency"], default="sequency")
    transform.add_argument("--engine", choices=["classical", "quantum"], default="classical")
    transform.add_argument("--out", help="write index,value CSV here instead of stdout")
    transform.set_defaults(func=_cmd_transform)

    crossings = commands.add_parser("zero-crossings", help="sign changes of a signed parity sequence")
    crossings.add_argument("--n", type=int, required=True, help="word width in bits")
    crossings.add_argument("--s", type=int, required=True, help="word value")
    crossings.set_defaults(func=_cmd_zero_crossings)

    table1 = commands.add_parser("table1", help="all 3-bit words with crossing counts")
    table1.add_argument("--out", help="also write the table as CSV here")
    table1.set_defaults(func=_cmd_table1)

    band = commands.add_parser("band-energy", help="energy in a sequency band")
    band.add_argument("--in", dest="infile", required=True, help="input signal file")
    band.add_argument("--a", type=int, required=True, help="band start index")
    band.add_argument("--m", type=int, required=True, help="band width")
    band.add_argument(
        "--estimate",
        choices=["exact", "sampled", "mlqae"],
        default="exact",
        help="how to read out the band energy",
    )
    band.add_argument("--shots", type=int, default=1000)
    band.add_argument("--seed", type=int, default=None,
                      help=f"sampling seed (falls back to ${_ENV_SEED})")
    band.add_argument("--out", help="also write the JSON report here")
    band.set_defaults(func=_cmd_band_energy)

    repro = commands.add_parser("reproduce", help="run a reference scenario end to end")
    repro.add_argument("--scenario", choices=["dc", "edge", "alternating"], required=True)
    repro.add_argument("--out", required=True, help="output directory")
    repro.set_defaults(func=_cmd_reproduce)

    serve = commands.add_parser("serve", help="start the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(func=_cmd_serve)

    return parser


def _fail(error_type: str, message: str) -> int:
    sys.stderr.write(canonical_json({"error": error_type, "message": message}) + "\n")
    return 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ServiceFailure as exc:
        return _fail(exc.error_type, str(exc))
    except SeqlabError as exc:
        return _fail(type(exc).__name__, str(exc))
    except OSError as exc:
        return _fail("IOError", str(exc))
    except httpx.HTTPError as exc:
        return _fail("ConnectionError", str(exc))


if __name__ == "__main__":
    sys.exit(main())
