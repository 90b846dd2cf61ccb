"""Command-line front end.

``verify``, ``compute`` and ``factorize`` run in process by default; with
``--server URL`` they become thin HTTP clients of a running service instance
(see ``serve``).  Exit codes: 0 success, 1 verification failures, 2 input or
configuration errors.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import httpx

from .suite import (
    CHECK_ORDER,
    SuiteConfig,
    parse_budget,
    parse_checks,
    run_compute,
    run_factorize,
    run_suite,
    summarize,
)

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2


def _make_client(server: str) -> httpx.Client:
    # Tests monkeypatch this to splice in an in-memory transport.
    return httpx.Client(base_url=server, timeout=600.0)


def _post(server: str, path: str, payload: dict) -> dict:
    with _make_client(server) as client:
        response = client.post(path, json=payload)
    if response.status_code >= 400:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        raise ValueError(f"server rejected request: {detail}")
    return response.json()


def _fail_usage(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_USAGE)


def _read_payload(text: str) -> dict:
    if text.startswith("@"):
        try:
            text = Path(text[1:]).read_text(encoding="utf-8")
        except OSError as err:
            raise ValueError(f"cannot read payload file: {err}") from None
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as err:
        raise ValueError(f"payload is not valid JSON: {err}") from None
    if not isinstance(payload, dict):
        raise ValueError("payload must be a JSON object")
    return payload


@click.group()
def main() -> None:
    """Classifying simplicial sets of finite simplicial groups, with a verifier
    for the strong deformation retraction between the two constructions."""


@main.command()
@click.option("--fixture", required=True, help="Fixture URI (e.g. constant:C2) or JSON file path.")
@click.option("--max-dim", type=int, default=3, show_default=True, help="Top simplex dimension to verify.")
@click.option(
    "--budget",
    default="auto",
    show_default=True,
    help="auto | exhaustive | sampled | sampled:<count>.",
)
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for sampled enumeration.")
@click.option("--checks", default=None, help=f"Comma-separated subset of: {', '.join(CHECK_ORDER)}.")
@click.option("--report", "report_path", type=click.Path(dir_okay=False), default=None, help="Write the JSON report here.")
@click.option("--server", default=None, help="Delegate to a running service at this base URL.")
def verify(
    fixture: str,
    max_dim: int,
    budget: str,
    seed: int,
    checks: str | None,
    report_path: str | None,
    server: str | None,
) -> None:
    """Run the verification suite over a fixture."""
    try:
        if server:
            payload = {
                "fixture": fixture,
                "max_dim": max_dim,
                "budget": budget,
                "seed": seed,
                "checks": list(parse_checks(checks)),
            }
            report = _post(server, "/verify", payload)
        else:
            config = SuiteConfig(
                fixture=fixture,
                max_dim=max_dim,
                budget=parse_budget(budget, seed),
                checks=parse_checks(checks),
            )
            report = run_suite(config)
    except ValueError as err:
        _fail_usage(str(err))
        return
    for line in summarize(report):
        click.echo(line)
    if report_path:
        Path(report_path).write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")
        click.echo(f"report written to {report_path}")
    sys.exit(EXIT_OK if report["passed"] else EXIT_FAILURES)


@main.command()
@click.argument("map_name", metavar="MAP", type=click.Choice(["D", "S", "H", "wbar_action", "diag_action"]))
@click.option("--fixture", required=True, help="Fixture URI or JSON file path.")
@click.option("--input", "payload_text", required=True, help="Element payload as JSON text, or @file.")
@click.option("--operator", default=None, help='Monotone map literal "m->n:v0,...,vm" for the action maps.')
@click.option("--time", "time_index", type=int, default=None, help="Prism coordinate (tau index) for H.")
@click.option("--server", default=None, help="Delegate to a running service at this base URL.")
def compute(
    map_name: str,
    fixture: str,
    payload_text: str,
    operator: str | None,
    time_index: int | None,
    server: str | None,
) -> None:
    """Apply one of the named maps to an element and print the image."""
    try:
        payload = _read_payload(payload_text)
        if server:
            request = {
                "fixture": fixture,
                "map": map_name,
                "input": payload,
                "operator": operator,
                "time": time_index,
            }
            result = _post(server, "/compute", request)
        else:
            result = run_compute(fixture, map_name, payload, operator, time_index)
    except ValueError as err:
        _fail_usage(str(err))
        return
    click.echo(json.dumps(result["result"]))
    sys.exit(EXIT_OK)


@main.command()
@click.argument("map_text", metavar="MAP")
@click.option("--server", default=None, help="Delegate to a running service at this base URL.")
def factorize(map_text: str, server: str | None) -> None:
    """Print the canonical factorization of a textual monotone map."""
    try:
        if server:
            result = _post(server, "/factorize", {"map": map_text})
        else:
            result = run_factorize(map_text)
    except ValueError as err:
        _fail_usage(str(err))
        return
    click.echo(
        json.dumps(
            {
                "degeneracy_indices": result["degeneracy_indices"],
                "face_indices": result["face_indices"],
                "intermediate_dim": result["intermediate_dim"],
            }
        )
    )
    sys.exit(EXIT_OK)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("simpgrp.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
