"""Suite orchestration: run selected checks over a fixture and aggregate reports.

These functions are the shared service layer; the HTTP endpoints and the CLI
are both thin wrappers around them.  Input and configuration problems raise
``ValueError`` (callers map this to exit code 2 / HTTP 400); verification
failures are regular report content.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timezone

from .classifying import (
    diag_from_json,
    diag_to_json,
    verify_iso,
    wbar_from_json,
    wbar_to_json,
)
from .delta import factorize, parse_map, tau
from .fixtures import build_fixture, is_fixture_uri, load_fixture, naturality_morphisms, resolve_fixture_path
from .reports import Budget, VerificationReport
from .retract import (
    HomotopyInput,
    coretraction_S,
    homotopy_H,
    retraction_D,
    verify_constant_along_S,
    verify_homotopy_endpoints,
    verify_naturality,
    verify_phi_factorization,
    verify_retraction_identity,
    verify_simplicial_map,
)
from .simplicial import check_simplicial_identities, simplicial_group_from_json, verify_functoriality
from .classifying import diag_action, wbar_action

SCHEMA_VERSION = 1

CHECK_ORDER = (
    "identities",
    "functoriality",
    "iso",
    "phi",
    "retraction",
    "simplicial_maps",
    "endpoints",
    "constancy",
    "naturality",
)

# Equivariance sweeps and functoriality enumerate full map spaces; beyond this
# source/target dimension the instance counts dwarf what they add.
MAP_DIM_CAP = 3


@dataclass(frozen=True)
class SuiteConfig:
    fixture: str
    max_dim: int = 3
    budget: Budget = field(default_factory=Budget)
    checks: tuple[str, ...] = CHECK_ORDER

    def __post_init__(self) -> None:
        unknown = [c for c in self.checks if c not in CHECK_ORDER]
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(unknown)} (valid: {', '.join(CHECK_ORDER)})")
        if self.max_dim < 0:
            raise ValueError("max_dim must be non-negative")


def parse_budget(mode: str, seed: int = 0, sample_count: int | None = None) -> Budget:
    """Parse a budget flag: ``auto``, ``exhaustive``, ``sampled`` or ``sampled:<count>``."""
    text = mode.strip()
    if text.startswith("sampled:"):
        count = int(text[len("sampled:") :])
        return Budget(mode="sampled", sample_count=count, seed=seed)
    if text == "sampled" and sample_count is not None:
        return Budget(mode="sampled", sample_count=sample_count, seed=seed)
    if text in ("auto", "exhaustive", "sampled"):
        return Budget(mode=text, seed=seed)
    raise ValueError(f"unknown budget {mode!r}")


def parse_checks(text: str | None) -> tuple[str, ...]:
    if text is None or text.strip() in ("", "all"):
        return CHECK_ORDER
    wanted = tuple(part.strip() for part in text.split(",") if part.strip())
    config_order = tuple(c for c in CHECK_ORDER if c in wanted)
    unknown = [c for c in wanted if c not in CHECK_ORDER]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)} (valid: {', '.join(CHECK_ORDER)})")
    return config_order


def run_suite(config: SuiteConfig) -> dict:
    """Run the selected checks in dependency order and return the aggregate report."""
    G, fixture_name = load_fixture(config.fixture, config.max_dim, require_identities=False)
    budget = config.budget
    dims = range(config.max_dim + 1)
    map_dim = min(config.max_dim, MAP_DIM_CAP)
    reports: list[VerificationReport] = []
    for check in CHECK_ORDER:
        if check not in config.checks:
            continue
        if check == "identities":
            reports.append(check_simplicial_identities(G, fixture_name))
        elif check == "functoriality":
            reports.append(verify_functoriality(G, map_dim, budget, fixture_name))
        elif check == "iso":
            for n in dims:
                reports.append(verify_iso(G, n, budget, fixture_name, max_map_dim=map_dim))
        elif check == "phi":
            for n in dims:
                reports.append(verify_phi_factorization(G, n, budget, fixture_name))
        elif check == "retraction":
            for n in dims:
                reports.append(verify_retraction_identity(G, n, budget, fixture_name))
        elif check == "simplicial_maps":
            for which in ("D", "S", "H"):
                for n in dims:
                    reports.append(verify_simplicial_map(G, which, n, budget, fixture_name))
        elif check == "endpoints":
            for n in dims:
                reports.append(verify_homotopy_endpoints(G, n, budget, fixture_name))
        elif check == "constancy":
            for n in dims:
                reports.append(verify_constant_along_S(G, n, budget, fixture_name))
        elif check == "naturality":
            for label, morphism, target in naturality_morphisms(G, fixture_name):
                for n in dims:
                    report = verify_naturality(G, target, morphism, n, budget, fixture_name)
                    reports.append(
                        VerificationReport(
                            f"naturality[{label}]",
                            report.fixture,
                            report.dim,
                            report.attempted,
                            report.passed,
                            report.seed,
                            report.failures,
                        )
                    )
    failures_total = sum(r.failed for r in reports)
    return {
        "schema_version": SCHEMA_VERSION,
        "fixture": fixture_name,
        "max_dim": config.max_dim,
        "budget": {
            "mode": budget.mode,
            "exhaustive_cap": budget.exhaustive_cap,
            "sample_count": budget.sample_count,
            "seed": budget.seed,
        },
        "checks": [r.to_json() for r in reports],
        "attempted_total": sum(r.attempted for r in reports),
        "failures_total": failures_total,
        "passed": failures_total == 0,
        "generated_at": datetime.now(timezone.utc).isoformat(),
    }


def summarize(report: dict) -> list[str]:
    """Human-readable one-line-per-check summary of an aggregate report."""
    lines = []
    for check in report["checks"]:
        mode = "sampled" if check["seed"] is not None else "exhaustive"
        status = "ok" if not check["failures"] else f"{len(check['failures'])} FAILURES"
        lines.append(
            f"{check['check']:<24} dim={check['dim']}  attempted={check['attempted']:<9} "
            f"mode={mode:<10} {status}"
        )
    verdict = "PASS" if report["passed"] else "FAIL"
    lines.append(
        f"{verdict}: fixture={report['fixture']} max_dim={report['max_dim']} "
        f"attempted={report['attempted_total']} failures={report['failures_total']}"
    )
    return lines


COMPUTE_MAPS = ("D", "S", "H", "wbar_action", "diag_action")


def _load_for_compute(fixture: str, needed_level: int):
    if is_fixture_uri(fixture):
        return build_fixture(fixture, needed_level), fixture
    import json as _json

    path = resolve_fixture_path(fixture)
    try:
        payload = _json.loads(path.read_text(encoding="utf-8"))
    except _json.JSONDecodeError as err:
        raise ValueError(f"fixture file {path} is not valid JSON: {err}") from None
    G = simplicial_group_from_json(payload, require_identities=True)
    if G.max_level < needed_level:
        raise ValueError(f"fixture truncation {G.max_level} too small; need level {needed_level}")
    return G, str(path)


def run_compute(
    fixture: str,
    map_name: str,
    payload: dict,
    operator: str | None = None,
    time: int | None = None,
) -> dict:
    """Evaluate one of the named maps on a JSON element payload."""
    if map_name not in COMPUTE_MAPS:
        raise ValueError(f"unknown map {map_name!r}, expected one of {', '.join(COMPUTE_MAPS)}")
    if not isinstance(payload, dict) or "dim" not in payload:
        raise ValueError("element payload must be an object with a 'dim' field")
    dim = int(payload["dim"])
    theta = None
    if map_name in ("wbar_action", "diag_action"):
        if operator is None:
            raise ValueError(f"{map_name} needs an operator (textual monotone map)")
        theta = parse_map(operator)
        if theta.dst != dim:
            raise ValueError(f"operator {operator} expects dimension {theta.dst}, payload has {dim}")
    if map_name == "H":
        if time is None:
            raise ValueError("H needs a prism coordinate: --time <tau index>")
        if not 0 <= time <= dim + 1:
            raise ValueError(f"tau index {time} outside [0, {dim + 1}]")
    needed = max(dim, theta.src) if theta is not None else dim
    G, fixture_name = _load_for_compute(fixture, needed)

    if map_name == "D":
        result = wbar_to_json(retraction_D(G, diag_from_json(payload, G)))
        kind = "wbar"
    elif map_name == "S":
        result = diag_to_json(coretraction_S(G, wbar_from_json(payload, G)))
        kind = "diag"
    elif map_name == "H":
        x = diag_from_json(payload, G)
        result = diag_to_json(homotopy_H(G, HomotopyInput(x, tau(dim, time))))
        kind = "diag"
    elif map_name == "wbar_action":
        result = wbar_to_json(wbar_action(G, theta, wbar_from_json(payload, G)))
        kind = "wbar"
    else:
        result = diag_to_json(diag_action(G, theta, diag_from_json(payload, G)))
        kind = "diag"
    return {"map": map_name, "fixture": fixture_name, "kind": kind, "result": result}


def run_factorize(map_text: str) -> dict:
    """Canonical factorization of a textual monotone map."""
    theta = parse_map(map_text)
    decomposition = factorize(theta)
    return {
        "map": map_text.strip(),
        "degeneracy_indices": list(decomposition.degeneracy_indices),
        "face_indices": list(decomposition.face_indices),
        "intermediate_dim": decomposition.intermediate_dim,
    }
