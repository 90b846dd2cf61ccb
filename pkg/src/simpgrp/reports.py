"""Verification reports and the exhaustive-or-sampled enumeration driver."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator

# A check stops collecting witnesses after this many failures; the attempted
# count then reflects only the instances actually evaluated, so the report
# invariant passed + len(failures) == attempted still holds.
FAILURE_STOP = 10_000


@dataclass(frozen=True, slots=True)
class Witness:
    """One failing instance: the input, the operator involved, and both sides."""

    input: Any
    operator: str
    lhs: Any
    rhs: Any

    def to_json(self) -> dict:
        return {"input": self.input, "operator": self.operator, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class VerificationReport:
    check: str
    fixture: str
    dim: int
    attempted: int
    passed: int
    seed: int | None
    failures: tuple[Witness, ...] = field(default_factory=tuple)

    @property
    def failed(self) -> int:
        return len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "fixture": self.fixture,
            "dim": self.dim,
            "attempted": self.attempted,
            "passed": self.passed,
            "seed": self.seed,
            "failures": [w.to_json() for w in self.failures],
        }


@dataclass(frozen=True, slots=True)
class Budget:
    """Enumeration policy for a single check at a single dimension.

    ``auto`` enumerates exhaustively while the instance space stays within
    ``exhaustive_cap`` and falls back to seeded uniform sampling above it;
    ``exhaustive`` and ``sampled`` force one behaviour.
    """

    mode: str = "auto"
    exhaustive_cap: int = 1_000_000
    sample_count: int = 100_000
    seed: int = 0

    def __post_init__(self) -> None:
        if self.mode not in ("auto", "exhaustive", "sampled"):
            raise ValueError(f"unknown budget mode {self.mode!r}")

    def wants_sampling(self, total: int) -> bool:
        if self.mode == "exhaustive":
            return False
        if self.mode == "sampled":
            return True
        return total > self.exhaustive_cap


DEFAULT_BUDGET = Budget()


def drive(
    check: str,
    fixture: str,
    dim: int,
    total: int,
    instances: Callable[[], Iterable[Any]],
    sample: Callable[[random.Random], Any],
    evaluate: Callable[[Any], Witness | None],
    budget: Budget = DEFAULT_BUDGET,
) -> VerificationReport:
    """Run one check over its instance space, exhaustively or by seeded sampling."""
    if budget.wants_sampling(total):
        seed: int | None = budget.seed
        rng = random.Random(budget.seed)
        stream: Iterator[Any] = (sample(rng) for _ in range(budget.sample_count))
    else:
        seed = None
        stream = iter(instances())
    attempted = 0
    passed = 0
    failures: list[Witness] = []
    for instance in stream:
        attempted += 1
        witness = evaluate(instance)
        if witness is None:
            passed += 1
        else:
            failures.append(witness)
            if len(failures) >= FAILURE_STOP:
                break
    return VerificationReport(check, fixture, dim, attempted, passed, seed, tuple(failures))


def merge_reports(check: str, fixture: str, dim: int, parts: Iterable[VerificationReport]) -> VerificationReport:
    """Fold sub-reports of one logical check into a single record."""
    attempted = passed = 0
    seed: int | None = None
    failures: list[Witness] = []
    for part in parts:
        attempted += part.attempted
        passed += part.passed
        if seed is None:
            seed = part.seed
        failures.extend(part.failures)
    return VerificationReport(check, fixture, dim, attempted, passed, seed, tuple(failures))
