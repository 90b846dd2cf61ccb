"""The retraction from the diagonal nerve onto the Kan classifying simplicial
set, its coretraction, and the interpolating simplicial homotopy.

All three maps are given by explicit product formulas over face/degeneracy
composites.  Intervals follow the package conventions: descending products run
from the high index down, ascending products up, and empty products are the
group identity.  The verify_* operations machine-check the defining identities
over enumerated (or budget-sampled) instance spaces.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .delta import Delta1Simplex, MonotoneMap, apply_operator_to_tau, coface, codegeneracy, tau
from .classifying import (
    DiagSimplex,
    WBarSimplex,
    diag_action,
    diag_count,
    enumerate_level,
    phi,
    random_diag,
    random_wbar,
    total_to_wbar,
    wbar_action,
    wbar_count,
)
from .groups import GroupHom
from .reports import Budget, DEFAULT_BUDGET, VerificationReport, Witness, drive
from .simplicial import SimplicialMorphism, TruncatedSimplicialGroup


@dataclass(frozen=True, slots=True)
class HomotopyInput:
    """A diagonal simplex together with a prism coordinate of the same dimension."""

    simplex: DiagSimplex
    time: Delta1Simplex

    def __post_init__(self) -> None:
        if self.simplex.dim != self.time.dim:
            raise ValueError(
                f"simplex dimension {self.simplex.dim} differs from prism dimension {self.time.dim}"
            )


def retraction_D(G: TruncatedSimplicialGroup, x: DiagSimplex) -> WBarSimplex:
    """Send an n-tuple over G_n to the classifying simplex whose entry i is the
    image of entry i under the face composite d_n d_{n-1} ... d_{i+1}."""
    n = x.dim
    G.require_level(n)
    out = []
    for position in range(n):
        i = n - 1 - position
        table = G.chain_table(n, n, i + 1, 0, -1)
        out.append(table[x.entries[position]])
    return WBarSimplex(n, tuple(out))


def _coretraction_entries(G: TruncatedSimplicialGroup, n: int, entries: Sequence[int]) -> list[int]:
    """Entries of the coretraction image, indexed by descending position.

    The value at index i is assembled by descending recursion: first the
    ascending product of the already-computed values y_j (inverted, pushed down
    by the faces j..i+1 and back up by the degeneracies i..j-1), then the
    descending product of the inputs g_j (faces j..i+1, degeneracies i..n-1).
    """
    group = G.levels[n]
    mult = group.mult
    inverse = group.inverse
    y = [0] * n
    for i in range(n - 1, -1, -1):
        acc = group.identity
        for j in range(i + 1, n):
            table = G.chain_table(n, j, i + 1, i, j - 1)
            acc = mult[acc][table[inverse[y[j]]]]
        for j in range(n - 1, i - 1, -1):
            table = G.chain_table(j, j, i + 1, i, n - 1)
            acc = mult[acc][table[entries[n - 1 - j]]]
        y[i] = acc
    return y


def coretraction_S(G: TruncatedSimplicialGroup, w: WBarSimplex) -> DiagSimplex:
    """The section of the retraction: classifying simplices back into the diagonal."""
    n = w.dim
    G.require_level(n)
    y = _coretraction_entries(G, n, w.entries)
    return DiagSimplex(n, tuple(y[n - 1 - position] for position in range(n)))


def _homotopy_entries(
    G: TruncatedSimplicialGroup, n: int, entries: Sequence[int], tau_index: int
) -> tuple[int, ...]:
    # With k = n + 1 - tau_index: entries with index >= k - 1 pass through
    # unchanged; below that the coretraction-style recursion applies, with the
    # input factors all pushed through the fixed composite (faces k-1..i+1,
    # degeneracies i..k-2).
    k = n + 1 - tau_index
    if k <= 1:
        return tuple(entries)
    group = G.levels[n]
    mult = group.mult
    inverse = group.inverse
    y = [0] * n
    for j in range(k - 1, n):
        y[j] = entries[n - 1 - j]
    for i in range(k - 2, -1, -1):
        acc = group.identity
        for j in range(i + 1, k - 1):
            table = G.chain_table(n, j, i + 1, i, j - 1)
            acc = mult[acc][table[inverse[y[j]]]]
        fixed = G.chain_table(n, k - 1, i + 1, i, k - 2)
        for j in range(k - 2, i - 1, -1):
            acc = mult[acc][fixed[entries[n - 1 - j]]]
        y[i] = acc
    return tuple(y[n - 1 - position] for position in range(n))


def homotopy_H(G: TruncatedSimplicialGroup, inp: HomotopyInput) -> DiagSimplex:
    """The simplicial homotopy from the retraction round trip to the identity.

    At the prism coordinate with tau index 0 this is the coretraction of the
    retraction; at tau index n+1 it is the identity.
    """
    n = inp.simplex.dim
    G.require_level(n)
    return DiagSimplex(n, _homotopy_entries(G, n, inp.simplex.entries, inp.time.k))


def _diag_json(x: DiagSimplex) -> dict:
    return {"dim": x.dim, "entries": list(x.entries)}


def _wbar_json(w: WBarSimplex) -> dict:
    return {"dim": w.dim, "entries": list(w.entries)}


def verify_retraction_identity(
    G: TruncatedSimplicialGroup,
    n: int,
    budget: Budget = DEFAULT_BUDGET,
    fixture: str | None = None,
) -> VerificationReport:
    """Coretraction followed by retraction is the identity on every classifying simplex."""
    name = fixture if fixture is not None else G.label
    G.require_level(n)

    def evaluate(w: WBarSimplex) -> Witness | None:
        back = retraction_D(G, coretraction_S(G, w))
        if back == w:
            return None
        return Witness(_wbar_json(w), "S then D", _wbar_json(back), _wbar_json(w))

    return drive(
        "retraction",
        name,
        n,
        wbar_count(G, n),
        lambda: enumerate_level(G, "wbar", n),
        lambda rng: random_wbar(G, n, rng),
        evaluate,
        budget,
    )


def _operators(n: int) -> list[tuple[str, MonotoneMap]]:
    """All elementary operators at dimension n: faces to n-1, degeneracies to n+1."""
    ops: list[tuple[str, MonotoneMap]] = []
    if n >= 1:
        ops.extend((f"d_{k}", coface(n, k)) for k in range(n + 1))
    ops.extend((f"s_{k}", codegeneracy(n, k)) for k in range(n + 1))
    return ops


def verify_simplicial_map(
    G: TruncatedSimplicialGroup,
    which: str,
    n: int,
    budget: Budget = DEFAULT_BUDGET,
    fixture: str | None = None,
) -> VerificationReport:
    """Check that D, S, or H commutes with every face and degeneracy at dimension n.

    Operators act diagonally on simplices; for H they additionally move the
    prism coordinate by composition.  The degeneracy direction requires the
    truncation to reach n+1.
    """
    name = fixture if fixture is not None else G.label
    G.require_level(n + 1)
    ops = _operators(n)
    if which == "D":

        def evaluate(instance: tuple[DiagSimplex, tuple[str, MonotoneMap]]) -> Witness | None:
            x, (label, theta) = instance
            lhs = retraction_D(G, diag_action(G, theta, x))
            rhs = wbar_action(G, theta, retraction_D(G, x))
            if lhs == rhs:
                return None
            return Witness(_diag_json(x), label, _wbar_json(lhs), _wbar_json(rhs))

        def instances() -> Iterator[tuple]:
            for x in enumerate_level(G, "diag", n):
                for op in ops:
                    yield x, op

        def sample(rng: random.Random) -> tuple:
            return random_diag(G, n, rng), ops[rng.randrange(len(ops))]

        total = diag_count(G, n) * len(ops)
    elif which == "S":

        def evaluate(instance: tuple[WBarSimplex, tuple[str, MonotoneMap]]) -> Witness | None:
            w, (label, theta) = instance
            lhs = coretraction_S(G, wbar_action(G, theta, w))
            rhs = diag_action(G, theta, coretraction_S(G, w))
            if lhs == rhs:
                return None
            return Witness(_wbar_json(w), label, _diag_json(lhs), _diag_json(rhs))

        def instances() -> Iterator[tuple]:
            for w in enumerate_level(G, "wbar", n):
                for op in ops:
                    yield w, op

        def sample(rng: random.Random) -> tuple:
            return random_wbar(G, n, rng), ops[rng.randrange(len(ops))]

        total = wbar_count(G, n) * len(ops)
    elif which == "H":

        def evaluate(instance: tuple[DiagSimplex, int, tuple[str, MonotoneMap]]) -> Witness | None:
            x, tau_index, (label, theta) = instance
            time = tau(n, tau_index)
            moved_time = apply_operator_to_tau(time, theta)
            lhs = homotopy_H(G, HomotopyInput(diag_action(G, theta, x), moved_time))
            rhs = diag_action(G, theta, homotopy_H(G, HomotopyInput(x, time)))
            if lhs == rhs:
                return None
            witness_input = {"simplex": _diag_json(x), "tau": tau_index}
            return Witness(witness_input, label, _diag_json(lhs), _diag_json(rhs))

        def instances() -> Iterator[tuple]:
            for x in enumerate_level(G, "diag", n):
                for tau_index in range(n + 2):
                    for op in ops:
                        yield x, tau_index, op

        def sample(rng: random.Random) -> tuple:
            return random_diag(G, n, rng), rng.randrange(n + 2), ops[rng.randrange(len(ops))]

        total = diag_count(G, n) * (n + 2) * len(ops)
    else:
        raise ValueError(f"unknown map {which!r}, expected 'D', 'S' or 'H'")

    return drive(
        f"simplicial_maps[{which}]", name, n, total, instances, sample, evaluate, budget
    )


def verify_homotopy_endpoints(
    G: TruncatedSimplicialGroup,
    n: int,
    budget: Budget = DEFAULT_BUDGET,
    fixture: str | None = None,
) -> VerificationReport:
    """At tau index n+1 the homotopy is the identity; at tau index 0 it is the
    coretraction of the retraction."""
    name = fixture if fixture is not None else G.label
    G.require_level(n)

    def evaluate(instance: tuple[DiagSimplex, str]) -> Witness | None:
        x, law = instance
        if law == "ins1":
            lhs = homotopy_H(G, HomotopyInput(x, tau(n, n + 1)))
            rhs = x
        else:
            lhs = homotopy_H(G, HomotopyInput(x, tau(n, 0)))
            rhs = coretraction_S(G, retraction_D(G, x))
        if lhs == rhs:
            return None
        return Witness(_diag_json(x), law, _diag_json(lhs), _diag_json(rhs))

    def instances() -> Iterator[tuple[DiagSimplex, str]]:
        for x in enumerate_level(G, "diag", n):
            yield x, "ins1"
            yield x, "ins0"

    def sample(rng: random.Random) -> tuple[DiagSimplex, str]:
        return random_diag(G, n, rng), ("ins1", "ins0")[rng.randrange(2)]

    return drive(
        "endpoints", name, n, 2 * diag_count(G, n), instances, sample, evaluate, budget
    )


def verify_constant_along_S(
    G: TruncatedSimplicialGroup,
    n: int,
    budget: Budget = DEFAULT_BUDGET,
    fixture: str | None = None,
) -> VerificationReport:
    """The homotopy fixes the image of the coretraction at every prism coordinate."""
    name = fixture if fixture is not None else G.label
    G.require_level(n)

    def evaluate(instance: tuple[WBarSimplex, int]) -> Witness | None:
        w, tau_index = instance
        fixed = coretraction_S(G, w)
        moved = homotopy_H(G, HomotopyInput(fixed, tau(n, tau_index)))
        if moved == fixed:
            return None
        return Witness(
            {"simplex": _wbar_json(w), "tau": tau_index},
            f"H at tau^{tau_index}",
            _diag_json(moved),
            _diag_json(fixed),
        )

    def instances() -> Iterator[tuple[WBarSimplex, int]]:
        for w in enumerate_level(G, "wbar", n):
            for tau_index in range(n + 2):
                yield w, tau_index

    def sample(rng: random.Random) -> tuple[WBarSimplex, int]:
        return random_wbar(G, n, rng), rng.randrange(n + 2)

    return drive(
        "constancy", name, n, (n + 2) * wbar_count(G, n), instances, sample, evaluate, budget
    )


def verify_phi_factorization(
    G: TruncatedSimplicialGroup,
    n: int,
    budget: Budget = DEFAULT_BUDGET,
    fixture: str | None = None,
) -> VerificationReport:
    """The comparison map into the total simplicial set, read back through the
    isomorphism, is exactly the retraction."""
    name = fixture if fixture is not None else G.label
    G.require_level(n)

    def evaluate(x: DiagSimplex) -> Witness | None:
        lhs = total_to_wbar(G, phi(G, x))
        rhs = retraction_D(G, x)
        if lhs == rhs:
            return None
        return Witness(_diag_json(x), "total_to_wbar of phi", _wbar_json(lhs), _wbar_json(rhs))

    return drive(
        "phi",
        name,
        n,
        diag_count(G, n),
        lambda: enumerate_level(G, "diag", n),
        lambda rng: random_diag(G, n, rng),
        evaluate,
        budget,
    )


def induced_wbar(morphism: SimplicialMorphism, w: WBarSimplex) -> WBarSimplex:
    """Apply a simplicial-group morphism entrywise to a classifying simplex."""
    n = w.dim
    return WBarSimplex(
        n, tuple(morphism.homs[n - 1 - t].image[v] for t, v in enumerate(w.entries))
    )


def induced_diag(morphism: SimplicialMorphism, x: DiagSimplex) -> DiagSimplex:
    """Apply a simplicial-group morphism entrywise to a diagonal simplex."""
    table = morphism.homs[x.dim].image
    return DiagSimplex(x.dim, tuple(table[v] for v in x.entries))


def verify_naturality(
    G: TruncatedSimplicialGroup,
    target: TruncatedSimplicialGroup,
    hom: SimplicialMorphism | Sequence[GroupHom],
    n: int,
    budget: Budget = DEFAULT_BUDGET,
    fixture: str | None = None,
) -> VerificationReport:
    """The retraction and coretraction commute with the maps a simplicial-group
    morphism induces on both constructions."""
    morphism = hom if isinstance(hom, SimplicialMorphism) else SimplicialMorphism(G, target, hom)
    if morphism.source.levels != G.levels or morphism.target.levels != target.levels:
        raise ValueError("morphism endpoints do not match the given simplicial groups")
    name = fixture if fixture is not None else G.label
    G.require_level(n)
    target.require_level(n)

    def evaluate(instance: tuple[str, object]) -> Witness | None:
        law, simplex = instance
        if law == "S":
            w = simplex
            lhs = induced_diag(morphism, coretraction_S(G, w))
            rhs = coretraction_S(target, induced_wbar(morphism, w))
            if lhs == rhs:
                return None
            return Witness(_wbar_json(w), "S naturality", _diag_json(lhs), _diag_json(rhs))
        x = simplex
        lhs_w = induced_wbar(morphism, retraction_D(G, x))
        rhs_w = retraction_D(target, induced_diag(morphism, x))
        if lhs_w == rhs_w:
            return None
        return Witness(_diag_json(x), "D naturality", _wbar_json(lhs_w), _wbar_json(rhs_w))

    def instances() -> Iterator[tuple[str, object]]:
        for w in enumerate_level(G, "wbar", n):
            yield "S", w
        for x in enumerate_level(G, "diag", n):
            yield "D", x

    def sample(rng: random.Random) -> tuple[str, object]:
        if rng.randrange(2):
            return "S", random_wbar(G, n, rng)
        return "D", random_diag(G, n, rng)

    total = wbar_count(G, n) + diag_count(G, n)
    return drive("naturality", name, n, total, instances, sample, evaluate, budget)
