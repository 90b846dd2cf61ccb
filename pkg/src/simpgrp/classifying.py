"""Classifying constructions for a truncated simplicial group G.

Four simplicial sets are realized concretely:

* the dimensionwise nerve NG, a bisimplicial set whose (p, q) entry is the
  q-fold tuple set over G_p (horizontal direction = group level p, vertical
  direction = tuple length q);
* its diagonal, with n-simplices the n-tuples over G_n;
* its total simplicial set, whose n-simplices are matched families
  (x_q in (NG)_{q, n-q})_q with componentwise d_q on x_q equal to the vertical
  d_0 of x_{q-1};
* the Kan classifying simplicial set, with n-simplices the tuples
  (g_j in G_j)_{j = n-1..0} and the twisted operator action through restricted
  monotone maps.

Tuples are stored in descending index order everywhere: position 0 holds the
highest-indexed entry.  Dimension 0 of each construction is a singleton,
represented by the empty tuple.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iter_product
from typing import Iterator

from .delta import MonotoneMap, all_monotone_maps, restrict, splitting
from .groups import FiniteGroup
from .reports import Budget, DEFAULT_BUDGET, VerificationReport, Witness, drive, merge_reports
from .simplicial import TruncatedSimplicialGroup


@dataclass(frozen=True, slots=True)
class NerveSimplex:
    """A length-q tuple over G_{group_level}; position t holds the entry of index q-1-t."""

    group_level: int
    entries: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.entries)

    def entry(self, index: int) -> int:
        """Entry at descending-order index (index 0 is the last position)."""
        return self.entries[len(self.entries) - 1 - index]


@dataclass(frozen=True, slots=True)
class DiagSimplex:
    """An n-simplex of the diagonal of the nerve: an n-tuple over G_n, stored descending."""

    dim: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.dim:
            raise ValueError(f"diagonal {self.dim}-simplex needs {self.dim} entries")

    def entry(self, index: int) -> int:
        return self.entries[self.dim - 1 - index]


@dataclass(frozen=True, slots=True)
class WBarSimplex:
    """An n-simplex of the Kan classifying simplicial set: position t holds g in G_{n-1-t}."""

    dim: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.dim:
            raise ValueError(f"classifying {self.dim}-simplex needs {self.dim} entries")

    def entry(self, index: int) -> int:
        return self.entries[self.dim - 1 - index]


@dataclass(frozen=True, slots=True)
class TotalSimplex:
    """An n-simplex of the total simplicial set: components (x_q)_{q = n..0}.

    Position t holds x_{n-t}, a tuple of length t over G_{n-t}.  Validity of
    the matching condition depends on the simplicial group and is checked by
    ``total_matching_violations``.
    """

    dim: int
    components: tuple[NerveSimplex, ...]

    def __post_init__(self) -> None:
        if len(self.components) != self.dim + 1:
            raise ValueError(f"total {self.dim}-simplex needs {self.dim + 1} components")
        for t, comp in enumerate(self.components):
            if comp.group_level != self.dim - t or comp.length != t:
                raise ValueError(
                    f"component {t} must be a length-{t} tuple at level {self.dim - t}"
                )

    def component(self, q: int) -> NerveSimplex:
        return self.components[self.dim - q]


def nerve_action(group: FiniteGroup, theta: MonotoneMap, x: NerveSimplex) -> NerveSimplex:
    """Act with theta on a nerve tuple: entry i of the result is the descending
    product of the entries with indices from (i+1)theta - 1 down to i*theta."""
    if x.length != theta.dst:
        raise ValueError(f"tuple has length {x.length}, operator expects {theta.dst}")
    mult = group.mult
    identity = group.identity
    values = theta.values
    n = theta.dst
    out = []
    for i in range(theta.src - 1, -1, -1):
        acc = identity
        for j in range(values[i + 1] - 1, values[i] - 1, -1):
            acc = mult[acc][x.entries[n - 1 - j]]
        out.append(acc)
    return NerveSimplex(x.group_level, tuple(out))


def bisimplicial_action(
    G: TruncatedSimplicialGroup, alpha: MonotoneMap, beta: MonotoneMap, x: NerveSimplex
) -> NerveSimplex:
    """Act with (alpha, beta) on the nerve of G: alpha moves every entry along the
    simplicial group (horizontal), then beta acts by nerve products (vertical)."""
    if x.group_level != alpha.dst:
        raise ValueError(f"entries live at level {x.group_level}, horizontal map expects {alpha.dst}")
    table = G.operator_table(alpha)
    moved = NerveSimplex(alpha.src, tuple(table[v] for v in x.entries))
    return nerve_action(G.levels[alpha.src], beta, moved)


def diag_action(G: TruncatedSimplicialGroup, theta: MonotoneMap, x: DiagSimplex) -> DiagSimplex:
    """The diagonal action: theta applied both horizontally and vertically."""
    if x.dim != theta.dst:
        raise ValueError(f"simplex has dimension {x.dim}, operator expects {theta.dst}")
    result = bisimplicial_action(G, theta, theta, NerveSimplex(x.dim, x.entries))
    return DiagSimplex(theta.src, result.entries)


def total_action(G: TruncatedSimplicialGroup, theta: MonotoneMap, x: TotalSimplex) -> TotalSimplex:
    """Act on a total simplex: component p comes from x_{p*theta} through the splitting at p."""
    if x.dim != theta.dst:
        raise ValueError(f"simplex has dimension {x.dim}, operator expects {theta.dst}")
    components = []
    for p in range(theta.src, -1, -1):
        lower, upper = splitting(theta, p)
        components.append(bisimplicial_action(G, lower, upper, x.component(theta.values[p])))
    return TotalSimplex(theta.src, tuple(components))


def total_matching_violations(G: TruncatedSimplicialGroup, x: TotalSimplex) -> list[int]:
    """Indices q where componentwise d_q of x_q differs from x_{q-1} with its
    lowest entry dropped; empty means the matching condition holds."""
    bad = []
    for q in range(x.dim, 0, -1):
        face = G.faces[q][q].image
        lhs = tuple(face[v] for v in x.component(q).entries)
        rhs = x.component(q - 1).entries[:-1]
        if lhs != rhs:
            bad.append(q)
    return bad


@lru_cache(maxsize=None)
def _front_inclusion(q: int, n: int) -> MonotoneMap:
    return MonotoneMap(q, n, tuple(range(q + 1)))


@lru_cache(maxsize=None)
def _shift_inclusion(q: int, n: int) -> MonotoneMap:
    return MonotoneMap(n - q, n, tuple(range(q, n + 1)))


def phi(G: TruncatedSimplicialGroup, x: DiagSimplex) -> TotalSimplex:
    """The comparison map from the diagonal to the total simplicial set.

    Component q applies the horizontal faces d_n..d_{q+1} and the vertical
    faces d_{q-1}..d_0; equivalently the front inclusion [q] -> [n] pairs with
    the q-shift [n-q] -> [n].
    """
    n = x.dim
    base = NerveSimplex(n, x.entries)
    components = []
    for q in range(n, -1, -1):
        components.append(
            bisimplicial_action(G, _front_inclusion(q, n), _shift_inclusion(q, n), base)
        )
    return TotalSimplex(n, tuple(components))


def wbar_action(G: TruncatedSimplicialGroup, theta: MonotoneMap, w: WBarSimplex) -> WBarSimplex:
    """The Kan classifying action: entry i multiplies, descending over j from
    (i+1)theta - 1 to i*theta, the entries g_j moved along theta restricted to [i] -> [j]."""
    if w.dim != theta.dst:
        raise ValueError(f"simplex has dimension {w.dim}, operator expects {theta.dst}")
    n = theta.dst
    values = theta.values
    out = []
    for i in range(theta.src - 1, -1, -1):
        group = G.levels[i]
        mult = group.mult
        acc = group.identity
        for j in range(values[i + 1] - 1, values[i] - 1, -1):
            moved = G.operator_table(restrict(theta, i, j))[w.entries[n - 1 - j]]
            acc = mult[acc][moved]
        out.append(acc)
    return WBarSimplex(theta.src, tuple(out))


def wbar_to_total(G: TruncatedSimplicialGroup, w: WBarSimplex) -> TotalSimplex:
    """The isomorphism onto the total simplicial set of the nerve: component q
    carries, at index r, the entry g_{q+r} pushed down by the faces q+r..q+1."""
    n = w.dim
    components = []
    for q in range(n, -1, -1):
        entries = []
        for r in range(n - q - 1, -1, -1):
            table = G.chain_table(q + r, q + r, q + 1, 0, -1)
            entries.append(table[w.entries[n - 1 - (q + r)]])
        components.append(NerveSimplex(q, tuple(entries)))
    return TotalSimplex(n, tuple(components))


def total_to_wbar(G: TruncatedSimplicialGroup, x: TotalSimplex) -> WBarSimplex:
    """Inverse of ``wbar_to_total``: entry q is the index-0 entry of component q."""
    n = x.dim
    out = []
    for q in range(n - 1, -1, -1):
        out.append(x.component(q).entries[-1])
    return WBarSimplex(n, tuple(out))


def wbar_count(G: TruncatedSimplicialGroup, n: int) -> int:
    total = 1
    for j in range(n):
        total *= G.levels[j].order
    return total


def diag_count(G: TruncatedSimplicialGroup, n: int) -> int:
    return G.levels[n].order ** n


def enumerate_level(
    G: TruncatedSimplicialGroup, kind: str, n: int, limit: int | None = None
) -> Iterator[WBarSimplex] | Iterator[DiagSimplex] | Iterator[TotalSimplex]:
    """All simplices of one construction at dimension n.

    Total simplices are produced through ``wbar_to_total`` (the bijection is
    itself under test; see ``enumerate_total_by_matching`` for the raw route).
    Raises if the count exceeds ``limit``.
    """
    G.require_level(n)
    if kind == "wbar":
        count = wbar_count(G, n)
    elif kind in ("diag", "total"):
        count = diag_count(G, n) if kind == "diag" else wbar_count(G, n)
    else:
        raise ValueError(f"unknown simplex kind {kind!r}")
    if limit is not None and count > limit:
        raise ValueError(f"enumeration of {count} {kind} simplices exceeds limit {limit}")
    if kind == "wbar":
        ranges = [range(G.levels[j].order) for j in range(n - 1, -1, -1)]
        return (WBarSimplex(n, combo) for combo in iter_product(*ranges))
    if kind == "diag":
        order = G.levels[n].order
        return (DiagSimplex(n, combo) for combo in iter_product(range(order), repeat=n))
    ranges = [range(G.levels[j].order) for j in range(n - 1, -1, -1)]
    return (wbar_to_total(G, WBarSimplex(n, combo)) for combo in iter_product(*ranges))


def random_wbar(G: TruncatedSimplicialGroup, n: int, rng: random.Random) -> WBarSimplex:
    return WBarSimplex(n, tuple(rng.randrange(G.levels[j].order) for j in range(n - 1, -1, -1)))


def random_diag(G: TruncatedSimplicialGroup, n: int, rng: random.Random) -> DiagSimplex:
    order = G.levels[n].order
    return DiagSimplex(n, tuple(rng.randrange(order) for _ in range(n)))


def raw_total_count(G: TruncatedSimplicialGroup, n: int) -> int:
    total = 1
    for q in range(n + 1):
        total *= G.levels[q].order ** (n - q)
    return total


def _raw_total_candidates(G: TruncatedSimplicialGroup, n: int) -> Iterator[TotalSimplex]:
    per_component = []
    for q in range(n, -1, -1):
        order = G.levels[q].order
        per_component.append(iter_product(range(order), repeat=n - q))
    for combo in iter_product(*[list(c) for c in per_component]):
        components = tuple(
            NerveSimplex(n - t, entries) for t, entries in enumerate(combo)
        )
        yield TotalSimplex(n, components)


def _random_raw_total(G: TruncatedSimplicialGroup, n: int, rng: random.Random) -> TotalSimplex:
    components = []
    for q in range(n, -1, -1):
        order = G.levels[q].order
        components.append(NerveSimplex(q, tuple(rng.randrange(order) for _ in range(n - q))))
    return TotalSimplex(n, tuple(components))


def enumerate_total_by_matching(
    G: TruncatedSimplicialGroup, n: int, limit: int | None = None
) -> Iterator[TotalSimplex]:
    """Brute-force the total simplicial set: filter all raw component tuples by
    the matching condition, independently of ``wbar_to_total``."""
    count = raw_total_count(G, n)
    if limit is not None and count > limit:
        raise ValueError(f"raw enumeration of {count} candidates exceeds limit {limit}")
    for candidate in _raw_total_candidates(G, n):
        if not total_matching_violations(G, candidate):
            yield candidate


def wbar_to_json(w: WBarSimplex) -> dict:
    return {"dim": w.dim, "entries": list(w.entries)}


def diag_to_json(x: DiagSimplex) -> dict:
    return {"dim": x.dim, "entries": list(x.entries)}


def total_to_json(x: TotalSimplex) -> dict:
    return {"dim": x.dim, "components": [list(c.entries) for c in x.components]}


def _tuple_payload(payload: dict, kind: str) -> tuple[int, tuple[int, ...]]:
    if not isinstance(payload, dict) or "dim" not in payload or "entries" not in payload:
        raise ValueError(f"{kind} payload must be an object with 'dim' and 'entries'")
    dim = int(payload["dim"])
    entries = tuple(int(v) for v in payload["entries"])
    if len(entries) != dim:
        raise ValueError(f"{kind} payload needs {dim} entries, got {len(entries)}")
    return dim, entries


def wbar_from_json(payload: dict, G: TruncatedSimplicialGroup) -> WBarSimplex:
    """Parse and validate a classifying simplex against a simplicial group."""
    dim, entries = _tuple_payload(payload, "classifying simplex")
    G.require_level(dim)
    for t, v in enumerate(entries):
        level = dim - 1 - t
        if not 0 <= v < G.levels[level].order:
            raise ValueError(f"entry {v} outside G_{level} of order {G.levels[level].order}")
    return WBarSimplex(dim, entries)


def diag_from_json(payload: dict, G: TruncatedSimplicialGroup) -> DiagSimplex:
    """Parse and validate a diagonal simplex against a simplicial group."""
    dim, entries = _tuple_payload(payload, "diagonal simplex")
    G.require_level(dim)
    order = G.levels[dim].order
    for v in entries:
        if not 0 <= v < order:
            raise ValueError(f"entry {v} outside G_{dim} of order {order}")
    return DiagSimplex(dim, entries)


_wbar_json = wbar_to_json
_total_json = total_to_json


def verify_iso(
    G: TruncatedSimplicialGroup,
    n: int,
    budget: Budget = DEFAULT_BUDGET,
    fixture: str | None = None,
    max_map_dim: int = 3,
) -> VerificationReport:
    """Certify that the classifying simplicial set and the total simplicial set of
    the nerve are isomorphic at dimension n.

    Three instance families are driven: round trips (with the matching condition
    on images), operator equivariance for every monotone map into [n] with
    source at most ``max_map_dim``, and agreement of the raw matching-condition
    enumeration with the image of ``wbar_to_total``.
    """
    name = fixture if fixture is not None else G.label
    parts = []

    def eval_roundtrip(w: WBarSimplex) -> Witness | None:
        image = wbar_to_total(G, w)
        violations = total_matching_violations(G, image)
        if violations:
            return Witness(_wbar_json(w), "matching condition of image", violations, [])
        back = total_to_wbar(G, image)
        if back != w:
            return Witness(_wbar_json(w), "round trip through total", _wbar_json(back), _wbar_json(w))
        return None

    parts.append(
        drive(
            "iso",
            name,
            n,
            wbar_count(G, n),
            lambda: enumerate_level(G, "wbar", n),
            lambda rng: random_wbar(G, n, rng),
            eval_roundtrip,
            budget,
        )
    )

    maps = [
        theta
        for src in range(min(max_map_dim, G.max_level) + 1)
        for theta in all_monotone_maps(src, n)
    ]

    def eval_equivariance(instance: tuple[MonotoneMap, WBarSimplex]) -> Witness | None:
        theta, w = instance
        lhs = wbar_to_total(G, wbar_action(G, theta, w))
        rhs = total_action(G, theta, wbar_to_total(G, w))
        if lhs != rhs:
            return Witness(_wbar_json(w), f"wbar_to_total along {theta}", _total_json(lhs), _total_json(rhs))
        back_lhs = total_to_wbar(G, rhs)
        back_rhs = wbar_action(G, theta, w)
        if back_lhs != back_rhs:
            return Witness(
                _wbar_json(w), f"total_to_wbar along {theta}", _wbar_json(back_lhs), _wbar_json(back_rhs)
            )
        return None

    def equivariance_instances() -> Iterator[tuple[MonotoneMap, WBarSimplex]]:
        for theta in maps:
            for w in enumerate_level(G, "wbar", n):
                yield theta, w

    parts.append(
        drive(
            "iso",
            name,
            n,
            len(maps) * wbar_count(G, n),
            equivariance_instances,
            lambda rng: (maps[rng.randrange(len(maps))], random_wbar(G, n, rng)),
            eval_equivariance,
            budget,
        )
    )

    def eval_raw(candidate: TotalSimplex) -> Witness | None:
        matches = not total_matching_violations(G, candidate)
        back = wbar_to_total(G, total_to_wbar(G, candidate))
        in_image = back == candidate
        if matches != in_image:
            return Witness(
                _total_json(candidate),
                "matching condition vs image membership",
                matches,
                in_image,
            )
        return None

    parts.append(
        drive(
            "iso",
            name,
            n,
            raw_total_count(G, n),
            lambda: _raw_total_candidates(G, n),
            lambda rng: _random_raw_total(G, n, rng),
            eval_raw,
            budget,
        )
    )

    return merge_reports("iso", name, n, parts)
