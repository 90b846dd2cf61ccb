"""Truncated simplicial groups as explicit level/face/degeneracy tables.

Operators act on the right: in ``compose(theta, psi)`` the inner map ``psi``
(the one landing at the element's level) acts first.  Face composites
``d_hi d_{hi-1} ... d_lo`` descend one level per step; degeneracy composites
``s_lo s_{lo+1} ... s_hi`` ascend.  Anything that would leave the truncation
raises ``TruncationError`` instead of clamping.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .delta import MonotoneMap, all_monotone_maps, compose, factorize
from .groups import (
    FiniteGroup,
    GroupHom,
    direct_product,
    identity_hom,
    group_from_json,
    group_to_json,
    hom_from_json,
    hom_to_json,
    product_decode,
    product_encode,
)
from .reports import Budget, DEFAULT_BUDGET, VerificationReport, Witness, drive


class TruncationError(ValueError):
    """An operation needs a simplicial level beyond the stored truncation."""


@dataclass(frozen=True, slots=True)
class LeveledElement:
    """An element of G_level, carried with its level."""

    level: int
    value: int


class TruncatedSimplicialGroup:
    """Levels G_0..G_N with face and degeneracy homomorphism tables.

    ``faces[n][k]`` is d_k: G_n -> G_{n-1} (n in [1, N]), ``degeneracies[n][k]``
    is s_k: G_n -> G_{n+1} (n in [0, N-1]).  Values are immutable after
    construction; composite-operator tables are memoized internally.
    """

    __slots__ = ("max_level", "levels", "faces", "degeneracies", "label", "_chain_cache", "_op_cache")

    def __init__(
        self,
        levels: Sequence[FiniteGroup],
        faces: Sequence[Sequence[GroupHom]],
        degeneracies: Sequence[Sequence[GroupHom]],
        label: str = "G",
    ) -> None:
        if not levels:
            raise ValueError("a simplicial group needs at least level 0")
        self.max_level = len(levels) - 1
        self.levels = tuple(levels)
        self.faces = tuple(tuple(row) for row in faces)
        self.degeneracies = tuple(tuple(row) for row in degeneracies)
        self.label = label
        self._chain_cache: dict[tuple, tuple[int, ...]] = {}
        self._op_cache: dict[tuple, tuple[int, ...]] = {}
        self._validate_shape()

    def _validate_shape(self) -> None:
        n_levels = self.max_level + 1
        if len(self.faces) != n_levels or len(self.degeneracies) != n_levels:
            raise ValueError("faces/degeneracies must be indexed by level, one row per level")
        if self.faces[0]:
            raise ValueError("level 0 has no faces")
        if self.degeneracies[self.max_level]:
            raise ValueError(f"level {self.max_level} degeneracies leave the truncation")
        for n in range(1, n_levels):
            if len(self.faces[n]) != n + 1:
                raise ValueError(f"level {n} needs {n + 1} faces, got {len(self.faces[n])}")
            for k, hom in enumerate(self.faces[n]):
                if hom.source != self.levels[n] or hom.target != self.levels[n - 1]:
                    raise ValueError(f"face d_{k} at level {n} does not map G_{n} -> G_{n - 1}")
        for n in range(self.max_level):
            if len(self.degeneracies[n]) != n + 1:
                raise ValueError(f"level {n} needs {n + 1} degeneracies, got {len(self.degeneracies[n])}")
            for k, hom in enumerate(self.degeneracies[n]):
                if hom.source != self.levels[n] or hom.target != self.levels[n + 1]:
                    raise ValueError(f"degeneracy s_{k} at level {n} does not map G_{n} -> G_{n + 1}")

    def require_level(self, n: int) -> None:
        if n < 0:
            raise ValueError(f"negative level {n}")
        if n > self.max_level:
            raise TruncationError(f"level {n} exceeds truncation at {self.max_level}")

    def face(self, n: int, k: int) -> GroupHom:
        self.require_level(n)
        if n < 1 or not 0 <= k <= n:
            raise ValueError(f"no face d_{k} at level {n}")
        return self.faces[n][k]

    def degeneracy(self, n: int, k: int) -> GroupHom:
        self.require_level(n + 1)
        if not 0 <= k <= n:
            raise ValueError(f"no degeneracy s_{k} at level {n}")
        return self.degeneracies[n][k]

    def chain_table(self, level: int, f_hi: int, f_lo: int, d_lo: int, d_hi: int) -> tuple[int, ...]:
        """Value table of: faces f_hi..f_lo (descending), then degeneracies d_lo..d_hi (ascending).

        Starts at ``level``; empty intervals are identities.  Tables are cached
        per (level, intervals) since the verification sweeps reuse them heavily.
        """
        if f_hi < f_lo:
            f_hi, f_lo = -1, 0
        if d_lo > d_hi:
            d_lo, d_hi = 0, -1
        key = (level, f_hi, f_lo, d_lo, d_hi)
        cached = self._chain_cache.get(key)
        if cached is not None:
            return cached
        self.require_level(level)
        table = list(range(self.levels[level].order))
        lvl = level
        for k in range(f_hi, f_lo - 1, -1):
            if lvl < 1 or k > lvl:
                raise ValueError(f"face d_{k} undefined at level {lvl}")
            image = self.faces[lvl][k].image
            table = [image[v] for v in table]
            lvl -= 1
        for k in range(d_lo, d_hi + 1):
            if lvl >= self.max_level:
                raise TruncationError(f"degeneracy s_{k} at level {lvl} leaves the truncation")
            if k > lvl:
                raise ValueError(f"degeneracy s_{k} undefined at level {lvl}")
            image = self.degeneracies[lvl][k].image
            table = [image[v] for v in table]
            lvl += 1
        result = tuple(table)
        self._chain_cache[key] = result
        return result

    def operator_table(self, theta: MonotoneMap) -> tuple[int, ...]:
        """Value table of the canonical action of ``theta``: G_{dst} -> G_{src}."""
        key = (theta.src, theta.dst, theta.values)
        cached = self._op_cache.get(key)
        if cached is not None:
            return cached
        self.require_level(theta.dst)
        self.require_level(theta.src)
        decomposition = factorize(theta)
        table = list(range(self.levels[theta.dst].order))
        lvl = theta.dst
        for a in decomposition.face_indices:
            image = self.faces[lvl][a].image
            table = [image[v] for v in table]
            lvl -= 1
        for b in decomposition.degeneracy_indices:
            image = self.degeneracies[lvl][b].image
            table = [image[v] for v in table]
            lvl += 1
        result = tuple(table)
        self._op_cache[key] = result
        return result

    def __repr__(self) -> str:
        return f"TruncatedSimplicialGroup({self.label}, max_level={self.max_level})"


def apply_operator(G: TruncatedSimplicialGroup, theta: MonotoneMap, x: LeveledElement) -> LeveledElement:
    """Act with theta on x: faces of the canonical factorization first, then degeneracies."""
    if x.level != theta.dst:
        raise ValueError(f"element lives at level {x.level}, operator expects {theta.dst}")
    if not 0 <= x.value < G.levels[x.level].order:
        raise ValueError(f"element {x.value} outside G_{x.level}")
    return LeveledElement(theta.src, G.operator_table(theta)[x.value])


def composite_faces(G: TruncatedSimplicialGroup, x: LeveledElement, hi: int, lo: int) -> LeveledElement:
    """Apply d_hi, then d_{hi-1}, ..., then d_lo; the empty interval (hi < lo) is the identity."""
    if hi < lo:
        return x
    if lo < 0 or hi > x.level or hi - lo + 1 > x.level:
        raise ValueError(f"face interval <{hi}..{lo}> invalid from level {x.level}")
    table = G.chain_table(x.level, hi, lo, 0, -1)
    return LeveledElement(x.level - (hi - lo + 1), table[x.value])


def composite_degeneracies(G: TruncatedSimplicialGroup, x: LeveledElement, lo: int, hi: int) -> LeveledElement:
    """Apply s_lo, then s_{lo+1}, ..., then s_hi; the empty interval (lo > hi) is the identity."""
    if lo > hi:
        return x
    if lo < 0 or lo > x.level:
        raise ValueError(f"degeneracy interval <{lo}..{hi}> invalid from level {x.level}")
    if x.level + (hi - lo + 1) > G.max_level:
        raise TruncationError(
            f"degeneracy interval <{lo}..{hi}> from level {x.level} leaves truncation {G.max_level}"
        )
    table = G.chain_table(x.level, -1, 0, lo, hi)
    return LeveledElement(x.level + (hi - lo + 1), table[x.value])


def constant_simplicial_group(g: FiniteGroup, max_level: int) -> TruncatedSimplicialGroup:
    """Every level is g, every structure map the identity."""
    if max_level < 0:
        raise ValueError("max_level must be non-negative")
    ident = identity_hom(g)
    levels = [g] * (max_level + 1)
    faces = [[ident] * (n + 1) if n >= 1 else [] for n in range(max_level + 1)]
    degeneracies = [[ident] * (n + 1) if n < max_level else [] for n in range(max_level + 1)]
    return TruncatedSimplicialGroup(levels, faces, degeneracies, label=f"constant:{g.label}")


def translation_simplicial_group(g: FiniteGroup, max_level: int) -> TruncatedSimplicialGroup:
    """Level n is g^(n+1); face k deletes coordinate k, degeneracy k repeats it."""
    if max_level < 0:
        raise ValueError("max_level must be non-negative")
    levels = [direct_product([g] * (n + 1), label=f"{g.label}^{n + 1}") for n in range(max_level + 1)]
    faces: list[list[GroupHom]] = [[] for _ in range(max_level + 1)]
    degeneracies: list[list[GroupHom]] = [[] for _ in range(max_level + 1)]
    for n in range(1, max_level + 1):
        src_factors = [g] * (n + 1)
        dst_factors = [g] * n
        for k in range(n + 1):
            image = []
            for x in range(levels[n].order):
                digits = list(product_decode(src_factors, x))
                del digits[k]
                image.append(product_encode(dst_factors, digits))
            faces[n].append(GroupHom(levels[n], levels[n - 1], image))
    for n in range(max_level):
        src_factors = [g] * (n + 1)
        dst_factors = [g] * (n + 2)
        for k in range(n + 1):
            image = []
            for x in range(levels[n].order):
                digits = list(product_decode(src_factors, x))
                digits.insert(k, digits[k])
                image.append(product_encode(dst_factors, digits))
            degeneracies[n].append(GroupHom(levels[n], levels[n + 1], image))
    return TruncatedSimplicialGroup(levels, faces, degeneracies, label=f"translation:{g.label}")


def product_simplicial_group(
    a: TruncatedSimplicialGroup, b: TruncatedSimplicialGroup
) -> TruncatedSimplicialGroup:
    """Levelwise direct product with componentwise structure maps."""
    if a.max_level != b.max_level:
        raise ValueError(f"truncations differ: {a.max_level} vs {b.max_level}")
    levels = [
        direct_product([a.levels[n], b.levels[n]], label=f"({a.levels[n].label}x{b.levels[n].label})")
        for n in range(a.max_level + 1)
    ]

    def pair_hom(n: int, target_level: int, ha: GroupHom, hb: GroupHom) -> GroupHom:
        src_factors = [a.levels[n], b.levels[n]]
        dst_factors = [a.levels[target_level], b.levels[target_level]]
        image = []
        for x in range(levels[n].order):
            xa, xb = product_decode(src_factors, x)
            image.append(product_encode(dst_factors, (ha.image[xa], hb.image[xb])))
        return GroupHom(levels[n], levels[target_level], image)

    faces = [
        [pair_hom(n, n - 1, a.faces[n][k], b.faces[n][k]) for k in range(n + 1)] if n >= 1 else []
        for n in range(a.max_level + 1)
    ]
    degeneracies = [
        [pair_hom(n, n + 1, a.degeneracies[n][k], b.degeneracies[n][k]) for k in range(n + 1)]
        if n < a.max_level
        else []
        for n in range(a.max_level + 1)
    ]
    return TruncatedSimplicialGroup(levels, faces, degeneracies, label=f"product:{a.label},{b.label}")


def check_simplicial_identities(
    G: TruncatedSimplicialGroup, fixture: str | None = None
) -> VerificationReport:
    """Exhaustively check the face/face, degeneracy/degeneracy and mixed identities.

    All composites are written in right-action order (first-listed operator acts
    first).  Violations are reported with the witnessing element and both sides.
    """
    name = fixture if fixture is not None else G.label
    attempted = 0
    passed = 0
    failures: list[Witness] = []

    def compare(level: int, description: str, lhs: Sequence[int], rhs: Sequence[int]) -> None:
        nonlocal attempted, passed
        order = G.levels[level].order
        attempted += order
        if tuple(lhs) == tuple(rhs):
            passed += order
            return
        bad = sum(1 for x in range(order) if lhs[x] != rhs[x])
        passed += order - bad
        for x in range(order):
            if lhs[x] != rhs[x]:
                failures.append(
                    Witness(
                        input={"level": level, "value": x},
                        operator=description,
                        lhs=lhs[x],
                        rhs=rhs[x],
                    )
                )

    def then(first: Sequence[int], second: Sequence[int]) -> list[int]:
        return [second[v] for v in first]

    for n in range(2, G.max_level + 1):
        for j in range(1, n + 1):
            for i in range(j):
                lhs = then(G.faces[n][j].image, G.faces[n - 1][i].image)
                rhs = then(G.faces[n][i].image, G.faces[n - 1][j - 1].image)
                compare(n, f"d_{j} d_{i} = d_{i} d_{j - 1} (level {n})", lhs, rhs)
    for n in range(G.max_level - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                lhs = then(G.degeneracies[n][j].image, G.degeneracies[n + 1][i].image)
                rhs = then(G.degeneracies[n][i].image, G.degeneracies[n + 1][j + 1].image)
                compare(n, f"s_{j} s_{i} = s_{i} s_{j + 1} (level {n})", lhs, rhs)
    for n in range(G.max_level):
        order = G.levels[n].order
        for j in range(n + 1):
            s_j = G.degeneracies[n][j].image
            for i in range(n + 2):
                lhs = then(s_j, G.faces[n + 1][i].image)
                if i == j or i == j + 1:
                    rhs: Sequence[int] = range(order)
                    law = f"s_{j} d_{i} = id (level {n})"
                elif i < j:
                    rhs = then(G.faces[n][i].image, G.degeneracies[n - 1][j - 1].image)
                    law = f"s_{j} d_{i} = d_{i} s_{j - 1} (level {n})"
                else:
                    rhs = then(G.faces[n][i - 1].image, G.degeneracies[n - 1][j].image)
                    law = f"s_{j} d_{i} = d_{i - 1} s_{j} (level {n})"
                compare(n, law, lhs, list(rhs))
    return VerificationReport(
        "identities", name, G.max_level, attempted, passed, None, tuple(failures)
    )


def verify_functoriality(
    G: TruncatedSimplicialGroup,
    max_dim: int,
    budget: Budget = DEFAULT_BUDGET,
    fixture: str | None = None,
) -> VerificationReport:
    """Check X_{theta psi} = X_psi-then-X_theta over all composable pairs up to max_dim.

    Each (theta, psi) instance is compared on every group element via the value
    tables, so one witness pins down the first element where the sides differ.
    """
    name = fixture if fixture is not None else G.label
    bound = min(max_dim, G.max_level)
    pairs = []
    for a in range(bound + 1):
        for b in range(bound + 1):
            for c in range(bound + 1):
                for theta in all_monotone_maps(a, b):
                    for psi in all_monotone_maps(b, c):
                        pairs.append((theta, psi))

    def evaluate(pair: tuple[MonotoneMap, MonotoneMap]) -> Witness | None:
        theta, psi = pair
        composed = G.operator_table(compose(theta, psi))
        t_theta = G.operator_table(theta)
        t_psi = G.operator_table(psi)
        stepwise = tuple(t_theta[v] for v in t_psi)
        if composed == stepwise:
            return None
        x = next(x for x in range(len(composed)) if composed[x] != stepwise[x])
        return Witness(
            input={"level": psi.dst, "value": x},
            operator=f"compose({theta}, {psi})",
            lhs=composed[x],
            rhs=stepwise[x],
        )

    def sample(rng: random.Random) -> tuple[MonotoneMap, MonotoneMap]:
        return pairs[rng.randrange(len(pairs))]

    return drive("functoriality", name, bound, len(pairs), lambda: pairs, sample, evaluate, budget)


class SimplicialMorphism:
    """A levelwise homomorphism commuting with every face and degeneracy."""

    __slots__ = ("source", "target", "homs")

    def __init__(
        self,
        source: TruncatedSimplicialGroup,
        target: TruncatedSimplicialGroup,
        homs: Sequence[GroupHom],
    ) -> None:
        if source.max_level != target.max_level:
            raise ValueError("source and target truncations differ")
        if len(homs) != source.max_level + 1:
            raise ValueError(f"need {source.max_level + 1} level maps, got {len(homs)}")
        self.source = source
        self.target = target
        self.homs = tuple(homs)
        for n, hom in enumerate(self.homs):
            if hom.source != source.levels[n] or hom.target != target.levels[n]:
                raise ValueError(f"level {n} map does not go G_{n} -> G'_{n}")
        for n in range(1, source.max_level + 1):
            for k in range(n + 1):
                via_source = [self.homs[n - 1].image[v] for v in source.faces[n][k].image]
                via_target = [target.faces[n][k].image[v] for v in self.homs[n].image]
                if via_source != via_target:
                    raise ValueError(f"morphism does not commute with d_{k} at level {n}")
        for n in range(source.max_level):
            for k in range(n + 1):
                via_source = [self.homs[n + 1].image[v] for v in source.degeneracies[n][k].image]
                via_target = [target.degeneracies[n][k].image[v] for v in self.homs[n].image]
                if via_source != via_target:
                    raise ValueError(f"morphism does not commute with s_{k} at level {n}")


def simplicial_group_to_json(G: TruncatedSimplicialGroup) -> dict:
    return {
        "max_level": G.max_level,
        "levels": [group_to_json(g) for g in G.levels],
        "faces": [[hom_to_json(h) for h in row] for row in G.faces],
        "degeneracies": [[hom_to_json(h) for h in row] for row in G.degeneracies],
    }


def simplicial_group_from_json(payload: dict, *, require_identities: bool = True) -> TruncatedSimplicialGroup:
    """Load and validate a simplicial group; identity violations abort unless disabled.

    ``require_identities=False`` is for the verification harness, which runs the
    identity check itself and reports violations as findings.
    """
    if not isinstance(payload, dict):
        raise ValueError("simplicial group payload must be an object")
    try:
        max_level = int(payload["max_level"])
        raw_levels = payload["levels"]
        raw_faces = payload["faces"]
        raw_degeneracies = payload["degeneracies"]
    except KeyError as missing:
        raise ValueError(f"simplicial group payload misses field {missing}") from None
    levels = [group_from_json(entry) for entry in raw_levels]
    if len(levels) != max_level + 1:
        raise ValueError(f"declared max_level {max_level} but {len(levels)} levels given")
    if len(raw_faces) != max_level + 1 or len(raw_degeneracies) != max_level + 1:
        raise ValueError("faces/degeneracies must carry one row per level")
    if raw_faces[0]:
        raise ValueError("level 0 has no faces")
    if raw_degeneracies[max_level]:
        raise ValueError(f"level {max_level} degeneracies would leave the truncation")
    faces = [
        [hom_from_json(h, levels[n], levels[n - 1]) for h in raw_faces[n]] if n >= 1 else []
        for n in range(max_level + 1)
    ]
    degeneracies = [
        [hom_from_json(h, levels[n], levels[n + 1]) for h in raw_degeneracies[n]]
        if n < max_level
        else []
        for n in range(max_level + 1)
    ]
    G = TruncatedSimplicialGroup(levels, faces, degeneracies, label=str(payload.get("label", "G")))
    if require_identities:
        report = check_simplicial_identities(G)
        if not report.ok:
            first = report.failures[0]
            raise ValueError(
                f"simplicial identities fail: {first.operator} at element {first.input['value']}"
            )
    return G
