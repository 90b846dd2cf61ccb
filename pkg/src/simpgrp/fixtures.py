"""Fixture resolution: built-in simplicial groups by URI, or JSON files.

Built-in URIs: ``constant:<spec>``, ``translation:<spec>``, and
``product:<uri>,<uri>`` where ``<spec>`` is ``C<n>`` or ``S3``.  Anything else
is treated as a path to a simplicial-group JSON file; relative paths fall back
to the directory named by ``SIMPGRP_FIXTURE_DIR``.
"""

from __future__ import annotations

import json
import os
import re
from pathlib import Path

from .groups import FiniteGroup, GroupHom, cyclic_group, diagonal_hom, identity_hom, symmetric_group_3, trivial_hom
from .simplicial import (
    SimplicialMorphism,
    TruncatedSimplicialGroup,
    constant_simplicial_group,
    product_simplicial_group,
    simplicial_group_from_json,
    translation_simplicial_group,
)

FIXTURE_DIR_ENV = "SIMPGRP_FIXTURE_DIR"

_GROUP_SPEC_RE = re.compile(r"^(C[1-9]\d*|S3)$")

BUILTIN_FIXTURES = (
    "constant:C1",
    "constant:C2",
    "constant:C3",
    "constant:S3",
    "translation:C2",
    "translation:C3",
    "product:translation:C2,constant:C2",
)


def base_group(spec: str) -> FiniteGroup:
    if not _GROUP_SPEC_RE.match(spec):
        raise ValueError(f"unknown group spec {spec!r}, expected C<n> or S3")
    if spec == "S3":
        return symmetric_group_3()
    return cyclic_group(int(spec[1:]))


def is_fixture_uri(text: str) -> bool:
    return text.startswith(("constant:", "translation:", "product:"))


def _split_product(rest: str) -> tuple[str, str]:
    # The comma separating the two operands is the one where both halves parse.
    positions = [i for i, ch in enumerate(rest) if ch == ","]
    for pos in positions:
        left, right = rest[:pos], rest[pos + 1 :]
        try:
            _parse_uri(left)
            _parse_uri(right)
        except ValueError:
            continue
        return left, right
    raise ValueError(f"cannot split product operands in {rest!r}")


def _parse_uri(uri: str) -> tuple:
    if uri.startswith("constant:"):
        return ("constant", base_group(uri[len("constant:") :]))
    if uri.startswith("translation:"):
        return ("translation", base_group(uri[len("translation:") :]))
    if uri.startswith("product:"):
        left, right = _split_product(uri[len("product:") :])
        return ("product", _parse_uri(left), _parse_uri(right))
    raise ValueError(f"unknown fixture URI {uri!r}")


def _build(parsed: tuple, max_level: int) -> TruncatedSimplicialGroup:
    kind = parsed[0]
    if kind == "constant":
        return constant_simplicial_group(parsed[1], max_level)
    if kind == "translation":
        return translation_simplicial_group(parsed[1], max_level)
    return product_simplicial_group(_build(parsed[1], max_level), _build(parsed[2], max_level))


def build_fixture(uri: str, max_level: int) -> TruncatedSimplicialGroup:
    """Construct a built-in fixture truncated at ``max_level``."""
    return _build(_parse_uri(uri), max_level)


def resolve_fixture_path(text: str) -> Path:
    path = Path(text)
    if path.exists():
        return path
    base = os.environ.get(FIXTURE_DIR_ENV)
    if base and not path.is_absolute():
        candidate = Path(base) / path
        if candidate.exists():
            return candidate
    raise ValueError(f"fixture file not found: {text}")


def load_fixture(
    spec: str, max_dim: int, *, require_identities: bool = True
) -> tuple[TruncatedSimplicialGroup, str]:
    """Resolve a fixture URI or file for verification up to ``max_dim``.

    Built-ins are constructed with max_level = max_dim + 1 (the degeneracy
    direction of dimension max_dim needs one extra level); files must already
    carry at least that many levels.
    """
    if max_dim < 0:
        raise ValueError("max_dim must be non-negative")
    if is_fixture_uri(spec):
        return build_fixture(spec, max_dim + 1), spec
    path = resolve_fixture_path(spec)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as err:
        raise ValueError(f"fixture file {path} is not valid JSON: {err}") from None
    G = simplicial_group_from_json(payload, require_identities=require_identities)
    if G.max_level < max_dim + 1:
        raise ValueError(
            f"fixture truncation {G.max_level} too small for max_dim {max_dim} "
            f"(need max_dim + 1 = {max_dim + 1})"
        )
    return G, str(path)


def identity_morphism(G: TruncatedSimplicialGroup) -> SimplicialMorphism:
    return SimplicialMorphism(G, G, [identity_hom(g) for g in G.levels])


def trivial_morphism(G: TruncatedSimplicialGroup) -> tuple[SimplicialMorphism, TruncatedSimplicialGroup]:
    target = constant_simplicial_group(cyclic_group(1), G.max_level)
    homs = [trivial_hom(g, target.levels[n]) for n, g in enumerate(G.levels)]
    return SimplicialMorphism(G, target, homs), target


def diagonal_morphism(
    constant: TruncatedSimplicialGroup, translation: TruncatedSimplicialGroup
) -> SimplicialMorphism:
    """The levelwise diagonal from a constant simplicial group into the
    translation simplicial group on the same base group."""
    homs: list[GroupHom] = []
    for n in range(constant.max_level + 1):
        homs.append(diagonal_hom(constant.levels[n], translation.levels[n], n + 1))
    return SimplicialMorphism(constant, translation, homs)


def naturality_morphisms(
    G: TruncatedSimplicialGroup, uri: str
) -> list[tuple[str, SimplicialMorphism, TruncatedSimplicialGroup]]:
    """The morphisms the suite exercises for naturality on a given fixture."""
    cases: list[tuple[str, SimplicialMorphism, TruncatedSimplicialGroup]] = []
    cases.append(("identity", identity_morphism(G), G))
    trivial, trivial_target = trivial_morphism(G)
    cases.append(("trivial", trivial, trivial_target))
    if uri.startswith("constant:"):
        spec = uri[len("constant:") :]
        if _GROUP_SPEC_RE.match(spec):
            translated = translation_simplicial_group(base_group(spec), G.max_level)
            cases.append(("diagonal", diagonal_morphism(G, translated), translated))
    return cases
