"""The simplex category: monotone maps between the ordinals [0, n].

Composites are written left to right throughout the package: ``compose(f, g)``
applies ``f`` first.  Simplicial objects act on the right, so the operator
attached to the *inner* map of a composite hits an element first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator


@dataclass(frozen=True, slots=True)
class MonotoneMap:
    """A weakly increasing map [0, src] -> [0, dst], stored as its full value list."""

    src: int
    dst: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.src < 0 or self.dst < 0:
            raise ValueError(f"dimensions must be non-negative, got [{self.src}] -> [{self.dst}]")
        if len(self.values) != self.src + 1:
            raise ValueError(
                f"map [{self.src}] -> [{self.dst}] needs {self.src + 1} values, got {len(self.values)}"
            )
        prev = 0
        for i, v in enumerate(self.values):
            if v < 0 or v > self.dst:
                raise ValueError(f"value {v} at position {i} outside [0, {self.dst}]")
            if v < prev:
                raise ValueError(f"values not weakly increasing at position {i}: {self.values}")
            prev = v

    def __call__(self, i: int) -> int:
        return self.values[i]

    def is_identity(self) -> bool:
        return self.src == self.dst and all(v == i for i, v in enumerate(self.values))

    def __str__(self) -> str:
        return format_map(self)


@dataclass(frozen=True, slots=True)
class Factorization:
    """Canonical epi-mono decomposition of a monotone map.

    Acting on an element of a simplicial object, the faces listed in
    ``face_indices`` (strictly descending) are applied first, then the
    degeneracies in ``degeneracy_indices`` (strictly ascending).  The waist
    ``intermediate_dim`` is the dimension the epi-mono factorization passes
    through.
    """

    degeneracy_indices: tuple[int, ...]
    face_indices: tuple[int, ...]
    intermediate_dim: int


def identity_map(n: int) -> MonotoneMap:
    return MonotoneMap(n, n, tuple(range(n + 1)))


def coface(n: int, k: int) -> MonotoneMap:
    """The injection [n-1] -> [n] that omits k."""
    if n < 1:
        raise ValueError(f"coface needs n >= 1, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"coface index {k} outside [0, {n}]")
    return MonotoneMap(n - 1, n, tuple(i if i < k else i + 1 for i in range(n)))


def codegeneracy(n: int, k: int) -> MonotoneMap:
    """The surjection [n+1] -> [n] that repeats k."""
    if n < 0:
        raise ValueError(f"codegeneracy needs n >= 0, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"codegeneracy index {k} outside [0, {n}]")
    return MonotoneMap(n + 1, n, tuple(i if i <= k else i - 1 for i in range(n + 2)))


def compose(first: MonotoneMap, second: MonotoneMap) -> MonotoneMap:
    """Left-to-right composite: apply ``first``, then ``second``."""
    if first.dst != second.src:
        raise ValueError(
            f"cannot compose [{first.src}]->[{first.dst}] with [{second.src}]->[{second.dst}]"
        )
    return MonotoneMap(first.src, second.dst, tuple(second.values[v] for v in first.values))


def factorize(theta: MonotoneMap) -> Factorization:
    """Split ``theta`` into its unique descending-face / ascending-degeneracy form.

    The degeneracy indices are the positions where theta repeats a value; the
    face indices are the values it misses.  ``recompose`` inverts this exactly.
    """
    degeneracies = tuple(i for i in range(theta.src) if theta.values[i] == theta.values[i + 1])
    image = set(theta.values)
    faces = tuple(j for j in range(theta.dst, -1, -1) if j not in image)
    return Factorization(degeneracies, faces, theta.src - len(degeneracies))


def recompose(f: Factorization) -> MonotoneMap:
    """Rebuild the monotone map a factorization came from."""
    k = f.intermediate_dim
    m = k + len(f.degeneracy_indices)
    result = identity_map(m)
    # Epi part: as functions, the largest codegeneracy index is applied first.
    level = m
    for b in reversed(f.degeneracy_indices):
        result = compose(result, codegeneracy(level - 1, b))
        level -= 1
    # Mono part: as functions, the smallest coface index is applied first.
    for a in reversed(f.face_indices):
        level += 1
        result = compose(result, coface(level, a))
    return result


def restrict(theta: MonotoneMap, i: int, j: int) -> MonotoneMap:
    """The map [i] -> [j] acting like theta, defined when i*theta <= j <= dst."""
    if not 0 <= i <= theta.src:
        raise ValueError(f"restriction source {i} outside [0, {theta.src}]")
    if j > theta.dst:
        raise ValueError(f"restriction target {j} exceeds codomain [{theta.dst}]")
    if j < theta.values[i]:
        raise ValueError(f"restriction target {j} below image maximum {theta.values[i]}")
    return MonotoneMap(i, j, theta.values[: i + 1])


def splitting(theta: MonotoneMap, p: int) -> tuple[MonotoneMap, MonotoneMap]:
    """Split theta at p into [p] -> [p*theta] and the shifted tail [m-p] -> [n - p*theta]."""
    if not 0 <= p <= theta.src:
        raise ValueError(f"splitting position {p} outside [0, {theta.src}]")
    pivot = theta.values[p]
    lower = MonotoneMap(p, pivot, theta.values[: p + 1])
    upper = MonotoneMap(
        theta.src - p,
        theta.dst - pivot,
        tuple(theta.values[p + i] - pivot for i in range(theta.src - p + 1)),
    )
    return lower, upper


def all_monotone_maps(m: int, n: int) -> Iterator[MonotoneMap]:
    """All monotone maps [m] -> [n], in lexicographic order of their values."""
    for values in combinations_with_replacement(range(n + 1), m + 1):
        yield MonotoneMap(m, n, values)


_MAP_RE = re.compile(r"^(\d+)->(\d+):(\d+(?:,\d+)*)$")


def parse_map(text: str) -> MonotoneMap:
    """Parse the textual form ``"m->n:v0,v1,...,vm"``."""
    match = _MAP_RE.match(text.strip())
    if match is None:
        raise ValueError(f"not a monotone map literal: {text!r}")
    m, n = int(match.group(1)), int(match.group(2))
    values = tuple(int(v) for v in match.group(3).split(","))
    return MonotoneMap(m, n, values)


def format_map(theta: MonotoneMap) -> str:
    return f"{theta.src}->{theta.dst}:{','.join(str(v) for v in theta.values)}"


@dataclass(frozen=True, slots=True)
class Delta1Simplex:
    """The n-simplex tau^k of the 1-simplex: [0, n-k] -> 0 and [n-k+1, n] -> 1."""

    dim: int
    k: int

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise ValueError(f"dimension must be non-negative, got {self.dim}")
        if not 0 <= self.k <= self.dim + 1:
            raise ValueError(f"tau index {self.k} outside [0, {self.dim + 1}]")

    def as_monotone_map(self) -> MonotoneMap:
        zeros = self.dim - self.k + 1
        return MonotoneMap(self.dim, 1, tuple(0 if i < zeros else 1 for i in range(self.dim + 1)))


def tau(n: int, k: int) -> Delta1Simplex:
    """tau^k in dimension n; k = 0 is the constant-0 map, k = n + 1 the constant-1 map."""
    return Delta1Simplex(n, k)


def apply_operator_to_tau(t: Delta1Simplex, theta: MonotoneMap) -> Delta1Simplex:
    """Move tau^k along theta: the composite theta-then-tau is again some tau."""
    if theta.dst != t.dim:
        raise ValueError(f"operator lands in dimension {theta.dst}, tau lives in {t.dim}")
    composite = compose(theta, t.as_monotone_map())
    zeros = sum(1 for v in composite.values if v == 0)
    return Delta1Simplex(theta.src, theta.src + 1 - zeros)
