"""Finite groups as multiplication tables over element indices 0..order-1.

Group axioms and homomorphism laws are checked exhaustively at construction;
an invalid table raises immediately instead of poisoning downstream math.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np


class FiniteGroup:
    """A finite group given by its full multiplication table.

    Elements are the indices 0..order-1.  The identity is located by scan (it
    need not be index 0 for user-supplied tables) and inverses are derived.
    """

    __slots__ = ("label", "order", "mult", "identity", "inverse", "_hash")

    def __init__(self, mult: Sequence[Sequence[int]], label: str = "G") -> None:
        order = len(mult)
        if order == 0:
            raise ValueError("group must have at least one element")
        table = tuple(tuple(int(v) for v in row) for row in mult)
        self.label = label
        self.order = order
        self.mult = table
        self._validate()
        self.identity = self._find_identity()
        self.inverse = self._build_inverses()
        self._hash = hash((order, table))

    def _validate(self) -> None:
        arr = np.asarray(self.mult, dtype=np.int64)
        if arr.shape != (self.order, self.order):
            raise ValueError(f"{self.label}: multiplication table is not {self.order}x{self.order}")
        if arr.min() < 0 or arr.max() >= self.order:
            raise ValueError(f"{self.label}: table entry outside [0, {self.order - 1}]")
        # Associativity, row by row: (a*b)*c == a*(b*c) for all b, c at fixed a.
        for a in range(self.order):
            lhs = arr[arr[a], :]
            rhs = arr[a][arr]
            if not np.array_equal(lhs, rhs):
                b, c = np.argwhere(lhs != rhs)[0]
                raise ValueError(
                    f"{self.label}: associativity fails at ({a}, {int(b)}, {int(c)}): "
                    f"({a}*{int(b)})*{int(c)} = {int(lhs[b, c])} but {a}*({int(b)}*{int(c)}) = {int(rhs[b, c])}"
                )

    def _find_identity(self) -> int:
        for e in range(self.order):
            row = self.mult[e]
            if all(row[a] == a for a in range(self.order)) and all(
                self.mult[a][e] == a for a in range(self.order)
            ):
                return e
        raise ValueError(f"{self.label}: no two-sided identity element")

    def _build_inverses(self) -> tuple[int, ...]:
        e = self.identity
        inverses = []
        for a in range(self.order):
            inv = next((b for b in range(self.order) if self.mult[a][b] == e), None)
            if inv is None or self.mult[inv][a] != e:
                raise ValueError(f"{self.label}: element {a} has no two-sided inverse")
            inverses.append(inv)
        return tuple(inverses)

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def elements(self) -> range:
        return range(self.order)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.order == other.order and self.mult == other.mult

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label}, order={self.order})"


class GroupHom:
    """A homomorphism between table groups, stored as its value table."""

    __slots__ = ("source", "target", "image")

    def __init__(
        self,
        source: FiniteGroup,
        target: FiniteGroup,
        image: Sequence[int],
        *,
        validate: bool = True,
    ) -> None:
        self.source = source
        self.target = target
        self.image = tuple(int(v) for v in image)
        if len(self.image) != source.order:
            raise ValueError(
                f"hom table has {len(self.image)} entries, source order is {source.order}"
            )
        if any(v < 0 or v >= target.order for v in self.image):
            raise ValueError(f"hom table entry outside [0, {target.order - 1}]")
        if validate:
            self._validate()

    def _validate(self) -> None:
        img = np.asarray(self.image, dtype=np.int64)
        src = np.asarray(self.source.mult, dtype=np.int64)
        tgt = np.asarray(self.target.mult, dtype=np.int64)
        lhs = img[src]
        rhs = tgt[img[:, None], img[None, :]]
        if not np.array_equal(lhs, rhs):
            a, b = np.argwhere(lhs != rhs)[0]
            raise ValueError(
                f"not a homomorphism at ({int(a)}, {int(b)}): "
                f"f(a*b) = {int(lhs[a, b])} but f(a)*f(b) = {int(rhs[a, b])}"
            )
        if self.image[self.source.identity] != self.target.identity:
            raise ValueError("homomorphism does not preserve the identity")

    def apply(self, g: int) -> int:
        if not 0 <= g < self.source.order:
            raise ValueError(f"element {g} outside source group of order {self.source.order}")
        return self.image[g]

    def __call__(self, g: int) -> int:
        return self.apply(g)

    def is_identity(self) -> bool:
        return self.source == self.target and all(v == i for i, v in enumerate(self.image))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupHom):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.image == other.image

    def __repr__(self) -> str:
        return f"GroupHom({self.source.label} -> {self.target.label})"


def hom_apply(h: GroupHom, g: int) -> int:
    return h.apply(g)


def hom_compose(f: GroupHom, g: GroupHom) -> GroupHom:
    """Pointwise composite, applying ``f`` first."""
    if f.target != g.source:
        raise ValueError(f"cannot compose {f!r} with {g!r}: target/source mismatch")
    return GroupHom(f.source, g.target, tuple(g.image[v] for v in f.image), validate=False)


def identity_hom(g: FiniteGroup) -> GroupHom:
    return GroupHom(g, g, tuple(range(g.order)), validate=False)


def trivial_hom(source: FiniteGroup, target: FiniteGroup) -> GroupHom:
    return GroupHom(source, target, (target.identity,) * source.order, validate=False)


def cyclic_group(n: int) -> FiniteGroup:
    """Z/n with addition mod n."""
    if n < 1:
        raise ValueError(f"cyclic group order must be positive, got {n}")
    return FiniteGroup(
        tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), label=f"C{n}"
    )


def trivial_group() -> FiniteGroup:
    return cyclic_group(1)


def symmetric_group_3() -> FiniteGroup:
    """S3 as a composition table of the six permutations of {0, 1, 2}.

    Permutations are listed lexicographically; the product p*q acts as p first,
    then q, matching the package-wide left-to-right convention.
    """
    from itertools import permutations

    perms = list(permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(q[p[x]] for x in range(3))] for q in perms) for p in perms
    )
    return FiniteGroup(table, label="S3")


def direct_product(factors: Sequence[FiniteGroup], label: str | None = None) -> FiniteGroup:
    """Componentwise product; elements are mixed-radix encoded, first factor most significant."""
    if not factors:
        return FiniteGroup(((0,),), label="C1")
    orders = [g.order for g in factors]
    total = 1
    for o in orders:
        total *= o

    def decode(x: int) -> list[int]:
        digits = []
        for o in reversed(orders):
            x, r = divmod(x, o)
            digits.append(r)
        digits.reverse()
        return digits

    def encode(digits: Sequence[int]) -> int:
        x = 0
        for d, o in zip(digits, orders):
            x = x * o + d
        return x

    decoded = [decode(x) for x in range(total)]
    table = tuple(
        tuple(
            encode([g.mult[da[i]][db[i]] for i, g in enumerate(factors)])
            for db in decoded
        )
        for da in decoded
    )
    if label is None:
        label = "x".join(g.label for g in factors) if len(factors) > 1 else factors[0].label
    return FiniteGroup(table, label=label)


def product_encode(factors: Sequence[FiniteGroup], digits: Sequence[int]) -> int:
    """Mixed-radix index of a tuple of factor elements, first factor most significant."""
    x = 0
    for d, g in zip(digits, factors):
        if not 0 <= d < g.order:
            raise ValueError(f"digit {d} outside group of order {g.order}")
        x = x * g.order + d
    return x


def product_decode(factors: Sequence[FiniteGroup], x: int) -> tuple[int, ...]:
    digits = []
    for g in reversed(factors):
        x, r = divmod(x, g.order)
        digits.append(r)
    digits.reverse()
    return tuple(digits)


def projection_hom(factors: Sequence[FiniteGroup], product: FiniteGroup, index: int) -> GroupHom:
    """Projection of a mixed-radix product onto one factor."""
    image = tuple(product_decode(factors, x)[index] for x in range(product.order))
    return GroupHom(product, factors[index], image)


def diagonal_hom(g: FiniteGroup, power: FiniteGroup, copies: int) -> GroupHom:
    """The diagonal g -> g^copies into a mixed-radix power of g."""
    factors = [g] * copies
    image = tuple(product_encode(factors, [a] * copies) for a in range(g.order))
    return GroupHom(g, power, image)


def group_to_json(g: FiniteGroup) -> dict:
    return {"label": g.label, "order": g.order, "mult": [list(row) for row in g.mult]}


def group_from_json(payload: dict) -> FiniteGroup:
    if not isinstance(payload, dict) or "mult" not in payload:
        raise ValueError("group payload must be an object with a 'mult' table")
    label = str(payload.get("label", "G"))
    group = FiniteGroup(payload["mult"], label=label)
    declared = payload.get("order")
    if declared is not None and int(declared) != group.order:
        raise ValueError(f"declared order {declared} does not match table size {group.order}")
    return group


def hom_to_json(h: GroupHom) -> dict:
    return {"image": list(h.image)}


def hom_from_json(payload: dict, source: FiniteGroup, target: FiniteGroup) -> GroupHom:
    if not isinstance(payload, dict) or "image" not in payload:
        raise ValueError("hom payload must be an object with an 'image' table")
    return GroupHom(source, target, payload["image"])
