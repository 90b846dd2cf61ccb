from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from simpgrp.delta import (
    Delta1Simplex,
    MonotoneMap,
    all_monotone_maps,
    apply_operator_to_tau,
    codegeneracy,
    coface,
    compose,
    factorize,
    format_map,
    identity_map,
    parse_map,
    recompose,
    restrict,
    splitting,
    tau,
)


def test_monotone_map_validation():
    MonotoneMap(1, 1, (0, 1))
    with pytest.raises(ValueError):
        MonotoneMap(1, 1, (1, 0))
    with pytest.raises(ValueError):
        MonotoneMap(1, 1, (0, 2))
    with pytest.raises(ValueError):
        MonotoneMap(1, 1, (0, 1, 1))


def test_coface_values():
    assert coface(1, 0).values == (1,)
    assert coface(2, 1).values == (0, 2)
    assert coface(2, 2).values == (0, 1)
    with pytest.raises(ValueError):
        coface(2, 3)
    with pytest.raises(ValueError):
        coface(0, 0)


def test_codegeneracy_values():
    assert codegeneracy(0, 0).values == (0, 0)
    assert codegeneracy(1, 0).values == (0, 0, 1)
    assert codegeneracy(1, 1).values == (0, 1, 1)
    with pytest.raises(ValueError):
        codegeneracy(1, 2)


def test_compose_applies_first_argument_first():
    assert compose(codegeneracy(1, 0), coface(2, 1)).values == (0, 0, 2)
    theta = MonotoneMap(2, 3, (0, 2, 2))
    assert compose(identity_map(2), theta) == theta
    assert compose(theta, identity_map(3)) == theta
    assert compose(coface(1, 0), codegeneracy(0, 0)) == identity_map(0)
    with pytest.raises(ValueError):
        compose(coface(1, 0), coface(3, 0))


def test_compose_associative_and_unital_small_dims():
    dims = range(4)
    for a in dims:
        for b in dims:
            for c in dims:
                for d in dims:
                    for f in all_monotone_maps(a, b):
                        for g in all_monotone_maps(b, c):
                            fg = compose(f, g)
                            for h in all_monotone_maps(c, d):
                                assert compose(fg, h) == compose(f, compose(g, h))


def test_cosimplicial_identities_exhaustive():
    # Face-face: delta^i then delta^j equals delta^(j-1) then delta^i for i < j.
    for m in range(4):
        for j in range(m + 3):
            for i in range(j):
                if j <= m + 2 and i <= m + 1:
                    lhs = compose(coface(m + 1, i), coface(m + 2, j))
                    rhs = compose(coface(m + 1, j - 1), coface(m + 2, i))
                    assert lhs == rhs, (m, i, j)
    # Degeneracy-degeneracy: sigma^a then sigma^b equals sigma^(b+1) then sigma^a for a <= b.
    for m in range(4):
        for b in range(m + 1):
            for a in range(b + 1):
                lhs = compose(codegeneracy(m + 1, a), codegeneracy(m, b))
                rhs = compose(codegeneracy(m + 1, b + 1), codegeneracy(m, a))
                assert lhs == rhs, (m, a, b)
    # Mixed: delta^a then sigma^b collapses by the standard three-way case split.
    for m in range(4):
        for a in range(m + 2):
            for b in range(m + 1):
                composite = compose(coface(m + 1, a), codegeneracy(m, b))
                if a in (b, b + 1):
                    assert composite == identity_map(m), (m, a, b)
                elif a < b:
                    assert m >= 1
                    assert composite == compose(codegeneracy(m - 1, b - 1), coface(m, a))
                else:
                    assert composite == compose(codegeneracy(m - 1, b), coface(m, a - 1))


def test_factorize_examples():
    f = factorize(MonotoneMap(2, 2, (0, 0, 2)))
    assert f.degeneracy_indices == (0,)
    assert f.face_indices == (1,)
    assert f.intermediate_dim == 1
    f = factorize(identity_map(3))
    assert f.degeneracy_indices == () and f.face_indices == ()
    assert f.intermediate_dim == 3
    f = factorize(coface(2, 1))
    assert f.degeneracy_indices == ()
    assert f.face_indices == (1,)


def test_factorization_roundtrip_exhaustive():
    for m in range(5):
        for n in range(5):
            for theta in all_monotone_maps(m, n):
                f = factorize(theta)
                # Canonical form: strictly ascending degeneracies, strictly descending faces.
                assert all(a < b for a, b in zip(f.degeneracy_indices, f.degeneracy_indices[1:]))
                assert all(a > b for a, b in zip(f.face_indices, f.face_indices[1:]))
                rebuilt = recompose(f)
                assert rebuilt == theta
                assert factorize(rebuilt) == f


def test_restrict():
    assert restrict(coface(2, 1), 0, 1) == MonotoneMap(0, 1, (0,))
    assert restrict(identity_map(3), 2, 2) == identity_map(2)
    assert restrict(coface(2, 0), 1, 2) == MonotoneMap(1, 2, (1, 2))
    with pytest.raises(ValueError):
        restrict(coface(2, 0), 1, 1)  # image maximum is 2
    with pytest.raises(ValueError):
        restrict(coface(2, 0), 3, 2)
    with pytest.raises(ValueError):
        restrict(coface(2, 0), 1, 3)


def test_splitting_examples():
    lower, upper = splitting(coface(2, 1), 1)
    assert lower == MonotoneMap(1, 2, (0, 2))
    assert upper == MonotoneMap(0, 0, (0,))
    theta = MonotoneMap(2, 3, (0, 2, 2))
    lower, upper = splitting(theta, 0)
    assert lower == MonotoneMap(0, 0, (0,))
    assert upper == theta
    lower, upper = splitting(theta, 2)
    assert lower == MonotoneMap(2, 2, (0, 2, 2))
    assert upper == MonotoneMap(0, 1, (0,))


def test_splitting_endpoint_law_exhaustive():
    for m in range(5):
        for n in range(5):
            for theta in all_monotone_maps(m, n):
                for p in range(m + 1):
                    lower, upper = splitting(theta, p)
                    assert lower.values[p] == theta.values[p]
                    assert upper.values[0] == 0
                    assert lower.dst == theta.values[p]
                    assert upper.dst == theta.dst - theta.values[p]


def test_tau_values():
    assert tau(2, 0).as_monotone_map().values == (0, 0, 0)
    assert tau(2, 3).as_monotone_map().values == (1, 1, 1)
    assert tau(2, 1).as_monotone_map().values == (0, 0, 1)
    with pytest.raises(ValueError):
        tau(2, 4)
    with pytest.raises(ValueError):
        Delta1Simplex(2, -1)


def test_apply_operator_to_tau_examples():
    # Constant coordinates stay constant under any operator.
    theta = MonotoneMap(2, 3, (0, 1, 3))
    assert apply_operator_to_tau(tau(3, 0), theta) == tau(2, 0)
    assert apply_operator_to_tau(tau(3, 4), theta) == tau(2, 3)
    assert apply_operator_to_tau(tau(3, 2), coface(3, 3)) == tau(2, 1)
    with pytest.raises(ValueError):
        apply_operator_to_tau(tau(2, 1), coface(3, 0))


def test_tau_case_split_under_generators():
    # Moving tau^k along a coface drops its index exactly when the omitted
    # position is at least n + 1 - k; along a codegeneracy it rises there.
    for n in range(1, 5):
        for k in range(n + 2):
            threshold = n + 1 - k
            for j in range(n + 1):
                moved = apply_operator_to_tau(tau(n, k), coface(n, j))
                assert moved.dim == n - 1
                assert moved.k == (k - 1 if j >= threshold else k), (n, k, j)
    for n in range(4):
        for k in range(n + 2):
            threshold = n + 1 - k
            for j in range(n + 1):
                moved = apply_operator_to_tau(tau(n, k), codegeneracy(n, j))
                assert moved.dim == n + 1
                assert moved.k == (k + 1 if j >= threshold else k), (n, k, j)


def test_tau_action_agrees_with_plain_composition():
    for n in range(5):
        for k in range(n + 2):
            t = tau(n, k)
            operators = [coface(n, j) for j in range(n + 1)] if n >= 1 else []
            operators += [codegeneracy(n, j) for j in range(n + 1)]
            for theta in operators:
                moved = apply_operator_to_tau(t, theta)
                assert moved.as_monotone_map() == compose(theta, t.as_monotone_map())


def test_map_text_roundtrip():
    theta = MonotoneMap(2, 2, (0, 0, 2))
    assert format_map(theta) == "2->2:0,0,2"
    assert parse_map("2->2:0,0,2") == theta
    assert parse_map(" 0->3:2 ") == MonotoneMap(0, 3, (2,))
    for bad in ("1->1:1,0", "1->1:0", "x->1:0,1", "1->1:0,1,2", "->1:0", "1->1:0;1"):
        with pytest.raises(ValueError):
            parse_map(bad)


@st.composite
def monotone_maps(draw):
    m = draw(st.integers(min_value=0, max_value=6))
    n = draw(st.integers(min_value=0, max_value=6))
    values = tuple(sorted(draw(st.integers(min_value=0, max_value=n)) for _ in range(m + 1)))
    return MonotoneMap(m, n, values)


@given(monotone_maps())
def test_text_form_roundtrips(theta):
    assert parse_map(format_map(theta)) == theta


@given(monotone_maps())
def test_factorization_roundtrips(theta):
    assert recompose(factorize(theta)) == theta
