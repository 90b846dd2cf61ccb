from __future__ import annotations

import pytest

from simpgrp.classifying import (
    DiagSimplex,
    NerveSimplex,
    TotalSimplex,
    WBarSimplex,
    bisimplicial_action,
    diag_action,
    diag_from_json,
    enumerate_level,
    enumerate_total_by_matching,
    nerve_action,
    phi,
    total_action,
    total_matching_violations,
    total_to_wbar,
    verify_iso,
    wbar_action,
    wbar_from_json,
    wbar_to_total,
)
from simpgrp.delta import MonotoneMap, all_monotone_maps, coface, codegeneracy, identity_map
from simpgrp.groups import cyclic_group, symmetric_group_3
from simpgrp.simplicial import constant_simplicial_group, translation_simplicial_group


@pytest.fixture(scope="module")
def ec2():
    return translation_simplicial_group(cyclic_group(2), 4)


@pytest.fixture(scope="module")
def s3const():
    return constant_simplicial_group(symmetric_group_3(), 4)


def test_nerve_action_faces():
    s3 = symmetric_group_3()
    g1, g0 = 3, 5
    pair = NerveSimplex(0, (g1, g0))
    # The middle face multiplies adjacent entries, in descending order.
    merged = nerve_action(s3, coface(2, 1), pair)
    assert merged.entries == (s3.mult[g1][g0],)
    assert nerve_action(s3, coface(2, 0), pair).entries == (g1,)
    assert nerve_action(s3, coface(2, 2), pair).entries == (g0,)
    assert nerve_action(s3, identity_map(2), pair) == pair


def test_nerve_action_degeneracy_inserts_identity():
    s3 = symmetric_group_3()
    single = NerveSimplex(0, (4,))
    expanded = nerve_action(s3, codegeneracy(1, 0), single)
    assert expanded.entries == (4, s3.identity)
    other = nerve_action(s3, codegeneracy(1, 1), single)
    assert other.entries == (s3.identity, 4)


def test_nerve_action_dimension_mismatch():
    with pytest.raises(ValueError):
        nerve_action(cyclic_group(2), coface(2, 0), NerveSimplex(0, (1,)))


def test_bisimplicial_directions_commute(ec2):
    # (alpha, id) then (id, beta) equals (id, beta) then (alpha, id) equals (alpha, beta).
    alphas = [coface(2, k) for k in range(3)] + [codegeneracy(1, k) for k in range(2)]
    betas = [coface(2, k) for k in range(3)] + [codegeneracy(1, k) for k in range(2)]
    for alpha in alphas:
        level = alpha.dst
        for beta in betas:
            length = beta.dst
            order = ec2.levels[level].order
            for x in range(order):
                for y in range(order):
                    simplex = NerveSimplex(level, (x, y)) if length == 2 else None
                    if simplex is None:
                        continue
                    horizontal_first = nerve_action(
                        ec2.levels[alpha.src],
                        beta,
                        bisimplicial_action(ec2, alpha, identity_map(length), simplex),
                    )
                    vertical_first = bisimplicial_action(
                        ec2, alpha, identity_map(beta.src), nerve_action(ec2.levels[level], beta, simplex)
                    )
                    joint = bisimplicial_action(ec2, alpha, beta, simplex)
                    assert horizontal_first == vertical_first == joint


def test_diag_action_examples(ec2):
    x = DiagSimplex(1, (2,))
    assert diag_action(ec2, identity_map(1), x) == x
    assert diag_action(ec2, coface(1, 0), x) == DiagSimplex(0, ())
    # Degeneracy: horizontal s_0 on the entry, then the nerve inserts an identity.
    up = diag_action(ec2, codegeneracy(1, 0), x)
    assert up == DiagSimplex(2, (ec2.degeneracies[1][0].image[2], 0))


def test_total_action_preserves_matching(ec2):
    for n in range(4):
        totals = list(enumerate_level(ec2, "total", n))
        for theta_src in range(4):
            for theta in all_monotone_maps(theta_src, n):
                for t in totals:
                    moved = total_action(ec2, theta, t)
                    assert total_matching_violations(ec2, moved) == []


def test_total_action_identity_and_vertex(ec2):
    t = wbar_to_total(ec2, WBarSimplex(2, (3, 1)))
    assert total_action(ec2, identity_map(2), t) == t
    vertex = total_action(ec2, MonotoneMap(0, 2, (0,)), t)
    assert vertex.dim == 0
    assert vertex.components[0].entries == ()


def test_phi_small_dimensions(ec2):
    assert phi(ec2, DiagSimplex(0, ())) == TotalSimplex(0, (NerveSimplex(0, ()),))
    g = 2
    image = phi(ec2, DiagSimplex(1, (g,)))
    assert image.component(1) == NerveSimplex(1, ())
    assert image.component(0) == NerveSimplex(0, (ec2.faces[1][1].image[g],))


def test_phi_output_satisfies_matching(ec2, s3const):
    for G in (ec2, s3const):
        for n in range(4):
            for x in enumerate_level(G, "diag", n):
                assert total_matching_violations(G, phi(G, x)) == []


def test_phi_is_a_simplicial_map(ec2, s3const):
    for G in (ec2, s3const):
        for n in range(3):
            for src in range(4):
                for theta in all_monotone_maps(src, n):
                    for x in enumerate_level(G, "diag", n):
                        lhs = phi(G, diag_action(G, theta, x))
                        rhs = total_action(G, theta, phi(G, x))
                        assert lhs == rhs


def test_wbar_action_examples(ec2):
    w = WBarSimplex(2, (3, 1))
    assert wbar_action(ec2, identity_map(2), w) == w
    # Middle face: the top entry is pushed down by d_1 and multiplied onto g_0.
    g1, g0 = 3, 1
    pushed = ec2.faces[1][1].image[g1]
    expected = ec2.levels[0].mult[pushed][g0]
    assert wbar_action(ec2, coface(2, 1), w) == WBarSimplex(1, (expected,))
    # Every 1-simplex has the unique vertex as both faces.
    for g in range(ec2.levels[0].order):
        one = WBarSimplex(1, (g,))
        assert wbar_action(ec2, coface(1, 0), one) == WBarSimplex(0, ())
        assert wbar_action(ec2, coface(1, 1), one) == WBarSimplex(0, ())


def test_wbar_to_total_small_dimensions(ec2):
    assert wbar_to_total(ec2, WBarSimplex(0, ())).components == (NerveSimplex(0, ()),)
    w1 = WBarSimplex(1, (1,))
    t1 = wbar_to_total(ec2, w1)
    assert t1.component(1) == NerveSimplex(1, ())
    assert t1.component(0) == NerveSimplex(0, (1,))
    g1, g0 = 3, 1
    t2 = wbar_to_total(ec2, WBarSimplex(2, (g1, g0)))
    assert t2.component(2) == NerveSimplex(2, ())
    assert t2.component(1) == NerveSimplex(1, (g1,))
    assert t2.component(0) == NerveSimplex(0, (ec2.faces[1][1].image[g1], g0))
    assert total_matching_violations(ec2, t2) == []


def test_total_to_wbar_inverts(ec2, s3const):
    for G, top in ((ec2, 3), (s3const, 4)):
        for n in range(top + 1):
            for w in enumerate_level(G, "wbar", n):
                assert total_to_wbar(G, wbar_to_total(G, w)) == w


def test_iso_check(ec2, s3const):
    for G in (ec2, s3const):
        for n in range(4):
            report = verify_iso(G, n)
            assert report.ok, report.failures[0].to_json()


def test_matching_enumeration_agrees_with_iso_image(ec2):
    c3const = constant_simplicial_group(cyclic_group(3), 4)
    for G in (ec2, c3const):
        for n in range(4):
            direct = {t for t in enumerate_total_by_matching(G, n)}
            image = {wbar_to_total(G, w) for w in enumerate_level(G, "wbar", n)}
            assert direct == image


def test_enumeration_counts(ec2):
    c2const = constant_simplicial_group(cyclic_group(2), 5)
    assert len(list(enumerate_level(c2const, "wbar", 0))) == 1
    assert len(list(enumerate_level(c2const, "wbar", 4))) == 16
    assert len(list(enumerate_level(ec2, "diag", 3))) == 4096
    with pytest.raises(ValueError):
        list(enumerate_level(ec2, "diag", 3, limit=100))
    with pytest.raises(ValueError):
        enumerate_level(ec2, "nonsense", 1)


def test_simplex_payload_validation(ec2):
    w = wbar_from_json({"dim": 2, "entries": [3, 1]}, ec2)
    assert w == WBarSimplex(2, (3, 1))
    with pytest.raises(ValueError):
        wbar_from_json({"dim": 2, "entries": [4, 1]}, ec2)  # 4 outside G_1
    x = diag_from_json({"dim": 2, "entries": [7, 5]}, ec2)
    assert x == DiagSimplex(2, (7, 5))
    with pytest.raises(ValueError):
        diag_from_json({"dim": 2, "entries": [8, 0]}, ec2)
    with pytest.raises(ValueError):
        diag_from_json({"dim": 2, "entries": [1]}, ec2)
    with pytest.raises(ValueError):
        diag_from_json({"entries": []}, ec2)


def test_structural_validation():
    with pytest.raises(ValueError):
        DiagSimplex(2, (0,))
    with pytest.raises(ValueError):
        WBarSimplex(1, (0, 0))
    with pytest.raises(ValueError):
        TotalSimplex(1, (NerveSimplex(1, ()),))
    with pytest.raises(ValueError):
        TotalSimplex(1, (NerveSimplex(1, (0,)), NerveSimplex(0, (0,))))
