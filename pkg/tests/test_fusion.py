from __future__ import annotations

import json
from fractions import Fraction

import pytest

from matsuo.algebra import axis, construct_algebra
from matsuo.fusion import (AutomorphismError, FusionTable, Grading, assoc_rules,
                           check_axial_representation, coset_rules, find_z2_gradings, fusion_table,
                           is_grading, miyamoto_involution, phi3_rules, primitivity,
                           standard_grading)
from matsuo.roots import build_transposition_set
from matsuo.scalars import ALPHA, QQA
from matsuo.spectral import eigendecompose, eta, closed_form_candidates
from matsuo.symmetric import sym_coset_axis

Q = Fraction(1, 4)


def type_a(points, alpha=Q, hat=False):
    return construct_algebra(build_transposition_set("A", points - 1), alpha, hat)


def test_axis_table_is_phi3():
    A = type_a(3)
    dec = eigendecompose(A, axis(A, 0))
    assert fusion_table(A, dec) == phi3_rules(Q)
    assert primitivity(dec)


def test_symbolic_axis_table():
    A = type_a(4, ALPHA)
    x = axis(A, 2)
    dec = eigendecompose(A, x, closed_form_candidates(A, x))
    assert fusion_table(A, dec) == phi3_rules(ALPHA)


def test_phi3_gradings():
    gs = find_z2_gradings(phi3_rules(Q))
    assert [g.minus for g in gs] == [frozenset(), frozenset({Q})]
    assert gs[0].trivial and not gs[1].trivial


def test_coset_table_matches_rules_exactly():
    A = type_a(6)
    x = sym_coset_axis(A, 4, 3)
    table = fusion_table(A, eigendecompose(A, x))
    ref = coset_rules(Q, 4, 3)
    assert table.is_contained_in(ref)
    assert table == ref
    assert [g.trivial for g in find_z2_gradings(table)] == [True]


def test_assoc_rules_have_only_trivial_grading():
    assert [g.trivial for g in find_z2_gradings(assoc_rules())] == [True]


def test_containment_and_violations():
    small = FusionTable([1, 0], {(1, 1): {1}, (0, 0): {0}, (1, 0): {0}})
    assert not small.is_contained_in(assoc_rules())
    assert small.violations(assoc_rules()) == [((1, 0), frozenset({0}))]


def test_asymmetric_entries_rejected():
    with pytest.raises(ValueError):
        FusionTable([1, 0], {(1, 0): {1}, (0, 1): {0}})
    with pytest.raises(ValueError):
        FusionTable([1, 0], {(1, 1): {Fraction(1, 2)}})


def test_json_round_trip_rational_and_symbolic():
    t = coset_rules(Fraction(1, 7), 5, 4)
    assert FusionTable.from_json(json.loads(json.dumps(t.to_json()))) == t
    s = coset_rules(ALPHA, 5, 4)
    assert FusionTable.from_json(s.to_json(), QQA) == s


def test_canonical_order():
    t = phi3_rules(Q).canonical()
    assert t.eigenvalues == (1, 0, Q)


def test_text_rendering():
    text = phi3_rules(Q).to_text()
    lines = text.splitlines()
    assert lines[0].split(" | ") == ["*  ", "1  ", "0  ", "1/4"]
    assert "{1, 0}" in lines[-1]


def test_miyamoto_involution_is_conjugation():
    A = type_a(4)
    assert check_axial_representation(A)
    D4 = construct_algebra(build_transposition_set("D", 4), Fraction(1, 7))
    assert check_axial_representation(D4)


def test_bad_grading_is_not_an_automorphism():
    A = type_a(5)
    x = sym_coset_axis(A, 5, 4)
    dec = eigendecompose(A, x)
    lam = 1 - eta(Q, 4)
    fake = Grading(frozenset(v for v in dec.eigenvalues if v != lam), frozenset({lam}))
    table = fusion_table(A, dec)
    assert not is_grading(table, fake.minus)
    with pytest.raises(ValueError):
        miyamoto_involution(A, dec, fake, table)
    with pytest.raises(AutomorphismError):
        miyamoto_involution(A, dec, fake)


def test_trivial_grading_gives_identity():
    A = type_a(4)
    dec = eigendecompose(A, axis(A, 1))
    tau = miyamoto_involution(A, dec, Grading(frozenset(dec.eigenvalues), frozenset()))
    assert tau.is_identity()
    tau = miyamoto_involution(A, dec, standard_grading(Q))
    assert tau.squares_to_identity() and not tau.is_identity()


def test_hat_axial_check_refused():
    with pytest.raises(ValueError):
        check_axial_representation(type_a(3, hat=True))
