from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from matsuo.algebra import central_charge, construct_algebra
from matsuo.roots import build_transposition_set
from matsuo.scalars import ALPHA, PoleError
from matsuo.symmetric import sym_coset_axis
from matsuo.virasoro import (KacLabel, MinimalModel, asymptote_check, central_charge_pq,
                             coset_cc_curve, derive_algebra_fusion_rules, halved_weights,
                             is_formal_d, kac_table_markdown, kac_weight, match_kac_observations,
                             printed_v53_table, vir_fusion)

F = Fraction


@pytest.mark.parametrize("p, q, c", [(5, 4, F(7, 10)), (12, 11, F(21, 22)), (4, 3, F(1, 2)),
                                     (5, 3, F(-3, 5))])
def test_central_charges(p, q, c):
    assert central_charge_pq(MinimalModel(p, q)) == c


@pytest.mark.parametrize("p, q", [(4, 2), (6, 6), (1, 3)])
def test_invalid_models(p, q):
    with pytest.raises(ValueError):
        MinimalModel(p, q)


@pytest.mark.parametrize("p, q, r, s, h", [(5, 4, 3, 1, F(3, 5)), (5, 3, 4, 1, F(3, 4)),
                                           (7, 3, 1, 1, F(0)), (5, 3, 2, 1, F(-1, 20))])
def test_kac_weights(p, q, r, s, h):
    assert kac_weight(MinimalModel(p, q), KacLabel(r, s)) == h


def test_out_of_range_label():
    with pytest.raises(ValueError):
        kac_weight(MinimalModel(5, 4), KacLabel(5, 1))


models = st.tuples(st.integers(2, 12), st.integers(2, 12)).filter(lambda pq: math.gcd(*pq) == 1)


@given(models)
def test_kac_symmetry(pq):
    m = MinimalModel(*pq)
    for lab in m.labels():
        mirror = KacLabel(m.p - lab.r, m.q - lab.s)
        assert kac_weight(m, lab) == kac_weight(m, mirror)


@given(models, st.data())
def test_fusion_symmetric_with_vacuum(pq, data):
    m = MinimalModel(*pq)
    labels = m.labels()
    a = data.draw(st.sampled_from(labels))
    b = data.draw(st.sampled_from(labels))
    assert vir_fusion(m, a, b) == vir_fusion(m, b, a)
    assert vir_fusion(m, KacLabel(1, 1), a) == {a}
    assert all(m.contains(c) for c in vir_fusion(m, a, b))


def test_fusion_examples():
    m = MinimalModel(5, 3)
    assert vir_fusion(m, KacLabel(2, 1), KacLabel(2, 1)) == {KacLabel(1, 1), KacLabel(3, 1)}
    assert vir_fusion(m, KacLabel(4, 1), KacLabel(4, 1)) == {KacLabel(1, 1)}


def test_halved_weights_deduplicate():
    w = halved_weights(MinimalModel(5, 3))
    assert sorted(w) == [F(-1, 40), F(0), F(1, 10), F(3, 8)]
    assert all(len(labels) == 2 for labels in w.values())


def test_v53_table():
    derived = derive_algebra_fusion_rules(MinimalModel(5, 3))
    printed = printed_v53_table()
    assert derived == printed
    assert derived.canonical().to_json() == printed.canonical().to_json()
    assert derived[F(-1, 40), F(-1, 40)] == {1, 0, F(1, 10)}


@pytest.mark.parametrize("m", range(2, 9))
def test_quarter_curve(m):
    assert coset_cc_curve("A", F(1, 4), m) == 1 - F(6, (m + 2) * (m + 3))
    assert coset_cc_curve("A", F(1, 4), m) == central_charge_pq(MinimalModel(m + 3, m + 2))
    assert coset_cc_curve("D", F(1, 4), m) == 1


def test_d_curve_is_formal_below_five():
    assert is_formal_d(4) and not is_formal_d(5)


def test_curve_pole():
    with pytest.raises(PoleError):
        coset_cc_curve("D", F(1, 4), 1)
    with pytest.raises(ValueError):
        coset_cc_curve("E", F(1, 4), 3)


def test_thirty_second():
    assert coset_cc_curve("A", F(1, 32), 2) == F(21, 22)


@pytest.mark.parametrize("alpha", [F(1, 4), F(1, 7), F(1, 32)])
@pytest.mark.parametrize("m", range(1, 6))
def test_curve_matches_gram_form(alpha, m):
    A = construct_algebra(build_transposition_set("A", m), alpha)
    assert central_charge(A, sym_coset_axis(A, m + 1, m).vector) == coset_cc_curve("A", alpha, m)


def test_asymptotes():
    a = asymptote_check("A")
    assert a.equal_degree and a.limit_ok and a.leading_ratio == 1 / (4 * ALPHA)
    assert a.value_at_one_is_half and a.ok
    d = asymptote_check("D")
    assert d.equal_degree and d.limit_ok
    assert d.value_at_one == 0  # the (m - 1) factor kills the value at one


@pytest.mark.parametrize("m", range(2, 9))
def test_kac_observations(m):
    rows = {r.name: r for r in match_kac_observations(m)}
    assert all(r.status in ("pass", "skipped") for r in rows.values())
    assert (rows["eta_hat(m+1)-eta(m)"].status == "skipped") == (m < 3)
    assert (rows["eta_hat(m+1)-eta_hat(m)"].status == "skipped") == (m < 4)


def test_observation_examples():
    rows = {r.name: r for r in match_kac_observations(2)}
    assert rows["eta(m+1)"].eigenvalue == F(3, 10) == rows["eta(m+1)"].half_weight
    rows = {r.name: r for r in match_kac_observations(3)}
    assert rows["eta_hat(m+1)-eta(m)"].half_weight == F(1, 5)
    rows = {r.name: r for r in match_kac_observations(4)}
    assert rows["eta_hat(m+1)-eta_hat(m)"].half_weight == F(1, 14)


def test_kac_markdown():
    text = kac_table_markdown(MinimalModel(5, 3))
    assert text.startswith("c(5,3) = -3/5")
    for h in ("0", "-1/20", "1/5", "3/4"):
        assert f" {h} |" in text
    assert "| 2 | -1/40 | 1/10 |" in kac_table_markdown(MinimalModel(5, 3), halved=True)
