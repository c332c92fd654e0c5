from __future__ import annotations

import dataclasses
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from matsuo.algebra import axis, construct_algebra, subalgebra_identity
from matsuo.roots import build_transposition_set
from matsuo.scalars import ALPHA, evaluate_at
from matsuo.spectral import (ContainmentError, SpectralError, ad_matrix, check_containments,
                             eigendecompose, eta, eta_hat, closed_form_candidates, sym_degree_to_m)
from matsuo.symmetric import sym_coset_axis, sym_identity

Q = Fraction(1, 4)


def type_a(points, alpha=Q, hat=False):
    return construct_algebra(build_transposition_set("A", points - 1), alpha, hat)


def test_eta_values():
    assert eta(Q, 3) == Fraction(3, 10)
    assert eta(Q, 4) == Fraction(1, 3)
    assert eta_hat(Q, 4) == Fraction(1, 2)
    assert eta_hat(Q, 5) == Fraction(4, 7)
    assert eta(ALPHA, 2) == ALPHA


@pytest.mark.parametrize("k, m", [(None, 1), (0, 2), (2, 3), (4, 4), (6, 5)])
def test_degree_to_m(k, m):
    assert sym_degree_to_m(k) == m


def test_axis_decomposition():
    A = type_a(3)
    dec = eigendecompose(A, axis(A, 0))
    assert dec.eigenvalues == [1, Q, 0]
    assert dec.dims == {1: 1, Q: 1, 0: 1}
    assert dec.minimal_polynomial == (0, Q, -1 - Q, 1)


def test_identity_minimal_polynomial_is_linear():
    A = type_a(4)
    dec = eigendecompose(A, subalgebra_identity(A, range(A.n)))
    assert dec.minimal_polynomial == (-1, 1)


def test_eigenvalues_match_sympy_oracle():
    A = type_a(5)
    x = sym_coset_axis(A, 4, 3)
    M = ad_matrix(A, x.vector)
    S = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in M])
    oracle = {Fraction(int(k.p), int(k.q)): v for k, v in S.eigenvals().items()}
    dec = eigendecompose(A, x)
    assert dec.dims == oracle
    for lam, vs in dec.pairs:
        for v in vs:
            assert A.multiply(x.vector, v) == v * lam


def test_symbolic_candidates_and_missing():
    A = type_a(5, ALPHA)
    x = sym_coset_axis(A, 5, 4)
    dec = eigendecompose(A, x, closed_form_candidates(A, x))
    assert dec.complete
    assert set(dec.missing) == {eta(ALPHA, 5), eta(ALPHA, 5) - eta(ALPHA, 4)}
    assert dec.dims == {1: 1, 0: 6, 1 - eta(ALPHA, 4): 3}


def test_symbolic_specialises_to_rational():
    S = type_a(5, ALPHA)
    xs = sym_coset_axis(S, 4, 3)
    sym = eigendecompose(S, xs, closed_form_candidates(S, xs))
    for value in (Fraction(1, 7), Fraction(1, 32)):
        R = type_a(5, value)
        rat = eigendecompose(R, sym_coset_axis(R, 4, 3))
        assert {evaluate_at(l, value): d for l, d in sym.dims.items()} == rat.dims


def test_symbolic_requires_candidates():
    A = type_a(3, ALPHA)
    with pytest.raises(SpectralError):
        eigendecompose(A, axis(A, 0))


def test_zero_idempotent_rejected():
    A = type_a(3)
    with pytest.raises(SpectralError):
        eigendecompose(A, subalgebra_identity(A, []))


def test_incomplete_decomposition_has_no_coordinates():
    A = type_a(4)
    dec = eigendecompose(A, sym_coset_axis(A, 4, 3), [1, 0])
    assert not dec.complete
    with pytest.raises(SpectralError):
        dec.components(A.basis(0))


coeffs = st.lists(st.integers(min_value=-4, max_value=4), min_size=10, max_size=10)


@settings(max_examples=30, deadline=None)
@given(coeffs)
def test_projections_reassemble_vector(cs):
    A = type_a(5)
    dec = eigendecompose(A, sym_coset_axis(A, 5, 3))
    v = A.from_list([Fraction(c) for c in cs])
    total = A.zero()
    for lam in dec.eigenvalues:
        total = total + dec.projection(v, lam)
    assert total == v
    dense = dataclasses.replace(dec, matrix=None)
    assert dec.support(v) == dense.support(v)


def test_containments_plain_and_hat():
    A = type_a(6)
    report = check_containments(A, sym_identity(A, 5), sym_identity(A, 4))
    assert report.ok and report.commute
    H = type_a(5, hat=True)
    report = check_containments(H, sym_identity(H, 5), sym_identity(H, 4))
    assert report.checks["eta_hat_m_in_eta_eta_hat_l"]


def test_containment_failure_raises():
    # The roles reversed: Sym(5) cannot sit inside Sym(4).
    A = type_a(6)
    with pytest.raises(ContainmentError):
        check_containments(A, sym_identity(A, 4), sym_identity(A, 5))


def test_to_json_is_serialisable():
    import json
    A = type_a(4)
    dec = eigendecompose(A, sym_identity(A, 3))
    doc = dec.to_json()
    assert json.loads(json.dumps(doc)) == doc
    assert [d["eigenvalue"] for d in doc] == ["1", "3/10", "0"]
