from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from matsuo import linalg

entries = st.integers(min_value=-3, max_value=3).map(Fraction)


def square(n):
    return st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n)


def sym(M):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in M])


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=1, max_value=5).flatmap(square))
def test_rank_and_kernel_match_sympy(M):
    S = sym(M)
    assert linalg.rank(M) == S.rank()
    ker = linalg.kernel(M)
    assert len(ker) == len(M[0]) - S.rank()
    for v in ker:
        assert all(x == 0 for x in linalg.matvec(M, v))


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=1, max_value=5).flatmap(square))
def test_minimal_polynomial_matches_sympy(M):
    t = sympy.Symbol("t")
    ours = sum(sympy.Rational(c.numerator, c.denominator) * t**k
               for k, c in enumerate(linalg.minimal_polynomial(M)))
    theirs = sym(M).minimal_polynomial(t) if hasattr(sympy.Matrix, "minimal_polynomial") else None
    if theirs is not None:
        assert sympy.expand(ours - theirs) == 0
    # Cayley-Hamilton style check: p(M) == 0 regardless of the oracle.
    P = sympy.zeros(len(M))
    for k, c in enumerate(linalg.minimal_polynomial(M)):
        P += sympy.Rational(c.numerator, c.denominator) * sym(M) ** k
    assert P == sympy.zeros(len(M))


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=1, max_value=4).flatmap(square))
def test_inverse(M):
    if sym(M).det() == 0:
        with pytest.raises(ZeroDivisionError):
            linalg.inverse(M)
        return
    inv = linalg.inverse(M)
    assert linalg.matmul(M, inv) == linalg.identity(len(M))


def test_rational_roots():
    # (t - 1/2)(t + 3)(t^2 + 1)
    p = sympy.Poly((sympy.Symbol("t") - sympy.Rational(1, 2)) * (sympy.Symbol("t") + 3)
                   * (sympy.Symbol("t") ** 2 + 1))
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs())]
    assert sorted(linalg.rational_roots(coeffs)) == [Fraction(-3), Fraction(1, 2)]
    assert linalg.deflate(coeffs, [Fraction(-3), Fraction(1, 2)]) == (1, 0, 1)


def test_identity_minimal_polynomial():
    assert linalg.minimal_polynomial(linalg.identity(3)) == (Fraction(-1), Fraction(1))


def test_in_span():
    basis = [[Fraction(1), Fraction(0), Fraction(1)]]
    assert linalg.in_span(basis, [Fraction(2), Fraction(0), Fraction(2)])
    assert not linalg.in_span(basis, [Fraction(0), Fraction(1), Fraction(0)])
