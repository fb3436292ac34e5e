from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from su3q.laurent import (
    A,
    ONE,
    S,
    ZERO,
    LaurentPoly,
    product,
    quantum_integer,
    s_diff,
    unit_equivalent,
    unit_ratio,
)

laurents = st.dictionaries(st.integers(-12, 12), st.integers(-20, 20), max_size=6).map(LaurentPoly.from_dict)
points = st.fractions(min_value=Fraction(-5), max_value=Fraction(5)).filter(lambda x: x != 0)

a_sym = sympy.symbols("a")


def to_sympy(p: LaurentPoly):
    return sum(c * a_sym**e for e, c in p.terms())


def test_canonical_form():
    p = LaurentPoly.from_dict({-3: 2, 0: 0, 5: -1})
    assert p.low() == -3 and p.high() == 5
    assert p.terms() == [(-3, 2), (5, -1)]
    assert LaurentPoly.from_dict({2: 0}) == ZERO
    assert ZERO.is_zero() and not ONE.is_zero()


def test_quantum_integers():
    assert quantum_integer(1) == ONE
    assert quantum_integer(2) == S + S ** -1
    assert quantum_integer(3) == S**2 + ONE + S**-2
    with pytest.raises(ValueError):
        quantum_integer(0)


@pytest.mark.parametrize("n", range(1, 9))
def test_quantum_integer_matches_ratio(n):
    # [n] (s - 1/s) = s^n - s^-n
    assert quantum_integer(n) * s_diff(1) == s_diff(n)
    assert quantum_integer(n).evaluate(1) == n


def test_divexact_and_divides():
    p = quantum_integer(6) * quantum_integer(4)
    assert p.divexact(quantum_integer(4)) == quantum_integer(6)
    assert quantum_integer(3).divides(quantum_integer(6))
    assert not quantum_integer(4).divides(quantum_integer(6))
    with pytest.raises(ArithmeticError):
        quantum_integer(6).divexact(quantum_integer(4))


def test_gcd_against_sympy():
    p = quantum_integer(6) * (A + 3)
    q = quantum_integer(4) * (A + 3) * A**-5
    g = p.gcd(q)
    expected = sympy.gcd(sympy.expand(to_sympy(p) * a_sym**20), sympy.expand(to_sympy(q) * a_sym**20))
    expected_poly = LaurentPoly.from_dict({m[0]: int(c) for m, c in sympy.Poly(expected, a_sym).terms()})
    assert unit_equivalent(g, expected_poly)
    assert g.divides(p) and g.divides(q)


def test_unit_equivalence():
    p = quantum_integer(5)
    assert unit_equivalent(p, -p * A**7)
    assert unit_ratio(-p * A**7, p) == (-1, 7)
    assert not unit_equivalent(p, p * 2)
    assert unit_ratio(p, quantum_integer(3)) is None


def test_text_roundtrip():
    p = LaurentPoly.from_dict({-4: 3, 1: -7, 9: 1})
    assert LaurentPoly.from_text(p.to_text()) == p
    assert LaurentPoly.from_compact(p.to_compact()) == p
    assert LaurentPoly.from_compact(ZERO.to_compact()) == ZERO


def test_pretty_in_s():
    assert (S**2 - 1).pretty() == "s^2 - 1"
    assert quantum_integer(2).pretty() == "s + s^-1"


def test_product():
    assert product([quantum_integer(2), quantum_integer(3)]) == quantum_integer(2) * quantum_integer(3)
    assert product([]) == ONE


@given(laurents, laurents, laurents)
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)
    assert p - p == ZERO
    assert p * q == q * p


@given(laurents, laurents, points)
def test_evaluation_is_a_homomorphism(p, q, x):
    assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
    assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)


@given(laurents, points)
def test_evaluation_matches_sympy(p, x):
    value = sympy.sympify(to_sympy(p)).subs(a_sym, sympy.Rational(x.numerator, x.denominator))
    assert p.evaluate(x) == Fraction(int(sympy.numer(value)), int(sympy.denom(value)))


@given(laurents)
def test_bar_is_an_involution(p):
    assert p.bar().bar() == p
    assert p.bar().evaluate(Fraction(1, 2)) == p.evaluate(Fraction(2))


@given(laurents, laurents)
def test_product_divides_back(p, q):
    if q.is_zero():
        return
    assert (p * q).divexact(q) == p
