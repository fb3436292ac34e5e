"""Published values for the Conway / Kinoshita-Teresaka difference.

All three polynomials are known only up to a signed power of ``s``, so they
are compared with :func:`su3q.laurent.unit_equivalent`.  Each is stored
twice: as the cyclotomic factorisation and as the ``s^k - s^-k`` form, and
the test-suite checks the two agree.
"""

from __future__ import annotations

import re

from .laurent import LaurentPoly, product, s_diff, s_power

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(s(?:\^(-?\d+))?)?")


def poly_in_s(text: str) -> LaurentPoly:
    """Parse an integer Laurent polynomial written in ``s``, e.g. ``"2s^20 + s^18 - 1"``."""
    terms: dict[int, int] = {}
    body = text.replace(" ", "")
    pos = 0
    while pos < len(body):
        m = _TERM.match(body, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {body[pos:]!r}")
        sign, coeff, var, exp = m.groups()
        if not coeff and not var:
            raise ValueError(f"empty term in {text!r}")
        c = int(coeff) if coeff else 1
        if sign == "-":
            c = -c
        e = (int(exp) if exp else 1) if var else 0
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
    return LaurentPoly.from_s(terms)


def _p(text: str, power: int = 1) -> LaurentPoly:
    return poly_in_s(text) ** power


PHI3 = "s^2 + s + 1"
PHI6 = "s^2 - s + 1"
PHI5 = "s^4 + s^3 + s^2 + s + 1"
PHI10 = "s^4 - s^3 + s^2 - s + 1"
PHI7 = "s^6 + s^5 + s^4 + s^3 + s^2 + s + 1"
PHI14 = "s^6 - s^5 + s^4 - s^3 + s^2 - s + 1"
PHI12 = "s^4 - s^2 + 1"

DEGREE_46_FACTOR = (
    "s^46 - s^44 + 2s^40 - 4s^38 + 2s^36 + 3s^34 - 4s^32 + 6s^30 - s^28 - 3s^26 + 6s^24"
    " - 4s^22 + 4s^20 + 2s^18 - 5s^16 + 5s^14 - 2s^12 - 2s^10 + 4s^8 - 2s^6 + s^2 - 1"
)
T31_FACTORS = ("2s^20 + s^18 + s^14 - s^12 + 2s^8 - s^6 - 1", "s^22 - s^20 + s^16 - 2s^14 + 3s^12 + 2s^10 - s^8 + 2s^6 + 2")
T12_FACTORS = ("s^18 - s^16 - s^14 + 2s^12 - 2s^10 + 2s^6 - 2s^4 - s^2 + 1", "s^10 - s^8 + s^4 - s^2 + 1")

# (k, multiplicity) for the factors s^k - s^-k shared by every mutant difference
DIVISOR_EXPONENTS = ((8, 2), (7, 1), (6, 1), (5, 1), (4, 2), (3, 2), (2, 1), (1, 3))


def s_diff_product(exponents) -> LaurentPoly:
    return product(s_diff(k) ** m for k, m in exponents)


def total_difference_factored() -> LaurentPoly:
    return s_power(-80) * product(
        [
            _p("s^8 + 1", 2),
            _p("s^4 + 1", 4),
            _p("s + 1", 13),
            _p("s - 1", 13),
            _p(PHI6, 3),
            _p(PHI3, 3),
            _p(PHI14),
            _p(PHI7),
            _p(PHI10),
            _p(PHI5),
            _p(PHI12),
            _p("s^2 + 1", 6),
            _p(DEGREE_46_FACTOR),
        ]
    )


def total_difference_symmetric() -> LaurentPoly:
    return _p(DEGREE_46_FACTOR) * s_diff_product(DIVISOR_EXPONENTS)


def t31_factored() -> LaurentPoly:
    return product(
        [
            _p("s^8 + 1", 2),
            _p("s^2 + 1", 4),
            _p("s^4 + 1", 3),
            _p("s + 1", 13),
            _p("s - 1", 13),
            s_power(6),
            _p(PHI6),
            _p(PHI3),
            _p(PHI10),
            _p(PHI5),
            _p(PHI14),
            _p(PHI7),
            _p(T31_FACTORS[0]),
            _p(T31_FACTORS[1]),
        ]
    )


def t31_symmetric() -> LaurentPoly:
    rest = s_diff_product(((8, 2), (7, 1), (5, 1), (4, 1), (3, 1), (2, 1), (1, 6)))
    return _p(T31_FACTORS[0]) * _p(T31_FACTORS[1]) * rest * s_power(49)


def t12_factored() -> LaurentPoly:
    return product(
        [
            _p(PHI14, 2),
            _p(PHI7, 2),
            _p(PHI12),
            _p("s^8 + 1", 2),
            _p("s^4 + 1", 5),
            _p("s^2 + 1", 8),
            _p(PHI3),
            _p(PHI6),
            _p("s - 1", 14),
            _p("s + 1", 14),
            _p(T12_FACTORS[1]),
            _p(T12_FACTORS[0]),
        ]
    )


def t12_symmetric() -> LaurentPoly:
    rest = s_diff_product(((8, 2), (7, 2), (6, 1), (4, 3), (2, 2), (1, 4)))
    return _p(T12_FACTORS[0]) * _p(T12_FACTORS[1]) * rest * s_power(56)


# h^13 coefficient of the difference, up to sign: 7 * 8^2*7*6*5*4^2*3^2*2
VASSILIEV_ORDER = 13
VASSILIEV_COEFFICIENT = 7 * 8**2 * 7 * 6 * 5 * 4**2 * 3**2 * 2
