"""Laurent polynomials in the variable ``a`` with integer coefficients.

The variable of record is ``a = exp(h/4)``; ``s = a**2`` and ``q = a**4`` are
derived.  A polynomial is stored as ``a**shift * p(a)`` where ``p`` is a
:class:`flint.fmpz_poly` with nonzero constant term (or ``p == 0`` and
``shift == 0`` for the zero polynomial), so equality is structural.
"""

from __future__ import annotations

from typing import Iterable, Mapping

import flint

_ZERO_POLY = flint.fmpz_poly([])


def _valuation(p: flint.fmpz_poly) -> int:
    k = 0
    while p[k] == 0:
        k += 1
    return k


class LaurentPoly:
    __slots__ = ("_p", "_v", "_hash")

    def __init__(self, poly: flint.fmpz_poly | None = None, shift: int = 0):
        if poly is None or poly.is_zero():
            self._p = _ZERO_POLY
            self._v = 0
        else:
            k = _valuation(poly)
            self._p = poly.right_shift(k) if k else poly
            self._v = shift + k
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> LaurentPoly:
        terms = {e: int(c) for e, c in terms.items() if c}
        if not terms:
            return ZERO
        lo = min(terms)
        coeffs = [0] * (max(terms) - lo + 1)
        for e, c in terms.items():
            coeffs[e - lo] = c
        return cls(flint.fmpz_poly(coeffs), lo)

    @classmethod
    def from_s(cls, terms: Mapping[int, int]) -> LaurentPoly:
        """Build from a ``{power of s: coefficient}`` mapping."""
        return cls.from_dict({2 * e: c for e, c in terms.items()})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        if coeff == 0:
            return ZERO
        return cls(flint.fmpz_poly([coeff]), exponent)

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls.monomial(0, c)

    # -- structure --------------------------------------------------------
    @property
    def poly(self) -> flint.fmpz_poly:
        return self._p

    @property
    def shift(self) -> int:
        return self._v

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def __bool__(self) -> bool:
        return not self._p.is_zero()

    def low(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no lowest exponent")
        return self._v

    def high(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no highest exponent")
        return self._v + self._p.degree()

    def length(self) -> int:
        return self._p.length()

    def terms(self) -> list[tuple[int, int]]:
        """Nonzero ``(exponent, coefficient)`` pairs in ascending exponent order."""
        return [(self._v + i, int(c)) for i, c in enumerate(self._p.coeffs()) if c != 0]

    def to_dict(self) -> dict[int, int]:
        return dict(self.terms())

    def coefficient(self, exponent: int) -> int:
        i = exponent - self._v
        if i < 0 or self.is_zero():
            return 0
        return int(self._p[i])

    def is_monomial(self) -> bool:
        return self._p.length() == 1

    def is_unit(self) -> bool:
        """True for ``±a**k``."""
        return self._p.length() == 1 and abs(int(self._p[0])) == 1

    def leading_coefficient(self) -> int:
        return int(self._p.leading_coefficient()) if not self.is_zero() else 0

    def content(self) -> int:
        return int(self._p.content()) if not self.is_zero() else 0

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.constant(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        u, v = self._v, other._v
        if u == v:
            return LaurentPoly(self._p + other._p, u)
        if u < v:
            return LaurentPoly(self._p + other._p.left_shift(v - u), u)
        return LaurentPoly(self._p.left_shift(u - v) + other._p, v)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(-self._p, self._v)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self._p * other, self._v)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        return LaurentPoly(self._p * other._p, self._v + other._v)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_unit():
                raise ValueError("negative powers only exist for unit monomials")
            return LaurentPoly(self._p ** (-n), n * self._v)
        return LaurentPoly(self._p**n, n * self._v)

    def times_monomial(self, k: int) -> LaurentPoly:
        """Multiply by ``a**k``."""
        if self.is_zero():
            return self
        return LaurentPoly(self._p, self._v + k)

    def divexact(self, other: LaurentPoly) -> LaurentPoly:
        """Exact quotient; raises ``ArithmeticError`` if ``other`` does not divide."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ZERO
        q, r = divmod(self._p, other._p)
        if not r.is_zero():
            raise ArithmeticError("not exactly divisible")
        return LaurentPoly(q, self._v - other._v)

    def divides(self, other: LaurentPoly) -> bool:
        """True iff ``self`` divides ``other`` in the Laurent ring."""
        if self.is_zero():
            return other.is_zero()
        if other.is_zero():
            return True
        return divmod(other._p, self._p)[1].is_zero()

    def gcd(self, other: LaurentPoly) -> LaurentPoly:
        """Gcd in ``Z[a, 1/a]``, normalised to nonnegative exponents, positive lead."""
        if self.is_zero():
            return other.normalized_unit()[0] if other else ZERO
        if other.is_zero():
            return self.normalized_unit()[0]
        g = self._p.gcd(other._p)
        if g.leading_coefficient() < 0:
            g = -g
        return LaurentPoly(g, 0)

    def normalized_unit(self) -> tuple[LaurentPoly, int]:
        """Return ``(p', sign)`` with ``self = sign * a**shift * p'``, ``p'`` lowest exponent 0 and positive lead."""
        sign = -1 if self.leading_coefficient() < 0 else 1
        return LaurentPoly(self._p * sign, 0), sign

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._v == other._v and self._p == other._p

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._v, tuple(int(c) for c in self._p.coeffs())))
        return self._hash

    # -- evaluation and substitution -------------------------------------
    def evaluate(self, x):
        """Evaluate at ``a = x`` (Fraction, int, flint.nmod, ...)."""
        if self.is_zero():
            return 0 * x
        acc = 0 * x
        for c in reversed(self._p.coeffs()):
            acc = acc * x + int(c)
        return acc * x**self._v

    def bar(self) -> LaurentPoly:
        """Substitute ``a -> 1/a``."""
        return LaurentPoly.from_dict({-e: c for e, c in self.terms()})

    def __call__(self, x):
        return self.evaluate(x)

    # -- text forms -------------------------------------------------------
    def to_text(self) -> str:
        """Canonical form: one ``exponent coefficient`` line per term, ascending."""
        return "\n".join(f"{e} {c}" for e, c in self.terms())

    @classmethod
    def from_text(cls, text: str) -> LaurentPoly:
        terms: dict[int, int] = {}
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            e, c = line.split()
            terms[int(e)] = terms.get(int(e), 0) + int(c)
        return cls.from_dict(terms)

    def to_compact(self) -> str:
        """Single-line ``e:c,e:c`` form used by the matrix dump format."""
        return ",".join(f"{e}:{c}" for e, c in self.terms()) or "0"

    @classmethod
    def from_compact(cls, text: str) -> LaurentPoly:
        if text == "0":
            return ZERO
        return cls.from_dict({int(e): int(c) for e, c in (t.split(":") for t in text.split(","))})

    def in_s(self) -> bool:
        return all(e % 2 == 0 for e, _ in self.terms())

    def pretty(self) -> str:
        """Human-readable form; uses powers of ``s`` when all exponents are even."""
        if self.is_zero():
            return "0"
        var, div = ("s", 2) if self.in_s() else ("a", 1)
        out = []
        for e, c in reversed(self.terms()):
            e //= div
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            out.append(("-" if c < 0 else "+", body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({self.pretty()})"


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
A = LaurentPoly.monomial(1)
S = LaurentPoly.monomial(2)


def s_power(k: int) -> LaurentPoly:
    return LaurentPoly.monomial(2 * k)


def s_diff(k: int) -> LaurentPoly:
    """``s**k - s**-k``."""
    return s_power(k) - s_power(-k)


def quantum_integer(n: int) -> LaurentPoly:
    """``[n] = (s^n - s^-n)/(s - 1/s) = s^(n-1) + s^(n-3) + ... + s^(1-n)``."""
    if n <= 0:
        raise ValueError(f"quantum integer needs n >= 1, got {n}")
    return LaurentPoly.from_s({n - 1 - 2 * j: 1 for j in range(n)})


def unit_equivalent(p: LaurentPoly, q: LaurentPoly) -> bool:
    """True iff ``p = ±a**k * q`` for some integer ``k``."""
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    return p.poly == q.poly or p.poly == -q.poly


def unit_ratio(p: LaurentPoly, q: LaurentPoly) -> tuple[int, int] | None:
    """Return ``(sign, k)`` with ``p = sign * a**k * q``, or None."""
    if p.is_zero() or q.is_zero():
        return None
    if p.poly == q.poly:
        return 1, p.shift - q.shift
    if p.poly == -q.poly:
        return -1, p.shift - q.shift
    return None


def product(factors: Iterable[LaurentPoly]) -> LaurentPoly:
    out = ONE
    for f in factors:
        out = out * f
    return out


