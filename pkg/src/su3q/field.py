"""The rational-function field Q(a) and the scalar contexts the pipeline runs over.

Every pipeline step is written against a :class:`Scalars` context.  The
symbolic context works in :class:`RatFunc`; the evaluation contexts replace
``a`` by a number (an exact rational, or a residue modulo a prime) so the same
code doubles as a fast probabilistic oracle.
"""

from __future__ import annotations

import random
from fractions import Fraction

import flint

from .laurent import ONE, ZERO, LaurentPoly


class RatFunc:
    """A reduced ratio ``num/den`` of Laurent polynomials.

    Canonical form: ``den`` has lowest exponent 0 and a positive leading
    coefficient, and ``gcd(num, den) = 1`` in ``Z[a]``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = ONE, *, reduced: bool = False):
        if reduced:
            self.num, self.den = num, den
            return
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        if den.shift:
            num = num.times_monomial(-den.shift)
            den = LaurentPoly(den.poly, 0)
        if not den.poly.is_one():
            g = num.poly.gcd(den.poly)
            if not g.is_one():
                num = LaurentPoly(num.poly // g, num.shift)
                den = LaurentPoly(den.poly // g, 0)
            if den.leading_coefficient() < 0:
                num, den = -num, -den
        self.num, self.den = num, den

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> RatFunc:
        return cls(p, ONE, reduced=True)

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, int):
            return RatFunc(LaurentPoly.constant(x), ONE, reduced=True)
        if isinstance(x, LaurentPoly):
            return RatFunc(x, ONE, reduced=True)
        if isinstance(x, Fraction):
            return RatFunc(LaurentPoly.constant(x.numerator), LaurentPoly.constant(x.denominator))
        return NotImplemented

    def is_polynomial(self) -> bool:
        return self.den.poly.is_one()

    def to_laurent(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self!r} is not a Laurent polynomial")
        return self.num

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def complexity(self) -> int:
        return self.num.length() + self.den.length()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den, reduced=True)

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
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return RatFunc(ZERO, ONE, reduced=True)
        if self.is_polynomial() and other.is_polynomial():
            return RatFunc(self.num * other.num, ONE, reduced=True)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(a)")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> RatFunc:
        if n < 0:
            return self.inverse() ** (-n)
        out = RatFunc(ONE, ONE, reduced=True)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def evaluate(self, x):
        return self.num.evaluate(x) / self.den.evaluate(x)

    def to_compact(self) -> str:
        if self.is_polynomial():
            return self.num.to_compact()
        return f"{self.num.to_compact()}/{self.den.to_compact()}"

    @classmethod
    def from_compact(cls, text: str) -> RatFunc:
        if "/" in text:
            n, d = text.split("/")
            return cls(LaurentPoly.from_compact(n), LaurentPoly.from_compact(d))
        return cls.from_laurent(LaurentPoly.from_compact(text))

    def __repr__(self) -> str:
        if self.is_polynomial():
            return f"RatFunc({self.num.pretty()})"
        return f"RatFunc(({self.num.pretty()}) / ({self.den.pretty()}))"


def is_unit_monomial(x) -> bool:
    """For symbolic scalars: is ``x = ±a**k``?"""
    return isinstance(x, RatFunc) and x.is_polynomial() and x.num.is_unit()


class Scalars:
    """A scalar context: where ``a`` lives and how Laurent constants are lifted."""

    name = "abstract"
    exact_symbolic = False

    def lift(self, p: LaurentPoly):
        raise NotImplementedError

    def lift_int(self, n: int):
        return self.lift(LaurentPoly.constant(n))

    @property
    def a(self):
        return self.lift(LaurentPoly.monomial(1))

    def a_power(self, k: int):
        return self.lift(LaurentPoly.monomial(k))

    @property
    def s(self):
        return self.a_power(2)

    @property
    def zero(self):
        return self.lift_int(0)

    @property
    def one(self):
        return self.lift_int(1)

    def __repr__(self) -> str:
        return f"<Scalars {self.name}>"


class SymbolicScalars(Scalars):
    name = "symbolic"
    exact_symbolic = True

    def lift(self, p: LaurentPoly) -> RatFunc:
        return RatFunc.from_laurent(p)


class ModularScalars(Scalars):
    """``a`` specialised to a residue ``a0`` modulo the prime ``p``."""

    def __init__(self, p: int, a0: int):
        self.p = p
        self.a0 = flint.nmod(a0, p)
        self.name = f"mod {p} at a={a0}"

    def lift(self, poly: LaurentPoly):
        return poly.evaluate(self.a0)

    def evaluate(self, x):
        """Map a symbolic scalar (RatFunc or LaurentPoly) into this context."""
        if isinstance(x, RatFunc):
            return x.num.evaluate(self.a0) / x.den.evaluate(self.a0)
        if isinstance(x, LaurentPoly):
            return x.evaluate(self.a0)
        return flint.nmod(x, self.p)


class RationalScalars(Scalars):
    """``a`` specialised to an exact rational number."""

    def __init__(self, a0: Fraction | int):
        self.a0 = Fraction(a0)
        self.name = f"rational at a={self.a0}"

    def lift(self, poly: LaurentPoly) -> Fraction:
        return poly.evaluate(self.a0)

    def evaluate(self, x):
        if isinstance(x, (RatFunc, LaurentPoly)):
            return x.evaluate(self.a0)
        return Fraction(x)


SYMBOLIC = SymbolicScalars()

# Largest prime below 2**61; residues stay in one machine word inside flint.
DEFAULT_PRIME = 2305843009213693951


def random_modular(seed: int | None = None, p: int = DEFAULT_PRIME) -> ModularScalars:
    rng = random.Random(seed)
    return ModularScalars(p, rng.randrange(2, p - 1))


def random_rational(seed: int | None = None) -> RationalScalars:
    rng = random.Random(seed)
    num = rng.randrange(2, 50)
    den = rng.randrange(1, 50)
    while Fraction(num, den) in (0, 1, -1):
        num += 1
    return RationalScalars(Fraction(num, den))
