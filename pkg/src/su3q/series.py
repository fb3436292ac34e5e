"""Truncated power series in ``h`` with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .laurent import LaurentPoly


@dataclass(frozen=True)
class HSeries:
    """``c[0] + c[1] h + ... + c[order] h**order``; products drop terms above ``order``."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("series order must be nonnegative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient count must be order + 1")

    @classmethod
    def constant(cls, c, order: int) -> HSeries:
        return cls(order, (Fraction(c),) + (Fraction(0),) * order)

    def __getitem__(self, j: int) -> Fraction:
        return self.coeffs[j]

    def _check(self, other: HSeries):
        if other.order != self.order:
            raise ValueError("series orders differ")

    def __add__(self, other: HSeries) -> HSeries:
        self._check(other)
        return HSeries(self.order, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: HSeries) -> HSeries:
        self._check(other)
        return HSeries(self.order, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: HSeries) -> HSeries:
        self._check(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j in range(n + 1 - i):
                    out[i + j] += x * other.coeffs[j]
        return HSeries(n, tuple(out))

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient (None if all vanish)."""
        for j, c in enumerate(self.coeffs):
            if c:
                return j
        return None

    def __str__(self) -> str:
        parts = [f"({c})*h^{j}" for j, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) + f" + O(h^{self.order + 1})" if parts else f"O(h^{self.order + 1})"


def to_h_series(p: LaurentPoly, order: int) -> HSeries:
    """Substitute ``a = exp(h/4)`` and expand to ``h**order``.

    ``sum_k c_k a**k`` becomes ``sum_j (sum_k c_k k**j) / (4**j j!) h**j``.
    """
    if order < 0:
        raise ValueError("series order must be nonnegative")
    terms = p.terms()
    coeffs = []
    for j in range(order + 1):
        moment = sum(c * k**j for k, c in terms)
        coeffs.append(Fraction(moment, 4**j * factorial(j)))
    return HSeries(order, tuple(coeffs))
