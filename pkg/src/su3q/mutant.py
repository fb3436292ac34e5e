"""Difference of a coloured invariant on a mutant pair.

A knot is the closure of ``alpha o beta`` for two 2-tangles.  Turning the
first tangle over gives ``alpha' = R^-1 alpha R``.  On each highest-weight
space ``W_nu`` of ``V (x) V`` the difference of the closures is
``tr((alpha_nu - alpha'_nu) beta_nu)`` weighted by the quantum dimension of
``nu``; one-dimensional ``W_nu`` contribute nothing.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .braiding import Braiding
from .laurent import LaurentPoly, unit_equivalent, unit_ratio
from .linalg import Mat
from .qrep import Weight, highest_weight_vectors, qdim, tensor_module
from .reference import s_diff_product, total_difference_factored, DIVISOR_EXPONENTS
from .tangle import TangleProgram, evaluate_two_tangle, restrict_matrix, restrict_to_type

log = logging.getLogger(__name__)


def mutate(alpha: Mat, R: Mat, R_inv: Mat) -> Mat:
    """``R^-1 alpha R``: the tangle turned over, on one highest-weight space."""
    return R_inv @ alpha @ R


def type_contribution(alpha: Mat, beta: Mat, R: Mat, R_inv: Mat):
    """``tr((alpha - R^-1 alpha R) beta)``."""
    return ((alpha - mutate(alpha, R, R_inv)) @ beta).trace()


def hw_spaces(B: Braiding, color: str = "M") -> dict[Weight, list]:
    V = B.modules[color]
    spaces: dict[Weight, list] = {}
    for v, w in highest_weight_vectors(tensor_module(V, V)):
        spaces.setdefault(w, []).append(v)
    return spaces


@dataclass
class TypeData:
    weight: Weight
    basis: list
    R: Mat
    R_inv: Mat
    F: Mat | None = None
    G: Mat | None = None


def type_data(B: Braiding, F: TangleProgram, G: TangleProgram, color: str = "M", only_repeated: bool = False) -> dict[Weight, TypeData]:
    """Restrict ``R``, ``R^-1`` and both tangles to every highest-weight space."""
    R, R_inv = B.crossing(color, color, 1), B.crossing(color, color, -1)
    out = {}
    for w, basis in sorted(hw_spaces(B, color).items()):
        if only_repeated and len(basis) < 2:
            continue
        td = TypeData(w, basis, restrict_matrix(R, basis), restrict_matrix(R_inv, basis))
        for name, t in (("F", F), ("G", G)):
            log.info("evaluating tangle %s on type %s (%d vectors)", t.name, w, len(basis))
            setattr(td, name, restrict_to_type(evaluate_two_tangle(B, t, basis, color), basis))
        out[w] = td
    return out


@dataclass
class DifferenceReport:
    contributions: dict  # weight -> tr((alpha - alpha') beta), alpha = conjugated tangle
    total: object
    conjugated: str
    swapped_total: object = None
    multiplicities: dict = field(default_factory=dict)

    def reference_ratio(self):
        """``(sign, power of a)`` relating the total to the published polynomial, or None."""
        if not isinstance(self.total, LaurentPoly):
            return None
        return unit_ratio(self.total, total_difference_factored())

    def matches_reference(self) -> bool:
        return isinstance(self.total, LaurentPoly) and unit_equivalent(self.total, total_difference_factored())

    def roles_agree(self) -> bool:
        if self.swapped_total is None:
            return True
        if isinstance(self.total, LaurentPoly):
            return unit_equivalent(self.total, self.swapped_total)
        return self.total == self.swapped_total or self.total == -self.swapped_total or (self.total == 0) == (self.swapped_total == 0)


def _as_laurent(x):
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    to = getattr(x, "to_laurent", None)
    if to is not None and x.is_polynomial():
        return to()
    return x


def total_difference(B: Braiding, F: TangleProgram, G: TangleProgram, color: str = "M", only_repeated: bool = False) -> DifferenceReport:
    """Difference of the invariants of ``closure(F G)`` and its mutant.

    ``F`` is the tangle that is turned over.  The swapped assignment (turning
    ``G`` over instead) is computed as well and stored in ``swapped_total``.
    """
    K = B.K
    data = type_data(B, F, G, color, only_repeated)
    contributions = {}
    total = K.zero
    swapped = K.zero
    for w, td in data.items():
        c = type_contribution(td.F, td.G, td.R, td.R_inv)
        c_swap = type_contribution(td.G, td.F, td.R, td.R_inv)
        contributions[w] = _as_laurent(c)
        d = K.lift(qdim(w))
        total = total + c * d
        swapped = swapped + c_swap * d
    return DifferenceReport(
        contributions,
        _as_laurent(total),
        F.name,
        _as_laurent(swapped),
        {w: len(td.basis) for w, td in data.items()},
    )


def divisibility_check(total: LaurentPoly) -> bool:
    """Whether ``total`` is divisible by the product of ``s^k - s^-k`` shared by mutant differences."""
    return s_diff_product(DIVISOR_EXPONENTS).divides(total)
