"""End-to-end acceptance checks; run with ``pytest tests/test_acceptance.py -s`` to see the verdict lines."""

from collections import Counter

import pytest

from su3q.braiding import Braiding
from su3q.field import SYMBOLIC, random_rational
from su3q.laurent import LaurentPoly, quantum_integer, unit_equivalent, unit_ratio
from su3q.linalg import Mat, eigenspace
from su3q.mutant import divisibility_check, hw_spaces, total_difference
from su3q.qrep import check_relations, enhancement, highest_weight_vectors, is_intertwiner, tensor_module
from su3q.reference import (
    VASSILIEV_COEFFICIENT,
    VASSILIEV_ORDER,
    t12_factored,
    t31_factored,
    total_difference_factored,
)
from su3q.series import to_h_series
from su3q.skein import (
    FaceProfile,
    LatticeSpec,
    check_cyclic_symmetry,
    check_turnover_symmetry,
    enumerate_face_profiles,
    lattice_quotient_graph,
)
from su3q.submodule import build_M
from su3q.tangle import closure_invariant, full_trace, restrict_matrix, tangle_matrix


def verdict(n: int, title: str, ok: bool, detail: str = "") -> None:
    print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {n}: {title}" + (f" ({detail})" if detail else ""))
    assert ok


@pytest.fixture(scope="module")
def report(sym, conway_tangles):
    B, _ = sym
    F, G = conway_tangles
    return total_difference(B, F, G)


def test_criterion_1_golden_polynomial(report):
    ratio = unit_ratio(report.total, total_difference_factored())
    ok = isinstance(report.total, LaurentPoly) and ratio is not None and ratio[1] % 2 == 0
    verdict(1, "mutant difference equals the published product up to a power of s", ok, f"ratio {ratio}")


def test_criterion_2_per_type_contributions(report):
    t31, t12 = report.contributions[(3, 1)], report.contributions[(1, 2)]
    combined = quantum_integer(6) * quantum_integer(4) * t31 + quantum_integer(5) * quantum_integer(3) * t12
    ok = (
        unit_equivalent(t31, t31_factored())
        and unit_equivalent(t12, t12_factored())
        and unit_equivalent(combined, total_difference_factored())
    )
    verdict(2, "t31 and t12 match and [6][4] t31 + [5][3] t12 gives the total", ok)


def test_criterion_3_vassiliev_order(report):
    ser = to_h_series(report.total, VASSILIEV_ORDER)
    ok = all(ser[j] == 0 for j in range(VASSILIEV_ORDER)) and abs(ser[VASSILIEV_ORDER]) == VASSILIEV_COEFFICIENT == 27095040
    verdict(3, "h-series vanishes through h^12, |h^13 coefficient| = 27095040", ok, f"h^13: {ser[VASSILIEV_ORDER]}")


def test_criterion_4_divisibility(report):
    verdict(4, "total divisible by the s^k - s^-k factor list", divisibility_check(report.total))


def test_criterion_5_r_ee_suite():
    B = Braiding(SYMBOLIC)
    K = B.K
    R, Rinv = B.crossing("E", "E", 1), B.crossing("E", "E", -1)
    s, si = K.s, K.a_power(-2)
    EE = tensor_module(B.modules["E"], B.modules["E"])
    ok = (
        len(eigenspace(R, s)) == 6
        and len(eigenspace(R, -si)) == 3
        and R - Rinv == Mat.identity(9, K.one).scale(s - si)
        and is_intertwiner(R, EE, EE)
    )
    verdict(5, "R_EE eigenvalues, Hecke relation, commutes with the E E action", ok)


def test_criterion_6_submodule_suite(sym):
    B, data = sym
    K = B.K
    M = B.modules["M"]
    ok = (
        sorted(data.eigenspace_dims, reverse=True) == [15, 6, 6]
        and data.eigenspace_dims[0] == 15
        and data.pi @ data.P == Mat.identity(15, K.one)
        and (data.pi @ data.Q).is_zero()
        and check_relations(M).ok
        and enhancement(M).trace() == K.lift(quantum_integer(3) * quantum_integer(5))
    )
    verdict(6, "full-twist split (15,6,6), projections, relations on M, qdim M = [3][5]", ok)


def test_criterion_7_isotypic_suite(sym):
    B, data = sym
    M = B.modules["M"]
    types = Counter(w for _, w in highest_weight_vectors(tensor_module(M, M)))
    others = [w for w, n in types.items() if w not in ((3, 1), (1, 2))]
    MM = tensor_module(M, M)
    ok = (
        sum(types.values()) == 10
        and types[(3, 1)] == 2
        and types[(1, 2)] == 2
        and len(others) == 6
        and all(types[w] == 1 for w in others)
        and is_intertwiner(data.R_MM, MM, MM)
        and B.check_yang_baxter(("M", "M", "M"), columns=range(0, 3375, 97))
    )
    Bq = Braiding(random_rational(1))
    build_M(Bq)
    ok = ok and Bq.check_yang_baxter(("M", "M", "M"), columns=range(0, 3375, 7))
    verdict(7, "M M has 10 highest-weight vectors, R_MM intertwiner and Yang-Baxter", ok, str(dict(types)))


def test_criterion_8_mutation_null(sym, conway_tangles):
    B, _ = sym
    F, G = conway_tangles
    rep = total_difference(B, F, G, color="E")
    ok = isinstance(rep.total, LaurentPoly) and rep.total.is_zero()
    verdict(8, "colour E difference is identically 0", ok)


def test_criterion_9_skein_suite():
    three_ears = enumerate_face_profiles(2, 3) == [FaceProfile((2, 2, 2), ())]
    disc = enumerate_face_profiles(0, 1) == [
        FaceProfile((2,), (8, 8)),
        FaceProfile((2,), (10,)),
        FaceProfile((4,), (8,)),
        FaceProfile((6,), ()),
    ]
    lattice_ok = True
    for pq in [(1, 2), (2, 1), (3, 0), (3, 3), (2, 4), (4, 5), (1, 5), (6, 3)]:
        g = lattice_quotient_graph(LatticeSpec(*pq))
        lattice_ok = lattice_ok and g.is_admissible() and sorted(g.marked_face_sizes().values()) == [2, 2, 2]
        lattice_ok = lattice_ok and check_cyclic_symmetry(g)
    chiral = not check_turnover_symmetry(lattice_quotient_graph(LatticeSpec(4, 5)))
    verdict(9, "face profiles, admissible cyclic lattice quotients, chiral turnover failure", three_ears and disc and lattice_ok and chiral)


def _coherent(B, gamma, spaces):
    M = B.modules["M"]
    hw = closure_invariant({w: restrict_matrix(gamma, basis) for w, basis in spaces.items()}, B.K)
    return hw == full_trace(gamma, tensor_module(M, M))


def test_criterion_10_oracle_coherence(sym, conway_tangles):
    B, data = sym
    spaces = hw_spaces(B)
    identity = _coherent(B, Mat.identity(225, B.K.one), spaces)
    crossing = _coherent(B, data.R_MM, spaces)
    Bq = Braiding(random_rational(2))
    build_M(Bq)
    F, G = conway_tangles
    composite = _coherent(Bq, tangle_matrix(Bq, F) @ tangle_matrix(Bq, G), hw_spaces(Bq))
    verdict(10, "highest-weight route equals the full quantum trace", identity and crossing and composite,
            f"identity {identity}, crossing {crossing}, composite at a0 = {Bq.K.a0}: {composite}")
