from collections import Counter

import pytest
from hypothesis import given, strategies as st

from su3q.field import SYMBOLIC, random_modular
from su3q.laurent import quantum_integer
from su3q.linalg import Mat
from su3q.qrep import (
    RepModule,
    check_relations,
    classical_dim,
    dual_module,
    dump_module,
    enhancement,
    fundamental_E,
    highest_weight_vectors,
    load_module,
    qdim,
    tensor_all,
    tensor_module,
)

dominant = st.tuples(st.integers(0, 6), st.integers(0, 6))


def weyl_dimension(m1, m2):
    # product over positive roots of <lambda + rho, alpha> / <rho, alpha>
    return (m1 + 1) * (m2 + 1) * (m1 + m2 + 2) // 2


def hw_types(M):
    return Counter(w for _, w in highest_weight_vectors(M))


@pytest.mark.parametrize("K", [SYMBOLIC, random_modular(3)], ids=["symbolic", "modular"])
def test_fundamental_and_dual_satisfy_relations(K):
    E = fundamental_E(K)
    assert E.weights == ((1, 0), (-1, 1), (0, -1))
    assert check_relations(E).ok
    assert check_relations(dual_module(E)).ok


def test_tensor_products_satisfy_relations():
    E = fundamental_E(SYMBOLIC)
    F = dual_module(E)
    for M in (tensor_module(E, E), tensor_module(E, F), tensor_all([E, F, E])):
        report = check_relations(M)
        assert report.ok, report.failures()


def test_broken_serre_is_detected():
    E = fundamental_E(SYMBOLIC)
    EE = tensor_module(E, E)
    gens = dict(EE.gens)
    gens["X1+"] = gens["X1+"].scale(SYMBOLIC.s)  # commutator with X1- no longer matches
    report = check_relations(RepModule(EE.dim, gens, EE.weights, SYMBOLIC))
    assert not report.ok
    assert any("X1+, X1-" in f for f in report.failures())


def test_classical_decompositions():
    E = fundamental_E(SYMBOLIC)
    F = dual_module(E)
    assert hw_types(tensor_module(E, E)) == Counter({(2, 0): 1, (0, 1): 1})
    assert hw_types(tensor_module(E, F)) == Counter({(1, 1): 1, (0, 0): 1})
    # E x E x E = (3,0) + 2 (1,1) + (0,0)
    assert hw_types(tensor_all([E, E, E])) == Counter({(3, 0): 1, (1, 1): 2, (0, 0): 1})


def test_hw_dimensions_add_up():
    E = fundamental_E(SYMBOLIC)
    M = tensor_all([E, E, dual_module(E)])
    assert sum(classical_dim(w) * n for w, n in hw_types(M).items()) == M.dim


def test_enhancement_trace_is_quantum_dimension():
    E = fundamental_E(SYMBOLIC)
    T = enhancement(E)
    assert T.is_diagonal()
    assert T.trace() == SYMBOLIC.lift(quantum_integer(3))
    assert enhancement(dual_module(E)).trace() == SYMBOLIC.lift(quantum_integer(3))


def test_qdim_small_cases():
    assert qdim((0, 0)) == quantum_integer(1)
    assert qdim((1, 0)) == quantum_integer(3)
    assert qdim((1, 1)) == quantum_integer(2) * quantum_integer(4)
    with pytest.raises(ValueError):
        qdim((-1, 0))


@given(dominant)
def test_qdim_specialises_to_weyl_dimension(w):
    assert qdim(w).evaluate(1) == weyl_dimension(*w) == classical_dim(w)


@given(dominant)
def test_qdim_is_symmetric(w):
    assert qdim(w) == qdim((w[1], w[0]))
    assert qdim(w).bar() == qdim(w)


def test_module_roundtrip():
    E = fundamental_E(SYMBOLIC)
    M = tensor_module(E, dual_module(E))
    back = load_module(dump_module(M), SYMBOLIC)
    assert back.weights == M.weights
    assert all(back[g] == M[g] for g in M.gens)
