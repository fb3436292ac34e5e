from fractions import Fraction

from su3q.braiding import Braiding
from su3q.field import SYMBOLIC, random_modular
from su3q.linalg import Mat
from su3q.qrep import check_relations, classical_dim, highest_weight_vectors, is_intertwiner, tensor_module
from su3q.submodule import build_M, dump_braiding_data, load_braiding_data


def casimir(w):
    # <lambda, lambda + 2 rho> with roots of length sqrt 2
    m1, m2 = w
    return Fraction(2, 3) * (m1 * m1 + m1 * m2 + m2 * m2) + 2 * (m1 + m2)


def test_eigenspace_dimensions(sym):
    _, data = sym
    assert sorted(data.eigenspace_dims) == [6, 6, 15]
    assert set(data.eigenvalues) == {(2, 1), (0, 2), (1, 0)}
    assert sum(data.eigenspace_dims) == 27


def test_twist_eigenvalue_ratios_follow_casimir(sym):
    B, data = sym
    ev = data.eigenvalues
    for w in [(0, 2), (1, 0)]:
        ratio = (ev[(2, 1)] / ev[w]).to_laurent()
        expected_power = casimir((2, 1)) - casimir(w)
        assert expected_power.denominator == 1
        assert ratio.is_monomial() and ratio.terms() == [(2 * int(expected_power), 1)]


def test_M_is_irreducible_of_type_21(sym):
    B, data = sym
    M = B.modules["M"]
    assert M.dim == classical_dim((2, 1)) == 15
    assert check_relations(M).ok
    assert [w for _, w in highest_weight_vectors(M)] == [(2, 1)]


def test_projection_and_inclusion(sym):
    _, data = sym
    assert data.pi @ data.P == Mat.identity(15, SYMBOLIC.one)


def test_R_MM_properties(sym):
    B, data = sym
    M = B.modules["M"]
    assert data.R_MM.nnz() == 985
    assert data.R_MM @ data.R_MM_inv == Mat.identity(225, SYMBOLIC.one)
    MM = tensor_module(M, M)
    assert is_intertwiner(data.R_MM, MM, MM)


def test_yang_baxter_MMM_modular(modular):
    B, _ = modular
    assert B.check_yang_baxter(("M", "M", "M"))


def test_yang_baxter_MMM_symbolic_sample(sym):
    B, _ = sym
    assert B.check_yang_baxter(("M", "M", "M"), columns=range(0, 3375, 211))


def test_symbolic_and_modular_agree(sym, modular):
    # characteristic data of R_MM does not depend on the basis chosen for M
    (Bs, ds), (Bm, dm) = sym, modular
    K = Bm.K
    for k in (1, 2):
        Rs = ds.R_MM if k == 1 else ds.R_MM @ ds.R_MM
        Rm = dm.R_MM if k == 1 else dm.R_MM @ dm.R_MM
        assert K.evaluate(Rs.trace()) == Rm.trace()


def test_cache_roundtrip(sym):
    _, data = sym
    text = dump_braiding_data(data)
    fresh = Braiding(SYMBOLIC)
    digest = load_braiding_data(text, fresh)
    assert len(digest) == 64
    assert fresh.R[("M", "M")] == data.R_MM
    assert fresh.modules["M"].weights == data.M.weights
