from fractions import Fraction

import pytest

from su3q.braiding import Braiding, loop_values, r_matrix_EE, zigzag_composites
from su3q.field import SYMBOLIC, random_modular
from su3q.laurent import quantum_integer
from su3q.linalg import Mat, eigenspace, kron

COLOURS = ["E", "F"]


@pytest.fixture(scope="module")
def B():
    return Braiding(SYMBOLIC)


def test_r_ee_eigenvalues(B):
    K = B.K
    R = r_matrix_EE(K)
    s, si = K.s, K.a_power(-2)
    assert len(eigenspace(R, s)) == 6
    assert len(eigenspace(R, -si)) == 3


def test_r_ee_hecke_relation(B):
    K = B.K
    R = B.crossing("E", "E", 1)
    I = Mat.identity(9, K.one)
    # (R - s)(R + 1/s) = 0 and R - R^-1 = (s - 1/s) I
    assert ((R - I.scale(K.s)) @ (R + I.scale(K.a_power(-2)))).is_zero()
    assert R - B.crossing("E", "E", -1) == I.scale(K.s - K.a_power(-2))


@pytest.mark.parametrize("X", COLOURS)
@pytest.mark.parametrize("Y", COLOURS)
@pytest.mark.parametrize("sign", [1, -1])
def test_crossings_are_intertwiners(B, X, Y, sign):
    assert B.check_intertwiner(X, Y, sign)


@pytest.mark.parametrize("X", COLOURS)
@pytest.mark.parametrize("Y", COLOURS)
def test_crossing_times_inverse_is_identity(B, X, Y):
    assert B.crossing(Y, X, -1) @ B.crossing(X, Y, 1) == Mat.identity(9, B.K.one)


def test_zigzags_are_identities(B):
    I3 = Mat.identity(3, B.K.one)
    for name, Z in zigzag_composites(B.cups).items():
        assert Z == I3, name


def test_loops_equal_quantum_three(B):
    three = B.K.lift(quantum_integer(3))
    assert loop_values(B.cups) == (three, three)


@pytest.mark.parametrize("word", [("E", "E", "E"), ("E", "E", "F"), ("E", "F", "E"), ("F", "F", "E")])
def test_yang_baxter_symbolic(B, word):
    assert B.check_yang_baxter(word)


def test_yang_baxter_modular():
    Bm = Braiding(random_modular(5))
    for word in [("F", "E", "F"), ("F", "F", "F")]:
        assert Bm.check_yang_baxter(word)


def test_broken_r_matrix_fails_yang_baxter():
    Bm = Braiding(random_modular(5))
    R = Bm.R[("E", "E")]
    Bm.R[("E", "E")] = R + Mat(9, 9, {0: {1: Bm.K.one}})
    assert not Bm.check_yang_baxter(("E", "E", "E"))


def test_reidemeister_one_curl_is_a_power_of_a(B):
    # cap (1 x R) cup on one strand gives a scalar times the identity
    K = B.K
    I3 = Mat.identity(3, K.one)
    cc = B.cups
    curl = kron(I3, cc.cap_EF) @ kron(B.crossing("E", "E", 1), I3) @ kron(I3, cc.cup_EF)
    assert curl.is_diagonal()
    lam = curl[0, 0]
    assert curl == I3.scale(lam)
    assert lam.is_polynomial() and lam.to_laurent().is_unit()


def test_braid_matrix_tracks_colours(B):
    mat, out = B.braid_matrix(("E", "F", "E"), [(1, 1)])
    assert out == ("F", "E", "E")
    assert mat.shape == (27, 27)
    with pytest.raises(ValueError):
        B.full_twist_3(("E", "E"))
