import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from su3q.skein import (
    FaceProfile,
    LatticeSpec,
    TrivalentGraph,
    check_cyclic_symmetry,
    check_turnover_symmetry,
    enumerate_face_profiles,
    face_count_law,
    face_defect,
    find_isomorphism,
    lattice_quotient_graph,
    theta_graph,
)

SWAP_EARS = {1: 1, 2: 3, 3: 2}


def brute_force_profiles(chi, b, max_size, max_others):
    """Every choice of boundary sizes and up to ``max_others`` non-hexagonal faces with the right defect."""
    sizes = range(2, max_size + 1, 2)
    big = range(8, max_size + 1, 2)
    out = set()
    for bsizes in itertools.combinations_with_replacement(sizes, b):
        for k in range(max_others + 1):
            for others in itertools.combinations_with_replacement(big, k):
                if sum(Fraction(6 - n, 6) for n in bsizes + others) == chi:
                    out.add(FaceProfile(bsizes, others))
    return out


def test_face_defect():
    assert face_defect(6) == 0
    assert face_defect(2) == Fraction(2, 3)
    assert face_defect(8) == Fraction(-1, 3)
    for bad in (0, 3, -2):
        with pytest.raises(ValueError):
            face_defect(bad)


def test_three_punctured_sphere():
    profiles = enumerate_face_profiles(2, 3)
    assert profiles == [FaceProfile((2, 2, 2), ())]
    assert str(profiles[0]) == "boundary [2-gon, 2-gon, 2-gon], hexagons elsewhere"


def test_annulus_and_disc_cases():
    assert enumerate_face_profiles(2, 0) == []
    assert enumerate_face_profiles(0, 1) == [
        FaceProfile((2,), (8, 8)),
        FaceProfile((2,), (10,)),
        FaceProfile((4,), (8,)),
        FaceProfile((6,), ()),
    ]


@pytest.mark.parametrize("chi, b", [(0, 1), (1, 2), (2, 3), (0, 2), (1, 3), (-1, 2)])
def test_profiles_match_brute_force(chi, b):
    cap = 6 + 4 * b - 6 * chi
    # each boundary face adds at most 4/6, each extra face removes at least 2/6
    max_others = max(0, (4 * b - 6 * chi) // 2)
    assert set(enumerate_face_profiles(chi, b)) == brute_force_profiles(chi, b, cap, max_others)


def test_boundary_max_filters():
    full = enumerate_face_profiles(1, 2)
    capped = enumerate_face_profiles(1, 2, boundary_max=4)
    assert set(capped) == {p for p in full if max(p.boundary) <= 4}


def test_theta_graph_symmetries():
    g = theta_graph()
    assert g.check() == []
    assert g.marked_face_sizes() == {1: 2, 2: 2, 3: 2}
    assert check_cyclic_symmetry(g)
    assert check_turnover_symmetry(g)


@pytest.mark.parametrize("pq", [(1, 2), (2, 1), (3, 0), (3, 3), (4, 5), (2, 4)])
def test_lattice_quotients_are_admissible(pq):
    g = lattice_quotient_graph(LatticeSpec(*pq))
    assert g.check() == []
    assert g.is_admissible()
    assert check_cyclic_symmetry(g)
    assert (g.num_vertices, len(g.face_sizes()) - 3) == face_count_law(LatticeSpec(*pq))


def test_index_must_be_divisible_by_three():
    with pytest.raises(ValueError):
        lattice_quotient_graph(LatticeSpec(1, 0))
    with pytest.raises(ValueError):
        LatticeSpec(0, 0)


def test_turnover_needs_ear_swap_on_axis():
    g = lattice_quotient_graph(LatticeSpec(3, 0))
    assert not check_turnover_symmetry(g)
    assert check_turnover_symmetry(g, SWAP_EARS)


def test_chiral_quotient_has_no_turnover():
    g = lattice_quotient_graph(LatticeSpec(4, 5))
    for labels in itertools.permutations([1, 2, 3]):
        assert not check_turnover_symmetry(g, dict(zip([1, 2, 3], labels)))


def test_misplaced_puncture_breaks_cyclic_symmetry():
    g = lattice_quotient_graph(LatticeSpec(2, 4))
    faces = g.faces()
    idx = g.face_index()
    marked = {idx[d] for d in g.marked.values()}
    hexagon = next(i for i, f in enumerate(faces) if i not in marked)
    g.marked[3] = faces[hexagon][0]
    assert not check_cyclic_symmetry(g)
    assert not g.is_admissible()


def test_text_roundtrip():
    g = lattice_quotient_graph(LatticeSpec(2, 1))
    h = TrivalentGraph.from_text(g.to_text())
    assert find_isomorphism(g, h, {1: 1, 2: 2, 3: 3}) is not None
    assert TrivalentGraph.from_text(h.to_text()).to_text() == h.to_text()
    assert sorted(h.face_sizes()) == sorted(g.face_sizes())
    assert h.marked_face_sizes() == g.marked_face_sizes()


def test_text_errors():
    with pytest.raises(ValueError, match="line 1"):
        TrivalentGraph.from_text("vertex 0 source 1 2\n")
    with pytest.raises(ValueError, match="polarity"):
        TrivalentGraph.from_text("vertex 0 up 0 1 2\nvertex 1 sink 2 1 0\n")


def test_mirror_is_an_involution():
    g = lattice_quotient_graph(LatticeSpec(1, 2))
    mm = g.mirror(True).mirror(True)
    assert mm.sigma == g.sigma and mm.polarity == g.polarity and mm.marked == g.marked


lattice_vectors = st.tuples(st.integers(-6, 6), st.integers(-6, 6)).filter(
    lambda pq: pq != (0, 0) and (pq[0] * pq[0] - pq[0] * pq[1] + pq[1] * pq[1]) % 3 == 0
)


@settings(max_examples=30, deadline=None)
@given(lattice_vectors)
def test_face_count_law(pq):
    spec = LatticeSpec(*pq)
    g = lattice_quotient_graph(spec)
    vertices, hexagons = face_count_law(spec)
    sizes = g.face_sizes()
    assert g.num_vertices == vertices
    assert sorted(g.marked_face_sizes().values()) == [2, 2, 2]
    assert sizes.count(6) == hexagons
    assert g.euler_characteristic() == 2
