"""Combinatorics of admissible trivalent graphs for the A2 (Kuperberg) skein.

Graphs are rotation systems on darts (half-edges): ``sigma`` is the
counter-clockwise successor of a dart around its vertex, ``twin`` the other
half of its edge, and faces are the orbits of ``phi = sigma o twin``.  Every
vertex is a source or a sink; edges run from sources to sinks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable


def face_defect(n: int) -> Fraction:
    """Contribution ``1 - n/6`` of an n-gon to the Euler characteristic of a trivalent dissection."""
    if n <= 0 or n % 2:
        raise ValueError(f"face size must be a positive even integer, got {n}")
    return 1 - Fraction(n, 6)


@dataclass(frozen=True, order=True)
class FaceProfile:
    """Sizes of the distinguished faces and of the non-hexagonal other faces; hexagons are implicit."""

    boundary: tuple[int, ...]
    others: tuple[int, ...]

    def __str__(self) -> str:
        b = ", ".join(f"{n}-gon" for n in self.boundary)
        o = ", ".join(f"{n}-gon" for n in self.others)
        return f"boundary [{b}]" + (f" + [{o}]" if o else "") + ", hexagons elsewhere"


def enumerate_face_profiles(chi: int, boundary_faces: int, boundary_max: int | None = None) -> list[FaceProfile]:
    """All face profiles with total defect ``chi``.

    Distinguished faces may have any even size; the others are at least
    hexagons, and only the non-hexagons among them are listed.  Working in
    units of 1/6 a face of size n contributes ``6 - n``: at most 4 for a
    distinguished face and at most -2 for any other non-hexagon, which
    bounds every face size by ``6 + 4b - 6 chi``.
    """
    if boundary_faces < 0:
        raise ValueError("boundary face count must be non-negative")
    target = 6 * chi
    cap = 6 + 4 * boundary_faces - target
    if boundary_max is not None:
        cap_b = min(cap, boundary_max)
    else:
        cap_b = cap
    out = set()
    for bsizes in itertools.combinations_with_replacement(range(2, cap_b + 1, 2), boundary_faces):
        rest = target - sum(6 - n for n in bsizes)  # must come from faces of size >= 8
        if rest > 0:
            continue
        need = -rest
        for others in _partitions_into_even_excess(need, 8, cap):
            out.add(FaceProfile(tuple(bsizes), tuple(others)))
    return sorted(out)


def _partitions_into_even_excess(need: int, smallest: int, cap: int) -> Iterable[tuple[int, ...]]:
    """Multisets of even sizes ``n >= smallest`` (``<= cap``) with ``sum(n - 6) == need``."""
    if need == 0:
        yield ()
        return
    for n in range(smallest, cap + 1, 2):
        if n - 6 > need:
            break
        for tail in _partitions_into_even_excess(need - (n - 6), n, cap):
            yield (n,) + tail


@dataclass
class TrivalentGraph:
    """An oriented trivalent graph on the sphere given by a rotation system.

    ``sigma[d]`` is the next dart counter-clockwise around the vertex of ``d``,
    ``twin[d]`` the opposite dart of the same edge.  ``polarity[v]`` is
    ``"source"`` or ``"sink"``; ``marked`` maps a puncture label to a dart of
    the face containing that puncture.
    """

    sigma: list[int]
    twin: list[int]
    vertex_of: list[int]
    polarity: list[str]
    marked: dict[int, int] = field(default_factory=dict)

    @property
    def num_darts(self) -> int:
        return len(self.sigma)

    @property
    def num_vertices(self) -> int:
        return len(self.polarity)

    @property
    def num_edges(self) -> int:
        return len(self.sigma) // 2

    def phi(self, d: int) -> int:
        return self.sigma[self.twin[d]]

    def faces(self) -> list[list[int]]:
        seen = [False] * self.num_darts
        out = []
        for d in range(self.num_darts):
            if seen[d]:
                continue
            orbit = []
            x = d
            while not seen[x]:
                seen[x] = True
                orbit.append(x)
                x = self.phi(x)
            out.append(orbit)
        return out

    def face_index(self) -> list[int]:
        idx = [0] * self.num_darts
        for i, f in enumerate(self.faces()):
            for d in f:
                idx[d] = i
        return idx

    def face_sizes(self) -> list[int]:
        return sorted(len(f) for f in self.faces())

    def marked_face_sizes(self) -> dict[int, int]:
        idx = self.face_index()
        faces = self.faces()
        return {lab: len(faces[idx[d]]) for lab, d in self.marked.items()}

    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + len(self.faces())

    def check(self) -> list[str]:
        """Structural problems, empty when the graph is a valid admissible map."""
        problems = []
        n = self.num_darts
        for d in range(n):
            if self.twin[self.twin[d]] != d or self.twin[d] == d:
                problems.append(f"twin is not a fixed-point-free involution at dart {d}")
                break
        for d in range(n):
            if self.vertex_of[self.sigma[d]] != self.vertex_of[d]:
                problems.append(f"sigma leaves the vertex of dart {d}")
                break
        degree = [0] * self.num_vertices
        for d in range(n):
            degree[self.vertex_of[d]] += 1
        if any(k != 3 for k in degree):
            problems.append("not every vertex is trivalent")
        for d in range(n):
            if self.polarity[self.vertex_of[d]] == self.polarity[self.vertex_of[self.twin[d]]]:
                problems.append("an edge joins two vertices of the same polarity")
                break
        if self.euler_characteristic() != 2:
            problems.append(f"Euler characteristic {self.euler_characteristic()}, not 2")
        return problems

    def is_admissible(self) -> bool:
        """Valid sphere map whose unmarked faces are all hexagons."""
        if self.check():
            return False
        idx = self.face_index()
        marked = {idx[d] for d in self.marked.values()}
        return all(len(f) == 6 for i, f in enumerate(self.faces()) if i not in marked)

    def mirror(self, swap_polarity: bool = False) -> TrivalentGraph:
        """Reflected map (rotations reversed); optionally with all edge orientations reversed.

        The face on the left of dart ``d`` becomes the face of ``twin[d]``.
        """
        inv = [0] * self.num_darts
        for d, e in enumerate(self.sigma):
            inv[e] = d
        flip = {"source": "sink", "sink": "source"}
        pol = [flip[p] for p in self.polarity] if swap_polarity else list(self.polarity)
        return TrivalentGraph(inv, list(self.twin), list(self.vertex_of), pol, {k: self.twin[d] for k, d in self.marked.items()})

    # --- text exchange format -------------------------------------------------

    def to_text(self) -> str:
        """``vertex <id> <polarity> <edge> <edge> <edge>`` with edges counter-clockwise; ``mark <label> <vertex> <slot>``."""
        edge_of = {}
        for d in range(self.num_darts):
            e = min(d, self.twin[d])
            edge_of[d] = e
        edge_ids = {e: i for i, e in enumerate(sorted(set(edge_of.values())))}
        slot = {}
        lines = ["# trivalent graph: vertex <id> <source|sink> <edges counter-clockwise>"]
        for v in range(self.num_vertices):
            start = min(d for d in range(self.num_darts) if self.vertex_of[d] == v)
            ring = [start, self.sigma[start], self.sigma[self.sigma[start]]]
            for k, d in enumerate(ring):
                slot[d] = (v, k)
            lines.append(f"vertex {v} {self.polarity[v]} " + " ".join(str(edge_ids[edge_of[d]]) for d in ring))
        for lab, d in sorted(self.marked.items()):
            v, k = slot[d]
            lines.append(f"mark {lab} {v} {k}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> TrivalentGraph:
        rows = []
        marks = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].split()
            if not line:
                continue
            if line[0] == "vertex" and len(line) == 6:
                rows.append((int(line[1]), line[2], [int(x) for x in line[3:]]))
            elif line[0] == "mark" and len(line) == 4:
                marks.append((int(line[1]), int(line[2]), int(line[3])))
            else:
                raise ValueError(f"line {lineno}: cannot parse {raw!r}")
        rows.sort()
        if [r[0] for r in rows] != list(range(len(rows))):
            raise ValueError("vertex ids must be 0..n-1")
        sigma, vertex_of, polarity = [], [], []
        owners: dict[int, list[int]] = {}
        for v, pol, edges in rows:
            if pol not in ("source", "sink"):
                raise ValueError(f"bad polarity {pol!r}")
            polarity.append(pol)
            for k, e in enumerate(edges):
                d = 3 * v + k
                sigma.append(3 * v + (k + 1) % 3)
                vertex_of.append(v)
                owners.setdefault(e, []).append(d)
        twin = [0] * len(sigma)
        for e, ds in owners.items():
            if len(ds) != 2:
                raise ValueError(f"edge {e} appears {len(ds)} times")
            twin[ds[0]], twin[ds[1]] = ds[1], ds[0]
        return cls(sigma, twin, vertex_of, polarity, {lab: 3 * v + k for lab, v, k in marks})


def theta_graph() -> TrivalentGraph:
    return TrivalentGraph.from_text(
        "vertex 0 source 0 1 2\nvertex 1 sink 2 1 0\nmark 1 0 0\nmark 2 0 1\nmark 3 0 2\n"
    )


# --- triangular-lattice quotients ----------------------------------------------
#
# Hexagon centres form the Eisenstein lattice Z[w], w = exp(2 pi i / 3); an
# element x + y w is stored as (x, y).  A dart of the honeycomb is a directed
# lattice edge (a, a + u) for a unit u: its vertex is the triangle to the left,
# its face the hexagon centred at a.

UNITS = ((1, 0), (0, 1), (-1, -1), (-1, 0), (0, -1), (1, 1))  # 1, w, w^2, -1, -w, -w^2


def _mul_w(z):
    x, y = z
    return (-y, x - y)


def _add(z, t):
    return (z[0] + t[0], z[1] + t[1])


def eisenstein_norm(p: int, q: int) -> int:
    return p * p - p * q + q * q


@dataclass(frozen=True)
class LatticeSpec:
    """Branch hexagons at the sublattice ``(p + q w) Z[w]`` of hexagon centres."""

    p: int
    q: int

    def __post_init__(self):
        if (self.p, self.q) == (0, 0):
            raise ValueError("lattice vector must be non-zero")

    @property
    def index(self) -> int:
        return eisenstein_norm(self.p, self.q)

    def basis(self):
        v = (self.p, self.q)
        return v, _mul_w(v)


class _Reducer:
    """Canonical representatives of ``Z[w] / L``."""

    def __init__(self, spec: LatticeSpec):
        (a, b), (c, d) = spec.basis()
        self.m = (a, c, b, d)  # columns v, wv
        self.det = a * d - b * c
        if self.det == 0:
            raise ValueError("degenerate lattice")

    def __call__(self, z):
        a, c, b, d = self.m
        x, y = z
        # coordinates of z in the basis (v, wv), scaled by det
        s = d * x - c * y
        t = -b * x + a * y
        fs, ft = _floor_div(s, self.det), _floor_div(t, self.det)
        return (x - fs * a - ft * c, y - fs * b - ft * d)


def _floor_div(a: int, b: int) -> int:
    return Fraction(a, b).__floor__()


def lattice_quotient_graph(spec: LatticeSpec) -> TrivalentGraph:
    """Admissible graph in the 3-punctured sphere from the honeycomb modulo ``L`` and rotation by ``w``.

    Requires ``(1 - w)`` to divide ``p + q w`` (equivalently 3 divides the
    index), so that all three fixed points of the rotation are hexagon
    centres; they become the three marked 2-gons.
    """
    N = spec.index
    if N % 3:
        raise ValueError(f"index {N} of ({spec.p}, {spec.q}) is not divisible by 3: rotation would fix honeycomb vertices")
    red = _Reducer(spec)
    centres = sorted({red((x, y)) for x in range(-N, N + 1) for y in range(-N, N + 1)})
    if len(centres) != N:
        raise AssertionError("failed to enumerate the quotient lattice")
    torus_darts = [(a, u) for a in centres for u in UNITS]

    def t_sigma(dart):
        a, u = dart
        return (red(_add(a, u)), _mul_w(u))

    def t_twin(dart):
        a, u = dart
        return (red(_add(a, u)), (-u[0], -u[1]))

    def rot(dart):
        a, u = dart
        return (red(_mul_w(a)), _mul_w(u))

    # orbits of the rotation become darts of the quotient
    orbit_id: dict = {}
    reps = []
    for d in torus_darts:
        if d in orbit_id:
            continue
        k = len(reps)
        reps.append(d)
        x = d
        for _ in range(3):
            orbit_id[x] = k
            x = rot(x)
        if x != d:
            raise AssertionError("rotation is not of order 3 on darts")
    sigma = [orbit_id[t_sigma(d)] for d in reps]
    twin = [orbit_id[t_twin(d)] for d in reps]

    vertex_of = [-1] * len(reps)
    polarity = []
    for d in range(len(reps)):
        if vertex_of[d] >= 0:
            continue
        v = len(polarity)
        x = d
        while vertex_of[x] < 0:
            vertex_of[x] = v
            x = sigma[x]
        polarity.append("source" if reps[d][1] in UNITS[:3] else "sink")

    fixed = [a for a in centres if red(_mul_w(a)) == a]
    if len(fixed) != 3:
        raise AssertionError(f"expected 3 fixed hexagons, found {len(fixed)}")
    zero = red((0, 0))
    others = [a for a in fixed if a != zero]
    # label 2 is the fixed point c with c = (p + q w)(w^2 - 1)/3, label 3 is -c
    v = (spec.p, spec.q)
    w2m1 = _add(_mul_w(_mul_w((1, 0))), (-1, 0))
    prod = _eis_mul(v, w2m1)
    c = red((prod[0] // 3, prod[1] // 3))
    labels = {1: zero, 2: c, 3: next(a for a in others if a != c)}
    marked = {lab: orbit_id[(a, UNITS[0])] for lab, a in labels.items()}
    g = TrivalentGraph(sigma, twin, vertex_of, polarity, marked)
    return g


def _eis_mul(z, t):
    a, b = z
    c, d = t
    # (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2, w^2 = -1 - w
    return (a * c - b * d, a * d + b * c - b * d)


# --- automorphism search ------------------------------------------------------


def find_isomorphism(g: TrivalentGraph, h: TrivalentGraph, label_map: dict[int, int]) -> list[int] | None:
    """An orientation-preserving map of darts ``g -> h`` respecting polarity and sending
    marked face ``i`` of ``g`` to marked face ``label_map[i]`` of ``h``; None if there is none.

    Assumes ``g`` is connected: a map is fixed by the image of one dart.
    """
    n = g.num_darts
    if n != h.num_darts or g.num_vertices != h.num_vertices:
        return None
    gface, hface = g.face_index(), h.face_index()
    g_marks = {gface[d]: lab for lab, d in g.marked.items()}
    h_marks = {lab: hface[d] for lab, d in h.marked.items()}
    for start in range(n):
        f = [-1] * n
        f[0] = start
        queue = [0]
        ok = True
        while queue and ok:
            d = queue.pop()
            for nd, ne in ((g.sigma[d], h.sigma[f[d]]), (g.twin[d], h.twin[f[d]])):
                if f[nd] < 0:
                    f[nd] = ne
                    queue.append(nd)
                elif f[nd] != ne:
                    ok = False
                    break
        if not ok or -1 in f or len(set(f)) != n:
            continue
        if any(g.polarity[g.vertex_of[d]] != h.polarity[h.vertex_of[f[d]]] for d in range(n)):
            continue
        good = True
        for d in range(n):
            lab = g_marks.get(gface[d])
            if lab is not None and hface[f[d]] != h_marks[label_map[lab]]:
                good = False
                break
        if good:
            return f
    return None


def check_cyclic_symmetry(g: TrivalentGraph) -> bool:
    """Whether some orientation-preserving automorphism cycles the three marked faces."""
    if sorted(g.marked) != [1, 2, 3]:
        raise ValueError("cyclic symmetry needs marked faces labelled 1, 2, 3")
    for cyc in ({1: 2, 2: 3, 3: 1}, {1: 3, 3: 2, 2: 1}):
        if find_isomorphism(g, g, cyc) is not None:
            return True
    return False


def check_turnover_symmetry(g: TrivalentGraph, label_map: dict[int, int] | None = None) -> bool:
    """Whether turning the surface over and reversing every edge gives back the same graph.

    By default every marked face keeps its label; ``label_map`` allows the
    turn-over to exchange punctures (e.g. ``{1: 1, 2: 3, 3: 2}``).
    """
    flipped = g.mirror(swap_polarity=True)
    if label_map is None:
        label_map = {k: k for k in g.marked}
    return find_isomorphism(g, flipped, label_map) is not None


def face_count_law(spec: LatticeSpec) -> tuple[int, int]:
    """Predicted (vertices, hexagons) of the quotient graph for a sublattice of index ``N``."""
    N = spec.index
    return 2 * N // 3, N // 3 - 1
