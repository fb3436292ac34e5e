"""The 15-dimensional module M = V(2,1) inside E (x) E (x) F, and its R-matrix."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .braiding import Braiding
from .field import is_unit_monomial
from .linalg import Mat, Vec, content_hash, dump_matrix, load_matrix, nullspace, partitioned_projection
from .qrep import GENERATOR_NAMES, RepModule, check_relations, dump_module, highest_weight_vectors, load_module

log = logging.getLogger(__name__)

EEF = ("E", "E", "F")
# legs 1-3 pass over legs 4-6; leg 4 moves to the front first, then 5, then 6
CABLE_BRAID: list[tuple[int, int]] = [(3, 1), (2, 1), (1, 1), (4, 1), (3, 1), (2, 1), (5, 1), (4, 1), (3, 1)]


@dataclass
class SubmoduleData:
    P: Mat  # 27x15 inclusion
    Q: Mat  # 27x12 complement
    pi: Mat  # 15x27 projection
    M: RepModule
    eigenvalues: dict  # highest weight -> full-twist eigenvalue
    eigenspace_dims: list[int]
    R_MM: Mat | None = None
    R_MM_inv: Mat | None = None


def scalar_on(A: Mat, v: Vec):
    """The scalar ``lam`` with ``A v = lam v``; raises if ``v`` is not an eigenvector."""
    Av = A.apply(v)
    p = min(v)
    lam = Av.get(p, 0) / v[p]
    if any(Av.get(i, 0) != lam * x for i, x in v.items()) or any(i not in v for i in Av):
        raise ArithmeticError("vector is not an eigenvector")
    return lam


def split_by_full_twist(B: Braiding) -> SubmoduleData:
    """Split ``E E F`` into full-twist eigenspaces and read off M.

    Eigenvalues come from the full twist acting on one highest-weight vector
    of each summand type; eigenspaces are computed weight block by weight
    block (the full twist commutes with ``K1, K2``).
    """
    K = B.K
    V = B.tensor(EEF)
    FT = B.full_twist_3(EEF)
    eigen: dict = {}
    for v, w in highest_weight_vectors(V):
        lam = scalar_on(FT, v)
        if K.exact_symbolic and not is_unit_monomial(lam):
            raise ArithmeticError(f"full-twist eigenvalue {lam} on type {w} is not a unit monomial")
        if w in eigen and eigen[w] != lam:
            raise ArithmeticError(f"two copies of type {w} with different full-twist eigenvalues")
        eigen[w] = lam
    if (2, 1) not in eigen:
        raise ArithmeticError("no highest-weight vector of type (2,1) in E E F")
    distinct = []
    for lam in eigen.values():
        if lam not in distinct:
            distinct.append(lam)
    lam_M = eigen[(2, 1)]
    distinct.sort(key=lambda x: x != lam_M)

    spaces = []
    blocks = V.weight_blocks()
    for lam in distinct:
        cols: list[Vec] = []
        for w, idx in sorted(blocks.items()):
            sub = FT.submatrix(idx, idx) - Mat.identity(len(idx), lam)
            for v in nullspace(sub):
                cols.append({idx[k]: x for k, x in v.items()})
        spaces.append(cols)
    dims = [len(c) for c in spaces]
    log.info("full-twist eigenspace dimensions %s", dims)
    if dims[0] != 15 or sorted(dims[1:]) != [6, 6]:
        raise ArithmeticError(f"eigenspace dimensions {dims}, expected (15, 6, 6)")

    P = Mat.from_columns(spaces[0], V.dim)
    Q = Mat.from_columns([c for cols in spaces[1:] for c in cols], V.dim)
    pi = partitioned_projection(P, Q)
    gens = {g: pi @ V[g] @ P for g in GENERATOR_NAMES}
    weights = tuple(V.weights[min(c)] for c in spaces[0])
    M = RepModule(15, gens, weights, K)
    report = check_relations(M)
    if not report.ok:
        raise ArithmeticError(f"constructed M fails relations: {report.failures()}")
    return SubmoduleData(P, Q, pi, M, eigen, dims)


def _project_pair(v: Vec, pi_cols: list[list], n: int, d: int) -> Vec:
    out: dict = {}
    for idx, x in v.items():
        i, j = divmod(idx, n)
        for k, pk in pi_cols[i]:
            xk = x * pk
            base = k * d
            for l, pl in pi_cols[j]:
                key = base + l
                z = out.get(key)
                out[key] = xk * pl if z is None else z + xk * pl
    return {k: z for k, z in out.items() if z != 0}


def induced_braiding(data: SubmoduleData, B: Braiding, sign: int = 1, progress=None) -> Mat:
    """``R_MM = (pi (x) pi) B9 (P (x) P)`` computed column by column.

    ``B9`` is the nine-crossing cable of legs 1-3 over legs 4-6 of
    ``(E E F) (x) (E E F)``; with ``sign = -1`` the inverse braid is used,
    giving ``R_MM^-1``.
    """
    n, d = data.P.nrows, data.P.ncols
    braid = CABLE_BRAID if sign > 0 else [(g, -1) for g, _ in reversed(CABLE_BRAID)]
    word = EEF + EEF
    Pcols = data.P.columns()
    pi_cols = [sorted(c.items()) for c in data.pi.columns()]
    cols = []
    for i in range(d):
        for j in range(d):
            v = {}
            for x, px in Pcols[i].items():
                for y, py in Pcols[j].items():
                    v[x * n + y] = px * py
            v, out = B.apply_braid(v, word, braid)
            assert out == word
            cols.append(_project_pair(v, pi_cols, n, d))
        if progress is not None:
            progress(i + 1, d)
    return Mat.from_columns(cols, d * d)


def build_M(B: Braiding, progress=None) -> SubmoduleData:
    """Full construction: split, then the induced braiding and its inverse, registered as colour ``M``."""
    data = split_by_full_twist(B)
    data.R_MM = induced_braiding(data, B, 1, progress)
    data.R_MM_inv = induced_braiding(data, B, -1, progress)
    B.add_color("M", data.M, data.R_MM, data.R_MM_inv)
    return data


def dump_braiding_data(data: SubmoduleData) -> str:
    """Text form of ``M``, ``R_MM`` and ``R_MM^-1`` (symbolic entries)."""
    parts = ["[module]", dump_module(data.M).rstrip("\n"), "[R_MM]", dump_matrix(data.R_MM).rstrip("\n"), "[R_MM_inv]", dump_matrix(data.R_MM_inv).rstrip("\n")]
    return "\n".join(parts) + "\n"


def load_braiding_data(text: str, B: Braiding) -> str:
    """Register colour ``M`` on ``B`` from :func:`dump_braiding_data` output; returns its content hash."""
    sections: dict[str, list[str]] = {}
    current = None
    for ln in text.splitlines():
        if ln.startswith("[") and ln.endswith("]"):
            current = ln[1:-1]
            sections[current] = []
        elif current is not None:
            sections[current].append(ln)
    missing = {"module", "R_MM", "R_MM_inv"} - set(sections)
    if missing:
        raise ValueError(f"cache file lacks sections {sorted(missing)}")
    M = load_module("\n".join(sections["module"]), B.K)
    B.add_color("M", M, load_matrix("\n".join(sections["R_MM"])), load_matrix("\n".join(sections["R_MM_inv"])))
    return content_hash(text)
