"""R-matrices for strands coloured by E, its dual F, and derived modules.

``R[(X, Y)]`` is the positive crossing ``X (x) Y -> Y (x) X``; ``Rinv[(X, Y)]``
is its inverse ``Y (x) X -> X (x) Y``.  Only ``R_EE`` is written down
directly.  The mixed crossings are obtained by bending one strand with the
cup/cap morphisms so that the only internal crossing is between E-strands
(or, for ``R_FF``, an already derived mixed crossing):

    R_EF  = (1_F 1_E cap_EF)(1_F R_EE^-1 1_F)(cup_FE 1_E 1_F)
    R_FE  = (cap_FE 1_E 1_F)(1_F R_EE^-1 1_F)(1_F 1_E cup_EF)
    R_FF  = (cap_FE 1_F 1_F)(1_F Rinv_EF 1_F)(1_F 1_F cup_EF)

and the inverses come from the same diagrams with the internal crossing
switched.  Every derived matrix is checked as an intertwiner.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .field import Scalars
from .laurent import quantum_integer
from .linalg import Mat, Vec, inverse, kron, kron_all, nullspace, vec_equal, vstack
from .qrep import ACTION_NAMES, RepModule, dual_module, fundamental_E, is_intertwiner, tensor_all, tensor_module

BraidWord = Sequence[tuple[int, int]]  # (generator index, sign), generator 1-based


def r_matrix_EE(K: Scalars) -> Mat:
    """The crossing of two E-strands.

    ``e_i e_j -> e_j e_i`` (i < j), ``s e_i e_i``, ``e_j e_i + (s - 1/s) e_i e_j``
    (i > j).  With the row-major index convention and the coproduct
    ``X (x) K + K^-1 (x) X`` this is the orientation of the case split that
    commutes with the action on ``E (x) E``.
    """
    s, si = K.s, K.a_power(-2)
    one = K.one
    cols: list[Vec] = []
    for i in range(3):
        for j in range(3):
            if i < j:
                cols.append({j * 3 + i: one})
            elif i == j:
                cols.append({i * 3 + i: s})
            else:
                cols.append({j * 3 + i: one, i * 3 + j: s - si})
    return Mat.from_columns(cols, 9)


@dataclass
class CupCapSet:
    """Vectors ``cup_XY`` in ``X (x) Y`` (as 9x1) and covectors ``cap_XY`` (as 1x9)."""

    cup_EF: Mat
    cup_FE: Mat
    cap_EF: Mat
    cap_FE: Mat


def _invariant_vectors(V: RepModule) -> list[Vec]:
    I = Mat.identity(V.dim)
    stacked = vstack([V[g] for g in ("X1+", "X1-", "X2+", "X2-")] + [V["K1"] - I, V["K2"] - I])
    return nullspace(stacked)


def _invariant_covectors(V: RepModule) -> list[Vec]:
    I = Mat.identity(V.dim)
    stacked = vstack([V[g].T for g in ("X1+", "X1-", "X2+", "X2-")] + [(V["K1"] - I).T, (V["K2"] - I).T])
    return nullspace(stacked)


def _one_dimensional(vs: list[Vec], what: str) -> Vec:
    if len(vs) != 1:
        raise ArithmeticError(f"{what}: invariant space has dimension {len(vs)}, expected 1")
    v = vs[0]
    lead = v[min(v)]
    return {i: x / lead for i, x in v.items()}


def _scalar_of_identity(Z: Mat, n: int):
    c = Z[0, 0]
    if Z != Mat.identity(n, c):
        raise ArithmeticError("zig-zag composite is not a scalar multiple of the identity")
    return c


def solve_cups_caps(E: RepModule, F: RepModule) -> CupCapSet:
    """Cups/caps as common eigenvectors, scaled by the zig-zag identities.

    Normalisation: ``cup_EF`` has first nonzero coordinate 1; ``cup_FE`` is
    scaled so that the loop ``cap_FE cup_FE`` equals ``[3]`` (this then forces
    ``cap_EF cup_EF = [3]`` too, which is checked); the caps are dictated by
    the zig-zag identities.
    """
    K = E.scalars
    EF, FE = tensor_module(E, F), tensor_module(F, E)
    cup_EF = Mat.from_columns([_one_dimensional(_invariant_vectors(EF), "cup_EF")], 9)
    cup_FE = Mat.from_columns([_one_dimensional(_invariant_vectors(FE), "cup_FE")], 9)
    cap_EF = Mat.from_columns([_one_dimensional(_invariant_covectors(EF), "cap_EF")], 9).T
    cap_FE = Mat.from_columns([_one_dimensional(_invariant_covectors(FE), "cap_FE")], 9).T
    I3 = Mat.identity(3)

    # (1_E cap_FE)(cup_EF 1_E) = 1_E fixes cap_FE
    c = _scalar_of_identity(kron(I3, cap_FE) @ kron(cup_EF, I3), 3)
    cap_FE = cap_FE.scale(1 / c)
    # choose cup_FE so the F-E loop is [3]
    three = K.lift(quantum_integer(3))
    loop = (cap_FE @ cup_FE)[0, 0]
    cup_FE = cup_FE.scale(three / loop)
    # (cap_EF 1_E)(1_E cup_FE) = 1_E fixes cap_EF
    c = _scalar_of_identity(kron(cap_EF, I3) @ kron(I3, cup_FE), 3)
    cap_EF = cap_EF.scale(1 / c)
    return CupCapSet(cup_EF, cup_FE, cap_EF, cap_FE)


def zigzag_composites(cc: CupCapSet) -> dict[str, Mat]:
    I3 = Mat.identity(3)
    return {
        "(cap_EF 1_E)(1_E cup_FE)": kron(cc.cap_EF, I3) @ kron(I3, cc.cup_FE),
        "(1_E cap_FE)(cup_EF 1_E)": kron(I3, cc.cap_FE) @ kron(cc.cup_EF, I3),
        "(cap_FE 1_F)(1_F cup_EF)": kron(cc.cap_FE, I3) @ kron(I3, cc.cup_EF),
        "(1_F cap_EF)(cup_FE 1_F)": kron(I3, cc.cap_EF) @ kron(cc.cup_FE, I3),
    }


def loop_values(cc: CupCapSet) -> tuple:
    return (cc.cap_EF @ cc.cup_EF)[0, 0], (cc.cap_FE @ cc.cup_FE)[0, 0]


def _bend_right(cc: CupCapSet, middle: Mat, d: int) -> Mat:
    # X (x) F -> F (x) X, with middle: E (x) X -> X (x) E
    I3, Id = Mat.identity(3), Mat.identity(d)
    return kron_all([I3, Id, cc.cap_EF]) @ kron_all([I3, middle, I3]) @ kron_all([cc.cup_FE, Id, I3])


def _bend_left(cc: CupCapSet, middle: Mat, d: int) -> Mat:
    # F (x) X -> X (x) F, with middle: X (x) E -> E (x) X
    I3, Id = Mat.identity(3), Mat.identity(d)
    return kron_all([cc.cap_FE, Id, I3]) @ kron_all([I3, middle, I3]) @ kron_all([I3, Id, cc.cup_EF])


class Braiding:
    """Coloured crossings for a fixed scalar context."""

    def __init__(self, K: Scalars):
        self.K = K
        E = fundamental_E(K)
        F = dual_module(E)
        self.modules: dict[str, RepModule] = {"E": E, "F": F}
        self.cups = solve_cups_caps(E, F)
        cc = self.cups
        R_EE = r_matrix_EE(K)
        R_EE_inv = R_EE - Mat.identity(9, K.s - K.a_power(-2))
        R, Rinv = {("E", "E"): R_EE}, {("E", "E"): R_EE_inv}
        R[("E", "F")] = _bend_right(cc, R_EE_inv, 3)
        Rinv[("F", "E")] = _bend_right(cc, R_EE, 3)
        R[("F", "E")] = _bend_left(cc, R_EE_inv, 3)
        Rinv[("E", "F")] = _bend_left(cc, R_EE, 3)
        R[("F", "F")] = _bend_left(cc, Rinv[("E", "F")], 3)
        Rinv[("F", "F")] = _bend_left(cc, R[("F", "E")], 3)
        self.R = R
        self.Rinv = Rinv

    def dim(self, color: str) -> int:
        return self.modules[color].dim

    def add_color(self, color: str, module: RepModule, R_self: Mat, R_self_inv: Mat) -> None:
        """Register a module with its self-crossing (only same-colour crossings are needed for it)."""
        self.modules[color] = module
        self.R[(color, color)] = R_self
        self.Rinv[(color, color)] = R_self_inv

    def crossing(self, X: str, Y: str, sign: int) -> Mat:
        """Matrix ``X (x) Y -> Y (x) X`` of a crossing of the given sign."""
        if sign > 0:
            return self.R[(X, Y)]
        return self.Rinv[(Y, X)]

    def strand_crossing(self, word: Sequence[str], i: int, sign: int) -> tuple[Mat, tuple[str, ...]]:
        """Crossing on legs ``i, i+1`` (1-based) of a coloured tensor product."""
        if not 1 <= i < len(word):
            raise IndexError(f"crossing position {i} out of range for {len(word)} strands")
        X, Y = word[i - 1], word[i]
        left = Mat.identity(_prod(self.dim(c) for c in word[: i - 1]))
        right = Mat.identity(_prod(self.dim(c) for c in word[i + 1 :]))
        mat = kron_all([left, self.crossing(X, Y, sign), right])
        new = tuple(word[: i - 1]) + (Y, X) + tuple(word[i + 1 :])
        return mat, new

    def tensor(self, word: Sequence[str]) -> RepModule:
        return tensor_all([self.modules[c] for c in word])

    def apply_crossing(self, v: Vec, word: Sequence[str], i: int, sign: int) -> tuple[Vec, tuple[str, ...]]:
        """Apply a crossing on legs ``i, i+1`` to a sparse vector without forming the big matrix."""
        if not 1 <= i < len(word):
            raise IndexError(f"crossing position {i} out of range for {len(word)} strands")
        X, Y = word[i - 1], word[i]
        C = self._columns(X, Y, sign)
        inner = self.dim(X) * self.dim(Y)
        right = _prod(self.dim(c) for c in word[i + 1 :])
        block = inner * right
        out: dict = {}
        for idx, x in v.items():
            L, rem = divmod(idx, block)
            mid, r = divmod(rem, right)
            base = L * block + r
            for m2, y in C[mid]:
                k = base + m2 * right
                z = out.get(k)
                out[k] = x * y if z is None else z + x * y
        new = tuple(word[: i - 1]) + (Y, X) + tuple(word[i + 1 :])
        return {k: z for k, z in out.items() if z != 0}, new

    def _columns(self, X: str, Y: str, sign: int):
        key = (X, Y, sign)
        cache = self.__dict__.setdefault("_colcache", {})
        if key not in cache:
            cols = self.crossing(X, Y, sign).columns()
            cache[key] = [sorted(c.items()) for c in cols]
        return cache[key]

    def apply_braid(self, v: Vec, word: Sequence[str], braid: BraidWord) -> tuple[Vec, tuple[str, ...]]:
        """Apply the braid word, first letter first."""
        word = tuple(word)
        for gen, sign in braid:
            v, word = self.apply_crossing(v, word, gen, sign)
        return v, word

    def braid_matrix(self, word: Sequence[str], braid: BraidWord) -> tuple[Mat, tuple[str, ...]]:
        n = _prod(self.dim(c) for c in word)
        cols = []
        out_word = tuple(word)
        for j in range(n):
            v, out_word = self.apply_braid({j: self.K.one}, word, braid)
            cols.append(v)
        return Mat.from_columns(cols, n), out_word

    def full_twist_3(self, word: Sequence[str]) -> Mat:
        """``(s1 s2)^3`` on three coloured strands; an endomorphism of the product."""
        if len(word) != 3:
            raise ValueError("full twist needs exactly three strands")
        mat, out = self.braid_matrix(word, FULL_TWIST_3)
        if tuple(out) != tuple(word):
            raise ArithmeticError("full twist did not return the colour word to itself")
        return mat

    def check_intertwiner(self, X: str, Y: str, sign: int = 1) -> bool:
        src = tensor_module(self.modules[X], self.modules[Y])
        tgt = tensor_module(self.modules[Y], self.modules[X])
        return is_intertwiner(self.crossing(X, Y, sign), src, tgt)

    def check_yang_baxter(self, word: Sequence[str], columns: Iterable[int] | None = None) -> bool:
        """``s1 s2 s1 = s2 s1 s2`` on three coloured strands.

        With ``columns`` only those basis vectors are pushed through both sides.
        """
        if columns is None:
            columns = range(_prod(self.dim(c) for c in word))
        for j in columns:
            v = {j: self.K.one}
            lhs, w1 = self.apply_braid(v, word, [(1, 1), (2, 1), (1, 1)])
            rhs, w2 = self.apply_braid(v, word, [(2, 1), (1, 1), (2, 1)])
            if w1 != w2 or not vec_equal(lhs, rhs):
                return False
        return True


FULL_TWIST_3: list[tuple[int, int]] = [(1, 1), (2, 1)] * 3


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out
