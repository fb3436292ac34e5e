"""Finite-dimensional modules over the quantum group SU(3)_q.

Modules store the action of ``X1+, X1-, X2+, X2-`` and of ``K_i = exp(h H_i/4)``
and their inverses; weights ``(m1, m2)`` are carried alongside because every
module built here has a weight basis (``K_i`` diagonal with entries
``a**m_i``).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .field import Scalars
from .laurent import LaurentPoly, quantum_integer
from .linalg import Mat, Vec, dump_matrix, kron, load_matrix, nullspace, vstack

X_NAMES = ("X1+", "X1-", "X2+", "X2-")
K_NAMES = ("K1", "K1inv", "K2", "K2inv")
GENERATOR_NAMES = X_NAMES + K_NAMES
# generators an intertwiner must commute with
ACTION_NAMES = ("X1+", "X1-", "X2+", "X2-", "K1", "K2")

CARTAN = ((2, -1), (-1, 2))
# weight shift of X_i^+ in (m1, m2) coordinates: the i-th column of the Cartan matrix
ROOTS = {1: (2, -1), 2: (-1, 2)}

Weight = tuple[int, int]


@dataclass(frozen=True)
class RepModule:
    dim: int
    gens: dict[str, Mat]
    weights: tuple[Weight, ...]
    scalars: Scalars = field(repr=False, compare=False)

    def __getitem__(self, name: str) -> Mat:
        return self.gens[name]

    def weight_blocks(self) -> dict[Weight, list[int]]:
        blocks: dict[Weight, list[int]] = {}
        for i, w in enumerate(self.weights):
            blocks.setdefault(w, []).append(i)
        return blocks

    def weight_multiset(self) -> Counter:
        return Counter(self.weights)


def fundamental_E(K: Scalars) -> RepModule:
    a, ai = K.a, K.a_power(-1)
    one = K.one

    def unit(i, j):
        return Mat(3, 3, {i: {j: one}})

    gens = {
        "X1+": unit(0, 1),
        "X2+": unit(1, 2),
        "X1-": unit(1, 0),
        "X2-": unit(2, 1),
        "K1": Mat.diag([a, ai, one]),
        "K1inv": Mat.diag([ai, a, one]),
        "K2": Mat.diag([one, a, ai]),
        "K2inv": Mat.diag([one, ai, a]),
    }
    return RepModule(3, gens, ((1, 0), (-1, 1), (0, -1)), K)


def dual_module(M: RepModule) -> RepModule:
    """Action on the dual basis: ``Y_{M*} = S(Y_M)^T`` with ``S(X_i^±) = -s^{±1} X_i^±``."""
    K = M.scalars
    s, si = K.s, K.a_power(-2)
    gens = {
        "X1+": M["X1+"].T.scale(-s),
        "X2+": M["X2+"].T.scale(-s),
        "X1-": M["X1-"].T.scale(-si),
        "X2-": M["X2-"].T.scale(-si),
        "K1": M["K1inv"].T,
        "K1inv": M["K1"].T,
        "K2": M["K2inv"].T,
        "K2inv": M["K2"].T,
    }
    return RepModule(M.dim, gens, tuple((-m1, -m2) for m1, m2 in M.weights), K)


def tensor_module(M: RepModule, N: RepModule) -> RepModule:
    """Coproduct action: ``X -> X (x) K + K^{-1} (x) X`` and ``K -> K (x) K``."""
    gens = {}
    for i in (1, 2):
        Ki, Kinv = f"K{i}", f"K{i}inv"
        for sign in "+-":
            X = f"X{i}{sign}"
            gens[X] = kron(M[X], N[Ki]) + kron(M[Kinv], N[X])
        gens[Ki] = kron(M[Ki], N[Ki])
        gens[Kinv] = kron(M[Kinv], N[Kinv])
    weights = tuple((u1 + v1, u2 + v2) for u1, u2 in M.weights for v1, v2 in N.weights)
    return RepModule(M.dim * N.dim, gens, weights, M.scalars)


def tensor_all(mods: Sequence[RepModule]) -> RepModule:
    out = mods[0]
    for m in mods[1:]:
        out = tensor_module(out, m)
    return out


@dataclass
class RelationReport:
    entries: list[tuple[str, bool]]

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.entries)

    def failures(self) -> list[str]:
        return [name for name, passed in self.entries if not passed]

    def __str__(self) -> str:
        return "\n".join(f"{'pass' if p else 'FAIL'}  {name}" for name, p in self.entries)


def check_relations(M: RepModule) -> RelationReport:
    K = M.scalars
    n = M.dim
    I = Mat.identity(n)
    s, si = K.s, K.a_power(-2)
    q2 = s + si
    out: list[tuple[str, bool]] = []

    for i in (1, 2):
        Ki, Kinv = M[f"K{i}"], M[f"K{i}inv"]
        out.append((f"K{i} K{i}^-1 = I", Ki @ Kinv == I and Kinv @ Ki == I))
    out.append(("K1 K2 = K2 K1", M["K1"] @ M["K2"] == M["K2"] @ M["K1"]))

    for i in (1, 2):
        Ki, Kinv = M[f"K{i}"], M[f"K{i}inv"]
        for j in (1, 2):
            aij = CARTAN[i - 1][j - 1]
            for sign, e in (("+", aij), ("-", -aij)):
                X = M[f"X{j}{sign}"]
                out.append((f"K{i} X{j}{sign} K{i}^-1 = a^{e} X{j}{sign}", Ki @ X @ Kinv == X.scale(K.a_power(e))))

    inv_ssi = 1 / (s - si)
    for i in (1, 2):
        Xp, Xm = M[f"X{i}+"], M[f"X{i}-"]
        Ki, Kinv = M[f"K{i}"], M[f"K{i}inv"]
        lhs = Xp @ Xm - Xm @ Xp
        rhs = (Ki @ Ki - Kinv @ Kinv).scale(inv_ssi)
        out.append((f"[X{i}+, X{i}-] = (K{i}^2 - K{i}^-2)/(s - 1/s)", lhs == rhs))
    for i, j in ((1, 2), (2, 1)):
        Xp, Xm = M[f"X{i}+"], M[f"X{j}-"]
        out.append((f"[X{i}+, X{j}-] = 0", (Xp @ Xm - Xm @ Xp).is_zero()))

    # degree-3 Serre relations with coefficient [2] = s + 1/s
    for sign in "+-":
        for i, j in ((1, 2), (2, 1)):
            Xi, Xj = M[f"X{i}{sign}"], M[f"X{j}{sign}"]
            serre = Xi @ Xi @ Xj - (Xi @ Xj @ Xi).scale(q2) + Xj @ Xi @ Xi
            out.append((f"Serre X{i}{sign}^2 X{j}{sign} - [2] X{i}{sign} X{j}{sign} X{i}{sign} + X{j}{sign} X{i}{sign}^2 = 0", serre.is_zero()))

    diag_ok = True
    for i in (1, 2):
        expected = Mat.diag([K.a_power(w[i - 1]) for w in M.weights])
        diag_ok = diag_ok and M[f"K{i}"] == expected
    out.append(("K_i diagonal with entries a^{m_i} of the recorded weights", diag_ok))
    return RelationReport(out)


def highest_weight_vectors(M: RepModule) -> list[tuple[Vec, Weight]]:
    """Basis of ``ker X1+ ∩ ker X2+``, computed weight space by weight space."""
    out = []
    X1, X2 = M["X1+"], M["X2+"]
    all_rows = list(range(M.dim))
    for w, idx in sorted(M.weight_blocks().items(), key=lambda kv: (-kv[0][0] - kv[0][1], kv[0])):
        stacked = vstack([X1.submatrix(all_rows, idx), X2.submatrix(all_rows, idx)])
        for v in nullspace(stacked):
            vec = {idx[k]: x for k, x in v.items()}
            if w[0] < 0 or w[1] < 0:
                raise ArithmeticError(f"highest-weight vector with non-dominant weight {w}")
            out.append((vec, w))
    return out


def enhancement(M: RepModule) -> Mat:
    """``T = exp(h(H1 + H2)) = K1^4 K2^4``."""
    K1, K2 = M["K1"], M["K2"]
    K1sq, K2sq = K1 @ K1, K2 @ K2
    return K1sq @ K1sq @ K2sq @ K2sq


def qdim(weight: Weight) -> LaurentPoly:
    """Quantum dimension ``[m1+1][m2+1][m1+m2+2]/[2]`` of the irreducible of highest weight ``(m1, m2)``."""
    m1, m2 = weight
    if m1 < 0 or m2 < 0:
        raise ValueError(f"highest weight must be dominant, got {weight}")
    top = quantum_integer(m1 + 1) * quantum_integer(m2 + 1) * quantum_integer(m1 + m2 + 2)
    return top.divexact(quantum_integer(2))


def classical_dim(weight: Weight) -> int:
    m1, m2 = weight
    return (m1 + 1) * (m2 + 1) * (m1 + m2 + 2) // 2


def is_intertwiner(f: Mat, source: RepModule, target: RepModule) -> bool:
    """``Y_target f = f Y_source`` for the six generators."""
    return all(target[g] @ f == f @ source[g] for g in ACTION_NAMES)


def dump_module(M: RepModule) -> str:
    parts = ["weights " + " ".join(f"{m1},{m2}" for m1, m2 in M.weights)]
    for name in GENERATOR_NAMES:
        parts.append(f"generator {name}")
        parts.append(dump_matrix(M[name]).rstrip("\n"))
    return "\n".join(parts) + "\n"


def load_module(text: str, K: Scalars) -> RepModule:
    lines = text.splitlines()
    weights = tuple(tuple(int(t) for t in w.split(",")) for w in lines[0].split()[1:])
    gens: dict[str, Mat] = {}
    current = None
    buf: list[str] = []
    for ln in lines[1:] + ["generator END"]:
        if ln.startswith("generator "):
            if current is not None:
                gens[current] = load_matrix("\n".join(buf))
            current, buf = ln.split()[1], []
        else:
            buf.append(ln)
    return RepModule(len(weights), gens, weights, K)
