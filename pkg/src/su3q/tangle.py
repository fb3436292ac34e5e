"""2-tangles given as a 3-strand braid with one strand closed off.

Text format::

    # comment
    name: F
    braid: s1 s2^-1 s2^-1 s1
    close: 3

The braid is read first-letter-first (top to bottom).  Closing strand 3
runs the string back up on the right; strand 1 on the left.  The tangle
acts on ``M (x) M`` by tensoring with ``M`` on the closed side, braiding,
acting by the enhancement on the closed leg and taking the partial trace.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from typing import Sequence

from .braiding import Braiding
from .linalg import Mat, Vec, solve_in_span
from .qrep import RepModule, enhancement, qdim

_TOKEN = re.compile(r"^s([0-9]+)(\^(-?1))?$")


class TangleSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class TangleProgram:
    braid: tuple[tuple[int, int], ...]
    closed_strand: int
    name: str = "tangle"

    def permutation(self) -> tuple[int, int, int]:
        """Bottom position reached by the strand starting at each top position (0-based)."""
        pos = [0, 1, 2]  # pos[strand] = current position
        for gen, _ in self.braid:
            i = gen - 1
            a = pos.index(i)
            b = pos.index(i + 1)
            pos[a], pos[b] = i + 1, i
        return tuple(pos)

    def open_permutation(self) -> tuple[int, int] | None:
        """How the two open strands connect top to bottom, or None if the closed strand is a separate loop."""
        perm = self.permutation()
        c = self.closed_strand - 1
        if perm[c] == c:
            return None
        opens = [i for i in range(3) if i != c]
        out = []
        for i in opens:
            j = perm[i]
            while j == c:
                j = perm[c]
            out.append(opens.index(j))
        return tuple(out)

    def to_text(self) -> str:
        toks = " ".join(f"s{g}" if e > 0 else f"s{g}^-1" for g, e in self.braid)
        return f"name: {self.name}\nbraid: {toks}\nclose: {self.closed_strand}\n"

    def digest(self) -> str:
        return hashlib.sha256(self.to_text().encode()).hexdigest()[:16]


def parse_tangle(text: str) -> TangleProgram:
    name = None
    braid = None
    close = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if ":" not in line:
            raise TangleSyntaxError("expected 'key: value'", lineno, len(line) - len(line.lstrip()) + 1)
        key, _, value = line.partition(":")
        key = key.strip()
        vcol = line.index(":") + 2 + (len(value) - len(value.lstrip()))
        if key == "name":
            name = value.strip()
        elif key == "braid":
            braid = []
            col = line.index(":") + 1
            for m in re.finditer(r"\S+", value):
                tok = m.group(0)
                tm = _TOKEN.match(tok)
                if not tm:
                    raise TangleSyntaxError(f"unknown token {tok!r}", lineno, col + m.start() + 1)
                gen = int(tm.group(1))
                if gen not in (1, 2):
                    raise TangleSyntaxError(f"no generator s{gen} on 3 strands", lineno, col + m.start() + 1)
                braid.append((gen, -1 if tm.group(3) == "-1" else 1))
        elif key == "close":
            v = value.strip()
            if v not in ("1", "2", "3"):
                raise TangleSyntaxError(f"bad strand index {v!r}", lineno, vcol)
            close = int(v)
        else:
            raise TangleSyntaxError(f"unknown field {key!r}", lineno, 1)
    if braid is None:
        raise TangleSyntaxError("missing field 'braid'", 0, 0)
    if close is None:
        raise TangleSyntaxError("missing field 'close'", 0, 0)
    return TangleProgram(tuple(braid), close, name or "tangle")


def load_tangle(path) -> TangleProgram:
    with open(path) as fh:
        return parse_tangle(fh.read())


def evaluate_two_tangle(B: Braiding, t: TangleProgram, vectors: Sequence[Vec], color: str = "M") -> list[Vec]:
    """Images of vectors of ``V (x) V`` under the tangle, ``V`` the module of ``color``.

    Closing on the right uses the enhancement ``T``; closing on the left uses
    ``T^-1`` (the mirror-image quantum trace).
    """
    V = B.modules[color]
    d = V.dim
    if t.closed_strand == 2:
        raise ValueError("closing the middle strand is not a planar 2-tangle")
    T = enhancement(V)
    if t.closed_strand == 3:
        weights = [T[k, k] for k in range(d)]
    else:
        weights = [1 / T[k, k] for k in range(d)]
    word = (color, color, color)
    out = []
    for v in vectors:
        if any(i >= d * d for i in v):
            raise ValueError("vector is not in V (x) V")
        acc: dict = {}
        for k in range(d):
            if t.closed_strand == 3:
                state = {i * d + k: x for i, x in v.items()}
            else:
                state = {k * d * d + i: x for i, x in v.items()}
            state, _ = B.apply_braid(state, word, t.braid)
            wk = weights[k]
            for idx, x in state.items():
                if t.closed_strand == 3:
                    rest, kk = divmod(idx, d)
                else:
                    kk, rest = divmod(idx, d * d)
                if kk == k:
                    z = acc.get(rest)
                    acc[rest] = x * wk if z is None else z + x * wk
        out.append({i: x for i, x in acc.items() if x != 0})
    return out


def tangle_matrix(B: Braiding, t: TangleProgram, color: str = "M") -> Mat:
    """The full ``d^2 x d^2`` endomorphism; used as a test oracle."""
    d = B.modules[color].dim
    one = B.K.one
    cols = evaluate_two_tangle(B, t, [{j: one} for j in range(d * d)], color)
    return Mat.from_columns(cols, d * d)


def restrict_to_type(images: Sequence[Vec], basis: Sequence[Vec]) -> Mat:
    """Matrix of the map on a highest-weight space: column j = coordinates of image j."""
    cols = [solve_in_span(img, basis) for img in images]
    k = len(basis)
    return Mat.from_columns([{i: c for i, c in enumerate(col) if c != 0} for col in cols], k)


def restrict_matrix(A: Mat, basis: Sequence[Vec]) -> Mat:
    return restrict_to_type([A.apply(v) for v in basis], basis)


def closure_invariant(restrictions: dict, K) -> object:
    """Sum over highest-weight types of ``tr(gamma_nu) * qdim(nu)``."""
    total = K.zero
    for nu, g in restrictions.items():
        total = total + g.trace() * K.lift(qdim(nu))
    return total


def full_trace(A: Mat, VV: RepModule):
    """Quantum trace ``tr(T_{V V} A)`` of an endomorphism of ``V (x) V``."""
    return (enhancement(VV) @ A).trace()
