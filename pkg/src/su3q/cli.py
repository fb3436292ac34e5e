"""Command-line front end.

    su3q selfcheck                      algebra and R-matrix property checks
    su3q build-rmm                      build and cache M, R_MM, R_MM^-1
    su3q eval --tangle F.txt --color M  restrict a tangle to highest-weight spaces
    su3q mutant-diff --f F.txt --g G.txt
    su3q skein faces|lattice|symcheck ...

Progress goes to stderr; the exit status is 0 exactly when every verdict
requested passes.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from collections import Counter
from importlib import resources
from pathlib import Path

from .braiding import Braiding
from .field import SYMBOLIC, Scalars, random_modular
from .laurent import LaurentPoly
from .linalg import Mat
from .mutant import divisibility_check, total_difference
from .qrep import check_relations, enhancement, highest_weight_vectors, is_intertwiner, qdim, tensor_all, tensor_module
from .reference import VASSILIEV_COEFFICIENT, VASSILIEV_ORDER, total_difference_factored
from .series import to_h_series
from .skein import (
    LatticeSpec,
    TrivalentGraph,
    check_cyclic_symmetry,
    check_turnover_symmetry,
    enumerate_face_profiles,
    lattice_quotient_graph,
)
from .submodule import build_M, dump_braiding_data, load_braiding_data
from .tangle import evaluate_two_tangle, load_tangle, restrict_to_type

log = logging.getLogger("su3q")

CACHE_ENV = "SU3Q_CACHE_DIR"
CACHE_FILE = "rmm-symbolic.txt"


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "su3q"


def data_file(name: str) -> Path:
    """Path of a shipped data file such as ``tangle_F.txt``."""
    return Path(str(resources.files("su3q") / "data" / name))


def _scalars(args) -> Scalars:
    if getattr(args, "modular", None) is not None:
        return random_modular(args.modular)
    return SYMBOLIC


def _progress(i, n):
    if i % 5 == 0 or i == n:
        log.info("R_MM columns: %d/%d blocks", i, n)


def braiding_with_M(K: Scalars, cache_dir: Path | None = None) -> Braiding:
    """A :class:`Braiding` with colour ``M`` registered, loading the symbolic cache when present."""
    B = Braiding(K)
    if cache_dir is not None and K is SYMBOLIC:
        path = cache_dir / CACHE_FILE
        if path.exists():
            digest = load_braiding_data(path.read_text(), B)
            log.info("loaded R_MM from %s (sha256 %s)", path, digest[:16])
            return B
    log.info("building M and R_MM over %s", getattr(K, "name", "symbolic scalars"))
    build_M(B, progress=_progress)
    return B


# -- selfcheck -----------------------------------------------------------------


def selfcheck_results(K: Scalars, yang_baxter_step: int = 1) -> list[tuple[str, bool]]:
    out: list[tuple[str, bool]] = []
    B = Braiding(K)
    E, F = B.modules["E"], B.modules["F"]
    for name, mod in (("E", E), ("F", F), ("E E F", tensor_all([E, E, F]))):
        out.append((f"quantum group relations on {name}", check_relations(mod).ok))
    R, Ri = B.R[("E", "E")], B.Rinv[("E", "E")]
    out.append(("R_EE - R_EE^-1 = (s - 1/s) I", R - Ri == Mat.identity(9, K.s - K.a_power(-2))))
    out.append(("R_EE R_EE^-1 = I", R @ Ri == Mat.identity(9)))
    for X in "EF":
        for Y in "EF":
            for sign in (1, -1):
                out.append((f"R_{X}{Y}^{sign:+d} is an intertwiner", B.check_intertwiner(X, Y, sign)))
    for w in ("EEE", "EEF", "EFE", "FEE", "EFF", "FEF", "FFE", "FFF"):
        out.append((f"Yang-Baxter on {w}", B.check_yang_baxter(tuple(w))))
    data = build_M(B)
    out.append(("full-twist eigenspace dimensions (15, 6, 6)", data.eigenspace_dims[0] == 15 and sorted(data.eigenspace_dims[1:]) == [6, 6]))
    out.append(("pi P = I, pi Q = 0", (data.pi @ data.P) == Mat.identity(15) and (data.pi @ data.Q).is_zero()))
    out.append(("quantum group relations on M", check_relations(data.M).ok))
    out.append(("qdim(M) = [3][5]", enhancement(data.M).trace() == K.lift(qdim((2, 1)))))
    MM = tensor_module(data.M, data.M)
    out.append(("R_MM is an intertwiner", is_intertwiner(data.R_MM, MM, MM)))
    out.append(("R_MM R_MM^-1 = I", data.R_MM @ data.R_MM_inv == Mat.identity(225)))
    out.append(("Yang-Baxter on M M M", B.check_yang_baxter(("M", "M", "M"), range(0, 3375, yang_baxter_step))))
    types = Counter(w for _, w in highest_weight_vectors(MM))
    expected = Counter({(3, 1): 2, (1, 2): 2, (4, 2): 1, (2, 3): 1, (5, 0): 1, (0, 4): 1, (2, 0): 1, (0, 1): 1})
    out.append(("highest-weight space of M M: dimension 10, types (3,1)x2 (1,2)x2 + six others", types == expected))
    return out


def cmd_selfcheck(args) -> int:
    K = _scalars(args)
    step = 1 if args.modular is not None else args.yb_step
    results = selfcheck_results(K, step)
    for name, ok in results:
        print(f"{'pass' if ok else 'FAIL'}  {name}")
    return 0 if all(ok for _, ok in results) else 1


# -- build-rmm -----------------------------------------------------------------


def cmd_build_rmm(args) -> int:
    cache = Path(args.cache_dir) if args.cache_dir else default_cache_dir()
    B = Braiding(SYMBOLIC)
    data = build_M(B, progress=_progress)
    text = dump_braiding_data(data)
    cache.mkdir(parents=True, exist_ok=True)
    path = cache / CACHE_FILE
    path.write_text(text)
    digest = load_braiding_data(text, Braiding(SYMBOLIC))
    print(f"wrote {path}")
    print(f"R_MM nonzeros {data.R_MM.nnz()}, sha256 {digest}")
    return 0


# -- eval ----------------------------------------------------------------------


def _fmt(x, style: str = "pretty") -> str:
    """``pretty`` prints powers of s; ``canonical`` prints ``exponent:coefficient`` pairs in powers of a."""
    to = getattr(x, "to_laurent", None)
    if to is not None and x.is_polynomial():
        x = to()
    elif isinstance(x, int):
        x = LaurentPoly.constant(x)
    if isinstance(x, LaurentPoly):
        return x.to_compact() if style == "canonical" else x.pretty()
    return str(x)


def cmd_eval(args) -> int:
    K = _scalars(args)
    t = load_tangle(args.tangle)
    B = braiding_with_M(K, _cache(args)) if args.color == "M" else Braiding(K)
    V = B.modules[args.color]
    spaces: dict = {}
    for v, w in highest_weight_vectors(tensor_module(V, V)):
        spaces.setdefault(w, []).append(v)
    print(f"tangle {t.name}: braid of length {len(t.braid)}, strand {t.closed_strand} closed, colour {args.color}")
    total = K.zero
    for w, basis in sorted(spaces.items()):
        if args.repeated_only and len(basis) < 2:
            continue
        g = restrict_to_type(evaluate_two_tangle(B, t, basis, args.color), basis)
        total = total + g.trace() * K.lift(qdim(w))
        print(f"type {w} (multiplicity {len(basis)}):")
        for i in range(g.nrows):
            print("  [" + ", ".join(_fmt(g[i, j], args.format) for j in range(g.ncols)) + "]")
    if not args.repeated_only:
        print(f"closure invariant: {_fmt(total, args.format)}")
    return 0


# -- mutant-diff ---------------------------------------------------------------


def _modular_precheck(F, G, color: str, seed: int) -> bool:
    K = random_modular(seed)
    B = braiding_with_M(K) if color == "M" else Braiding(K)
    rep = total_difference(B, F, G, color, only_repeated=(color == "M"))
    if color != "M":
        return rep.total == 0
    g = K.lift(total_difference_factored())
    x = rep.total
    if g == 0:
        return False
    a, ai = K.a, K.a_power(-1)
    up = dn = g
    for _ in range(801):
        if x in (up, -up, dn, -dn):
            return True
        up, dn = up * a, dn * ai
    return False


def _cache(args) -> Path | None:
    if getattr(args, "no_cache", False):
        return None
    return Path(args.cache_dir) if getattr(args, "cache_dir", None) else default_cache_dir()


def cmd_mutant_diff(args) -> int:
    F, G = load_tangle(args.f), load_tangle(args.g)
    if args.precheck:
        ok = _modular_precheck(F, G, args.color, args.seed)
        print(f"precheck at a random residue: {'pass' if ok else 'FAIL'}")
        if not ok:
            return 1
    B = braiding_with_M(SYMBOLIC, _cache(args)) if args.color == "M" else Braiding(SYMBOLIC)
    rep = total_difference(B, F, G, args.color, only_repeated=not args.all_types)
    for w, c in sorted(rep.contributions.items()):
        if rep.multiplicities[w] > 1:
            print(f"t{w[0]}{w[1]} = {_fmt(c, args.format)}")
    print(f"total = {_fmt(rep.total, args.format)}")
    print(f"roles exchanged: {'unit-equivalent' if rep.roles_agree() else 'DIFFERENT'}")
    if args.color != "M":
        verdict = rep.total == 0
        print("NULL (difference vanishes)" if verdict else "NONZERO difference")
        return 0 if verdict else 1
    ratio = rep.reference_ratio()
    if ratio is not None:
        sign, k = ratio
        print(f"GOLDEN MATCH (up to unit): total = {'-' if sign < 0 else ''}a^{k} * reference")
    else:
        print("NO MATCH with the reference polynomial")
    div = divisibility_check(rep.total)
    print(f"divisible by the s^k - s^-k factors: {'yes' if div else 'NO'}")
    series = to_h_series(rep.total, VASSILIEV_ORDER + 1)
    v = series.valuation()
    print(f"h-series: first nonzero coefficient at h^{v}: {series[v] if v is not None else 0}")
    vass = v == VASSILIEV_ORDER and abs(series[VASSILIEV_ORDER]) == VASSILIEV_COEFFICIENT
    return 0 if ratio is not None and div and vass and rep.roles_agree() else 1


# -- skein ---------------------------------------------------------------------


def cmd_skein(args) -> int:
    if args.skein_cmd == "faces":
        profiles = enumerate_face_profiles(args.chi, args.boundary, args.boundary_max)
        for p in profiles:
            print(p)
        print(f"{len(profiles)} profile(s)")
        return 0
    if args.skein_cmd == "lattice":
        spec = LatticeSpec(args.p, args.q)
        g = lattice_quotient_graph(spec)
        text = g.to_text()
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        problems = g.check()
        print(f"# index {spec.index}: {g.num_vertices} vertices, {g.num_edges} edges, faces {g.face_sizes()}", file=sys.stderr)
        return 0 if not problems and g.is_admissible() else 1
    if args.skein_cmd == "symcheck":
        g = TrivalentGraph.from_text(Path(args.graph).read_text())
        problems = g.check()
        for p in problems:
            print(f"FAIL  {p}")
        cyc = check_cyclic_symmetry(g)
        label_map = {1: 1, 2: 3, 3: 2} if args.swap_ears else None
        turn = check_turnover_symmetry(g, label_map)
        print(f"admissible: {'yes' if g.is_admissible() else 'no'}")
        print(f"cyclic symmetry: {'yes' if cyc else 'no'}")
        print(f"turnover symmetry: {'yes' if turn else 'no'}")
        return 0 if not problems else 1
    raise AssertionError(args.skein_cmd)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="su3q", description="Exact SU(3)_q invariants of coloured tangles and mutant differences.")
    p.add_argument("-v", "--verbose", action="store_true", help="progress messages on stderr")
    sub = p.add_subparsers(dest="cmd", required=True)

    sc = sub.add_parser("selfcheck", help="run the algebra and R-matrix property checks")
    sc.add_argument("--modular", type=int, metavar="SEED", help="work modulo a prime at a random point instead of symbolically")
    sc.add_argument("--yb-step", type=int, default=7, help="symbolic Yang-Baxter check on every n-th column of M M M (default 7)")
    sc.set_defaults(func=cmd_selfcheck)

    br = sub.add_parser("build-rmm", help=f"build and cache R_MM (cache dir: --cache-dir, ${CACHE_ENV}, or ~/.cache/su3q)")
    br.add_argument("--cache-dir")
    br.set_defaults(func=cmd_build_rmm)

    ev = sub.add_parser("eval", help="restrict a tangle to the highest-weight spaces of V V")
    ev.add_argument("--tangle", required=True)
    ev.add_argument("--color", choices=["E", "M"], default="M")
    ev.add_argument("--modular", type=int, metavar="SEED")
    ev.add_argument("--repeated-only", action="store_true", help="only types of multiplicity > 1")
    ev.add_argument("--cache-dir")
    ev.add_argument("--no-cache", action="store_true")
    ev.add_argument("--format", choices=["pretty", "canonical"], default="pretty", help="polynomials in powers of s, or as exponent:coefficient pairs in a")
    ev.set_defaults(func=cmd_eval)

    md = sub.add_parser("mutant-diff", help="difference of the invariant on a knot and its mutant")
    md.add_argument("--f", default=str(data_file("tangle_F.txt")), help="tangle that is turned over (default: shipped F)")
    md.add_argument("--g", default=str(data_file("tangle_G.txt")), help="other tangle (default: shipped G)")
    md.add_argument("--color", choices=["E", "M"], default="M")
    md.add_argument("--precheck", action="store_true", help="first compare at a random residue modulo a prime")
    md.add_argument("--seed", type=int, default=1, help="seed for the precheck point")
    md.add_argument("--all-types", action="store_true", help="include multiplicity-one types (they contribute 0)")
    md.add_argument("--cache-dir")
    md.add_argument("--no-cache", action="store_true")
    md.add_argument("--format", choices=["pretty", "canonical"], default="pretty")
    md.set_defaults(func=cmd_mutant_diff)

    sk = sub.add_parser("skein", help="admissible trivalent graph combinatorics")
    sks = sk.add_subparsers(dest="skein_cmd", required=True)
    f = sks.add_parser("faces", help="face profiles with a given Euler characteristic")
    f.add_argument("--chi", type=int, required=True)
    f.add_argument("--boundary", type=int, required=True)
    f.add_argument("--boundary-max", type=int)
    la = sks.add_parser("lattice", help="admissible graph from a triangular sublattice (p + q w) Z[w]")
    la.add_argument("--p", type=int, required=True)
    la.add_argument("--q", type=int, required=True)
    la.add_argument("--out")
    sy = sks.add_parser("symcheck", help="symmetry checks on a graph file")
    sy.add_argument("graph")
    sy.add_argument("--swap-ears", action="store_true", help="let the turn-over exchange punctures 2 and 3")
    sk.set_defaults(func=cmd_skein)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
