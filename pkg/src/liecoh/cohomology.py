"""Weight-decomposed cohomology of the positive-root nilpotent algebra.

``h_n_u1`` uses the symmetric complex at p = 2, ``h_n_u_ordinary`` the
exterior complex at any prime, and ``h1_u_with_coeffs`` the exterior
complex twisted by a coefficient module.  Weights are reported in
fundamental coordinates; for the B_1 variant the reported weight is the
untwisted nu.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import gfp_linalg as la
from .chevalley import divided_power_action, structure_constants
from .cochain import (EXTERIOR, SYMMETRIC, CoeffModule, Monomial, build_coeff_complex,
                      d_monomial, monomial_weight, monomials_of_weight)
from .rootsystem import RootSystem, Vec, WeylWord, build_root_system

Cochain = Dict[Monomial, int]


@dataclass
class WeightClass:
    weight: Vec  # fundamental coordinates
    simple: Tuple[Fraction, ...]
    dim: int
    reps: List[dict]


@dataclass
class CohomologyResult:
    kind: str
    rank: int
    prime: int
    degree: int
    group: str
    classes: Dict[Vec, WeightClass] = field(default_factory=dict)
    swapped: bool = False

    @property
    def total_dim(self) -> int:
        return sum(c.dim for c in self.classes.values())

    def multiset(self) -> Dict[Vec, int]:
        """weight (fundamental coordinates) -> multiplicity."""
        return {w: c.dim for w, c in self.classes.items() if c.dim}

    def simple_multiset(self) -> Dict[Tuple[Fraction, ...], int]:
        return {c.simple: c.dim for c in self.classes.values() if c.dim}

    def to_json(self) -> dict:
        def frac(x: Fraction):
            return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

        def rep_json(rep: dict):
            out = []
            for key, v in sorted(rep.items()):
                if isinstance(key[0], tuple) or (len(key) == 2 and isinstance(key[1], tuple)):
                    # coefficient-module basis (module index, monomial)
                    out.append([[key[0], list(key[1])], v])
                else:
                    out.append([list(key), v])
            return out

        weights = []
        for w in sorted(self.classes):
            c = self.classes[w]
            if not c.dim:
                continue
            weights.append({
                "nu_fundamental": list(w),
                "lambda_simple": [frac(x) for x in c.simple],
                "dim": c.dim,
                "reps": [rep_json(r) for r in c.reps],
            })
        return {
            "system": {"kind": self.kind, "rank": self.rank, "swapped": self.swapped},
            "prime": self.prime,
            "degree": self.degree,
            "group": self.group,
            "total_dim": self.total_dim,
            "weights": weights,
        }


def _vec_from_cochain(basis: Sequence, cochain: dict, p: int) -> List[int]:
    index = {m: i for i, m in enumerate(basis)}
    v = [0] * len(basis)
    for m, c in cochain.items():
        v[index[m]] = c % p
    return v


def _cochain_from_vec(basis: Sequence, vec: Sequence[int]) -> dict:
    return {basis[i]: x for i, x in enumerate(vec) if x}


def _weight_cohomology(rs: RootSystem, weight: Vec, n: int, p: int, variant: str):
    """(dim, reps) of H^n at one weight (simple coordinates)."""
    cols = monomials_of_weight(rs, weight, n, variant)
    if not cols:
        return 0, []
    images = [d_monomial(rs, m, p, variant) for m in cols]
    rows = sorted({m for img in images for m in img})
    row_index = {m: i for i, m in enumerate(rows)}
    mat = la.GfpMatrix.zeros(len(rows), len(cols), p)
    for j, img in enumerate(images):
        for m, v in img.items():
            mat.add_to(row_index[m], j, v)
    cocycles = la.kernel_basis(mat)
    if not cocycles:
        return 0, []
    coboundaries = []
    for m in monomials_of_weight(rs, weight, n - 1, variant):
        img = d_monomial(rs, m, p, variant)
        if img:
            coboundaries.append(_vec_from_cochain(cols, img, p))
    reps = la.quotient_reps(cocycles, coboundaries, p)
    return len(reps), [_cochain_from_vec(cols, r) for r in reps]


def _degree_weights(rs: RootSystem, n: int, variant: str) -> List[Vec]:
    roots = rs.positive_roots
    if n == 0:
        return [(0,) * rs.rank]
    if n == 1:
        return list(roots)
    seen = set()
    m = len(roots)
    for i in range(m):
        for j in range(i if variant == SYMMETRIC else i + 1, m):
            seen.add(tuple(a + b for a, b in zip(roots[i], roots[j])))
    return sorted(seen)


def _worker(args):
    kind, rank, swapped, weights, n, p, variant = args
    rs = build_root_system(kind, rank, swapped)
    return [(w,) + _weight_cohomology(rs, w, n, p, variant) for w in weights]


def thread_count(threads: Optional[int] = None) -> int:
    if threads is None:
        threads = int(os.environ.get("LIECOH_THREADS", "1") or 1)
    return max(1, threads)


def _compute(rs: RootSystem, n: int, p: int, variant: str, group: str,
             threads: Optional[int] = None) -> CohomologyResult:
    if n not in (0, 1, 2):
        raise ValueError("only degrees 0, 1, 2 are supported")
    res = CohomologyResult(rs.kind, rs.rank, p, n, group, swapped=rs.swapped)
    if n == 0:
        zero = (0,) * rs.rank
        res.classes[zero] = WeightClass(zero, tuple(Fraction(0) for _ in zero), 1, [{(): 1}])
        return res
    weights = _degree_weights(rs, n, variant)
    workers = thread_count(threads)
    if workers > 1 and len(weights) > 64:
        chunks = [weights[k::workers] for k in range(workers)]
        with ProcessPoolExecutor(workers) as ex:
            parts = ex.map(_worker, [(rs.kind, rs.rank, rs.swapped, c, n, p, variant) for c in chunks])
            found = [t for part in parts for t in part]
    else:
        found = [(w,) + _weight_cohomology(rs, w, n, p, variant) for w in weights]
    for w, dim, reps in sorted(found):
        if dim:
            fw = rs.to_fundamental(w)
            res.classes[fw] = WeightClass(fw, tuple(Fraction(x) for x in w), dim, reps)
    return res


_U1_CACHE: Dict[Tuple[str, int, bool, int], CohomologyResult] = {}


def h_n_u1(rs: RootSystem, n: int, p: int = 2, threads: Optional[int] = None) -> CohomologyResult:
    """H^n(U_1, k) for n <= 2 via the symmetric complex."""
    if p != 2:
        raise ValueError("restricted cohomology is only implemented for p = 2")
    key = (rs.kind, rs.rank, rs.swapped, n)
    if key not in _U1_CACHE:
        _U1_CACHE[key] = _compute(rs, n, p, SYMMETRIC, "u1", threads)
    return _U1_CACHE[key]


def h_n_u_ordinary(rs: RootSystem, n: int, p: int, threads: Optional[int] = None) -> CohomologyResult:
    return _compute(rs, n, p, EXTERIOR, "u", threads)


def weight_cohomology(rs: RootSystem, weight: Sequence[int], n: int, p: int = 2,
                      variant: str = SYMMETRIC):
    """(dim, representatives) of H^n at a single weight given in simple coordinates."""
    return _weight_cohomology(rs, tuple(weight), n, p, variant)


# ---------------------------------------------------------------------------
# coefficients


def h1_u_with_coeffs(rs: RootSystem, module: CoeffModule, p: int = 2) -> CohomologyResult:
    cx = build_coeff_complex(rs, module, p)
    res = CohomologyResult(rs.kind, rs.rank, p, 1, "u", swapped=rs.swapped)
    for w in sorted(cx.components[1]):
        b1 = cx.blocks[1][w]
        cocycles = la.kernel_basis(b1.matrix) if b1.matrix.nrows else [
            [1 if k == i else 0 for k in range(len(b1.cols))] for i in range(len(b1.cols))]
        if not cocycles:
            continue
        coboundaries = []
        b0 = cx.blocks[0].get(w)
        if b0 is not None:
            m = b0.matrix.to_lists()
            for j in range(b0.matrix.ncols):
                col = [m[i][j] for i in range(b0.matrix.nrows)]
                if any(col):
                    coboundaries.append(col)
        reps = la.quotient_reps(cocycles, coboundaries, p)
        if reps:
            res.classes[w] = WeightClass(w, rs.to_simple(w), len(reps),
                                         [_cochain_from_vec(b1.cols, r) for r in reps])
    return res


def standard_module(rs: RootSystem, name: Optional[str] = None) -> CoeffModule:
    """The indecomposable coefficient modules N_{B_n}, N_{C_n}, N_{F_4}, N_{G_2}."""
    n = rs.rank
    zero = (0,) * n
    alpha = [tuple(r) for r in rs.cartan]  # simple roots in fundamental coordinates
    kind = rs.kind
    if name is not None and name not in ("N", f"N_{kind}"):
        raise ValueError(f"unknown coefficient module {name!r}")
    if kind == "B":
        return CoeffModule(f"N_B{n}", [alpha[n - 1], zero], {(n - 1, 0): (1, 1)})
    if kind == "C":
        weights = [rs.fundamental_weight(0)]
        for i in range(1, n):
            weights.append(tuple(a - b for a, b in zip(rs.fundamental_weight(i), rs.fundamental_weight(i - 1))))
        return CoeffModule(f"N_C{n}", weights, {(i, i): (i + 1, 1) for i in range(n - 1)})
    if kind == "F":
        top = tuple(a + b for a, b in zip(alpha[2], alpha[3]))
        return CoeffModule("N_F4", [top, alpha[2], zero], {(3, 0): (1, 1), (2, 1): (2, 1)})
    if kind == "G":
        return CoeffModule("N_G2", [alpha[1], zero], {(1, 0): (1, 1)})
    raise ValueError(f"no standard coefficient module for type {kind}")


# ---------------------------------------------------------------------------
# B_1


def h2_b1(rs: RootSystem, lam: Sequence[int], p: int = 2, threads: Optional[int] = None) -> CohomologyResult:
    """Weights nu with -lam + p nu a weight of H^2(U_1, k), with the matching classes."""
    u1 = h_n_u1(rs, 2, p, threads)
    lam = tuple(lam)
    res = CohomologyResult(rs.kind, rs.rank, p, 2, "b1", swapped=rs.swapped)
    for w, c in u1.classes.items():
        shifted = [a + b for a, b in zip(w, lam)]
        if all(x % p == 0 for x in shifted):
            nu = tuple(x // p for x in shifted)
            res.classes[nu] = WeightClass(nu, rs.to_simple(nu), c.dim, c.reps)
    return res


def connected(rs: RootSystem, i: int, j: int) -> bool:
    return i != j and rs.cartan[i][j] != 0


def _neighbours(rs: RootSystem, i: int) -> List[int]:
    return [k for k in range(rs.rank) if connected(rs, i, k)]


def nu_w(rs: RootSystem, w: WeylWord) -> Vec:
    """The weight nu with w.0 + 2 nu restricted, for w = s_i s_j (0-based, i < j)."""
    if len(w) != 2:
        raise ValueError("nu_w needs a word of length 2")
    i, j = w.reflections
    if i > j:
        i, j = j, i
    n = rs.rank
    kind = rs.kind
    om = rs.fundamental_weight

    def comb(*terms):
        out = [0] * n
        for c, k in terms:
            for t, x in enumerate(om(k)):
                out[t] += c * x
        return tuple(out)

    c_pair = kind == "C" and (i, j) == (n - 2, n - 1)
    if i == j or (connected(rs, i, j) and not c_pair):
        raise ValueError(f"s_{i + 1} s_{j + 1} is not an admissible word")
    if kind == "B" and j == n - 2 and i == n - 4:
        nu = comb((1, n - 4), (-1, n - 3), (1, n - 2), (-1, n - 1))
    elif kind == "B" and j == n - 2:
        nu = comb((1, i), (1, n - 2), (-1, n - 1))
    elif kind == "C" and j == n - 1 and i != n - 3 and not c_pair:
        nu = comb((1, i), (-1, n - 2), (1, n - 1))
    elif c_pair:
        nu = comb((-1, n - 3), (2, n - 2)) if n >= 3 else comb((2, n - 2))
    else:
        shared = [k for k in _neighbours(rs, i) if k in _neighbours(rs, j)]
        if len(shared) == 1:
            nu = comb((1, i), (-1, shared[0]), (1, j))
        else:
            nu = comb((1, i), (1, j))
    restricted = tuple(a + 2 * b for a, b in zip(rs.dot(WeylWord((i, j)), (0,) * n), nu))
    if any(x not in (0, 1) for x in restricted):
        raise ArithmeticError(f"w.0 + 2 nu_w = {restricted} is not restricted for {rs.name}, w = s_{i + 1} s_{j + 1}")
    return nu


def admissible_words(rs: RootSystem) -> List[WeylWord]:
    out = []
    for i in range(rs.rank):
        for j in range(i + 1, rs.rank):
            if not connected(rs, i, j) or (rs.kind == "C" and (i, j) == (rs.rank - 2, rs.rank - 1)):
                out.append(WeylWord((i, j)))
    return out


# ---------------------------------------------------------------------------
# divided-power action and linkage


def act_on_functional(rs: RootSystem, gamma_index: int, n: int, root_index: int) -> Optional[Tuple[int, int]]:
    """X_{-gamma}^n / n! on the functional phi_beta: (index of beta - n gamma, coefficient)."""
    if n == 0:
        return root_index, 1
    roots = rs.positive_roots
    gamma = roots[gamma_index]
    lower = tuple(b - n * g for b, g in zip(roots[root_index], gamma))
    if not rs.is_positive_root(lower):
        return None
    res, coeff = divided_power_action(rs, gamma, n, lower)
    if res is None or coeff == 0:
        return None
    return rs.root_index(lower), coeff


def act_on_cochain(rs: RootSystem, gamma_index: int, n: int, cochain: Cochain, p: int = 2) -> Cochain:
    """X_{-gamma}^n / n! on a symmetric cochain, through the coproduct of divided powers."""
    out: Dict[Monomial, int] = {}
    for mono, c in cochain.items():
        terms = _distribute(rs, gamma_index, n, list(mono))
        for m, v in terms.items():
            out[m] = (out.get(m, 0) + c * v) % p
    return {m: v for m, v in out.items() if v}


def _distribute(rs: RootSystem, gamma_index: int, n: int, mono: List[int]) -> Dict[Monomial, int]:
    if not mono:
        return {(): 1} if n == 0 else {}
    head, tail = mono[0], mono[1:]
    out: Dict[Monomial, int] = {}
    for k in range(n + 1):
        a = act_on_functional(rs, gamma_index, k, head)
        if a is None:
            continue
        idx, coeff = a
        for m, v in _distribute(rs, gamma_index, n - k, tail).items():
            key = tuple(sorted((idx,) + m))
            out[key] = out.get(key, 0) + coeff * v
    return out


@dataclass
class LinkageReport:
    source: Vec
    target: Vec
    gamma: int
    n: int
    nonzero: bool


def _simple_weight(rs: RootSystem, cochain: Cochain) -> Vec:
    weights = {monomial_weight(rs, m) for m in cochain}
    if len(weights) != 1:
        raise ValueError("cochain is not homogeneous")
    return weights.pop()


def _as_vectors(rs: RootSystem, weight: Vec, cochains: Sequence[Cochain], p: int):
    cols = monomials_of_weight(rs, weight, 2, SYMMETRIC)
    return cols, [_vec_from_cochain(cols, c, p) for c in cochains]


def coboundaries_at(rs: RootSystem, weight: Vec, p: int = 2) -> List[Cochain]:
    if not rs.is_positive_root(weight):
        return []
    img = d_monomial(rs, (rs.root_index(weight),), p, SYMMETRIC)
    return [img] if img else []


def is_cocycle(rs: RootSystem, cochain: Cochain, p: int = 2) -> bool:
    total: Dict[Monomial, int] = {}
    for m, c in cochain.items():
        for k, v in d_monomial(rs, m, p, SYMMETRIC).items():
            total[k] = (total.get(k, 0) + c * v) % p
    return not any(total.values())


def link_classes(rs: RootSystem, c_src: Cochain, c_dst: Cochain, p: int = 2,
                 modulo: Sequence[Cochain] = ()) -> LinkageReport:
    """Does X_{-gamma}^n / n! carry [c_src] to a nonzero multiple of [c_dst]?

    ``modulo`` lists further cocycles of the target weight to be treated as
    zero, e.g. a submodule already split off.
    """
    src_w = _simple_weight(rs, c_src)
    dst_w = _simple_weight(rs, c_dst)
    diff = tuple(a - b for a, b in zip(src_w, dst_w))
    nz = [k for k, x in enumerate(diff) if x]
    if len(nz) != 1 or diff[nz[0]] not in (1, 2):
        raise ValueError(f"weight difference {diff} is not n times a simple root with n in (1, 2)")
    gamma, n = nz[0], diff[nz[0]]
    for c in (c_src, c_dst):
        if not is_cocycle(rs, c, p):
            raise ValueError("linkage needs cocycles")
    image = act_on_cochain(rs, gamma, n, c_src, p)
    zero_space = coboundaries_at(rs, dst_w, p) + list(modulo)
    cols, vecs = _as_vectors(rs, dst_w, zero_space + [c_dst], p)
    img_vec = _vec_from_cochain(cols, image, p) if image else [0] * len(cols)
    base = vecs[:-1]
    nonzero = (not la.in_span(img_vec, base, p)) and la.in_span(img_vec, vecs, p)
    return LinkageReport(rs.to_fundamental(src_w), rs.to_fundamental(dst_w), gamma, n, nonzero)
