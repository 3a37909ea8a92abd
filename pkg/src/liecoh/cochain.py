"""Weight-graded cochain complexes on the positive-root functionals.

A monomial is a tuple of positive-root indices: non-decreasing for the
symmetric (polynomial) complex used at p = 2, strictly increasing for the
exterior complex.  The functional dual to the root vector indexed by a
positive root has that root as its weight, so all weights here are
non-negative combinations of simple roots.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .chevalley import structure_constants
from .gfp_linalg import GfpMatrix
from .rootsystem import RootSystem, Vec

SYMMETRIC = "symmetric"
EXTERIOR = "exterior"
MAX_DEGREE = 3

Monomial = Tuple[int, ...]


def _check_variant(variant: str, p: int) -> None:
    if variant == SYMMETRIC:
        if p != 2:
            raise ValueError("the symmetric complex is only available for p = 2")
    elif variant != EXTERIOR:
        raise ValueError(f"unknown complex variant {variant!r}")


def monomial_weight(rs: RootSystem, mono: Sequence[int]) -> Vec:
    roots = rs.positive_roots
    w = [0] * rs.rank
    for i in mono:
        for k, x in enumerate(roots[i]):
            w[k] += x
    return tuple(w)


def monomials_of_weight(rs: RootSystem, weight: Sequence[int], n: int, variant: str) -> List[Monomial]:
    """All degree-n monomials of the given weight, in lexicographic order of indices."""
    roots = rs.positive_roots
    weight = tuple(weight)
    strict = variant == EXTERIOR
    out: List[Monomial] = []
    if n == 0:
        return [()] if not any(weight) else []

    def rec(start: int, rest: Tuple[int, ...], left: int, acc: List[int]) -> None:
        if left == 1:
            if rs.is_positive_root(rest):
                j = rs.root_index(rest)
                if j >= start:
                    out.append(tuple(acc + [j]))
            return
        for j in range(start, len(roots)):
            r = roots[j]
            nxt = tuple(a - b for a, b in zip(rest, r))
            if min(nxt) < 0 or sum(nxt) < left - 1:
                continue
            rec(j + 1 if strict else j, nxt, left - 1, acc + [j])

    rec(0, weight, n, [])
    out.sort()
    return out


@dataclass
class GradedComponent:
    degree: int
    variant: str
    classes: Dict[Vec, List[Monomial]]

    @property
    def size(self) -> int:
        return sum(len(v) for v in self.classes.values())


def all_monomials(num_roots: int, n: int, variant: str) -> Iterable[Monomial]:
    if variant == SYMMETRIC:
        return itertools.combinations_with_replacement(range(num_roots), n)
    return itertools.combinations(range(num_roots), n)


def build_graded_component(rs: RootSystem, n: int, variant: str = SYMMETRIC) -> GradedComponent:
    if not 0 <= n <= MAX_DEGREE:
        raise ValueError(f"degree {n} outside the supported range 0..{MAX_DEGREE}")
    if variant not in (SYMMETRIC, EXTERIOR):
        raise ValueError(f"unknown complex variant {variant!r}")
    classes: Dict[Vec, List[Monomial]] = {}
    for mono in all_monomials(rs.num_positive, n, variant):
        classes.setdefault(monomial_weight(rs, mono), []).append(mono)
    return GradedComponent(n, variant, classes)


def expected_component_size(num_roots: int, n: int, variant: str) -> int:
    if variant == SYMMETRIC:
        return comb(num_roots + n - 1, n)
    return comb(num_roots, n)


def _sort_sign(seq: List[int]) -> Tuple[Optional[Monomial], int]:
    """Sort for the exterior algebra: (sorted tuple, sign) or (None, 0) on a repeat."""
    seq = list(seq)
    sign = 1
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(seq, seq[1:]):
        if a == b:
            return None, 0
    return tuple(seq), sign


def d_generator(rs: RootSystem, c: int) -> List[Tuple[int, int, int]]:
    """d of the functional indexed by root c: [(i, j, coeff)] with i < j, coeff = -N(i, j)."""
    return [(i, j, -n) for i, j, n in structure_constants(rs).decompositions[c]]


def d_monomial(rs: RootSystem, mono: Sequence[int], p: int, variant: str) -> Dict[Monomial, int]:
    """The differential of one monomial, as {monomial: coefficient mod p}."""
    out: Dict[Monomial, int] = {}
    mono = list(mono)
    for k, c in enumerate(mono):
        rest = mono[:k] + mono[k + 1:]
        for i, j, coeff in d_generator(rs, c):
            if variant == SYMMETRIC:
                key = tuple(sorted(rest + [i, j]))
                val = coeff
            else:
                key, sign = _sort_sign(mono[:k] + [i, j] + mono[k + 1:])
                if key is None:
                    continue
                val = coeff * sign * (-1) ** k
            out[key] = (out.get(key, 0) + val) % p
    return {m: v for m, v in out.items() if v}


@dataclass
class DifferentialBlock:
    matrix: GfpMatrix
    rows: List[Monomial]
    cols: List[Monomial]


def differential_block_with_bases(rs: RootSystem, weight: Sequence[int], n: int, p: int,
                                  variant: str = SYMMETRIC, full_rows: bool = True) -> DifferentialBlock:
    """Matrix of d_n on one weight class (rows: degree n+1, columns: degree n).

    With ``full_rows=False`` only the rows reached by the image are kept,
    which leaves rank and kernel unchanged.
    """
    _check_variant(variant, p)
    if not 0 <= n < MAX_DEGREE:
        raise ValueError(f"d_{n} is outside the supported range")
    cols = monomials_of_weight(rs, weight, n, variant)
    images = [d_monomial(rs, m, p, variant) for m in cols]
    if full_rows:
        rows = monomials_of_weight(rs, weight, n + 1, variant)
    else:
        rows = sorted({m for img in images for m in img})
    row_index = {m: i for i, m in enumerate(rows)}
    mat = GfpMatrix.zeros(len(rows), len(cols), p)
    for j, img in enumerate(images):
        for m, v in img.items():
            mat.add_to(row_index[m], j, v)
    return DifferentialBlock(mat, rows, cols)


def differential_block(rs: RootSystem, weight: Sequence[int], n: int, p: int,
                       variant: str = SYMMETRIC) -> GfpMatrix:
    return differential_block_with_bases(rs, weight, n, p, variant).matrix


def square_vanishes(rs: RootSystem, weight: Sequence[int], p: int, variant: str = SYMMETRIC) -> bool:
    """d_2 d_1 = 0 on the weight block C^1 -> C^3."""
    first = differential_block_with_bases(rs, weight, 1, p, variant)
    if not first.cols or not first.rows:
        return True
    second = differential_block_with_bases(rs, weight, 2, p, variant)
    return second.matrix.matmul(first.matrix).is_zero()


# ---------------------------------------------------------------------------
# coefficient modules


@dataclass
class CoeffModule:
    """A finite-dimensional module for the positive-root Lie algebra.

    ``weights`` lists the basis vectors from head to socle in fundamental
    coordinates.  ``action[(g, i)] = (j, c)`` says the root vector of the
    simple root g (0-based) sends basis vector i to c times basis vector j.
    """

    name: str
    weights: List[Vec]
    action: Dict[Tuple[int, int], Tuple[int, int]] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.weights)


def trivial_module(rs: RootSystem) -> CoeffModule:
    return CoeffModule("k", [(0,) * rs.rank], {})


def validate_module(rs: RootSystem, module: CoeffModule) -> None:
    for (g, i), (j, c) in module.action.items():
        if not 0 <= g < rs.rank:
            raise ValueError(f"action by non-simple index {g}")
        if not (0 <= i < module.dim and 0 <= j < module.dim):
            raise ValueError("action references a missing basis vector")
        if j <= i:
            raise ValueError("action must move strictly toward the socle")
        diff = tuple(a - b for a, b in zip(module.weights[i], module.weights[j]))
        if diff != tuple(rs.cartan[g]):
            raise ValueError(f"weights of basis vectors {i} and {j} do not differ by simple root {g}")
        if c == 0:
            raise ValueError("zero coefficient in action data")


def module_representation(rs: RootSystem, module: CoeffModule) -> List[List[List[int]]]:
    """Integer matrices rho[c][j][i] of every positive root vector, checked to be a representation."""
    validate_module(rs, module)
    dim = module.dim
    roots = rs.positive_roots
    sc = structure_constants(rs)
    rho: List[List[List[Fraction]]] = []

    def zero():
        return [[Fraction(0)] * dim for _ in range(dim)]

    def commutator(a, b):
        return [[sum(a[r][k] * b[k][s] - b[r][k] * a[k][s] for k in range(dim)) for s in range(dim)]
                for r in range(dim)]

    for c, root in enumerate(roots):
        if c < rs.rank:
            m = zero()
            for (g, i), (j, v) in module.action.items():
                if g == c:
                    m[j][i] += v
            rho.append(m)
            continue
        for g in range(rs.rank):
            rest = tuple(x - (1 if k == g else 0) for k, x in enumerate(root))
            if rs.is_positive_root(rest):
                n = sc.N(roots[g], rest)
                br = commutator(rho[g], rho[rs.root_index(rest)])
                rho.append([[x / n for x in row] for row in br])
                break
    for a in range(len(roots)):
        for b in range(len(roots)):
            br = commutator(rho[a], rho[b])
            s = tuple(x + y for x, y in zip(roots[a], roots[b]))
            if rs.is_positive_root(s):
                n = sc.N(roots[a], roots[b])
                target = [[n * x for x in row] for row in rho[rs.root_index(s)]]
            else:
                target = zero()
            if br != target:
                raise ValueError(f"action data of {module.name} does not define a representation")
    out = []
    for m in rho:
        if any(x.denominator != 1 for row in m for x in row):
            raise ValueError(f"action of {module.name} is not integral")
        out.append([[int(x) for x in row] for row in m])
    return out


CoeffBasis = Tuple[int, Monomial]  # (module basis index, exterior monomial)


@dataclass
class CoeffComplex:
    module: CoeffModule
    p: int
    components: List[Dict[Vec, List[CoeffBasis]]]  # degrees 0, 1, 2
    blocks: List[Dict[Vec, DifferentialBlock]]  # d_0', d_1' per weight

    def dims(self) -> List[int]:
        return [sum(len(v) for v in comp.values()) for comp in self.components]


def build_coeff_complex(rs: RootSystem, module: CoeffModule, p: int, top_degree: int = 2) -> CoeffComplex:
    """The exterior complex with coefficients in a module, graded by weight in fundamental coordinates."""
    rho = module_representation(rs, module)
    roots = rs.positive_roots
    root_fund = [rs.to_fundamental(r) for r in roots]
    components: List[Dict[Vec, List[CoeffBasis]]] = []
    for n in range(top_degree + 1):
        comp: Dict[Vec, List[CoeffBasis]] = {}
        for mono in itertools.combinations(range(len(roots)), n):
            base = [sum(root_fund[i][k] for i in mono) for k in range(rs.rank)]
            for mi, mw in enumerate(module.weights):
                w = tuple(a + b for a, b in zip(base, mw))
                comp.setdefault(w, []).append((mi, mono))
        for v in comp.values():
            v.sort(key=lambda t: (t[1], t[0]))
        components.append(comp)

    def d_basis(elem: CoeffBasis) -> Dict[CoeffBasis, int]:
        mi, mono = elem
        out: Dict[CoeffBasis, int] = {}
        for key, v in d_monomial(rs, mono, p, EXTERIOR).items():
            out[(mi, key)] = (out.get((mi, key), 0) + v) % p
        for c in range(len(roots)):
            col = [rho[c][j][mi] for j in range(module.dim)]
            if not any(col):
                continue
            key, sign = _sort_sign([c] + list(mono))
            if key is None:
                continue
            for j, v in enumerate(col):
                if v:
                    out[(j, key)] = (out.get((j, key), 0) + sign * v) % p
        return {k: v for k, v in out.items() if v}

    blocks: List[Dict[Vec, DifferentialBlock]] = []
    for n in range(top_degree):
        per_weight: Dict[Vec, DifferentialBlock] = {}
        for w, cols in components[n].items():
            rows = components[n + 1].get(w, [])
            row_index = {b: i for i, b in enumerate(rows)}
            mat = GfpMatrix.zeros(len(rows), len(cols), p)
            for j, b in enumerate(cols):
                for key, v in d_basis(b).items():
                    mat.add_to(row_index[key], j, v)
            per_weight[w] = DifferentialBlock(mat, rows, cols)
        blocks.append(per_weight)
    return CoeffComplex(module, p, components, blocks)
