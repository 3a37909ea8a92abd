"""Simple root systems of types A through G.

Roots are integer vectors over the simple roots.  Weights are integer
vectors over the fundamental weights; simple-root coordinates of a weight
are rationals.  Labeling: B_n has alpha_n short, C_n has alpha_n long,
F_4 has alpha_1, alpha_2 short and G_2 has alpha_1 short.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

Vec = Tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


def _check_type(kind: str, rank: int) -> None:
    if kind in _MIN_RANK:
        if rank < _MIN_RANK[kind]:
            raise ValueError(f"type {kind} needs rank >= {_MIN_RANK[kind]}, got {rank}")
    elif kind in _FIXED_RANKS:
        if rank not in _FIXED_RANKS[kind]:
            raise ValueError(f"type {kind} exists only in ranks {_FIXED_RANKS[kind]}, got {rank}")
    else:
        raise ValueError(f"unknown root system type {kind!r}")


def _diagram(kind: str, n: int, swapped: bool = False) -> Tuple[List[int], List[Tuple[int, int]]]:
    """Squared root lengths and Dynkin edges (0-based) for a type.

    ``swapped`` reverses the short/long assignment for F_4 and G_2.
    """
    chain = [(i, i + 1) for i in range(n - 1)]
    if kind == "A":
        return [2] * n, chain
    if kind == "B":
        return [4] * (n - 1) + [2], chain
    if kind == "C":
        return [2] * (n - 1) + [4], chain
    if kind == "D":
        return [2] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if kind == "E":
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
        return [2] * n, edges
    if kind == "F":
        return ([4, 4, 2, 2] if swapped else [2, 2, 4, 4]), chain
    if kind == "G":
        return ([6, 2] if swapped else [2, 6]), chain
    raise ValueError(kind)


def _gram(kind: str, n: int, swapped: bool = False) -> List[List[int]]:
    lengths, edges = _diagram(kind, n, swapped)
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = lengths[i]
    for i, j in edges:
        # a Dynkin edge between roots of lengths a <= b has (a_i, a_j) = -b/2
        g[i][j] = g[j][i] = -max(lengths[i], lengths[j]) // 2
    return g


@dataclass(frozen=True)
class WeylWord:
    """Product s_{i1} s_{i2} ... of simple reflections (0-based indices), applied right to left."""

    reflections: Tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.reflections)

    def inverse(self) -> "WeylWord":
        return WeylWord(tuple(reversed(self.reflections)))


@dataclass(frozen=True)
class RootSystem:
    kind: str
    rank: int
    gram: Tuple[Tuple[int, ...], ...]
    cartan: Tuple[Tuple[int, ...], ...]
    positive_roots: Tuple[Vec, ...]
    swapped: bool
    _index: Dict[Vec, int] = field(repr=False, compare=False)
    _inv_cartan_t: Tuple[Tuple[Fraction, ...], ...] = field(repr=False, compare=False)

    @property
    def name(self) -> str:
        return f"{self.kind}{self.rank}" + ("'" if self.swapped else "")

    @property
    def simple_roots(self) -> Tuple[Vec, ...]:
        return self.positive_roots[: self.rank]

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def rho(self) -> Vec:
        return (1,) * self.rank

    @property
    def highest_root(self) -> Vec:
        return self.positive_roots[-1]

    @property
    def coxeter_number(self) -> int:
        return sum(self.highest_root) + 1

    @property
    def index_of_connection(self) -> int:
        return int(sympy.Matrix(self.cartan).det())

    def root_index(self, root: Sequence[int]) -> int:
        return self._index[tuple(root)]

    def is_positive_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._index

    def is_root(self, v: Sequence[int]) -> bool:
        v = tuple(v)
        return v in self._index or tuple(-x for x in v) in self._index

    def inner(self, u: Sequence, v: Sequence):
        """Symmetric form on simple-root coordinates."""
        g = self.gram
        return sum(u[i] * g[i][j] * v[j] for i in range(self.rank) for j in range(self.rank) if u[i] and v[j])

    def height(self, root: Sequence[int]) -> int:
        return sum(root)

    def to_fundamental(self, simple: Sequence) -> Vec:
        """Simple-root coordinates to fundamental coordinates (Cartan^T times the vector)."""
        n = self.rank
        out = [sum(simple[i] * self.cartan[i][k] for i in range(n)) for k in range(n)]
        res = []
        for x in out:
            x = Fraction(x)
            if x.denominator != 1:
                raise ValueError("not an integral weight")
            res.append(int(x))
        return tuple(res)

    def to_simple(self, fundamental: Sequence[int]) -> Tuple[Fraction, ...]:
        n = self.rank
        m = self._inv_cartan_t
        return tuple(sum((m[i][k] * fundamental[k] for k in range(n)), Fraction(0)) for i in range(n))

    def simple_integral(self, fundamental: Sequence[int]) -> Optional[Vec]:
        """Integer simple coordinates when the weight lies in the root lattice, else None."""
        s = self.to_simple(fundamental)
        if any(x.denominator != 1 for x in s):
            return None
        return tuple(int(x) for x in s)

    def fundamental_weight(self, i: int) -> Vec:
        return tuple(1 if k == i else 0 for k in range(self.rank))

    def reflect(self, i: int, weight: Sequence[int]) -> Vec:
        """s_i on a weight in fundamental coordinates."""
        if not 0 <= i < self.rank:
            raise ValueError(f"reflection index {i} out of range for {self.name}")
        c = weight[i]
        row = self.cartan[i]
        return tuple(weight[k] - c * row[k] for k in range(self.rank))

    def act(self, w: WeylWord, weight: Sequence[int]) -> Vec:
        v = tuple(weight)
        for i in reversed(w.reflections):
            v = self.reflect(i, v)
        return v

    def dot(self, w: WeylWord, weight: Sequence[int]) -> Vec:
        """w . lambda = w(lambda + rho) - rho in fundamental coordinates."""
        shifted = tuple(x + 1 for x in weight)
        return tuple(x - 1 for x in self.act(w, shifted))

    def quotient_generators(self) -> List[Tuple[Vec, int]]:
        """Generators of X(T)/ZPhi as (fundamental weight, order)."""
        n, k = self.rank, self.kind
        w = self.fundamental_weight
        if k == "A":
            return [(w(0), n + 1)]
        if k == "B":
            return [(w(n - 1), 2)]
        if k == "C":
            return [(w(0), 2)]
        if k == "D":
            if n % 2:
                return [(w(n - 1), 4)]
            return [(w(0), 2), (w(n - 1), 2)]
        if k == "E" and n == 6:
            return [(w(0), 3)]
        if k == "E" and n == 7:
            return [(w(1), 2)]
        return []

    def lattice_quotient_solve(self, target: Sequence[int]) -> Optional[Tuple[Vec, Vec]]:
        """Write target = sum t_g g + sigma with sigma in the root lattice, 0 <= t_g < order."""
        gens = self.quotient_generators()
        for ts in itertools.product(*[range(order) for _, order in gens]):
            rest = list(target)
            for t, (g, _) in zip(ts, gens):
                rest = [r - t * x for r, x in zip(rest, g)]
            sigma = self.simple_integral(rest)
            if sigma is not None:
                return tuple(ts), sigma
        return None

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "positive_roots": [list(r) for r in self.positive_roots],
        }


def root_order_key(root: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """Canonical order: height first, then simple coordinates read lexicographically
    with larger leading coefficients first, so alpha_1 < alpha_2 < ... < alpha_n."""
    return sum(root), tuple(-x for x in root)


def _closure(n: int, cartan: List[List[int]]) -> List[Vec]:
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # length of the alpha_i-string below beta
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * cartan[j][i] for j in range(n))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=root_order_key)


_CACHE: Dict[Tuple[str, int, bool], RootSystem] = {}


def build_root_system(kind: str, rank: int, swapped: bool = False) -> RootSystem:
    """Build a simple root system.

    ``swapped=True`` exchanges the short and long simple roots of F_4 and
    G_2 (so F_4 has alpha_1, alpha_2 long and G_2 has alpha_1 long); it is
    ignored for the other types.
    """
    kind = kind.upper()
    _check_type(kind, rank)
    swapped = bool(swapped) and kind in ("F", "G")
    key = (kind, rank, swapped)
    if key in _CACHE:
        return _CACHE[key]
    g = _gram(kind, rank, swapped)
    cartan = [[Fraction(2 * g[i][j], g[j][j]) for j in range(rank)] for i in range(rank)]
    cartan = [[int(x) for x in row] for row in cartan]
    roots = _closure(rank, cartan)
    inv_t = sympy.Matrix(cartan).T.inv()
    inv_t = tuple(tuple(Fraction(int(x.p), int(x.q)) for x in inv_t.row(i)) for i in range(rank))
    rs = RootSystem(
        kind=kind,
        rank=rank,
        gram=tuple(tuple(r) for r in g),
        cartan=tuple(tuple(r) for r in cartan),
        positive_roots=tuple(roots),
        swapped=swapped,
        _index={r: i for i, r in enumerate(roots)},
        _inv_cartan_t=inv_t,
    )
    _CACHE[key] = rs
    return rs


def parse_system(name: str) -> RootSystem:
    """'B3' -> build_root_system('B', 3); a trailing quote selects the swapped labeling."""
    name = name.strip()
    swapped = name.endswith("'")
    return build_root_system(name[0], int(name[1:].rstrip("'")), swapped)
