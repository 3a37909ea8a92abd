"""Integral Chevalley structure constants on the positive roots.

Signs are fixed by making N(a, b) positive on extraspecial pairs and
propagating through the standard quadratic identities between structure
constants of the full root system.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from .rootsystem import RootSystem, Vec

_TABLES: Dict[Tuple[str, int, bool], "StructureConstants"] = {}


def _add(u: Sequence[int], v: Sequence[int]) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def _neg(u: Sequence[int]) -> Vec:
    return tuple(-a for a in u)


def string_below(rs: RootSystem, a: Sequence[int], b: Sequence[int]) -> int:
    """p(a, b) = max{k : b - k a is a root}."""
    k = 0
    cur = tuple(b)
    while True:
        cur = tuple(x - y for x, y in zip(cur, a))
        if not rs.is_root(cur):
            return k
        k += 1


class StructureConstants:
    """N(a, b) for positive roots a, b, with [x_a, x_b] = N(a, b) x_{a+b}."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self._pos: Dict[Tuple[Vec, Vec], int] = {}
        self._build()
        # index-level table used by the cochain code
        self.by_index: Dict[Tuple[int, int], Tuple[int, int]] = {}
        for (a, b), n in self._pos.items():
            self.by_index[(rs.root_index(a), rs.root_index(b))] = (rs.root_index(_add(a, b)), n)
        # decompositions[c] = [(i, j, N)] with i < j and roots[i] + roots[j] = roots[c]
        self.decompositions: List[List[Tuple[int, int, int]]] = [[] for _ in rs.positive_roots]
        for (i, j), (c, n) in sorted(self.by_index.items()):
            if i < j:
                self.decompositions[c].append((i, j, n))

    def _length(self, v: Sequence[int]) -> int:
        return self.rs.inner(v, v)

    def _any(self, a: Vec, b: Vec) -> Fraction:
        """N(a, b) for arbitrary roots, in terms of already known positive pairs."""
        rs = self.rs
        c = _add(a, b)
        if not rs.is_root(c):
            return Fraction(0)
        a_pos = rs.is_positive_root(a)
        b_pos = rs.is_positive_root(b)
        if a_pos and b_pos:
            return Fraction(self._pos[(a, b)])
        if not a_pos and not b_pos:
            return -self._any(_neg(a), _neg(b))
        if not a_pos:
            return -self._any(b, a)
        # a positive, b negative
        if rs.is_positive_root(c):
            # (a, b, -c) sums to zero; N(b, -c) = -N(-b, c)
            return -Fraction(self._length(c), self._length(a)) * self._any(_neg(b), c)
        return Fraction(self._length(c), self._length(b)) * self._any(_neg(c), a)

    def _build(self) -> None:
        rs = self.rs
        roots = rs.positive_roots
        by_sum: Dict[Vec, List[Tuple[Vec, Vec]]] = {}
        for i, a in enumerate(roots):
            for b in roots[i + 1:]:
                c = _add(a, b)
                if rs.is_positive_root(c):
                    by_sum.setdefault(c, []).append((a, b))
        for xi in roots:
            pairs = by_sum.get(xi)
            if not pairs:
                continue
            # roots are in increasing order, so the first pair has the smallest first entry
            alpha, beta = pairs[0]
            n_ab = string_below(rs, alpha, beta) + 1
            self._set(alpha, beta, n_ab)
            len_xi = self._length(xi)
            for gamma, delta in pairs[1:]:
                t = Fraction(0)
                if rs.is_root(tuple(x - y for x, y in zip(beta, gamma))):
                    bg = tuple(x - y for x, y in zip(beta, gamma))
                    t += self._any(beta, _neg(gamma)) * self._any(alpha, _neg(delta)) / self._length(bg)
                if rs.is_root(tuple(x - y for x, y in zip(alpha, gamma))):
                    ag = tuple(x - y for x, y in zip(alpha, gamma))
                    t += self._any(_neg(gamma), alpha) * self._any(beta, _neg(delta)) / self._length(ag)
                n_gd = t * len_xi / n_ab
                if n_gd.denominator != 1:
                    raise ArithmeticError(f"non-integral structure constant at {gamma}, {delta}")
                self._set(gamma, delta, int(n_gd))

    def _set(self, a: Vec, b: Vec, n: int) -> None:
        self._pos[(a, b)] = n
        self._pos[(b, a)] = -n

    def N(self, a: Sequence[int], b: Sequence[int]) -> int:
        return self._pos.get((tuple(a), tuple(b)), 0)

    def items(self):
        return sorted(self._pos.items(), key=lambda kv: (self.rs.root_index(kv[0][0]), self.rs.root_index(kv[0][1])))


def structure_constants(rs: RootSystem) -> StructureConstants:
    key = (rs.kind, rs.rank, rs.swapped)
    if key not in _TABLES:
        _TABLES[key] = StructureConstants(rs)
    return _TABLES[key]


def _check_positive(rs: RootSystem, *roots: Sequence[int]) -> None:
    for r in roots:
        if not rs.is_positive_root(r):
            raise ValueError(f"{tuple(r)} is not a positive root of {rs.name}")


def bracket(rs: RootSystem, a: Sequence[int], b: Sequence[int]) -> Tuple[Optional[Vec], int]:
    _check_positive(rs, a, b)
    c = _add(a, b)
    if not rs.is_positive_root(c):
        return None, 0
    return c, structure_constants(rs).N(a, b)


def structure_constant_mod(rs: RootSystem, a: Sequence[int], b: Sequence[int], p: int) -> int:
    return bracket(rs, a, b)[1] % p


def divided_power_action(rs: RootSystem, gamma: Sequence[int], n: int,
                         target: Sequence[int]) -> Tuple[Optional[Vec], int]:
    """ad(x_gamma)^n / n! applied to x_target."""
    if n < 0:
        raise ValueError("divided power exponent must be non-negative")
    gamma = tuple(gamma)
    if sum(gamma) != 1 or not rs.is_positive_root(gamma):
        raise ValueError(f"{gamma} is not a simple root of {rs.name}")
    _check_positive(rs, target)
    cur = tuple(target)
    coeff = 1
    sc = structure_constants(rs)
    for _ in range(n):
        nxt = _add(gamma, cur)
        if not rs.is_positive_root(nxt):
            return None, 0
        coeff *= sc.N(gamma, cur)
        cur = nxt
    out, rem = divmod(coeff, factorial(n))
    assert rem == 0
    return cur, out

