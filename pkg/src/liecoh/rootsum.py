"""Exhaustive solver for the root-sum equations behind candidate H^2 weights.

For alpha simple and beta positive (alpha != beta) the solver looks for

    alpha + beta = i beta1 + 2^m beta2 + 2 t.omega + 2 sigma

with beta1, beta2 simple, i in {0, 1}, 0 <= m <= max_m, t ranging over
multiples of the generators of X(T)/ZΦ and sigma in the root lattice.
The plain variants drop the torsion term and fix some parameters to zero.
Given everything else, sigma is determined, so the search is a finite loop
over the remaining parameters.
"""
from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .chevalley import structure_constants
from .cochain import SYMMETRIC, monomials_of_weight
from .rootsystem import RootSystem, Vec


class Variant(str, Enum):
    PLAIN_2SIGMA = "plain-2sigma"        # alpha + beta = 2 sigma
    PLAIN_BETA1 = "plain-beta1"          # alpha + beta = beta1 + 2 sigma
    PLAIN_GENERAL = "plain-general"      # alpha + beta = i beta1 + 2^m beta2 + 2 sigma
    TORSION_GENERAL = "torsion-general"  # ... + 2 t.omega


@dataclass(frozen=True)
class RootSumQuery:
    variant: Variant = Variant.PLAIN_GENERAL
    p: int = 2
    max_m: int = 2
    admissible_only: bool = False
    pair: Optional[Tuple[int, int]] = None  # (alpha index, beta index); None scans all pairs

    def __post_init__(self):
        if self.p != 2:
            raise ValueError("the root-sum equations are specialised to p = 2")
        if self.max_m < 0:
            raise ValueError("max_m must be non-negative")


@dataclass(frozen=True, order=True)
class RootSumSolution:
    alpha: int
    beta: int
    beta1: Optional[int]
    beta2: Optional[int]
    i: int
    m: Optional[int]
    t: Tuple[int, ...]
    sigma: Vec

    def weight(self, rs: RootSystem) -> Vec:
        return tuple(a + b for a, b in zip(rs.positive_roots[self.alpha], rs.positive_roots[self.beta]))

    def check(self, rs: RootSystem) -> bool:
        """Substitute back into the equation, exactly, in simple coordinates."""
        n = rs.rank
        rhs = [Fraction(2 * s) for s in self.sigma]
        if self.beta1 is not None:
            rhs = [r + self.i * x for r, x in zip(rhs, rs.positive_roots[self.beta1])]
        if self.beta2 is not None:
            rhs = [r + (2 ** self.m) * x for r, x in zip(rhs, rs.positive_roots[self.beta2])]
        for tg, (g, _) in zip(self.t, rs.quotient_generators()):
            gs = rs.to_simple(g)
            rhs = [r + 2 * tg * x for r, x in zip(rhs, gs)]
        return tuple(rhs) == tuple(Fraction(x) for x in self.weight(rs)) and len(rhs) == n


def admissible_pair(rs: RootSystem, alpha: int, beta: int) -> bool:
    """Necessary condition for phi_alpha phi_beta to occur in a class.

    When it is the only monomial of its weight it must be a cocycle on its
    own, which forces beta simple or d(phi_beta) = 0 mod 2.
    """
    roots = rs.positive_roots
    weight = tuple(a + b for a, b in zip(roots[alpha], roots[beta]))
    if len(monomials_of_weight(rs, weight, 2, SYMMETRIC)) > 1:
        return True
    if beta < rs.rank:
        return True
    return all(n % 2 == 0 for _, _, n in structure_constants(rs).decompositions[beta])


def _half(rest: Sequence[Fraction]) -> Optional[Vec]:
    out = []
    for x in rest:
        if x.denominator != 1 or x.numerator % 2:
            return None
        out.append(x.numerator // 2)
    return tuple(out)


def _parameter_sets(rs: RootSystem, q: RootSumQuery):
    """(beta1, beta2, i, m, t) tuples admitted by the variant."""
    n = rs.rank
    simple = range(n)
    if q.variant == Variant.PLAIN_2SIGMA:
        yield None, None, 0, None, ()
        return
    if q.variant == Variant.PLAIN_BETA1:
        for b1 in simple:
            yield b1, None, 1, None, ()
        return
    gens = rs.quotient_generators() if q.variant == Variant.TORSION_GENERAL else []
    t_range = list(itertools.product(*[range(order) for _, order in gens]))
    for t in t_range:
        for i in (0, 1):
            for m in range(q.max_m + 1):
                for b2 in simple:
                    for b1 in (simple if i else [None]):
                        yield b1, b2, i, m, tuple(t)


def solve(rs: RootSystem, query: RootSumQuery = RootSumQuery()) -> List[RootSumSolution]:
    roots = rs.positive_roots
    n = rs.rank
    gens = [rs.to_simple(g) for g, _ in rs.quotient_generators()]
    params = list(_parameter_sets(rs, query))
    out: Set[RootSumSolution] = set()
    if query.pair is not None:
        a, b = query.pair
        if not (0 <= a < n and 0 <= b < len(roots)) or a == b:
            raise ValueError(f"invalid pair {query.pair}: alpha must be simple and differ from beta")
        scan = [query.pair]
    else:
        scan = [(a, b) for a in range(n) for b in range(len(roots)) if a != b]
    for a, b in scan:
        if query.admissible_only and not admissible_pair(rs, a, b):
            continue
        target = [Fraction(x + y) for x, y in zip(roots[a], roots[b])]
        for b1, b2, i, m, t in params:
            rest = list(target)
            if b1 is not None:
                rest = [r - i * x for r, x in zip(rest, roots[b1])]
            if b2 is not None:
                rest = [r - (2 ** m) * x for r, x in zip(rest, roots[b2])]
            for tg, g in zip(t, gens):
                rest = [r - 2 * tg * x for r, x in zip(rest, g)]
            sigma = _half(rest)
            if sigma is not None:
                out.add(RootSumSolution(a, b, b1, b2, i, m, t, sigma))
    return sorted(out, key=lambda s: (s.alpha, s.beta, _none_key(s.beta1), _none_key(s.beta2),
                                      s.i, _none_key(s.m), s.t, s.sigma))


def _none_key(x: Optional[int]) -> int:
    return -1 if x is None else x


def solution_weights(rs: RootSystem, sols: Iterable[RootSumSolution]) -> Set[Vec]:
    return {s.weight(rs) for s in sols}


def candidate_weights(rs: RootSystem, admissible_only: bool = False) -> Set[Vec]:
    """Every alpha + beta admitted by the widest equation (torsion terms included)."""
    return solution_weights(rs, solve(rs, RootSumQuery(Variant.TORSION_GENERAL, admissible_only=admissible_only)))


def new_general_weights(rs: RootSystem, admissible_only: bool = False) -> Set[Vec]:
    """Weights solving the general plain equation for a non-simple beta but
    neither of its two special cases for the same pair (alpha, beta)."""
    def pairs(variant):
        return {(s.alpha, s.beta) for s in solve(rs, RootSumQuery(variant, admissible_only=admissible_only))}

    special = pairs(Variant.PLAIN_2SIGMA) | pairs(Variant.PLAIN_BETA1)
    out = set()
    for s in solve(rs, RootSumQuery(Variant.PLAIN_GENERAL, admissible_only=admissible_only)):
        if s.beta >= rs.rank and (s.alpha, s.beta) not in special:
            out.add(s.weight(rs))
    return out


def pairs_needing_high_power(rs: RootSystem, sols: Sequence[RootSumSolution]) -> Set[Tuple[int, int]]:
    """(alpha, beta) pairs whose only solutions use m >= 2."""
    best: Dict[Tuple[int, int], int] = {}
    for s in sols:
        key = (s.alpha, s.beta)
        m = 0 if s.m is None else s.m
        best[key] = min(best.get(key, m), m)
    return {k for k, m in best.items() if m >= 2}


def to_csv(rs: RootSystem, sols: Sequence[RootSumSolution]) -> str:
    roots = rs.positive_roots

    def vec(v):
        return " ".join(str(x) for x in v)

    def root(idx):
        return "" if idx is None else vec(roots[idx])

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["alpha", "beta", "beta1", "beta2", "i", "m", "t", "sigma"])
    for s in sols:
        w.writerow([root(s.alpha), root(s.beta), root(s.beta1), root(s.beta2), s.i,
                    "" if s.m is None else s.m, vec(s.t), vec(s.sigma)])
    return buf.getvalue()
