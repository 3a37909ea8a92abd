"""Dense linear algebra over GF(p).

For p = 2 a row is a Python int whose bit j is the entry in column j, and
elimination is XOR on whole rows.  Other primes use lists of residues.
Pivoting always takes the first available row for the lowest column, so
results are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple


def _pack(row: Sequence[int]) -> int:
    out = 0
    for j, x in enumerate(row):
        if x & 1:
            out |= 1 << j
    return out


def _unpack(bits: int, n: int) -> List[int]:
    return [(bits >> j) & 1 for j in range(n)]


@dataclass
class GfpMatrix:
    p: int
    nrows: int
    ncols: int
    rows: list  # ints (p = 2, packed) or lists of residues

    @property
    def packed(self) -> bool:
        return self.p == 2 and (not self.rows or isinstance(self.rows[0], int))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], p: int, ncols: int = None,
                  packed: bool = True) -> "GfpMatrix":
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if p == 2 and packed:
            return cls(p, len(rows), ncols, [_pack(r) for r in rows])
        return cls(p, len(rows), ncols, [[x % p for x in r] for r in rows])

    @classmethod
    def zeros(cls, nrows: int, ncols: int, p: int) -> "GfpMatrix":
        if p == 2:
            return cls(p, nrows, ncols, [0] * nrows)
        return cls(p, nrows, ncols, [[0] * ncols for _ in range(nrows)])

    def get(self, i: int, j: int) -> int:
        if self.packed:
            return (self.rows[i] >> j) & 1
        return self.rows[i][j]

    def add_to(self, i: int, j: int, value: int) -> None:
        if self.packed:
            if value & 1:
                self.rows[i] ^= 1 << j
        else:
            self.rows[i][j] = (self.rows[i][j] + value) % self.p

    def to_lists(self) -> List[List[int]]:
        if self.packed:
            return [_unpack(r, self.ncols) for r in self.rows]
        return [list(r) for r in self.rows]

    def unpacked(self) -> "GfpMatrix":
        return GfpMatrix(self.p, self.nrows, self.ncols, self.to_lists())

    def matmul(self, other: "GfpMatrix") -> "GfpMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        a, b = self.to_lists(), other.to_lists()
        out = [[sum(a[i][k] * b[k][j] for k in range(self.ncols) if a[i][k]) % self.p
                for j in range(other.ncols)] for i in range(self.nrows)]
        return GfpMatrix.from_rows(out, self.p, other.ncols)

    def is_zero(self) -> bool:
        if self.packed:
            return not any(self.rows)
        return not any(any(r) for r in self.rows)


def _rref_bits(rows: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Reduced row echelon form of packed rows; returns (rows, pivot columns)."""
    basis: List[int] = []
    pivots: List[int] = []
    for r in rows:
        for b, pc in zip(basis, pivots):
            if (r >> pc) & 1:
                r ^= b
        if r:
            pc = (r & -r).bit_length() - 1
            for k in range(len(basis)):
                if (basis[k] >> pc) & 1:
                    basis[k] ^= r
            basis.append(r)
            pivots.append(pc)
    order = sorted(range(len(pivots)), key=pivots.__getitem__)
    return [basis[k] for k in order], [pivots[k] for k in order]


def _rref_generic(rows: Sequence[Sequence[int]], p: int, ncols: int) -> Tuple[List[List[int]], List[int]]:
    m = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rref(m: GfpMatrix):
    if m.packed:
        return _rref_bits(m.rows)
    return _rref_generic(m.rows, m.p, m.ncols)


def rank(m: GfpMatrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: GfpMatrix) -> List[List[int]]:
    """Basis of {v : m v = 0}, one vector per non-pivot column."""
    rows, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivot_set]
    out = []
    if m.packed:
        for f in free:
            v = 1 << f
            for r, pc in zip(rows, pivots):
                if (r >> f) & 1:
                    v |= 1 << pc
            out.append(_unpack(v, m.ncols))
        return out
    p = m.p
    for f in free:
        v = [0] * m.ncols
        v[f] = 1
        for r, pc in zip(rows, pivots):
            v[pc] = (-r[f]) % p
        out.append(v)
    return out


def kernel_bits(m: GfpMatrix) -> List[int]:
    """Packed kernel basis for p = 2."""
    rows, pivots = _rref_bits(m.rows)
    pivot_set = set(pivots)
    out = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        v = 1 << f
        for r, pc in zip(rows, pivots):
            if (r >> f) & 1:
                v |= 1 << pc
        out.append(v)
    return out


def quotient_reps(cocycles: Sequence[Sequence[int]], coboundaries: Sequence[Sequence[int]],
                  p: int) -> List[List[int]]:
    """Representatives of span(cocycles) / span(coboundaries).

    Representatives are reduced against the coboundary echelon form and
    against each other.
    """
    cocycles = [list(v) for v in cocycles]
    coboundaries = [list(v) for v in coboundaries]
    n = len(cocycles[0]) if cocycles else (len(coboundaries[0]) if coboundaries else 0)
    if p == 2:
        z = [_pack(v) for v in cocycles]
        b = [_pack(v) for v in coboundaries]
        return [_unpack(v, n) for v in _quotient_bits(z, b)]
    z_rank = len(_rref_generic(cocycles, p, n)[1])
    if len(_rref_generic(cocycles + coboundaries, p, n)[1]) != z_rank:
        raise ValueError("coboundaries are not contained in the span of the cocycles")
    b_rows, b_piv = _rref_generic(coboundaries, p, n)
    k = len(b_piv)
    all_rows, all_piv = _rref_generic(b_rows + cocycles, p, n)
    # pivots of the combined echelon form not owned by the coboundary part
    extra = [c for c in all_piv if c not in set(b_piv)]
    # a representative with pivot c: reduce rows of span(Z) to zero on all other pivots
    reps = []
    for r, c in zip(all_rows, all_piv):
        if c in extra:
            reps.append(r)
    assert len(reps) == len(all_piv) - k
    return reps


def _quotient_bits(z: Sequence[int], b: Sequence[int]) -> List[int]:
    z_rows, _ = _rref_bits(z)
    b_rows, b_piv = _rref_bits(b)
    both_rows, both_piv = _rref_bits(list(z_rows) + list(b_rows))
    if len(both_piv) != len(z_rows):
        raise ValueError("coboundaries are not contained in the span of the cocycles")
    all_rows, all_piv = _rref_bits(list(b_rows) + list(z_rows))
    bset = set(b_piv)
    return [r for r, c in zip(all_rows, all_piv) if c not in bset]


def in_span(vec: Sequence[int], basis: Sequence[Sequence[int]], p: int) -> bool:
    n = len(vec)
    if p == 2:
        rows, piv = _rref_bits([_pack(v) for v in basis])
        r = _pack(vec)
        for b, pc in zip(rows, piv):
            if (r >> pc) & 1:
                r ^= b
        return r == 0
    base = len(_rref_generic(basis, p, n)[1])
    return len(_rref_generic(list(basis) + [list(vec)], p, n)[1]) == base
