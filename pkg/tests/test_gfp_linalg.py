import pytest
from hypothesis import given, settings, strategies as st

from liecoh import gfp_linalg as la
from liecoh.gfp_linalg import GfpMatrix
from oracles import integer_rank_mod


def matrices(p):
    return st.integers(1, 12).flatmap(lambda c: st.lists(
        st.lists(st.integers(0, p - 1), min_size=c, max_size=c), min_size=1, max_size=12))


@settings(max_examples=1000, deadline=None)
@given(matrices(2))
def test_rank_nullity_gf2_against_integer_oracle(rows):
    m = GfpMatrix.from_rows(rows, 2)
    r = la.rank(m)
    assert r == integer_rank_mod(rows, 2)
    kernel = la.kernel_basis(m)
    assert r + len(kernel) == m.ncols
    for v in kernel:
        assert all(sum(a * b for a, b in zip(row, v)) % 2 == 0 for row in rows)


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([3, 5, 7]).flatmap(lambda p: st.tuples(st.just(p), matrices(p))))
def test_rank_nullity_odd_primes(pm):
    p, rows = pm
    m = GfpMatrix.from_rows(rows, p)
    r = la.rank(m)
    assert r == integer_rank_mod(rows, p)
    kernel = la.kernel_basis(m)
    assert r + len(kernel) == m.ncols
    for v in kernel:
        assert all(sum(a * b for a, b in zip(row, v)) % p == 0 for row in rows)


@settings(max_examples=300, deadline=None)
@given(matrices(2))
def test_packed_and_generic_agree(rows):
    packed = GfpMatrix.from_rows(rows, 2)
    generic = GfpMatrix.from_rows(rows, 2, packed=False)
    assert packed.packed and not generic.packed
    assert la.rank(packed) == la.rank(generic)
    assert packed.to_lists() == generic.to_lists()
    assert sorted(map(tuple, la.kernel_basis(packed))) == sorted(map(tuple, la.kernel_basis(generic)))


def test_quotient_reps_dimension():
    z = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    b = [[1, 1, 0]]
    reps = la.quotient_reps(z, b, 2)
    assert len(reps) == 2
    assert la.in_span([1, 1, 0], b, 2) and not la.in_span([1, 0, 0], b, 2)


def test_matmul_and_zero():
    a = GfpMatrix.from_rows([[1, 1], [0, 1]], 2)
    assert a.matmul(a).to_lists() == [[1, 0], [0, 1]]
    assert GfpMatrix.zeros(3, 2, 5).is_zero()
    with pytest.raises(ValueError):
        a.matmul(GfpMatrix.from_rows([[1, 0, 0]], 2))
