import csv
import io
import pytest

from liecoh.cohomology import h_n_u1
from liecoh.rootsum import (RootSumQuery, Variant, admissible_pair, candidate_weights, new_general_weights,
                            pairs_needing_high_power, solve, to_csv)
from liecoh.rootsystem import build_root_system


def a_family(n):
    """alpha_i plus a length-three root of A_n containing alpha_i, as simple coordinates."""
    out = set()
    for i in range(n):
        for lo, hi in ((i - 1, i + 1), (i - 2, i), (i, i + 2)):
            if 0 <= lo and hi < n:
                v = [0] * n
                for k in range(lo, hi + 1):
                    v[k] += 1
                v[i] += 1
                out.add(tuple(v))
    return out


@pytest.mark.parametrize("n", range(2, 9))
def test_no_even_solutions_in_type_a(n):
    assert solve(build_root_system("A", n), RootSumQuery(Variant.PLAIN_2SIGMA)) == []


@pytest.mark.parametrize("n", range(2, 9))
def test_general_equation_family_in_type_a(n):
    assert new_general_weights(build_root_system("A", n)) == a_family(n)


@pytest.mark.parametrize("n", range(2, 9))
def test_beta1_solutions_in_type_a_need_the_cocycle_filter(n):
    rs = build_root_system("A", n)
    raw = solve(rs, RootSumQuery(Variant.PLAIN_BETA1))
    # alpha_i + (alpha_{i-1} + alpha_i) = alpha_{i-1} + 2 alpha_i is a pure lattice solution
    assert {s.weight(rs) for s in raw} == {
        tuple(2 if k == i else (1 if k == j else 0) for k in range(n))
        for i in range(n) for j in (i - 1, i + 1) if 0 <= j < n}
    assert solve(rs, RootSumQuery(Variant.PLAIN_BETA1, admissible_only=True)) == []


def test_a4_example_weights():
    rs = build_root_system("A", 4)
    weights = {s.weight(rs) for s in solve(rs, RootSumQuery(Variant.PLAIN_GENERAL))}
    for i in range(1, 3):
        v = [0] * 4
        v[i - 1], v[i], v[i + 1] = 1, 2, 1
        assert tuple(v) in weights


@pytest.mark.parametrize("kind,rank", [("A", 3), ("A", 5), ("B", 3), ("C", 4), ("D", 4), ("D", 5), ("E", 6),
                                       ("E", 7), ("F", 4), ("G", 2)])
def test_solutions_substitute_back(kind, rank):
    rs = build_root_system(kind, rank)
    sols = solve(rs, RootSumQuery(Variant.TORSION_GENERAL))
    assert sols and all(s.check(rs) for s in sols)
    assert [(s.alpha, s.beta) for s in sols] == sorted((s.alpha, s.beta) for s in sols)
    assert solve(rs, RootSumQuery(Variant.TORSION_GENERAL)) == sols


@pytest.mark.parametrize("kind,rank", [("A", 3), ("B", 4), ("C", 3), ("D", 4), ("E", 6), ("F", 4), ("G", 2)])
def test_high_powers_reduce(kind, rank):
    rs = build_root_system(kind, rank)
    sols = solve(rs, RootSumQuery(Variant.TORSION_GENERAL))
    assert pairs_needing_high_power(rs, sols) == set()
    capped = {(s.alpha, s.beta) for s in solve(rs, RootSumQuery(Variant.TORSION_GENERAL, max_m=1))}
    assert capped == {(s.alpha, s.beta) for s in sols}


@pytest.mark.parametrize("n", [1, 3, 5, 7])
def test_odd_a_torsion_multiples(n):
    rs = build_root_system("A", n)
    s = (n + 1) // 2
    for sol in solve(rs, RootSumQuery(Variant.TORSION_GENERAL)):
        assert all(t % s == 0 for t in sol.t)


def test_candidate_examples():
    a3 = build_root_system("A", 3)
    assert {(1, 0, 1), (1, 2, 1)} <= candidate_weights(a3)
    b3 = build_root_system("B", 3)
    assert {(0, 2, 2), (2, 2, 2)} <= candidate_weights(b3)


def test_a2_candidates_miss_the_nontwisted_range():
    rs = build_root_system("A", 2)
    computed = {tuple(int(x) for x in c.simple) for c in h_n_u1(rs, 2).classes.values()}
    assert all(all(x % 2 == 0 for x in rs.to_fundamental(w)) for w in computed)


def test_admissible_pair_rule():
    rs = build_root_system("A", 3)
    idx = rs.root_index
    assert admissible_pair(rs, idx((0, 1, 0)), idx((1, 1, 1)))
    assert not admissible_pair(rs, idx((0, 1, 0)), idx((1, 1, 0)))
    b3 = build_root_system("B", 3)
    # d(phi_{a2+2a3}) vanishes mod 2
    assert admissible_pair(b3, b3.root_index((0, 0, 1)), b3.root_index((0, 1, 2)))


def test_pair_restriction_and_errors():
    rs = build_root_system("A", 3)
    sols = solve(rs, RootSumQuery(Variant.PLAIN_GENERAL, pair=(1, 5)))
    assert sols and {(s.alpha, s.beta) for s in sols} == {(1, 5)}
    with pytest.raises(ValueError):
        solve(rs, RootSumQuery(Variant.PLAIN_GENERAL, pair=(4, 1)))
    with pytest.raises(ValueError):
        RootSumQuery(p=3)


def test_csv_columns():
    rs = build_root_system("A", 3)
    sols = solve(rs, RootSumQuery(Variant.PLAIN_GENERAL))
    rows = list(csv.DictReader(io.StringIO(to_csv(rs, sols))))
    assert list(rows[0]) == ["alpha", "beta", "beta1", "beta2", "i", "m", "t", "sigma"]
    assert len(rows) == len(sols)
