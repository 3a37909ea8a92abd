"""Acceptance gate: criteria 1-8, one PASS/FAIL line each.

Run ``python3 tests/test_acceptance.py`` for the summary alone, or through
pytest, which prints the same line and then asserts the criterion.
"""
from __future__ import annotations

import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from liecoh import gfp_linalg as la  # noqa: E402
from liecoh import paper_tables as pt  # noqa: E402
from liecoh.cochain import EXTERIOR, SYMMETRIC, d_monomial, square_vanishes  # noqa: E402
from liecoh.cohomology import _compute, coboundaries_at, h_n_u1  # noqa: E402
from liecoh.gfp_linalg import GfpMatrix  # noqa: E402
from liecoh.rootsum import RootSumQuery, Variant, candidate_weights, new_general_weights, solve  # noqa: E402
from liecoh.rootsystem import build_root_system, parse_system  # noqa: E402
from oracles import brute_force_h2_by_weight, brute_force_h2_dim, integer_rank_mod  # noqa: E402


def _simple(res):
    return {tuple(int(x) for x in w): d for w, d in res.simple_multiset().items()}


def _short(items, limit=6):
    items = list(items)
    text = ", ".join(str(x) for x in items[:limit])
    return text + (f", ... (+{len(items) - limit})" if len(items) > limit else "")


def criterion_1():
    bad = []
    start = time.perf_counter()
    for rs in pt.default_matrix():
        res = _compute(rs, 1, 2, SYMMETRIC, "u1", threads=1)
        if _simple(res) != {a: 1 for a in rs.simple_roots}:
            bad.append(f"{rs.name}:{res.total_dim}")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 1.0
    return ok, f"{elapsed:.2f}s; systems with H^1 != simple roots: {_short(bad) or 'none'}"


H2_DIMS = {"A2": 3, "A3": 8, "B3": 13, "G2": 7}


def criterion_2():
    parts, ok = [], True
    for name, want in H2_DIMS.items():
        rs = parse_system(name)
        got = h_n_u1(rs, 2).total_dim
        oracle = brute_force_h2_dim(rs)
        per_weight = brute_force_h2_by_weight(rs) == _simple(h_n_u1(rs, 2))
        ok &= got == want and oracle == got and per_weight
        parts.append(f"{name} {got}/{want} oracle {oracle}")
    return ok, "; ".join(parts)


def _best_reports(table, systems=None):
    out = []
    for rs in systems or pt.default_matrix():
        verdict = pt.verify(rs, tables=(table,))
        best = verdict.best(table)
        if best is not None:
            out.append((rs, best))
    return out


def criterion_3():
    bad = []
    start = time.perf_counter()
    e8_time = None
    for rs, rep in _best_reports("h2_u1"):
        if rs.name == "E8":
            e8_time = time.perf_counter()
        if not rep.ok:
            bad.append(f"{rs.name}[{rep.labeling}]-{sum(rep.missing_in_computed.values())}"
                       f"+{sum(rep.extra_in_computed.values())}")
    total = time.perf_counter() - start
    e8 = build_root_system("E", 8)
    t0 = time.perf_counter()
    _compute(e8, 2, 2, SYMMETRIC, "u1")
    e8_elapsed = time.perf_counter() - t0
    ok = not bad and e8_elapsed < 300
    return ok, f"E8 degree 2 {e8_elapsed:.1f}s, sweep {total:.0f}s; unflagged mismatches: {_short(bad, 10) or 'none'}"


def criterion_4():
    bad = [f"{rs.name}[{rep.labeling}]-{sum(rep.missing_in_computed.values())}"
           f"+{sum(rep.extra_in_computed.values())}"
           for rs, rep in _best_reports("h2_b1") if not rep.ok]
    return not bad, f"mismatching systems: {_short(bad, 10) or 'none'}"


COEFF_SYSTEMS = ["B3", "B4", "C3", "C4", "F4", "G2"]


def criterion_5():
    bad = []
    for rs, rep in _best_reports("h1_coefficients", [parse_system(n) for n in COEFF_SYSTEMS]):
        if not rep.ok:
            bad.append(f"{rs.name}[{rep.labeling}]-{sum(rep.missing_in_computed.values())}"
                       f"+{sum(rep.extra_in_computed.values())}")
    return not bad, f"mismatching bases: {_short(bad) or 'none'}"


def a_family(n):
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


def criterion_6():
    notes = []
    ok = True
    for n in range(2, 9):
        rs = build_root_system("A", n)
        s1 = solve(rs, RootSumQuery(Variant.PLAIN_2SIGMA))
        s2 = solve(rs, RootSumQuery(Variant.PLAIN_BETA1))
        fam = new_general_weights(rs) == a_family(n)
        if s1 or s2 or not fam:
            ok = False
            notes.append(f"A{n}: 2sigma {len(s1)}, beta1 {len(s2)}, family {'exact' if fam else 'differs'}")
    outside = []
    for rs in pt.default_matrix():
        cands = candidate_weights(rs)
        for w in _simple(h_n_u1(rs, 2)):
            if w not in cands and any(x % 2 for x in rs.to_fundamental(w)):
                outside.append(f"{rs.name}{w}")
    ok &= not outside
    return ok, f"{_short(notes, 3) or 'equations as stated'}; containment violations: {_short(outside) or 'none'}"


def criterion_7(samples=1000):
    bad = []
    for rs in pt.default_matrix():
        for root in rs.positive_roots:
            if not square_vanishes(rs, root, 2, SYMMETRIC):
                bad.append(f"{rs.name} sym")
            for p in (2, 3, 5):
                if not square_vanishes(rs, root, p, EXTERIOR):
                    bad.append(f"{rs.name} ext p={p}")
        for i, root in enumerate(rs.positive_roots):
            w = tuple(2 * x for x in root)
            if d_monomial(rs, (i, i), 2, SYMMETRIC) or coboundaries_at(rs, w) or _simple(h_n_u1(rs, 2)).get(w, 0) < 1:
                bad.append(f"{rs.name} square {root}")
    rng = random.Random(20240611)
    rn_bad = 0
    for _ in range(samples):
        r, c = rng.randint(1, 14), rng.randint(1, 14)
        rows = [[rng.randint(0, 1) for _ in range(c)] for _ in range(r)]
        m = GfpMatrix.from_rows(rows, 2)
        rank = la.rank(m)
        if rank != integer_rank_mod(rows, 2) or rank + len(la.kernel_basis(m)) != c:
            rn_bad += 1
    ok = not bad and rn_bad == 0
    return ok, f"d^2/squares failures: {_short(bad) or 'none'}; rank-nullity failures {rn_bad}/{samples}"


def criterion_8():
    parts, ok = [], True
    for name in ("A3", "B3", "G2"):
        for chk in pt.check_b_module(parse_system(name)):
            ok &= chk.ok
            parts.append(f"{name} {chk.kind} expected {chk.expected} computed {chk.computed}"
                         f"{'' if chk.stable else ' (unstable)'}")
    return ok, "; ".join(parts)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


def _line(k, ok, detail):
    return f"CRITERION {k}: {'PASS' if ok else 'FAIL'} - {detail}"


@pytest.mark.parametrize("k", range(1, 9))
def test_criterion(k, capsys):
    ok, detail = CRITERIA[k - 1]()
    with capsys.disabled():
        print("\n" + _line(k, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for k, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        results.append(ok)
        print(_line(k, ok, detail), flush=True)
    sys.exit(0 if all(results) else 1)
