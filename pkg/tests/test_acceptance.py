"""Acceptance suite: one test per criterion, exact tolerances, one
pass/fail line each (visible with pytest -s or in the captured output)."""

import json

from kresolve import (all_pairs_distances, brute_force_min,
                      distinguisher_table, gen_mtk, is_k_resolving,
                      lower_bound_pair_slack, solve_exact)
from kresolve.bitset import to_bitset
from kresolve.cli import dispatch
from kresolve.suites import DIM2_M32_REGRESSION, run_suite
from kresolve.families import gen_mt


def _record(name: str, ok: bool) -> None:
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, name


def _suite_ok(name: str, **params) -> bool:
    report = run_suite(name, **params)
    for c in report.checks:
        if not c.passed:
            print(f"  failed check {c.id}: expected {c.expected}, "
                  f"observed {c.observed}")
    return report.all_pass


def test_criterion_1_mt_dimensions():
    ok = True
    expected = {1: (1, 2), 2: (2, 4), 3: (3, 7), 4: (4, 12)}
    for t, (dim, ftdim) in expected.items():
        pd = distinguisher_table(all_pairs_distances(gen_mt(t).graph))
        r1 = solve_exact(pd, 1)
        r2 = solve_exact(pd, 2)
        ok &= r1.status == "optimal" and r1.size == dim
        ok &= r2.status == "optimal" and r2.size == ftdim
    _record("1 (dim/ftdim of M_t, t=1..4, exact)", ok)


def test_criterion_2_mtk_certificates():
    ok = True
    for t, k in [(6, 2), (7, 2), (7, 3), (8, 2)]:
        g = gen_mtk(t, k).graph
        pd = distinguisher_table(all_pairs_distances(g))
        v2 = to_bitset(range(1 << t, g.n))
        ok &= is_k_resolving(pd, v2, k)  # (a)
        cert = lower_bound_pair_slack(pd, k + 1)  # (b)
        ok &= cert.bound >= 2 ** (t - 1)
        used = set()
        for (x, y), demand in zip(cert.pairs, cert.demands):
            ok &= not {x, y} & used
            used |= {x, y}
            off = (pd.mask(x, y) & ~((1 << x) | (1 << y))).bit_count()
            ok &= demand == max(0, (k + 1) - off)
        ok &= cert.bound == sum(cert.demands)
    # (c) pinned regression: exhaustive enumeration on the 14-vertex instance
    ok &= brute_force_min(gen_mtk(3, 2).graph, 2).size == DIM2_M32_REGRESSION
    _record("2 (M_{t,k}: apex k-resolving, pair-slack >= 2^(t-1), regression)", ok)


def test_criterion_3_tree_formulas():
    ok = _suite_ok("trees", n_max=12, samples=200, seed=1)
    _record("3 (tree formulas vs oracle, 200 seeded trees)", ok)


def test_criterion_4_multipartite_formulas():
    ok = _suite_ok("multipartite", n_max=9)
    _record("4 (multipartite formulas vs oracle, all multisets n<=9)", ok)


def test_criterion_5_path_formula():
    ok = _suite_ok("paths", n_max=10)
    _record("5 (path dim_k formula vs oracle, n<=10)", ok)


def test_criterion_6_constructive_bounds():
    ok = _suite_ok("expansion", samples=50, seed=2, n_max=15)
    _record("6 (radius-2 expansion, ball growth, near-distinguisher)", ok)


def test_criterion_7_oracle_equivalence():
    ok = _suite_ok("equivalence", n_max=7, samples=200, seed=3)
    _record("7 (multicover vs definitional, exact vs brute force, monotone)", ok)


def test_criterion_8_deterministic_reports(capsys):
    argv = ["verify", "--suite", "ft-mt", "--t-max", "3", "--json",
            "--seed", "7"]
    assert dispatch(list(argv)) == 0
    first = capsys.readouterr().out
    assert dispatch(list(argv)) == 0
    second = capsys.readouterr().out
    ok = first == second and json.loads(first)["summary"]["fail"] == 0
    _record("8 (byte-identical verify reports)", ok)
