import random

import pytest

from kresolve import (all_pairs_distances, check_ball_growth,
                      check_near_distinguisher, distinguisher_table,
                      expand_radius2, gen_mt, gen_path, is_k_resolving, kappa,
                      parity_ft_set, parse_graph, solve_exact)
from kresolve.bitset import full_set, to_bitset
from kresolve.samplers import random_connected_graph

C4 = parse_graph("4 4\n0 1\n1 2\n2 3\n0 3")


def tables_for(g):
    dm = all_pairs_distances(g)
    return dm, distinguisher_table(dm)


def test_expand_radius2():
    dm, _ = tables_for(gen_path(5).graph)
    assert expand_radius2(dm, to_bitset([2])) == full_set(5)
    assert expand_radius2(dm, full_set(5)) == full_set(5)
    m3 = gen_mt(3).graph
    dm3, _ = tables_for(m3)
    v2 = to_bitset(range(8, 11))
    assert expand_radius2(dm3, v2) == full_set(11)
    with pytest.raises(ValueError):
        expand_radius2(dm, 0)


def test_ball_growth_examples():
    dm, pd = tables_for(gen_path(9).graph)
    assert check_ball_growth(dm, pd, to_bitset([0]), 2) == []
    # ball {0,1,2} has size 3 = 1 + 2*5^0, the bound is tight here
    dm4, pd4 = tables_for(C4)
    assert check_ball_growth(dm4, pd4, to_bitset([0, 1]), 1) == []
    m3 = gen_mt(3).graph
    dm3, pd3 = tables_for(m3)
    assert check_ball_growth(dm3, pd3, to_bitset(range(8, 11)), 2) == []


def test_ball_growth_requires_resolving_set():
    dm, pd = tables_for(C4)
    with pytest.raises(ValueError):
        check_ball_growth(dm, pd, to_bitset([0]), 2)  # singleton can't resolve C_4


def test_near_distinguisher_examples():
    p6 = gen_path(6).graph
    dm, pd = tables_for(p6)
    assert check_near_distinguisher(pd, dm, to_bitset([0]), 1) == []
    m3 = gen_mt(3).graph
    dm3, pd3 = tables_for(m3)
    assert kappa(pd3) == 3
    assert check_near_distinguisher(pd3, dm3, parity_ft_set(3), 2) == []
    assert check_near_distinguisher(pd3, dm3, full_set(11), 1) == []


def test_near_distinguisher_preconditions():
    dm, pd = tables_for(C4)  # kappa = 2
    with pytest.raises(ValueError):
        check_near_distinguisher(pd, dm, full_set(4), 2)
    dm6, pd6 = tables_for(gen_path(6).graph)
    with pytest.raises(ValueError):
        check_near_distinguisher(pd6, dm6, to_bitset([2]), 1)  # not resolving


def test_expansion_theorem_on_corpus():
    rng = random.Random(77)
    for _ in range(15):
        g = random_connected_graph(rng.randint(4, 12), 0.4, rng)
        dm, pd = tables_for(g)
        for k in range(1, kappa(pd)):
            S = solve_exact(pd, k).set
            expanded = expand_radius2(dm, S)
            assert is_k_resolving(pd, expanded, k + 1)
            s = S.bit_count()
            assert expanded.bit_count() <= s * (1 + 2 * 5 ** (s - 1))
            for d in (1, 2, 3):
                assert check_ball_growth(dm, pd, S, d) == []
            assert check_near_distinguisher(pd, dm, S, k) == []
