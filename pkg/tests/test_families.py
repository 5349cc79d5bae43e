import pytest

from kresolve import (all_pairs_distances, distinguisher_table,
                      gen_complete_multipartite, gen_mt, gen_mtk, gen_path,
                      gen_spine_tree, is_k_resolving, parity_ft_set)
from kresolve.formulas import tree_params


def test_mt_small():
    lg = gen_mt(1)  # P_3: 0 - 1 - v_1
    assert lg.graph.n == 3
    assert lg.graph.edges() == [(0, 1), (1, 2)]
    assert gen_mt(2).graph.n == 6
    lg3 = gen_mt(3)
    assert lg3.graph.n == 11
    assert lg3.graph.m == 28 + 3 * 4  # C(8,2) code clique + 3 apexes * 4 codes


def test_mt_labels_and_degrees():
    t = 4
    lg = gen_mt(t)
    g = lg.graph
    codes = 1 << t
    assert lg.labels[:4] == ("0000", "0001", "0010", "0011")
    assert lg.labels[codes:] == tuple(f"v_{i}" for i in range(1, t + 1))
    for i in range(t):
        assert g.degree(codes + i) == 2 ** (t - 1)
    for j in range(codes):
        assert g.degree(j) == (codes - 1) + j.bit_count()


def test_mt_apex_adjacency_follows_codes():
    t = 3
    g = gen_mt(t).graph
    for i in range(1, t + 1):
        vi = (1 << t) + i - 1
        expected = sorted(j for j in range(1 << t) if j >> (t - i) & 1)
        assert [u for u in g.adjacency[vi]] == expected


def test_mtk_sizes():
    lg = gen_mtk(3, 2)
    assert lg.graph.n == 14
    # code clique + product edges t*C(k,2) + k*C(t,2) + cross edges k*t*2^(t-1)
    assert lg.graph.m == 28 + (3 * 1 + 2 * 3) + 6 * 4 == 61
    assert gen_mtk(1, 2).graph.n == 4
    assert gen_mtk(6, 2).graph.n == 76


def test_mtk_apex_degrees():
    t, k = 4, 3
    g = gen_mtk(t, k).graph
    for v in range(1 << t, g.n):
        assert g.degree(v) == (t - 1) + (k - 1) + 2 ** (t - 1)


def test_mtk_parameter_errors():
    with pytest.raises(ValueError):
        gen_mtk(0, 2)
    with pytest.raises(ValueError):
        gen_mtk(3, 1)
    with pytest.raises(ValueError):
        gen_mt(0)


def test_complete_multipartite():
    assert gen_complete_multipartite([2, 2]).graph.edges() == \
        [(0, 2), (0, 3), (1, 2), (1, 3)]  # C_4
    p3 = gen_complete_multipartite([1, 2]).graph
    assert p3.n == 3 and p3.m == 2
    diamond = gen_complete_multipartite([1, 1, 2]).graph
    assert diamond.n == 4 and diamond.m == 5  # K_4 minus one edge
    with pytest.raises(ValueError):
        gen_complete_multipartite([4])


def test_paths():
    assert gen_path(2).graph.m == 1
    assert gen_path(5).graph.m == 4
    with pytest.raises(ValueError):
        gen_path(1)


def test_spine_trees():
    g = gen_spine_tree([2, 2]).graph
    assert g.n == 6
    p = tree_params(g)
    assert (p.a, p.b, p.c) == (4, 2, 0)
    star = gen_spine_tree([3]).graph  # K_{1,3}
    assert star.n == 4 and star.degree(0) == 3
    assert gen_spine_tree([2, 2, 2]).graph.n == 9
    with pytest.raises(ValueError):
        gen_spine_tree([2, 1])


def test_spine_tree_is_tree():
    for counts in ([2, 2], [3], [2, 4, 2], [2, 2, 2, 2]):
        g = gen_spine_tree(counts).graph
        assert g.m == g.n - 1
        assert tree_params(g).a == sum(counts)


def test_parity_ft_set():
    s3 = parity_ft_set(3)
    assert s3.bit_count() == 7
    assert s3 == sum(1 << v for v in [0b000, 0b011, 0b101, 0b110, 8, 9, 10])
    assert parity_ft_set(1).bit_count() == 2
    assert parity_ft_set(2).bit_count() == 4


@pytest.mark.parametrize("t", range(1, 9))
def test_parity_set_is_2_resolving(t):
    lg = gen_mt(t)
    pd = distinguisher_table(all_pairs_distances(lg.graph))
    assert is_k_resolving(pd, parity_ft_set(t), 2)


def test_generators_deterministic():
    assert gen_mtk(3, 2).graph.edges() == gen_mtk(3, 2).graph.edges()
    assert gen_mt(4).graph.serialize() == gen_mt(4).graph.serialize()
