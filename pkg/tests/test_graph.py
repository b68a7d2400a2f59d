import pytest

from edgesample import (
    DirectedEdge,
    GraphConstructionError,
    build_graph,
    light_degree,
    partition,
    read_edge_list,
    write_edge_list,
)
from edgesample.generators import clique, erdos_renyi, generate, star
from edgesample.graph import RelabeledView


def test_single_edge():
    g = build_graph([(0, 1)], 2)
    assert g.degree(0) == g.degree(1) == 1
    assert g.m_dir == 2


def test_path3_degrees_and_order():
    g = build_graph([(0, 1), (1, 2)], 3)
    assert g.degrees() == [1, 2, 1]
    assert g.m_dir == 4
    # neighbor order is first-appearance order of the input
    assert g.neighbors(1) == (0, 2)
    assert g.neighbor(1, 1) == 0
    assert g.neighbor(1, 2) == 2
    assert g.neighbor(0, 2) is None


@pytest.mark.parametrize(
    "edges, n, fragment",
    [
        ([(0, 1), (0, 1)], 2, "duplicate"),
        ([(0, 1), (1, 0)], 2, "duplicate"),
        ([(0, 0)], 1, "self-loop"),
        ([(0, 5)], 2, "out of range"),
    ],
)
def test_build_rejects_bad_edges(edges, n, fragment):
    with pytest.raises(GraphConstructionError, match=fragment):
        build_graph(edges, n)


def test_partition_path3_all_light():
    p = partition(build_graph([(0, 1), (1, 2)], 3), theta=2)
    assert p.heavy_vertices == frozenset()
    assert p.e_light == 4 and p.e_heavy == 0


def test_partition_star5():
    p = partition(star(5), theta=3)
    assert p.heavy_vertices == frozenset({0})
    assert p.e_light == 5 and p.e_heavy == 5


def test_partition_clique4_all_heavy():
    p = partition(clique(4), theta=2)
    assert p.light_vertices == frozenset()
    assert p.e_light == 0 and p.e_heavy == 12


def test_light_degree_examples():
    s = star(5)
    assert light_degree(s, partition(s, 3), 0) == 5
    k = clique(4)
    pk = partition(k, 2)
    assert all(light_degree(k, pk, v) == 0 for v in range(4))
    p3 = build_graph([(0, 1), (1, 2)], 3)
    assert light_degree(p3, partition(p3, 2), 1) == 2


def test_generator_counts():
    assert clique(4).m_dir == 12
    g = generate("clique_union:path:4,3", seed=5)
    assert g.n == 7 and g.m_dir == 12
    assert star(5).n == 6 and star(5).m_dir == 10


def test_generator_determinism():
    a = erdos_renyi(100, 0.1, seed=1)
    b = erdos_renyi(100, 0.1, seed=1)
    assert a.adjacency == b.adjacency
    c = erdos_renyi(100, 0.1, seed=2)
    assert a.adjacency != c.adjacency


def test_generated_graphs_are_symmetric():
    for spec, seed in [("er:60,0.2", 3), ("clique_union:er:30,0.2,5", 4), ("star:9", 0)]:
        g = generate(spec, seed=seed)
        g.validate()
        assert g.m_dir == sum(g.degrees())
        assert g.m_dir % 2 == 0


def test_e_light_monotone_in_theta():
    g = erdos_renyi(40, 0.25, seed=8)
    values = [partition(g, t).e_light for t in range(1, g.n)]
    assert all(a <= b for a, b in zip(values, values[1:]))
    assert values[-1] == g.m_dir  # theta = n-1 makes every vertex light


def test_heavy_count_bound():
    # |H| * theta < m_dir whenever H is nonempty (heavy degrees exceed theta)
    for seed in range(5):
        g = erdos_renyi(50, 0.2, seed=seed)
        for theta in (1, 2, 4, 8):
            p = partition(g, theta)
            if p.heavy_vertices:
                assert len(p.heavy_vertices) * theta < g.m_dir


def test_directed_edge_helpers():
    e = DirectedEdge(3, 1)
    assert e.reversed() == DirectedEdge(1, 3)
    assert e.undirected() == (1, 3)


def test_edge_list_roundtrip(tmp_path):
    g = erdos_renyi(25, 0.3, seed=6)
    target = tmp_path / "g.edges"
    write_edge_list(g, str(target))
    h = read_edge_list(str(target))
    assert h.n == g.n
    assert sorted(h.undirected_edges()) == sorted(g.undirected_edges())


def test_edge_list_parsing(tmp_path):
    target = tmp_path / "g.edges"
    target.write_text("# comment\nn 4\n0 1\n2 1\n")
    g = read_edge_list(str(target))
    assert g.n == 4
    assert g.degrees() == [1, 2, 1, 0]


def test_edge_list_default_n(tmp_path):
    target = tmp_path / "g.edges"
    target.write_text("0 1\n1 5\n")
    assert read_edge_list(str(target)).n == 6


def test_relabeled_view_matches_rebuilt_graph():
    g = erdos_renyi(12, 0.3, seed=9)
    perm = [(i * 5 + 3) % 12 for i in range(12)]  # a fixed permutation
    assert sorted(perm) == list(range(12))
    view = RelabeledView(g, perm)
    rebuilt = build_graph([(perm[u], perm[v]) for u, v in g.undirected_edges()], 12)
    assert view.m_dir == rebuilt.m_dir
    for v in range(12):
        assert view.degree(v) == rebuilt.degree(v)
        assert sorted(view.neighbors(v)) == sorted(rebuilt.neighbors(v))
        for w in range(12):
            assert view.has_edge(v, w) == rebuilt.has_edge(v, w)
    # slot queries stay consistent with the view's own neighbor order
    for v in range(12):
        for i in range(1, view.degree(v) + 2):
            got = view.neighbor(v, i)
            if i <= view.degree(v):
                assert got == view.neighbors(v)[i - 1]
            else:
                assert got is None


def test_generator_spec_errors():
    for bad in ["nope:3", "er:10", "path:x", "clique_union:3", "cycle:2"]:
        with pytest.raises(ValueError):
            generate(bad, seed=0)
