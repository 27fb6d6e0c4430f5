import itertools

import pytest

import tetrasym


def test_build_counts():
    g = tetrasym.build("gamma:t=3,sign=minus")
    assert len(g) == 96
    assert g.size() == 192
    assert g.regular_degree() == 4
    assert g.is_connected()
    assert g.labels()[0] == "1"
    assert tetrasym.build("delta:m=2").order() == 2520


def test_graph_from_edges():
    k44 = tetrasym.Graph(8, [(i, j) for i in range(4) for j in range(4, 8)])
    assert tetrasym.girth(k44) == 4
    assert tetrasym.is_bipartite(k44)
    assert tetrasym.automorphism_group_order(k44) == 1152
    assert tetrasym.isomorphic(k44, tetrasym.build("wreath:r=4")) is not None
    assert sorted(tetrasym.sphere(k44, 0, 1)) == [4, 5, 6, 7]
    with pytest.raises(IndexError):
        tetrasym.Graph(3, [(0, 5)])


def test_isomorphism_witness():
    g1 = tetrasym.build("gamma:t=2,sign=plus")
    g2 = tetrasym.build("crs:r=4,s=3")
    phi = tetrasym.isomorphic(g1, g2)
    assert phi is not None
    assert sorted(phi) == list(range(32))
    assert all(phi[w] in g2.neighbours(phi[u]) for u, w in g1.edges())
    assert tetrasym.isomorphic(g1, tetrasym.build("gamma:t=2,sign=minus")) is None


def test_generate_formats():
    edges = tetrasym.generate("wreath:r=3")
    assert len(edges.splitlines()) == 12
    assert "graph" in tetrasym.generate("wreath:r=3", format="dot")
    with pytest.raises(ValueError):
        tetrasym.generate("wreath:r=3", format="svg")


def test_verify_report():
    report = tetrasym.verify("crs:r=6,s=3")
    assert report["schema"] == 1
    assert report["overall"] is True
    names = {c["name"] for c in report["checks"]} | {s["name"] for s in report["skipped"]}
    assert names == set(tetrasym.check_names())
    girth = tetrasym.verify("gamma:t=3,sign=plus", checks=["girth"])
    assert [c["actual"] for c in girth["checks"]] == [6]


def test_bad_specs():
    for spec in ["wreath:r=2", "cube:n=1", "gamma:t=3"]:
        with pytest.raises(ValueError):
            tetrasym.build(spec)
    with pytest.raises(ValueError):
        tetrasym.verify("wreath:r=4", checks=["nonsense"])


def test_group_census():
    for t in (2, 3):
        plus = tetrasym.element_order_census(t, "plus")
        minus = tetrasym.element_order_census(t, "minus")
        assert sum(plus.values()) == sum(minus.values()) == tetrasym.group_order(t)
        assert plus != minus


def test_small_girths_match_brute_force():
    # Triangle-free check on a few coset graphs by looking at all vertex triples.
    for spec in ["crs:r=5,s=2", "gamma:t=2,sign=plus"]:
        g = tetrasym.build(spec)
        adj = [set(g.neighbours(v)) for v in range(len(g))]
        has_triangle = any(b in adj[a] and c in adj[a] and c in adj[b]
                           for a, b, c in itertools.combinations(range(len(g)), 3))
        assert has_triangle == (tetrasym.girth(g) == 3)
