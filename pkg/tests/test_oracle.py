import os

import pytest

from qchroma import oracle
from qchroma.grassmann import GrassmannParams
from qchroma.oracle import (DenseGraph, build_graph, dense_graph, dsatur,
                            exact_chromatic, johnson_graph, max_clique,
                            write_dimacs)


def _cycle(n):
    return dense_graph([str(i) for i in range(n)],
                       lambda i, j: (j - i) % n in (1, n - 1))


def test_dense_graph_validation():
    with pytest.raises(ValueError):
        DenseGraph(("a", "b"), (0b10, 0b00))   # asymmetric
    with pytest.raises(ValueError):
        DenseGraph(("a",), (0b1,))             # loop
    g = _cycle(5)
    assert g.num_edges == 5 and all(g.degree(i) == 2 for i in range(5))


def test_max_clique_small():
    tri = dense_graph("abc", lambda i, j: True)
    res = max_clique(tri)
    assert res.size == 3 and res.exact and res.witness == (0, 1, 2)
    empty = dense_graph("abc", lambda i, j: False)
    assert max_clique(empty).size == 1
    c5 = _cycle(5)
    assert max_clique(c5).size == 2


def test_exact_chromatic_small():
    assert exact_chromatic(dense_graph("abc", lambda i, j: True)).value == 3
    assert exact_chromatic(dense_graph("abc", lambda i, j: False)).value == 1
    assert exact_chromatic(_cycle(5)).value == 3   # odd cycle
    assert exact_chromatic(_cycle(6)).value == 2


def test_dsatur_is_proper_and_deterministic():
    g = johnson_graph(6, 3, 1)
    colours = dsatur(g.adj)
    assert colours == dsatur(g.adj)
    for i in range(g.num_vertices):
        mask = g.adj[i]
        while mask:
            j = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            assert colours[i] != colours[j]


def test_build_graph_vertex_and_edge_counts():
    g = build_graph(GrassmannParams(2, 4, 2, 1))
    assert (g.num_vertices, g.num_edges) == (35, 315)
    assert all(g.degree(i) == 18 for i in range(35))
    g = build_graph(GrassmannParams(2, 5, 2, 1))
    assert g.num_vertices == 155
    assert all(g.degree(i) == 42 for i in range(155))


def test_build_graph_cap():
    with pytest.raises(ValueError):
        build_graph(GrassmannParams(2, 6, 3, 1), cap=100)


def test_grassmann_oracle_values():
    g = build_graph(GrassmannParams(2, 4, 2, 1))
    mc = max_clique(g)
    assert mc.size == 7 and mc.exact
    # witness really is a clique
    for a in range(len(mc.witness)):
        for b in range(a + 1, len(mc.witness)):
            assert g.adj[mc.witness[a]] & (1 << mc.witness[b])
    ch = exact_chromatic(g)
    assert ch.exact and ch.value == 7
    assert ch.value >= mc.size


def test_chromatic_budget_degrades_to_bracket():
    g = build_graph(GrassmannParams(2, 4, 2, 1))
    res = exact_chromatic(g, budget=3)
    assert not res.exact
    assert res.lower <= 7 <= res.upper
    with pytest.raises(ValueError):
        res.value


def test_oracle_determinism():
    g = build_graph(GrassmannParams(2, 4, 2, 1))
    a = exact_chromatic(g)
    b = exact_chromatic(g)
    assert a == b


def test_exact_witness_translates_to_proper_subspace_colouring():
    from qchroma.grassmann import adjacent, decode_subspace
    g = build_graph(GrassmannParams(2, 4, 2, 1))
    ch = exact_chromatic(g)
    verts = [decode_subspace(lab) for lab in g.labels]
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            if ch.colouring[i] == ch.colouring[j]:
                assert not adjacent(verts[i], verts[j], 1)


def test_exact_witness_passes_certificate_verification():
    # package the oracle's own colouring as a certificate and re-check it
    from qchroma import colouring as col
    params = GrassmannParams(2, 4, 2, 1)
    g = build_graph(params)
    ch = exact_chromatic(g)
    cert = col.ColourCertificate(
        params=params, regime="external", johnson_method=None,
        johnson_palette=None, code_params=None,
        colours=tuple(sorted(zip(g.labels, ch.colouring))),
        palette_used=len(set(ch.colouring)),
        bounds={"lower": 7, "theorem_upper": 12, "trivial_upper": 19},
        proper=None, pairs_checked=0, family_sizes={})
    rep = col.verify_properness(cert)
    assert rep.coverage_ok and rep.proper


def test_complement_degree_arithmetic():
    g = build_graph(GrassmannParams(2, 4, 2, 1))
    assert all(g.num_vertices - 1 - g.degree(i) == 16 for i in range(35))


def test_dimacs_export(tmp_path):
    g = build_graph(GrassmannParams(2, 4, 2, 1))
    path = os.path.join(tmp_path, "g.dimacs")
    write_dimacs(g, path, path + ".labels")
    lines = open(path).read().splitlines()
    assert lines[0] == "p edge 35 315"
    edges = [tuple(map(int, ln.split()[1:])) for ln in lines[1:]]
    assert len(edges) == 315
    assert all(1 <= i < j <= 35 for i, j in edges)
    assert edges == sorted(edges)
    labels = open(path + ".labels").read().splitlines()
    assert len(labels) == 35
    assert labels[0].split(" ", 1)[0] == "1"
    assert labels[0].split(" ", 1)[1] == g.labels[0]
