import random

import pytest

import oracles
from gridfree import (
    CoreWitness,
    GridWitness,
    Hypergraph3,
    build_base,
    build_qr,
    build_random,
    find_grid,
    find_prism,
    find_small_two_core,
    grid_fixture,
    min_degree,
    pasch_fixture,
    prism_fixture,
    two_core,
)

BASE7_PRISM = (0, 1, 6, 8, 11, 13)
BASE7_CORE12 = (
    (0, 1, 10), (0, 2, 8), (0, 6, 9), (1, 2, 11), (1, 3, 9), (1, 6, 7),
    (2, 3, 7), (2, 4, 10), (3, 4, 8), (3, 5, 11), (4, 5, 7), (5, 6, 8),
)


def test_grid_fixture_witness():
    g = grid_fixture()
    w = find_grid(g)
    assert w is not None
    assert (w.rows, w.cols) == ((0, 4, 5), (1, 2, 3))
    assert w.vertices == tuple(range(9))
    w.validate(g)
    assert sorted(g.edges[i] for i in w.rows) == [(0, 1, 2), (3, 4, 5), (6, 7, 8)]
    assert sorted(g.edges[i] for i in w.cols) == [(0, 3, 6), (1, 4, 7), (2, 5, 8)]


def test_prism_fixture_witness():
    pr = prism_fixture()
    w = find_prism(pr)
    assert w is not None
    assert w.edges == (0, 1, 2, 3, 4, 5)
    assert w.degrees == (2,) * 9
    w.validate(pr, 9)


def test_fixtures_do_not_cross_match():
    assert find_prism(grid_fixture()) is None
    assert find_grid(prism_fixture()) is None
    assert find_grid(pasch_fixture()) is None
    empty = Hypergraph3(0, ())
    assert find_grid(empty) is None
    assert find_prism(empty) is None
    assert find_small_two_core(empty, 9) is None


def test_pasch_is_the_smallest_linear_core():
    pa = pasch_fixture()
    w = find_small_two_core(pa, 6)
    assert w is not None
    assert w.edges == (0, 1, 2, 3)
    assert w.vertices == tuple(range(6))
    assert w.degrees == (2,) * 6
    w.validate(pa, 6)


def test_grid_agrees_with_subset_oracle():
    for i in range(30):
        rng = random.Random(1000 + i)
        if i % 2 == 0:
            h = oracles.random_hypergraph(rng, rng.randint(9, 16), rng.randint(6, 25))
        else:
            h = oracles.plant_grid(rng, n_extra=rng.randint(3, 10), m_extra=rng.randint(0, 13))
        got = find_grid(h)
        want = oracles.grid_all_six_subsets(h)
        assert (None if got is None else (got.rows, got.cols)) == want, i
        if got is not None:
            got.validate(h)


def test_planted_grids_are_found():
    for i in range(50):
        rng = random.Random(3000 + i)
        h = oracles.plant_grid(rng, n_extra=rng.randint(3, 12), m_extra=rng.randint(0, 12))
        w = find_grid(h)
        assert w is not None, i
        w.validate(h)


def test_planted_prisms_are_found():
    for i in range(50):
        rng = random.Random(2000 + i)
        h = oracles.plant_prism(rng, n_extra=rng.randint(3, 12), m_extra=rng.randint(0, 10))
        w = find_prism(h)
        assert w is not None, i
        w.validate(h, 9)


def test_two_core_examples():
    g = grid_fixture()
    assert two_core(g) == g
    single = Hypergraph3.from_edges(3, [(0, 1, 2)])
    assert two_core(single).m == 0
    pendant = Hypergraph3.from_edges(11, list(g.edges) + [(0, 9, 10)])
    assert two_core(pendant) == g


def test_two_core_of_full_base7():
    h7, _, _ = build_base(7)
    core = two_core(h7)
    assert (core.n, core.m) == (12, 12)
    assert core.edges == BASE7_CORE12
    assert min_degree(core) >= 2
    assert two_core(core) == core


def test_two_core_matches_random_order_peeling():
    for i in range(30):
        rng = random.Random(4000 + i)
        h = oracles.random_hypergraph(rng, 14, rng.randint(4, 22))
        core = two_core(h)
        assert two_core(core) == core
        for s in range(3):
            assert oracles.peel_random_order(h, random.Random(s)) == core, (i, s)


def test_base7_contains_a_prism_shaped_core():
    # the two-parabola instance at p=7 is grid-free but not prism-free:
    # six of its edges form a min-degree-2 configuration on nine vertices
    h7, _, _ = build_base(7)
    assert find_grid(h7) is None
    w = find_prism(h7)
    assert w is not None
    assert w.edges == BASE7_PRISM
    w.validate(h7, 9)
    ws = find_small_two_core(h7, 9)
    assert ws is not None
    assert ws.edges == BASE7_PRISM
    ws.validate(h7, 9)


def test_small_builds_have_no_small_core():
    for build in (build_base, build_qr):
        h, _, _ = build(5)
        assert find_small_two_core(h, 9) is None
    h, _, _ = build_random(7, 1, 2, 1)
    assert find_small_two_core(h, 9) is None


def test_small_core_needs_at_least_four_edges_when_linear():
    for i in range(40):
        rng = random.Random(5000 + i)
        h = oracles.random_linear_hypergraph(rng, rng.randint(6, 12), 3)
        assert h.m <= 3
        assert find_small_two_core(h, 10) is None


def test_nine_vertex_witnesses_have_six_or_more_edges():
    seen_nine = 0
    for i in range(40):
        rng = random.Random(6000 + i)
        h = oracles.plant_prism(rng, n_extra=rng.randint(0, 8), m_extra=rng.randint(0, 8))
        w = find_small_two_core(h, 9)
        assert w is not None
        if len(w.vertices) == 9:
            seen_nine += 1
            assert len(w.edges) >= 6
    assert seen_nine > 0


def test_max_vertices_validation():
    h = pasch_fixture()
    for bad in (3, 11, 0):
        with pytest.raises(ValueError):
            find_small_two_core(h, bad)


def test_witness_validate_rejects_tampering():
    g = grid_fixture()
    w = find_grid(g)
    bad = GridWitness(rows=w.rows, cols=(1, 2, 4), vertices=w.vertices)
    with pytest.raises(ValueError):
        bad.validate(g)
    pr = prism_fixture()
    c = find_prism(pr)
    with pytest.raises(ValueError):
        CoreWitness(edges=c.edges[:-1] + (0,), vertices=c.vertices,
                    degrees=c.degrees).validate(pr, 9)
    with pytest.raises(ValueError):
        c.validate(pr, max_vertices=8)


def test_witness_json_shapes():
    g = grid_fixture()
    w = find_grid(g)
    assert w.to_json_dict() == {
        "rows": [0, 4, 5],
        "cols": [1, 2, 3],
        "vertices": list(range(9)),
    }
    c = find_prism(prism_fixture())
    assert c.to_json_dict() == {
        "edges": [0, 1, 2, 3, 4, 5],
        "vertices": list(range(9)),
        "degrees": [2] * 9,
    }
