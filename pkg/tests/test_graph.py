import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgraph.graph import (
    BipartiteGraph,
    CompleteGraph,
    GraphFormatError,
    GraphGenSpec,
    generate,
    load_graph,
    save_graph,
    splitmix64,
    weight,
)
from qgraph.minsearch import QueryLedger


def test_single_vertex_graph_has_no_edges():
    g = generate(GraphGenSpec("complete", n=1, seed=7))
    assert g.n == 1
    assert g.weights.shape == (1, 1)


def test_generation_is_deterministic():
    a = generate(GraphGenSpec("complete", n=3, seed=42))
    b = generate(GraphGenSpec("complete", n=3, seed=42))
    assert np.array_equal(a.weights, b.weights)
    assert a == b
    assert a != generate(GraphGenSpec("complete", n=3, seed=43))


def test_bipartite_stores_two_n1_n2_tables():
    g = generate(GraphGenSpec("bipartite", n1=2, n2=3, seed=1))
    assert g.w12.size + g.w21.size == 12
    assert g.to_digraph().shape == (5, 5)


def test_splitmix64_reference_values():
    # first outputs for seed 0 as published with the reference C code
    out = splitmix64(0, 3)
    assert [int(x) for x in out] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_weights_lie_on_the_dyadic_grid_in_unit_interval():
    w = generate(GraphGenSpec("complete", n=20, seed=5)).weights
    off = w[~np.eye(20, dtype=bool)]
    assert (off > 0).all() and (off <= 1).all()
    scaled = off * 2.0**40
    assert np.array_equal(scaled, np.round(scaled))


def test_symmetric_generation():
    g = generate(GraphGenSpec("complete", n=9, seed=2, symmetric=True))
    assert g.is_symmetric
    assert not generate(GraphGenSpec("complete", n=9, seed=2)).is_symmetric


def test_custom_interval():
    g = generate(GraphGenSpec("complete", n=10, seed=4, low=2.0, high=3.0))
    off = g.weights[~np.eye(10, dtype=bool)]
    assert (off > 2.0).all() and (off <= 3.0).all()


@pytest.mark.parametrize(
    "kw",
    [dict(shape="complete", n=0), dict(shape="complete", n=-2), dict(shape="bipartite", n1=0, n2=3),
     dict(shape="torus", n=3), dict(n=3, low=1.0, high=1.0)],
)
def test_bad_specs_rejected(kw):
    with pytest.raises(ValueError):
        GraphGenSpec(**kw)


def test_graphs_are_immutable():
    g = generate(GraphGenSpec("complete", n=4, seed=1))
    with pytest.raises(ValueError):
        g.weights[0, 1] = 3.0


def test_negative_weight_rejected():
    with pytest.raises(ValueError):
        CompleteGraph([[0, -1.0], [1.0, 0]])
    with pytest.raises(ValueError):
        BipartiteGraph([[-0.5]], [[1.0]])


def test_infinity_is_allowed_but_flags_incomplete():
    g = CompleteGraph([[0, math.inf], [1.0, 0]])
    assert not g.is_complete


def test_weight_reads_charge_the_ledger():
    g = CompleteGraph([[0, 0.5], [0.25, 0]])
    led = QueryLedger()
    assert weight(g, 0, 1, led, phase="update") == 0.5
    assert led.update_queries == 1 and led.search_queries == 0
    for _ in range(5):
        weight(g, 1, 0, led, phase="search")
    assert led.search_queries == 5


def test_weight_rejects_self_loop_and_out_of_range():
    g = CompleteGraph([[0, 0.5], [0.25, 0]])
    with pytest.raises(ValueError):
        weight(g, 0, 0, QueryLedger())
    with pytest.raises(IndexError):
        weight(g, 0, 2, QueryLedger())


def test_save_load_round_trip(tmp_path):
    g = generate(GraphGenSpec("complete", n=4, seed=9))
    p = tmp_path / "g.txt"
    save_graph(g, p)
    assert load_graph(p) == g


def test_bipartite_round_trip(tmp_path):
    g = generate(GraphGenSpec("bipartite", n1=3, n2=5, seed=2))
    p = tmp_path / "b.txt"
    save_graph(g, p)
    assert load_graph(p) == g


def test_missing_pairs_default_to_infinity(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("complete 3\n0 1 0.5\n1 2 inf\n")
    g = load_graph(p)
    assert g.weights[0, 1] == 0.5
    assert math.isinf(g.weights[2, 0]) and math.isinf(g.weights[1, 2])


@pytest.mark.parametrize(
    "text",
    [
        "complete 3\n0 1 -1\n",  # negative weight
        "complete 3\n0 1 0.1\n0 2 0.1\n1 2 0.1\n3 0 0.1\n4 1 0.1\n",  # vertex beyond n=3
        "complete 3\n0 1 0.1\n0 1 0.2\n",  # duplicate pair
        "complete 3\n1 1 0.1\n",  # self-loop
        "complete 3\n0 1\n",  # missing field
        "complete\n",  # bad header
        "bipartite 2 2\n0 1 0.5\n",  # edge inside V1
        "",
    ],
)
def test_malformed_files_rejected(tmp_path, text):
    p = tmp_path / "bad.txt"
    p.write_text(text)
    with pytest.raises(GraphFormatError):
        load_graph(p)


@settings(max_examples=30, deadline=None)
@given(n=st.integers(1, 12), seed=st.integers(0, 2**64 - 1), sym=st.booleans())
def test_generate_is_pure(n, seed, sym):
    spec = GraphGenSpec("complete", n=n, seed=seed, symmetric=sym)
    a, b = generate(spec), generate(spec)
    assert a == b
    assert a.is_complete
