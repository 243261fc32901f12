import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from harary_lab import _pykernels, kernels
from harary_lab.graphs import MultiGraph
from harary_lab.harary import block_validity, _down_closed
from harary_lab.properties import standard_catalog

ck = pytest.importorskip("harary_lab._ckernels", reason="compiled extension not built")


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    es = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return MultiGraph(n, tuple(sorted(es)))


@st.composite
def multigraphs(draw):
    n = draw(st.integers(1, 6))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=9))
    return MultiGraph(n, tuple(edges))


@settings(max_examples=60, deadline=None)
@given(graphs(), st.sampled_from(standard_catalog()), st.integers(0, 4))
def test_partition_and_coloring_kernels_agree(G, P, k):
    valid = block_validity(P, G)
    for prune in ([False, True] if _down_closed(valid, G.n) else [False]):
        assert list(ck.partition_counts(valid, G.n, prune)) == list(_pykernels.partition_counts(valid, G.n, prune))
    assert int(ck.coloring_count(valid, G.n, k)) == int(_pykernels.coloring_count(valid, G.n, k))


@settings(max_examples=60, deadline=None)
@given(multigraphs())
def test_edge_subset_kernels_agree(G):
    eu = [u for u, _ in G.edges]
    ev = [v for _, v in G.edges]
    assert dict(ck.xi_counts(G.n, eu, ev)) == dict(_pykernels.xi_counts(G.n, eu, ev))
    assert dict(ck.tutte_counts(G.n, eu, ev)) == dict(_pykernels.tutte_counts(G.n, eu, ev))
    assert list(ck.matching_counts(G.n, eu, ev)) == list(_pykernels.matching_counts(G.n, eu, ev))


def test_pruning_does_not_change_counts():
    G = MultiGraph(6, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)))
    for P in standard_catalog():
        valid = block_validity(P, G)
        if _down_closed(valid, G.n):
            assert _pykernels.partition_counts(valid, G.n, True) == _pykernels.partition_counts(valid, G.n, False)


def test_backend_selection_env():
    env = dict(os.environ, HARARY_LAB_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "import harary_lab.kernels as k; print(k.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
    if os.environ.get("HARARY_LAB_PURE") != "1":
        assert kernels.BACKEND == "cython"
