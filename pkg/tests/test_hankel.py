import random

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from harary_lab.graphs import build_named
from harary_lab.hankel import family_graphs, hankel_section, rank_exact, zero_pattern
from harary_lab.harary import harary_polynomial
from harary_lab.polyring import MPoly, X
from harary_lab.properties import builtin
from oracles import SX


@settings(max_examples=50)
@given(st.integers(1, 5), st.integers(1, 5), st.randoms(use_true_random=False))
def test_rank_integer_matrices_against_sympy(r, c, rnd):
    # low-rank products make the degenerate cases common
    k = rnd.randint(0, min(r, c))
    A = sympy.Matrix(r, k, lambda i, j: rnd.randint(-3, 3)) * sympy.Matrix(k, c, lambda i, j: rnd.randint(-3, 3))
    M = [[MPoly.const(int(A[i, j])) for j in range(c)] for i in range(r)]
    assert rank_exact(M) == A.rank()


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.randoms(use_true_random=False))
def test_rank_polynomial_matrices_against_sympy(n, rnd):
    entries = [[MPoly.from_univariate([rnd.randint(-2, 2) for _ in range(3)]) for _ in range(n)] for _ in range(n)]
    if n > 1 and rnd.random() < 0.5:
        entries[-1] = [a + b for a, b in zip(entries[0], entries[1 % n])]
    S = sympy.Matrix(n, n, lambda i, j: sum(c * SX**e[0] if e else c for e, c in entries[i][j].terms.items()))
    assert rank_exact(entries) == S.rank(simplify=True)


def test_rank_edge_cases():
    assert rank_exact([]) == 0
    assert rank_exact([[MPoly()]]) == 0
    assert rank_exact([[X, X**2], [1, X]]) == 1
    assert rank_exact([[X, 1], [1, X]]) == 2


def chi(P):
    return lambda G: harary_polynomial(P, G).poly


def test_sections_and_ranks():
    S = hankel_section(chi(builtin("edgeless")), "join", family_graphs("K", 4), name="chromatic")
    assert S.shape == (4, 4) and S.rank() == 4
    assert S.entries[0][0] == X * (X - 1)
    assert S.evaluated(x=3)[0][1] == 6
    d = S.to_json()
    assert d["op"] == "join" and len(d["entries"]) == 4
    U = hankel_section(chi(builtin("edgeless")), "union", family_graphs("K", 4))
    # chromatic polynomial is multiplicative: union sections have rank one
    assert U.rank() == 1


def test_zero_patterns():
    zp = zero_pattern(builtin("edgeless"), "K", 6, 3)
    assert zp.matches(lambda i, k: i > k) and zp.suffix_pattern
    assert zp.thresholds == {1: 2, 2: 3, 3: 4}
    zp = zero_pattern(builtin("induced-free", "K3"), "K", 8, 3)
    assert zp.thresholds == {1: 3, 2: 5, 3: 7}
    zp = zero_pattern(builtin("connected"), "M", 8, 3)
    assert zp.thresholds == {1: 2, 2: 3, 3: 4}
    assert zp.as_dict()["zero"]["2,1"] is True


def test_family_graphs():
    assert [G.n for G in family_graphs("M", 3)] == [2, 4, 6]
    assert family_graphs("K", 3, start=2) == [build_named("K", 2), build_named("K", 3)]
