"""Shared strategies and reference helpers for the test suite."""

import itertools

from hypothesis import strategies as st

from langrep.graphs import Graph


def all_binary_words(max_len):
    """Every word over {0,1} up to max_len, the empty word included."""
    for n in range(max_len + 1):
        for bits in itertools.product("01", repeat=n):
            yield "".join(bits)


def graph_from_mask(n, mask):
    vs = [f"v{i}" for i in range(1, n + 1)]
    pairs = list(itertools.combinations(vs, 2))
    edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
    return Graph(vs, edges)


@st.composite
def small_graphs(draw, min_order=1, max_order=5):
    n = draw(st.integers(min_value=min_order, max_value=max_order))
    mask = draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
    return graph_from_mask(n, mask)


@st.composite
def vertex_letter_lists(draw, alphabet="abcd", max_len=10):
    return draw(
        st.lists(st.sampled_from(alphabet), min_size=1, max_size=max_len)
    )
