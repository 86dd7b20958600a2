import itertools

from hypothesis import strategies as st

from domcount.graph import build_graph


@st.composite
def graphs(draw, max_n: int = 12, min_n: int = 1):
    """Random small graph: pick n, then an arbitrary subset of pairs."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
    return build_graph(n, edges)
