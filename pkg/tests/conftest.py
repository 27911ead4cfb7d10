import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def multiset_pair(draw, max_m=5, max_k=5):
    """Two multisets over the same ground set."""
    from multifam import Multiset

    m = draw(st.integers(1, max_m))
    k = draw(st.integers(0, max_k))
    first = draw(st.lists(st.integers(1, m), min_size=k, max_size=k))
    second = draw(st.lists(st.integers(1, m), min_size=k, max_size=k))
    return Multiset.from_elements(m, first), Multiset.from_elements(m, second)


@st.composite
def multiset_family(draw, max_m=5, max_k=4, max_members=8):
    from multifam import Family, Multiset

    m = draw(st.integers(1, max_m))
    k = draw(st.integers(1, max_k))
    count = draw(st.integers(1, max_members))
    members = [
        Multiset.from_elements(
            m, draw(st.lists(st.integers(1, m), min_size=k, max_size=k))
        )
        for _ in range(count)
    ]
    return Family.of_multisets(m, k, members)


@st.composite
def random_adjacency(draw, max_n=12):
    """Random undirected graph as per-vertex bitmasks."""
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 2**31 - 1))
    density = draw(st.floats(0.1, 0.9))
    rng = random.Random(seed)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj
