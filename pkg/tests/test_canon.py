import random

from cubic2ec import Graph, builtin, canonical_form, parse_graph6


def relabel(g: Graph, perm) -> Graph:
    return Graph(g.n, tuple((perm[u], perm[v]) for u, v in g.edges))


def test_canonical_key_is_isomorphism_invariant():
    rng = random.Random(7)
    for name in ("k4", "k33", "prism", "petersen"):
        g = builtin(name)
        key, _ = canonical_form(g)
        for _ in range(5):
            perm = list(range(g.n))
            rng.shuffle(perm)
            key2, _ = canonical_form(relabel(g, perm))
            assert key2 == key


def test_distinct_graphs_get_distinct_keys():
    keys = {canonical_form(builtin(name))[0] for name in ("k33", "prism")}
    assert len(keys) == 2


def test_permutation_maps_onto_canonical_graph(petersen):
    key, perm = canonical_form(petersen)
    canon = parse_graph6(key)
    mapped = {(min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in petersen.edges}
    assert mapped == set(canon.edges)
