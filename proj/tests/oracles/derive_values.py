"""Brute-force reference values, written to tests/data/derived_values.txt.

Independent of the C++ code: invariants are computed straight from their
definitions (subset scans and backtracking k-colouring) on networkx graphs.

    python3 tests/oracles/derive_values.py > tests/data/derived_values.txt
"""
import itertools

import networkx as nx


def g6(g):
    g = nx.convert_node_labels_to_integers(g)
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def two_step(g):
    n = nx.Graph()
    n.add_nodes_from(g)
    for v in g:
        for a, b in itertools.combinations(g[v], 2):
            n.add_edge(a, b)
    return n


def square(g):
    s = nx.Graph()
    s.add_nodes_from(g)
    dist = dict(nx.all_pairs_shortest_path_length(g, cutoff=2))
    for u in g:
        for v, d in dist[u].items():
            if u != v and d <= 2:
                s.add_edge(u, v)
    return s


def colourable(g, k):
    order = sorted(g, key=lambda v: -g.degree(v))
    colour = {}

    def place(i):
        if i == len(order):
            return True
        v = order[i]
        used = {colour[w] for w in g[v] if w in colour}
        for c in range(min(k, len(set(colour.values())) + 1)):
            if c not in used:
                colour[v] = c
                if place(i + 1):
                    return True
                del colour[v]
        return False

    return place(0)


def chromatic(g):
    k = 0 if g.number_of_nodes() == 0 else 1
    while not colourable(g, k):
        k += 1
    return k


def best_subset(g, ok, largest):
    nodes = list(g)
    sizes = range(len(nodes), -1, -1) if largest else range(len(nodes) + 1)
    for size in sizes:
        for s in itertools.combinations(nodes, size):
            if ok(set(s)):
                return size
    return None


def open_packing(g, s):
    return all(not (set(g[u]) & set(g[v])) for u, v in itertools.combinations(s, 2))


def packing(g, s):
    return all(nx.shortest_path_length(g, u, v) > 2 if nx.has_path(g, u, v) else True
               for u, v in itertools.combinations(s, 2))


def dominating(g, s):
    return all(v in s or set(g[v]) & s for v in g)


def total_dominating(g, s):
    return all(set(g[v]) & s for v in g)


def max_clique(g):
    return max((len(c) for c in nx.find_cliques(g)), default=0)


def invariants(g):
    values = {
        "n": g.number_of_nodes(),
        "m": g.number_of_edges(),
        "Delta": max((d for _, d in g.degree()), default=0),
        "delta": min((d for _, d in g.degree()), default=0),
        "p_o": chromatic(two_step(g)),
        "chi2": chromatic(square(g)),
        "chi": chromatic(g),
        "rho": best_subset(g, lambda s: packing(g, s), True),
        "rho_o": best_subset(g, lambda s: open_packing(g, s), True),
        "gamma": best_subset(g, lambda s: dominating(g, s), False),
        "omega_N": max_clique(two_step(g)),
    }
    if min((d for _, d in g.degree()), default=1) == 0:
        values["gamma_t"] = "undef"
    else:
        values["gamma_t"] = best_subset(g, lambda s: total_dominating(g, s), False)
    return values


def corona(g, h):
    g = nx.convert_node_labels_to_integers(g)
    h = nx.convert_node_labels_to_integers(h)
    out = nx.Graph(g)
    for v in list(g):
        copy = nx.relabel_nodes(h, {x: (v, x) for x in h})
        out.update(copy)
        out.add_edges_from((v, (v, x)) for x in h)
    return out


def graphs():
    yield "K1", nx.complete_graph(1)
    yield "2K1", nx.empty_graph(2)
    for n in range(2, 7):
        yield f"K{n}", nx.complete_graph(n)
    for n in range(2, 7):
        yield f"P{n}", nx.path_graph(n)
    for n in range(3, 9):
        yield f"C{n}", nx.cycle_graph(n)
    yield "K1,3", nx.star_graph(3)
    yield "K2,3", nx.complete_bipartite_graph(2, 3)
    yield "K3,3", nx.complete_bipartite_graph(3, 3)
    yield "2P2", nx.disjoint_union(nx.path_graph(2), nx.path_graph(2))
    yield "2C4", nx.disjoint_union(nx.cycle_graph(4), nx.cycle_graph(4))
    yield "Petersen", nx.petersen_graph()
    yield "Q3", nx.hypercube_graph(3)
    yield "prism", nx.circular_ladder_graph(3)
    yield "bull", nx.bull_graph()
    yield "paw", nx.Graph([(0, 1), (1, 2), (2, 0), (2, 3)])
    yield "K4-e", nx.Graph([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    yield "P3+K1", nx.disjoint_union(nx.path_graph(3), nx.empty_graph(1))
    yield "C4boxK3", nx.cartesian_product(nx.cycle_graph(4), nx.complete_graph(3))
    yield "C4boxK4", nx.cartesian_product(nx.cycle_graph(4), nx.complete_graph(4))
    yield "C4xK2", nx.tensor_product(nx.cycle_graph(4), nx.complete_graph(2))
    yield "P3oK2", nx.lexicographic_product(nx.path_graph(3), nx.complete_graph(2))
    yield "P3coronaK1", corona(nx.path_graph(3), nx.complete_graph(1))
    yield "K1coronaK2", corona(nx.complete_graph(1), nx.complete_graph(2))
    yield "K1coronaK3", corona(nx.complete_graph(1), nx.complete_graph(3))
    yield "P2coronaK2", corona(nx.path_graph(2), nx.complete_graph(2))
    yield "K3coronaP3", corona(nx.complete_graph(3), nx.path_graph(3))
    yield "tree9", nx.Graph([(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (6, 7), (6, 8)])
    yield "spider", nx.Graph([(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (0, 7)])


KEYS = ["n", "m", "Delta", "delta", "p_o", "chi2", "chi", "rho", "rho_o", "gamma", "gamma_t", "omega_N"]

if __name__ == "__main__":
    for name, g in graphs():
        values = invariants(g)
        print(name, g6(g), " ".join(f"{k}={values[k]}" for k in KEYS))
