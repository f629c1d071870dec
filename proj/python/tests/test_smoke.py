import itertools

import networkx as nx
import pytest

import dtdom


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def brute_dtd(h):
    dist = dict(nx.all_pairs_shortest_path_length(h))
    nodes = list(h.nodes)
    for k in range(len(nodes) + 1):
        for s in itertools.combinations(nodes, k):
            if all(
                any(h.has_edge(v, u) for u in s) or sum(dist[v].get(u) == 2 for u in s) >= 2
                for v in nodes
            ):
                return k
    return None


def test_c7_value_and_witness():
    g = dtdom.generate("C(7)")
    value, witness = dtdom.exact_number(g, "dtd")
    assert value == 4
    assert witness == sorted(witness)
    assert dtdom.is_dtd_set(g, witness)
    assert dtdom.uncovered(g, [0, 1]) == [3, 4, 5]


@pytest.mark.parametrize("family", ["T(3)", "F(3)", "G(3)", "TStar", "H(1)", "L(5)", "C10'"])
def test_exact_matches_networkx_oracle(family):
    g = dtdom.generate(family)
    assert dtdom.exact_number(g, "dtd")[0] == brute_dtd(to_nx(g))


def test_graph6_matches_networkx():
    g = dtdom.generate("L(13)")
    text = g.to_graph6()
    h = nx.from_graph6_bytes(text.encode())
    assert nx.is_isomorphic(h, to_nx(g))
    assert nx.to_graph6_bytes(to_nx(g), header=False).decode().strip() == text
    assert dtdom.Graph.from_graph6(text) == g


def test_enumeration_counts():
    assert len(dtdom.enumerate(6, "all")) == 112
    assert len(dtdom.enumerate(7, "trees")) == 11
    seen = [nx.from_graph6_bytes(s.encode()) for s in dtdom.enumerate(5, "clawfree")]
    assert len(seen) == 14
    for a, b in itertools.combinations(seen, 2):
        assert not nx.is_isomorphic(a, b)


def test_construct_and_errors():
    members, method = dtdom.construct_dtd_clawfree(dtdom.generate("H(2)"))
    assert method == "proof-path"
    assert len(members) == 8
    with pytest.raises(dtdom.DomainError, match="P_6"):
        dtdom.construct_dtd_clawfree(dtdom.generate("P(6)"))
    with pytest.raises(ValueError):
        dtdom.generate("Nope(1)")
    with pytest.raises(dtdom.DomainError):
        dtdom.exact_number(dtdom.Graph(3, [(0, 1)]), "tdom")


def test_formulas_and_census():
    assert dtdom.dtd_cycle_formula(15) == 6
    assert dtdom.gt_cycle_formula(15) == 8
    report = dtdom.verify("census7")
    assert report["status"] == "pass"
    assert report["counts"]["gamma_t_eq_4_clawfree"] == 12
