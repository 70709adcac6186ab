import itertools

import networkx as nx

from pathcontract.classify import NP_COMPLETE, POLYNOMIAL, classify_lip, classify_lpc, lpc_case_analysis, lpc_polynomial_by_containment
from pathcontract.graph import Graph
from pathcontract.patterns import parse_pattern


def test_lip_examples():
    assert classify_lip(parse_pattern("P10")).status == POLYNOMIAL
    assert classify_lip(parse_pattern("K13")).status == NP_COMPLETE
    assert classify_lip(parse_pattern("C5")).status == NP_COMPLETE


def test_lpc_examples():
    assert classify_lpc(parse_pattern("2P2")).status == POLYNOMIAL
    v = classify_lpc(parse_pattern("3P2"))
    assert v.status == NP_COMPLETE and "3P2" in v.reason
    assert classify_lpc(parse_pattern("2P1+P4")).status == POLYNOMIAL


def test_line_format():
    assert classify_lip(parse_pattern("P4")).line() == "LIP: P \u2014 linear forest"


def test_routes_agree_on_all_small_patterns():
    for g in nx.graph_atlas_g()[1:]:
        if g.number_of_nodes() > 6:
            break
        h = Graph.from_edges(g.nodes, g.edges)
        easy, _ = lpc_polynomial_by_containment(h)
        status, _ = lpc_case_analysis(h)
        assert (status == POLYNOMIAL) == easy
        lpc = classify_lpc(h)
        if lpc.status == POLYNOMIAL:
            assert classify_lip(h).status == POLYNOMIAL
