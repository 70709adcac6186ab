"""Complexity verdicts for Longest Induced Path and Longest Path Contractibility on H-free graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .graph import Graph, connected_components, contains_induced, is_forest, is_linear_forest
from .patterns import P1_P2_P3, P1_P5, P2_P4, sp1_p4

POLYNOMIAL = "polynomial"
NP_COMPLETE = "np_complete"

_SHORT = {POLYNOMIAL: "P", NP_COMPLETE: "NPc"}


@dataclass(frozen=True)
class Verdict:
    problem: str
    status: str
    reason: str

    def line(self) -> str:
        return f"{self.problem}: {_SHORT[self.status]} \u2014 {self.reason}"


def classify_lip(h: Graph) -> Verdict:
    if is_linear_forest(h):
        return Verdict("LIP", POLYNOMIAL, "linear forest")
    if not is_forest(h):
        return Verdict("LIP", NP_COMPLETE, "contains a cycle")
    return Verdict("LIP", NP_COMPLETE, "forest with a vertex of degree at least 3")


def easy_hosts(h: Graph) -> List[Tuple[str, Graph]]:
    return [
        ("P2+P4", P2_P4),
        ("P1+P2+P3", P1_P2_P3),
        ("P1+P5", P1_P5),
        (f"{h.n}P1+P4", sp1_p4(h.n)),
    ]


def lpc_polynomial_by_containment(h: Graph) -> Tuple[bool, str]:
    """Direct membership test: is h induced in one of the four maximal easy patterns?"""
    for name, host in easy_hosts(h):
        if h.n <= host.n and contains_induced(host, h, limit=max(10, h.n)) is not None:
            return True, f"induced subgraph of {name}"
    return False, ""


def lpc_case_analysis(h: Graph) -> Tuple[str, str]:
    """Status and reason obtained from the component structure of h alone."""
    if not is_forest(h):
        return NP_COMPLETE, "contains a cycle"
    if not is_linear_forest(h):
        return NP_COMPLETE, "forest with a vertex of degree at least 3"
    sizes = sorted(len(c) for c in connected_components(h))
    with_edge = [s for s in sizes if s >= 2]
    c = len(sizes)
    if not with_edge:
        return POLYNOMIAL, "edgeless, induced subgraph of sP1+P4"
    if c >= 3:
        if len(with_edge) >= 3:
            return NP_COMPLETE, "Case 1: at least three components with an edge, contains 3P2"
        if len(with_edge) == 2:
            if c >= 4:
                return NP_COMPLETE, "Case 1: two edge components and two isolated vertices, contains 2P1+2P2"
            r, s = with_edge
            if s >= 4:
                return NP_COMPLETE, f"Case 1: P1+P{r}+P{s} with s>=4, contains 2P1+2P2"
            if (r, s) == (2, 3):
                return POLYNOMIAL, "Case 1: P1+P2+P3"
            if (r, s) == (3, 3):
                return NP_COMPLETE, "Case 1: P1+2P3, contains 2P3"
            return POLYNOMIAL, "Case 1: P1+2P2, induced subgraph of P1+P5"
        r = with_edge[0]
        isolated = c - 1
        if r <= 4:
            return POLYNOMIAL, f"Case 1: {isolated}P1+P{r}, induced subgraph of sP1+P4"
        if r >= 6:
            return NP_COMPLETE, f"Case 1: {isolated}P1+P{r}, contains P6"
        return NP_COMPLETE, f"Case 1: {isolated}P1+P5, contains 2P1+2P2"
    if c == 2:
        r, s = sizes
        if r >= 3:
            return NP_COMPLETE, f"Case 2: P{r}+P{s} with r>=3, contains 2P3"
        if s >= 6:
            return NP_COMPLETE, f"Case 2: P{r}+P{s} with s>=6, contains P6"
        if s <= 4:
            return POLYNOMIAL, f"Case 2: P{r}+P{s}, induced subgraph of P2+P4"
        if r == 1:
            return POLYNOMIAL, "Case 2: P1+P5"
        return NP_COMPLETE, "Case 2: P2+P5, contains 3P2"
    r = sizes[0]
    if r <= 5:
        return POLYNOMIAL, f"Case 3: P{r}, induced subgraph of P1+P5"
    return NP_COMPLETE, f"Case 3: P{r}, contains P6"


def classify_lpc(h: Graph) -> Verdict:
    easy, _ = lpc_polynomial_by_containment(h)
    status, reason = lpc_case_analysis(h)
    expected = POLYNOMIAL if easy else NP_COMPLETE
    if status != expected:
        raise AssertionError(f"classification routes disagree on {h!r}")
    return Verdict("LPC", status, reason)
