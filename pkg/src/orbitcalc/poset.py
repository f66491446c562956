"""Hasse diagrams of the dominance order on ``G``-partitions, as DOT text."""

from __future__ import annotations

import networkx as nx

from .arthur import ArthurParameter, fourier_bound
from .errors import ParameterError, SizeError
from .groups import GroupType, _special, _valid
from .partition import ENUMERATION_CAP, Partition, dominance_leq, enumerate_partitions


def valid_partitions(G: GroupType, cap: int = ENUMERATION_CAP) -> list[Partition]:
    return [p for p in enumerate_partitions(G.partition_size, cap) if _valid(p, G)]


def hasse_diagram(G: GroupType, cap: int = ENUMERATION_CAP) -> nx.DiGraph:
    """Covering relation of dominance on valid ``G``-partitions; edges point downward."""
    nodes = valid_partitions(G, cap)
    order = nx.DiGraph()
    order.add_nodes_from(nodes)
    order.add_edges_from(
        (q, p) for q in nodes for p in nodes if p != q and dominance_leq(p, q)
    )
    cover = nx.transitive_reduction(order)
    cover.add_nodes_from(nodes)
    return cover


def _quote(p: Partition) -> str:
    return '"' + (str(p) or "[]") + '"'


def to_dot(G: GroupType, highlight: ArthurParameter | None = None, cap: int = ENUMERATION_CAP) -> str:
    """DOT digraph: specials are boxes; with ``highlight`` the Fourier bound is
    doubly outlined and everything it dominates is filled."""
    cover = hasse_diagram(G, cap)
    nodes = valid_partitions(G, cap)
    bound = None
    if highlight is not None:
        if highlight.group.partition_size != G.partition_size:
            raise SizeError(
                f"parameter bound lives on partitions of {highlight.group.partition_size}, "
                f"poset is on {G.partition_size}"
            )
        if highlight.group != G:
            raise ParameterError(f"parameter is for {highlight.group}, poset is for {G}")
        bound = fourier_bound(highlight)
    lines = [f'digraph "{G.tag()}" {{', "  rankdir=TB;"]
    for p in nodes:
        attrs = []
        if _special(p, G):
            attrs.append("shape=box")
        if bound is not None:
            if p == bound:
                attrs.append("peripheries=2")
            if dominance_leq(p, bound):
                attrs.append("style=filled")
        attr_text = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {_quote(p)}{attr_text};")
    # nodes come in descending lex order; keep edges in the same order
    rank = {p: i for i, p in enumerate(nodes)}
    for q, p in sorted(cover.edges, key=lambda e: (rank[e[0]], rank[e[1]])):
        lines.append(f"  {_quote(q)} -> {_quote(p)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
