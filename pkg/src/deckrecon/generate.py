"""Orderly generation of non-isomorphic graphs.

Each isomorphism class on k+1 vertices has a unique canonical parent: the
class of the graph obtained by deleting a canonically-last vertex. A child
built by attaching a new vertex to a parent representative is kept iff its
canonical parent is that representative, so every class is produced exactly
once and parents can be expanded independently (which is what makes the
census shardable).

Hereditary constraints (triangle-free, bipartite) and degree-sequence
dominance prune the tree without losing classes, since both survive vertex
deletion.
"""

from __future__ import annotations

from .canon import _canonical, canonical_form
from .errors import CapExceeded
from .graph import (
    Graph,
    bipartition,
    bits,
    connected_components,
    delete_vertex,
)
from .graph6 import parse_graph6

ENUMERATION_CAP = 11

K1_CERT = "@"


def _submasks(mask: int):
    """All subsets of a mask, the mask itself first, empty last."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def _independent_subsets(rows, avail: int):
    """All subsets of ``avail`` spanning no edge of ``rows``."""
    if avail == 0:
        yield 0
        return
    low = avail & -avail
    v = low.bit_length() - 1
    rest = avail ^ low
    yield from _independent_subsets(rows, rest)
    for s in _independent_subsets(rows, rest & ~rows[v]):
        yield s | low


def _one_sided_subsets(g: Graph):
    """Neighborhoods that keep ``g`` plus a new vertex bipartite.

    Per component of g the new vertex may only see one color class; the
    product of those per-component choices is enumerated.
    """
    parts = bipartition(g)
    if parts is None:
        return
    p0, p1 = parts
    comp_choices = []
    for comp in connected_components(g):
        options = set(_submasks(comp & p0)) | set(_submasks(comp & p1))
        comp_choices.append(sorted(options))
    acc = [0]
    for options in comp_choices:
        acc = [base | opt for base in acc for opt in options]
    yield from acc


def _neighborhoods(parent: Graph, constraint):
    if constraint is None:
        yield from range(1 << parent.n)
    elif constraint == "triangle_free":
        yield from _independent_subsets(parent.rows, parent.vertex_mask)
    elif constraint == "bipartite":
        yield from _one_sided_subsets(parent)
    else:
        raise ValueError(f"unknown constraint {constraint!r}")


def _dominated(child: Graph, target_desc) -> bool:
    """Necessary condition for the child to extend to the target degrees."""
    degs = sorted((row.bit_count() for row in child.rows), reverse=True)
    return all(d <= t for d, t in zip(degs, target_desc))


def children_certs(parent_cert: str, constraint=None, target_degseq=None, max_edges=None):
    """Certificates of all accepted one-vertex extensions of a parent class.

    ``parent_cert`` must be the parent's own certificate (a canonical
    representative). ``target_degseq`` (sorted descending) and ``max_edges``
    optionally prune for degree-sequence-constrained searches.
    """
    parent = parse_graph6(parent_cert)
    new = parent.n
    parent_edges = parent.edge_count
    parent_degseq = parent.degree_sequence()
    accepted = set()
    rejected = set()
    for nb in _neighborhoods(parent, constraint):
        child = parent.add_vertex(nb)
        if max_edges is not None and child.edge_count > max_edges:
            continue
        if target_degseq is not None and not _dominated(child, target_degseq):
            continue
        cert, order = _canonical(child)
        if cert in accepted or cert in rejected:
            continue
        last = order[-1]
        if last != new and not _same_parent(child, last, new, parent_cert, parent_edges, parent_degseq):
            rejected.add(cert)
            continue
        accepted.add(cert)
    return sorted(accepted)


def _same_parent(child, last, new, parent_cert, parent_edges, parent_degseq):
    """Does deleting the canonically-last vertex land back on the parent?"""
    if child.degree(last) != child.degree(new):
        return False
    rest = delete_vertex(child, last)
    if rest.edge_count != parent_edges or rest.degree_sequence() != parent_degseq:
        return False
    return canonical_form(rest) == parent_cert


def enumerate_certs(n: int, constraint=None) -> list:
    """Sorted certificates of all isomorphism classes on n vertices."""
    if not 1 <= n <= ENUMERATION_CAP:
        raise CapExceeded(f"enumeration supports 1 <= n <= {ENUMERATION_CAP}, got {n}")
    level = [K1_CERT]
    for _ in range(n - 1):
        nxt = []
        for cert in level:
            nxt.extend(children_certs(cert, constraint))
        level = sorted(nxt)
    return level


def enumerate_nonisomorphic(n: int, constraint=None):
    """One canonical representative per isomorphism class on n vertices."""
    for cert in enumerate_certs(n, constraint):
        yield parse_graph6(cert)


def graphs_with_degree_sequence(n: int, degseq, bipartite_only=False) -> list:
    """All graphs (up to isomorphism) on n vertices with the given degrees.

    Orderly generation pruned by degree-sequence dominance at every level;
    exact filter at the end. Returns canonical representatives sorted by
    certificate.
    """
    target = tuple(sorted(degseq, reverse=True))
    if len(target) != n:
        raise ValueError("degree sequence length must equal n")
    if any(d < 0 or d >= n for d in target):
        return []
    if sum(target) % 2:
        return []
    max_edges = sum(target) // 2
    constraint = "bipartite" if bipartite_only else None
    level = [K1_CERT]
    for _ in range(n - 1):
        nxt = []
        for cert in level:
            nxt.extend(children_certs(cert, constraint, target, max_edges))
        level = sorted(nxt)
    out = []
    for cert in level:
        g = parse_graph6(cert)
        if g.degree_sequence() == target:
            out.append(g)
    return out
