"""Canonical labeling and isomorphism testing.

The certificate of a graph is the graph6 encoding of its canonical
relabeling: the lexicographically minimal upper-triangle bit encoding
reachable by equitable partition refinement plus backtracking over the
first non-singleton cell. Two graphs get equal certificates iff they are
isomorphic.

A pure minimum-over-all-permutations fallback (``brute_force_*``) is kept
for small n as the independent oracle the test suite checks against.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .errors import OversizeGraph
from .graph import MAX_VERTICES, Graph, bits
from .graph6 import emit_graph6, parse_graph6


def _refine(rows, cells):
    """Equitable ordered-partition refinement, in place.

    Cells are split by neighbor counts into the splitter cell, sub-cells
    ordered by count; scanning restarts whenever a split happens so the
    result depends only on the ordered-partition structure.
    """
    bc = int.bit_count
    i = 0
    while i < len(cells):
        splitter = cells[i]
        split_any = False
        j = 0
        while j < len(cells):
            cell = cells[j]
            if cell & (cell - 1):
                groups = {}
                m = cell
                while m:
                    low = m & -m
                    c = bc(rows[low.bit_length() - 1] & splitter)
                    groups[c] = groups.get(c, 0) | low
                    m ^= low
                if len(groups) > 1:
                    cells[j : j + 1] = [groups[c] for c in sorted(groups)]
                    split_any = True
                    j += len(groups) - 1
            j += 1
        i = 0 if split_any else i + 1
    return cells


def _is_homogeneous(rows, cells):
    """True when every completion of the partition yields one encoding.

    Requires every non-singleton cell to be a clique or independent set and
    every pair of non-singleton cells to be completely joined or unjoined.
    (Adjacency to singleton cells is already uniform in an equitable
    partition.)
    """
    nontrivial = [c for c in cells if c & (c - 1)]
    for c in nontrivial:
        first = rows[(c & -c).bit_length() - 1] & c
        want_clique = first != 0
        for v in bits(c):
            inside = rows[v] & c
            if want_clique:
                if inside != c ^ (1 << v):
                    return False
            elif inside:
                return False
    for a in range(len(nontrivial)):
        ca = nontrivial[a]
        for b in range(a + 1, len(nontrivial)):
            cb = nontrivial[b]
            uniform = None
            for v in bits(ca):
                out = rows[v] & cb
                if out not in (0, cb):
                    return False
                if uniform is None:
                    uniform = out
                elif out != uniform:
                    return False
    return True


def _canon_search(rows, n):
    """Return (encoding columns, order) of the minimal reachable labeling."""
    best_enc = None
    best_order = None

    def encode_order(order):
        cols = []
        for k in range(1, n):
            row = rows[order[k]]
            col = 0
            for i in range(k):
                col = col << 1 | (row >> order[i] & 1)
            cols.append(col)
        return cols

    def consider(order):
        nonlocal best_enc, best_order
        cols = encode_order(order)
        if best_enc is None or cols < best_enc:
            best_enc = cols
            best_order = list(order)

    def walk(cells, fixed, cols):
        nonlocal best_enc, best_order
        # extend the singleton prefix and its encoding columns
        while len(fixed) < len(cells):
            cell = cells[len(fixed)]
            if cell & (cell - 1):
                break
            v = cell.bit_length() - 1
            if fixed:
                row = rows[v]
                col = 0
                for u in fixed:
                    col = col << 1 | (row >> u & 1)
                cols.append(col)
            fixed.append(v)
        if best_enc is not None:
            k = len(cols)
            if cols > best_enc[:k]:
                return
        if len(fixed) == n:
            if best_enc is None or cols < best_enc:
                best_enc = cols[:]
                best_order = fixed[:]
            return
        if _is_homogeneous(rows, cells):
            order = []
            for c in cells:
                order.extend(bits(c))
            consider(order)
            return
        t = len(fixed)
        target = cells[t]
        base_fixed = len(fixed)
        base_cols = len(cols)
        for v in bits(target):
            child = cells[:t] + [1 << v, target ^ (1 << v)] + cells[t + 1 :]
            _refine(rows, child)
            walk(child, fixed, cols)
            del fixed[base_fixed:]
            del cols[base_cols:]

    if n == 1:
        return [], [0]
    root = _refine(rows, [(1 << n) - 1])
    walk(root, [], [])
    return best_enc, best_order


@lru_cache(maxsize=1 << 18)
def _canonical(g: Graph):
    """(certificate, order) with order[i] = original vertex at position i."""
    if g.n > MAX_VERTICES:
        raise OversizeGraph(f"canonical labeling capped at {MAX_VERTICES} vertices")
    _, order = _canon_search(g.rows, g.n)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    canon = g.permute(pos)
    return emit_graph6(canon), tuple(order)


def canonical_form(g: Graph) -> str:
    """Certificate: graph6 line of the canonically relabeled graph."""
    return _canonical(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """The canonical relabeling of g as a labeled graph."""
    return parse_graph6(_canonical(g)[0])


def canonical_order(g: Graph) -> tuple:
    """Canonical labeling as a tuple: position -> original vertex."""
    return _canonical(g)[1]


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)


BRUTE_FORCE_CAP = 7


def brute_force_canonical_form(g: Graph) -> str:
    """Minimum graph6 line over all n! relabelings (test oracle, n <= 7)."""
    if g.n > BRUTE_FORCE_CAP:
        raise OversizeGraph(f"brute-force canonical form capped at n={BRUTE_FORCE_CAP}")
    best = None
    for perm in permutations(range(g.n)):
        s = emit_graph6(g.permute(perm))
        if best is None or s < best:
            best = s
    return best


def brute_force_is_isomorphic(g: Graph, h: Graph) -> bool:
    """n!-permutation isomorphism check (test oracle, n <= 7)."""
    if g.n != h.n:
        return False
    if g.n > BRUTE_FORCE_CAP:
        raise OversizeGraph(f"brute-force isomorphism capped at n={BRUTE_FORCE_CAP}")
    target = h.rows
    for perm in permutations(range(g.n)):
        if g.permute(perm).rows == target:
            return True
    return False
