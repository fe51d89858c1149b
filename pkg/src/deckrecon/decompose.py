"""Cut-set component and class machinery.

Removing a cut set S from G leaves components C_1..C_p; each component is
partitioned into classes keyed by the exact neighbor subset of S. Keys are
vertex masks rather than index lists so the same machinery serves cut sets
of any size. ``b_set_partition`` implements the finer split of the unique
nontrivial component that the diameter-2 reconstruction works on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HypothesisViolation, MultipleNontrivial, NotACut
from .graph import Graph, bits, connected_components


@dataclass(frozen=True)
class ComponentPartition:
    """Components of g - cut, ordered by lowest vertex."""

    cut: int
    components: tuple
    trivial_flags: tuple

    @property
    def p(self) -> int:
        return len(self.components)

    def trivial_mask(self) -> int:
        m = 0
        for comp, triv in zip(self.components, self.trivial_flags):
            if triv:
                m |= comp
        return m

    def nontrivial(self):
        return [c for c, t in zip(self.components, self.trivial_flags) if not t]


def components_after_cut(g: Graph, s: int) -> ComponentPartition:
    """Components of g - s with trivial flags; p may be 1 (caller checks)."""
    if s & ~g.vertex_mask:
        raise ValueError("cut mask references vertices outside the graph")
    alive = g.vertex_mask & ~s
    if not alive:
        raise ValueError("cut removes every vertex")
    comps = tuple(connected_components(g, alive))
    return ComponentPartition(s, comps, tuple(c & (c - 1) == 0 for c in comps))


def class_table(g: Graph, s: int, cp: ComponentPartition) -> dict:
    """Map (component index, neighbor-subset-of-S mask) -> class mask.

    Only nonempty classes appear; together they partition each component.
    """
    rows = g.rows
    table: dict = {}
    for i, comp in enumerate(cp.components):
        for v in bits(comp):
            key = (i, rows[v] & s)
            table[key] = table.get(key, 0) | (1 << v)
    return table


@dataclass(frozen=True)
class BSetPartition:
    """Split of the nontrivial component of a card minus a 2-cut.

    ``case`` is 1, 2 or 3. The b-sets are resolved for cases 1 and 2 and
    None for case 3, where the split cannot be read off a single card and
    the reconstructor decides by deck equality.
    """

    case: int
    x2: int
    x3: int
    comp1: int
    trivial: int
    c1_x1_only: int  # adjacent to neither x2 nor x3: the class seen only by x1
    c1_both: int     # adjacent to both x2 and x3
    a2: int
    a3: int
    l_x2: int
    l_x3: int
    b2: int | None
    b3: int | None
    b12: int | None
    b13: int | None


def b_set_partition(h: Graph, x2: int, x3: int, d_c1_x1: int) -> BSetPartition:
    """Partition the nontrivial component of h - {x2,x3} into the proof sets.

    ``h`` is a card G - x1 of a triangle-free diameter-2 graph, {x2,x3} a
    2-cut of h, and ``d_c1_x1`` the number of neighbors x1 has inside the
    nontrivial component (deleted-vertex degree minus the vertices of the
    trivial components).
    """
    cut = (1 << x2) | (1 << x3)
    cp = components_after_cut(h, cut)
    if cp.p < 2:
        raise NotACut(f"{{{x2},{x3}}} does not disconnect the card")
    nontrivial = cp.nontrivial()
    if len(nontrivial) > 1:
        raise MultipleNontrivial("card minus 2-cut has more than one nontrivial component")
    if not nontrivial:
        raise HypothesisViolation("all components trivial: complete bipartite case")
    comp1 = nontrivial[0]
    rows = h.rows
    n2 = rows[x2] & comp1
    n3 = rows[x3] & comp1
    c1_x1_only = comp1 & ~n2 & ~n3
    c1_both = n2 & n3
    side2 = n2 & ~n3
    side3 = n3 & ~n2
    a2 = 0
    for v in bits(side2):
        if rows[v] & c1_x1_only:
            a2 |= 1 << v
    a3 = 0
    for v in bits(side3):
        if rows[v] & c1_x1_only:
            a3 |= 1 << v
    l_x2 = side2 & ~a2
    l_x3 = side3 & ~a3
    # vertices of one L-side not fully joined to the other are the x1-adjacent ones
    not_joined_2 = 0
    for v in bits(l_x2):
        if rows[v] & l_x3 != l_x3:
            not_joined_2 |= 1 << v
    not_joined_3 = 0
    for v in bits(l_x3):
        if rows[v] & l_x2 != l_x2:
            not_joined_3 |= 1 << v
    if not_joined_2 and not_joined_3:
        case = 1
        b12, b13 = not_joined_2, not_joined_3
        b2, b3 = l_x2 ^ b12, l_x3 ^ b13
    elif c1_x1_only.bit_count() == d_c1_x1:
        case = 2
        b12 = b13 = 0
        b2, b3 = l_x2, l_x3
    else:
        case = 3
        b2 = b3 = b12 = b13 = None
    return BSetPartition(
        case=case, x2=x2, x3=x3, comp1=comp1, trivial=cp.trivial_mask(),
        c1_x1_only=c1_x1_only, c1_both=c1_both, a2=a2, a3=a3,
        l_x2=l_x2, l_x3=l_x3, b2=b2, b3=b3, b12=b12, b13=b13,
    )
