"""Reconstruction procedures and the brute-force oracle that anchors them.

Constructive routes cover triangle-free graphs of diameter 2 with
connectivity 3 (vertex deck), triangle-free graphs with both diameters 3
at connectivity 1 or >= 3 (vertex deck), and the edge-deck analogues. The
oracle searches the full (optionally constrained) space of candidate
graphs and is the ground truth every route is checked against.

Every successful result satisfies deck-of-output equality: the (edge-)deck
of the returned graph equals the input multiset exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .canon import canonical_form, is_isomorphic
from .deck import (
    Deck,
    EdgeDeck,
    card_graph,
    compute_deck,
    compute_edge_deck,
    decks_equal,
    deleted_vertex_degree,
    edge_endpoint_degrees,
    reconstruct_edge_count,
)
from .decompose import b_set_partition, class_table, components_after_cut
from .errors import (
    AssertionFailure,
    CapExceeded,
    HypothesisViolation,
    NonUnique,
)
from .generate import enumerate_certs, graphs_with_degree_sequence
from .graph import (
    INFINITY,
    Graph,
    bipartition,
    bits,
    complement,
    connected_components,
    distance_row,
    in_g2,
    in_g3,
    is_connected,
    is_triangle_free,
    mask_of,
    vertex_connectivity,
)
from .graph6 import parse_graph6

ORACLE_CAP = 10

ROUTE_THM4_CASE1 = "THM4_CASE1"
ROUTE_THM4_CASE2 = "THM4_CASE2"
ROUTE_THM4_CASE3 = "THM4_CASE3"
ROUTE_THM4_COMPLETE_BIPARTITE = "THM4_COMPLETE_BIPARTITE"
ROUTE_THM5_BIPARTITE_FALLBACK = "THM5_BIPARTITE_FALLBACK"
ROUTE_THM8_CASE1 = "THM8_CASE1"
ROUTE_THM8_CASE2 = "THM8_CASE2"
ROUTE_THM8_CASE3 = "THM8_CASE3"
ROUTE_THM10_P1 = "THM10_P1"
ROUTE_THM10_K3 = "THM10_K3"
ROUTE_THM10_P2_DEGREE = "THM10_P2_DEGREE"
ROUTE_THM10_P2_BIPARTITE_FALLBACK = "THM10_P2_BIPARTITE_FALLBACK"
ROUTE_ORACLE = "ORACLE"

ROUTES = (
    ROUTE_THM4_CASE1, ROUTE_THM4_CASE2, ROUTE_THM4_CASE3,
    ROUTE_THM4_COMPLETE_BIPARTITE, ROUTE_THM5_BIPARTITE_FALLBACK,
    ROUTE_THM8_CASE1, ROUTE_THM8_CASE2, ROUTE_THM8_CASE3,
    ROUTE_THM10_P1, ROUTE_THM10_K3, ROUTE_THM10_P2_DEGREE,
    ROUTE_THM10_P2_BIPARTITE_FALLBACK, ROUTE_ORACLE,
)


@dataclass(frozen=True)
class ReconstructionResult:
    graph: Graph
    route: str
    witness: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "route": self.route,
            "graph_g6": canonical_form(self.graph),
            "witness": self.witness,
        }


# ─── hypothesis-class predicates ───

def is_g2tf_k3(g: Graph) -> bool:
    return is_connected(g) and in_g2(g) and is_triangle_free(g) and vertex_connectivity(g) == 3


def is_g3tf_k1(g: Graph) -> bool:
    return is_connected(g) and in_g3(g) and is_triangle_free(g) and vertex_connectivity(g) == 1


def is_g3tf_k3plus(g: Graph) -> bool:
    return is_connected(g) and in_g3(g) and is_triangle_free(g) and vertex_connectivity(g) >= 3


def is_g2tf(g: Graph) -> bool:
    return is_connected(g) and in_g2(g) and is_triangle_free(g)


def is_g3tf(g: Graph) -> bool:
    return is_connected(g) and in_g3(g) and is_triangle_free(g)


# ─── oracle ───

def oracle_reconstruct(d: Deck, cap: int = ORACLE_CAP) -> list:
    """All graphs with the given deck, one canonical representative each.

    Search space: graphs whose degree sequence matches the deck-recovered
    one, enumerated by pruned orderly generation; final filter is exact
    deck equality.
    """
    n = d.n
    if n > cap:
        raise CapExceeded(f"oracle capped at n={cap}, deck has n={n}")
    if n < 3:
        candidates = [parse_graph6(c) for c in enumerate_certs(n)]
    else:
        m = reconstruct_edge_count(d)
        degs = [deleted_vertex_degree(d, i) for i in range(n)]
        if any(x < 0 or x >= n for x in degs) or sum(degs) != 2 * m:
            return []
        candidates = graphs_with_degree_sequence(n, degs)
    want = d.sorted_cards()
    return [h for h in candidates if compute_deck(h).sorted_cards() == want]


def oracle_edge_reconstruct(ed: EdgeDeck, cap: int = ORACLE_CAP, bipartite_only: bool = False) -> list:
    """All graphs with the given edge deck, via completions of one card."""
    n = ed.n
    if n > cap:
        raise CapExceeded(f"edge oracle capped at n={cap}, deck has n={n}")
    m = len(ed.cards)
    for c in ed.cards:
        if card_graph(c).edge_count != m - 1:
            return []
    anchor = card_graph(min(ed.cards))
    want = ed.sorted_cards()
    found = {}
    for x in range(n):
        for y in range(x + 1, n):
            if anchor.has_edge(x, y):
                continue
            cand = anchor.add_edge(x, y)
            if bipartite_only and bipartition(cand) is None:
                continue
            if compute_edge_deck(cand).sorted_cards() == want:
                found.setdefault(canonical_form(cand), cand)
    return [parse_graph6(c) for c in sorted(found)]


def _prevalidate(d: Deck, predicate, class_name: str, cap: int) -> Graph:
    """Oracle-backed hypothesis check used when the caller does not vouch."""
    matches = oracle_reconstruct(d, cap=cap)
    if len(matches) != 1:
        raise HypothesisViolation(
            f"deck admits {len(matches)} reconstructions; expected exactly one"
        )
    g = matches[0]
    if not predicate(g):
        raise HypothesisViolation(f"deck does not come from a {class_name} graph")
    return g


def _check_deck(candidate: Graph, d: Deck) -> bool:
    return compute_deck(candidate).sorted_cards() == d.sorted_cards()


def _check_edge_deck(candidate: Graph, ed: EdgeDeck) -> bool:
    return compute_edge_deck(candidate).sorted_cards() == ed.sorted_cards()


def _cross_check(result: Graph, oracle_graph) -> None:
    if oracle_graph is not None and not is_isomorphic(result, oracle_graph):
        raise HypothesisViolation("constructive route disagrees with the oracle")


# ─── Theorem 4: diameter 2, triangle-free, kappa = 3 ───

def _two_cuts(h: Graph):
    """Sorted vertex pairs whose removal disconnects the card."""
    cuts = []
    for a in range(h.n):
        for b in range(a + 1, h.n):
            alive = h.vertex_mask & ~((1 << a) | (1 << b))
            if len(connected_components(h, alive)) > 1:
                cuts.append((a, b))
    return cuts


def _thm4_from_card(d: Deck, h: Graph, deg_x1: int, x2: int, x3: int):
    """Reattach the deleted vertex using one kappa=2 card and one 2-cut."""
    n = d.n
    cut = (1 << x2) | (1 << x3)
    cp = components_after_cut(h, cut)
    if cp.p < 2:
        raise HypothesisViolation(f"{{{x2},{x3}}} is not a cut of the card")
    nontrivial = cp.nontrivial()
    if len(nontrivial) > 1:
        raise HypothesisViolation("card minus 2-cut has two nontrivial components")
    witness = {"card_g6": canonical_form(h), "cut": [x2, x3], "deleted_degree": deg_x1}
    if not nontrivial:
        # every component trivial: the source is complete bipartite K_{3,n-3}
        g = Graph.from_edges(n, [(i, j) for i in range(3) for j in range(3, n)])
        if not _check_deck(g, d):
            raise HypothesisViolation("complete bipartite completion does not match the deck")
        return g, ROUTE_THM4_COMPLETE_BIPARTITE, witness
    trivial_count = cp.trivial_mask().bit_count()
    d_c1_x1 = deg_x1 - trivial_count
    bsp = b_set_partition(h, x2, x3, d_c1_x1)
    witness["case"] = bsp.case
    if bsp.case == 1:
        nbrs = bsp.trivial | bsp.c1_x1_only | bsp.b12 | bsp.b13
        g = h.add_vertex(nbrs)
        if not _check_deck(g, d):
            raise HypothesisViolation("case-1 completion does not match the deck")
        return g, ROUTE_THM4_CASE1, witness
    if bsp.case == 2:
        g = h.add_vertex(bsp.trivial | bsp.c1_x1_only)
        if not _check_deck(g, d):
            raise HypothesisViolation("case-2 completion does not match the deck")
        return g, ROUTE_THM4_CASE2, witness
    # case 3: the x1-adjacent part of one L-side cannot be read off this card;
    # within an L-side all choices are twins, so try the lowest t vertices of
    # each side and let deck equality decide
    t = d_c1_x1 - bsp.c1_x1_only.bit_count()
    if t <= 0:
        raise HypothesisViolation("case-3 split with no missing neighbors")
    matches = {}
    for l_side in (bsp.l_x2, bsp.l_x3):
        chosen = list(bits(l_side))[:t]
        if len(chosen) < t:
            continue
        g = h.add_vertex(bsp.trivial | bsp.c1_x1_only | mask_of(chosen))
        if _check_deck(g, d):
            matches.setdefault(canonical_form(g), g)
    if not matches:
        raise HypothesisViolation("no case-3 completion matches the deck")
    if len(matches) > 1:
        raise HypothesisViolation(
            "two non-isomorphic case-3 completions match the deck (falsification witness)"
        )
    witness["case3_missing"] = t
    return next(iter(matches.values())), ROUTE_THM4_CASE3, witness


def reconstruct_g2_tf_k3(d: Deck, trusted: bool = False, exhaustive_cards: bool = False,
                         cap: int = ORACLE_CAP) -> ReconstructionResult:
    """Reconstruct a triangle-free diameter-2 graph with connectivity 3."""
    oracle_graph = None if trusted else _prevalidate(d, is_g2tf_k3, "G2 triangle-free kappa=3", cap)
    m = reconstruct_edge_count(d)
    chosen = []
    for cert in sorted(set(d.cards)):
        h = card_graph(cert)
        if not is_connected(h) or vertex_connectivity(h) != 2:
            continue
        deg_x1 = m - h.edge_count
        cuts = _two_cuts(h)
        if not cuts:
            continue
        if exhaustive_cards:
            chosen.extend((h, deg_x1, a, b) for a, b in cuts)
        else:
            chosen.append((h, deg_x1, *cuts[0]))
            break
    if not chosen:
        raise HypothesisViolation("no card with connectivity 2 (kappa is not 3)")
    results = [_thm4_from_card(d, h, deg, a, b) for h, deg, a, b in chosen]
    graph, route, witness = results[0]
    for other, _, _ in results[1:]:
        if not is_isomorphic(other, graph):
            raise HypothesisViolation("different cards reconstruct non-isomorphic graphs")
    if exhaustive_cards:
        witness["attempts"] = len(results)
    _cross_check(graph, oracle_graph)
    return ReconstructionResult(graph, route, witness)


# ─── Theorem 8: both diameters 3, triangle-free, kappa = 1 ───

def _component_bipartition(h: Graph, comp: int):
    """Two-color one component of h, classes in original vertex indices."""
    parts = bipartition(h)
    if parts is None:
        return None
    return parts[0] & comp, parts[1] & comp


def reconstruct_g3_tf_k1(d: Deck, trusted: bool = False, cap: int = ORACLE_CAP) -> ReconstructionResult:
    """Reconstruct a triangle-free graph with both diameters 3 and a cut vertex."""
    oracle_graph = None if trusted else _prevalidate(d, is_g3tf_k1, "G3 triangle-free kappa=1", cap)
    n = d.n
    m = reconstruct_edge_count(d)
    infos = []
    for i, cert in enumerate(d.cards):
        h = card_graph(cert)
        infos.append((cert, i, h, is_connected(h)))
    disconnected = sorted({cert for cert, _, h, conn in infos if not conn})
    if not disconnected:
        raise HypothesisViolation("every card is connected (kappa is not 1)")

    # Case 1: some disconnected card has a nontrivial component with unequal parts
    for cert in disconnected:
        h = card_graph(cert)
        comps = connected_components(h)
        nontrivial = [c for c in comps if c & (c - 1)]
        if len(nontrivial) != 1:
            raise HypothesisViolation(
                "disconnected card lacks a unique nontrivial component"
            )
        comp = nontrivial[0]
        parts = _component_bipartition(h, comp)
        if parts is None:
            raise HypothesisViolation("nontrivial component of a card is not bipartite")
        pa, pb = parts
        if pa.bit_count() == pb.bit_count():
            continue
        deg_y = m - h.edge_count
        trivial = h.vertex_mask & ~comp
        inside = deg_y - trivial.bit_count()
        if inside == pa.bit_count():
            part = pa
        elif inside == pb.bit_count():
            part = pb
        else:
            raise HypothesisViolation("deleted degree matches neither part of the component")
        g = h.add_vertex(trivial | part)
        if not _check_deck(g, d):
            raise HypothesisViolation("case-1 completion does not match the deck")
        _cross_check(g, oracle_graph)
        witness = {"card_g6": cert, "deleted_degree": deg_y, "part_size": part.bit_count()}
        return ReconstructionResult(g, ROUTE_THM8_CASE1, witness)

    # all cut vertices split their component into equal parts
    first_disc = card_graph(disconnected[0])
    disc_instances = sum(1 for _, _, _, conn in infos if not conn)
    triv_count = sum(
        1 for c in connected_components(first_disc) if not c & (c - 1)
    )
    degree_one = sorted(
        (cert, i) for cert, i, h, conn in infos if m - h.edge_count == 1
    )

    if triv_count >= 2:
        # Case 2: the unique cut vertex; find it inside a leaf-deleted card
        if disc_instances != 1:
            raise HypothesisViolation(
                "several disconnected cards but a card shows >= 2 trivial components"
            )
        for cert, i in degree_one:
            h = card_graph(cert)
            if not is_connected(h):
                continue
            cut_vertices = [
                v for v in range(h.n)
                if len(connected_components(h, h.vertex_mask & ~(1 << v))) > 1
            ]
            if len(cut_vertices) != 1:
                raise HypothesisViolation("leaf-deleted card has no unique cut vertex")
            g = h.add_vertex(1 << cut_vertices[0])
            if not _check_deck(g, d):
                raise HypothesisViolation("case-2 completion does not match the deck")
            _cross_check(g, oracle_graph)
            witness = {"card_g6": cert, "cut_vertex": cut_vertices[0]}
            return ReconstructionResult(g, ROUTE_THM8_CASE2, witness)
        raise HypothesisViolation("no connected card deleting a degree-1 vertex")

    # Case 3: every cut vertex leaves exactly one trivial component
    for cert, i in degree_one:
        h = card_graph(cert)
        if not is_connected(h):
            continue
        parts = bipartition(h)
        if parts is None:
            continue
        pa, pb = parts
        if pa.bit_count() < pb.bit_count():
            pa, pb = pb, pa
        if pa.bit_count() != pb.bit_count() + 1:
            raise HypothesisViolation("connected bipartite card has wrongly sized parts")
        anchors = [v for v in bits(pa) if h.rows[v] == pb]
        if not anchors:
            raise HypothesisViolation("no vertex of the larger part sees the whole smaller part")
        g = h.add_vertex(1 << anchors[0])
        if not _check_deck(g, d):
            raise HypothesisViolation("case-3 completion does not match the deck")
        _cross_check(g, oracle_graph)
        witness = {"card_g6": cert, "anchor": anchors[0], "anchor_choices": len(anchors)}
        return ReconstructionResult(g, ROUTE_THM8_CASE3, witness)
    raise HypothesisViolation("no connected bipartite card deleting a degree-1 vertex")


# ─── Theorem 5: both diameters 3, triangle-free, kappa >= 3 ───

@dataclass(frozen=True)
class StructureReport:
    """Checked structural facts for one (graph, minimum cut) instance."""

    case: int
    cut: int
    far_pair: tuple
    parts: tuple
    nontrivial_component: int | None
    facts: tuple


def _fact(name: str, holds: bool) -> str:
    if not holds:
        raise AssertionFailure(name)
    return name


def derive_g3_structure(g: Graph, s: int, check_preconditions: bool = True) -> StructureReport:
    """Classify a minimum cut of a qualifying graph and verify the forced facts.

    Case 1: the cut is independent; case 2: the cut spans an edge. Raises
    AssertionFailure naming the first violated fact; on a genuine member
    that would falsify the structure theory, so nothing is caught here.
    """
    if check_preconditions:
        if not is_triangle_free(g):
            raise HypothesisViolation("graph contains a triangle")
        if not (is_connected(g) and in_g3(g)):
            raise HypothesisViolation("graph or complement does not have diameter 3")
        kappa = vertex_connectivity(g)
        if kappa < 3:
            raise HypothesisViolation(f"connectivity {kappa} < 3")
        if s.bit_count() != kappa or len(connected_components(g, g.vertex_mask & ~s)) < 2:
            raise HypothesisViolation("given set is not a minimum cut")
    facts = []
    rows = g.rows
    comp_g = complement(g)
    far = []
    for u in range(g.n):
        drow = distance_row(comp_g, u)
        for v in range(u + 1, g.n):
            if drow[v] >= 3:
                far.append((u, v))
    facts.append(_fact("far_pair_exists", bool(far)))
    facts.append(_fact(
        "no_far_pair_outside_cut",
        all((s >> u & 1) or (s >> v & 1) for u, v in far),
    ))
    cp = components_after_cut(g, s)
    table = class_table(g, s, cp)
    s_has_edge = any(rows[v] & s for v in bits(s))

    if not s_has_edge:
        # Case 1: independent cut
        facts.append(_fact(
            "no_far_pair_inside_cut",
            all(not ((s >> u & 1) and (s >> v & 1)) for u, v in far),
        ))
        x1, u = min(
            (p, q) if s >> p & 1 else (q, p) for p, q in far
        )
        nontrivial = cp.nontrivial()
        facts.append(_fact("unique_nontrivial_component", len(nontrivial) == 1))
        comp1 = nontrivial[0]
        comp1_index = list(cp.components).index(comp1)
        facts.append(_fact("far_partner_sees_whole_cut", rows[u] & s == s))
        facts.append(_fact("far_partner_in_nontrivial_component", bool(comp1 >> u & 1)))
        c1_empty = table.get((comp1_index, 0), 0)
        facts.append(_fact("isolated_class_nonempty", c1_empty != 0))
        facts.append(_fact(
            "classes_contain_far_cut_vertex",
            all(
                bool(t >> x1 & 1)
                for (i, t), members in table.items()
                if i == comp1_index and t != 0 and members
            ),
        ))
        facts.append(_fact("far_partner_sees_isolated_class", rows[u] & c1_empty == c1_empty))
        facts.append(_fact(
            "trivial_components_see_whole_cut",
            all(rows[v] & s == s for v in bits(cp.trivial_mask())),
        ))
        part_a = (comp1 & ~c1_empty) | cp.trivial_mask()
        part_b = c1_empty | s
        facts.append(_fact(
            "derived_bipartition_proper",
            part_a & part_b == 0
            and part_a | part_b == g.vertex_mask
            and all(rows[v] & part_a == 0 for v in bits(part_a))
            and all(rows[v] & part_b == 0 for v in bits(part_b)),
        ))
        return StructureReport(1, s, (x1, u), (part_a, part_b), comp1, tuple(facts))

    # Case 2: the cut spans an edge
    facts.append(_fact(
        "every_component_nontrivial", all(not t for t in cp.trivial_flags)
    ))
    in_cut = [(u, v) for u, v in far if (s >> u & 1) and (s >> v & 1)]
    facts.append(_fact("far_pair_inside_cut_exists", bool(in_cut)))
    facts.append(_fact("no_mixed_far_pair", len(in_cut) == len(far)))
    x1, x2 = min(in_cut)
    facts.append(_fact("far_pair_adjacent", g.has_edge(x1, x2)))
    facts.append(_fact("no_common_neighbor_of_far_pair", rows[x1] & rows[x2] == 0))
    others = g.vertex_mask & ~(1 << x1) & ~(1 << x2)
    facts.append(_fact(
        "every_vertex_sees_far_pair", (rows[x1] | rows[x2]) & others == others
    ))
    part_a, part_b = rows[x2], rows[x1]  # N(x2) contains x1 and vice versa
    facts.append(_fact(
        "derived_bipartition_proper",
        part_a & part_b == 0
        and part_a | part_b == g.vertex_mask
        and all(rows[v] & part_a == 0 for v in bits(part_a))
        and all(rows[v] & part_b == 0 for v in bits(part_b)),
    ))
    return StructureReport(2, s, (x1, x2), (part_a, part_b), None, tuple(facts))


def reconstruct_g3_tf_k3plus(d: Deck, trusted: bool = False, cap: int = ORACLE_CAP) -> ReconstructionResult:
    """Reconstruct via the bipartite-constrained oracle.

    Both structure cases force the source to be bipartite, so the oracle
    search is restricted to bipartite candidates; the result must be unique.
    """
    oracle_graph = None if trusted else _prevalidate(d, is_g3tf_k3plus, "G3 triangle-free kappa>=3", cap)
    n = d.n
    if n > cap:
        raise CapExceeded(f"oracle capped at n={cap}, deck has n={n}")
    m = reconstruct_edge_count(d)
    degs = [deleted_vertex_degree(d, i) for i in range(n)]
    if any(x < 0 or x >= n for x in degs) or sum(degs) != 2 * m:
        raise HypothesisViolation("deck degrees are inconsistent")
    candidates = graphs_with_degree_sequence(n, degs, bipartite_only=True)
    matches = [h for h in candidates if _check_deck(h, d)]
    if not matches:
        raise HypothesisViolation("no bipartite graph matches the deck")
    if len(matches) > 1:
        raise NonUnique(f"{len(matches)} bipartite graphs match the deck (falsification witness)")
    _cross_check(matches[0], oracle_graph)
    return ReconstructionResult(matches[0], ROUTE_THM5_BIPARTITE_FALLBACK, {"bipartite_candidates": len(candidates)})


# ─── Theorem 10: edge deck, diameter 2, triangle-free ───

def compute_ph(h: Graph):
    """Unordered pairs at distance >= 3 in a card (infinity included)."""
    pairs = set()
    for u in range(h.n):
        drow = distance_row(h, u)
        for v in range(u + 1, h.n):
            if drow[v] >= 3:
                pairs.add((u, v))
    return frozenset(pairs)


def edge_reconstruct_g2_tf(ed: EdgeDeck, trusted: bool = False, start_card: int | None = None,
                           cap: int = ORACLE_CAP) -> ReconstructionResult:
    """Edge-reconstruct a triangle-free diameter-2 graph from one edge-card."""
    if len(ed.cards) < 4:
        raise HypothesisViolation("edge reconstruction needs at least 4 edges")
    oracle_graph = None
    if not trusted:
        matches = oracle_edge_reconstruct(ed, cap=cap)
        if len(matches) != 1:
            raise HypothesisViolation(
                f"edge deck admits {len(matches)} reconstructions; expected exactly one"
            )
        oracle_graph = matches[0]
        if not is_g2tf(oracle_graph):
            raise HypothesisViolation("edge deck does not come from a G2 triangle-free graph")
    if start_card is None:
        card_cert = min(ed.cards)
        card_index = ed.cards.index(card_cert)
    else:
        card_index = start_card
        card_cert = ed.cards[card_index]
    h = card_graph(card_cert)
    ph = compute_ph(h)
    witness = {"card_g6": card_cert, "ph_size": len(ph)}

    def finish(g: Graph, route: str) -> ReconstructionResult:
        if not _check_edge_deck(g, ed):
            raise HypothesisViolation("completion does not match the edge deck")
        _cross_check(g, oracle_graph)
        return ReconstructionResult(g, route, witness)

    if not ph:
        raise HypothesisViolation("edge-card has no pair at distance >= 3")
    if len(ph) == 1:
        x, y = next(iter(ph))
        witness["added"] = [x, y]
        return finish(h.add_edge(x, y), ROUTE_THM10_P1)
    if len(ph) >= 3:
        mult: dict = {}
        for x, y in ph:
            mult[x] = mult.get(x, 0) + 1
            mult[y] = mult.get(y, 0) + 1
        heavy = sorted(v for v, c in mult.items() if c >= 2)
        if len(heavy) > 2 or not heavy:
            raise HypothesisViolation("distance->=3 pairs do not concentrate on two vertices")
        if len(heavy) == 2:
            witness["added"] = heavy
            return finish(h.add_edge(*heavy), ROUTE_THM10_K3)
        x = heavy[0]
        if any(x not in pair for pair in ph):
            raise HypothesisViolation("a distance->=3 pair avoids the common vertex")
        partners = sorted({p for pair in ph for p in pair if p != x})
        centers = [
            v for v in partners
            if all(h.has_edge(v, w) for w in partners if w != v)
        ]
        if len(centers) != 1:
            raise HypothesisViolation("partners do not induce a star in the card")
        witness["added"] = [x, centers[0]]
        return finish(h.add_edge(x, centers[0]), ROUTE_THM10_K3)

    # |P_H| = 2: the pairs share one vertex u, partners v1 and v2
    (a1, b1), (a2, b2) = sorted(ph)
    shared = {a1, b1} & {a2, b2}
    if len(shared) != 1:
        raise HypothesisViolation("the two distance->=3 pairs do not share a vertex")
    u = shared.pop()
    v1, v2 = sorted(({a1, b1} | {a2, b2}) - {u})
    if not h.has_edge(v1, v2):
        raise HypothesisViolation("partner vertices are not adjacent in the card")
    witness["shared"] = u
    if h.degree(v1) != h.degree(v2):
        pair = list(edge_endpoint_degrees(ed, card_index))
        du = h.degree(u) + 1
        if du not in pair:
            raise HypothesisViolation("endpoint degree pair misses the shared vertex")
        pair.remove(du)
        dv = pair[0]
        if h.degree(v1) + 1 == dv:
            v = v1
        elif h.degree(v2) + 1 == dv:
            v = v2
        else:
            raise HypothesisViolation("endpoint degree pair matches neither partner")
        witness["added"] = [u, v]
        return finish(h.add_edge(u, v), ROUTE_THM10_P2_DEGREE)
    delta = h.degree(v1)
    if h.degree(u) + 1 != delta:
        # the card deleting v1v2 would separate the partners by degree; cards
        # are unlabeled, so the same information is extracted by testing both
        # completions for edge-deck consistency
        matches = {}
        for v in (v1, v2):
            g = h.add_edge(u, v)
            if _check_edge_deck(g, ed):
                matches.setdefault(canonical_form(g), (g, v))
        if not matches:
            raise HypothesisViolation("neither partner completion matches the edge deck")
        if len(matches) > 1:
            raise HypothesisViolation(
                "both partner completions match the edge deck (falsification witness)"
            )
        g, v = next(iter(matches.values()))
        witness["added"] = [u, v]
        witness["second_card"] = True
        _cross_check(g, oracle_graph)
        return ReconstructionResult(g, ROUTE_THM10_P2_DEGREE, witness)
    # degrees tie on the second card as well: every edge joins degrees d, d+1,
    # so the source is bipartite; fall back to the constrained completion search
    matches = oracle_edge_reconstruct(ed, cap=cap, bipartite_only=True)
    if not matches:
        raise HypothesisViolation("no bipartite graph matches the edge deck")
    if len(matches) > 1:
        raise NonUnique(f"{len(matches)} bipartite graphs match the edge deck")
    witness["bipartite_fallback"] = True
    g = matches[0]
    if not _check_edge_deck(g, ed):
        raise HypothesisViolation("fallback completion does not match the edge deck")
    _cross_check(g, oracle_graph)
    return ReconstructionResult(g, ROUTE_THM10_P2_BIPARTITE_FALLBACK, witness)


# ─── Theorem 11: edge deck, both diameters 3, triangle-free ───

def edge_reconstruct_g3_tf(ed: EdgeDeck, trusted: bool = False, cap: int = ORACLE_CAP) -> ReconstructionResult:
    """Edge-reconstruct a triangle-free graph with both diameters 3.

    The deck is recovered through the completion oracle (the constructive
    deck-from-edge-deck step is out of scope), then the vertex-deck routes
    dispatch on connectivity; all routes must agree.
    """
    matches = oracle_edge_reconstruct(ed, cap=cap)
    if len(matches) != 1:
        raise HypothesisViolation(
            f"edge deck admits {len(matches)} reconstructions; expected exactly one"
        )
    h0 = matches[0]
    if not is_g3tf(h0):
        raise HypothesisViolation("edge deck does not come from a G3 triangle-free graph")
    d = compute_deck(h0)
    kappa = vertex_connectivity(h0)
    if kappa == 1:
        res = reconstruct_g3_tf_k1(d, trusted=True)
    elif kappa == 2:
        vertex_matches = oracle_reconstruct(d, cap=cap)
        if len(vertex_matches) != 1:
            raise HypothesisViolation("vertex deck of the recovered graph is ambiguous")
        res = ReconstructionResult(vertex_matches[0], ROUTE_ORACLE, {"kappa": 2})
    else:
        res = reconstruct_g3_tf_k3plus(d, trusted=True, cap=cap)
    if not is_isomorphic(res.graph, h0):
        raise HypothesisViolation("vertex-deck route disagrees with the edge oracle")
    if not _check_edge_deck(res.graph, ed):
        raise HypothesisViolation("result does not match the edge deck")
    witness = dict(res.witness)
    witness["kappa"] = kappa
    return ReconstructionResult(res.graph, res.route, witness)
