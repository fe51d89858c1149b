"""Decks, edge-decks, and the parameters recoverable from them.

A deck stores canonical certificates, not labeled cards: the reconstruction
problem's input is unlabeled by definition. When a deck is computed from a
known graph the certificates are kept in deletion order, so card index i
corresponds to deleted vertex i (test-harness provenance); multiset
semantics are used for every comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .canon import canonical_form
from .errors import (
    AmbiguousEndpoints,
    KindMismatch,
    MalformedDeck,
    NoCandidate,
    NotProperSubgraph,
)
from .graph import Graph, bits, delete_edge, delete_vertex
from .graph6 import parse_graph6


@lru_cache(maxsize=1 << 16)
def card_graph(cert: str) -> Graph:
    """Decode a certificate into its canonical labeled graph."""
    return parse_graph6(cert)


@dataclass(frozen=True)
class Deck:
    """Multiset of vertex-deleted cards of an n-vertex graph."""

    n: int
    cards: tuple

    def sorted_cards(self):
        return tuple(sorted(self.cards))


@dataclass(frozen=True)
class EdgeDeck:
    """Multiset of edge-deleted cards; every card keeps all n vertices."""

    n: int
    cards: tuple

    def sorted_cards(self):
        return tuple(sorted(self.cards))


def compute_deck(g: Graph) -> Deck:
    if g.n < 2:
        raise ValueError("deck needs at least 2 vertices")
    return Deck(g.n, tuple(canonical_form(delete_vertex(g, v)) for v in range(g.n)))


def compute_edge_deck(g: Graph) -> EdgeDeck:
    edges = g.edges()
    if not edges:
        raise ValueError("edge deck needs at least one edge")
    return EdgeDeck(g.n, tuple(canonical_form(delete_edge(g, e)) for e in edges))


def decks_equal(a, b) -> bool:
    """Multiset equality; both arguments must be the same kind of deck."""
    if type(a) is not type(b):
        raise KindMismatch(f"cannot compare {type(a).__name__} with {type(b).__name__}")
    return a.n == b.n and sorted(a.cards) == sorted(b.cards)


def reconstruct_edge_count(d: Deck) -> int:
    """|E(G)| from the deck: sum of card sizes divided by n-2."""
    if d.n < 3:
        raise MalformedDeck("edge count recovery needs n >= 3")
    total = sum(card_graph(c).edge_count for c in d.cards)
    m, rem = divmod(total, d.n - 2)
    if rem:
        raise MalformedDeck(f"card edge total {total} not divisible by {d.n - 2}")
    return m


def deleted_vertex_degree(d: Deck, card_index: int) -> int:
    """Degree in G of the vertex whose deletion produced the given card."""
    m = reconstruct_edge_count(d)
    return m - card_graph(d.cards[card_index]).edge_count


def automorphism_count(f: Graph) -> int:
    """|Aut(f)| by permutation enumeration (patterns are small)."""
    rows = f.rows
    return sum(1 for perm in permutations(range(f.n)) if f.permute(perm).rows == rows)


def count_injective_embeddings(f: Graph, g: Graph) -> int:
    """Injective maps V(f) -> V(g) sending every edge of f to an edge of g."""
    if f.n > g.n:
        return 0
    frows, grows = f.rows, g.rows
    full = g.vertex_mask

    def rec(i, used, image):
        if i == f.n:
            return 1
        cand = full & ~used
        for j in bits(frows[i] & ((1 << i) - 1)):
            cand &= grows[image[j]]
        total = 0
        for v in bits(cand):
            image.append(v)
            total += rec(i + 1, used | (1 << v), image)
            image.pop()
        return total

    return rec(0, 0, [])


def count_subgraph_copies(g: Graph, f: Graph) -> int:
    """Distinct subgraphs of g isomorphic to f (embeddings over |Aut(f)|)."""
    emb = count_injective_embeddings(f, g)
    if emb == 0:
        return 0
    aut = automorphism_count(f)
    copies, rem = divmod(emb, aut)
    if rem:
        raise AssertionError("embedding count not divisible by automorphism count")
    return copies


def kelly_count(d: Deck, f: Graph) -> int:
    """Occurrences of a proper subgraph pattern in G, recovered from the deck."""
    if f.n >= d.n:
        raise NotProperSubgraph(f"pattern on {f.n} vertices is not proper for n={d.n}")
    total = sum(count_subgraph_copies(card_graph(c), f) for c in d.cards)
    copies, rem = divmod(total, d.n - f.n)
    if rem:
        raise MalformedDeck(f"occurrence total {total} not divisible by {d.n - f.n}")
    return copies


def edge_endpoint_degrees(ed: EdgeDeck, card_index: int):
    """Degrees in G of the endpoints of the edge deleted for this card.

    Consistency search: every non-adjacent pair of the card is tried as the
    missing edge and kept iff the completed graph has exactly this edge-deck;
    all survivors must agree on the degree pair.
    """
    h = card_graph(ed.cards[card_index])
    want = sorted(ed.cards)
    degree_pairs = set()
    for x in range(h.n):
        for y in range(x + 1, h.n):
            if h.has_edge(x, y):
                continue
            cand = h.add_edge(x, y)
            if sorted(compute_edge_deck(cand).cards) == want:
                degree_pairs.add(tuple(sorted((h.degree(x) + 1, h.degree(y) + 1))))
    if not degree_pairs:
        raise NoCandidate("no completion of the card matches the edge deck")
    if len(degree_pairs) > 1:
        raise AmbiguousEndpoints(f"surviving completions disagree: {sorted(degree_pairs)}")
    return degree_pairs.pop()


DECK_HEADER = "n="
EDGE_DECK_HEADER = "en="


def deck_to_text(deck) -> str:
    header = EDGE_DECK_HEADER if isinstance(deck, EdgeDeck) else DECK_HEADER
    return "\n".join([f"{header}{deck.n}", *deck.cards]) + "\n"


def deck_from_text(text: str):
    """Parse a deck file: `n=<int>` or `en=<int>` header, one cert per line."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MalformedDeck("empty deck file")
    header = lines[0]
    if header.startswith(EDGE_DECK_HEADER):
        kind, raw = EdgeDeck, header[len(EDGE_DECK_HEADER):]
    elif header.startswith(DECK_HEADER):
        kind, raw = Deck, header[len(DECK_HEADER):]
    else:
        raise MalformedDeck(f"bad deck header {header!r}")
    try:
        n = int(raw)
    except ValueError:
        raise MalformedDeck(f"bad deck header {header!r}") from None
    cards = tuple(lines[1:])
    if not cards:
        raise MalformedDeck("deck has no cards")
    expect = n - 1 if kind is Deck else n
    for c in cards:
        g = card_graph(c)
        if g.n != expect:
            raise MalformedDeck(f"card {c!r} has {g.n} vertices, expected {expect}")
    if kind is Deck and len(cards) != n:
        raise MalformedDeck(f"vertex deck must have n={n} cards, got {len(cards)}")
    return kind(n, cards)


def save_deck(deck, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(deck_to_text(deck))


def load_deck(path):
    with open(path, "r", encoding="ascii") as fh:
        return deck_from_text(fh.read())
