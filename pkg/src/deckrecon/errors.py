"""Exception hierarchy shared by all deckrecon modules."""


class DeckreconError(Exception):
    """Base class for all errors raised by this package."""


class OversizeGraph(DeckreconError):
    """Graph exceeds the 16-vertex capacity."""


class DisconnectedInput(DeckreconError):
    """Operation requires a connected graph."""


class MissingVertex(DeckreconError):
    pass


class MissingEdge(DeckreconError):
    pass


class KindMismatch(DeckreconError):
    """Vertex deck compared against edge deck (or vice versa)."""


class MalformedDeck(DeckreconError):
    """Deck arithmetic failed (e.g. the Kelly edge-count division)."""


class NotProperSubgraph(DeckreconError):
    pass


class AmbiguousEndpoints(DeckreconError):
    """Surviving edge-card completions disagree on the endpoint degrees."""


class NoCandidate(DeckreconError):
    """No completion of a card is consistent with the given deck."""


class NotACut(DeckreconError):
    pass


class MultipleNontrivial(DeckreconError):
    """A cut left more than one nontrivial component where at most one is possible."""


class HypothesisViolation(DeckreconError):
    """Input deck does not satisfy the procedure's hypothesis class."""


class CapExceeded(DeckreconError):
    """Requested size is above the configured brute-force cap."""


class NonUnique(DeckreconError):
    """A search that must produce a unique graph produced several."""


class AssertionFailure(DeckreconError):
    """A structural fact that must hold on the hypothesis class failed.

    The message names the violated fact; raising this on a genuine member
    would be a falsification witness, so it is never caught internally.
    """


class Graph6Error(DeckreconError):
    """Base class for graph6 codec errors."""


class BadChar(Graph6Error):
    pass


class TruncatedBits(Graph6Error):
    pass


class TrailingGarbage(Graph6Error):
    pass
