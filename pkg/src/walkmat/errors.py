"""Exception hierarchy shared by all walkmat modules."""


class WalkmatError(Exception):
    """Base class for every error raised by this package."""


# --- exact linear algebra ---

class NoSolution(WalkmatError):
    """Linear system is inconsistent."""


class NonUnique(WalkmatError):
    """Linear system is underdetermined."""


class Singular(WalkmatError):
    """Matrix has no inverse."""


class NonInteger(WalkmatError):
    """Integer entries were required but rational ones were found."""


# --- graph construction and parsing ---

class LoopEdge(WalkmatError):
    """An edge (i, i) was supplied."""


class DuplicateEdge(WalkmatError):
    """The same edge was supplied twice."""


class IndexOutOfRange(WalkmatError):
    """A vertex index lies outside 1..n."""


class MalformedHeader(WalkmatError):
    """graph6 size header is missing or invalid."""


class TruncatedBody(WalkmatError):
    """graph6 body has fewer bytes than the order requires."""


class TrailingGarbage(WalkmatError):
    """graph6 body has extra bytes or non-zero padding bits."""


# --- walk matrices ---

class EmptySet(WalkmatError):
    """A non-empty vertex set was required."""


class NotDisjoint(WalkmatError):
    """Two vertex sets were required to be disjoint."""


# --- spectral / numeric realization ---

class RootsNotSeparated(WalkmatError):
    """Two polished polynomial roots coincide within tolerance."""


# --- reconstruction ---

class CandidateNotGraph(WalkmatError):
    """A reconstructed matrix failed 0/1-symmetric-zero-diagonal validation."""


class MissingEdgeCount(WalkmatError):
    """Rank n-2 reconstruction with a proper subset S needs the edge count."""


class NegativeDiscriminant(WalkmatError):
    """The non-main eigenvalue discriminant is negative; the input is not a
    genuine walk matrix."""


# --- canonical forms / certificates ---

class OrderMismatch(WalkmatError):
    """The two graphs have different orders."""


class TheoremViolation(WalkmatError):
    """A theorem-backed equivalence failed; indicates an implementation bug."""


# --- oracle ---

class TooLarge(WalkmatError):
    """Input exceeds the size cap of a brute-force oracle."""
