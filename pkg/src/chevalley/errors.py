"""Exception hierarchy shared by all modules."""


class ChevalleyError(Exception):
    """Base class for every error raised by this package."""


class InconsistencyError(ChevalleyError):
    """Internal data failed a consistency check (corrupt embedding, bad table)."""


class MultiTerm(InconsistencyError):
    """A value that must be a single sign monomial has several terms."""


class MissingSymbol(ChevalleyError, KeyError):
    """A sign assignment does not cover a symbol that needs a value."""

    def __str__(self) -> str:
        return Exception.__str__(self)


class Incomplete(InconsistencyError):
    """Constant propagation stopped before every entry was determined."""


class UndefinedFactor(ChevalleyError):
    """A product of structure constants references a pair whose sum is not a root."""


class UnsupportedPair(ChevalleyError):
    """Commutator coefficient requested for an (i, j) outside the known cases."""


class NonIntegral(InconsistencyError):
    """A commutator coefficient failed to be an integer under some sign assignment."""


class OppositeRoots(ChevalleyError):
    """The commutator expansion does not apply to a pair of opposite roots."""


class EmptyDelta(ChevalleyError):
    """A root graph was requested with no fundamental roots."""


class HeightOverflow(ChevalleyError):
    """The requested commutator height exceeds the highest root."""
