"""Exception hierarchy shared by the whole package.

Every domain error raised by the library derives from FiloopError, so the
command line interface can map any of them to a single exit code.
"""

from __future__ import annotations


class FiloopError(Exception):
    """Base class for all domain errors."""


class LetterCountError(FiloopError):
    """A word is not a double-occurrence word."""


class FramingError(FiloopError):
    """A framing does not assign opposite values to the two slots of a chord."""


class RootError(FiloopError):
    """A root chord (or root leaf) is missing or ambiguous."""


class IntervalError(FiloopError):
    """An interval pair does not delimit a sub chord diagram."""


class ArityError(FiloopError):
    """A composition was given the wrong number of parts."""


class ParityError(FiloopError):
    """A parity constraint (even degree, even weight, ...) is violated."""


class NotBicolourable(FiloopError):
    """The graph has a vertex of odd degree, so no bicolouring exists."""


class NotGaussian(FiloopError):
    """The graph fails one of the evenness or cocycle conditions."""


class NotCircleGraph(FiloopError):
    """The graph is not the interlace graph of any chord diagram."""


class NotDegenerate(FiloopError):
    """The graph is neither a clique nor a star."""


class NotPrime(FiloopError):
    """The graph admits a split (or is too small to be prime)."""


class NotCL2(FiloopError):
    """No weighting satisfies the weighted evenness and cocycle conditions."""


class Disconnected(FiloopError):
    """The operation requires a connected graph."""


class MalformedGLT(FiloopError):
    """A graph-labelled tree violates a structural invariant."""


class NotALeaf(FiloopError):
    """A tree vertex expected to be a leaf is an internal node."""
