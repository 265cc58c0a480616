"""Exception types shared across rcpkit."""

from __future__ import annotations


class RcpError(Exception):
    """Base class for all rcpkit errors."""


class InputError(RcpError):
    """A ring spec or table could not be turned into a ring."""


class InvalidTable(InputError):
    """Operation tables violate a ring axiom.

    ``witness`` holds the offending element triple (or pair) when one exists.
    """

    def __init__(self, message: str, witness: tuple[int, ...] | None = None):
        super().__init__(message)
        self.witness = witness


class SizeCapExceeded(RcpError):
    def __init__(self, size: int, cap: int, what: str = "ring"):
        super().__init__(f"{what} size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class IdealEnumerationCapExceeded(RcpError):
    def __init__(self, cap: int, side: str):
        super().__init__(f"more than {cap} {side} ideals; enumeration aborted")
        self.cap = cap
        self.side = side


class SideMismatch(RcpError):
    pass


class NotTwoSided(RcpError):
    pass


class NotCoprime(InputError):
    pass


class NotDescending(InputError):
    def __init__(self, index: int):
        super().__init__(f"chain is not descending at position {index}")
        self.index = index


class NotVonNeumannRegular(RcpError):
    pass


class InvariantViolation(RcpError):
    """A mathematical identity that must hold on every finite ring failed."""
