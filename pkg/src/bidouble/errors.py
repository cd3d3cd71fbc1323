"""Exception hierarchy shared by all bidouble modules.

Input-side problems derive from DomainError (a ValueError): the caller gave
us a triple, a lattice, or a search request that violates a precondition.
ConsistencyError is different in kind: it means two independent computation
routes that must agree did not, i.e. an implementation bug, never a user
error.  The CLI maps DomainError to exit code 2 and ConsistencyError to 3.
"""


class DomainError(ValueError):
    """Invalid input: a precondition on the arguments does not hold."""


class ShapeError(DomainError):
    """Coordinate vector length does not match the ambient lattice rank."""


class ParityError(DomainError):
    """Branch degrees of mixed parity (cf. Def. 2.7)."""


class DisconnectedError(DomainError):
    """Two or more zero branch degrees: the cover would be disconnected."""


class ExcludedCaseError(DomainError):
    """Input lies in a case the rank-two recipe explicitly excludes."""


class ConsistencyError(RuntimeError):
    """Two routes that must agree disagreed.  Always an implementation bug."""
