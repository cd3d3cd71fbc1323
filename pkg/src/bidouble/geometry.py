"""Branch triples, surface invariants, and the Picard-number classification.

A bidouble plane here is the smooth minimal surface obtained from a
(Z/2)^2-cover of the projective plane branched along three general curves
of degrees n1 <= n2 <= n3.  Smoothness of the cover forces all three
degrees to share a parity, and connectedness fails as soon as two of them
vanish, so those inputs are rejected up front rather than producing
invariants of a surface that does not exist.

Invariants of the cover S with n = n1+n2+n3:

    K^2   = (n - 6)^2            H^2 = 4       H.K = 2(n - 6)
    chi   = 4 + (n1^2 + n2^2 + n3^2 + n1*n2 + n1*n3 + n2*n3 - 6n) / 4
    q     = 0

and, in the even case with m = n/2 and mi = ni/2, the rank-two targets

    m  (the H-coefficient of c1)      M = m^2 + m1^2 + m2^2 + m3^2.

The Picard number of S is computed through the three intermediate double
covers: S -> Y_i, where Y_i is the double plane branched along the union
of the two curves of degrees (a, b) complementary to n_i.  rho(S) = 1
exactly when all three intermediate covers have rho(Y) = 1, and the pairs
with rho(Y) > 1 are, up to order, (0,2), (0,4), (1,3) and (2,2)
(Thm. 1.1).  That rule is cross-checked against the explicit list of
sorted jump families on every call.
"""

from __future__ import annotations

from dataclasses import dataclass

from .citations import (
    COR_PICARD,
    DEF_BIDOUBLE,
    LEM_INTERMEDIATE,
    LEM_RESOLUTION,
    PROP_INVARIANTS,
    PROP_PAIRS,
    REM_CONNECTED,
    THM_PICARD,
)
from .errors import DisconnectedError, DomainError, ConsistencyError, ParityError

__all__ = [
    "BranchTriple",
    "validate_triple",
    "SurfaceInvariants",
    "invariants",
    "IntermediatePicard",
    "intermediate_picard",
    "picard_jump_family",
    "picard_classification",
    "PicardClassification",
]


@dataclass(frozen=True)
class BranchTriple:
    """Sorted, validated branch degrees of a bidouble plane."""

    n1: int
    n2: int
    n3: int

    def __post_init__(self):
        degrees = (self.n1, self.n2, self.n3)
        for d in degrees:
            if not isinstance(d, int) or isinstance(d, bool):
                raise DomainError(f"branch degrees must be integers, got {d!r}")
            if d < 0:
                raise DomainError(f"branch degrees must be nonnegative, got {d}")
        if not (self.n1 <= self.n2 <= self.n3):
            raise DomainError(f"branch degrees must be sorted, got {degrees}")
        if len({d % 2 for d in degrees}) != 1:
            raise ParityError(
                f"branch degrees must share a parity for the cover to be smooth, "
                f"got {degrees} ({DEF_BIDOUBLE})"
            )
        if sum(1 for d in degrees if d == 0) >= 2:
            raise DisconnectedError(
                f"at least two zero branch degrees disconnect the cover, "
                f"got {degrees} ({REM_CONNECTED})"
            )

    @property
    def parity(self) -> str:
        return "even" if self.n1 % 2 == 0 else "odd"

    @property
    def is_even(self) -> bool:
        return self.n1 % 2 == 0

    @property
    def n(self) -> int:
        return self.n1 + self.n2 + self.n3

    @property
    def m(self) -> int:
        """Half the total degree; only meaningful in the even case."""
        if not self.is_even:
            raise DomainError(f"m = n/2 needs an even triple, got {self.as_tuple()}")
        return self.n // 2

    @property
    def halves(self) -> tuple[int, int, int]:
        if not self.is_even:
            raise DomainError(f"halves need an even triple, got {self.as_tuple()}")
        return (self.n1 // 2, self.n2 // 2, self.n3 // 2)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n1, self.n2, self.n3)

    def __iter__(self):
        return iter(self.as_tuple())


def validate_triple(triple) -> BranchTriple:
    """Coerce to a BranchTriple, sorting first; raises the specific
    DomainError subclass naming which admissibility condition failed."""
    if isinstance(triple, BranchTriple):
        return triple
    degrees = tuple(triple)
    if len(degrees) != 3:
        raise DomainError(f"expected three branch degrees, got {len(degrees)}")
    for d in degrees:
        if not isinstance(d, int) or isinstance(d, bool):
            raise DomainError(f"branch degrees must be integers, got {d!r}")
    return BranchTriple(*sorted(degrees))


@dataclass(frozen=True)
class SurfaceInvariants:
    """Numerical invariants of the cover, all exact integers.

    ``m`` and ``big_m`` are the special rank-two targets; they are None
    for odd triples, where c1 is not an integer multiple of H.
    """

    k_squared: int
    chi: int
    h_squared: int
    h_dot_k: int
    q: int
    n: int
    m: int | None
    big_m: int | None


def invariants(triple) -> SurfaceInvariants:
    """Invariants of the bidouble plane with the given branch degrees."""
    t = validate_triple(triple)
    n1, n2, n3 = t.as_tuple()
    n = t.n
    sigma2 = n1 * n2 + n1 * n3 + n2 * n3
    chi_num = 16 + n1 * n1 + n2 * n2 + n3 * n3 + sigma2 - 6 * n
    if chi_num % 4 != 0:
        raise ConsistencyError(
            f"chi formula produced a non-integer for {t.as_tuple()}: {chi_num}/4 "
            f"({PROP_INVARIANTS})"
        )
    if t.is_even:
        m = t.m
        m1, m2, m3 = t.halves
        big_m = m * m + m1 * m1 + m2 * m2 + m3 * m3
    else:
        m = None
        big_m = None
    return SurfaceInvariants(
        k_squared=(n - 6) ** 2,
        chi=chi_num // 4,
        h_squared=4,
        h_dot_k=2 * (n - 6),
        q=0,
        n=n,
        m=m,
        big_m=big_m,
    )


@dataclass(frozen=True)
class IntermediatePicard:
    """Picard data of one intermediate double plane Y branched in degrees
    (a, b), a <= b, with both parities equal and a + b > 0."""

    a: int
    b: int
    rho: int
    rho_resolution: int | None
    cite: str


# The four unordered pairs whose double plane has rho(Y) > 1 (Thm. 1.1).
_JUMP_PAIRS = frozenset({(0, 2), (0, 4), (1, 3), (2, 2)})


def intermediate_picard(a: int, b: int) -> IntermediatePicard:
    """rho of the double plane branched along general curves of degrees a, b.

    For a + b >= 6 the branch curve has degree >= 6, the double plane is of
    general type with rho(Y) = 1 and its resolution picks up one class per
    node: rho = 1 + a*b (Lemma 3.2).  For a + b = 4 the resolution is the
    degree-two del Pezzo with rho = 8, minus the a*b nodes imposed.  For
    a + b = 2 the cover is the plane ((1,1), rho 1) or the quadric ((0,2),
    rho 2) and no separate resolution value applies.
    """
    if a > b:
        a, b = b, a
    if a < 0:
        raise DomainError(f"branch degrees must be nonnegative, got ({a}, {b})")
    if (a - b) % 2 != 0:
        raise ParityError(f"intermediate branch degrees must share a parity, got ({a}, {b})")
    if a + b == 0:
        raise DomainError("intermediate branch curve cannot be empty")

    if a + b >= 6:
        return IntermediatePicard(a, b, rho=1, rho_resolution=1 + a * b, cite=LEM_RESOLUTION)
    if a + b == 4:
        return IntermediatePicard(a, b, rho=8 - a * b, rho_resolution=8, cite=PROP_PAIRS)
    # a + b == 2: (1,1) is the plane again, (0,2) is the quadric.
    if (a, b) == (1, 1):
        return IntermediatePicard(a, b, rho=1, rho_resolution=None, cite=PROP_PAIRS)
    return IntermediatePicard(a, b, rho=2, rho_resolution=None, cite=PROP_PAIRS)


# Sorted-triple membership tests for the four jump families (Thm. 1.1).
def picard_jump_family(triple) -> str | None:
    """Name of the jump family containing the sorted triple, or None.

    The families are (0,2,2n) n>=1, (0,4,2n) n>=2, (1,3,odd) together with
    (1,1,3), and (2,2,2n) n>=1; every other admissible triple has rho = 1.
    """
    t = validate_triple(triple)
    n1, n2, n3 = t.as_tuple()
    if (n1, n2) == (0, 2):
        return "(0,2,2n)"
    if (n1, n2) == (0, 4) and n3 >= 4:
        return "(0,4,2n)"
    if (n1, n2, n3) == (1, 1, 3) or ((n1, n2) == (1, 3) and n3 >= 3):
        return "(1,3,odd)"
    if (n1, n2) == (2, 2):
        return "(2,2,2n)"
    return None


@dataclass(frozen=True)
class PicardClassification:
    """rho(S) = 1 verdict with the intermediate covers that break it."""

    triple: tuple[int, int, int]
    rho_is_one: bool
    witnesses: tuple[IntermediatePicard, ...]
    family: str | None
    cite: str = THM_PICARD


def picard_classification(triple) -> PicardClassification:
    """Decide rho(S) = 1 through the three intermediate double planes.

    The witnesses list every intermediate cover with rho(Y) > 1, in the
    fixed order (n2,n3), (n1,n3), (n1,n2); repeated pairs are reported
    once per occurrence.  The pairwise verdict is cross-checked against
    the closed-form family list and a disagreement raises ConsistencyError.
    """
    t = validate_triple(triple)
    n1, n2, n3 = t.as_tuple()
    witnesses = []
    for a, b in ((n2, n3), (n1, n3), (n1, n2)):
        y = intermediate_picard(a, b)
        if y.rho > 1:
            witnesses.append(y)
    rho_is_one = not witnesses
    family = picard_jump_family(t)
    if rho_is_one != (family is None):
        raise ConsistencyError(
            f"pairwise rho test ({LEM_INTERMEDIATE}, {COR_PICARD}) and family list "
            f"({THM_PICARD}) disagree on {t.as_tuple()}"
        )
    return PicardClassification(
        triple=t.as_tuple(),
        rho_is_one=rho_is_one,
        witnesses=tuple(witnesses),
        family=family,
    )
