"""Top-level verdicts: Ulrich line-bundle status and Ulrich complexity.

The decision tree, on the sorted triple:

line bundles
    odd cover                  -> impossible   (odd-rank parity obstruction)
    (0,2,2), (0,2,4)           -> exists       (certified low-degree cases)
    (0,2,2n), n >= 3           -> impossible   (quadric discriminant route)
    (0,4,2n) n >= 2, (2,2,2n)  -> open         (neither route decides)
    any other even cover       -> impossible   (rho = 1, rank-1 elimination)

complexity uc(S, H)
    odd cover                  -> uc > 1       (lower bound only)
    T2 = {(0,2,2), (0,2,4)}    -> uc = 1
    T1 = {(0,4,2n) n >= 2} u {(2,2,2n) n >= 1} -> 1 <= uc <= 2
    other even covers          -> uc = 2

Every "impossible" verdict is re-derived on the spot by the matching
argument in ``numerics`` (parity, rank-1 elimination, or discriminant),
and every upper bound uc <= 2 is witnessed by a verified rank-two recipe.
Existence is never concluded from numerics alone: the two "exists" cases
rest on certified constructions, which is why the numerics module has no
"feasible implies exists" path for them to abuse.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .citations import (
    COR_NO_LINE,
    LEM_ODD_RANK,
    LEM_RHO_ONE,
    PROP_LOW_DEGREE,
    PROP_QUADRIC,
    REM_OPEN,
    THM_COMPLEXITY,
    THM_LINE_RANGE,
    THM_PICARD,
    THM_RANK_TWO,
)
from .construction import special_rank2_recipe, verify_recipe
from .errors import ConsistencyError, DomainError
from .geometry import picard_classification, validate_triple
from .lattice import brute_force_search, delpezzo_lattice
from .numerics import (
    UlrichCandidate,
    check_numerical_ulrich,
    odd_rank_obstruction,
    p1xp1_line_search,
    rank1_rho1_search,
    verify_024_certificate,
)

__all__ = [
    "LineBundleStatus",
    "ComplexityVerdict",
    "in_t1",
    "in_t2",
    "line_bundle_status",
    "ulrich_complexity",
]

_T2 = ((0, 2, 2), (0, 2, 4))


def in_t2(t) -> bool:
    """Sorted triple lies in T2 = {(0,2,2), (0,2,4)}: certified uc = 1."""
    return validate_triple(t).as_tuple() in _T2


def in_t1(t) -> bool:
    """Sorted triple lies in T1 = {(0,4,2n): n >= 2} u {(2,2,2n): n >= 1}."""
    n1, n2, n3 = validate_triple(t).as_tuple()
    if n3 % 2 != 0:
        return False
    return ((n1, n2) == (0, 4) and n3 >= 4) or ((n1, n2) == (2, 2) and n3 >= 2)


@dataclass(frozen=True)
class LineBundleStatus:
    """Existence verdict for Ulrich line bundles, with its justification."""

    status: str  # "exists" | "impossible" | "open"
    reason: str
    citations: tuple[str, ...]

    def __post_init__(self):
        if self.status not in ("exists", "impossible", "open"):
            raise DomainError(f"unknown line-bundle status {self.status!r}")


@dataclass(frozen=True)
class ComplexityVerdict:
    """Ulrich complexity: exact value, two-sided bound, or lower bound only."""

    kind: str  # "exact" | "upper_bound" | "lower_bound_only"
    value: int | None
    bounds: tuple[int, int | None] | None
    trail: tuple[str, ...]

    def __post_init__(self):
        if self.kind == "exact":
            if self.value not in (1, 2):
                raise DomainError(f"exact complexity must be 1 or 2, got {self.value}")
            if self.bounds is not None:
                raise DomainError("exact verdicts carry no separate bounds")
        elif self.kind == "upper_bound":
            if self.value is not None or self.bounds != (1, 2):
                raise DomainError("upper_bound verdicts carry bounds (1, 2) and no value")
        elif self.kind == "lower_bound_only":
            if self.value is not None or self.bounds != (2, None):
                raise DomainError("lower_bound_only verdicts carry bounds (2, None)")
        else:
            raise DomainError(f"unknown complexity kind {self.kind!r}")


@cache
def _delpezzo4_conic_witness() -> UlrichCandidate:
    # The (0,2,2) cover is a degree-4 del Pezzo; a conic class with
    # D.H = 4, D^2 = 2 satisfies both Ulrich equalities at rank 1.
    lat = delpezzo_lattice(4)
    hits = brute_force_search(lat, bound=3, degree_target=4, selfint_target=2)
    for d in hits:
        cand = UlrichCandidate(d, 0, 1)
        if check_numerical_ulrich(lat, cand):
            return cand
    raise ConsistencyError(
        f"no rank-1 Ulrich witness found on delpezzo(4) within bound 3 ({PROP_LOW_DEGREE})"
    )


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ConsistencyError(message)


def line_bundle_status(t) -> LineBundleStatus:
    """Does the cover admit an Ulrich line bundle for the pulled-back
    polarization?  Each branch re-runs the argument that decides it."""
    t = validate_triple(t)
    n1, n2, n3 = t.as_tuple()

    if not t.is_even:
        verdict = odd_rank_obstruction(t, 1)
        _require(
            verdict.status == "infeasible_parity",
            f"parity obstruction failed to fire on odd triple {t.as_tuple()} ({LEM_ODD_RANK})",
        )
        return LineBundleStatus(
            status="impossible",
            reason=f"odd covers admit no odd-rank Ulrich bundles, in particular no "
            f"line bundles: 2 c1.K would be the odd integer n(n-6) ({LEM_ODD_RANK})",
            citations=(LEM_ODD_RANK,),
        )

    if t.as_tuple() == (0, 2, 4):
        report = verify_024_certificate()
        _require(
            report.passed,
            f"(0,2,4) certificate did not verify ({PROP_LOW_DEGREE})",
        )
        return LineBundleStatus(
            status="exists",
            reason=f"certified line bundle on the K3-type cover: D = H + Gamma1 + "
            f"E1' - E2' with D.H = 6, D^2 = 4 ({PROP_LOW_DEGREE})",
            citations=(PROP_LOW_DEGREE,),
        )

    if t.as_tuple() == (0, 2, 2):
        witness = _delpezzo4_conic_witness()
        _require(
            witness.rank == 1,
            f"(0,2,2) del Pezzo witness has wrong rank ({PROP_LOW_DEGREE})",
        )
        return LineBundleStatus(
            status="exists",
            reason=f"the cover is a degree-4 del Pezzo surface and a conic class "
            f"(D.H = 4, D^2 = 2) is an Ulrich line bundle ({PROP_LOW_DEGREE})",
            citations=(PROP_LOW_DEGREE,),
        )

    if (n1, n2) == (0, 2):
        quadric_n = n3 // 2
        verdict = p1xp1_line_search(quadric_n)
        _require(
            verdict.status == "infeasible_search",
            f"quadric route unexpectedly fed candidates for {t.as_tuple()} ({PROP_QUADRIC})",
        )
        return LineBundleStatus(
            status="impossible",
            reason=f"a line bundle would descend to the quadric with a + b = "
            f"{quadric_n + 1}m', 2ab = {quadric_n}m'^2; the discriminant needs "
            f"{quadric_n}^2 + 1 = {quadric_n * quadric_n + 1} to be a perfect square, "
            f"and it is not ({PROP_QUADRIC})",
            citations=(PROP_QUADRIC,),
        )

    if in_t1(t):
        return LineBundleStatus(
            status="open",
            reason=f"the cover has Picard number > 1, so the rank-1 elimination does "
            f"not apply, and no construction is certified either way "
            f"({THM_LINE_RANGE}, {REM_OPEN})",
            citations=(THM_LINE_RANGE, REM_OPEN),
        )

    pic = picard_classification(t)
    _require(
        pic.rho_is_one,
        f"even triple {t.as_tuple()} escaped every family branch but has rho > 1 "
        f"({THM_PICARD})",
    )
    verdict = rank1_rho1_search(t)
    _require(
        verdict.status == "infeasible_search",
        f"rank-1 elimination did not conclude on {t.as_tuple()} ({LEM_RHO_ONE})",
    )
    return LineBundleStatus(
        status="impossible",
        reason=f"the cover has Picard number one ({THM_PICARD}) and the rank-1 "
        f"elimination over c1 = (a/q)H closes every case ({LEM_RHO_ONE})",
        citations=(LEM_RHO_ONE, THM_PICARD),
    )


def ulrich_complexity(t) -> ComplexityVerdict:
    """Smallest rank of an Ulrich bundle, as far as it is decided.

    Even covers always carry a verified rank-two witness (outside (0,2,2),
    whose rank-one bundle settles it), so the even verdicts differ only in
    whether rank one is possible, impossible, or open.
    """
    t = validate_triple(t)

    if not t.is_even:
        verdict = odd_rank_obstruction(t, 1)
        _require(
            verdict.status == "infeasible_parity",
            f"parity obstruction failed to fire on odd triple {t.as_tuple()} ({LEM_ODD_RANK})",
        )
        return ComplexityVerdict(
            kind="lower_bound_only",
            value=None,
            bounds=(2, None),
            trail=(THM_COMPLEXITY, LEM_ODD_RANK),
        )

    if in_t2(t):
        lb = line_bundle_status(t)
        _require(
            lb.status == "exists",
            f"T2 triple {t.as_tuple()} lost its existence certificate ({PROP_LOW_DEGREE})",
        )
        if t.as_tuple() == (0, 2, 2):
            return ComplexityVerdict(
                kind="exact",
                value=1,
                bounds=None,
                trail=(THM_COMPLEXITY, PROP_LOW_DEGREE),
            )
        _verified_recipe(t)
        return ComplexityVerdict(
            kind="exact",
            value=1,
            bounds=None,
            trail=(THM_COMPLEXITY, PROP_LOW_DEGREE, THM_RANK_TWO),
        )

    _verified_recipe(t)
    if in_t1(t):
        return ComplexityVerdict(
            kind="upper_bound",
            value=None,
            bounds=(1, 2),
            trail=(THM_COMPLEXITY, THM_RANK_TWO, REM_OPEN),
        )

    lb = line_bundle_status(t)
    _require(
        lb.status == "impossible",
        f"even triple {t.as_tuple()} outside T1 u T2 should have no line bundle "
        f"({COR_NO_LINE})",
    )
    return ComplexityVerdict(
        kind="exact",
        value=2,
        bounds=None,
        trail=(THM_COMPLEXITY, COR_NO_LINE) + lb.citations + (THM_RANK_TWO,),
    )


def _verified_recipe(t):
    # Upper bound uc <= 2, witnessed constructively and checked line by line.
    recipe = special_rank2_recipe(t)
    verify_recipe(t, recipe)  # raises ConsistencyError on any failed check
    return recipe
