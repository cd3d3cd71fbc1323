"""Numerical Ulrich conditions and the non-existence arguments.

For a rank-r bundle E on a polarized surface (S, H) with canonical class K
and holomorphic Euler characteristic chi, being Ulrich forces two exact
Chern-number equalities:

    (2.1)   c1(E).H = (r/2) (3H + K).H
    (2.2)   c2(E)   = (c1^2 - c1.K)/2 - r (H^2 - chi)

This module evaluates them in exact rational arithmetic and replays the
case analyses that rule line bundles out on bidouble planes:

* ``odd_rank_obstruction`` -- on an odd cover, 2 c1.K = rank * n * (n-6)
  must be even because c1.K is an integer; odd rank makes it odd.
* ``rank1_rho1_search`` -- on an even cover with Picard number one, writing
  c1 = (a/q)H and running both equalities eliminates every denominator
  q in {1, 2, 4}.
* ``p1xp1_line_search`` -- the quadric route for covers of type (0,2,2n):
  a line bundle O(a,b) pushed through the norm construction must satisfy
  a + b = (n+1)m' and 2ab = nm'^2 for some m' in {1,2}; the discriminant
  of the resulting quadratic is 4m'^2(n^2+1), and n^2+1 is never a
  perfect square for n >= 1.

Every verdict carries a step-by-step trace with statement citations so the
eliminations can be audited line by line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .citations import (
    COR_SPECIAL,
    LEM_ODD_RANK,
    LEM_RHO_ONE,
    PROP_LOW_DEGREE,
    PROP_NUMERICAL,
    PROP_QUADRIC,
    REM_NORM,
    THM_RANK_TWO,
)
from .errors import ConsistencyError, DomainError
from .geometry import invariants, validate_triple
from .lattice import (
    DivisorClass,
    IntersectionLattice,
    RationalClass,
    k3_024_lattice,
    pair_q,
)
from .reports import CheckLine, Report

__all__ = [
    "UlrichCandidate",
    "TraceStep",
    "FeasibilityVerdict",
    "check_numerical_ulrich",
    "SpecialTargets",
    "special_ulrich_targets",
    "odd_rank_obstruction",
    "rank1_rho1_search",
    "p1xp1_line_search",
    "is_perfect_square",
    "verify_024_certificate",
    "VERDICT_STATUSES",
]


@dataclass(frozen=True)
class UlrichCandidate:
    """Chern data (c1, c2, rank) of a candidate bundle."""

    c1: DivisorClass | RationalClass
    c2: int
    rank: int

    def __post_init__(self):
        if not isinstance(self.rank, int) or isinstance(self.rank, bool) or self.rank < 1:
            raise DomainError(f"rank must be a positive integer, got {self.rank!r}")
        if not isinstance(self.c2, int) or isinstance(self.c2, bool):
            raise DomainError(f"c2 must be an integer, got {self.c2!r}")
        if self.rank == 1 and self.c2 != 0:
            raise DomainError(f"a rank-1 candidate has c2 = 0, got {self.c2}")


@dataclass(frozen=True)
class TraceStep:
    step: str
    cite: str

    def render(self) -> str:
        return f"{self.step} [{self.cite}]"


VERDICT_STATUSES = (
    "infeasible_parity",
    "infeasible_search",
    "feasible_candidates",
    "not_applicable",
)


@dataclass(frozen=True)
class FeasibilityVerdict:
    """Outcome of one elimination argument or search.

    ``not_applicable`` is the neutral status for obstructions that are
    vacuous on the given input (an even product in the parity argument).
    """

    status: str
    trace: tuple[TraceStep, ...]
    candidates: tuple[UlrichCandidate, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.status not in VERDICT_STATUSES:
            raise DomainError(f"unknown verdict status {self.status!r}")
        if (self.status == "feasible_candidates") != bool(self.candidates):
            raise ConsistencyError(
                f"status {self.status} inconsistent with {len(self.candidates)} candidates"
            )

    @property
    def feasible(self) -> bool:
        return self.status == "feasible_candidates"

    def render(self) -> str:
        lines = [step.render() for step in self.trace]
        lines.append(f"verdict: {self.status}")
        for cand in self.candidates:
            lines.append(f"  candidate: c1 = {cand.c1}, c2 = {cand.c2}, rank = {cand.rank}")
        return "\n".join(lines)


def check_numerical_ulrich(
    lat: IntersectionLattice,
    cand: UlrichCandidate,
    chi: int | None = None,
) -> bool:
    """Exact test of Equalities (2.1) and (2.2) for cand on lat.

    chi defaults to the lattice's carried value; passing it explicitly
    overrides.  With neither available the equalities are not defined and
    the call is a usage error.
    """
    if chi is None:
        chi = lat.chi
    if chi is None:
        raise DomainError(
            f"chi is required for the second Ulrich equality; {lat.describe()} "
            f"carries none and no override was passed"
        )
    r = cand.rank
    c1 = cand.c1
    three_h_plus_k = 3 * lat.h + lat.k
    degree_ok = pair_q(lat, c1, lat.h) == Fraction(r, 2) * pair_q(lat, three_h_plus_k, lat.h)
    c1_sq = pair_q(lat, c1, c1)
    c1_k = pair_q(lat, c1, lat.k)
    h_sq = pair_q(lat, lat.h, lat.h)
    c2_ok = Fraction(cand.c2) == (c1_sq - c1_k) / 2 - r * (h_sq - chi)
    return degree_ok and c2_ok


@dataclass(frozen=True)
class SpecialTargets:
    """Forced Chern numbers of a rank-2 special Ulrich bundle: c1 = mH
    numerically, c2 = M."""

    c1_coefficient: int
    c2: int


def special_ulrich_targets(t) -> SpecialTargets:
    """(m, M) for an even triple, with M computed along two independent
    routes that must agree:

        route 1:  M = m^2 + m1^2 + m2^2 + m3^2
        route 2:  c2 = (5 H^2 + 3 H.K)/2 + 2 chi

    Route 2 is the rank-2 specialization of Equality (2.2) at c1 = mH;
    a mismatch would mean the invariant formulas are broken, so it raises.
    """
    t = validate_triple(t)
    if not t.is_even:
        raise DomainError(f"special Ulrich targets need an even triple, got {t.as_tuple()}")
    inv = invariants(t)
    m = t.m
    m1, m2, m3 = t.halves
    route1 = m * m + m1 * m1 + m2 * m2 + m3 * m3
    route2 = Fraction(5 * inv.h_squared + 3 * inv.h_dot_k, 2) + 2 * inv.chi
    if route1 != route2:
        raise ConsistencyError(
            f"special c2 mismatch on {t.as_tuple()}: M = {route1} ({THM_RANK_TWO}) vs "
            f"{route2} ({COR_SPECIAL})"
        )
    return SpecialTargets(c1_coefficient=m, c2=route1)


def odd_rank_obstruction(t, rank: int) -> FeasibilityVerdict:
    """Parity obstruction: 2 c1.K = rank * n * (n-6) must be even.

    Returns infeasible_parity when the product is odd (odd cover, odd
    rank); otherwise the obstruction is vacuous and the verdict says so.
    """
    t = validate_triple(t)
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 1:
        raise DomainError(f"rank must be a positive integer, got {rank!r}")
    n = t.n
    product = rank * n * (n - 6)
    trace = [
        TraceStep(
            f"Equality (2.1) pairs with K: 2 c1.K = rank * (3H + K).K = rank * n * (n - 6) "
            f"= {rank} * {n} * {n - 6} = {product}",
            LEM_ODD_RANK,
        )
    ]
    if product % 2 == 1:
        trace.append(
            TraceStep(
                f"2 c1.K would equal the odd integer {product}, but c1.K is an integer, "
                f"so 2 c1.K is even: contradiction",
                LEM_ODD_RANK,
            )
        )
        return FeasibilityVerdict("infeasible_parity", tuple(trace))
    trace.append(
        TraceStep(
            f"{product} is even: the parity obstruction does not apply "
            f"(parity {t.parity}, rank {rank})",
            LEM_ODD_RANK,
        )
    )
    return FeasibilityVerdict("not_applicable", tuple(trace))


def rank1_rho1_search(t) -> FeasibilityVerdict:
    """Replay of the rank-1 elimination on an even cover with rho = 1.

    Any line bundle is numerically (a/q)H with gcd(a, q) = 1; Equality
    (2.1) reads 4a/q = n, so q divides 4.  q = 4 and q = 2 die by parity,
    and q = 1 substituted into Equality (2.2) clears denominators to
    n1^2 + n2^2 + n3^2 = 0, impossible for an admissible triple.
    """
    t = validate_triple(t)
    if not t.is_even:
        raise DomainError(f"rank-1 elimination applies to even triples, got {t.as_tuple()}")
    n1, n2, n3 = t.as_tuple()
    n = t.n
    chi = invariants(t).chi
    trace = [
        TraceStep(
            f"write c1 = (a/q)H with gcd(a, q) = 1; Equality (2.1): "
            f"c1.H = (3H + K).H / 2 = n1 + n2 + n3 = {n}, so 4a/q = {n} and q divides 4",
            LEM_RHO_ONE,
        ),
        TraceStep("cases q in {1, 2, 4}", LEM_RHO_ONE),
        TraceStep(
            f"q = 4: a = n = {n} is even, contradicting gcd(a, 4) = 1",
            LEM_RHO_ONE,
        ),
    ]
    a2 = n // 2
    rhs2 = 8 - 2 * chi
    if a2 % 2 == 0:
        trace.append(
            TraceStep(
                f"q = 2: a = n/2 = {a2} is even, contradicting gcd(a, 2) = 1",
                LEM_RHO_ONE,
            )
        )
    else:
        lhs2 = a2 * a2 - a2 * (n - 6)
        trace.append(
            TraceStep(
                f"q = 2: a = n/2 = {a2}; Equality (2.2) forces a^2 - a(n - 6) = {lhs2} "
                f"to equal 8 - 2 chi = {rhs2}, an even number, but a^2 - a(n - 6) is "
                f"congruent to a = {a2} mod 2: contradiction",
                LEM_RHO_ONE,
            )
        )
    # q = 1: substitute a = n/4 into Equality (2.2) as exact rationals.
    a1 = Fraction(n, 4)
    residual_eq = 2 * a1 * a1 - a1 * (n - 6) - 4 + chi
    sum_sq = n1 * n1 + n2 * n2 + n3 * n3
    if 8 * residual_eq != sum_sq:
        raise ConsistencyError(
            f"q = 1 reduction identity failed on {t.as_tuple()}: "
            f"8 * ({residual_eq}) != {sum_sq} ({LEM_RHO_ONE})"
        )
    trace.append(
        TraceStep(
            f"q = 1: Equality (2.1) gives a = n/4 = {a1}; substituting into Equality (2.2) "
            f"and clearing denominators leaves n1^2 + n2^2 + n3^2 = 0",
            LEM_RHO_ONE,
        )
    )
    trace.append(
        TraceStep(
            f"n1^2 + n2^2 + n3^2 = {sum_sq} != 0",
            LEM_RHO_ONE,
        )
    )
    return FeasibilityVerdict("infeasible_search", tuple(trace))


def is_perfect_square(value: int) -> bool:
    """Exact integer square test; negative input is a usage error."""
    if value < 0:
        raise DomainError(f"perfect-square test needs a nonnegative integer, got {value}")
    r = isqrt(value)
    return r * r == value


def _quadric_box_solutions(n: int, mprime: int, bound: int) -> list[tuple[int, int]]:
    # a + b = (n+1)m' pins b once a is chosen, so the box scan is linear.
    s = (n + 1) * mprime
    target = n * mprime * mprime
    out = []
    for a in range(-bound, bound + 1):
        b = s - a
        if -bound <= b <= bound and 2 * a * b == target:
            out.append((a, b))
    return out


def p1xp1_line_search(n: int, bound: int | None = None) -> FeasibilityVerdict:
    """Ulrich line bundles O(a,b) on the quadric route for a (0,2,2n) cover.

    For each m' in {1, 2} (the norm construction has order at most two),
    the conditions are a + b = (n+1)m' and 2ab = nm'^2, giving the
    quadratic 2a^2 - 2m'(n+1)a + m'^2 n = 0 with discriminant
    4m'^2 (n^2 + 1).  Integer solutions need n^2 + 1 to be a perfect
    square, which fails for every n >= 1.  A brute-force scan of the box
    |a|, |b| <= bound (default 10(n+1)) must reach the same verdict.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"quadric parameter n must be a positive integer, got {n!r}")
    if bound is None:
        bound = 10 * (n + 1)
    if bound < 0:
        raise DomainError(f"search bound must be >= 0, got {bound}")
    trace = []
    candidates: list[UlrichCandidate] = []
    square = is_perfect_square(n * n + 1)
    for mprime in (1, 2):
        trace.append(
            TraceStep(
                f"m' = {mprime} (the norm of the pulled-back bundle has order <= 2): "
                f"impose a + b = (n + 1)m' = {(n + 1) * mprime} and "
                f"2ab = n m'^2 = {n * mprime * mprime}",
                REM_NORM,
            )
        )
        trace.append(
            TraceStep(
                f"eliminate b: 2a^2 - {2 * mprime * (n + 1)}a + {mprime * mprime * n} = 0, "
                f"discriminant 4 m'^2 (n^2 + 1) = {4 * mprime * mprime * (n * n + 1)}",
                PROP_QUADRIC,
            )
        )
        if not square:
            trace.append(
                TraceStep(
                    f"n^2 + 1 = {n * n + 1} is not a perfect square "
                    f"(isqrt = {isqrt(n * n + 1)}), so no integer root",
                    PROP_QUADRIC,
                )
            )
            continue
        # Defensive branch: cannot occur for n >= 1, but report honestly.
        root = isqrt(n * n + 1)
        for sign in (1, -1):
            num = mprime * ((n + 1) + sign * root)
            if num % 2 == 0:
                a = num // 2
                b = (n + 1) * mprime - a
                candidates.append(UlrichCandidate(DivisorClass((a, b)), 0, 1))
                trace.append(
                    TraceStep(f"integer root a = {a}, b = {b}", PROP_QUADRIC)
                )
    box_solutions = []
    for mprime in (1, 2):
        box_solutions.extend(_quadric_box_solutions(n, mprime, bound))
    trace.append(
        TraceStep(
            f"brute-force cross-check over the box |a|, |b| <= {bound}: "
            f"{len(box_solutions)} solution(s)",
            PROP_QUADRIC,
        )
    )
    if bool(box_solutions) != bool(candidates):
        raise ConsistencyError(
            f"quadric discriminant route and box search disagree for n = {n}, "
            f"bound = {bound}: {len(candidates)} vs {len(box_solutions)} solutions "
            f"({PROP_QUADRIC})"
        )
    if candidates:
        return FeasibilityVerdict("feasible_candidates", tuple(trace), tuple(candidates))
    return FeasibilityVerdict("infeasible_search", tuple(trace))


def verify_024_certificate() -> Report:
    """Recompute the intersection numbers behind the (0,2,4) existence proof.

    On the k3_024 preset, D = H + Gamma1 + E1' - E2' is the certified
    Ulrich class; F = D - H and F' = Gamma1 - E2' are the two classes
    whose non-effectivity the proof needs.  All pairings are recomputed
    exactly; the h^0 vanishing they feed is recorded, not recomputed.
    """
    lat = k3_024_lattice()
    h = lat.h
    gamma1 = lat.basis_class("Gamma1")
    e1 = lat.basis_class("E1'")
    e2 = lat.basis_class("E2'")
    d = h + gamma1 + e1 - e2
    f = d - h
    fprime = gamma1 - e2

    numbers = (
        ("D.H", lat.pair(d, h), 6),
        ("D.D", lat.pair(d, d), 4),
        ("F.F", lat.pair(f, f), -4),
        ("H.F", lat.pair(h, f), 2),
        ("F.E1'", lat.pair(f, e1), -1),
        ("F'.F'", lat.pair(fprime, fprime), -4),
        ("H.F'", lat.pair(h, fprime), 0),
        ("H.E1'", lat.pair(h, e1), 2),
        ("H.E2'", lat.pair(h, e2), 2),
    )
    lines = [
        CheckLine(
            label=label,
            detail=f"computed {got}, expected {want}",
            mode="verified",
            cite=PROP_LOW_DEGREE,
            ok=got == want,
        )
        for label, got, want in numbers
    ]
    ulrich_ok = check_numerical_ulrich(lat, UlrichCandidate(d, 0, 1))
    lines.append(
        CheckLine(
            label="Equalities (2.1)-(2.2)",
            detail=f"c1 = D, c2 = 0, rank 1 on {lat.describe()} (chi = {lat.chi}): "
            f"{'satisfied' if ulrich_ok else 'violated'}",
            mode="verified",
            cite=PROP_NUMERICAL,
            ok=ulrich_ok,
        )
    )
    lines.append(
        CheckLine(
            label="h^0 vanishing",
            detail="h^0 of -F, F, F' and their twists vanish as the proof requires; "
            "recorded, not recomputed",
            mode="paper-certified",
            cite=PROP_LOW_DEGREE,
        )
    )
    report = Report(
        title="Ulrich line bundle certificate for branch degrees (0, 2, 4)",
        lines=tuple(lines),
    )
    if not report.passed:
        failed = ", ".join(line.label for line in report.lines if not line.ok)
        raise ConsistencyError(
            f"certificate mismatch on k3_024: {failed} ({PROP_LOW_DEGREE})"
        )
    return report
