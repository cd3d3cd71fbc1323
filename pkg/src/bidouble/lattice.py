"""Exact integer intersection lattices.

A lattice here is a free Z-module of finite rank with a symmetric integer
pairing (the Gram matrix of the chosen basis), a distinguished polarization
class H with H^2 > 0, and a canonical class K.  Divisor classes are integer
coordinate vectors in the basis; all pairings are computed exactly with
Python integers, so results never wrap regardless of magnitude.

Presets encode the lattices the classification arguments run on:

* ``rank1_bidouble(n1,n2,n3)`` -- the rank-one sublattice Z*H of an even
  bidouble plane, with H^2 = 4 and K = (m-3)H for m = (n1+n2+n3)/2.
* ``p1xp1`` -- the two rulings of a smooth quadric, Gram [[0,1],[1,0]].
* ``delpezzo(d)`` -- the blow-up-of-the-plane lattice of a degree-d del
  Pezzo surface, Gram diag(1,-1,...,-1), H = -K = (3,-1,...,-1).
* ``k3_024`` -- the span of the four named classes on the K3 cover with
  branch degrees (0,2,4): two genus-one halves of a pulled-back tangent
  line and two pulled-back exceptional curves.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .errors import DomainError, ShapeError

__all__ = [
    "DivisorClass",
    "RationalClass",
    "IntersectionLattice",
    "pair",
    "pair_q",
    "arithmetic_genus",
    "preset_lattice",
    "rank1_bidouble_lattice",
    "p1xp1_lattice",
    "delpezzo_lattice",
    "k3_024_lattice",
    "brute_force_search",
    "PRESET_NAMES",
]


@dataclass(frozen=True)
class DivisorClass:
    """Integer coordinate vector in the basis of an ambient lattice."""

    coords: tuple[int, ...]

    def __init__(self, coords):
        object.__setattr__(self, "coords", tuple(int(c) for c in coords))

    @classmethod
    def zero(cls, rank: int) -> "DivisorClass":
        return cls((0,) * rank)

    @classmethod
    def basis(cls, rank: int, i: int) -> "DivisorClass":
        return cls(tuple(1 if j == i else 0 for j in range(rank)))

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if len(self) != len(other):
            raise ShapeError(f"cannot add classes of lengths {len(self)} and {len(other)}")
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coords))

    def __mul__(self, scalar: int) -> "DivisorClass":
        return DivisorClass(tuple(scalar * a for a in self.coords))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"DivisorClass({list(self.coords)})"


@dataclass(frozen=True)
class RationalClass:
    """A class of the form (1/m) * numerator, for candidates like (a/m)*H.

    The denominator is not reduced on construction; dividing out common
    content is an explicit step (``normalized``) because the elimination
    arguments need gcd(a, m) = 1 as a hypothesis, not as a storage format.
    """

    numerator: DivisorClass
    denominator: int

    def __post_init__(self):
        if self.denominator < 1:
            raise DomainError(f"denominator must be >= 1, got {self.denominator}")

    def normalized(self) -> "RationalClass":
        content = 0
        for c in self.numerator.coords:
            content = gcd(content, abs(c))
        g = gcd(content, self.denominator)
        if g <= 1:
            return self
        num = DivisorClass(tuple(c // g for c in self.numerator.coords))
        return RationalClass(num, self.denominator // g)

    def __repr__(self) -> str:
        return f"RationalClass({list(self.numerator.coords)} / {self.denominator})"


@dataclass(frozen=True)
class IntersectionLattice:
    """Free integer lattice with pairing, polarization H and canonical K.

    ``chi`` is not lattice data proper; it is the holomorphic Euler
    characteristic context that the Ulrich equalities need, carried by the
    presets so numerical checks can run without re-deriving it.
    """

    rank: int
    basis_labels: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]
    h: DivisorClass
    k: DivisorClass
    chi: int | None = None
    name: str = ""

    def __post_init__(self):
        if self.rank < 1:
            raise DomainError(f"rank must be positive, got {self.rank}")
        if len(self.basis_labels) != self.rank:
            raise ShapeError("basis_labels length must equal rank")
        if len(self.gram) != self.rank or any(len(row) != self.rank for row in self.gram):
            raise ShapeError("gram must be a rank x rank matrix")
        for i in range(self.rank):
            for j in range(i, self.rank):
                if self.gram[i][j] != self.gram[j][i]:
                    raise DomainError(
                        f"gram is not symmetric at ({i},{j}): "
                        f"{self.gram[i][j]} != {self.gram[j][i]}"
                    )
        if len(self.h) != self.rank or len(self.k) != self.rank:
            raise ShapeError("h and k must have coordinate length equal to rank")
        if pair(self, self.h, self.h) <= 0:
            raise DomainError("polarization must satisfy H^2 > 0")

    def basis_class(self, label: str) -> DivisorClass:
        try:
            i = self.basis_labels.index(label)
        except ValueError:
            raise DomainError(f"no basis class named {label!r} in {self.describe()}") from None
        return DivisorClass.basis(self.rank, i)

    def describe(self) -> str:
        return self.name or f"rank-{self.rank} lattice"

    # Convenience method forms; the module-level functions are the API.
    def pair(self, d1: DivisorClass, d2: DivisorClass) -> int:
        return pair(self, d1, d2)

    def genus(self, d: DivisorClass) -> Fraction:
        return arithmetic_genus(self, d)


def _check_length(lat: IntersectionLattice, d: DivisorClass) -> None:
    if len(d) != lat.rank:
        raise ShapeError(
            f"class of length {len(d)} paired in rank-{lat.rank} lattice {lat.describe()}"
        )


def pair(lat: IntersectionLattice, d1: DivisorClass, d2: DivisorClass) -> int:
    """Intersection number d1.d2 = d1^T * gram * d2, exact."""
    _check_length(lat, d1)
    _check_length(lat, d2)
    total = 0
    for i, a in enumerate(d1.coords):
        if a == 0:
            continue
        row = lat.gram[i]
        total += a * sum(g * b for g, b in zip(row, d2.coords) if b)
    return total


def pair_q(lat, x, y) -> Fraction:
    """Pairing extended to rational classes; always an exact Fraction."""
    den = 1
    if isinstance(x, RationalClass):
        den *= x.denominator
        x = x.numerator
    if isinstance(y, RationalClass):
        den *= y.denominator
        y = y.numerator
    return Fraction(pair(lat, x, y), den)


def arithmetic_genus(lat: IntersectionLattice, d: DivisorClass) -> Fraction:
    """Adjunction genus 1 + (d.d + d.K)/2 as an exact rational."""
    return 1 + Fraction(pair(lat, d, d) + pair(lat, d, lat.k), 2)


def rank1_bidouble_lattice(triple) -> IntersectionLattice:
    """Z*H for an even bidouble plane: gram [[4]], K = (m-3)H.

    Odd triples are rejected: there 2K = (n-6)H but K itself is not an
    integer multiple of H, so the parity bookkeeping runs symbolically in
    the feasibility searches instead of through a lattice.
    """
    from .geometry import validate_triple, invariants  # cycle-free: geometry never imports lattice

    t = validate_triple(triple)
    if not t.is_even:
        raise DomainError(
            f"rank1_bidouble preset needs an even triple; K is not an integer "
            f"multiple of H for {t.as_tuple()}"
        )
    m = t.n // 2
    inv = invariants(t)
    return IntersectionLattice(
        rank=1,
        basis_labels=("H",),
        gram=((4,),),
        h=DivisorClass((1,)),
        k=DivisorClass((m - 3,)),
        chi=inv.chi,
        name=f"rank1_bidouble{t.as_tuple()}",
    )


def p1xp1_lattice() -> IntersectionLattice:
    """The two rulings of a smooth quadric: gram [[0,1],[1,0]], H = (1,1)."""
    return IntersectionLattice(
        rank=2,
        basis_labels=("f1", "f2"),
        gram=((0, 1), (1, 0)),
        h=DivisorClass((1, 1)),
        k=DivisorClass((-2, -2)),
        chi=1,
        name="p1xp1",
    )


def delpezzo_lattice(degree: int) -> IntersectionLattice:
    """Blow-up-of-the-plane lattice of a degree-d del Pezzo, 1 <= d <= 9."""
    if not 1 <= degree <= 9:
        raise DomainError(f"del Pezzo degree must be in 1..9, got {degree}")
    points = 9 - degree
    rank = points + 1
    labels = ("L",) + tuple(f"e{i}" for i in range(1, points + 1))
    gram = tuple(
        tuple((1 if i == 0 else -1) if i == j else 0 for j in range(rank))
        for i in range(rank)
    )
    h = DivisorClass((3,) + (-1,) * points)
    return IntersectionLattice(
        rank=rank,
        basis_labels=labels,
        gram=gram,
        h=h,
        k=-h,
        chi=1,
        name=f"delpezzo{degree}",
    )


def k3_024_lattice() -> IntersectionLattice:
    """Span of Gamma1, Gamma2, E1', E2' on the K3 cover with degrees (0,2,4).

    Gamma1 + Gamma2 is the pullback of a line tangent to the conic branch
    curve, split into two genus-one curves; Ei' are pullbacks of two
    exceptional curves on the intermediate degree-two del Pezzo.  The Gram
    entries are forced: Gamma_i^2 = 0, Gamma1.Gamma2 = 2, Gamma_i.Ej' = 1,
    (Ei')^2 = -2, E1'.E2' = 0.
    """
    return IntersectionLattice(
        rank=4,
        basis_labels=("Gamma1", "Gamma2", "E1'", "E2'"),
        gram=(
            (0, 2, 1, 1),
            (2, 0, 1, 1),
            (1, 1, -2, 0),
            (1, 1, 0, -2),
        ),
        h=DivisorClass((1, 1, 0, 0)),
        k=DivisorClass((0, 0, 0, 0)),
        chi=2,
        name="k3_024",
    )


PRESET_NAMES = ("rank1_bidouble", "p1xp1", "delpezzo", "k3_024")


def preset_lattice(name: str, *params) -> IntersectionLattice:
    """Dispatch on preset id: rank1_bidouble(n1,n2,n3), p1xp1, delpezzo(d), k3_024.

    Also accepts the compact spelling ``delpezzoN`` used by the CLI.
    """
    if name == "rank1_bidouble":
        if len(params) == 1:
            params = tuple(params[0])
        if len(params) != 3:
            raise DomainError("rank1_bidouble takes three branch degrees")
        return rank1_bidouble_lattice(params)
    if name == "p1xp1":
        if params:
            raise DomainError("p1xp1 takes no parameters")
        return p1xp1_lattice()
    if name == "delpezzo":
        if len(params) != 1:
            raise DomainError("delpezzo takes exactly one parameter, the degree")
        return delpezzo_lattice(int(params[0]))
    if name == "k3_024":
        if params:
            raise DomainError("k3_024 takes no parameters")
        return k3_024_lattice()
    if name.startswith("delpezzo") and name[len("delpezzo"):].isdigit() and not params:
        return delpezzo_lattice(int(name[len("delpezzo"):]))
    raise DomainError(f"unknown lattice preset {name!r}; known: {', '.join(PRESET_NAMES)}")


# Above this cell count the search switches to the vectorized path,
# provided the no-overflow certificate holds.
_VECTOR_THRESHOLD = 4096
# Vectorized slices are kept to ~half a million cells to bound memory.
_CHUNK_CELLS = 1 << 19
# Boxes beyond this total are refused outright rather than ground through.
_CELL_CAP = 10**8
_INT64_SAFE = 2**62


def _int64_certificate(lat, bound, degree_target, selfint_target) -> bool:
    # |d.G.e| <= (sum |G_ij|) * bound^2 and |d.(G h)| <= sum |(G h)_i| * bound;
    # if those and the targets stay under 2^62 the int64 path cannot overflow.
    gram_mass = sum(abs(g) for row in lat.gram for g in row)
    gh = [sum(g * h for g, h in zip(row, lat.h.coords)) for row in lat.gram]
    gh_mass = sum(abs(v) for v in gh)
    return (
        gram_mass * bound * bound < _INT64_SAFE
        and gh_mass * bound < _INT64_SAFE
        and abs(degree_target) < _INT64_SAFE
        and abs(selfint_target) < _INT64_SAFE
    )


def _search_python(lat, bound, degree_target, selfint_target):
    out = []
    gh = [sum(g * h for g, h in zip(row, lat.h.coords)) for row in lat.gram]
    for coords in itertools.product(range(-bound, bound + 1), repeat=lat.rank):
        if sum(c * v for c, v in zip(coords, gh)) != degree_target:
            continue
        gd = [sum(g * c for g, c in zip(row, coords)) for row in lat.gram]
        if sum(c * v for c, v in zip(coords, gd)) == selfint_target:
            out.append(DivisorClass(coords))
    return out


def _search_numpy(lat, bound, degree_target, selfint_target):
    # The box is split as (leading axes, iterated in Python) x (tail axes,
    # vectorized); looping the leading axes lexicographically and raveling
    # the tail meshgrid in 'ij' order reproduces the pure-Python order.
    rank = lat.rank
    width = 2 * bound + 1
    tail = rank
    while tail > 1 and width**tail > _CHUNK_CELLS:
        tail -= 1
    lead = rank - tail
    vals = np.arange(-bound, bound + 1, dtype=np.int64)
    grids = np.meshgrid(*([vals] * tail), indexing="ij")
    tail_coords = np.stack([g.ravel() for g in grids], axis=-1)
    gram = np.array(lat.gram, dtype=np.int64)
    gh = gram @ np.array(lat.h.coords, dtype=np.int64)
    tail_degree = tail_coords @ gh[lead:]
    out = []
    for lead_coords in itertools.product(range(-bound, bound + 1), repeat=lead):
        lead_degree = sum(c * int(v) for c, v in zip(lead_coords, gh[:lead]))
        hits = tail_coords[tail_degree == degree_target - lead_degree]
        if not len(hits):
            continue
        full = np.empty((len(hits), rank), dtype=np.int64)
        full[:, :lead] = np.array(lead_coords, dtype=np.int64)
        full[:, lead:] = hits
        selfint = np.einsum("ij,jk,ik->i", full, gram, full)
        for row in full[selfint == selfint_target]:
            out.append(DivisorClass(tuple(int(c) for c in row)))
    return out


def brute_force_search(
    lat: IntersectionLattice,
    bound: int,
    degree_target: int,
    selfint_target: int,
) -> list[DivisorClass]:
    """All classes in the coordinate box [-bound, bound]^rank with the given
    degree d.H and self-intersection d.d, in lexicographic coordinate order.

    The box is enumerated exactly; a vectorized int64 path is used only when
    a magnitude bound proves no intermediate product can exceed 2^62, so the
    result is identical (order included) to the pure-integer enumeration.
    Boxes over 10^8 cells are refused: shrink the bound instead of waiting.
    """
    if bound < 0:
        raise DomainError(f"search bound must be >= 0, got {bound}")
    cells = (2 * bound + 1) ** lat.rank
    if cells > _CELL_CAP:
        raise DomainError(
            f"search box has {cells} cells at rank {lat.rank}, bound {bound}; "
            f"the cap is {_CELL_CAP}, pass a smaller bound"
        )
    if cells >= _VECTOR_THRESHOLD and _int64_certificate(
        lat, bound, degree_target, selfint_target
    ):
        return _search_numpy(lat, bound, degree_target, selfint_target)
    return _search_python(lat, bound, degree_target, selfint_target)
