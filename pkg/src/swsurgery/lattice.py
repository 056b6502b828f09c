"""Finitely generated integral lattices with symmetric bilinear forms.

All homology bookkeeping in the package reduces to exact arithmetic on these
lattices: integer coordinate vectors against a fixed ordered basis of named
generators, paired through an integer Gram matrix.  No floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exactmat import (
    bareiss_det,
    freeze,
    gauss_rank,
    is_symmetric,
    kernel_rows,
    symmetric_diagonalize,
)


class LatticeMismatchError(ValueError):
    """Classes from two different lattices were combined."""


class DegenerateFormError(ValueError):
    """A nondegenerate form was required but the Gram matrix has a radical."""

    def __init__(self, message: str, radical=None):
        super().__init__(message)
        self.radical = radical


@dataclass(frozen=True)
class IntersectionLattice:
    """Free abelian group with an integer symmetric pairing.

    ``relative=True`` permits degenerate forms (plumbing interiors); closed
    manifolds always carry nondegenerate forms.
    """

    basis: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]
    name: str = ""
    relative: bool = False

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(str(b) for b in self.basis))
        object.__setattr__(self, "gram", freeze(tuple(int(x) for x in row) for row in self.gram))
        if len(set(self.basis)) != len(self.basis):
            raise ValueError("basis labels must be unique")
        if len(self.gram) != len(self.basis):
            raise ValueError("gram size does not match basis")
        if not is_symmetric(self.gram):
            raise ValueError("gram matrix must be symmetric")
        if not self.relative and self.rank and bareiss_det(self.gram) == 0:
            raise DegenerateFormError(
                f"lattice {self.name or '<unnamed>'} is degenerate; "
                "pass relative=True for plumbing interiors",
                radical=_radical_vector(self.gram),
            )

    @property
    def rank(self) -> int:
        return len(self.basis)

    def index_of(self, label: str) -> int:
        try:
            return self.basis.index(label)
        except ValueError:
            raise KeyError(f"no basis label {label!r} in lattice {self.name!r}") from None

    def basis_class(self, label: str) -> "HomologyClass":
        i = self.index_of(label)
        return HomologyClass(self, tuple(1 if j == i else 0 for j in range(self.rank)))

    def zero(self) -> "HomologyClass":
        return HomologyClass(self, (0,) * self.rank)

    def element(self, coords) -> "HomologyClass":
        return HomologyClass(self, tuple(int(c) for c in coords))

    def to_dict(self) -> dict:
        return {"basis": list(self.basis), "gram": [list(r) for r in self.gram]}

    @classmethod
    def from_dict(cls, data: dict, name: str = "", relative: bool = False):
        return cls(tuple(data["basis"]), freeze(data["gram"]), name=name, relative=relative)


def same_lattice(a: IntersectionLattice, b: IntersectionLattice) -> bool:
    return a.basis == b.basis and a.gram == b.gram


@dataclass(frozen=True)
class HomologyClass:
    lattice: IntersectionLattice
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if len(self.coords) != self.lattice.rank:
            raise ValueError(
                f"coordinate length {len(self.coords)} != lattice rank {self.lattice.rank}"
            )

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        _require_same(self, other)
        return HomologyClass(self.lattice, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "HomologyClass") -> "HomologyClass":
        _require_same(self, other)
        return HomologyClass(self.lattice, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(self.lattice, tuple(-a for a in self.coords))

    def __mul__(self, n: int) -> "HomologyClass":
        return HomologyClass(self.lattice, tuple(n * a for a in self.coords))

    __rmul__ = __mul__

    def pair(self, other: "HomologyClass") -> int:
        return pair(self, other)

    def square(self) -> int:
        return pair(self, self)

    def to_dict(self, lattice_id: str | None = None) -> dict:
        return {"lattice": lattice_id or self.lattice.name, "coords": list(self.coords)}


def _require_same(x: HomologyClass, y: HomologyClass):
    if not same_lattice(x.lattice, y.lattice):
        raise LatticeMismatchError(
            f"classes live in different lattices ({x.lattice.name!r} vs {y.lattice.name!r})"
        )


def pair(x: HomologyClass, y: HomologyClass) -> int:
    """Intersection pairing x . y = x^T G y; symmetric and bilinear."""
    _require_same(x, y)
    gram = x.lattice.gram
    total = 0
    for i, xi in enumerate(x.coords):
        if xi:
            row = gram[i]
            total += xi * sum(row[j] * yj for j, yj in enumerate(y.coords) if yj)
    return total


def square(x: HomologyClass) -> int:
    return pair(x, x)


def is_characteristic(k: HomologyClass) -> bool:
    """True iff k . x == x . x mod 2 for every x (checked on the basis)."""
    gram = k.lattice.gram
    for i in range(k.lattice.rank):
        kdot = sum(gram[i][j] * cj for j, cj in enumerate(k.coords) if cj)
        if (kdot - gram[i][i]) % 2:
            return False
    return True


def _radical_vector(gram):
    diag, trans = symmetric_diagonalize(gram)
    for i, d in enumerate(diag):
        if d == 0:
            return trans[i]
    return None


@lru_cache(maxsize=None)
def _signature_cached(gram):
    diag, trans = symmetric_diagonalize(gram)
    for i, d in enumerate(diag):
        if d == 0:
            raise DegenerateFormError(
                f"degenerate form; radical vector {tuple(trans[i])}", radical=trans[i]
            )
    b_plus = sum(1 for d in diag if d > 0)
    return b_plus, len(diag) - b_plus


def signature_and_betti(lattice: IntersectionLattice) -> tuple[int, int]:
    """(b+, b-) by exact rational congruence diagonalization."""
    if lattice.rank == 0:
        return (0, 0)
    return _signature_cached(lattice.gram)


def signature(lattice: IntersectionLattice) -> int:
    b_plus, b_minus = signature_and_betti(lattice)
    return b_plus - b_minus


@dataclass(frozen=True)
class Sublattice:
    """Integral basis of a sublattice of an ambient lattice with its induced Gram."""

    ambient: IntersectionLattice
    vectors: tuple[HomologyClass, ...]
    gram: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.vectors)

    def signature_and_betti(self) -> tuple[int, int]:
        if not self.vectors:
            return (0, 0)
        return _signature_cached(self.gram)

    def as_lattice(self, name: str = "", prefix: str = "c", relative: bool = False):
        labels = tuple(f"{prefix}{i}" for i in range(self.rank))
        return IntersectionLattice(labels, self.gram, name=name, relative=relative)


def orthogonal_complement(lattice: IntersectionLattice, classes) -> Sublattice:
    """Saturated sublattice {x : x . u = 0 for every given u}, with induced Gram.

    The given classes must be linearly independent.
    """
    classes = tuple(classes)
    for u in classes:
        if not same_lattice(u.lattice, lattice):
            raise LatticeMismatchError("complement classes must live in the given lattice")
    if not classes:
        vectors = tuple(
            HomologyClass(lattice, row)
            for row in (tuple(1 if i == j else 0 for j in range(lattice.rank)) for i in range(lattice.rank))
        )
        return Sublattice(lattice, vectors, lattice.gram)
    umat = tuple(u.coords for u in classes)
    if gauss_rank(umat) != len(classes):
        raise ValueError("complement input classes are linearly dependent")
    pairing_rows = tuple(
        tuple(sum(lattice.gram[i][j] * u.coords[i] for i in range(lattice.rank)) for j in range(lattice.rank))
        for u in classes
    )
    basis_rows = kernel_rows(pairing_rows)
    vectors = tuple(HomologyClass(lattice, row) for row in basis_rows)
    gram = freeze(tuple(pair(v, w) for w in vectors) for v in vectors)
    return Sublattice(lattice, vectors, gram)
