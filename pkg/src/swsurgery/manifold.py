"""Closed 4-manifold models: lattice plus (euler, sign) bookkeeping and SW tables.

A model is immutable; surgery-style operations return new models.  Sign
conventions for SW values follow the Laurent-quotient convention of the knot
surgery rule and are recorded on each table; only absolute values are pinned
by the underlying theory.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, NamedTuple

from .lattice import (
    HomologyClass,
    IntersectionLattice,
    is_characteristic,
    pair,
    same_lattice,
    signature_and_betti,
    square,
)

DEFAULT_CONVENTION = (
    "SW signs follow the antisymmetric Laurent-quotient convention; "
    "only absolute values are invariant of the convention"
)


class NonCharacteristicError(ValueError):
    """A characteristic class was required."""


class OnWallError(ValueError):
    """The period class pairs to zero with the class whose invariant was asked."""


@dataclass(frozen=True)
class SWTable:
    """Finite table of (characteristic class -> nonzero signed integer)."""

    lattice: IntersectionLattice
    entries: tuple[tuple[tuple[int, ...], int], ...]
    convention_note: str = DEFAULT_CONVENTION

    def __post_init__(self):
        normalized = tuple(sorted((tuple(int(x) for x in c), int(v)) for c, v in self.entries))
        object.__setattr__(self, "entries", normalized)
        seen = {}
        for coords, value in normalized:
            if value == 0:
                raise ValueError("SW tables store nonzero values only")
            if coords in seen:
                raise ValueError(f"duplicate SW entry for {coords}")
            seen[coords] = value
        for coords, value in normalized:
            neg = tuple(-x for x in coords)
            if neg not in seen or abs(seen[neg]) != abs(value):
                raise ValueError("SW table must be closed under negation with equal magnitude")
            if not is_characteristic(HomologyClass(self.lattice, coords)):
                raise ValueError(f"SW class {coords} is not characteristic")

    @classmethod
    def empty(cls, lattice: IntersectionLattice, note: str = DEFAULT_CONVENTION) -> "SWTable":
        return cls(lattice, (), note)

    @classmethod
    def from_pairs(cls, lattice, pairs, note: str = DEFAULT_CONVENTION) -> "SWTable":
        items = []
        for k, v in pairs.items() if isinstance(pairs, dict) else pairs:
            coords = k.coords if isinstance(k, HomologyClass) else tuple(k)
            items.append((coords, int(v)))
        return cls(lattice, tuple(items), note)

    def classes(self) -> tuple[HomologyClass, ...]:
        return tuple(HomologyClass(self.lattice, c) for c, _ in self.entries)

    def items(self) -> tuple[tuple[HomologyClass, int], ...]:
        return tuple((HomologyClass(self.lattice, c), v) for c, v in self.entries)

    def value(self, k: HomologyClass) -> int:
        if not same_lattice(k.lattice, self.lattice):
            raise ValueError("class does not live in the table's lattice")
        for coords, v in self.entries:
            if coords == k.coords:
                return v
        return 0

    def magnitudes(self) -> tuple[int, ...]:
        return tuple(sorted(abs(v) for _, v in self.entries))

    def __len__(self) -> int:
        return len(self.entries)


class Fingerprint(NamedTuple):
    b_plus: int
    b_minus: int
    parity: str  # "odd" | "even"
    simply_connected: bool


@dataclass(frozen=True)
class FourManifoldModel:
    """Lattice + (e, sign) + marked classes + SW table for a closed 4-manifold.

    ``simply_connected`` is an asserted input (with free-text justification in
    ``pi1_note``), never computed.
    """

    name: str
    lattice: IntersectionLattice
    euler: int
    sign: int
    simply_connected: bool
    marked: tuple[tuple[str, tuple[int, ...]], ...]
    sw: SWTable
    pi1_note: str = ""
    surgery_history: tuple = ()  # Alexander polynomials of prior fiber surgeries

    def __post_init__(self):
        if isinstance(self.marked, dict):
            frozen = tuple(sorted((k, tuple(v.coords if isinstance(v, HomologyClass) else v))
                                  for k, v in self.marked.items()))
            object.__setattr__(self, "marked", frozen)
        b_plus, b_minus = signature_and_betti(self.lattice)
        if self.sign != b_plus - b_minus:
            raise ValueError(f"sign {self.sign} != b+ - b- = {b_plus - b_minus}")
        if self.simply_connected and self.euler != 2 + self.lattice.rank:
            raise ValueError(
                f"closed simply connected model needs euler = 2 + rank, got {self.euler}"
            )
        if not same_lattice(self.sw.lattice, self.lattice):
            raise ValueError("SW table lattice differs from the model lattice")
        for k, v in self.sw.items():
            d = dimension(self, k)
            if d < 0 or d % 2:
                raise ValueError(f"SW class {k.coords} has d = {d}; need d >= 0 and even")

    @property
    def marked_classes(self) -> dict[str, HomologyClass]:
        return {name: HomologyClass(self.lattice, coords) for name, coords in self.marked}

    def marked_class(self, name: str) -> HomologyClass:
        for label, coords in self.marked:
            if label == name:
                return HomologyClass(self.lattice, coords)
        raise KeyError(f"model {self.name!r} has no marked class {name!r}")

    def b_plus_minus(self) -> tuple[int, int]:
        return signature_and_betti(self.lattice)

    def renamed(self, name: str) -> "FourManifoldModel":
        return replace(self, name=name)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "basis": list(self.lattice.basis),
            "gram": [list(r) for r in self.lattice.gram],
            "euler": self.euler,
            "sign": self.sign,
            "simply_connected": self.simply_connected,
            "pi1_note": self.pi1_note,
            "marked": {name: list(coords) for name, coords in self.marked},
            "sw": [{"coords": list(c), "value": v} for c, v in self.sw.entries],
            "convention_note": self.sw.convention_note,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FourManifoldModel":
        lattice = IntersectionLattice(tuple(data["basis"]), data["gram"], name=data["name"])
        table = SWTable(
            lattice,
            tuple((tuple(e["coords"]), int(e["value"])) for e in data.get("sw", ())),
            data.get("convention_note", DEFAULT_CONVENTION),
        )
        return cls(
            name=data["name"],
            lattice=lattice,
            euler=int(data["euler"]),
            sign=int(data["sign"]),
            simply_connected=bool(data["simply_connected"]),
            marked=tuple(sorted((k, tuple(v)) for k, v in data.get("marked", {}).items())),
            sw=table,
            pi1_note=data.get("pi1_note", ""),
        )


@dataclass(frozen=True)
class Chamber:
    """Period class H with H^2 > 0 on the same side of the cone as the marked h."""

    model: FourManifoldModel
    period: HomologyClass

    def __post_init__(self):
        if not same_lattice(self.period.lattice, self.model.lattice):
            raise ValueError("period class must live in the model lattice")
        if square(self.period) <= 0:
            raise ValueError("period class must have positive square")
        if pair(self.period, self.model.marked_class("h")) <= 0:
            raise ValueError("period class must pair positively with the marked class h")


def dimension(X: FourManifoldModel, k: HomologyClass) -> int:
    """Formal dimension d(k) = (k^2 - 3 sign - 2 euler) / 4 for characteristic k."""
    if not same_lattice(k.lattice, X.lattice):
        raise ValueError("class does not live in the model lattice")
    if not is_characteristic(k):
        raise NonCharacteristicError(f"{k.coords} is not characteristic in {X.name!r}")
    numerator = square(k) - 3 * X.sign - 2 * X.euler
    if numerator % 4:
        raise RuntimeError("internal invariant violation: d(k) is not an integer")
    return numerator // 4


def wall_crossing_delta(X: FourManifoldModel, k: HomologyClass) -> int:
    """Jump (-1)^(1 + d(k)/2) across the wall k . H = 0; needs d(k) >= 0 even."""
    d = dimension(X, k)
    if d < 0 or d % 2:
        raise ValueError(f"wall crossing needs d(k) >= 0 and even, got {d}")
    return (-1) ** (1 + d // 2)


def chamber_sw(X: FourManifoldModel, k: HomologyClass, H: Chamber) -> int:
    """Small-perturbation SW invariant of k in the chamber of H.

    When sign(H . k) = sign(h . k) this is the table value (0 if absent);
    otherwise the wall-crossing jump is added, oriented from the h-side to
    the H-side.  Only available for b+ = 1 models.
    """
    b_plus, _ = X.b_plus_minus()
    if b_plus != 1:
        raise ValueError(f"chamber invariants require b+ = 1, got b+ = {b_plus}")
    if H.model is not X and H.model != X:
        raise ValueError("chamber belongs to a different model")
    d = dimension(X, k)
    if d < 0 or d % 2:
        raise ValueError(f"chamber invariant needs d(k) >= 0 and even, got {d}")
    hk = pair(X.marked_class("h"), k)
    Hk = pair(H.period, k)
    if Hk == 0:
        raise OnWallError(f"period class lies on the wall of {k.coords}")
    if hk == 0:
        raise OnWallError("the reference class h lies on the wall of this class")
    base = X.sw.value(k)
    if (Hk > 0) == (hk > 0):
        return base
    jump = (-1) ** (1 + d // 2)
    return base + (jump if Hk > 0 else -jump)


def _next_exceptional_label(lattice: IntersectionLattice) -> str:
    i = 0
    while f"E{i}" in lattice.basis:
        i += 1
    return f"E{i}"


def blowup(X: FourManifoldModel, label: str | None = None) -> FourManifoldModel:
    """Connected sum with an orientation-reversed projective plane.

    Appends an exceptional generator E of square -1, bumps (euler, sign) by
    (+1, -1), and replaces the SW table by {k +- E -> value(k)}, pruning any
    entry whose formal dimension would become negative.
    """
    label = label or _next_exceptional_label(X.lattice)
    if label in X.lattice.basis:
        raise ValueError(f"label {label!r} already present")
    n = X.lattice.rank
    new_gram = tuple(tuple(list(row) + [0]) for row in X.lattice.gram) + (
        tuple([0] * n + [-1]),
    )
    new_lattice = IntersectionLattice(
        X.lattice.basis + (label,), new_gram, name=X.lattice.name
    )
    euler, sign = X.euler + 1, X.sign - 1
    new_marked = {name: tuple(coords) + (0,) for name, coords in X.marked}
    new_marked[label] = (0,) * n + (1,)
    entries = []
    for coords, value in X.sw.entries:
        for eps in (1, -1):
            new_coords = tuple(coords) + (eps,)
            ksq = HomologyClass(new_lattice, new_coords).square()
            if (ksq - 3 * sign - 2 * euler) // 4 >= 0:
                entries.append((new_coords, value))
    table = SWTable(new_lattice, tuple(entries), X.sw.convention_note)
    return FourManifoldModel(
        name=f"{X.name}#cp2bar",
        lattice=new_lattice,
        euler=euler,
        sign=sign,
        simply_connected=X.simply_connected,
        marked=new_marked,
        sw=table,
        pi1_note=X.pi1_note,
        surgery_history=X.surgery_history,
    )


@dataclass(frozen=True)
class MinimalityVerdict:
    status: str  # "minimal_certified" | "blowup_pair_found" | "inconclusive"
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    e_square: int | None = None


def minimality_check(X: FourManifoldModel) -> MinimalityVerdict:
    """Blowup-pairing obstruction on the SW table.

    In a blowup every basic class comes paired with a partner differing by
    2E, so (k1 - k2)^2 = -4.  Classes of magnitude >= 2 that admit no such
    partner certify minimality; if every such class is paired the table is
    consistent with a blowup; with no magnitude >= 2 class the test is silent.
    """
    items = X.sw.items()
    high = [(k, v) for k, v in items if abs(v) >= 2]
    if not high:
        return MinimalityVerdict("inconclusive")
    pairs = []
    for i, (k1, v1) in enumerate(items):
        for k2, v2 in items[i + 1:]:
            if abs(v1) == abs(v2) and square(k1 - k2) == -4:
                pairs.append((k1, k2))
    high_coords = {k.coords for k, _ in high}
    paired = {k.coords for k1, k2 in pairs for k in (k1, k2)}
    high_pairs = [(k1, k2) for k1, k2 in pairs
                  if k1.coords in high_coords and k2.coords in high_coords]
    if not high_pairs:
        return MinimalityVerdict("minimal_certified")
    if high_coords <= paired:
        k1, k2 = high_pairs[0]
        return MinimalityVerdict("blowup_pair_found", (k1.coords, k2.coords), square(k1 - k2) // 4)
    return MinimalityVerdict("inconclusive")


def fingerprint(X: FourManifoldModel) -> Fingerprint:
    """(b+, b-, parity, pi1 flag); parity is even iff every basis square is even."""
    b_plus, b_minus = X.b_plus_minus()
    parity = "even" if all(X.lattice.gram[i][i] % 2 == 0 for i in range(X.lattice.rank)) else "odd"
    return Fingerprint(b_plus, b_minus, parity, X.simply_connected)


def make_model(
    name: str,
    lattice: IntersectionLattice,
    euler: int,
    sign: int,
    simply_connected: bool,
    marked: dict[str, HomologyClass] | None = None,
    sw: SWTable | None = None,
    pi1_note: str = "",
    surgery_history: Iterable = (),
) -> FourManifoldModel:
    return FourManifoldModel(
        name=name,
        lattice=lattice,
        euler=euler,
        sign=sign,
        simply_connected=simply_connected,
        marked={k: v.coords for k, v in (marked or {}).items()},
        sw=sw if sw is not None else SWTable.empty(lattice),
        pi1_note=pi1_note,
        surgery_history=tuple(surgery_history),
    )
