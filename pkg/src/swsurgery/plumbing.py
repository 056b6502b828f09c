"""Plumbing configurations, lens-space boundaries, and rational blowdown.

The blowdown configuration of order p is a linear chain of p - 1 spheres
with weights -(p+2), -2, ..., -2; its boundary is the lens space of order
p^2 and it bounds a rational ball.  Blowing it down inside an ambient model
drops b- by p - 1 and transfers SW data through characteristic lifts whose
restriction to the configuration has relative self-intersection -(p - 1),
the value forced by preservation of the formal dimension together with the
(e, sign) bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iter_product
from math import gcd

from .exactmat import (
    SingularMatrixError,
    bareiss_det,
    freeze,
    hnf_row_basis,
    rational_inverse,
)
from .lattice import (
    HomologyClass,
    IntersectionLattice,
    is_characteristic,
    orthogonal_complement,
    pair,
    same_lattice,
    square,
)
from .manifold import Chamber, FourManifoldModel, SWTable, chamber_sw, make_model


class EmbeddingError(ValueError):
    """A configuration embedding failed verification."""


@dataclass(frozen=True)
class PlumbingChain:
    """Weighted graph of sphere plumbings: linear chains and small trees."""

    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        object.__setattr__(
            self, "edges", tuple(tuple(sorted((int(a), int(b)))) for a, b in self.edges)
        )
        n = len(self.weights)
        for a, b in self.edges:
            if not (0 <= a < n and 0 <= b < n) or a == b:
                raise ValueError(f"bad edge ({a}, {b})")
        if n > 1 and not self._connected():
            raise ValueError("plumbing graph must be connected")

    def _connected(self) -> bool:
        n = len(self.weights)
        seen = {0}
        frontier = [0]
        adjacency = self.adjacency()
        while frontier:
            v = frontier.pop()
            for w in adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == n

    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        n = len(self.weights)
        adj = [[] for _ in range(n)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return tuple(tuple(sorted(x)) for x in adj)

    @property
    def size(self) -> int:
        return len(self.weights)

    def is_linear(self) -> bool:
        n = self.size
        if n == 1:
            return not self.edges
        degrees = [len(x) for x in self.adjacency()]
        return sorted(degrees) == [1, 1] + [2] * (n - 2) and len(self.edges) == n - 1

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        n = self.size
        m = [[0] * n for _ in range(n)]
        for i, w in enumerate(self.weights):
            m[i][i] = w
        for a, b in self.edges:
            m[a][b] = 1
            m[b][a] = 1
        return freeze(m)


def cp_chain(p: int) -> PlumbingChain:
    """The order-p blowdown chain: p - 1 vertices, weights -(p+2), -2, ..., -2."""
    if p < 2:
        raise ValueError(f"need p >= 2, got {p}")
    weights = [-(p + 2)] + [-2] * (p - 2)
    edges = tuple((i, i + 1) for i in range(p - 2))
    return PlumbingChain(tuple(weights), edges)


def e6_tilde_tree() -> PlumbingChain:
    """Seven -2 spheres: a length-5 chain with a 2-vertex leg at the middle."""
    return PlumbingChain(
        (-2,) * 7,
        ((0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)),
    )


@dataclass(frozen=True)
class PlumbingForm:
    """Intersection matrix of a chain with exact determinant and inverse."""

    matrix: tuple[tuple[int, ...], ...]
    det: int

    def inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        if self.det == 0:
            raise SingularMatrixError("plumbing matrix is singular")
        return rational_inverse(self.matrix)


@lru_cache(maxsize=None)
def intersection_matrix(chain: PlumbingChain) -> PlumbingForm:
    m = chain.matrix()
    return PlumbingForm(m, bareiss_det(m))


@lru_cache(maxsize=None)
def _chain_inverse(chain: PlumbingChain):
    return intersection_matrix(chain).inverse()


@dataclass(frozen=True)
class LensSpace:
    """Lens space of the given order with a chosen twist representative."""

    order: int
    twist: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        if gcd(self.order, self.twist) != 1:
            raise ValueError(f"gcd({self.order}, {self.twist}) != 1")

    def residue_orbit(self) -> tuple[int, ...]:
        """All residues {+-q^(+-1) mod order}; orientation conventions differ
        only within this orbit, so both sign choices are matchable."""
        q = self.twist % self.order
        inv = pow(q, -1, self.order)
        return tuple(sorted({q, (-q) % self.order, inv, (-inv) % self.order}))


def continued_fraction_value(terms) -> Fraction:
    """Evaluate the negative continued fraction [a0, a1, ...]."""
    value = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        value = a - 1 / value
    return value


def boundary_lens_space(chain: PlumbingChain) -> LensSpace:
    """Boundary of a linear chain with all weights <= -2, via continued fractions.

    The weight sequence [-w0, -w1, ...] evaluates to order/twist; the full
    residue orbit of the twist is reported by the LensSpace.
    """
    if not chain.is_linear():
        raise ValueError("boundary computation implemented for linear chains only")
    if any(w > -2 for w in chain.weights):
        raise ValueError("continued fraction needs all weights <= -2")
    ordered_weights = _linear_order(chain)
    value = continued_fraction_value([-w for w in ordered_weights])
    return LensSpace(value.numerator, value.denominator)


def _linear_order(chain: PlumbingChain) -> tuple[int, ...]:
    """Weights listed along the chain starting from the first endpoint."""
    if chain.size == 1:
        return chain.weights
    adjacency = chain.adjacency()
    ends = [v for v in range(chain.size) if len(adjacency[v]) == 1]
    start = min(ends)
    order = [start]
    prev = None
    current = start
    while len(order) < chain.size:
        nxt = next(v for v in adjacency[current] if v != prev)
        order.append(nxt)
        prev, current = current, nxt
    return tuple(chain.weights[v] for v in order)


@dataclass(frozen=True)
class ConfigurationEmbedding:
    """A plumbing configuration inside an ambient model.

    Either explicit ambient classes for every vertex are given, or only an
    intersection profile: the vertex Gram matrix plus, for each named ambient
    class of interest, its vector of pairings with the vertices.  Explicit
    classes are the stronger form; profiles suffice for lift searches and
    relative squares.
    """

    ambient: FourManifoldModel
    chain: PlumbingChain
    vertex_classes: tuple[HomologyClass, ...] | None = None
    profile_gram: tuple[tuple[int, ...], ...] | None = None
    profile_pairings: tuple[tuple[str, tuple[int, ...]], ...] | None = None

    def __post_init__(self):
        if self.vertex_classes is None and self.profile_gram is None:
            raise ValueError("need vertex classes or an intersection profile")
        if self.vertex_classes is not None:
            object.__setattr__(self, "vertex_classes", tuple(self.vertex_classes))
            if len(self.vertex_classes) != self.chain.size:
                raise ValueError("one ambient class per vertex required")
            for u in self.vertex_classes:
                if not same_lattice(u.lattice, self.ambient.lattice):
                    raise ValueError("vertex classes must live in the ambient lattice")
        if self.profile_gram is not None:
            object.__setattr__(self, "profile_gram", freeze(self.profile_gram))
        if self.profile_pairings is not None:
            object.__setattr__(
                self,
                "profile_pairings",
                tuple(sorted((str(k), tuple(int(x) for x in v)) for k, v in (
                    self.profile_pairings.items()
                    if isinstance(self.profile_pairings, dict)
                    else self.profile_pairings
                ))),
            )

    @property
    def size(self) -> int:
        return self.chain.size

    def realized_gram(self) -> tuple[tuple[int, ...], ...]:
        if self.vertex_classes is not None:
            return freeze(
                tuple(pair(u, v) for v in self.vertex_classes) for u in self.vertex_classes
            )
        return self.profile_gram

    def profile_row(self, name: str) -> tuple[int, ...]:
        if self.profile_pairings is not None:
            for key, row in self.profile_pairings:
                if key == name:
                    return row
        if self.vertex_classes is not None:
            k = self.ambient.marked_class(name)
            return tuple(pair(k, u) for u in self.vertex_classes)
        raise KeyError(f"no pairing profile for class {name!r}")

    def pairing_vector(self, candidate) -> tuple[int, ...]:
        """Vector (candidate . u_i); candidate is a class or {name: coeff}."""
        if isinstance(candidate, HomologyClass):
            if self.vertex_classes is None:
                raise ValueError(
                    "profile-only embedding: pass candidates as {name: coeff} combinations"
                )
            return tuple(pair(candidate, u) for u in self.vertex_classes)
        vector = [0] * self.size
        for name, coeff in candidate.items():
            row = self.profile_row(name)
            vector = [x + coeff * y for x, y in zip(vector, row)]
        return tuple(vector)

    def to_profile_dict(self) -> dict:
        pairings = {}
        if self.profile_pairings is not None:
            pairings = {k: list(v) for k, v in self.profile_pairings}
        elif self.vertex_classes is not None:
            pairings = {
                name: list(self.profile_row(name)) for name in self.ambient.marked_classes
            }
        return {"gram": [list(r) for r in self.realized_gram()], "pairings": pairings}

    @classmethod
    def from_profile_dict(cls, ambient: FourManifoldModel, chain: PlumbingChain, data: dict):
        return cls(
            ambient=ambient,
            chain=chain,
            profile_gram=freeze(data["gram"]),
            profile_pairings=tuple(
                (k, tuple(int(x) for x in v)) for k, v in sorted(data["pairings"].items())
            ),
        )


@dataclass(frozen=True)
class EmbeddingReport:
    ok: bool
    entries: tuple[tuple[str, bool], ...]

    def failures(self) -> tuple[str, ...]:
        return tuple(desc for desc, good in self.entries if not good)


def verify_embedding(emb: ConfigurationEmbedding, chain: PlumbingChain | None = None) -> EmbeddingReport:
    """Check a realized configuration against its chain, entry by entry.

    Mismatch is a report outcome, not an error.  For the seven-sphere tree the
    checks are the tree adjacency (central vertex with three length-2 legs)
    and orthogonality of every vertex to the marked fiber T.
    """
    chain = chain or emb.chain
    entries: list[tuple[str, bool]] = []
    realized = emb.realized_gram()
    expected = chain.matrix()
    entries.append((f"configuration size {chain.size}", len(realized) == chain.size))
    common = min(len(realized), chain.size)
    for i in range(common):
        for j in range(i, common):
            ok = realized[i][j] == expected[i][j]
            kind = "self-intersection" if i == j else "pairing"
            entries.append(
                (f"vertex {kind} ({i},{j}): expected {expected[i][j]}, got {realized[i][j]}", ok)
            )
    if not chain.is_linear():
        entries.append(("tree adjacency: central vertex with three length-2 legs",
                        _is_three_leg_star(chain)))
        if emb.vertex_classes is not None:
            fiber = emb.ambient.marked_class("T")
            for i, u in enumerate(emb.vertex_classes):
                entries.append((f"vertex {i} orthogonal to the fiber", pair(fiber, u) == 0))
    return EmbeddingReport(all(ok for _, ok in entries), tuple(entries))


def _is_three_leg_star(chain: PlumbingChain) -> bool:
    adjacency = chain.adjacency()
    centers = [v for v in range(chain.size) if len(adjacency[v]) == 3]
    if len(centers) != 1 or chain.size != 7:
        return False
    center = centers[0]
    for mid in adjacency[center]:
        tips = [w for w in adjacency[mid] if w != center]
        if len(tips) != 1 or len(adjacency[tips[0]]) != 1:
            return False
    return True


def relative_square_of_restriction(emb: ConfigurationEmbedding, k) -> Fraction:
    """Self-intersection of the restriction of k in the dual basis of the chain.

    With v the vector of pairings of k with the vertices and Q the chain
    matrix, the restriction is sum v_i gamma_i in the dual basis, whose Gram
    is Q^(-1); the relative square is v^T Q^(-1) v.
    """
    form = intersection_matrix(emb.chain)
    if form.det == 0:
        raise SingularMatrixError("chain intersection matrix is singular")
    v = emb.pairing_vector(k)
    inv = _chain_inverse(emb.chain)
    return sum(Fraction(v[i]) * inv[i][j] * v[j] for i in range(len(v)) for j in range(len(v)))


def find_characteristic_lifts(emb: ConfigurationEmbedding, candidates, p: int):
    """Filter candidates whose relative restriction square equals -(p - 1).

    That is the value preserving the formal dimension through the blowdown.
    Explicit-class candidates must be characteristic in the ambient lattice;
    profile candidates ({name: coeff} maps) are taken as asserted
    characteristic.  The output is closed under negation whenever the input is.
    """
    target = -(p - 1)
    kept = []
    for candidate in candidates:
        if isinstance(candidate, HomologyClass) and not is_characteristic(candidate):
            raise ValueError(f"lift candidate {candidate.coords} is not characteristic")
        if relative_square_of_restriction(emb, candidate) == target:
            kept.append(candidate)
    return kept


def default_lift_candidates(X: FourManifoldModel) -> list[HomologyClass]:
    """Basic classes of X closed under sign flips of the exceptional markings."""
    exceptional = [
        X.lattice.index_of(name) for name in X.marked_classes if name.startswith("E")
    ]
    seen = []
    for k in X.sw.classes():
        for signs in iter_product((1, -1), repeat=len(exceptional)):
            coords = list(k.coords)
            for s, idx in zip(signs, exceptional):
                coords[idx] *= s
            candidate = HomologyClass(X.lattice, tuple(coords))
            if candidate not in seen:
                seen.append(candidate)
    return seen


def box_lift_search(emb: ConfigurationEmbedding, p: int, generators, bound: int = 3):
    """Exploratory lift search over integer boxes |c| <= bound.

    ``generators`` maps names to ambient classes (or to None for profile-only
    embeddings, where the name must carry a profile row).  Full-rank box
    searches are infeasible (the characteristic extension set is infinite), so
    the search runs over the span of the chosen generators; results are
    deterministically ordered coefficient maps.
    """
    names = sorted(generators)
    target = -(p - 1)
    hits = []
    for coeffs in iter_product(range(-bound, bound + 1), repeat=len(names)):
        if all(c == 0 for c in coeffs):
            continue
        combo = {n: c for n, c in zip(names, coeffs) if c != 0}
        if relative_square_of_restriction(emb, combo) == target:
            hits.append(combo)
    return hits


def _overlattice_basis(gram_c, p: int):
    """Basis of the index-p overlattice M = C + p C* inside C (x) Q.

    C is the strict orthogonal complement; gluing in the rational ball
    enlarges it to the unimodular lattice of the blown-down manifold, the
    preimage of the order-p isotropic subgroup of the discriminant group.
    Rows are returned in C-coordinates with denominator p; correctness
    (integrality, |det| = 1) is checked by the caller.
    """
    r = len(gram_c)
    det = bareiss_det(gram_c)
    if det == 0:
        raise EmbeddingError("complement form is degenerate")
    inv = rational_inverse(gram_c)
    den = abs(det)
    rows = [[den if i == j else 0 for j in range(r)] for i in range(r)]
    for i in range(r):
        row = [inv[i][j] * p * den for j in range(r)]
        if any(x.denominator != 1 for x in row):
            raise EmbeddingError("internal: dual basis did not clear denominators")
        rows.append([int(x) for x in row])
    basis = hnf_row_basis(rows)
    return tuple(tuple(Fraction(x, den) for x in row) for row in basis)


def rational_blowdown(
    X: FourManifoldModel,
    emb: ConfigurationEmbedding,
    p: int,
    H: Chamber,
    *,
    simply_connected: bool,
    pi1_note: str = "",
    name: str | None = None,
) -> FourManifoldModel:
    """Replace an embedded order-p chain by the rational ball it bounds.

    Requirements: the embedding verifies against cp_chain(p) with explicit
    vertex classes, and the period class H is orthogonal to every vertex.
    The new model's lattice is the unimodular overlattice of the orthogonal
    complement of the vertices; euler drops by p - 1, sign rises by p - 1,
    and the SW table transfers through the characteristic lifts found among
    X's basic classes, evaluated in the chamber of H (wall-crossing
    corrections included by chamber_sw).  Simple connectivity of the result
    is supplied by the caller with a justification note.
    """
    if emb.vertex_classes is None:
        raise ValueError(
            "rational blowdown needs explicit vertex classes; profiles support "
            "only lift searches and relative squares"
        )
    chain = cp_chain(p)
    report = verify_embedding(emb, chain)
    if not report.ok:
        raise EmbeddingError(
            "embedding does not realize the blowdown chain: " + "; ".join(report.failures())
        )
    if square(H.period) <= 0:
        raise ValueError("period class must have positive square")
    for u in emb.vertex_classes:
        if pair(H.period, u) != 0:
            raise ValueError("period class must be orthogonal to every vertex class")

    complement = orthogonal_complement(X.lattice, emb.vertex_classes)
    gram_c = complement.gram
    if abs(bareiss_det(gram_c)) != p * p:
        raise EmbeddingError(
            f"complement discriminant is not p^2 = {p * p}; "
            "the configuration is not primitively embedded"
        )
    basis = _overlattice_basis(gram_c, p)
    r = complement.rank
    gram_m = []
    for row_i in basis:
        row = []
        for row_j in basis:
            entry = sum(
                row_i[a] * gram_c[a][b] * row_j[b] for a in range(r) for b in range(r)
            )
            if entry.denominator != 1:
                raise EmbeddingError("overlattice pairing is not integral")
            row.append(int(entry))
        gram_m.append(tuple(row))
    gram_m = freeze(gram_m)
    if abs(bareiss_det(gram_m)) != 1:
        raise EmbeddingError("overlattice is not unimodular")
    new_name = name or f"{X.name}_blowdown{p}"
    new_lattice = IntersectionLattice(
        tuple(f"c{i}" for i in range(r)), gram_m, name=new_name
    )

    inv_c = rational_inverse(gram_c)
    basis_inv = rational_inverse(basis)

    def push_down(k: HomologyClass) -> HomologyClass:
        pairings = [pair(k, w) for w in complement.vectors]
        y = [sum(Fraction(pairings[a]) * inv_c[a][b] for a in range(r)) for b in range(r)]
        z = [sum(y[a] * basis_inv[a][b] for a in range(r)) for b in range(r)]
        if any(x.denominator != 1 for x in z):
            raise EmbeddingError(f"class {k.coords} does not descend to the new lattice")
        return HomologyClass(new_lattice, tuple(int(x) for x in z))

    entries = {}
    for k, _ in X.sw.items():
        if relative_square_of_restriction(emb, k) == -(p - 1):
            value = chamber_sw(X, k, H)
            if value != 0:
                entries[push_down(k)] = value
    table = SWTable.from_pairs(new_lattice, entries, X.sw.convention_note)
    marked = {"h": push_down(H.period)}
    return make_model(
        name=new_name,
        lattice=new_lattice,
        euler=X.euler - (p - 1),
        sign=X.sign + (p - 1),
        simply_connected=simply_connected,
        marked=marked,
        sw=table,
        pi1_note=pi1_note,
    )
