"""The standard models and class lists used by the family pipelines.

Everything is expressed over the rational elliptic surface lattice
diag(1, -1^9) with basis eta, eps1..eps9; the fiber is T = 3 eta - sum eps_i
and the reference chamber class h is eta.  Basis labels are stable across
knot surgery and blowups, so combinations such as eps5 - eps9 keep their
meaning in every model derived from E(1).
"""

from __future__ import annotations

from .knots import TwistKnot, knot_surgery_manifold
from .lattice import HomologyClass, IntersectionLattice
from .manifold import Chamber, FourManifoldModel, SWTable, blowup, make_model
from .plumbing import ConfigurationEmbedding, PlumbingChain, cp_chain, e6_tilde_tree

E1_BASIS = ("eta",) + tuple(f"eps{i}" for i in range(1, 10))
E1_GRAM = tuple(
    tuple((1 if i == 0 else -1) if i == j else 0 for j in range(10)) for i in range(10)
)

PI1_NOTE_E1 = "rational elliptic surface: simply connected by construction"
PI1_NOTE_SURGERY = "fiber and complement are simply connected, so the surgered manifold is too"
PI1_NOTE_BLOWDOWN = (
    "a normal circle to a middle sphere generates the boundary fundamental group "
    "and bounds a disk in the complement, so the blown-down manifold is simply connected"
)


def class_from_coeffs(model: FourManifoldModel, coeffs: dict[str, int]) -> HomologyClass:
    """Integer combination of marked classes and basis labels."""
    marked = model.marked_classes
    total = model.lattice.zero()
    for name, coeff in coeffs.items():
        base = marked.get(name)
        if base is None:
            base = model.lattice.basis_class(name)
        total = total + coeff * base
    return total


def e1() -> FourManifoldModel:
    """CP^2 blown up nine times, fibered by cubics; SW table empty."""
    lattice = IntersectionLattice(E1_BASIS, E1_GRAM, name="E1")
    fiber = lattice.element((3,) + (-1,) * 9)
    h = lattice.basis_class("eta")
    return make_model(
        name="E1",
        lattice=lattice,
        euler=12,
        sign=-8,
        simply_connected=True,
        marked={"T": fiber, "h": h},
        sw=SWTable.empty(lattice),
        pi1_note=PI1_NOTE_E1,
    )


def y_n(n: int) -> FourManifoldModel:
    """Fiber surgery on E(1) with the n-twist knot; |SW(+-T)| = n."""
    base = e1()
    model = knot_surgery_manifold(base, base.marked_class("T"), TwistKnot(n))
    return model.renamed(f"Y{n}")


def v_n(n: int) -> FourManifoldModel:
    """Double fiber surgery with the 1- and n-twist knots.

    |SW(+-3T)| = n and |SW(+-T)| = 2n - 1.
    """
    base = e1()
    once = knot_surgery_manifold(base, base.marked_class("T"), TwistKnot(1))
    model = knot_surgery_manifold(once, once.marked_class("T"), TwistKnot(n))
    return model.renamed(f"V{n}")


def blowup_times(model: FourManifoldModel, count: int, name: str) -> FourManifoldModel:
    for _ in range(count):
        model = blowup(model)
    return model.renamed(name)


def z_n(n: int) -> FourManifoldModel:
    """Y_n blown up three times (exceptional classes E0, E1, E2)."""
    return blowup_times(y_n(n), 3, f"Z{n}")


def w_n(n: int) -> FourManifoldModel:
    """V_n blown up twice (exceptional classes E0, E1)."""
    return blowup_times(v_n(n), 2, f"W{n}")


# The seven -2 spheres supporting the tree fiber, ordered S1..S7; S3 is the
# central vertex and the legs are (S2,S1), (S4,S5), (S6,S7).
E6_SPHERE_COEFFS = {
    "S1": {"eps4": 1, "eps7": -1},
    "S2": {"eps1": 1, "eps4": -1},
    "S3": {"eta": 1, "eps1": -1, "eps2": -1, "eps3": -1},
    "S4": {"eps2": 1, "eps5": -1},
    "S5": {"eps5": 1, "eps9": -1},
    "S6": {"eps3": 1, "eps6": -1},
    "S7": {"eps6": 1, "eps8": -1},
}


def e6_sphere_classes(model: FourManifoldModel) -> dict[str, HomologyClass]:
    return {name: class_from_coeffs(model, c) for name, c in E6_SPHERE_COEFFS.items()}


def e6_embedding(model: FourManifoldModel) -> ConfigurationEmbedding:
    spheres = e6_sphere_classes(model)
    return ConfigurationEmbedding(
        ambient=model,
        chain=e6_tilde_tree(),
        vertex_classes=tuple(spheres[f"S{i}"] for i in range(1, 8)),
    )


def zn_c7_classes(zn: FourManifoldModel) -> tuple[HomologyClass, ...]:
    """The order-7 chain in Z_n: the -9 sphere followed by five tree spheres.

    u0 is the resolved pseudo-section plus two nodal fibers with its three
    double points blown up; u1..u5 are S5, S4, S3, S2, S1.
    """
    u0 = class_from_coeffs(zn, {"eps9": 1, "T": 2, "E0": -2, "E1": -2, "E2": -2})
    spheres = e6_sphere_classes(zn)
    return (u0, spheres["S5"], spheres["S4"], spheres["S3"], spheres["S2"], spheres["S1"])


def zn_c7_embedding(zn: FourManifoldModel) -> ConfigurationEmbedding:
    return ConfigurationEmbedding(ambient=zn, chain=cp_chain(7), vertex_classes=zn_c7_classes(zn))


def zn_chamber(zn: FourManifoldModel) -> Chamber:
    """The period class 7h - 2 sum(e_i) - e3 - E0 - E1 - E2 orthogonal to the chain."""
    coeffs = {"eta": 7, "eps3": -3, "E0": -1, "E1": -1, "E2": -1}
    for i in (1, 2, 4, 5, 6, 7, 8, 9):
        coeffs[f"eps{i}"] = -2
    return Chamber(zn, class_from_coeffs(zn, coeffs))


def b7_ambient(n: int) -> FourManifoldModel:
    """Y_n blown up twice; hosts the order-5 chain."""
    return blowup_times(y_n(n), 2, f"Y{n}#2cp2bar")


def b7_c5_classes(model: FourManifoldModel) -> tuple[HomologyClass, ...]:
    """Order-5 chain: u0 = pseudo-section + one nodal fiber, doubly blown up."""
    u0 = class_from_coeffs(model, {"eps9": 1, "T": 1, "E0": -2, "E1": -2})
    spheres = e6_sphere_classes(model)
    return (u0, spheres["S5"], spheres["S4"], spheres["S3"])


def b7_chamber(model: FourManifoldModel) -> Chamber:
    coeffs = {"eta": 5, "eps1": -1, "eps2": -2, "eps3": -2, "eps4": -1, "eps5": -2,
              "eps6": -1, "eps7": -1, "eps8": -1, "eps9": -2, "E0": -1, "E1": -1}
    return Chamber(model, class_from_coeffs(model, coeffs))


def b8_ambient(n: int) -> FourManifoldModel:
    """Y_n blown up once; hosts the order-3 chain."""
    return blowup_times(y_n(n), 1, f"Y{n}#cp2bar")


def b8_c3_classes(model: FourManifoldModel) -> tuple[HomologyClass, ...]:
    """Order-3 chain: u0 = pseudo-section with its double point blown up."""
    u0 = class_from_coeffs(model, {"eps9": 1, "E0": -2})
    spheres = e6_sphere_classes(model)
    return (u0, spheres["S5"])


def b8_chamber(model: FourManifoldModel) -> Chamber:
    return Chamber(model, class_from_coeffs(model, {"eta": 4, "eps5": -2, "eps9": -2, "E0": -1}))


# A hexagon of six -2 spheres summing to the fiber, realizing the cycle fiber
# whose monodromy is the sixth power of a twist.  Exactly one component (c0)
# meets the section eps9, in one point.  These explicit classes are a derived
# realization; only their intersection profile is pinned by the construction.
I6_HEXAGON_COEFFS = (
    {"eps1": 1, "eps9": -1},                            # c0
    {"eta": 1, "eps1": -1, "eps2": -1, "eps3": -1},     # c1
    {"eps2": 1, "eps4": -1},                            # c2
    {"eta": 1, "eps2": -1, "eps5": -1, "eps6": -1},     # c3
    {"eps5": 1, "eps7": -1},                            # c4
    {"eta": 1, "eps1": -1, "eps5": -1, "eps8": -1},     # c5
)


def i6_hexagon_classes(model: FourManifoldModel) -> tuple[HomologyClass, ...]:
    return tuple(class_from_coeffs(model, c) for c in I6_HEXAGON_COEFFS)


def i6_hexagon_chain() -> PlumbingChain:
    return PlumbingChain((-2,) * 6, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)))


def wn_c7_classes(wn: FourManifoldModel) -> tuple[HomologyClass, ...]:
    """Order-7 chain in W_n: the -9 sphere plus five hexagon components.

    u0 = eps9 - 2 E0 - 2 E1 (the pseudo-section with both double points blown
    up); dropping the hexagon component adjacent to c0 on one side leaves the
    chain c0, c5, c4, c3, c2 hanging off u0.
    """
    u0 = class_from_coeffs(wn, {"eps9": 1, "E0": -2, "E1": -2})
    c = i6_hexagon_classes(wn)
    return (u0, c[0], c[5], c[4], c[3], c[2])


def wn_c7_embedding(wn: FourManifoldModel) -> ConfigurationEmbedding:
    return ConfigurationEmbedding(ambient=wn, chain=cp_chain(7), vertex_classes=wn_c7_classes(wn))


# Intersection profile of the W_n chain: the five cycle components pair to
# zero with T, E0, E1, and only the first vertex meets u0.  This is the data
# the lift search actually consumes; the explicit realization above is
# cross-checked against it.
WN_C7_PROFILE = {
    "gram": [list(row) for row in cp_chain(7).matrix()],
    "pairings": {
        "T": [1, 0, 0, 0, 0, 0],
        "E0": [2, 0, 0, 0, 0, 0],
        "E1": [2, 0, 0, 0, 0, 0],
    },
}


def wn_c7_profile_embedding(wn: FourManifoldModel) -> ConfigurationEmbedding:
    return ConfigurationEmbedding.from_profile_dict(wn, cp_chain(7), WN_C7_PROFILE)


def wn_chamber(wn: FourManifoldModel) -> Chamber:
    """A positive-square class orthogonal to the W_n chain, found by solving
    the six orthogonality conditions over the complement."""
    coeffs = {"eta": 11, "eps2": -2, "eps4": -2, "eps5": -5, "eps6": -4,
              "eps7": -5, "eps8": -6, "E0": 1, "E1": -1}
    return Chamber(wn, class_from_coeffs(wn, coeffs))
