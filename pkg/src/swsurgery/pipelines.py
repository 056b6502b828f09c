"""End-to-end family constructions and the master verification suite.

Each builder reconstructs one family of simply connected b+ = 1 manifolds
from the rational elliptic surface by knot surgery, blowups, and a rational
blowdown, and returns the final model together with a report asserting every
numerical claim along the way.  SW data is compared by absolute value; the
signed values follow the recorded quotient convention.
"""

from __future__ import annotations

from .knots import alexander_twist, e1_knot_surgery_sw, poly_in_s
from .lattice import (
    IntersectionLattice,
    is_characteristic,
    orthogonal_complement,
    pair,
    signature_and_betti,
    square,
)
from .manifold import (
    Chamber,
    FourManifoldModel,
    blowup,
    chamber_sw,
    dimension,
    fingerprint,
    minimality_check,
    wall_crossing_delta,
)
from .models import (
    b7_ambient,
    b7_c5_classes,
    b7_chamber,
    b8_ambient,
    b8_c3_classes,
    b8_chamber,
    class_from_coeffs,
    e1,
    e6_embedding,
    e6_sphere_classes,
    v_n,
    w_n,
    wn_c7_embedding,
    wn_c7_profile_embedding,
    wn_chamber,
    y_n,
    z_n,
    zn_c7_embedding,
    zn_chamber,
    PI1_NOTE_BLOWDOWN,
)
from .monodromy import evaluate, parabolic_width, verify_factorization
from .plumbing import (
    ConfigurationEmbedding,
    boundary_lens_space,
    continued_fraction_value,
    cp_chain,
    default_lift_candidates,
    find_characteristic_lifts,
    intersection_matrix,
    rational_blowdown,
    relative_square_of_restriction,
    verify_embedding,
)
from .report import DEFINITION, DERIVED, REPORTED, VerificationReport

E6_FACTORIZATION = "(ab)^4a^2(Aba)b"
I6_FACTORIZATION = "a^6(A^3ba^3)(baB)^2b^2(Bab)"
I6_FIBRATION = "(a^3b)^3"


def _coords(classes) -> list[list[int]]:
    return sorted(list(k.coords) for k in classes)


def _check_blowdown_common(
    rep: VerificationReport,
    tag: str,
    ambient: FourManifoldModel,
    emb: ConfigurationEmbedding,
    p: int,
    chamber: Chamber,
    expected_lifts,
    n: int,
    expected_b_minus: int,
    lift_square: int,
    provenance: str,
    name: str,
) -> FourManifoldModel:
    """Shared trailing segment of every family pipeline."""
    embedding_report = verify_embedding(emb, cp_chain(p))
    rep.add(f"{tag}.embedding", f"chain of order {p} realized exactly",
            True, embedding_report.ok, DERIVED)
    rep.add(f"{tag}.chamber.orthogonal", "period class orthogonal to every vertex",
            [0] * emb.size,
            [pair(chamber.period, u) for u in emb.vertex_classes], provenance)
    rep.add(f"{tag}.chamber.positive", "period class has positive square",
            True, square(chamber.period) > 0, DERIVED)
    candidates = default_lift_candidates(ambient)
    lifts = find_characteristic_lifts(emb, candidates, p)
    rep.add(f"{tag}.lifts", f"restriction square -(p-1) = {-(p - 1)} picks the lift pair",
            _coords(expected_lifts), _coords(lifts), provenance)
    model = rational_blowdown(
        ambient, emb, p, chamber,
        simply_connected=True, pi1_note=PI1_NOTE_BLOWDOWN, name=name,
    )
    rep.add(f"{tag}.bookkeeping",
            "blowdown drops (euler, sign) by (p-1, -(p-1))",
            [ambient.euler - (p - 1), ambient.sign + (p - 1)],
            [model.euler, model.sign], DERIVED)
    rep.add(f"{tag}.fingerprint",
            "fingerprint pins the homeomorphism type (projective plane blown up "
            f"{expected_b_minus} times; classification cited, not computed)",
            [1, expected_b_minus, "odd", True], list(fingerprint(model)), provenance)
    rep.add(f"{tag}.convention",
            "SW values compared by absolute value; signs follow the recorded "
            "quotient convention",
            "magnitudes", "magnitudes", DEFINITION)
    rep.add(f"{tag}.sw", "SW magnitudes after the blowdown",
            sorted([n, n]), list(model.sw.magnitudes()), provenance)
    if model.sw.entries:
        k = model.sw.classes()[0]
        rep.add(f"{tag}.basic.square", "square of the transferred basic class",
                lift_square, square(k), provenance)
        rep.add(f"{tag}.basic.dimension", "formal dimension of the transferred class",
                0, dimension(model, k), provenance)
        rep.add(f"{tag}.basic.characteristic", "transferred class is characteristic",
                True, is_characteristic(k), DERIVED)
    verdict = minimality_check(model)
    expectation = "minimal_certified" if n >= 2 else "inconclusive"
    rep.add(f"{tag}.minimality",
            "blowup-pairing obstruction (silent for magnitude-1 tables)",
            expectation, verdict.status, provenance if n >= 2 else DERIVED)
    return model


def build_Xn(n: int) -> tuple[FourManifoldModel, VerificationReport]:
    """The b- = 6 family: surgery by the n-twist knot, three blowups, and an
    order-7 blowdown of the pseudo-section chain."""
    if n < 1:
        raise ValueError("family parameter must be a positive integer")
    rep = VerificationReport()
    y = y_n(n)
    rep.add("xn.yn.sw", "fiber surgery SW magnitudes at the fiber classes",
            sorted([n, n]), list(y.sw.magnitudes()), REPORTED)
    z = z_n(n)
    rep.add("xn.zn.sw.count", "three blowups spread the table over 16 sign classes",
            16, len(z.sw), REPORTED)
    rep.add("xn.zn.sw", "every blown-up class keeps magnitude n",
            sorted([n] * 16), list(z.sw.magnitudes()), REPORTED)
    rep.add("xn.zn.bookkeeping", "(euler, sign) after three blowups",
            [15, -11], [z.euler, z.sign], DEFINITION)
    emb = zn_c7_embedding(z)
    u = emb.vertex_classes
    rep.add("xn.u0.square", "the resolved -9 sphere", -9, square(u[0]), REPORTED)
    chamber = zn_chamber(z)
    H = chamber.period
    h = z.marked_class("h")
    rep.add("xn.H.h", "period class against the reference class", 7, pair(H, h), REPORTED)
    rep.add("xn.H.square", "square of the period class", 5, square(H), REPORTED)
    k_lift = class_from_coeffs(z, {"T": 1, "E0": 1, "E1": 1, "E2": 1})
    rep.add("xn.H.lift", "period class against the lift", 5, pair(H, k_lift), REPORTED)
    rep.add("xn.h.lift", "reference class against the lift", 3, pair(h, k_lift), REPORTED)
    rep.add("xn.lift.profile", "the lift restricts as 7 gamma_0",
            [7, 0, 0, 0, 0, 0], list(emb.pairing_vector(k_lift)), REPORTED)
    rep.add("xn.lift.relsquare", "relative square of the restricted lift",
            "-6", str(relative_square_of_restriction(emb, k_lift)), REPORTED)
    model = _check_blowdown_common(
        rep, "xn", z, emb, 7, chamber,
        [k_lift, -k_lift], n, 6, 3, REPORTED, f"X{n}",
    )
    rep.add("xn.unique", "exactly one basic class up to sign",
            2, len(model.sw), REPORTED)
    return model, rep


def build_b7_family(n: int) -> tuple[FourManifoldModel, VerificationReport]:
    """The b- = 7 family: two blowups and an order-5 chain built from the
    pseudo-section plus one nodal fiber and three tree spheres."""
    if n < 1:
        raise ValueError("family parameter must be a positive integer")
    rep = VerificationReport()
    ambient = b7_ambient(n)
    rep.add("b7.ambient.sw", "two blowups give 8 classes of magnitude n",
            sorted([n] * 8), list(ambient.sw.magnitudes()), DERIVED)
    u = b7_c5_classes(ambient)
    rep.add("b7.u0.square", "pseudo-section plus one fiber, doubly blown up",
            -7, square(u[0]), DERIVED)
    emb = ConfigurationEmbedding(ambient=ambient, chain=cp_chain(5), vertex_classes=u)
    chamber = b7_chamber(ambient)
    k_lift = class_from_coeffs(ambient, {"T": 1, "E0": 1, "E1": 1})
    rep.add("b7.lift.relsquare", "lift target for the order-5 chain",
            "-4", str(relative_square_of_restriction(emb, k_lift)), DERIVED)
    model = _check_blowdown_common(
        rep, "b7", ambient, emb, 5, chamber,
        [k_lift, -k_lift], n, 7, 2, DERIVED, f"b7_{n}",
    )
    return model, rep


def build_b8_family(n: int) -> tuple[FourManifoldModel, VerificationReport]:
    """The b- = 8 family: one blowup and an order-3 chain from the
    pseudo-section plus a single tree sphere."""
    if n < 1:
        raise ValueError("family parameter must be a positive integer")
    rep = VerificationReport()
    rep.add("b8.reading", "family parameters read as b- = 8; the printed b+ = 8 "
            "variant is inconsistent with one blowup of a b+ = 1 manifold",
            "b_minus=8", "b_minus=8", DERIVED)
    ambient = b8_ambient(n)
    rep.add("b8.ambient.sw", "one blowup gives 4 classes of magnitude n",
            sorted([n] * 4), list(ambient.sw.magnitudes()), DERIVED)
    u = b8_c3_classes(ambient)
    rep.add("b8.u0.square", "pseudo-section with its double point blown up",
            -5, square(u[0]), DERIVED)
    emb = ConfigurationEmbedding(ambient=ambient, chain=cp_chain(3), vertex_classes=u)
    chamber = b8_chamber(ambient)
    k_lift = class_from_coeffs(ambient, {"T": 1, "E0": 1})
    rep.add("b8.lift.relsquare", "lift target for the order-3 chain",
            "-2", str(relative_square_of_restriction(emb, k_lift)), DERIVED)
    model = _check_blowdown_common(
        rep, "b8", ambient, emb, 3, chamber,
        [k_lift, -k_lift], n, 8, 1, DERIVED, f"b8_{n}",
    )
    return model, rep


def build_Qn(n: int) -> tuple[FourManifoldModel, VerificationReport]:
    """The b- = 5 family: fibration refactorization, double knot surgery,
    two blowups, and an order-7 chain from the cycle fiber."""
    if n < 1:
        raise ValueError("family parameter must be a positive integer")
    rep = VerificationReport()
    fact = verify_factorization(I6_FACTORIZATION, I6_FIBRATION)
    rep.add("qn.monodromy.refactor", "cycle-fiber word equals the cubed word",
            True, fact.equal, REPORTED)
    rep.add("qn.monodromy.identity", "cycle-fiber word is a fibration word",
            True, evaluate(I6_FACTORIZATION).is_identity(), REPORTED)
    rep.add("qn.monodromy.i6", "first factor is a parabolic block of width 6",
            6, parabolic_width(evaluate("a^6")), REPORTED)
    nodal = [d for d in fact.factors[1:]]
    rep.add("qn.monodromy.nodal", "remaining factors are nodal (trace 2) twists",
            [2] * len(nodal), [d.base_trace for d in nodal], DERIVED)
    v = v_n(n)
    t = v.marked_class("T")
    rep.add("qn.vn.sw.3T", "magnitude n at three times the fiber",
            n, abs(v.sw.value(3 * t)), REPORTED)
    rep.add("qn.vn.sw.T", "magnitude 2n - 1 at the fiber",
            2 * n - 1, abs(v.sw.value(t)), REPORTED)
    rep.add("qn.vn.sw", "full double-surgery table magnitudes",
            sorted([n, n, 2 * n - 1, 2 * n - 1]), list(v.sw.magnitudes()), REPORTED)
    w = w_n(n)
    rep.add("qn.wn.bookkeeping", "(euler, sign) after two blowups",
            [14, -10], [w.euler, w.sign], DEFINITION)
    emb = wn_c7_embedding(w)
    rep.add("qn.u0.square", "pseudo-section with both double points blown up",
            -9, square(emb.vertex_classes[0]), REPORTED)
    profile = wn_c7_profile_embedding(w)
    rep.add("qn.profile.gram", "shipped profile matches the realized chain",
            [list(r) for r in profile.realized_gram()],
            [list(r) for r in emb.realized_gram()], DERIVED)
    for name in ("T", "E0", "E1"):
        rep.add(f"qn.profile.{name}", f"profile row of {name} matches the realization",
                list(profile.profile_row(name)), list(emb.profile_row(name)), DERIVED)
    candidates = [
        {"T": st * 3, "E0": s0, "E1": s1}
        for st in (1, -1) for s0 in (1, -1) for s1 in (1, -1)
    ] + [
        {"T": st, "E0": s0, "E1": s1}
        for st in (1, -1) for s0 in (1, -1) for s1 in (1, -1)
    ]
    profile_lifts = find_characteristic_lifts(profile, candidates, 7)
    expected_lifts = [{"T": 3, "E0": 1, "E1": 1}, {"T": -3, "E0": -1, "E1": -1}]
    rep.add("qn.lifts.profile", "profile-level lift search over both sign families",
            sorted(sorted([k, v] for k, v in d.items()) for d in expected_lifts),
            sorted(sorted([k, v] for k, v in d.items()) for d in profile_lifts),
            REPORTED)
    chamber = wn_chamber(w)
    k_lift = class_from_coeffs(w, {"T": 3, "E0": 1, "E1": 1})
    model = _check_blowdown_common(
        rep, "qn", w, emb, 7, chamber,
        [k_lift, -k_lift], n, 5, 4, REPORTED, f"Q{n}",
    )
    return model, rep


FAMILY_BUILDERS = {
    "Xn": build_Xn,
    "b7_family": build_b7_family,
    "b8_family": build_b8_family,
    "Qn": build_Qn,
}


class ConstructionScript:
    """A named family construction with its positive integer parameter."""

    def __init__(self, name: str, n: int):
        if name not in FAMILY_BUILDERS:
            raise ValueError(f"unknown family {name!r}; choose from {sorted(FAMILY_BUILDERS)}")
        if n < 1:
            raise ValueError("family parameter must be a positive integer")
        self.name = name
        self.n = n

    def run(self) -> tuple[FourManifoldModel, VerificationReport]:
        return FAMILY_BUILDERS[self.name](self.n)


def _lattice_checks(rep: VerificationReport) -> None:
    base = e1()
    eta = base.lattice.basis_class("eta")
    eps1 = base.lattice.basis_class("eps1")
    fiber = base.marked_class("T")
    rep.add("lattice.e1.eta", "defining square of the line class", 1, square(eta), DEFINITION)
    rep.add("lattice.e1.eps", "defining square of an exceptional class",
            -1, square(eps1), DEFINITION)
    rep.add("lattice.e1.fiber", "the cubic fiber has square zero", 0, square(fiber), DERIVED)
    rep.add("lattice.e1.fiber.char", "the fiber class is characteristic",
            True, is_characteristic(fiber), DERIVED)
    rep.add("lattice.e1.zero.char", "zero is not characteristic in an odd lattice",
            False, is_characteristic(base.lattice.zero()), DEFINITION)
    rep.add("lattice.e1.signature", "diagonal form signature",
            [1, 9], list(signature_and_betti(base.lattice)), DEFINITION)
    z = z_n(1)
    u = zn_c7_embedding(z).vertex_classes
    rep.add("lattice.zn.u0u1", "adjacent chain classes meet once", 1, pair(u[0], u[1]), DERIVED)
    rep.add("lattice.zn.u0", "chain head has square -9", -9, square(u[0]), REPORTED)
    spheres = e6_sphere_classes(z)
    rep.add("lattice.e6.squares", "all seven tree spheres have square -2",
            [-2] * 7, [square(spheres[f"S{i}"]) for i in range(1, 8)], REPORTED)
    rep.add("lattice.zn.signature", "three blowups add three negative eigenvalues",
            [1, 12], list(signature_and_betti(z.lattice)), DERIVED)
    k_lift = class_from_coeffs(z, {"T": 1, "E0": 1, "E1": 1, "E2": 1})
    rep.add("lattice.zn.lift.char", "the lift class is characteristic",
            True, is_characteristic(k_lift), REPORTED)
    comp = orthogonal_complement(z.lattice, u)
    rep.add("lattice.zn.complement", "complement of the chain: rank and signature",
            [7, 1, 6], [comp.rank, *comp.signature_and_betti()], REPORTED)
    comp_e0 = orthogonal_complement(z.lattice, [z.marked_class("E0")])
    rep.add("lattice.zn.complement.e0", "complement of one exceptional class",
            [12, 1, 11], [comp_e0.rank, *comp_e0.signature_and_betti()], DERIVED)
    c7 = intersection_matrix(cp_chain(7))
    c7_lattice = IntersectionLattice(tuple(f"u{i}" for i in range(6)), c7.matrix, name="C7")
    rep.add("lattice.c7.signature", "the order-7 chain is negative definite",
            [0, 6], list(signature_and_betti(c7_lattice)), DERIVED)


def _fourmanifold_checks(rep: VerificationReport) -> None:
    n = 3
    y = y_n(n)
    z = z_n(n)
    t = y.marked_class("T")
    rep.add("fourmanifold.yn.dim", "fiber class has formal dimension zero",
            0, dimension(y, t), DERIVED)
    k_lift = class_from_coeffs(z, {"T": 1, "E0": 1, "E1": 1, "E2": 1})
    rep.add("fourmanifold.zn.dim", "lift class has formal dimension zero",
            0, dimension(z, k_lift), REPORTED)
    rep.add("fourmanifold.wallcross.d0", "jump at dimension zero",
            -1, wall_crossing_delta(z, k_lift), DEFINITION)
    rep.add("fourmanifold.zn.blowup16", "three blowups give the 16 sign classes",
            sorted([n] * 16), list(z.sw.magnitudes()), REPORTED)
    chamber = zn_chamber(z)
    rep.add("fourmanifold.zn.sw.agree",
            "chamber value when the period and reference sides agree",
            n, abs(chamber_sw(z, k_lift, chamber)), REPORTED)
    k_flip = class_from_coeffs(z, {"T": 1, "E0": -1, "E1": -1, "E2": -1})
    rep.add("fourmanifold.zn.sw.disagree",
            "chamber value across the wall gains a unit jump",
            n + 1, abs(chamber_sw(z, k_flip, chamber)), DERIVED)
    absent = class_from_coeffs(z, {"T": 3, "E0": 1, "E1": 1, "E2": 1})
    rep.add("fourmanifold.zn.sw.absent",
            "absent class with agreeing signs evaluates to zero",
            0, chamber_sw(z, absent, chamber), DEFINITION)
    # deterministic chamber sample: with b- <= 9 every admissible chamber agrees
    samples = []
    for coeffs in ({"h": 1}, {"h": 2, "eps1": -1}, {"h": 3, "eps2": -2, "eps5": -1},
                   {"h": 5, "eps1": -3, "eps9": 2}):
        period = class_from_coeffs(y, coeffs)
        samples.append(chamber_sw(y, t, Chamber(y, period)))
    rep.add("fourmanifold.yn.welldefined",
            "small b- models have a chamber-independent invariant",
            [samples[0]] * len(samples), samples, DERIVED)
    rep.add("fourmanifold.e1.fingerprint", "fingerprint of the base surface",
            [1, 9, "odd", True], list(fingerprint(e1())), DEFINITION)
    blown = blowup(y_n(1))
    rep.add("fourmanifold.blowup.bookkeeping", "one blowup: (12, -8) -> (13, -9)",
            [13, -9], [blown.euler, blown.sign], DEFINITION)


def _knots_checks(rep: VerificationReport, n_range) -> None:
    rep.add("knots.alexander.n1", "one-twist polynomial",
            "t^1 - 1 + t^-1", str(alexander_twist(1)), REPORTED)
    rep.add("knots.alexander.n0", "the unknot has trivial polynomial",
            "1", str(alexander_twist(0)), DEFINITION)
    rep.add("knots.alexander.n3", "three-twist polynomial",
            "3t^1 - 5 + 3t^-1", str(alexander_twist(3)), REPORTED)
    rep.add("knots.s.rewrite", "twist polynomials rewrite to n s^2 + 1",
            {0: 1, 1: 4}, poly_in_s(alexander_twist(4)), DERIVED)
    rep.add("knots.s.product", "product of rewrites matches rewrite of product",
            poly_in_s(alexander_twist(1) * alexander_twist(4)),
            {0: 1, 1: 5, 2: 4}, DERIVED)
    for n in n_range:
        table = e1_knot_surgery_sw([n])
        rep.add(f"knots.yn.sw.n={n}", "single surgery table at the fiber",
                {1: n, -1: -n} if n else {}, table, REPORTED)
        double = e1_knot_surgery_sw([1, n])
        rep.add(f"knots.vn.sw.n={n}", "double surgery magnitudes at T and 3T",
                [n, 2 * n - 1], [abs(double.get(3, 0)), abs(double.get(1, 0))], REPORTED)
    y = y_n(2)
    rep.add("knots.surgery.preserves", "surgery keeps (euler, sign)",
            [12, -8], [y.euler, y.sign], DERIVED)
    h = y.marked_class("h")
    rep.add("knots.yn.h", "the genus-3 reference class survives surgery",
            [1, 3], [square(h), pair(h, y.marked_class("T"))], REPORTED)


def _monodromy_checks(rep: VerificationReport) -> None:
    ab = evaluate("ab")
    rep.add("monodromy.ab.trace", "product of the two twists has trace 1",
            1, ab.trace, DERIVED)
    rep.add("monodromy.ab.order6", "the product has order exactly 6",
            [False] * 5 + [True], [(ab ** k).is_identity() for k in range(1, 7)], REPORTED)
    rep.add("monodromy.braid", "braid relation",
            True, evaluate("aba") == evaluate("bab"), REPORTED)
    rep.add("monodromy.braid.word", "braid commutator collapses to the identity",
            True, evaluate("abaBAB").is_identity(), REPORTED)
    e6 = verify_factorization(E6_FACTORIZATION, "(ab)^6")
    rep.add("monodromy.e6.refactor", "tree-fiber word equals the sixth power",
            True, e6.equal, REPORTED)
    rep.add("monodromy.e6.identity", "tree-fiber word is a fibration word",
            True, evaluate(E6_FACTORIZATION).is_identity(), REPORTED)
    rep.add("monodromy.e6.nodal", "the last three factors are nodal twists",
            [2, 2, 2], [d.base_trace for d in e6.factors[-3:]], DERIVED)
    i6 = verify_factorization(I6_FACTORIZATION, I6_FIBRATION)
    rep.add("monodromy.i6.refactor", "cycle-fiber word equals the cubed word",
            True, i6.equal, REPORTED)
    rep.add("monodromy.i6.identity", "cycle-fiber word is a fibration word",
            True, evaluate(I6_FACTORIZATION).is_identity(), REPORTED)
    rep.add("monodromy.a3b.order3", "the cubed word is a fibration word",
            True, evaluate(I6_FIBRATION).is_identity(), REPORTED)
    rep.add("monodromy.i6.width", "cycle fiber monodromy has parabolic width 6",
            6, parabolic_width(evaluate("a^6")), REPORTED)
    rep.add("monodromy.i6.nodal", "remaining factors of the cycle word are nodal",
            [2] * 4, [d.base_trace for d in i6.factors[1:]], DERIVED)


def _plumbing_checks(rep: VerificationReport) -> None:
    rep.add("plumbing.c7.weights", "order-7 chain weights",
            [-9, -2, -2, -2, -2, -2], list(cp_chain(7).weights), REPORTED)
    for p in range(2, 21):
        chain = cp_chain(p)
        form = intersection_matrix(chain)
        rep.add(f"plumbing.cp.det.p={p}", "chain determinant has magnitude p^2",
                p * p, abs(form.det), DERIVED)
        cf = continued_fraction_value([-w for w in chain.weights])
        rep.add(f"plumbing.cp.cf.p={p}", "continued fraction evaluates to p^2/(p-1)",
                f"{p * p}/{p - 1}", f"{cf.numerator}/{cf.denominator}", DERIVED)
        inv00 = form.inverse()[0][0]
        rep.add(f"plumbing.cp.inv.p={p}", "head entry of the inverse is -(p-1)/p^2",
                f"-{p - 1}/{p * p}", str(inv00), DERIVED)
        lens = boundary_lens_space(chain)
        rep.add(f"plumbing.cp.lens.p={p}", "boundary lens space order is p^2",
                p * p, lens.order, DERIVED)
    lens7 = boundary_lens_space(cp_chain(7))
    rep.add("plumbing.c7.lens", "twist orbit contains both 6 and -6 mod 49",
            True, 6 in lens7.residue_orbit() and 43 in lens7.residue_orbit(), REPORTED)
    rep.add("plumbing.c2.lens", "single -4 vertex bounds the order-4 lens space",
            [4, 1], [boundary_lens_space(cp_chain(2)).order,
                     boundary_lens_space(cp_chain(2)).twist], DEFINITION)
    rep.add("plumbing.c3.lens", "order-3 chain evaluates to 9/2",
            [9, 2], [boundary_lens_space(cp_chain(3)).order,
                     boundary_lens_space(cp_chain(3)).twist], DERIVED)
    z = z_n(1)
    emb = zn_c7_embedding(z)
    rep.add("plumbing.zn.embedding", "chain classes realize the order-7 matrix",
            True, verify_embedding(emb).ok, DERIVED)
    rep.add("plumbing.e6.embedding", "tree classes realize the tree with fiber orthogonality",
            True, verify_embedding(e6_embedding(z)).ok, DERIVED)
    k_lift = class_from_coeffs(z, {"T": 1, "E0": 1, "E1": 1, "E2": 1})
    rep.add("plumbing.zn.relsquare", "lift restricts with relative square -6",
            "-6", str(relative_square_of_restriction(emb, k_lift)), REPORTED)
    rep.add("plumbing.zn.profile", "lift pairing vector is 7 gamma_0",
            [7, 0, 0, 0, 0, 0], list(emb.pairing_vector(k_lift)), REPORTED)
    lifts = find_characteristic_lifts(emb, default_lift_candidates(z), 7)
    rep.add("plumbing.zn.lifts", "lift search returns exactly the pair",
            _coords([k_lift, -k_lift]), _coords(lifts), REPORTED)
    w = w_n(1)
    wemb = wn_c7_embedding(w)
    k_w = class_from_coeffs(w, {"T": 3, "E0": 1, "E1": 1})
    rep.add("plumbing.wn.relsquare", "cycle-chain lift restricts with relative square -6",
            "-6", str(relative_square_of_restriction(wemb, k_w)), REPORTED)
    wlifts = find_characteristic_lifts(wemb, default_lift_candidates(w), 7)
    rep.add("plumbing.wn.lifts", "cycle-chain lift search returns exactly the pair",
            _coords([k_w, -k_w]), _coords(wlifts), REPORTED)


def _pipeline_checks(rep: VerificationReport, n_range) -> None:
    magnitudes = {}
    for n in (1, 2, 3):
        model, sub = build_Xn(n)
        rep.add(f"pipelines.xn.n={n}", "full b- = 6 pipeline report is green",
                True, sub.all_pass, REPORTED)
        magnitudes[n] = tuple(model.sw.magnitudes())
    for n in (1, 2):
        _, sub = build_Qn(n)
        rep.add(f"pipelines.qn.n={n}", "full b- = 5 pipeline report is green",
                True, sub.all_pass, REPORTED)
    for n in (1, 2):
        _, sub7 = build_b7_family(n)
        rep.add(f"pipelines.b7.n={n}", "full b- = 7 pipeline report is green",
                True, sub7.all_pass, DERIVED)
        _, sub8 = build_b8_family(n)
        rep.add(f"pipelines.b8.n={n}", "full b- = 8 pipeline report is green",
                True, sub8.all_pass, DERIVED)
    separation = [sorted(abs(v) for v in e1_knot_surgery_sw([n]).values()) for n in n_range]
    rep.add("pipelines.separation", "SW magnitude sets separate the family members",
            len(list(n_range)), len({tuple(s) for s in separation}), REPORTED)


def verify_paper(only: str | None = None, n_range=range(1, 11)) -> VerificationReport:
    """Run every golden check; the exit-status of the CLI reflects full pass.

    ``only`` restricts to one module's checks (lattice, fourmanifold, knots,
    monodromy, plumbing, pipelines).
    """
    sections = {
        "lattice": _lattice_checks,
        "fourmanifold": _fourmanifold_checks,
        "knots": lambda rep: _knots_checks(rep, n_range),
        "monodromy": _monodromy_checks,
        "plumbing": _plumbing_checks,
        "pipelines": lambda rep: _pipeline_checks(rep, n_range),
    }
    if only is not None and only not in sections:
        raise ValueError(f"unknown module {only!r}; choose from {sorted(sections)}")
    rep = VerificationReport()
    for name, section in sections.items():
        if only is None or name == only:
            section(rep)
    return rep
