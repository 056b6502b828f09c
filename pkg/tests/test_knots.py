import random

import pytest

from swsurgery.knots import (
    LaurentPolynomial,
    TwistKnot,
    alexander_twist,
    e1_knot_surgery_sw,
    knot_surgery_manifold,
    poly_in_s,
    s_series_product,
)
from swsurgery.lattice import pair, square
from swsurgery.manifold import blowup

S_LAURENT = LaurentPolynomial.from_doubled({1: 1, -1: -1})  # t^(1/2) - t^(-1/2)


def test_alexander_values():
    assert str(alexander_twist(1)) == "t^1 - 1 + t^-1"
    assert str(alexander_twist(0)) == "1"
    assert str(alexander_twist(3)) == "3t^1 - 5 + 3t^-1"


def test_alexander_normalization_and_symmetry():
    for n in range(-10, 11):
        poly = alexander_twist(n)
        assert poly.at_one() == 1
        assert poly.is_symmetric()


def test_parse_round_trip():
    for text in ("3t^1 - 5 + 3t^-1", "t^1/2", "t^-3/2", "-t^2 + 4", "1", "-7",
                 "2t^3/2 - 2t^-3/2", "t - 1 + t^-1"):
        poly = LaurentPolynomial.parse(text)
        assert LaurentPolynomial.parse(str(poly)) == poly


def test_parse_errors():
    for bad in ("3x", "t^", "3 5", "", "+ - 1"):
        with pytest.raises(ValueError):
            LaurentPolynomial.parse(bad)


def test_poly_in_s_twist():
    for n in (0, 1, 3, 7):
        expected = {0: 1} if n == 0 else {0: 1, 1: n}
        assert poly_in_s(alexander_twist(n)) == expected


def test_poly_in_s_product():
    product = alexander_twist(1) * alexander_twist(4)
    assert poly_in_s(product) == {0: 1, 1: 5, 2: 4}


def test_poly_in_s_multiplicative():
    rng = random.Random(5)
    for _ in range(200):
        a, b = rng.randint(-6, 6), rng.randint(-6, 6)
        pa, pb = alexander_twist(a), alexander_twist(b)
        assert poly_in_s(pa * pb) == s_series_product(poly_in_s(pa), poly_in_s(pb))


def test_poly_in_s_errors():
    with pytest.raises(ValueError, match="symmetric"):
        poly_in_s(LaurentPolynomial.parse("t^1 - 1"))
    with pytest.raises(ValueError, match="normalization"):
        poly_in_s(LaurentPolynomial.parse("t^1 + 1 + t^-1"))
    with pytest.raises(ValueError, match="integer exponents"):
        poly_in_s(LaurentPolynomial.parse("t^1/2 + t^-1/2"))


def test_surgery_tables():
    for n in range(1, 11):
        assert e1_knot_surgery_sw([n]) == {1: n, -1: -n}
        assert e1_knot_surgery_sw([1, n]) == {3: n, 1: -(2 * n - 1), -1: 2 * n - 1, -3: -n}
    assert e1_knot_surgery_sw([]) == {}
    assert e1_knot_surgery_sw([0]) == {}


def test_surgery_table_antisymmetry_random():
    rng = random.Random(17)
    for _ in range(300):
        knots = [rng.randint(-6, 6) for _ in range(rng.randint(1, 3))]
        table = e1_knot_surgery_sw(knots)
        for j, v in table.items():
            assert table[-j] == -v


def test_quotient_reconstruction_oracle():
    # s * (expanded quotient) + P(0) must reproduce the full product in t
    rng = random.Random(29)
    for _ in range(200):
        knots = [rng.randint(-5, 5) for _ in range(rng.randint(1, 3))]
        polys = [alexander_twist(n) for n in knots]
        product = LaurentPolynomial.constant(1)
        for poly in polys:
            product = product * poly
        table = e1_knot_surgery_sw(knots)
        quotient = LaurentPolynomial.from_doubled(table)
        constant = s_series_product(*[poly_in_s(p) for p in polys]).get(0, 0)
        assert S_LAURENT * quotient + LaurentPolynomial.constant(constant) == product


def test_knot_surgery_manifold(e1_model):
    fiber = e1_model.marked_class("T")
    y = knot_surgery_manifold(e1_model, fiber, TwistKnot(4))
    assert (y.euler, y.sign) == (12, -8)
    assert y.sw.magnitudes() == (4, 4)
    h = y.marked_class("h")
    assert square(h) == 1 and pair(h, fiber) == 3
    unknot = knot_surgery_manifold(e1_model, fiber, TwistKnot(0))
    assert len(unknot.sw) == 0


def test_double_surgery(v3):
    t = v3.marked_class("T")
    assert abs(v3.sw.value(3 * t)) == 3
    assert abs(v3.sw.value(t)) == 5
    assert v3.sw.magnitudes() == (3, 3, 5, 5)


def test_knot_surgery_errors(e1_model, y3):
    h = e1_model.marked_class("h")
    with pytest.raises(ValueError, match="square-zero"):
        knot_surgery_manifold(e1_model, h, TwistKnot(1))
    doubled_fiber = 2 * e1_model.marked_class("T")
    with pytest.raises(ValueError, match="marked class T"):
        knot_surgery_manifold(e1_model, doubled_fiber, TwistKnot(1))
    blown = blowup(y3)
    with pytest.raises(ValueError, match="3 sign \\+ 2 euler"):
        knot_surgery_manifold(blown, blown.marked_class("T"), TwistKnot(1))


def test_resurgery_needs_history(y3):
    from swsurgery.manifold import FourManifoldModel

    loaded = FourManifoldModel.from_dict(y3.to_dict())
    with pytest.raises(ValueError, match="history"):
        knot_surgery_manifold(loaded, loaded.marked_class("T"), TwistKnot(2))


def test_general_symmetric_alexander_accepted(e1_model):
    fiber = e1_model.marked_class("T")
    # trefoil-like input given directly as a polynomial
    poly = LaurentPolynomial.parse("t^1 - 1 + t^-1")
    model = knot_surgery_manifold(e1_model, fiber, poly)
    assert model.sw.magnitudes() == (1, 1)
