import pytest

from swsurgery.manifold import dimension, fingerprint
from swsurgery.pipelines import (
    ConstructionScript,
    build_b7_family,
    build_b8_family,
    build_Qn,
    build_Xn,
    verify_paper,
)


@pytest.mark.parametrize("builder,b_minus", [
    (build_Xn, 6), (build_Qn, 5), (build_b7_family, 7), (build_b8_family, 8),
])
def test_families_pass(builder, b_minus):
    for n in (1, 2):
        model, rep = builder(n)
        assert rep.all_pass, [c.id for c in rep.failures()]
        assert tuple(fingerprint(model)) == (1, b_minus, "odd", True)
        assert model.sw.magnitudes() == (n, n)
        for k, _ in model.sw.items():
            assert dimension(model, k) == 0


def test_family_rejects_bad_parameter():
    for builder in (build_Xn, build_Qn, build_b7_family, build_b8_family):
        with pytest.raises(ValueError):
            builder(0)


def test_construction_script_dispatch():
    model, rep = ConstructionScript("Xn", 2).run()
    assert model.name == "X2"
    assert rep.all_pass
    with pytest.raises(ValueError, match="unknown family"):
        ConstructionScript("nope", 2)
    with pytest.raises(ValueError, match="positive"):
        ConstructionScript("Qn", 0)


def test_blowdown_bookkeeping_deltas():
    for builder, p, ambient_es in (
        (build_Xn, 7, (15, -11)),
        (build_Qn, 7, (14, -10)),
        (build_b7_family, 5, (14, -10)),
        (build_b8_family, 3, (13, -9)),
    ):
        model, _ = builder(2)
        assert model.euler == ambient_es[0] - (p - 1)
        assert model.sign == ambient_es[1] + (p - 1)


def test_magnitude_separation():
    xs = {n: build_Xn(n)[0].sw.magnitudes() for n in range(1, 7)}
    assert len(set(xs.values())) == 6
    qs = {n: build_Qn(n)[0].sw.magnitudes() for n in range(1, 5)}
    assert len(set(qs.values())) == 4


def test_verify_paper_green_and_deterministic():
    rep1 = verify_paper()
    assert rep1.all_pass, [c.id for c in rep1.failures()]
    rep2 = verify_paper()
    assert rep1.to_json() == rep2.to_json()
    assert rep1.to_json().encode() == rep2.to_json().encode()


def test_verify_paper_only_filter():
    rep = verify_paper(only="monodromy")
    assert rep.all_pass
    assert all(c.id.startswith("monodromy.") for c in rep.checks)
    with pytest.raises(ValueError, match="unknown module"):
        verify_paper(only="gauge_theory")


def test_report_shape():
    rep = verify_paper(only="knots")
    data = rep.to_dict()
    assert set(data) == {"version", "checks", "summary"}
    assert data["summary"] == {"passed": len(data["checks"]), "failed": 0}
    for check in data["checks"]:
        assert {"id", "description", "expected", "computed", "pass",
                "paper_ref", "provenance_tag"} <= set(check)
        assert check["provenance_tag"] in ("reported", "derived", "definition")


def test_family_reports_are_deterministic():
    _, rep1 = build_Xn(2)
    _, rep2 = build_Xn(2)
    assert rep1.to_json() == rep2.to_json()


def test_b8_report_flags_reading():
    _, rep = build_b8_family(1)
    ids = {c.id for c in rep.checks}
    assert "b8.reading" in ids


def test_b7_b8_derivations_labeled_derived():
    for builder, tag in ((build_b7_family, "b7"), (build_b8_family, "b8")):
        _, rep = builder(2)
        by_id = {c.id: c for c in rep.checks}
        assert by_id[f"{tag}.sw"].provenance == "derived"
        assert by_id[f"{tag}.u0.square"].provenance == "derived"
