import pytest

import gitstab


def test_counts_and_candidates():
    assert gitstab.monomial_count("p1:1,p1:1,p2:2") == 24
    assert gitstab.monomial_count("p(1,1,2):2,p2:2") == 24
    assert gitstab.candidates("p1:1") == [[[1, -1]]]
    assert len(gitstab.candidates("p1:1,p1:1,p2:2", jobs=2)) == 556


def test_signature_and_milnor():
    assert gitstab.signature([[0, 2, 3], [2, 0, 3], [3, 3, 2]]) == (1, 2, 0)
    assert gitstab.milnor_number("a^2 + b^3", ["a", "b"]) == 2
    assert gitstab.milnor_number("a^2 + b^2 + c^2", ["a", "b", "c", "d"]) is None


def test_singularity_label():
    f = "x0*y0*z0^2 + x1*y1*z1^2"
    assert gitstab.singularity_label(f, "p1:1,p1:1,p2:2", "[[1:0],[1:0],[1:0:0]]") == "NotOnHypersurface"


def test_reports():
    assert gitstab.ledger_report()["passed"]
    assert gitstab.lattice_report("signature")["signature"] == [1, 2, 0]
    doc = gitstab.classify_fixture_report("Noplus:lambda7")
    assert doc["verdict"]["class"] == "Unstable"
    assert doc["schema_version"] == gitstab.SCHEMA_VERSION
    sing = gitstab.sing_report("N0lambda6-ones", "fixed")
    assert sing["patterns"]["fixed"]["label_counts"] == {"D_4": 2}
    assert gitstab.classify_report("x0*y0*z0^2 + x1*y1*z2^2")["verdict"]["class"] in (
        "Unstable", "StrictlySemistable", "Stable")


def test_errors():
    with pytest.raises(gitstab.ParseError):
        gitstab.classify_report("x0*y0*")
    with pytest.raises(gitstab.DegreeMismatchError):
        gitstab.classify_report("x0*y0*z0")
    with pytest.raises(gitstab.ProfileError):
        gitstab.candidates("p(1,1,2):2,p2:2")
    with pytest.raises(gitstab.FixtureError):
        gitstab.classify_fixture_report("missing")
