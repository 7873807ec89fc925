import gpi


def test_catalog_list():
    ids = {e["id"] for e in gpi.catalog_list()}
    assert {"A1", "A2", "A6", "A9", "B1", "E"} <= ids


def test_validate_catalog_body():
    rep = gpi.validate("catalog:A9(g,g,g)@Z2")
    assert rep["ok"]
    assert rep["wedderburn_ok"]


def test_codim_group_algebra():
    rep = gpi.codim("catalog:A2(3)@Z3", n=4)
    totals = [r["totals"]["c"] for r in rep["reports"]]
    assert totals == [3, 9, 27, 81]
    assert all(r["totals"]["cz"] == 0 for r in rep["reports"])


def test_exponent_certificate():
    rep = gpi.exponent("catalog:A2(3)@Z3", max_degree=2)
    assert rep["exp"] == 3
    assert rep["delta_exact"] == 3
    assert rep["delta_le_exp"] is True


def test_classify():
    assert gpi.classify_poly("catalog:E@Z1", "[x1:1, x2:1]") == "proper-central"
    assert gpi.classify_poly("catalog:B1(1,g)@Z2", "x1:1 x2:g") == "identity"
    assert gpi.classify_poly("catalog:A1(g,0)@Z2", "[x1:1, x2:1]") == "not-central"


def test_roundtrip_document():
    doc = gpi.catalog_emit("catalog:A6(g,1,g)@Z2")
    assert doc["group"]["orders"] == [2]
    assert len(doc["basis"]) == 9
    rep = gpi.validate(__import__("json").dumps(doc))
    assert rep["ok"]


def test_suite():
    res = gpi.verify_suite("prop5.4")
    assert res["pass"]
    assert len(res["checks"]) >= 10
