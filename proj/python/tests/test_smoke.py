import pytest

import sclab


def test_d8_basics():
    g = sclab.load_group("builtin:D8")
    assert g.order == 8
    assert g.subgroup_count == 10
    assert g.primes == [2]
    assert len(sclab.collection_kinds()) == 13
    assert len(g.collection(2, "B")) == 1
    assert len(g.collection(2, "E")) == 1
    assert len(g.collection(2, "tilde-A")) == 3


def test_conditions_and_homology():
    d12 = sclab.load_group("builtin:D12")
    c = sclab.conditions(d12, 2)
    assert c["M"]["holds"] and c["Cl"]["holds"]
    assert not c["Ch"]["holds"] and c["Ch"]["witnesses"]
    a5 = sclab.load_group("builtin:A5")
    h = sclab.homology(a5, 2, "A")
    assert h["reduced_betti"][0] == 4


def test_verify_report():
    r = sclab.verify(sclab.load_group("builtin:S4"), 2)
    assert r["summary"]["exit_code"] == 0
    assert not r["summary"]["mismatch"]
    assert r["edges"]
    md = sclab.load_group("builtin:Zn:3").verify(3, "table31", "markdown")
    assert "| table31 |" in md


def test_errors():
    with pytest.raises(sclab.UnknownBuiltin):
        sclab.load_group("builtin:Nope")
    with pytest.raises(sclab.PrimeDoesNotDivide):
        sclab.conditions(sclab.load_group("builtin:D8"), 3)
    with pytest.raises(sclab.CapExceeded):
        sclab.load_group("builtin:S5", max_order=60)
    with pytest.raises(ValueError):
        sclab.load_group("builtin:D8").collection(2, "nope")
