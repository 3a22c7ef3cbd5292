import json

import pytest

from formagraph import catalog as C
from formagraph import formations as FM
from formagraph import lab


def cases_for(result, group, formation=None):
    return [c for c in result.cases
            if c.group == group and (formation is None or c.formation == formation)]


def test_radicals_examples():
    r = lab.suite_radical_identities(groups=["S3", "A5", "C12"])
    assert r.ok and r.summary["fail"] == 0
    assert len(cases_for(r, "A5")) == 3


def test_semiregularity_t100_witness():
    r = lab.suite_semiregularity(groups=["T100", "S4"], formations=["tgroups", "supersoluble"])
    (t,) = cases_for(r, "T100", "tgroups")
    assert t.verdict == lab.FAIL and not t.asserted
    assert t.witness
    assert all(c.verdict == lab.PASS for c in cases_for(r, "S4"))
    assert r.ok


def test_semiregularity_abelian_trivially():
    r = lab.suite_semiregularity(groups=["C12", "C2^3"], formations=["supersoluble", "fitting:2"])
    assert all(c.verdict == lab.PASS for c in r.cases)


def test_regularity_g200():
    r = lab.suite_regularity_witness(groups=["G200", "S3"], formations=["supersoluble",
                                                                        "nilpotent"])
    (g,) = cases_for(r, "G200", "supersoluble")
    assert g.verdict == lab.PASS and g.asserted
    assert all(c.verdict == lab.PASS for c in cases_for(r, "S3"))


def test_connectivity_examples():
    r = lab.suite_connectivity(groups=["S4", "A5", "C6"], formations=["supersoluble", "soluble"])
    assert r.ok and r.summary["fail"] == 0


def test_planarity_examples():
    r = lab.suite_planarity(groups=["S3", "D6", "S4"], formations=["nilpotent", "supersoluble"])
    assert r.ok and r.summary["fail"] == 0
    (d6,) = cases_for(r, "D6", "nilpotent")
    assert d6.witness["planar"] is False


def test_icyc_examples():
    r = lab.suite_icyc(groups=["C6", "S3", "S3xC2"], formations=["abelian", "nilpotent"])
    assert r.ok and r.summary["fail"] == 0


def test_search_critical_small():
    r = lab.search_critical(max_order=24, formations=["abelian"])
    crit = {c.group for c in r.cases if c.formation == "abelian"}
    assert {"S3", "Q8"} <= crit
    (q8,) = cases_for(r, "Q8", "abelian")
    assert q8.witness["quotient_cyclic"] is False


def test_search_critical_abelian_catalog_is_empty():
    r = lab.search_critical(groups=["C4", "C6", "C2^3", "C5^2"], formations=["abelian",
                                                                              "nilpotent"])
    assert r.cases == []


def test_search_critical_g200():
    r = lab.search_critical(groups=["G200"], formations=["supersoluble"])
    (g,) = r.cases
    assert g.verdict == lab.PASS and g.witness["quotient_cyclic"] is False


def test_semi_structure_report_only():
    r = lab.suite_thm_semi_structure("G200", "supersoluble", 5)
    assert r.cases and all(not c.asserted for c in r.cases)
    item2 = [c for c in r.cases if c.check.startswith("(2)")]
    assert item2 and all(c.verdict == lab.PASS for c in item2)
    r = lab.suite_thm_semi_structure("S3", "nilpotent", 3)
    (local,) = [c for c in r.cases if c.check.startswith("(4)")]
    assert local.verdict == lab.SKIPPED and "error" in local.witness


def test_failure_records_carry_witnesses():
    r = lab.suite_semiregularity(groups=["T100", "A5"], formations=["tgroups"])
    for c in r.failures(asserted_only=False):
        assert c.witness


def test_suite_json_schema():
    r = lab.suite_planarity(groups=["S3"], formations=["nilpotent"])
    doc = json.loads(r.dumps())
    assert set(doc) == {"suite", "cases", "summary", "wall_time"}
    assert {"group", "formation", "verdict", "witness"} <= set(doc["cases"][0])
    assert "wall_time" not in r.to_json(timing=False)


def test_unknown_suite():
    with pytest.raises(ValueError):
        lab.run_suite("nope")


def test_parallel_matches_serial():
    groups = ["S3", "S4", "D6", "A4", "Q8", "T100", "S3xC2"]
    a = lab.run_suite("connectivity", groups=groups, workers=1)
    b = lab.run_suite("connectivity", groups=groups, workers=3)
    assert a.dumps(timing=False) == b.dumps(timing=False)
