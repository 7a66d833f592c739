import pytest

from bnlab.report import Entry, VerificationReport, build_report


@pytest.fixture(scope="module")
def report():
    return build_report(8)


def test_all_entries_pass_or_assumed(report):
    assert report.ok
    assert report.summary()["fail"] == 0
    assumed = {e.claim_id.split("/")[0] for e in report.entries if e.status == "assumed"}
    assert assumed == {"l-g.h0", "ruled.h0"}


def test_claim_ids_unique_and_stable(report):
    ids = [e.claim_id for e in report.entries]
    assert len(ids) == len(set(ids))
    for needed in (
        "duval-pencil.lambda/g=008",
        "weierstrass-class.pairing.duval/g=002",
        "bn-class.pairing.iota/g=005",
        "z10.pairing.duval",
        "additivity.two-pointed",
        "chain.eh-agreement",
        "fixture.sum.non-torsion",
    ):
        assert needed in ids


def test_exact_values_are_strings(report):
    for e in report.entries:
        assert isinstance(e.computed, str) and isinstance(e.expected, str)
        assert "." not in e.computed or e.computed.startswith("(")


def test_json_roundtrip_byte_identical(report):
    text = report.to_json()
    back = VerificationReport.from_json(text)
    assert back.to_json() == text


def test_determinism():
    assert build_report(5).to_json() == build_report(5).to_json()


def test_notes_mention_known_discrepancies(report):
    joined = "\n".join(report.notes)
    assert "-261" in joined
    assert "(5234, 37866)" in joined


def test_table_shows_failures():
    rep = VerificationReport(entries=[
        Entry("a.x/g=002", "x = 1", "1", "1", "pass"),
        Entry("a.x/g=003", "x = 1", "2", "1", "fail"),
        Entry("b", "y = 0", "0", "0", "assumed"),
    ], g_max=3)
    table = rep.to_table()
    assert "FAIL     a.x" in table
    assert "a.x/g=003: computed=2 expected=1" in table
    assert "ASSUMED  b" in table
    assert not rep.ok


def test_unknown_status_rejected():
    rep = VerificationReport(entries=[Entry("a", "", "1", "1", "pass")])
    text = rep.to_json().replace('"status": "pass"', '"status": "maybe"')
    with pytest.raises(ValueError):
        VerificationReport.from_json(text)


def test_g_max_bound():
    with pytest.raises(ValueError):
        build_report(1)
