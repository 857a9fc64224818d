"""Theorem checkers and the corpus sweep."""

from __future__ import annotations

import pytest

from gpi.catalog import build_group, corpus_names
from gpi.groups import LimitExceeded
from gpi.series import normal_subgroups
from gpi import verify as verify_mod
from gpi.verify import (
    CHECKERS,
    LABELS,
    THEOREM_IDS,
    run_corpus,
    verify_all,
    verify_theorem,
)


def test_theorem_id_table():
    assert THEOREM_IDS == ("t11", "t12", "t13", "t14", "cls", "l28", "l214")
    assert set(LABELS) == set(CHECKERS) == set(THEOREM_IDS)
    with pytest.raises(ValueError):
        verify_theorem("t99", build_group("S4"))


def test_t13_on_s4():
    # p=2: D8 contains a cyclic subgroup of order 4, refused in S4, so the
    # hypothesis fails; p=3: the Sylow has order 3 < 9, not applicable.
    rep = verify_theorem("t13", build_group("S4"))
    assert rep.instances == 2
    assert rep.applicable == 1
    assert rep.hypothesis_true == 0
    assert rep.ok
    by_p = {d["p"]: d for d in rep.details}
    assert by_p[2]["hypothesis"] is False
    assert by_p[3]["applicable"] is False


def test_cls_branch_on_sl25():
    # The only 2-maximal subgroup of Q8 is the centre, which has a witness,
    # so the hypothesis holds; SL(2,5) is not 2-soluble and |P| = 8, so the
    # conclusion must come from the quaternion branch.
    rep = verify_theorem("cls", build_group("SL(2,5)"))
    assert rep.applicable == 1
    assert rep.hypothesis_true == 1
    assert rep.ok
    d = next(d for d in rep.details if d["p"] == 2)
    assert d["hypothesis"] is True and d["conclusion"] is True
    assert d["family"] == 1


def test_t14_quaternion_clause_is_load_bearing():
    # Without the order-4 cyclics the 2-maximal family of Q8 would pass on
    # SL(2,5) while the conclusion fails; the clause must kill the
    # hypothesis.
    rep = verify_theorem("t14", build_group("SL(2,5)"), primes=[2])
    (d,) = rep.details
    assert d["family"] == 1 + 3
    assert d["hypothesis"] is False
    assert rep.ok


def test_l28_hypothesis_profiles():
    # Every Sylow subgroup of A5 is refused, so the lemma is vacuous there;
    # in S4 both Sylows have witnesses and S4 is soluble.
    rep = verify_theorem("l28", build_group("A5"))
    assert rep.instances == 3 and rep.hypothesis_true == 0 and rep.ok
    rep = verify_theorem("l28", build_group("S4"))
    assert rep.instances == 2 and rep.hypothesis_true == 2 and rep.ok
    assert all(d["conclusion"] for d in rep.details)


def test_l214_checks_both_directions():
    rep = verify_theorem("l214", build_group("SL(2,3)"))
    assert rep.instances == 2
    assert {d["order"] for d in rep.details} == {2, 8}
    by_order = {d["order"]: d for d in rep.details}
    assert by_order[2]["left"] and by_order[2]["right"]
    assert not by_order[8]["left"] and not by_order[8]["right"]
    assert all(d["conclusion"] for d in rep.details)


def test_prime_restriction():
    G = build_group("S4")
    rep = verify_theorem("t11", G, primes=[2])
    # Normal subgroups of even order: V4, A4, S4.
    assert rep.instances == 3
    assert all(d["p"] == 2 for d in rep.details)
    rep = verify_theorem("l28", G, primes=[3])
    assert rep.instances == 1 and rep.details[0]["p"] == 3
    assert verify_theorem("t13", G, primes=[7]).instances == 0


def test_normal_restriction():
    G = build_group("S4")
    v4 = next(N for N in normal_subgroups(G) if N.order == 4)
    rep = verify_theorem("t12", G, normal_only=v4)
    assert rep.instances == 1
    assert rep.details[0]["E"] == 4
    with pytest.raises(ValueError):
        verify_theorem("l28", G, normal_only=v4)
    four_cycle = next(g for g in range(G.n) if G.element_order(g) == 4)
    with pytest.raises(ValueError):
        verify_theorem("t11", G, normal_only=G.generated([four_cycle]))


def test_exhaustive_mode_scans_whole_family():
    G = build_group("S4")
    fast = verify_theorem("t13", G, primes=[2]).details[0]
    full = verify_theorem("t13", G, exhaustive=True, primes=[2]).details[0]
    assert fast["checked"] < full["checked"] == full["family"]
    # Exhaustive mode still evaluates the conclusion under a false
    # hypothesis, for the record, without creating violations.
    assert full["hypothesis"] is False
    assert full["conclusion"] is not None


def test_verify_all_covers_every_theorem():
    reports = verify_all(build_group("SL(2,3)"))
    assert [r.theorem for r in reports] == list(THEOREM_IDS)
    assert all(r.ok for r in reports)


def test_run_corpus_zero_violations():
    reports = run_corpus(names=["S4", "A5", "SL(2,3)"])
    assert len(reports) == 3 * len(THEOREM_IDS)
    assert all(r.ok for r in reports)
    assert {r.group for r in reports} == {"S4", "A5", "SL(2,3)"}


def test_run_corpus_records_resource_errors_as_skips(monkeypatch):
    def blown(G, exhaustive=False, primes=None):
        raise LimitExceeded("synthetic ceiling")

    monkeypatch.setitem(verify_mod.CHECKERS, "l28", blown)
    reports = run_corpus(names=["S4"], tids=["l28", "l214"])
    skipped = next(r for r in reports if r.theorem == "l28")
    assert skipped.ok and skipped.applicable == 0
    assert skipped.details == [{"applicable": False, "skipped": "synthetic ceiling"}]
    assert next(r for r in reports if r.theorem == "l214").instances > 0


def test_report_json_shape():
    rep = verify_theorem("cls", build_group("SL(2,5)"))
    data = rep.to_json()
    assert data["theorem"] == "cls"
    assert data["label"] == LABELS["cls"]
    assert data["ok"] is True and data["violations"] == []
    assert data["instances"] == len(data["details"])


def test_corpus_catalogue_is_big_enough():
    assert len(corpus_names()) >= 15
