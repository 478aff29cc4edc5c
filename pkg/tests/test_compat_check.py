import json
from pathlib import Path

import pytest

import oracles
from shufflealg.compat import check_compatibility
from shufflealg.compat.catalog import CLAIMED_INCOMPATIBLE, claim
from shufflealg.compat.check import realizations
from shufflealg.comps import comp_of_perm
from shufflealg.suites import compat_record

GOLDEN = json.loads((Path(__file__).parent / "golden" / "witnesses.json").read_text())


def test_spec_examples():
    assert check_compatibility("Des", 8).compatible
    assert not check_compatibility("br", 8).compatible
    assert not check_compatibility("(pk,val)", 8).compatible
    assert check_compatibility("pk", 2).compatible
    with pytest.raises(ValueError):
        check_compatibility("pk", 1)


@pytest.mark.parametrize("name", ["des", "pk", "Lpk", "Epk", "udr", "br", "(pk,val)",
                                  "altdes", "ddes", "(Pk,val)", "(br,lpk)", "maj"])
def test_verdict_matches_exhaustive_oracle(name):
    # the oracle tries every labeling of every disjoint pair
    assert check_compatibility(name, 5).compatible == oracles.compatible(name, 5)


def test_relabelings_are_seeded_and_valid():
    J, K = (1, 2), (2, 1)
    a = realizations(J, K, 3, seed=7)
    assert a == realizations(J, K, 3, seed=7)
    assert a[0].label == "canonical" and len(a) == 4
    for r in a:
        assert comp_of_perm(r.p) == J and comp_of_perm(r.s) == K
        assert set(r.p) | set(r.s) == set(range(1, 7))


def test_witness_invariants():
    v = check_compatibility("(pk,val)", 8)
    a, b = v.witness["first"], v.witness["second"]
    assert oracles.stat("(pk,val)", tuple(a["p"])) == oracles.stat("(pk,val)", tuple(b["p"]))
    assert oracles.stat("(pk,val)", tuple(a["s"])) == oracles.stat("(pk,val)", tuple(b["s"]))
    assert a["distribution"] != b["distribution"]


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_golden_witnesses_reproduce(name):
    rec = compat_record(name, 8)
    assert rec["status"] == "pass"
    assert rec["params"]["bound"] == GOLDEN[name]["bound"]
    assert rec["witness"] == GOLDEN[name]["witness"]


def test_golden_covers_every_listed_statistic():
    assert len(GOLDEN) == len(CLAIMED_INCOMPATIBLE)
    assert all(claim(n) == "incompatible" for n in GOLDEN)


def test_jobs_do_not_change_verdict():
    a = check_compatibility("(Epk,des)", 7, jobs=1)
    b = check_compatibility("(Epk,des)", 7, jobs=2)
    assert a.to_dict() == b.to_dict()
