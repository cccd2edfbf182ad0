import random

import pytest

from invcheck.forms import Context
from invcheck.identities import catalog, get_entry, mutate, run_catalog, verify_expand, verify_random

ENTRIES = catalog()
IDS = [e.id for e in ENTRIES]


@pytest.mark.parametrize("entry", ENTRIES, ids=IDS)
def test_expand(entry):
    r = verify_expand(entry)
    if entry.report_only:
        pytest.skip(f"report-only entry ({r.status})")
    assert r.status == "pass", r.witness


@pytest.mark.parametrize("entry", ENTRIES, ids=IDS)
def test_random_agrees_with_expand(entry):
    expected = verify_expand(entry).status
    for seed in (0, 1, 2):
        assert verify_random(entry, 10, seed).status == expected


def test_bu1_spot_value():
    c = Context("y5", [1, 2, 0, 0, 0])
    assert c.form("t") == -671
    assert c.form("Phi") ** 3 - 64 * c.form("Psi") ** 3 == 450241 == (-671) ** 2


def test_w3_difference_is_zero_polynomial():
    from invcheck.forms import symbolic_context

    ((_, lhs, rhs),) = get_entry("W-3").builder(symbolic_context("w6"))
    assert (lhs - rhs).is_zero()


def test_corrupted_entry_fails_with_point():
    mutant, info = mutate(get_entry("IG-1"), random.Random(4))
    assert verify_expand(mutant).status == "fail"
    r = verify_random(mutant, 10, 0)
    assert r.status == "fail"
    assert r.witness["point"]


def test_mutations_detected():
    rng = random.Random(2024)
    pool = [e for e in ENTRIES if verify_expand(e).status == "pass" and not e.heavy]
    for entry in rng.sample(pool, 10):
        mutant, info = mutate(entry, rng)
        caught = verify_expand(mutant).status == "fail" or verify_random(mutant, 10, 0).status == "fail"
        assert caught, (entry.id, info)


def test_filters():
    assert [r.id for r in run_catalog("IG")] == [f"IG-{i}" for i in range(1, 8)]
    assert run_catalog("nothing-matches") == []
    with pytest.raises(KeyError):
        get_entry("XX-1")


def test_results_are_deterministic():
    a = [r.to_json(timing=False) for r in run_catalog("KL", "random", seed=7)]
    b = [r.to_json(timing=False) for r in run_catalog("KL", "random", seed=7)]
    assert a == b
