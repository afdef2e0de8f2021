"""Theorem verification suites: green on the corpus, and able to catch bugs."""
import pytest

from widecat.reduction import e_table
from widecat.verify import SUITE_NAMES, run_suite, run_verify

# Exhaustive check counts per algebra.  These are structural: they count
# ordered pairs, morphism pairs (sum of 2^delta), composable triples
# (sum of 3^delta), and so on, so any silent shrink of the sweep shows up.
EXPECTED_CHECKS = {
    "triangle": {
        "homological-lemmas": 174,
        "bijection": 721,
        "composition": 275,
        "associativity": 763,
        "category-axioms": 1956,
        "irreducible": 246,
        "dirrt-bijection": 37,
        "sequences": 906,
    },
    "a2": {
        "homological-lemmas": 20,
        "bijection": 95,
        "composition": 31,
        "associativity": 61,
        "category-axioms": 150,
        "irreducible": 33,
        "dirrt-bijection": 11,
        "sequences": 93,
    },
}


def test_all_suites_green_on_corpus(tri_ctx, a2_ctx, pre_ctx):
    for name, ctx in [("a2", a2_ctx), ("preproj", pre_ctx),
                      ("triangle", tri_ctx)]:
        reports = run_verify(ctx, algebra=name)
        assert [r.suite for r in reports] == list(SUITE_NAMES)
        for r in reports:
            assert r.ok, f"{name}/{r.suite}: {[f.check for f in r.failures]}"
            assert r.checks > 0


@pytest.mark.parametrize("suite", SUITE_NAMES)
def test_check_counts_triangle(tri_ctx, suite):
    rep = run_suite(tri_ctx, suite)
    assert rep.ok
    assert rep.checks == EXPECTED_CHECKS["triangle"][suite]


@pytest.mark.parametrize("suite", SUITE_NAMES)
def test_check_counts_a2(a2_ctx, suite):
    rep = run_suite(a2_ctx, suite)
    assert rep.ok
    assert rep.checks == EXPECTED_CHECKS["a2"][suite]


def test_homological_count_preproj(pre_ctx):
    # 4 indecomposables: 16 ordered pairs x 2 readings, then one translate
    # round trip each way for the two simples (non-projective and
    # non-injective alike here): 32 + 2 + 2
    assert run_suite(pre_ctx, "homological-lemmas").checks == 36


def test_jobs_run_the_same_checks(a2_ctx):
    r1 = run_suite(a2_ctx, "homological-lemmas", jobs=3)
    # 3 indecomposables: 9 ordered pairs x 2 readings, +1 tau and +1 inverse
    # round trip
    assert r1.ok and r1.checks == 2 * 9 + 1 + 1


def test_unknown_suite_rejected(a2_ctx):
    with pytest.raises(ValueError):
        run_suite(a2_ctx, "nope")


def test_report_shapes(a2_ctx):
    rep = run_suite(a2_ctx, "bijection", algebra="a2")
    doc = rep.to_json()
    assert set(doc) == {"suite", "algebra", "checks", "failures", "seconds",
                        "ok"}
    assert doc["suite"] == "bijection" and doc["algebra"] == "a2"
    assert doc["ok"] is True and doc["failures"] == []
    line = rep.describe()
    assert "bijection" in line and "ok" in line and "checks" in line


def test_selected_suites_only(a2_ctx):
    reports = run_verify(a2_ctx, suites=["composition", "sequences"])
    assert [r.suite for r in reports] == ["composition", "sequences"]


def test_mutated_reduction_is_caught(a2_ctx):
    """Planting a collision in the reduction table must turn the suite red."""

    def corrupted(ctx, w, obj):
        table = dict(e_table(ctx, w, obj))
        if w is None and obj.mods and len(table) >= 2:
            ks = sorted(table)
            table[ks[0]] = table[ks[1]]
        return table

    rep = run_suite(a2_ctx, "bijection", table_impl=corrupted)
    assert not rep.ok
    assert any(f.check == "summand-map-injective" for f in rep.failures)
    assert all(f.counterexample for f in rep.failures)
