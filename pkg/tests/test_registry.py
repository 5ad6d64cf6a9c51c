import pytest

from sortsubst.laws.enumerate import DEFAULT, EnumConfig
from sortsubst.laws.registry import (
    REGISTERED_LAWS, bounds_ladder, law_names, registry, run_budgeted, run_law, run_sampled, select,
)

QUICK = EnumConfig(1, 2, 4, 3, 4)

SUBST_LAWS = ("[id]", "⁺-nat[]v", "∘id", "id∘", "suc[]", "⁺∘", "[∘]", "∘∘", "tm[]", "↑∘", "⁺-nat∘",
              "⁺-nat[]", "zero[]", "tm⊑zero", "suc[id⁺]", "⊑∘", "∘⊑", "t[⊑]", "⊑⁺", "⊑↑", "v[⊑]")


def test_registry_shape():
    names = law_names()
    assert len(names) == REGISTERED_LAWS == 65
    assert len(set(names)) == len(names)
    assert set(SUBST_LAWS) <= set(names)
    groups = {law.group for law in registry()}
    assert groups == {"subst", "oracle", "types", "norm", "embed", "cwf"}
    assert len(select(groups=["cwf"])) == 16
    assert "stab" in names


def test_select_rejects_unknown_names():
    with pytest.raises(KeyError):
        select(["no-such-law"])


@pytest.mark.parametrize("law", registry(), ids=lambda law: law.name)
def test_law_holds_at_quick_bounds(law):
    rep = run_law(law, QUICK)
    assert rep.first_counterexample is None, rep.first_counterexample
    assert rep.complete and rep.instances_checked > 0


@pytest.mark.parametrize("law", registry(), ids=lambda law: law.name)
def test_law_holds_on_random_samples(law):
    rep = run_sampled(law, 30, seed=7)
    assert rep.first_counterexample is None, rep.first_counterexample


def test_sampled_runs_are_reproducible():
    law = select(["[∘]"])[0]
    a, b = run_sampled(law, 20, seed=3), run_sampled(law, 20, seed=3)
    assert a.instances_checked == b.instances_checked


def test_bounds_ladder():
    ladder = bounds_ladder(DEFAULT)
    assert ladder[-1] == DEFAULT
    fields = ("max_type_depth", "max_ctx_len", "max_expr_size", "max_sub_entry_size", "max_itm_size")
    for lo, hi in zip(ladder, ladder[1:]):
        assert all(getattr(lo, f) <= getattr(hi, f) for f in fields) and lo != hi
    assert bounds_ladder(EnumConfig(0, 0, 1, 1, 1)) == (EnumConfig(0, 0, 1, 1, 1),)


def test_budgeted_run_finishes_small_bounds():
    small = EnumConfig(1, 1, 3, 2, 3)
    out = run_budgeted(select(["[id]", "∘∘"]), small, seconds=60)
    assert all(b.report.complete and b.verified == small for b in out)


def test_budgeted_run_reports_incomplete():
    out = run_budgeted(select(["[∘]"]), DEFAULT, seconds=0.5)
    (b,) = out
    assert not b.report.complete
    assert b.report.first_counterexample is None
    assert b.verified is None or b.verified != DEFAULT
