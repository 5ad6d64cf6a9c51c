from sortsubst.laws.check import LawReport, check_equation
from sortsubst.laws.enumerate import DEFAULT, enum_contexts, enum_exprs_typed
from sortsubst.syntax import Suc, V


def _vars():
    for ctx in enum_contexts(DEFAULT):
        for x, a in enum_exprs_typed(ctx, V, 3):
            yield (ctx, x)


def test_holding_law():
    rep = check_equation("refl", _vars(), lambda i: i[1], lambda i: i[1])
    assert rep.first_counterexample is None and rep.holds
    assert rep.instances_checked == sum(1 for _ in _vars())


def test_wrong_builder_reports_smallest_instance():
    rep = check_equation("bad", _vars(), lambda i: i[1], lambda i: Suc(i[1], i[0][-1]),
                         render_instance=repr)
    assert not rep.holds
    assert rep.instances_checked == 1
    first = next(_vars())
    assert rep.first_counterexample.instance == repr(first)


def test_builder_exception_is_a_failure():
    def boom(_):
        raise RuntimeError("nope")

    rep = check_equation("boom", iter([1, 2]), boom, lambda i: i)
    assert rep.instances_checked == 1
    assert "RuntimeError" in rep.first_counterexample.lhs


def test_deadline_in_the_past_stops_at_once():
    rep = check_equation("late", _vars(), lambda i: i, lambda i: i, deadline=0.0)
    assert rep == LawReport("late", 0, None, rep.elapsed, complete=False)
    assert not rep.holds


def test_deterministic():
    a = check_equation("bad", _vars(), lambda i: i[1], lambda i: None)
    b = check_equation("bad", _vars(), lambda i: i[1], lambda i: None)
    assert a.first_counterexample == b.first_counterexample
