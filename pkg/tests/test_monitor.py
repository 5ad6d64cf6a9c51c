import random

from sortsubst.engine import compose, id_sub, subst_apply
from sortsubst.laws.sample import random_term
from sortsubst.monitor import DepthMonitor, active_monitor, monitored
from sortsubst.syntax import Arrow, O, SubList, T


def test_inactive_outside_block():
    assert active_monitor() is None
    with DepthMonitor() as mon:
        assert active_monitor() is mon
    assert active_monitor() is None


def test_records_engine_calls_within_bound():
    ctx = (O, Arrow(O, O))
    x = random_term(random.Random(1), ctx, O, 60)
    ys = SubList(T, (random_term(random.Random(2), (O,), O, 5),
                     random_term(random.Random(3), (O,), Arrow(O, O), 5)), (O,))
    with DepthMonitor() as mon:
        subst_apply(x, ys)
        compose(id_sub(ctx), ys)
    assert mon.calls > 10 and mon.sized > 0
    assert mon.violations == []
    assert 0 < mon.max_ratio <= 1


def test_flags_recursion_that_does_not_shrink_its_input():
    fuel = [6]

    @monitored
    def churn(a):
        fuel[0] -= 1
        return a if fuel[0] == 0 else churn(a)

    with DepthMonitor() as mon:
        churn(O)  # one node, so the bound is 2
    assert mon.max_height == 6
    assert {v.op for v in mon.violations} == {"churn"}
    assert all(v.bound == 2 for v in mon.violations)
