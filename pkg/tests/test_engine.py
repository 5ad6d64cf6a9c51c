import pytest

from sortsubst import engine
from sortsubst.engine import (
    coerce_expr, coerce_sub, compose, id_sub, sub_lift, sub_weaken, subst_apply, suc_at, zero_at,
)
from sortsubst.laws.enumerate import EnumConfig
from sortsubst.laws.registry import Exhaustive, naive_apply, naive_compose
from sortsubst.monitor import DepthMonitor
from sortsubst.syntax import (
    App, Arrow, ContractError, Embed, Lam, O, SubList, Suc, T, V, ZERO, check_sub, eps, infer_expr,
)

OO = Arrow(O, O)
ID_T = Lam(O, Embed(ZERO))


def test_zero_and_coercions():
    assert zero_at(V) == ZERO
    assert zero_at(T) == Embed(ZERO)
    assert coerce_expr(T, ZERO) == Embed(ZERO)
    assert coerce_expr(V, ZERO) == ZERO
    app = App(Embed(ZERO), Embed(ZERO))
    assert coerce_expr(T, app) is app
    assert coerce_sub(T, eps(V)) == eps(T)
    assert coerce_sub(T, SubList(V, (ZERO,), (O,))) == SubList(T, (Embed(ZERO),), (O,))
    xs = SubList(V, (ZERO,), (O,))
    assert coerce_sub(V, xs) == xs


def test_coercion_downwards_is_a_contract_error():
    with pytest.raises(ContractError):
        coerce_expr(V, Embed(ZERO))


def test_subst_apply_examples():
    xs = SubList(T, (Embed(ZERO),), (O, O))
    ys = xs.extend(ID_T)
    assert subst_apply(ZERO, ys) == ID_T
    assert subst_apply(Suc(ZERO, OO), ys) == subst_apply(ZERO, xs)
    assert subst_apply(Embed(ZERO), SubList(T, (ID_T,), ())) == ID_T


def test_subst_apply_on_empty_list_is_a_contract_error():
    with pytest.raises(ContractError):
        subst_apply(ZERO, eps(V))


def test_weaken_lift_identity():
    assert sub_weaken(eps(V), O) == eps(V, (O,))
    assert sub_weaken(SubList(V, (ZERO,), (O,)), O).entries == (Suc(ZERO, O),)
    wk = sub_weaken(SubList(T, (Embed(ZERO),), (O,)), O)
    assert wk.entries == (subst_apply(Embed(ZERO), sub_weaken(id_sub((O,)), O)),)
    assert wk.entries == (Embed(Suc(ZERO, O)),)
    assert sub_lift(eps(V), O).entries == (ZERO,)
    assert sub_lift(eps(T), O).entries == (Embed(ZERO),)
    assert sub_lift(id_sub((O,)), O).entries == (Suc(ZERO, O), ZERO)
    assert id_sub(()) == eps(V)
    assert id_sub((O,)).entries == (ZERO,)
    assert id_sub((O, O)).entries == (Suc(ZERO, O), ZERO)


def test_suc_at():
    assert suc_at(V, ZERO, O, (O,)) == Suc(ZERO, O)
    assert suc_at(T, Embed(ZERO), O, (O,)) == Embed(Suc(ZERO, O))
    assert suc_at(T, ID_T, O, ()) == ID_T


def test_compose_examples():
    ys = SubList(T, (Embed(ZERO),), (O,))
    assert compose(eps(V), ys) == eps(T, (O,))
    xs = SubList(V, (ZERO, ZERO), (O,))
    got = compose(xs, ys)
    assert got.entries == (subst_apply(ZERO, ys),) * 2
    assert compose(id_sub((O,)), ys) == ys


def test_results_are_well_typed_under_binders():
    ctx = (O, OO)
    t = Lam(O, App(Embed(Suc(ZERO, O)), Embed(ZERO)))  # \x. f x
    assert infer_expr(ctx, t) == OO
    ys = SubList(T, (Embed(ZERO), ID_T), (O,))
    out = subst_apply(t, ys)
    assert infer_expr((O,), out) == OO
    assert out == Lam(O, App(ID_T, Embed(ZERO)))


def test_cache_is_transparent():
    x = Lam(O, Embed(Suc(ZERO, O)))
    ys = SubList(T, (Embed(ZERO),), (O,))
    engine._weakened_identity.cache_clear()
    with DepthMonitor():
        uncached = subst_apply(x, ys)
    assert subst_apply(x, ys) == uncached


SMALL = EnumConfig(1, 2, 4, 3, 4)


def test_engine_agrees_with_oracle_small():
    u = Exhaustive(SMALL)
    n = 0
    for src in u.contexts():
        for ctx in u.contexts():
            for x, _ in u.terms(ctx):
                for ys in u.subs(src, ctx):
                    assert subst_apply(x, ys) == naive_apply(x, ys)
                    n += 1
    assert n > 1000


def test_compose_agrees_with_oracle_small():
    u = Exhaustive(EnumConfig(1, 2, 3, 3, 3))
    for a in u.contexts():
        for b in u.contexts():
            for ys in u.subs(a, b):
                for c in u.contexts():
                    for xs in u.subs(b, c):
                        got = compose(xs, ys)
                        assert got == naive_compose(xs, ys)
                        assert check_sub(a, got, c)
