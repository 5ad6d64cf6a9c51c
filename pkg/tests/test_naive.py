import pytest

from sortsubst.naive import (
    compose_ren, compose_sub, id_ren, ren_lift, ren_weaken, suc_tm, tm_ren, tm_sub, var_ren, var_sub,
)
from sortsubst.syntax import App, Arrow, ContractError, Embed, Lam, O, Suc, ZERO, infer_expr

ID_T = Lam(O, Embed(ZERO))
ONE = Suc(ZERO, O)


def test_var_ren():
    assert var_ren(ZERO, (ZERO, ONE)) == ONE
    assert var_ren(ONE, (ZERO, ONE)) == ZERO
    assert var_ren(ZERO, (ONE,)) == ONE
    with pytest.raises(ContractError):
        var_ren(ZERO, ())


def test_tm_ren():
    assert tm_ren(Embed(ZERO), (ONE,)) == Embed(ONE)
    assert tm_ren(App(Embed(ZERO), Embed(ZERO)), (ONE,)) == App(Embed(ONE), Embed(ONE))
    assert tm_ren(ID_T, ()) == ID_T


def test_var_sub():
    ts = (Embed(ZERO), ID_T)
    assert var_sub(ZERO, ts) == ID_T
    assert var_sub(Suc(ZERO, Arrow(O, O)), ts) == Embed(ZERO)
    assert var_sub(ZERO, (ID_T,)) == ID_T


def test_renaming_structure():
    assert id_ren(()) == ()
    assert id_ren((O,)) == (ZERO,)
    assert ren_weaken(id_ren((O,)), O) == (ONE,)
    assert ren_lift((), O) == (ZERO,)
    assert suc_tm(Embed(ZERO), O, (O,)) == Embed(ONE)


def test_tm_sub_under_binder():
    t = Lam(O, App(Embed(Suc(ZERO, O)), Embed(ZERO)))
    out = tm_sub(t, (ID_T,), ())
    assert out == Lam(O, App(ID_T, Embed(ZERO)))
    assert infer_expr((), out) == infer_expr((Arrow(O, O),), t)


def test_compositions():
    assert compose_ren((), (ZERO,)) == ()
    assert compose_ren(id_ren((O,)), (ONE,)) == (ONE,)
    ts = (Embed(ZERO),)
    assert compose_sub((Embed(ZERO),), ts, (O,)) == ts
