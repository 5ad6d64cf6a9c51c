"""The copy-and-paste engine: separate renaming and substitution.

Renamings (``Ren``) are tuples of V-sorted variables, substitutions (``Sub``)
tuples of T-sorted terms; the last entry replaces the most recent variable.
Nothing here is shared with :mod:`sortsubst.engine`, so it can serve as an
independent reference in differential tests.

Term weakening ``suc_tm`` goes through the identity *renaming*, which keeps
every definition structurally recursive. Operations that need to rebuild the
identity take the ambient context explicitly.
"""

from __future__ import annotations

from .syntax import App, Con, ContractError, Embed, Expr, Lam, Suc, Ty, Zero, ZERO

Ren = tuple
Sub = tuple


def var_ren(i: Expr, is_: Ren) -> Expr:
    if not is_:
        raise ContractError("var_ren", "variable looked up in an empty renaming")
    if isinstance(i, Zero):
        return is_[-1]
    if isinstance(i, Suc):
        return var_ren(i.body, is_[:-1])
    raise ContractError("var_ren", f"not a variable: {i!r}")


def ren_weaken(is_: Ren, a: Ty) -> Ren:
    if not is_:
        return ()
    return ren_weaken(is_[:-1], a) + (Suc(is_[-1], a),)


def ren_lift(is_: Ren, a: Ty) -> Ren:
    return ren_weaken(is_, a) + (ZERO,)


def id_ren(ctx: Con) -> Ren:
    if not ctx:
        return ()
    return ren_lift(id_ren(ctx[:-1]), ctx[-1])


def tm_ren(t: Expr, is_: Ren) -> Expr:
    if isinstance(t, Embed):
        return Embed(var_ren(t.body, is_))
    if isinstance(t, App):
        return App(tm_ren(t.fn, is_), tm_ren(t.arg, is_))
    if isinstance(t, Lam):
        return Lam(t.domain, tm_ren(t.body, ren_lift(is_, t.domain)))
    raise ContractError("tm_ren", f"not a term: {t!r}")


def suc_tm(t: Expr, a: Ty, ctx: Con) -> Expr:
    return tm_ren(t, ren_weaken(id_ren(ctx), a))


def var_sub(i: Expr, ts: Sub) -> Expr:
    if not ts:
        raise ContractError("var_sub", "variable looked up in an empty substitution")
    if isinstance(i, Zero):
        return ts[-1]
    if isinstance(i, Suc):
        return var_sub(i.body, ts[:-1])
    raise ContractError("var_sub", f"not a variable: {i!r}")


def sub_weaken_naive(ts: Sub, a: Ty, ctx: Con) -> Sub:
    if not ts:
        return ()
    return sub_weaken_naive(ts[:-1], a, ctx) + (suc_tm(ts[-1], a, ctx),)


def sub_lift_naive(ts: Sub, a: Ty, ctx: Con) -> Sub:
    return sub_weaken_naive(ts, a, ctx) + (Embed(ZERO),)


def tm_sub(t: Expr, ts: Sub, ctx: Con) -> Expr:
    """Apply ``ts`` (whose entries live in ``ctx``) to the term ``t``."""
    if isinstance(t, Embed):
        return var_sub(t.body, ts)
    if isinstance(t, App):
        return App(tm_sub(t.fn, ts, ctx), tm_sub(t.arg, ts, ctx))
    if isinstance(t, Lam):
        a = t.domain
        return Lam(a, tm_sub(t.body, sub_lift_naive(ts, a, ctx), ctx + (a,)))
    raise ContractError("tm_sub", f"not a term: {t!r}")


# Composition is not part of the two-engine presentation; it is derived here
# by mapping the matching application over the entries.

def compose_ren(is_: Ren, js: Ren) -> Ren:
    return tuple(var_ren(i, js) for i in is_)


def compose_sub(ts: Sub, us: Sub, ctx: Con) -> Sub:
    return tuple(tm_sub(t, us, ctx) for t in ts)
