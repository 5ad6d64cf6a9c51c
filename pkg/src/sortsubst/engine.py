"""Sort-factored simultaneous substitution.

One ``subst_apply`` covers all four combinations of variable/term subject and
renaming/substitution argument; the result sort is the join of the two input
sorts. Weakening of a term (``suc_at`` at sort T) applies a weakened identity
*renaming*, so the recursion always drops to sort V before it could loop:
each cycle in the call graph either lowers the sort or keeps it and shrinks
the term, substitution or context.
"""

from __future__ import annotations

from functools import lru_cache

from .monitor import active_monitor, monitored
from .syntax import (
    ZERO,
    Con,
    ContractError,
    Embed,
    Expr,
    Lam,
    App,
    Sort,
    Suc,
    SubList,
    T,
    Ty,
    V,
    Zero,
    sort_of,
)


def join(q: Sort, r: Sort) -> Sort:
    return r if q is V else T


def leq(q: Sort, r: Sort) -> bool:
    return q is r or (q is V and r is T)


@monitored
def coerce_expr(target: Sort, x: Expr) -> Expr:
    q = sort_of(x)
    if q is target:
        return x
    if not leq(q, target):
        raise ContractError("coerce_expr", f"cannot coerce sort {q.value} down to {target.value}")
    return Embed(x)


@monitored
def coerce_sub(target: Sort, xs: SubList) -> SubList:
    if not leq(xs.sort, target):
        raise ContractError("coerce_sub", f"cannot coerce sort {xs.sort.value} down to {target.value}")
    if xs.sort is target:
        return xs
    return SubList(target, tuple(coerce_expr(target, x) for x in xs.entries), xs.src)


@monitored
def subst_apply(x: Expr, ys: SubList) -> Expr:
    match x:
        case Zero():
            if not ys.entries:
                raise ContractError("subst_apply", "variable applied to an empty substitution")
            return ys.last
        case Suc(i, _):
            if not ys.entries:
                raise ContractError("subst_apply", "variable applied to an empty substitution")
            return subst_apply(i, ys.init())
        case Embed(i):
            return coerce_expr(T, subst_apply(i, ys))
        case App(t, u):
            return App(subst_apply(t, ys), subst_apply(u, ys))
        case Lam(a, t):
            return Lam(a, subst_apply(t, sub_lift(ys, a)))
    raise ContractError("subst_apply", f"not an Expr: {x!r}")


@monitored
def zero_at(q: Sort) -> Expr:
    return ZERO if q is V else Embed(ZERO)


@monitored
def suc_at(q: Sort, x: Expr, a: Ty, ctx: Con) -> Expr:
    """Weaken ``x`` (well-formed in ``ctx``) past a new variable of type ``a``."""
    if sort_of(x) is not q:
        raise ContractError("suc_at", f"expected a {q.value}-sorted expression")
    if q is V:
        return Suc(x, a)
    if active_monitor() is None:
        return subst_apply(x, _weakened_identity(ctx, a))
    return subst_apply(x, sub_weaken(id_sub(ctx), a))


@monitored
def sub_weaken(xs: SubList, a: Ty) -> SubList:
    if not xs.entries:
        return SubList(xs.sort, (), xs.src + (a,))
    return sub_weaken(xs.init(), a).extend(suc_at(xs.sort, xs.last, a, xs.src))


@monitored
def sub_lift(xs: SubList, a: Ty) -> SubList:
    return sub_weaken(xs, a).extend(zero_at(xs.sort))


@monitored
def id_sub(ctx: Con) -> SubList:
    if not ctx:
        return SubList(V, (), ())
    return sub_lift(id_sub(ctx[:-1]), ctx[-1])


@monitored
def compose(xs: SubList, ys: SubList) -> SubList:
    """``xs ∘ ys``: first ``xs``, then ``ys`` applied to each entry."""
    if not xs.entries:
        return SubList(join(xs.sort, ys.sort), (), ys.src)
    return compose(xs.init(), ys).extend(subst_apply(xs.last, ys))


@lru_cache(maxsize=4096)
def _weakened_identity(ctx: Con, a: Ty) -> SubList:
    # Pure in its arguments, so caching is invisible except for speed. The
    # monitored path above recomputes it so that call heights stay honest.
    return sub_weaken(id_sub(ctx), a)
