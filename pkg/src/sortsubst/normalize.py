"""Normalization of explicit-substitution terms into substitution normal forms.

``norm`` interprets each explicit constructor with the recursive operations
of :mod:`sortsubst.engine` at sort T: identity is the identity renaming
coerced to a substitution, the projections are list projections. ``embed``
goes back, reading variables as iterated weakenings of ``π₁ id``.
"""

from __future__ import annotations

from .cwf import (
    IApp,
    IComp,
    IEps,
    IEPS,
    IExt,
    IId,
    ILam,
    IPi0,
    IPi1,
    ISub,
    ISubApply,
    ITm,
    i_suc,
    i_zero,
    infer_isub,
    infer_itm,
)
from .engine import coerce_sub, compose, id_sub, subst_apply
from .syntax import (
    App,
    Arrow,
    Con,
    ContractError,
    Embed,
    Expr,
    Lam,
    SubList,
    Suc,
    T,
    Zero,
)


class EquationTypeError(Exception):
    """The two sides of an equation do not infer, or infer differently."""


def _norm(ctx: Con, t: ITm):
    match t:
        case ISubApply(u, delta):
            ys, mid = _norm_sub(ctx, delta)
            e, a = _norm(mid, u)
            return subst_apply(e, ys), a
        case IPi1(delta):
            ys, tgt = _norm_sub(ctx, delta)
            if not tgt:
                raise ContractError("norm", "π₁ of a substitution into the empty context")
            return ys.last, tgt[-1]
        case IApp(u, v):
            f, fa = _norm(ctx, u)
            x, _ = _norm(ctx, v)
            if not isinstance(fa, Arrow):
                raise ContractError("norm", "application of a non-function")
            return App(f, x), fa.cod
        case ILam(a, u):
            b, bt = _norm(ctx + (a,), u)
            return Lam(a, b), Arrow(a, bt)
    raise ContractError("norm", f"not an ITm: {t!r}")


def _norm_sub(src: Con, s: ISub):
    match s:
        case IId(ctx):
            if ctx != src:
                raise ContractError("norm_sub", "identity annotated with the wrong context")
            return coerce_sub(T, id_sub(src)), src
        case IComp(sigma, delta):
            ds, mid = _norm_sub(src, delta)
            ss, tgt = _norm_sub(mid, sigma)
            return compose(ss, ds), tgt
        case IEps():
            return SubList(T, (), src), ()
        case IExt(delta, u):
            ds, tgt = _norm_sub(src, delta)
            e, a = _norm(src, u)
            return ds.extend(e), tgt + (a,)
        case IPi0(delta):
            ds, tgt = _norm_sub(src, delta)
            if not tgt:
                raise ContractError("norm_sub", "π₀ of a substitution into the empty context")
            return ds.init(), tgt[:-1]
    raise ContractError("norm_sub", f"not an ISub: {s!r}")


def norm(ctx: Con, t: ITm) -> Expr:
    """The substitution normal form of ``t``: a T-sorted kernel term."""
    if infer_itm(ctx, t) is None:
        raise ContractError("norm", "term is ill-typed in the given context")
    return _norm(ctx, t)[0]


def norm_sub(src: Con, s: ISub) -> SubList:
    if infer_isub(src, s) is None:
        raise ContractError("norm_sub", "substitution is ill-typed from the given context")
    return _norm_sub(src, s)[0]


def embed(x: Expr, ctx: Con) -> ITm:
    """Read a kernel term (either sort) in ``ctx`` back as an explicit term."""
    match x:
        case Zero():
            return i_zero(ctx)
        case Suc(i, b):
            if not ctx:
                raise ContractError("embed", "variable in the empty context")
            return i_suc(embed(i, ctx[:-1]), b, ctx[:-1])
        case Embed(i):
            return embed(i, ctx)
        case App(t, u):
            return IApp(embed(t, ctx), embed(u, ctx))
        case Lam(a, t):
            return ILam(a, embed(t, ctx + (a,)))
    raise ContractError("embed", f"not an Expr: {x!r}")


def embed_sub(xs: SubList) -> ISub:
    out: ISub = IEPS
    for x in xs.entries:
        out = IExt(out, embed(x, xs.src))
    return out


def decide_eq(ctx: Con, a: ITm, b: ITm) -> bool:
    """Whether ``a`` and ``b`` are equal modulo the CwF equations."""
    ta, tb = infer_itm(ctx, a), infer_itm(ctx, b)
    if ta is None or tb is None:
        raise EquationTypeError("a side of the equation is ill-typed")
    if ta != tb:
        raise EquationTypeError(f"sides have different types: {ta!r} vs {tb!r}")
    return _norm(ctx, a)[0] == _norm(ctx, b)[0]


def decide_eq_sub(src: Con, a: ISub, b: ISub) -> bool:
    ta, tb = infer_isub(src, a), infer_isub(src, b)
    if ta is None or tb is None:
        raise EquationTypeError("a side of the equation is ill-typed")
    if ta != tb:
        raise EquationTypeError(f"sides have different targets: {ta!r} vs {tb!r}")
    return _norm_sub(src, a)[0] == _norm_sub(src, b)[0]
