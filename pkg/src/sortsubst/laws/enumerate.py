"""Exhaustive small-instance enumerators.

Terms are enumerated together with the type they synthesize, by exact size,
so well-formedness holds by construction. The only annotations not forced by
typing are lambda domains; they range over the type pool of the config.
Order is size first, then constructor tag, then sub-enumeration order, and
is identical from run to run.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from ..cwf import IApp, IComp, IEPS, IExt, IId, ILam, IPi0, IPi1, ISubApply
from ..syntax import (
    ZERO,
    App,
    Arrow,
    Base,
    Con,
    Embed,
    Lam,
    O,
    Sort,
    SubList,
    Suc,
    T,
    Ty,
    V,
)


@dataclass(frozen=True)
class EnumConfig:
    max_type_depth: int = 2
    max_ctx_len: int = 3
    max_expr_size: int = 6
    max_sub_entry_size: int = 4
    max_itm_size: int = 6
    sorts: tuple = (V, T)

    def __post_init__(self):
        for name in ("max_type_depth", "max_ctx_len", "max_expr_size",
                     "max_sub_entry_size", "max_itm_size"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")


DEFAULT = EnumConfig()


def _ty_key(a: Ty):
    # size first, then Base < Arrow, then domain, then codomain
    if isinstance(a, Base):
        return (1, 0)
    d, c = _ty_key(a.dom), _ty_key(a.cod)
    return (1 + d[0] + c[0], 1, d, c)


@lru_cache(maxsize=None)
def _types(depth: int) -> tuple:
    if depth == 0:
        return (O,)
    smaller = _types(depth - 1)
    out = set(smaller)
    out.update(Arrow(a, b) for a in smaller for b in smaller)
    return tuple(sorted(out, key=_ty_key))


def enum_types(cfg: EnumConfig = DEFAULT) -> tuple:
    return _types(cfg.max_type_depth)


def enum_contexts(cfg: EnumConfig = DEFAULT, max_len: int | None = None) -> tuple:
    tys = enum_types(cfg)
    n = cfg.max_ctx_len if max_len is None else max_len
    out = []
    for k in range(n + 1):
        out.extend(itertools.product(tys, repeat=k))
    return tuple(out)


# -- kernel terms ------------------------------------------------------------


@lru_cache(maxsize=None)
def _expr_exact(ctx: Con, sort: Sort, n: int, pool: tuple) -> tuple:
    """All (expr, type) well-formed in ``ctx`` at ``sort`` with exactly ``n`` nodes."""
    out = []
    if sort is V:
        if not ctx:
            return ()
        if n == 1:
            out.append((ZERO, ctx[-1]))
        elif n > 1:
            b = ctx[-1]
            out.extend((Suc(i, b), a) for i, a in _expr_exact(ctx[:-1], V, n - 1, pool))
        return tuple(out)
    if n < 2:
        return ()
    out.extend((Embed(i), a) for i, a in _expr_exact(ctx, V, n - 1, pool))
    for k in range(2, n - 2):
        args = _expr_exact(ctx, T, n - 1 - k, pool)
        if not args:
            continue
        for f, fa in _expr_exact(ctx, T, k, pool):
            if isinstance(fa, Arrow):
                out.extend((App(f, u), fa.cod) for u, ua in args if ua == fa.dom)
    for a in pool:
        out.extend((Lam(a, t), Arrow(a, b)) for t, b in _expr_exact(ctx + (a,), T, n - 1, pool))
    return tuple(out)


def enum_exprs_typed(ctx: Con, sort: Sort, max_size: int, cfg: EnumConfig = DEFAULT):
    """Yield (expr, type) pairs in ``ctx`` at ``sort`` with at most ``max_size`` nodes."""
    pool = enum_types(cfg)
    for n in range(1, max_size + 1):
        yield from _expr_exact(tuple(ctx), sort, n, pool)


@lru_cache(maxsize=None)
def _exprs_at(ctx: Con, ty: Ty, sort: Sort, max_size: int, pool: tuple) -> tuple:
    return tuple(
        e for n in range(1, max_size + 1) for e, a in _expr_exact(ctx, sort, n, pool) if a == ty
    )


def enum_exprs(ctx: Con, ty: Ty, sort: Sort, max_size: int, cfg: EnumConfig = DEFAULT) -> tuple:
    """Every well-formed expr of type ``ty`` in ``ctx`` at ``sort``, up to ``max_size`` nodes."""
    return _exprs_at(tuple(ctx), ty, sort, max_size, enum_types(cfg))


def enum_subs(src: Con, tgt: Con, sort: Sort, max_entry_size: int, cfg: EnumConfig = DEFAULT):
    """Every SubList ``src ⊩ tgt`` at ``sort`` with entries of at most ``max_entry_size`` nodes."""
    src = tuple(src)
    choices = [enum_exprs(src, a, sort, max_entry_size, cfg) for a in tgt]
    for entries in itertools.product(*choices):
        yield SubList(sort, entries, src)


def count_subs(src: Con, tgt: Con, sort: Sort, max_entry_size: int, cfg: EnumConfig = DEFAULT) -> int:
    n = 1
    for a in tgt:
        n *= len(enum_exprs(tuple(src), a, sort, max_entry_size, cfg))
    return n


# -- explicit terms ----------------------------------------------------------


@lru_cache(maxsize=None)
def _itm_exact(ctx: Con, n: int, pool: tuple) -> tuple:
    """All (ITm, type) well-formed in ``ctx`` with exactly ``n`` constructors."""
    if n < 2:
        return ()
    out = []
    # ISubApply
    for k in range(1, n - 2):
        for d, mid in _isub_exact(ctx, k, pool):
            out.extend((ISubApply(u, d), a) for u, a in _itm_exact(mid, n - 1 - k, pool))
    # IPi1
    out.extend((IPi1(d), tgt[-1]) for d, tgt in _isub_exact(ctx, n - 1, pool) if tgt)
    # IApp
    for k in range(2, n - 2):
        args = _itm_exact(ctx, n - 1 - k, pool)
        if not args:
            continue
        for f, fa in _itm_exact(ctx, k, pool):
            if isinstance(fa, Arrow):
                out.extend((IApp(f, u), fa.cod) for u, ua in args if ua == fa.dom)
    # ILam
    for a in pool:
        out.extend((ILam(a, u), Arrow(a, b)) for u, b in _itm_exact(ctx + (a,), n - 1, pool))
    return tuple(out)


@lru_cache(maxsize=None)
def _isub_exact(src: Con, n: int, pool: tuple) -> tuple:
    """All (ISub, target) well-formed out of ``src`` with exactly ``n`` constructors."""
    if n < 1:
        return ()
    if n == 1:
        return ((IId(src), src), (IEPS, ()))
    out = []
    # IComp(sigma, delta): delta first
    for k in range(1, n - 1):
        for d, mid in _isub_exact(src, k, pool):
            out.extend((IComp(s, d), tgt) for s, tgt in _isub_exact(mid, n - 1 - k, pool))
    # IExt
    for k in range(1, n - 2):
        tms = _itm_exact(src, n - 1 - k, pool)
        if not tms:
            continue
        for d, tgt in _isub_exact(src, k, pool):
            out.extend((IExt(d, t), tgt + (a,)) for t, a in tms)
    # IPi0
    out.extend((IPi0(d), tgt[:-1]) for d, tgt in _isub_exact(src, n - 1, pool) if tgt)
    return tuple(out)


def enum_itms_typed(ctx: Con, max_size: int, cfg: EnumConfig = DEFAULT):
    pool = enum_types(cfg)
    for n in range(1, max_size + 1):
        yield from _itm_exact(tuple(ctx), n, pool)


def enum_isubs_typed(src: Con, max_size: int, cfg: EnumConfig = DEFAULT):
    pool = enum_types(cfg)
    for n in range(1, max_size + 1):
        yield from _isub_exact(tuple(src), n, pool)


@lru_cache(maxsize=None)
def _itms_at(ctx: Con, ty: Ty, max_size: int, pool: tuple) -> tuple:
    return tuple(t for n in range(1, max_size + 1) for t, a in _itm_exact(ctx, n, pool) if a == ty)


@lru_cache(maxsize=None)
def _isubs_at(src: Con, tgt: Con, max_size: int, pool: tuple) -> tuple:
    return tuple(s for n in range(1, max_size + 1) for s, c in _isub_exact(src, n, pool) if c == tgt)


def enum_itms(ctx: Con, ty: Ty, max_size: int, cfg: EnumConfig = DEFAULT) -> tuple:
    return _itms_at(tuple(ctx), ty, max_size, enum_types(cfg))


def enum_isubs(src: Con, tgt: Con, max_size: int, cfg: EnumConfig = DEFAULT) -> tuple:
    return _isubs_at(tuple(src), tuple(tgt), max_size, enum_types(cfg))
