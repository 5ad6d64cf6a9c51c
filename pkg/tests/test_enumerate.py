"""Enumerators against a generate-and-filter oracle over raw trees."""

from collections import Counter
from functools import lru_cache

from sortsubst.cwf import IApp, IComp, IEPS, IExt, IId, ILam, IPi0, IPi1, ISubApply, infer_isub, infer_itm
from sortsubst.laws.enumerate import (
    DEFAULT, EnumConfig, count_subs, enum_contexts, enum_exprs, enum_exprs_typed, enum_isubs_typed,
    enum_itms_typed, enum_subs, enum_types,
)
from sortsubst.syntax import App, Arrow, Embed, Lam, O, SubList, Suc, T, V, ZERO, expr_size, infer_expr, sort_of

CFG = EnumConfig(1, 2, 5, 3, 4)
POOL = enum_types(CFG)


@lru_cache(maxsize=None)
def raw_exprs(n):
    """Every tree with exactly ``n`` constructors, typed or not."""
    if n < 1:
        return ()
    out = [ZERO] if n == 1 else []
    out += [Suc(i, b) for i in raw_exprs(n - 1) for b in POOL]
    out += [Embed(i) for i in raw_exprs(n - 1)]
    out += [App(f, u) for k in range(1, n - 1) for f in raw_exprs(k) for u in raw_exprs(n - 1 - k)]
    out += [Lam(a, t) for t in raw_exprs(n - 1) for a in POOL]
    return tuple(out)


def test_types():
    assert enum_types(EnumConfig(max_type_depth=0)) == (O,)
    assert enum_types(EnumConfig(max_type_depth=1)) == (O, Arrow(O, O))
    assert len(enum_types(DEFAULT)) == 5  # regression value


def test_contexts_count():
    assert len(enum_contexts(DEFAULT)) == 1 + 5 + 25 + 125


def test_exprs_match_generate_and_filter():
    for ctx in enum_contexts(CFG):
        for sort in (V, T):
            got = Counter(enum_exprs_typed(ctx, sort, CFG.max_expr_size, CFG))
            want = Counter(
                (e, infer_expr(ctx, e))
                for n in range(1, CFG.max_expr_size + 1) for e in raw_exprs(n)
                if sort_of(e) is sort and infer_expr(ctx, e) is not None
            )
            assert got == want, (ctx, sort)
            assert max(got.values(), default=1) == 1


def test_exprs_ordered_by_size():
    sizes = [expr_size(e) for e, _ in enum_exprs_typed((O, Arrow(O, O)), T, 6, DEFAULT)]
    assert sizes == sorted(sizes)


def test_small_expr_examples():
    assert enum_exprs((O,), O, V, 4) == (ZERO,)
    assert set(enum_exprs((O, O), O, V, 4)) == {ZERO, Suc(ZERO, O)}
    assert len(enum_exprs((), Arrow(O, O), T, 4)) == 1  # regression value: only \x. x
    assert len(enum_exprs((O,), Arrow(O, O), T, 6)) == 2  # regression value


def test_v_count_is_occurrence_count():
    for ctx in enum_contexts(DEFAULT):
        for a in enum_types(DEFAULT):
            assert len(enum_exprs(ctx, a, V, 6)) == ctx.count(a)


def test_subs():
    assert list(enum_subs((O,), (), V, 4)) == [SubList(V, (), (O,))]
    assert list(enum_subs((O,), (O,), V, 4)) == [SubList(V, (ZERO,), (O,))]
    assert len(list(enum_subs((O, O), (O,), V, 4))) == 2
    for src in enum_contexts(CFG):
        for tgt in enum_contexts(CFG):
            for q in (V, T):
                assert count_subs(src, tgt, q, 3, CFG) == sum(1 for _ in enum_subs(src, tgt, q, 3, CFG))


# -- explicit syntax ---------------------------------------------------------

ICFG = EnumConfig(0, 1, 4, 3, 4)
IPOOL = enum_types(ICFG)
ICTXS = enum_contexts(ICFG, max_len=4)


@lru_cache(maxsize=None)
def raw_itms(n):
    if n < 2:
        return ()
    out = [ISubApply(t, s) for k in range(1, n - 1) for t in raw_itms(n - 1 - k) for s in raw_isubs(k)]
    out += [IPi1(s) for s in raw_isubs(n - 1)]
    out += [IApp(f, u) for k in range(1, n - 1) for f in raw_itms(k) for u in raw_itms(n - 1 - k)]
    out += [ILam(a, t) for t in raw_itms(n - 1) for a in IPOOL]
    return tuple(out)


@lru_cache(maxsize=None)
def raw_isubs(n):
    if n == 1:
        return tuple(IId(c) for c in ICTXS) + (IEPS,)
    out = [IComp(a, b) for k in range(1, n - 1) for a in raw_isubs(k) for b in raw_isubs(n - 1 - k)]
    out += [IExt(d, t) for k in range(1, n - 1) for d in raw_isubs(k) for t in raw_itms(n - 1 - k)]
    out += [IPi0(d) for d in raw_isubs(n - 1)]
    return tuple(out)


def test_itms_match_generate_and_filter():
    for ctx in enum_contexts(ICFG):
        got = Counter(enum_itms_typed(ctx, 4, ICFG))
        want = Counter((t, infer_itm(ctx, t)) for n in range(1, 5) for t in raw_itms(n)
                       if infer_itm(ctx, t) is not None)
        assert got == want, ctx


def test_isubs_match_generate_and_filter():
    for src in enum_contexts(ICFG):
        got = Counter(enum_isubs_typed(src, 4, ICFG))
        want = Counter((s, infer_isub(src, s)) for n in range(1, 5) for s in raw_isubs(n)
                       if infer_isub(src, s) is not None)
        assert got == want, src


def test_explicit_regressions():
    assert sum(1 for _ in enum_itms_typed((O,), 4)) == 38
    assert sum(1 for _ in enum_isubs_typed((O,), 3)) == 7
