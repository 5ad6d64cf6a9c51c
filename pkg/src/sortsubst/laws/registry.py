"""Every checked property, as data.

Each :class:`Law` pairs an instance source (a function of the enumeration
bounds) with two side builders and an equality. Instances are dicts of named
values; the source decides what is quantified over, the builders are the two
sides of the equation, read straight off the law.

Law groups: ``subst`` (the engine's equational theory), ``oracle`` (agreement
with the two-engine reference), ``types`` (type preservation), ``cwf`` (the
CwF equations, decided by normal forms), ``embed`` (the embedding commutes
with the engine operations) and ``norm`` (stability and idempotence).
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, replace
from typing import Callable, Iterable

from .. import naive
from ..cwf import (
    IComp,
    IId,
    ISubApply,
    equation_catalog,
    i_lift,
    i_wk,
    infer_isub,
    infer_itm,
)
from ..engine import (
    coerce_expr,
    coerce_sub,
    compose,
    id_sub,
    join,
    leq,
    sub_lift,
    sub_weaken,
    subst_apply,
    suc_at,
    zero_at,
)
from ..normalize import decide_eq, decide_eq_sub, embed, embed_sub, norm, norm_sub
from ..syntax import (
    Arrow,
    Base,
    Sort,
    SubList,
    Suc,
    T,
    V,
    check_sub,
    infer_expr,
    sort_of,
)
from ..text import render_con, render_expr, render_isub, render_itm, render_ty
from .check import LawReport, check_equation
from .enumerate import (
    DEFAULT,
    EnumConfig,
    enum_contexts,
    enum_exprs,
    enum_exprs_typed,
    enum_isubs,
    enum_isubs_typed,
    enum_itms,
    enum_itms_typed,
    enum_subs,
    enum_types,
)


@dataclass(frozen=True)
class Law:
    name: str
    group: str
    source: Callable[[object], Iterable[dict]]  # universe -> instances
    lhs: Callable[[dict], object]
    rhs: Callable[[dict], object]
    equality: Callable[[object, object], bool] = lambda a, b: a == b


# -- rendering ---------------------------------------------------------------


def render_value(v) -> str:
    from ..cwf import IApp, IComp as _IC, IEps, IExt, ILam, IPi0, IPi1

    if isinstance(v, Sort):
        return v.value
    if isinstance(v, (Base, Arrow)):
        return render_ty(v)
    if isinstance(v, SubList):
        body = ", ".join(render_expr(x) for x in v.entries)
        return f"{v.sort.value}{render_con(v.src)}<{body}>"
    if isinstance(v, (ISubApply, IPi1, IApp, ILam)):
        return render_itm(v)
    if isinstance(v, (IId, _IC, IEps, IExt, IPi0)):
        return render_isub(v)
    if isinstance(v, tuple):
        if all(isinstance(a, (Base, Arrow)) for a in v):
            return render_con(v)
        return "(" + ", ".join(render_value(a) for a in v) + ")"
    try:
        return render_expr(v)
    except (TypeError, ValueError):
        return repr(v)


def render_instance(inst: dict) -> str:
    return "; ".join(f"{k} = {render_value(v)}" for k, v in inst.items())


# -- instance building blocks -------------------------------------------------
#
# Sources ask a *universe* for contexts, types and well-formed values. The
# exhaustive universe answers with everything up to the enumeration bounds;
# the sampled one (see :mod:`.sample`) with a single random value. Sources
# ask afresh at every nesting level so that sampling draws independently.


class Exhaustive:
    """Everything within ``cfg``; answers are cached per universe."""

    def __init__(self, cfg: EnumConfig = DEFAULT):
        self.cfg = cfg
        self.sorts = cfg.sorts
        self._ctxs = enum_contexts(cfg)
        self._tys = enum_types(cfg)
        self._terms: dict = {}

    def contexts(self) -> tuple:
        return self._ctxs

    def types(self) -> tuple:
        return self._tys

    def terms(self, ctx, sorts=None) -> tuple:
        key = (ctx, sorts or self.sorts)
        got = self._terms.get(key)
        if got is None:
            got = tuple(
                pair for q in key[1]
                for pair in enum_exprs_typed(ctx, q, self.cfg.max_expr_size, self.cfg)
            )
            self._terms[key] = got
        return got

    def vars(self, ctx) -> tuple:
        return self.terms(ctx, (V,))

    def subs(self, src, tgt, sorts=None):
        for q in sorts or self.sorts:
            yield from enum_subs(src, tgt, q, self.cfg.max_sub_entry_size, self.cfg)

    def entries(self, ctx, a, sort) -> tuple:
        return enum_exprs(ctx, a, sort, self.cfg.max_sub_entry_size, self.cfg)

    def itms(self, ctx, ty) -> tuple:
        return enum_itms(ctx, ty, self.cfg.max_itm_size, self.cfg)

    def isubs(self, src, tgt) -> tuple:
        return enum_isubs(src, tgt, self.cfg.max_itm_size, self.cfg)

    def itms_typed(self, ctx):
        return enum_itms_typed(ctx, self.cfg.max_itm_size, self.cfg)

    def isubs_typed(self, src):
        return enum_isubs_typed(src, self.cfg.max_itm_size, self.cfg)


def _term_sub_pairs(u, term_sorts=None, sub_sorts=None, vars_only=False):
    """x : Γ ⊢ A and ys : Δ ⊩ Γ."""
    for g in u.contexts():
        xs = u.vars(g) if vars_only else u.terms(g, term_sorts)
        if not xs:
            continue
        for d in u.contexts():
            for ys in u.subs(d, g, sub_sorts):
                for x, a in xs:
                    yield {"G": g, "A": a, "x": x, "D": d, "ys": ys}


def _subs_all(u, sorts=None):
    """xs : Δ ⊩ Γ."""
    for g in u.contexts():
        for d in u.contexts():
            for xs in u.subs(d, g, sorts):
                yield {"G": g, "D": d, "xs": xs}


def _subs_with_type(u, sorts=None):
    for inst in _subs_all(u, sorts):
        for b in u.types():
            yield {**inst, "B": b}


def _composable(u):
    """xs : Γ ⊩ Θ and ys : Δ ⊩ Γ."""
    for th in u.contexts():
        for g in u.contexts():
            xss = tuple(u.subs(g, th))
            if not xss:
                continue
            for d in u.contexts():
                for ys in u.subs(d, g):
                    for xs in xss:
                        yield {"Th": th, "G": g, "D": d, "xs": xs, "ys": ys}


def _composable3(u):
    """xs : Γ ⊩ Θ, ys : Δ ⊩ Γ, zs : Ξ ⊩ Δ."""
    for inst in _composable(u):
        for xi in u.contexts():
            for zs in u.subs(xi, inst["D"]):
                yield {**inst, "Xi": xi, "zs": zs}


def _terms_all(u, sorts=None):
    for g in u.contexts():
        for x, a in u.terms(g, sorts):
            yield {"G": g, "A": a, "x": x}


def _terms_with_type(u):
    for inst in _terms_all(u):
        for b in u.types():
            yield {**inst, "B": b}


def _apply_compose(u):
    """x : Θ ⊢ A, xs : Γ ⊩ Θ, ys : Δ ⊩ Γ."""
    for th in u.contexts():
        terms = u.terms(th)
        if not terms:
            continue
        for g in u.contexts():
            xss = tuple(u.subs(g, th))
            if not xss:
                continue
            for d in u.contexts():
                for ys in u.subs(d, g):
                    for xs in xss:
                        for x, a in terms:
                            yield {"Th": th, "A": a, "x": x, "G": g, "xs": xs, "D": d, "ys": ys}


def _suc_beta(u):
    """x : Γ ⊢ B, ys : Δ ⊩ Γ, y : Δ ⊢ A at the sort of ys."""
    for g in u.contexts():
        terms = u.terms(g)
        if not terms:
            continue
        for d in u.contexts():
            for ys in u.subs(d, g):
                for a in u.types():
                    for y in u.entries(d, a, ys.sort):
                        for x, b in terms:
                            yield {"G": g, "B": b, "x": x, "A": a, "D": d, "ys": ys, "y": y}


def _wk_beta(u):
    """xs : Γ ⊩ Θ, A, ys : Δ ⊩ Γ, y : Δ ⊢ A at the sort of ys."""
    for inst in _composable(u):
        for a in u.types():
            for y in u.entries(inst["D"], a, inst["ys"].sort):
                yield {**inst, "A": a, "y": y}


def _composable_with_type(u):
    for inst in _composable(u):
        for a in u.types():
            yield {**inst, "A": a}


def _zero_beta(u):
    """q, and (xs, x) : Δ ⊩ Γ ▷ A."""
    for g in u.contexts():
        if not g:
            continue
        for d in u.contexts():
            for ext in u.subs(d, g):
                for q in u.sorts:
                    yield {"q": q, "D": d, "xs": ext.init(), "x": ext.last}


def _sort_pairs(u):
    for q in (V, T):
        for r in (V, T):
            if leq(q, r):
                yield {"q": q, "r": r}


def _vars_with_type(u):
    for g in u.contexts():
        for i, a in u.vars(g):
            for b in u.types():
                yield {"G": g, "A": a, "i": i, "B": b}


def _vsub_with_type(u):
    return _subs_with_type(u, (V,))


def _contexts(u):
    for g in u.contexts():
        yield {"G": g}


def _itms_all(u):
    for g in u.contexts():
        for t, a in u.itms_typed(g):
            yield {"G": g, "A": a, "t": t}


def _isubs_all(u):
    for g in u.contexts():
        for s, tgt in u.isubs_typed(g):
            yield {"G": g, "D": tgt, "s": s}


# -- naive dispatch -------------------------------------------------------------


def naive_apply(x, ys: SubList):
    """The naive operation matching the sorts of ``x`` and ``ys``."""
    if sort_of(x) is V:
        return naive.var_ren(x, ys.entries) if ys.sort is V else naive.var_sub(x, ys.entries)
    if ys.sort is V:
        return naive.tm_ren(x, ys.entries)
    return naive.tm_sub(x, ys.entries, ys.src)


def naive_weaken(xs: SubList, a) -> SubList:
    if xs.sort is V:
        return SubList(V, naive.ren_weaken(xs.entries, a), xs.src + (a,))
    return SubList(T, naive.sub_weaken_naive(xs.entries, a, xs.src), xs.src + (a,))


def naive_lift(xs: SubList, a) -> SubList:
    if xs.sort is V:
        return SubList(V, naive.ren_lift(xs.entries, a), xs.src + (a,))
    return SubList(T, naive.sub_lift_naive(xs.entries, a, xs.src), xs.src + (a,))


def naive_suc(q: Sort, x, a, ctx):
    return Suc(x, a) if q is V else naive.suc_tm(x, a, ctx)


def naive_compose(xs: SubList, ys: SubList) -> SubList:
    entries = tuple(naive_apply(x, ys) for x in xs.entries)
    return SubList(join(xs.sort, ys.sort), entries, ys.src)


# -- equality helpers -------------------------------------------------------------


def _quot_tm(a, b) -> bool:
    (ctx, s), (ctx2, t) = a, b
    if ctx != ctx2:
        raise ValueError("sides live in different contexts")
    return decide_eq(ctx, s, t)


def _quot_sub(a, b) -> bool:
    (src, s), (src2, t) = a, b
    if src != src2:
        raise ValueError("sides have different sources")
    return decide_eq_sub(src, s, t)


# -- the registry ------------------------------------------------------------------

_LAWS: list = []


def _law(name, group, source, lhs, rhs, equality=None):
    _LAWS.append(Law(name, group, source, lhs, rhs, equality or (lambda a, b: a == b)))


# substitution laws

_law("[id]", "subst", _terms_all,
     lambda m: subst_apply(m["x"], id_sub(m["G"])), lambda m: m["x"])
_law("⁺-nat[]v", "subst",
     lambda u: ({**p, "B": b} for p in _term_sub_pairs(u, vars_only=True) for b in u.types()),
     lambda m: subst_apply(m["x"], sub_weaken(m["ys"], m["B"])),
     lambda m: suc_at(m["ys"].sort, subst_apply(m["x"], m["ys"]), m["B"], m["D"]))
_law("∘id", "subst", _subs_all,
     lambda m: compose(m["xs"], id_sub(m["D"])), lambda m: m["xs"])
_law("id∘", "subst", _subs_all,
     lambda m: compose(id_sub(m["G"]), m["xs"]), lambda m: m["xs"])
_law("suc[]", "subst", _suc_beta,
     lambda m: subst_apply(suc_at(sort_of(m["x"]), m["x"], m["A"], m["G"]), m["ys"].extend(m["y"])),
     lambda m: subst_apply(m["x"], m["ys"]))
_law("⁺∘", "subst", _wk_beta,
     lambda m: compose(sub_weaken(m["xs"], m["A"]), m["ys"].extend(m["y"])),
     lambda m: compose(m["xs"], m["ys"]))
_law("[∘]", "subst", _apply_compose,
     lambda m: subst_apply(m["x"], compose(m["xs"], m["ys"])),
     lambda m: subst_apply(subst_apply(m["x"], m["xs"]), m["ys"]))
_law("∘∘", "subst", _composable3,
     lambda m: compose(m["xs"], compose(m["ys"], m["zs"])),
     lambda m: compose(compose(m["xs"], m["ys"]), m["zs"]))
_law("tm[]", "subst", _term_sub_pairs,
     lambda m: coerce_expr(T, subst_apply(m["x"], m["ys"])),
     lambda m: subst_apply(coerce_expr(T, m["x"]), m["ys"]))
_law("↑∘", "subst", _composable_with_type,
     lambda m: sub_lift(compose(m["xs"], m["ys"]), m["A"]),
     lambda m: compose(sub_lift(m["xs"], m["A"]), sub_lift(m["ys"], m["A"])))
_law("⁺-nat∘", "subst", _composable_with_type,
     lambda m: compose(m["xs"], sub_weaken(m["ys"], m["A"])),
     lambda m: sub_weaken(compose(m["xs"], m["ys"]), m["A"]))
_law("⁺-nat[]", "subst",
     lambda u: ({**p, "B": b} for p in _term_sub_pairs(u) for b in u.types()),
     lambda m: subst_apply(m["x"], sub_weaken(m["ys"], m["B"])),
     lambda m: suc_at(join(sort_of(m["x"]), m["ys"].sort), subst_apply(m["x"], m["ys"]), m["B"], m["D"]))
_law("zero[]", "subst", _zero_beta,
     lambda m: subst_apply(zero_at(m["q"]), m["xs"].extend(m["x"])),
     lambda m: coerce_expr(join(m["q"], m["xs"].sort), m["x"]))
_law("tm⊑zero", "subst", _sort_pairs,
     lambda m: zero_at(m["r"]), lambda m: coerce_expr(m["r"], zero_at(m["q"])))
_law("suc[id⁺]", "subst", _vars_with_type,
     lambda m: subst_apply(m["i"], sub_weaken(id_sub(m["G"]), m["B"])),
     lambda m: Suc(m["i"], m["B"]))

# coercion lemmas; the sub being coerced is V-sorted, the other one is free,
# and the right-hand side is coerced to T so both sides share a sort

_law("⊑∘", "subst",
     lambda u: (m for m in _composable(u) if m["xs"].sort is V),
     lambda m: compose(coerce_sub(T, m["xs"]), m["ys"]),
     lambda m: coerce_sub(T, compose(m["xs"], m["ys"])))
_law("∘⊑", "subst",
     lambda u: (m for m in _composable(u) if m["ys"].sort is V),
     lambda m: compose(m["xs"], coerce_sub(T, m["ys"])),
     lambda m: coerce_sub(T, compose(m["xs"], m["ys"])))
_law("t[⊑]", "subst",
     lambda u: _term_sub_pairs(u, term_sorts=(T,), sub_sorts=(V,)),
     lambda m: subst_apply(m["x"], coerce_sub(T, m["ys"])),
     lambda m: subst_apply(m["x"], m["ys"]))
_law("⊑⁺", "subst", _vsub_with_type,
     lambda m: sub_weaken(coerce_sub(T, m["xs"]), m["B"]),
     lambda m: coerce_sub(T, sub_weaken(m["xs"], m["B"])))
_law("⊑↑", "subst", _vsub_with_type,
     lambda m: sub_lift(coerce_sub(T, m["xs"]), m["B"]),
     lambda m: coerce_sub(T, sub_lift(m["xs"], m["B"])))
_law("v[⊑]", "subst",
     lambda u: _term_sub_pairs(u, sub_sorts=(V,), vars_only=True),
     lambda m: subst_apply(m["x"], coerce_sub(T, m["ys"])),
     lambda m: subst_apply(coerce_expr(T, m["x"]), m["ys"]))

# agreement with the two-engine reference

_law("oracle:subst_apply", "oracle", _term_sub_pairs,
     lambda m: subst_apply(m["x"], m["ys"]), lambda m: naive_apply(m["x"], m["ys"]))
_law("oracle:sub_weaken", "oracle", _subs_with_type,
     lambda m: sub_weaken(m["xs"], m["B"]), lambda m: naive_weaken(m["xs"], m["B"]))
_law("oracle:sub_lift", "oracle", _subs_with_type,
     lambda m: sub_lift(m["xs"], m["B"]), lambda m: naive_lift(m["xs"], m["B"]))
_law("oracle:id_sub", "oracle", _contexts,
     lambda m: id_sub(m["G"]), lambda m: SubList(V, naive.id_ren(m["G"]), m["G"]))
_law("oracle:suc_at", "oracle", _terms_with_type,
     lambda m: suc_at(sort_of(m["x"]), m["x"], m["B"], m["G"]),
     lambda m: naive_suc(sort_of(m["x"]), m["x"], m["B"], m["G"]))
_law("oracle:compose", "oracle", _composable,
     lambda m: compose(m["xs"], m["ys"]), lambda m: naive_compose(m["xs"], m["ys"]))

# type preservation; each side is (judgment result, sort)

_law("types:subst_apply", "types", _term_sub_pairs,
     lambda m: _typed(m["D"], subst_apply(m["x"], m["ys"])),
     lambda m: (m["A"], join(sort_of(m["x"]), m["ys"].sort)))
_law("types:sub_weaken", "types", _subs_with_type,
     lambda m: _checked(m["D"] + (m["B"],), sub_weaken(m["xs"], m["B"]), m["G"]),
     lambda m: (True, m["xs"].sort))
_law("types:sub_lift", "types", _subs_with_type,
     lambda m: _checked(m["D"] + (m["B"],), sub_lift(m["xs"], m["B"]), m["G"] + (m["B"],)),
     lambda m: (True, m["xs"].sort))
_law("types:suc_at", "types", _terms_with_type,
     lambda m: _typed(m["G"] + (m["B"],), suc_at(sort_of(m["x"]), m["x"], m["B"], m["G"])),
     lambda m: (m["A"], sort_of(m["x"])))
_law("types:compose", "types", _composable,
     lambda m: _checked(m["D"], compose(m["xs"], m["ys"]), m["Th"]),
     lambda m: (True, join(m["xs"].sort, m["ys"].sort)))
_law("types:id_sub", "types", _contexts,
     lambda m: _checked(m["G"], id_sub(m["G"]), m["G"]), lambda m: (True, V))
_law("types:naive", "types", _term_sub_pairs,
     lambda m: _typed(m["D"], naive_apply(m["x"], m["ys"])),
     lambda m: (m["A"], join(sort_of(m["x"]), m["ys"].sort)))
_law("types:norm", "types", _itms_all,
     lambda m: _typed(m["G"], norm(m["G"], m["t"])), lambda m: (m["A"], T))
_law("types:norm_sub", "types", _isubs_all,
     lambda m: _checked(m["G"], norm_sub(m["G"], m["s"]), m["D"]), lambda m: (True, T))
_law("types:embed", "types", _terms_all,
     lambda m: infer_itm(m["G"], embed(m["x"], m["G"])), lambda m: m["A"])
_law("types:embed_sub", "types", _subs_all,
     lambda m: infer_isub(m["D"], embed_sub(m["xs"])), lambda m: m["G"])


def _typed(ctx, e):
    return infer_expr(ctx, e), sort_of(e)


def _checked(src, s, tgt):
    return check_sub(src, s, tgt), s.sort


# normal forms

_law("stab", "norm", _terms_all,
     lambda m: norm(m["G"], embed(m["x"], m["G"])), lambda m: coerce_expr(T, m["x"]))
_law("norm-idempotent", "norm", _itms_all,
     lambda m: norm(m["G"], embed(norm(m["G"], m["t"]), m["G"])),
     lambda m: norm(m["G"], m["t"]))
_law("norm-idempotent*", "norm", _isubs_all,
     lambda m: norm_sub(m["G"], embed_sub(norm_sub(m["G"], m["s"]))),
     lambda m: norm_sub(m["G"], m["s"]))

# the embedding commutes with the engine, up to the CwF equations

_law("⌜[]⌝", "embed", _term_sub_pairs,
     lambda m: (m["D"], embed(subst_apply(m["x"], m["ys"]), m["D"])),
     lambda m: (m["D"], ISubApply(embed(m["x"], m["G"]), embed_sub(m["ys"]))),
     _quot_tm)
_law("⌜↑⌝", "embed", _subs_with_type,
     lambda m: (m["D"] + (m["B"],), embed_sub(sub_lift(m["xs"], m["B"]))),
     lambda m: (m["D"] + (m["B"],), i_lift(embed_sub(m["xs"]), m["B"], m["D"])),
     _quot_sub)
_law("⌜⁺⌝", "embed", _subs_with_type,
     lambda m: (m["D"] + (m["B"],), embed_sub(sub_weaken(m["xs"], m["B"]))),
     lambda m: (m["D"] + (m["B"],), IComp(embed_sub(m["xs"]), i_wk(m["D"] + (m["B"],)))),
     _quot_sub)
_law("⌜id⌝", "embed", _contexts,
     lambda m: (m["G"], embed_sub(id_sub(m["G"]))), lambda m: (m["G"], IId(m["G"])),
     _quot_sub)
_law("⌜suc⌝", "embed", _terms_with_type,
     lambda m: (m["G"] + (m["B"],), embed(suc_at(sort_of(m["x"]), m["x"], m["B"], m["G"]), m["G"] + (m["B"],))),
     lambda m: (m["G"] + (m["B"],), ISubApply(embed(m["x"], m["G"]), i_wk(m["G"] + (m["B"],)))),
     _quot_tm)
_law("⌜∘⌝", "embed", _composable,
     lambda m: (m["D"], embed_sub(compose(m["xs"], m["ys"]))),
     lambda m: (m["D"], IComp(embed_sub(m["xs"]), embed_sub(m["ys"]))),
     _quot_sub)
_law("⌜⊑⌝", "embed", _terms_all,
     lambda m: (m["G"], embed(coerce_expr(T, m["x"]), m["G"])),
     lambda m: (m["G"], embed(m["x"], m["G"])),
     _quot_tm)
_law("⌜⊑⌝*", "embed", _subs_all,
     lambda m: (m["D"], embed_sub(coerce_sub(T, m["xs"]))),
     lambda m: (m["D"], embed_sub(m["xs"])),
     _quot_sub)


# CwF equations, instantiated from their slot descriptions


def _slot_ctx(slot: str, m: dict) -> tuple:
    if slot == "•":
        return ()
    if "▷" in slot:
        c, a = slot.split("▷")
        return m[c] + (m[a],)
    return m[slot]


def _slot_ty(slot: str, m: dict):
    if "→" in slot:
        a, b = slot.split("→")
        return Arrow(m[a], m[b])
    return m[slot]


def _cwf_source(eq):
    metas = [s for s in eq.slots if ":" not in s]
    filled = [s.split(":", 1) for s in eq.slots if ":" in s]
    names = [v for v, _ in filled]

    def source(u):
        pools = [u.types() if v in ("A", "B") else u.contexts() for v in metas]
        for values in itertools.product(*pools):
            m = dict(zip(metas, values))
            choices = []
            for _, kind in filled:
                if "⊢" in kind:
                    c, a = kind.split("⊢")
                    choices.append(u.itms(_slot_ctx(c, m), _slot_ty(a, m)))
                else:
                    src, tgt = kind.split("→", 1)
                    choices.append(u.isubs(_slot_ctx(src, m), _slot_ctx(tgt, m)))
                if not choices[-1]:
                    break
            else:
                for combo in itertools.product(*choices):
                    yield {**m, **dict(zip(names, combo))}

    return source


for _eq in equation_catalog():
    _law(f"cwf:{_eq.name}", "cwf", _cwf_source(_eq),
         (lambda e: lambda m: (m["G"], e.lhs(m)))(_eq),
         (lambda e: lambda m: (m["G"], e.rhs(m)))(_eq),
         _quot_tm if _eq.kind == "tm" else _quot_sub)


REGISTERED_LAWS = 65


def registry() -> tuple:
    return tuple(_LAWS)


def law_names() -> tuple:
    return tuple(law.name for law in _LAWS)


def select(names: Iterable[str] | None = None, groups: Iterable[str] | None = None) -> tuple:
    laws = registry()
    if names is not None:
        wanted = set(names)
        unknown = wanted - set(law_names())
        if unknown:
            raise KeyError(f"unknown laws: {sorted(unknown)}")
        laws = tuple(law for law in laws if law.name in wanted)
    if groups is not None:
        gs = set(groups)
        laws = tuple(law for law in laws if law.group in gs)
    return laws


def _render_side(v) -> str:
    if isinstance(v, tuple) and len(v) == 2 and isinstance(v[0], tuple):
        return render_value(v[1])
    return render_value(v)


def run_law(law: Law, cfg: EnumConfig = DEFAULT, deadline: float | None = None,
            universe: Exhaustive | None = None) -> LawReport:
    """Check ``law`` exhaustively within ``cfg``."""
    return check_equation(
        law.name,
        law.source(universe or Exhaustive(cfg)),
        law.lhs,
        law.rhs,
        law.equality,
        render_instance=render_instance,
        render_side=_render_side,
        deadline=deadline,
    )


# -- budgeted runs ---------------------------------------------------------------

# Rungs of (type depth, ctx len, expr size, entry size, itm size), each
# clipped to the requested bounds. Every rung contains the previous one.
_LADDER = (
    (0, 1, 3, 2, 3),
    (1, 1, 4, 2, 3),
    (1, 2, 4, 3, 4),
    (1, 2, 5, 3, 4),
    (2, 2, 5, 3, 5),
    (2, 3, 5, 3, 5),
    (2, 3, 6, 4, 6),
)


def bounds_ladder(cfg: EnumConfig) -> tuple:
    """Increasing configs ending at ``cfg``."""
    out = []
    for d, c, e, s, i in _LADDER:
        rung = replace(
            cfg,
            max_type_depth=min(d, cfg.max_type_depth),
            max_ctx_len=min(c, cfg.max_ctx_len),
            max_expr_size=min(e, cfg.max_expr_size),
            max_sub_entry_size=min(s, cfg.max_sub_entry_size),
            max_itm_size=min(i, cfg.max_itm_size),
        )
        if rung not in out:
            out.append(rung)
    if cfg not in out:
        out.append(cfg)
    return tuple(out)


@dataclass(frozen=True)
class BudgetedReport:
    """Outcome of one law under a time budget.

    ``verified`` is the largest rung of the ladder checked to completion, or
    None if not even the first finished. ``report`` is the run at that rung,
    or the failing run if a counterexample turned up; its ``complete`` flag
    is set only when the requested bounds themselves were finished.
    """

    report: LawReport
    verified: EnumConfig | None


def run_budgeted(laws: Iterable[Law], cfg: EnumConfig, seconds: float) -> list:
    """Run ``laws`` rung by rung up the bounds ladder until ``seconds`` elapse.

    All laws finish a rung before any starts the next, so an interrupted run
    still certifies a common set of bounds.
    """
    laws = tuple(laws)
    deadline = time.monotonic() + seconds
    state = {law.name: BudgetedReport(LawReport(law.name, 0, None, 0.0, complete=False), None)
             for law in laws}
    settled = set()
    for rung in bounds_ladder(cfg):
        for law in laws:
            if law.name in settled:
                continue
            rep = run_law(law, rung, deadline)
            prev = state[law.name]
            if rep.first_counterexample is not None:
                state[law.name] = BudgetedReport(rep, prev.verified)
                settled.add(law.name)
            elif rep.complete:
                state[law.name] = BudgetedReport(replace(rep, complete=rung == cfg), rung)
                if rung == cfg:
                    settled.add(law.name)
            else:
                settled.add(law.name)
        if time.monotonic() > deadline:
            break
    return [state[law.name] for law in laws]


# -- seeded random mode ------------------------------------------------------------


def run_sampled(law: Law, trials: int, seed: int, cfg=None) -> LawReport:
    """Check ``law`` on ``trials`` random draws; deterministic in ``seed``."""
    import random

    from .sample import SampleConfig, Sampled

    cfg = cfg or SampleConfig()

    def instances():
        for k in range(trials):
            yield from law.source(Sampled(random.Random(f"{seed}:{law.name}:{k}"), cfg))

    return check_equation(
        law.name,
        instances(),
        law.lhs,
        law.rhs,
        law.equality,
        render_instance=render_instance,
        render_side=_render_side,
    )
