"""Explicit-substitution terms of the initial simply typed CwF.

This is the free term algebra; equality modulo the CwF equations is decided
by normalization (see :mod:`sortsubst.normalize`). There is no variable
constructor: de Bruijn variables are the derived forms ``i_zero``/``i_suc``.
``IComp(sigma, delta)`` is ``sigma ∘ delta`` and applies ``delta`` first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union

from .syntax import Arrow, Con, ContractError, Ty


@dataclass(frozen=True, slots=True)
class ISubApply:
    tm: ITm
    sub: ISub


@dataclass(frozen=True, slots=True)
class IPi1:
    sub: ISub


@dataclass(frozen=True, slots=True)
class IApp:
    fn: ITm
    arg: ITm


@dataclass(frozen=True, slots=True)
class ILam:
    domain: Ty
    body: ITm


@dataclass(frozen=True, slots=True)
class IId:
    ctx: Con


@dataclass(frozen=True, slots=True)
class IComp:
    first_applied_last: ISub
    second: ISub


@dataclass(frozen=True, slots=True)
class IEps:
    pass


@dataclass(frozen=True, slots=True)
class IExt:
    sub: ISub
    tm: ITm


@dataclass(frozen=True, slots=True)
class IPi0:
    sub: ISub


ITm = Union[ISubApply, IPi1, IApp, ILam]
ISub = Union[IId, IComp, IEps, IExt, IPi0]
IEPS = IEps()


def itm_size(t: ITm) -> int:
    """Constructor count; ``IId`` and ``IEps`` count one each, annotations none."""
    match t:
        case ISubApply(u, s):
            return 1 + itm_size(u) + isub_size(s)
        case IPi1(s):
            return 1 + isub_size(s)
        case IApp(u, v):
            return 1 + itm_size(u) + itm_size(v)
        case ILam(_, u):
            return 1 + itm_size(u)
    raise TypeError(f"not an ITm: {t!r}")


def isub_size(s: ISub) -> int:
    match s:
        case IId(_) | IEps():
            return 1
        case IComp(a, b):
            return 1 + isub_size(a) + isub_size(b)
        case IExt(d, t):
            return 1 + isub_size(d) + itm_size(t)
        case IPi0(d):
            return 1 + isub_size(d)
    raise TypeError(f"not an ISub: {s!r}")


def infer_isub(src: Con, s: ISub) -> Optional[Con]:
    """Target context of ``s`` read as a substitution out of ``src``."""
    match s:
        case IId(ctx):
            return ctx if ctx == src else None
        case IComp(sigma, delta):
            mid = infer_isub(src, delta)
            return None if mid is None else infer_isub(mid, sigma)
        case IEps():
            return ()
        case IExt(delta, t):
            tgt = infer_isub(src, delta)
            if tgt is None:
                return None
            a = infer_itm(src, t)
            return None if a is None else tgt + (a,)
        case IPi0(delta):
            tgt = infer_isub(src, delta)
            return tgt[:-1] if tgt else None
    return None


def infer_itm(ctx: Con, t: ITm) -> Optional[Ty]:
    match t:
        case ISubApply(u, delta):
            mid = infer_isub(ctx, delta)
            return None if mid is None else infer_itm(mid, u)
        case IPi1(delta):
            tgt = infer_isub(ctx, delta)
            return tgt[-1] if tgt else None
        case IApp(u, v):
            f = infer_itm(ctx, u)
            if not isinstance(f, Arrow):
                return None
            return f.cod if infer_itm(ctx, v) == f.dom else None
        case ILam(a, u):
            b = infer_itm(ctx + (a,), u)
            return None if b is None else Arrow(a, b)
    return None


# -- derived forms -----------------------------------------------------------


def _nonempty(op: str, ctx: Con):
    if not ctx:
        raise ContractError(op, "needs a nonempty context")


def i_zero(ctx: Con) -> ITm:
    """The most recent variable of ``ctx``."""
    _nonempty("i_zero", ctx)
    return IPi1(IId(ctx))


def i_wk(ctx: Con) -> ISub:
    """Weakening ``ctx ⊩ ctx[:-1]``."""
    _nonempty("i_wk", ctx)
    return IPi0(IId(ctx))


def i_suc(t: ITm, b: Ty, ctx: Con) -> ITm:
    """Weaken ``t`` (in ``ctx``) past a new variable of type ``b``."""
    return ISubApply(t, i_wk(ctx + (b,)))


def i_lift(s: ISub, a: Ty, src: Con) -> ISub:
    ext = src + (a,)
    return IExt(IComp(s, IPi0(IId(ext))), IPi1(IId(ext)))


# -- equation catalog --------------------------------------------------------


@dataclass(frozen=True)
class CwfEquation:
    """One equation schema.

    ``slots`` names the metavariables and their kinds, in the shape
    ``name: kind``; kinds are ``sub Γ→Δ`` or ``tm Γ⊢A`` over the context and
    type metavariables that also appear in ``slots``. ``lhs`` and ``rhs``
    map an instantiation dict to ITm or ISub values; ``kind`` tells which.
    """

    name: str
    kind: str  # "tm" or "sub"
    slots: tuple
    lhs: Callable[[dict], object]
    rhs: Callable[[dict], object]


def _eq(name, kind, slots, lhs, rhs):
    return CwfEquation(name, kind, tuple(slots.split()), lhs, rhs)


# Instantiation keys: contexts G (source), D, Th; types A, B; substitutions
# delta, theta, xi, sigma; terms t, u. The src context of every sub slot is
# the one the equation reads it from, e.g. ``delta: G→D``.
_CATALOG = (
    _eq("•-η", "sub", "G delta:G→•",
        lambda m: m["delta"], lambda m: IEPS),
    _eq("▷-β₀", "sub", "G D A delta:G→D t:G⊢A",
        lambda m: IPi0(IExt(m["delta"], m["t"])), lambda m: m["delta"]),
    _eq("▷-β₁", "tm", "G D A delta:G→D t:G⊢A",
        lambda m: IPi1(IExt(m["delta"], m["t"])), lambda m: m["t"]),
    _eq("▷-η", "sub", "G D A delta:G→D▷A",
        lambda m: IExt(IPi0(m["delta"]), IPi1(m["delta"])), lambda m: m["delta"]),
    _eq("π₀∘", "sub", "G D Th A theta:D→Th▷A delta:G→D",
        lambda m: IPi0(IComp(m["theta"], m["delta"])),
        lambda m: IComp(IPi0(m["theta"]), m["delta"])),
    _eq("π₁∘", "tm", "G D Th A theta:D→Th▷A delta:G→D",
        lambda m: IPi1(IComp(m["theta"], m["delta"])),
        lambda m: ISubApply(IPi1(m["theta"]), m["delta"])),
    _eq("id∘", "sub", "G D delta:G→D",
        lambda m: IComp(IId(m["D"]), m["delta"]), lambda m: m["delta"]),
    _eq("∘id", "sub", "G D delta:G→D",
        lambda m: IComp(m["delta"], IId(m["G"])), lambda m: m["delta"]),
    _eq("∘∘", "sub", "G D Th Xi xi:Th→Xi theta:D→Th delta:G→D",
        lambda m: IComp(IComp(m["xi"], m["theta"]), m["delta"]),
        lambda m: IComp(m["xi"], IComp(m["theta"], m["delta"]))),
    _eq("[id]", "tm", "G A t:G⊢A",
        lambda m: ISubApply(m["t"], IId(m["G"])), lambda m: m["t"]),
    _eq("[∘]", "tm", "G D Th A t:Th⊢A theta:D→Th delta:G→D",
        lambda m: ISubApply(ISubApply(m["t"], m["theta"]), m["delta"]),
        lambda m: ISubApply(m["t"], IComp(m["theta"], m["delta"]))),
    _eq("·[]", "tm", "G D A B t:D⊢A→B u:D⊢A delta:G→D",
        lambda m: ISubApply(IApp(m["t"], m["u"]), m["delta"]),
        lambda m: IApp(ISubApply(m["t"], m["delta"]), ISubApply(m["u"], m["delta"]))),
    _eq("λ[]", "tm", "G D A B t:D▷A⊢B delta:G→D",
        lambda m: ISubApply(ILam(m["A"], m["t"]), m["delta"]),
        lambda m: ILam(m["A"], ISubApply(m["t"], i_lift(m["delta"], m["A"], m["G"])))),
    _eq("zero[]ᴵ", "tm", "G D A delta:G→D t:G⊢A",
        lambda m: ISubApply(i_zero(m["D"] + (m["A"],)), IExt(m["delta"], m["t"])),
        lambda m: m["t"]),
    _eq("suc[]ᴵ", "tm", "G D A B t:D⊢A delta:G→D u:G⊢B",
        lambda m: ISubApply(i_suc(m["t"], m["B"], m["D"]), IExt(m["delta"], m["u"])),
        lambda m: ISubApply(m["t"], m["delta"])),
    _eq(",∘ᴵ", "sub", "G D Th A delta:D→Th t:D⊢A sigma:G→D",
        lambda m: IComp(IExt(m["delta"], m["t"]), m["sigma"]),
        lambda m: IExt(IComp(m["delta"], m["sigma"]), ISubApply(m["t"], m["sigma"]))),
)

PRIMITIVE_EQUATIONS = 13
DERIVED_EQUATIONS = 3


def equation_catalog() -> tuple:
    """The 13 CwF equations (with ``·[]``/``λ[]``) followed by 3 derived ones."""
    return _CATALOG
