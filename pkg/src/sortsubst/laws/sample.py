"""Seeded random generation of well-typed values, for sizes past exhaustion.

Kernel terms are grown top-down, but only through choices whose type is
known to be inhabited (``rank``), so generation never backtracks. Explicit
terms start as the embedding of a random kernel term and are then wrapped in
type-preserving explicit-substitution noise (identities, projections of
pairs, detours through a weakening), which exercises every constructor.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from ..cwf import IApp, IComp, IExt, IId, ILam, IPi0, IPi1, ISubApply, i_wk
from ..normalize import embed, embed_sub
from ..syntax import App, Arrow, Con, Embed, Lam, O, Sort, SubList, T, Ty, V, var

_APP_DEPTH = 4


@dataclass(frozen=True)
class SampleConfig:
    max_type_depth: int = 3
    max_ctx_len: int = 5
    expr_size: int = 24
    entry_size: int = 10
    itm_size: int = 14  # target size of the kernel term before noise
    noise: int = 4  # maximum wrapping steps per explicit value
    sorts: tuple = (V, T)


def random_type(rng: random.Random, depth: int) -> Ty:
    if depth == 0 or rng.random() < 0.45:
        return O
    return Arrow(random_type(rng, depth - 1), random_type(rng, depth - 1))


def random_context(rng: random.Random, cfg: SampleConfig) -> Con:
    return tuple(random_type(rng, cfg.max_type_depth) for _ in range(rng.randint(0, cfg.max_ctx_len)))


def _spine(a: Ty):
    args = []
    while isinstance(a, Arrow):
        args.append(a.dom)
        a = a.cod
        yield tuple(args), a


@lru_cache(maxsize=65536)
def rank(ctx: Con, ty: Ty, budget: int = _APP_DEPTH):
    """Nesting depth of applications needed to inhabit ``ty`` in ``ctx``.

    None means not inhabited within ``budget`` nested applications of a
    variable. Every rank is witnessed by :func:`smallest_term`.
    """
    if ty in ctx:
        return 0
    best = None
    if isinstance(ty, Arrow):
        best = rank(ctx + (ty.dom,), ty.cod, budget)
    if budget > 0:
        for f in dict.fromkeys(ctx):
            for args, res in _spine(f):
                if res != ty:
                    continue
                ranks = [rank(ctx, a, budget - 1) for a in args]
                if None not in ranks:
                    r = 1 + max(ranks)
                    best = r if best is None else min(best, r)
    return best


def smallest_term(ctx: Con, ty: Ty, budget: int = _APP_DEPTH):
    """A T-sorted inhabitant realizing ``rank(ctx, ty, budget)``."""
    r = rank(ctx, ty, budget)
    if r is None:
        return None
    if ty in ctx:
        return Embed(_var_of(ctx, ty, 0))
    if isinstance(ty, Arrow) and rank(ctx + (ty.dom,), ty.cod, budget) == r:
        return Lam(ty.dom, smallest_term(ctx + (ty.dom,), ty.cod, budget))
    for n in range(len(ctx)):
        f = ctx[len(ctx) - 1 - n]
        for args, res in _spine(f):
            if res != ty:
                continue
            ranks = [rank(ctx, a, budget - 1) for a in args]
            if None not in ranks and 1 + max(ranks) == r:
                out = Embed(var(n, ctx))
                for a in args:
                    out = App(out, smallest_term(ctx, a, budget - 1))
                return out
    raise AssertionError("rank without witness")


def _var_of(ctx: Con, ty: Ty, pick: int):
    hits = [n for n in range(len(ctx)) if ctx[len(ctx) - 1 - n] == ty]
    return var(hits[pick % len(hits)], ctx)


def random_var(rng: random.Random, ctx: Con, ty: Ty):
    if ty not in ctx:
        return None
    return _var_of(ctx, ty, rng.randrange(len(ctx)))


def _arg_candidates(ctx: Con) -> list:
    out = dict.fromkeys([O])
    for f in ctx:
        out[f] = None
        for args, _ in _spine(f):
            out[args[-1]] = None
    return list(out)


def random_term(rng: random.Random, ctx: Con, ty: Ty, size: int):
    """A T-sorted term of type ``ty`` with roughly ``size`` nodes, or None if uninhabited."""
    if rank(ctx, ty) is None:
        return None
    if size <= 2:
        if ty in ctx and rng.random() < 0.8:
            return Embed(random_var(rng, ctx, ty))
        return smallest_term(ctx, ty)
    options = []
    if isinstance(ty, Arrow) and rank(ctx + (ty.dom,), ty.cod) is not None:
        options.append("lam")
    args = [b for b in _arg_candidates(ctx)
            if rank(ctx, b) is not None and rank(ctx, Arrow(b, ty)) is not None]
    if args:
        options += ["app", "app"]
    if not options:
        return smallest_term(ctx, ty)
    if rng.choice(options) == "lam":
        return Lam(ty.dom, random_term(rng, ctx + (ty.dom,), ty.cod, size - 1))
    b = rng.choice(args)
    k = rng.randint(1, size - 2)
    return App(random_term(rng, ctx, Arrow(b, ty), k), random_term(rng, ctx, b, size - 1 - k))


def random_expr(rng: random.Random, ctx: Con, ty: Ty, sort: Sort, size: int):
    if sort is V:
        return random_var(rng, ctx, ty)
    return random_term(rng, ctx, ty, rng.randint(1, max(1, size)))


def random_sub(rng: random.Random, src: Con, tgt: Con, sort: Sort, size: int):
    entries = []
    for a in tgt:
        x = random_expr(rng, src, a, sort, size)
        if x is None:
            return None
        entries.append(x)
    return SubList(sort, tuple(entries), src)


# -- explicit-substitution noise ---------------------------------------------------


def _noisy_tm(rng: random.Random, t, ctx: Con, steps: int):
    for _ in range(rng.randint(0, steps)):
        pick = rng.randrange(4)
        if pick == 0:
            t = ISubApply(t, IId(ctx))
        elif pick == 1:
            t = IPi1(IExt(IId(ctx), t))
        elif pick == 2 and ctx:
            b = rng.choice(ctx)
            u = embed(Embed(random_var(rng, ctx, b)), ctx)
            t = ISubApply(ISubApply(t, i_wk(ctx + (b,))), IExt(IId(ctx), u))
        elif isinstance(t, IApp):
            t = IApp(_noisy_tm(rng, t.fn, ctx, 1), _noisy_tm(rng, t.arg, ctx, 1))
    return t


def _noisy_sub(rng: random.Random, s, src: Con, tgt: Con, steps: int):
    for _ in range(rng.randint(0, steps)):
        pick = rng.randrange(5)
        if pick == 0:
            s = IComp(s, IId(src))
        elif pick == 1:
            s = IComp(IId(tgt), s)
        elif pick == 2 and tgt:
            s = IExt(IPi0(s), IPi1(s))
        elif pick == 3 and src:
            b = rng.choice(src)
            u = embed(Embed(random_var(rng, src, b)), src)
            s = IComp(IComp(s, i_wk(src + (b,))), IExt(IId(src), u))
        elif isinstance(s, IExt):
            s = IExt(s.sub, _noisy_tm(rng, s.tm, src, 1))
    return s


def random_itm(rng: random.Random, ctx: Con, ty: Ty, cfg: SampleConfig):
    e = random_term(rng, ctx, ty, rng.randint(1, cfg.itm_size))
    if e is None:
        return None
    return _noisy_tm(rng, _deep_noise(rng, embed(e, ctx), ctx), ctx, cfg.noise)


def _deep_noise(rng: random.Random, t, ctx: Con):
    # noise under binders and applications too, not only at the root
    if isinstance(t, ILam):
        inner = ctx + (t.domain,)
        return ILam(t.domain, _noisy_tm(rng, _deep_noise(rng, t.body, inner), inner, 1))
    if isinstance(t, IApp):
        return IApp(_deep_noise(rng, t.fn, ctx), _deep_noise(rng, t.arg, ctx))
    return t


def random_isub(rng: random.Random, src: Con, tgt: Con, cfg: SampleConfig):
    xs = random_sub(rng, src, tgt, T, cfg.itm_size // 2)
    if xs is None:
        return None
    return _noisy_sub(rng, embed_sub(xs), src, tgt, cfg.noise)


class Sampled:
    """A universe that answers every request with one random value (or none)."""

    def __init__(self, rng: random.Random, cfg: SampleConfig = SampleConfig()):
        self.rng = rng
        self.cfg = cfg

    @property
    def sorts(self) -> tuple:
        return (self.rng.choice(self.cfg.sorts),)

    def contexts(self) -> tuple:
        return (random_context(self.rng, self.cfg),)

    def types(self) -> tuple:
        return (random_type(self.rng, self.cfg.max_type_depth),)

    def _inhabited_type(self, ctx):
        for _ in range(4):
            a = self.types()[0]
            if rank(ctx, a) is not None:
                return a
        return self.rng.choice(ctx) if ctx else None

    def terms(self, ctx, sorts=None) -> tuple:
        q = self.rng.choice(sorts or self.cfg.sorts)
        if q is V:
            return self.vars(ctx)
        a = self._inhabited_type(ctx)
        if a is None:
            return ()
        return ((random_term(self.rng, ctx, a, self.rng.randint(1, self.cfg.expr_size)), a),)

    def vars(self, ctx) -> tuple:
        if not ctx:
            return ()
        n = self.rng.randrange(len(ctx))
        return ((var(n, ctx), ctx[len(ctx) - 1 - n]),)

    def subs(self, src, tgt, sorts=None) -> tuple:
        q = self.rng.choice(sorts or self.cfg.sorts)
        s = random_sub(self.rng, src, tgt, q, self.cfg.entry_size)
        return (s,) if s is not None else ()

    def entries(self, ctx, a, sort) -> tuple:
        x = random_expr(self.rng, ctx, a, sort, self.cfg.entry_size)
        return (x,) if x is not None else ()

    def itms(self, ctx, ty) -> tuple:
        t = random_itm(self.rng, ctx, ty, self.cfg)
        return (t,) if t is not None else ()

    def isubs(self, src, tgt) -> tuple:
        s = random_isub(self.rng, src, tgt, self.cfg)
        return (s,) if s is not None else ()

    def itms_typed(self, ctx) -> tuple:
        a = self._inhabited_type(ctx)
        return () if a is None else tuple((t, a) for t in self.itms(ctx, a))

    def isubs_typed(self, src) -> tuple:
        tgt = tuple(a for a in random_context(self.rng, self.cfg) if rank(src, a) is not None)
        return tuple((s, tgt) for s in self.isubs(src, tgt))
