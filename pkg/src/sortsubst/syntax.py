"""Kernel syntax: sorts, simple types, contexts, sort-indexed terms and substitutions.

Terms are plain trees; typing is a separate judgment (``infer_expr`` and
``check_sub``). A context is a tuple of types whose last element is the most
recently bound variable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union


class ContractError(Exception):
    """An engine operation received input violating its precondition.

    This signals a programming error, not bad user input.
    """

    def __init__(self, op: str, message: str):
        super().__init__(f"{op}: {message}")
        self.op = op


class Sort(enum.Enum):
    V = "V"
    T = "T"

    def __repr__(self):
        return self.value


V = Sort.V
T = Sort.T


# -- types -------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Base:
    def __repr__(self):
        return "o"


@dataclass(frozen=True, slots=True)
class Arrow:
    dom: Ty
    cod: Ty

    def __repr__(self):
        return f"({self.dom!r} -> {self.cod!r})"


Ty = Union[Base, Arrow]
O = Base()

Con = tuple  # tuple[Ty, ...], rightmost entry most recently bound


def arrow(*tys: Ty) -> Ty:
    """Right-nested arrow: ``arrow(a, b, c)`` is ``a -> (b -> c)``."""
    out = tys[-1]
    for t in reversed(tys[:-1]):
        out = Arrow(t, out)
    return out


def ty_size(a: Ty) -> int:
    if isinstance(a, Arrow):
        return 1 + ty_size(a.dom) + ty_size(a.cod)
    return 1


def ty_depth(a: Ty) -> int:
    if isinstance(a, Arrow):
        return 1 + max(ty_depth(a.dom), ty_depth(a.cod))
    return 0


def con_size(ctx: Con) -> int:
    return len(ctx) + 1 + sum(ty_size(a) for a in ctx)


# -- terms -------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Zero:
    def __repr__(self):
        return "Zero"


@dataclass(frozen=True, slots=True)
class Suc:
    body: Expr
    skipped: Ty


@dataclass(frozen=True, slots=True)
class Embed:
    body: Expr


@dataclass(frozen=True, slots=True)
class App:
    fn: Expr
    arg: Expr


@dataclass(frozen=True, slots=True)
class Lam:
    domain: Ty
    body: Expr


Expr = Union[Zero, Suc, Embed, App, Lam]
ZERO = Zero()


def sort_of(e: Expr) -> Sort:
    if isinstance(e, (Zero, Suc)):
        return V
    return T


def expr_size(e: Expr) -> int:
    """Number of term constructors (type annotations not counted)."""
    match e:
        case Zero():
            return 1
        case Suc(i, _) | Embed(i):
            return 1 + expr_size(i)
        case App(t, u):
            return 1 + expr_size(t) + expr_size(u)
        case Lam(_, t):
            return 1 + expr_size(t)
    raise TypeError(f"not an Expr: {e!r}")


def expr_nodes(e: Expr) -> int:
    """Total node count, type annotations included."""
    match e:
        case Zero():
            return 1
        case Suc(i, b):
            return 1 + expr_nodes(i) + ty_size(b)
        case Embed(i):
            return 1 + expr_nodes(i)
        case App(t, u):
            return 1 + expr_nodes(t) + expr_nodes(u)
        case Lam(a, t):
            return 1 + ty_size(a) + expr_nodes(t)
    raise TypeError(f"not an Expr: {e!r}")


def var(n: int, ctx: Con) -> Expr:
    """The V-sorted variable with de Bruijn index ``n`` in ``ctx``."""
    if not 0 <= n < len(ctx):
        raise IndexError(f"index {n} out of range for context of length {len(ctx)}")
    i: Expr = ZERO
    for k in range(n):
        i = Suc(i, ctx[len(ctx) - n + k])
    return i


def var_index(i: Expr) -> int:
    n = 0
    while isinstance(i, Suc):
        i = i.body
        n += 1
    if not isinstance(i, Zero):
        raise TypeError(f"not a variable: {i!r}")
    return n


# -- substitutions -----------------------------------------------------------


@dataclass(frozen=True, slots=True)
class SubList:
    """A simultaneous renaming (sort V) or substitution (sort T).

    ``entries[k]`` replaces variable ``k`` of the target context, counting from
    the left, so the last entry replaces the most recent variable. ``src`` is
    the context the entries live in.
    """

    sort: Sort
    entries: tuple
    src: Con = ()

    def __len__(self):
        return len(self.entries)

    @property
    def last(self) -> Expr:
        return self.entries[-1]

    def init(self) -> SubList:
        return SubList(self.sort, self.entries[:-1], self.src)

    def extend(self, x: Expr) -> SubList:
        return SubList(self.sort, self.entries + (x,), self.src)


def eps(sort: Sort, src: Con = ()) -> SubList:
    return SubList(sort, (), src)


def sub_nodes(xs: SubList) -> int:
    return len(xs.entries) + 1 + sum(expr_nodes(x) for x in xs.entries) + con_size(xs.src)


# -- judgments ---------------------------------------------------------------


def infer_expr(ctx: Con, e: Expr) -> Optional[Ty]:
    """The type of ``e`` in ``ctx``, or None if ``e`` is ill-formed there."""
    match e:
        case Zero():
            return ctx[-1] if ctx else None
        case Suc(i, b):
            if not ctx or ctx[-1] != b or sort_of(i) is not V:
                return None
            return infer_expr(ctx[:-1], i)
        case Embed(i):
            if sort_of(i) is not V:
                return None
            return infer_expr(ctx, i)
        case App(t, u):
            if sort_of(t) is not T or sort_of(u) is not T:
                return None
            f = infer_expr(ctx, t)
            if not isinstance(f, Arrow):
                return None
            return f.cod if infer_expr(ctx, u) == f.dom else None
        case Lam(a, t):
            if sort_of(t) is not T:
                return None
            b = infer_expr(ctx + (a,), t)
            return None if b is None else Arrow(a, b)
    return None


def check_sub(src: Con, s: SubList, tgt: Con) -> bool:
    if s.src != src or len(s.entries) != len(tgt):
        return False
    return all(
        sort_of(x) is s.sort and infer_expr(src, x) == a
        for x, a in zip(s.entries, tgt)
    )


def expr_eq(a: Expr, b: Expr) -> bool:
    return a == b


def sub_eq(a: SubList, b: SubList) -> bool:
    return a == b
