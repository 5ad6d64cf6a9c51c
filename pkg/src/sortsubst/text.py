r"""ASCII concrete syntax for types, contexts, kernel terms and explicit terms.

    Ty    := "o" | Ty "->" Ty                        right-associative
    Con   := "[]" | "[" Ty ("," Ty)* "]"               rightmost most recent
    Expr  := "#" NAT | "`" Expr | Expr Expr | "\(" Ty ")." Expr
    ITm   := ITm "[" ISub "]" | "p1" ISub | ITm ITm | "\(" Ty ")." ITm
    ISub  := "id" | ISub ";" ISub | "eps" | "(" ISub "," ITm ")" | "p0" ISub

``#n`` is a de Bruijn index, expanded to a Zero/Suc chain whose skipped types
are read off the ambient context. ``s ; d`` applies ``s`` first, so it is
``IComp(d, s)``; ``;`` associates to the left. ``id`` takes its context
annotation from elaboration. Lambdas extend as far right as possible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .cwf import IApp, IComp, IEps, IEPS, IExt, IId, ILam, IPi0, IPi1, ISubApply
from .syntax import App, Arrow, Base, Con, Embed, Lam, O, Suc, Zero, ZERO, var_index


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int
    line: int
    column: int


class ParseError(Exception):
    def __init__(self, message: str, span: SourceSpan):
        super().__init__(f"{span.line}:{span.column}: {message}")
        self.message = message
        self.span = span


class ScopeError(Exception):
    """Well-parsed input that cannot be elaborated in the given context."""


_TOKEN = re.compile(r"\s*(?:(->)|(#\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


@dataclass
class _Tok:
    kind: str
    text: str
    start: int
    end: int


def _span(src: str, start: int, end: int) -> SourceSpan:
    line = src.count("\n", 0, start) + 1
    col = start - (src.rfind("\n", 0, start) + 1) + 1
    return SourceSpan(start, end, line, col)


def _lex(src: str) -> list:
    toks = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None or m.end() == pos:
            break  # trailing whitespace
        arrow, index, word, sym = m.groups()
        text = arrow or index or word or sym
        start = m.end() - len(text)
        if index:
            kind = "index"
        elif word:
            kind = "word"
        else:
            kind = text
        toks.append(_Tok(kind, text, start, m.end()))
        pos = m.end()
    toks.append(_Tok("eof", "", len(src), len(src)))
    return toks


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = _lex(src)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str, tok: _Tok | None = None):
        t = tok or self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        raise ParseError(f"{msg}, found {found}", _span(self.src, t.start, max(t.end, t.start)))

    def at(self, kind: str, text: str | None = None) -> bool:
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def at_word(self, *words) -> bool:
        return self.tok.kind == "word" and self.tok.text in words

    def expect(self, kind: str, what: str | None = None) -> _Tok:
        if not self.at(kind):
            self.error(f"expected {what or repr(kind)}")
        t = self.tok
        self.i += 1
        return t

    def finish(self):
        if not self.at("eof"):
            self.error("unexpected trailing input")

    # -- types and contexts --

    def ty(self):
        dom = self.ty_atom()
        if self.at("->"):
            self.i += 1
            return Arrow(dom, self.ty())
        return dom

    def ty_atom(self):
        if self.at_word("o"):
            self.i += 1
            return O
        if self.at("("):
            self.i += 1
            a = self.ty()
            self.expect(")", "')'")
            return a
        self.error("expected a type")

    def con(self) -> Con:
        self.expect("[", "'['")
        if self.at("]"):
            self.i += 1
            return ()
        out = [self.ty()]
        while self.at(","):
            self.i += 1
            out.append(self.ty())
        self.expect("]", "']'")
        return tuple(out)

    # -- kernel terms (raw: indices unresolved) --

    def lam_head(self):
        self.expect("\\", "'\\'")
        self.expect("(", "'('")
        a = self.ty()
        self.expect(")", "')'")
        self.expect(".", "'.'")
        return a

    def expr(self):
        if self.at("\\"):
            start = self.tok
            a = self.lam_head()
            return ("lam", a, self.expr(), start)
        head = self.expr_atom()
        while self.starts_expr_atom() or self.at("\\"):
            if self.at("\\"):
                head = ("app", head, self.expr())
                break
            head = ("app", head, self.expr_atom())
        return head

    def starts_expr_atom(self) -> bool:
        return self.at("index") or self.at("`") or self.at("(")

    def expr_atom(self):
        if self.at("index"):
            t = self.tok
            self.i += 1
            return ("var", int(t.text[1:]), t)
        if self.at("`"):
            self.i += 1
            return ("embed", self.expr_atom())
        if self.at("("):
            self.i += 1
            e = self.expr()
            self.expect(")", "')'")
            return e
        self.error("expected a term")

    # -- explicit terms (raw: id unannotated) --

    def itm(self):
        if self.at("\\"):
            a = self.lam_head()
            return ("lam", a, self.itm())
        head = self.itm_postfix()
        while self.starts_itm_atom() or self.at("\\"):
            if self.at("\\"):
                head = ("app", head, self.itm())
                break
            head = ("app", head, self.itm_postfix())
        return head

    def starts_itm_atom(self) -> bool:
        return self.at_word("p1") or self.at("(")

    def itm_postfix(self):
        t = self.itm_atom()
        while self.at("["):
            self.i += 1
            s = self.isub()
            self.expect("]", "']'")
            t = ("sub", t, s)
        return t

    def itm_atom(self):
        if self.at_word("p1"):
            tok = self.tok
            self.i += 1
            return ("p1", self.isub_atom(), tok)
        if self.at("("):
            self.i += 1
            t = self.itm()
            self.expect(")", "')'")
            return t
        self.error("expected an explicit term")

    def isub(self):
        s = self.isub_atom()
        while self.at(";"):
            self.i += 1
            s = ("seq", s, self.isub_atom())
        return s

    def isub_atom(self):
        if self.at_word("id"):
            tok = self.tok
            self.i += 1
            return ("id", tok)
        if self.at_word("eps"):
            self.i += 1
            return ("eps",)
        if self.at_word("p0"):
            tok = self.tok
            self.i += 1
            return ("p0", self.isub_atom(), tok)
        if self.at("("):
            self.i += 1
            s = self.isub()
            if self.at(","):
                self.i += 1
                t = self.itm()
                self.expect(")", "')'")
                return ("ext", s, t)
            self.expect(")", "',' or ')'")
            return s
        self.error("expected a substitution")


def _whole(src: str, rule: str):
    p = _Parser(src)
    out = getattr(p, rule)()
    p.finish()
    return out


def parse_ty(src: str):
    return _whole(src, "ty")


def parse_con(src: str) -> Con:
    return _whole(src, "con")


# -- elaboration ---------------------------------------------------------------


def _resolve_expr(raw, ctx: Con):
    kind = raw[0]
    if kind == "var":
        n = raw[1]
        if n >= len(ctx):
            raise ScopeError(f"index #{n} out of range in a context of length {len(ctx)}")
        i = ZERO
        for k in range(n):
            i = Suc(i, ctx[len(ctx) - n + k])
        return i
    if kind == "embed":
        return Embed(_resolve_expr(raw[1], ctx))
    if kind == "app":
        return App(_resolve_expr(raw[1], ctx), _resolve_expr(raw[2], ctx))
    if kind == "lam":
        return Lam(raw[1], _resolve_expr(raw[2], ctx + (raw[1],)))
    raise AssertionError(kind)


def parse_expr(src: str, ctx: Con = ()):
    """Parse a kernel term, resolving ``#n`` against ``ctx``.

    Raises ParseError on bad syntax and ScopeError for an out-of-range index.
    """
    return _resolve_expr(_whole(src, "expr"), tuple(ctx))


def _elab_sub(raw, src: Con):
    from .cwf import infer_itm  # local: avoids a cycle at import time

    kind = raw[0]
    if kind == "id":
        return IId(src), src
    if kind == "eps":
        return IEPS, ()
    if kind == "seq":
        first, mid = _elab_sub(raw[1], src)
        second, tgt = _elab_sub(raw[2], mid)
        return IComp(second, first), tgt
    if kind == "ext":
        d, tgt = _elab_sub(raw[1], src)
        t, a = _elab_tm(raw[2], src)
        return IExt(d, t), tgt + (a,)
    if kind == "p0":
        d, tgt = _elab_sub(raw[1], src)
        if not tgt:
            raise ScopeError("p0 of a substitution into the empty context")
        return IPi0(d), tgt[:-1]
    raise AssertionError(kind)


def _elab_tm(raw, ctx: Con):
    kind = raw[0]
    if kind == "sub":
        d, mid = _elab_sub(raw[2], ctx)
        t, a = _elab_tm(raw[1], mid)
        return ISubApply(t, d), a
    if kind == "p1":
        d, tgt = _elab_sub(raw[1], ctx)
        if not tgt:
            raise ScopeError("p1 of a substitution into the empty context")
        return IPi1(d), tgt[-1]
    if kind == "app":
        f, fa = _elab_tm(raw[1], ctx)
        u, ua = _elab_tm(raw[2], ctx)
        if not isinstance(fa, Arrow):
            raise ScopeError(f"applying a term of non-function type {render_ty(fa)}")
        if ua != fa.dom:
            raise ScopeError(
                f"argument has type {render_ty(ua)}, expected {render_ty(fa.dom)}")
        return IApp(f, u), fa.cod
    if kind == "lam":
        b, bt = _elab_tm(raw[2], ctx + (raw[1],))
        return ILam(raw[1], b), Arrow(raw[1], bt)
    raise AssertionError(kind)


def parse_itm(src: str, ctx: Con = ()):
    """Parse and elaborate an explicit term in ``ctx``; ScopeError if ill-typed."""
    return _elab_tm(_whole(src, "itm"), tuple(ctx))[0]


def parse_isub(src: str, ctx: Con = ()):
    return _elab_sub(_whole(src, "isub"), tuple(ctx))[0]


# -- rendering -------------------------------------------------------------------


def render_ty(a) -> str:
    if isinstance(a, Base):
        return "o"
    dom = render_ty(a.dom)
    if isinstance(a.dom, Arrow):
        dom = f"({dom})"
    return f"{dom} -> {render_ty(a.cod)}"


def render_con(ctx: Con) -> str:
    return "[" + ", ".join(render_ty(a) for a in ctx) + "]"


def _is_var(e) -> bool:
    while isinstance(e, Suc):
        e = e.body
    return isinstance(e, Zero)


def _expr(e, tail: bool) -> str:
    if _is_var(e):
        return f"#{var_index(e)}"
    if isinstance(e, Embed):
        return "`" + _expr_atom(e.body)
    if isinstance(e, App):
        arg = e.arg
        if isinstance(arg, Lam) and tail:
            a = _expr(arg, True)
        else:
            a = _expr_atom(arg)
        f = _expr_atom(e.fn) if isinstance(e.fn, Lam) else _expr(e.fn, False)
        return f"{f} {a}"
    if isinstance(e, Lam):
        s = f"\\({render_ty(e.domain)}). {_expr(e.body, True)}"
        return s if tail else f"({s})"
    if isinstance(e, Suc):
        raise ValueError(f"Suc over a non-variable cannot be rendered: {e!r}")
    raise TypeError(f"not an Expr: {e!r}")


def _expr_atom(e) -> str:
    if _is_var(e) or isinstance(e, Embed):
        return _expr(e, True)
    return f"({_expr(e, True)})"


def render_expr(e) -> str:
    return _expr(e, True)


def _itm(t, tail: bool) -> str:
    if isinstance(t, ILam):
        s = f"\\({render_ty(t.domain)}). {_itm(t.body, True)}"
        return s if tail else f"({s})"
    if isinstance(t, IApp):
        arg = t.arg
        if isinstance(arg, ILam) and tail:
            a = _itm(arg, True)
        else:
            a = _itm_postfix(arg)
        f = _itm_postfix(t.fn) if isinstance(t.fn, ILam) else _itm(t.fn, False)
        return f"{f} {a}"
    return _itm_postfix(t)


def _itm_postfix(t) -> str:
    if isinstance(t, ISubApply):
        return f"{_itm_postfix(t.tm)}[{render_isub(t.sub)}]"
    if isinstance(t, IPi1):
        return f"p1 {_isub_atom(t.sub)}"
    return f"({_itm(t, True)})"


def render_itm(t) -> str:
    return _itm(t, True)


def _isub_atom(s) -> str:
    if isinstance(s, IId):
        return "id"
    if isinstance(s, IEps):
        return "eps"
    if isinstance(s, IPi0):
        return f"p0 {_isub_atom(s.sub)}"
    if isinstance(s, IExt):
        return f"({render_isub(s.sub)}, {render_itm(s.tm)})"
    return f"({render_isub(s)})"


def render_isub(s) -> str:
    if isinstance(s, IComp):
        # IComp(second, first) is written "first ; second"
        return f"{render_isub(s.second)} ; {_isub_atom(s.first_applied_last)}"
    return _isub_atom(s)
