"""Multi-sorted first-order syntax: terms, formulas, parser, printer.

Signatures cover the language of rings (+, *, unary -, 0, 1, =) and the
arithmetic signatures on positive integers with <= and | (divides).  Formula
text uses "forall v (...)", "exists v (...)", the connectives "&", "|", "->",
"!", and atoms "s = t", "s | t", "s <= t".  Printing is normalized ASCII and
parse-then-print is a fixpoint on normalized text.

Quantifier nodes may carry a search hint (see `hints`); hints never take part
in structural equality or printing, they only guide evaluation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Union


class FolError(ValueError):
    """Syntax error, unknown symbol, or arity mismatch."""


@dataclass(frozen=True)
class Signature:
    functions: Mapping[str, int]
    relations: Mapping[str, int]
    numerals: bool = False

    def __post_init__(self):
        object.__setattr__(self, "functions", MappingProxyType(dict(self.functions)))
        object.__setattr__(self, "relations", MappingProxyType(dict(self.relations)))

    def __eq__(self, other):
        return (
            isinstance(other, Signature)
            and dict(self.functions) == dict(other.functions)
            and dict(self.relations) == dict(other.relations)
            and self.numerals == other.numerals
        )

    def __hash__(self):
        return hash(
            (tuple(sorted(self.functions.items())), tuple(sorted(self.relations.items())), self.numerals)
        )

    def function_arity(self, name: str) -> int | None:
        if name in self.functions:
            return self.functions[name]
        if self.numerals and name.isdigit():
            return 0
        return None


# numerals abbreviate 1+1+...+1, so they add no expressive power over rings
RING_SIG = Signature({"+": 2, "*": 2, "-": 1, "0": 0, "1": 0}, {"=": 2}, numerals=True)
ZPLUS_LEQ_DIV = Signature({}, {"=": 2, "<=": 2, "|": 2}, numerals=True)
ZPLUS_ADD_DIV = Signature({"+": 2}, {"=": 2, "|": 2}, numerals=True)
ZPLUS_ADD_MUL = Signature({"+": 2, "*": 2}, {"=": 2}, numerals=True)
Z_ARITH = Signature({"+": 2, "*": 2, "-": 1}, {"=": 2}, numerals=True)


# -- terms ---------------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Apply:
    fn: str
    args: tuple["Term", ...] = ()


Term = Union[Var, Apply]


def tvar(name: str) -> Var:
    return Var(name)


def tapp(fn: str, *args: Term) -> Apply:
    return Apply(fn, tuple(args))


def tnum(n: int) -> Apply:
    return Apply(str(n), ())


ZERO = tapp("0")
ONE = tapp("1")


def tadd(a: Term, b: Term) -> Term:
    return tapp("+", a, b)


def tmul(a: Term, b: Term) -> Term:
    return tapp("*", a, b)


def tneg(a: Term) -> Term:
    return tapp("-", a)


def tsub(a: Term, b: Term) -> Term:
    return tapp("+", a, tapp("-", b))


def term_vars(t: Term) -> frozenset[str]:
    if isinstance(t, Var):
        return frozenset((t.name,))
    out: frozenset[str] = frozenset()
    for a in t.args:
        out |= term_vars(a)
    return out


# -- formulas ------------------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    rel: str
    args: tuple[Term, ...]


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"
    hint: object = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"
    hint: object = field(default=None, compare=False, repr=False)


Formula = Union[Atom, Not, And, Or, Implies, Exists, Forall]


def atom_eq(a: Term, b: Term) -> Atom:
    return Atom("=", (a, b))


def conj(parts: Iterable[Formula]) -> Formula:
    parts = list(parts)
    if not parts:
        raise FolError("empty conjunction")
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disj(parts: Iterable[Formula]) -> Formula:
    parts = list(parts)
    if not parts:
        raise FolError("empty disjunction")
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


def free_vars(phi: Formula) -> frozenset[str]:
    if isinstance(phi, Atom):
        out: frozenset[str] = frozenset()
        for t in phi.args:
            out |= term_vars(t)
        return out
    if isinstance(phi, Not):
        return free_vars(phi.body)
    if isinstance(phi, (And, Or, Implies)):
        return free_vars(phi.left) | free_vars(phi.right)
    if isinstance(phi, (Exists, Forall)):
        return free_vars(phi.body) - {phi.var}
    raise FolError(f"not a formula: {phi!r}")


def is_closed(phi: Formula) -> bool:
    return not free_vars(phi)


# -- substitution --------------------------------------------------------------


def substitute_term(t: Term, mapping: Mapping[str, Term]) -> Term:
    if isinstance(t, Var):
        return mapping.get(t.name, t)
    return Apply(t.fn, tuple(substitute_term(a, mapping) for a in t.args))


def fresh_name(base: str, taken: Iterable[str]) -> str:
    taken = set(taken)
    cand = base
    while cand in taken:
        cand = cand + "'"
    return cand


def substitute(phi: Formula, mapping: Mapping[str, Term]) -> Formula:
    """Capture-avoiding substitution of terms for free variables.

    Quantifier hints are carried along, with the substitution applied to any
    terms they mention."""
    mapping = {k: v for k, v in mapping.items()}
    return _subst(phi, mapping)


def _subst(phi: Formula, mapping: Mapping[str, Term]) -> Formula:
    if isinstance(phi, Atom):
        return Atom(phi.rel, tuple(substitute_term(t, mapping) for t in phi.args))
    if isinstance(phi, Not):
        return Not(_subst(phi.body, mapping))
    if isinstance(phi, (And, Or, Implies)):
        return type(phi)(_subst(phi.left, mapping), _subst(phi.right, mapping))
    if isinstance(phi, (Exists, Forall)):
        live = {k: v for k, v in mapping.items() if k != phi.var and k in free_vars(phi.body)}
        var = phi.var
        body = phi.body
        value_frees: set[str] = set()
        for v in live.values():
            value_frees |= term_vars(v)
        if var in value_frees:
            var = fresh_name(var, value_frees | free_vars(body) | set(live))
            body = _subst(body, {phi.var: Var(var)})
        hint = phi.hint
        if hint is not None and live:
            hint = hint.map_terms(lambda t: substitute_term(t, live))
        body = _subst(body, live)
        return type(phi)(var, body, hint)
    raise FolError(f"not a formula: {phi!r}")


def rename_bound(phi: Formula, taken: Iterable[str]) -> Formula:
    """Rename every bound variable clashing with `taken` to a fresh name."""
    taken = set(taken)

    def walk(f: Formula) -> Formula:
        if isinstance(f, Atom):
            return f
        if isinstance(f, Not):
            return Not(walk(f.body))
        if isinstance(f, (And, Or, Implies)):
            return type(f)(walk(f.left), walk(f.right))
        if isinstance(f, (Exists, Forall)):
            var, body, hint = f.var, f.body, f.hint
            if var in taken:
                nv = fresh_name(var, taken | free_vars(body))
                body = _subst(body, {var: Var(nv)})
                var = nv
            return type(f)(var, walk(body), hint)
        raise FolError(f"not a formula: {f!r}")

    return walk(phi)


# -- validation ----------------------------------------------------------------


def check_term(sig: Signature, t: Term):
    if isinstance(t, Var):
        return
    arity = sig.function_arity(t.fn)
    if arity is None:
        raise FolError(f"unknown function symbol {t.fn!r}")
    if arity != len(t.args):
        raise FolError(f"arity mismatch for {t.fn!r}: expected {arity}, got {len(t.args)}")
    for a in t.args:
        check_term(sig, a)


def check_formula(sig: Signature, phi: Formula):
    if isinstance(phi, Atom):
        if phi.rel not in sig.relations:
            raise FolError(f"unknown relation symbol {phi.rel!r}")
        if sig.relations[phi.rel] != len(phi.args):
            raise FolError(f"arity mismatch for relation {phi.rel!r}")
        for t in phi.args:
            check_term(sig, t)
    elif isinstance(phi, Not):
        check_formula(sig, phi.body)
    elif isinstance(phi, (And, Or, Implies)):
        check_formula(sig, phi.left)
        check_formula(sig, phi.right)
    elif isinstance(phi, (Exists, Forall)):
        check_formula(sig, phi.body)
    else:
        raise FolError(f"not a formula: {phi!r}")


# -- printer -------------------------------------------------------------------

_TERM_PREC_ADD = 1
_TERM_PREC_MUL = 2
_TERM_PREC_NEG = 3


def format_term(t: Term, prec: int = 0) -> str:
    if isinstance(t, Var):
        return t.name
    if t.fn == "+" and len(t.args) == 2:
        rhs = t.args[1]
        if isinstance(rhs, Apply) and rhs.fn == "-" and len(rhs.args) == 1:
            s = f"{format_term(t.args[0], _TERM_PREC_ADD)} - {format_term(rhs.args[0], _TERM_PREC_ADD + 1)}"
        else:
            s = f"{format_term(t.args[0], _TERM_PREC_ADD)} + {format_term(rhs, _TERM_PREC_ADD + 1)}"
        return f"({s})" if prec > _TERM_PREC_ADD else s
    if t.fn == "*" and len(t.args) == 2:
        s = f"{format_term(t.args[0], _TERM_PREC_MUL)}*{format_term(t.args[1], _TERM_PREC_MUL + 1)}"
        return f"({s})" if prec > _TERM_PREC_MUL else s
    if t.fn == "-" and len(t.args) == 1:
        s = f"-{format_term(t.args[0], _TERM_PREC_NEG)}"
        return f"({s})" if prec > _TERM_PREC_NEG else s
    if not t.args:
        return t.fn
    return f"{t.fn}({', '.join(format_term(a) for a in t.args)})"


_PREC_IMPLIES = 1
_PREC_OR = 2
_PREC_AND = 3
_PREC_UNARY = 4


def format_formula(phi: Formula, prec: int = 0) -> str:
    if isinstance(phi, Atom):
        return f"{format_term(phi.args[0])} {phi.rel} {format_term(phi.args[1])}"
    if isinstance(phi, Not):
        body = phi.body
        if isinstance(body, (Exists, Forall, Not)):
            return f"!{format_formula(body, _PREC_UNARY)}"
        return f"!({format_formula(body)})"
    if isinstance(phi, Implies):
        s = f"{format_formula(phi.left, _PREC_IMPLIES + 1)} -> {format_formula(phi.right, _PREC_IMPLIES)}"
        return f"({s})" if prec > _PREC_IMPLIES else s
    if isinstance(phi, Or):
        s = f"{format_formula(phi.left, _PREC_OR)} | {format_formula(phi.right, _PREC_OR + 1)}"
        return f"({s})" if prec > _PREC_OR else s
    if isinstance(phi, And):
        s = f"{format_formula(phi.left, _PREC_AND)} & {format_formula(phi.right, _PREC_AND + 1)}"
        return f"({s})" if prec > _PREC_AND else s
    if isinstance(phi, Exists):
        return f"exists {phi.var} ({format_formula(phi.body)})"
    if isinstance(phi, Forall):
        return f"forall {phi.var} ({format_formula(phi.body)})"
    raise FolError(f"not a formula: {phi!r}")


# -- parser --------------------------------------------------------------------

_NORMALIZE = {
    "∀": "forall ",
    "∃": "exists ",
    "∧": "&",
    "∨": "|",
    "¬": "!",
    "→": "->",
    "∣": "|",
    "≤": "<=",
    "×": "*",
    "⋅": "*",
    "−": "-",
}

_TOKEN = re.compile(r"\s*(->|<=|\*\*|\d+|[A-Za-z_][A-Za-z0-9_]*'*|[()=|&!+\-*,^])")

_KEYWORDS = {"forall", "exists"}


def _tokens(text: str) -> list[tuple[str, int]]:
    for k, v in _NORMALIZE.items():
        text = text.replace(k, v)
    out = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if not m:
            raise FolError(f"bad character {text[i]!r} at position {i}")
        out.append((m.group(1), i))
        i = m.end()
    return out


class _Parser:
    def __init__(self, sig: Signature, text: str, macros: Mapping[str, tuple[tuple[str, ...], Formula]] | None):
        self.sig = sig
        self.text = text
        self.toks = _tokens(text)
        self.i = 0
        self.macros = macros or {}

    def error(self, msg: str):
        pos = self.toks[self.i][1] if self.i < len(self.toks) else len(self.text)
        raise FolError(f"{msg} at position {pos}")

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            self.error(f"expected {expected!r}, found {tok!r}")
        self.i += 1
        return tok

    def parse(self) -> Formula:
        phi = self.implication()
        if self.peek() is not None:
            self.error(f"trailing input {self.peek()!r}")
        check_formula(self.sig, phi)
        return phi

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.peek() == "->":
            self.take("->")
            return Implies(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        out = self.conjunction()
        while self.peek() == "|":
            self.take("|")
            out = Or(out, self.conjunction())
        return out

    def conjunction(self) -> Formula:
        out = self.unary()
        while self.peek() == "&":
            self.take("&")
            out = And(out, self.unary())
        return out

    def unary(self) -> Formula:
        tok = self.peek()
        if tok == "!":
            self.take("!")
            return Not(self.unary())
        if tok in _KEYWORDS:
            kind = self.take()
            var = self.take()
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*'*", var):
                self.error(f"bad variable name {var!r}")
            if self.peek() in _KEYWORDS:
                body = self.unary()
            else:
                self.take("(")
                body = self.implication()
                self.take(")")
            return (Exists if kind == "exists" else Forall)(var, body)
        return self.primary()

    def primary(self) -> Formula:
        # a primary is a macro call, an atom, or a parenthesized formula;
        # atoms and parenthesized formulas both may begin with "(",
        # so try the atom reading first and fall back on failure.
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of input")
        if tok in self.macros and self.i + 1 < len(self.toks) and self.toks[self.i + 1][0] == "(":
            return self.macro_call()
        save = self.i
        try:
            return self.atom()
        except FolError:
            self.i = save
        if self.peek() == "(":
            self.take("(")
            phi = self.implication()
            self.take(")")
            return phi
        self.error(f"cannot parse formula at {self.peek()!r}")

    def macro_call(self) -> Formula:
        name = self.take()
        params, template = self.macros[name]
        self.take("(")
        args = [self.term()]
        while self.peek() == ",":
            self.take(",")
            args.append(self.term())
        self.take(")")
        if len(args) != len(params):
            self.error(f"macro {name!r} expects {len(params)} arguments")
        body = rename_bound(template, set().union(*(term_vars(a) for a in args)) or set())
        return substitute(body, dict(zip(params, args)))

    def atom(self) -> Formula:
        lhs = self.term()
        rel = self.peek()
        if rel not in self.sig.relations:
            self.error(f"expected a relation symbol, found {rel!r}")
        self.take()
        rhs = self.term()
        return Atom(rel, (lhs, rhs))

    def term(self) -> Term:
        if self.peek() == "-":
            self.take("-")
            out = tneg(self.term_product())
        else:
            out = self.term_product()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term_product()
            out = tadd(out, rhs) if op == "+" else tsub(out, rhs)
        return out

    def term_product(self) -> Term:
        out = self.term_atom()
        while self.peek() == "*":
            self.take("*")
            out = tmul(out, self.term_atom())
        return out

    def term_atom(self) -> Term:
        tok = self.peek()
        if tok == "(":
            self.take("(")
            t = self.term()
            self.take(")")
            return t
        if tok == "-":
            self.take("-")
            return tneg(self.term_atom())
        tok = self.take()
        if tok is None:
            self.error("unexpected end of term")
        if tok.isdigit():
            if self.sig.function_arity(tok) is None:
                self.error(f"numeral {tok} is not available in this signature")
            return Apply(tok, ())
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*'*", tok):
            self.error(f"unexpected token {tok!r} in term")
        if tok in _KEYWORDS:
            self.error(f"keyword {tok!r} cannot be a term")
        if tok in self.sig.functions and self.sig.functions[tok] == 0:
            return Apply(tok, ())
        return Var(tok)


def parse_formula(
    sig: Signature,
    text: str,
    macros: Mapping[str, tuple[tuple[str, ...], Formula]] | None = None,
) -> Formula:
    """Parse formula text over the signature, expanding known macros."""
    return _Parser(sig, text, macros).parse()
