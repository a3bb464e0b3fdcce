"""Modal formulas: AST, concrete grammar, pretty-printing, subformula closure.

Concrete grammar, loosest to tightest binding:

    formula := iff
    iff     := imp ("<->" iff)?          right associative
    imp     := disj ("-->" imp)?         right associative
    disj    := conj ("||" conj)*         left associative
    conj    := unary ("&&" unary)*       left associative
    unary   := "Not" unary | "Box" unary | "True" | "False"
             | ident | "(" formula ")"

Identifiers match [A-Za-z][A-Za-z0-9_]* and may not be one of the
reserved words Not, Box, True, False.

All formula values are immutable and compared structurally; a fixed
total order (`canonical_key`) makes every enumeration in the package
deterministic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator


class Formula:
    """Base class for modal formulas. Instances are immutable."""

    __slots__ = ()

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Falsity(Formula):
    pass


@dataclass(frozen=True)
class Truth(Formula):
    pass


_ATOM_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_RESERVED = frozenset({"Not", "Box", "True", "False"})


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def __post_init__(self) -> None:
        if not _ATOM_NAME.match(self.name) or self.name in _RESERVED:
            raise ValueError(f"invalid atom name: {self.name!r}")


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Box(Formula):
    arg: Formula


FALSE = Falsity()
TRUE = Truth()

_BINARY = {And: "&&", Or: "||", Imp: "-->", Iff: "<->"}


def children(f: Formula) -> tuple[Formula, ...]:
    """Immediate subformulas of f."""
    if isinstance(f, (Not, Box)):
        return (f.arg,)
    if isinstance(f, (And, Or, Imp, Iff)):
        return (f.left, f.right)
    return ()


@lru_cache(maxsize=None)
def node_count(f: Formula) -> int:
    return 1 + sum(node_count(c) for c in children(f))


_TAG = {Falsity: 0, Truth: 1, Atom: 2, Not: 3, And: 4, Or: 5, Imp: 6, Iff: 7, Box: 8}


@lru_cache(maxsize=None)
def canonical_key(f: Formula):
    """Sort key realizing the package-wide total order on formulas.

    Orders by node count, then constructor tag, then recursively on
    components (atom names lexicographically). Keys of equal-size,
    equal-tag formulas always have the same shape, so tuple comparison
    is well defined.
    """
    tag = _TAG[type(f)]
    if isinstance(f, Atom):
        return (1, tag, f.name)
    return (node_count(f), tag) + tuple(canonical_key(c) for c in children(f))


@lru_cache(maxsize=None)
def subformulas(f: Formula) -> tuple[Formula, ...]:
    """Subformula closure of f, including f, in canonical order."""
    seen: set[Formula] = set()

    def walk(g: Formula) -> None:
        if g in seen:
            return
        seen.add(g)
        for c in children(g):
            walk(c)

    walk(f)
    return tuple(sorted(seen, key=canonical_key))


def atoms(f: Formula) -> frozenset[str]:
    """Names of the atoms occurring in f."""
    return frozenset(g.name for g in subformulas(f) if isinstance(g, Atom))


# ---------------------------------------------------------------------------
# Parsing


class ParseError(ValueError):
    """Syntax error with 1-based line/column position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


_TOKEN = re.compile(r"[A-Za-z][A-Za-z0-9_]*|-->|<->|&&|\|\||[()]|\S")


def _tokenize(text: str) -> Iterator[tuple[str, int, int]]:
    for lineno, line in enumerate(text.splitlines() or [""], start=1):
        pos = 0
        while pos < len(line):
            if line[pos].isspace():
                pos += 1
                continue
            m = _TOKEN.match(line, pos)
            assert m is not None
            tok = m.group()
            if len(tok) == 1 and tok not in "()" and not tok.isalpha():
                raise ParseError(f"unexpected character {tok!r}", lineno, pos + 1)
            yield tok, lineno, pos + 1
            pos = m.end()


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(_tokenize(text))
        self.pos = 0
        lines = text.splitlines() or [""]
        self.eof = (len(lines), len(lines[-1]) + 1)

    def peek(self) -> str | None:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def advance(self) -> str:
        tok = self.tokens[self.pos][0]
        self.pos += 1
        return tok

    def fail(self, message: str):
        if self.pos < len(self.tokens):
            _, line, col = self.tokens[self.pos]
        else:
            line, col = self.eof
        raise ParseError(message, line, col)

    def formula(self) -> Formula:
        return self.iff()

    def iff(self) -> Formula:
        left = self.imp()
        if self.peek() == "<->":
            self.advance()
            return Iff(left, self.iff())
        return left

    def imp(self) -> Formula:
        left = self.disj()
        if self.peek() == "-->":
            self.advance()
            return Imp(left, self.imp())
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek() == "||":
            self.advance()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek() == "&&":
            self.advance()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek()
        if tok is None:
            self.fail("unexpected end of input")
        if tok == "Not":
            self.advance()
            return Not(self.unary())
        if tok == "Box":
            self.advance()
            return Box(self.unary())
        if tok == "True":
            self.advance()
            return TRUE
        if tok == "False":
            self.advance()
            return FALSE
        if tok == "(":
            self.advance()
            f = self.formula()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.advance()
            return f
        if _ATOM_NAME.match(tok):
            self.advance()
            return Atom(tok)
        self.fail(f"unexpected token {tok!r}")
        raise AssertionError  # unreachable


def parse(text: str) -> Formula:
    """Parse concrete syntax into a Formula; raises ParseError with position."""
    p = _Parser(text)
    f = p.formula()
    if p.peek() is not None:
        p.fail(f"unexpected token {p.peek()!r} after formula")
    return f


# ---------------------------------------------------------------------------
# Printing

# Binding levels, loosest first; parenthesize a subterm whose level is
# below the context's minimum.
_LEVEL_IFF, _LEVEL_IMP, _LEVEL_OR, _LEVEL_AND, _LEVEL_UNARY = 0, 1, 2, 3, 4


def _print(f: Formula, ctx: int) -> str:
    if isinstance(f, Falsity):
        return "False"
    if isinstance(f, Truth):
        return "True"
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Not):
        return _wrap(f"Not {_print(f.arg, _LEVEL_UNARY)}", _LEVEL_UNARY, ctx)
    if isinstance(f, Box):
        return _wrap(f"Box {_print(f.arg, _LEVEL_UNARY)}", _LEVEL_UNARY, ctx)
    if isinstance(f, Iff):
        s = f"{_print(f.left, _LEVEL_IFF + 1)} <-> {_print(f.right, _LEVEL_IFF)}"
        return _wrap(s, _LEVEL_IFF, ctx)
    if isinstance(f, Imp):
        s = f"{_print(f.left, _LEVEL_IMP + 1)} --> {_print(f.right, _LEVEL_IMP)}"
        return _wrap(s, _LEVEL_IMP, ctx)
    if isinstance(f, Or):
        s = f"{_print(f.left, _LEVEL_OR)} || {_print(f.right, _LEVEL_OR + 1)}"
        return _wrap(s, _LEVEL_OR, ctx)
    if isinstance(f, And):
        s = f"{_print(f.left, _LEVEL_AND)} && {_print(f.right, _LEVEL_AND + 1)}"
        return _wrap(s, _LEVEL_AND, ctx)
    raise TypeError(f"not a formula: {f!r}")


def _wrap(s: str, level: int, ctx: int) -> str:
    return s if level >= ctx else f"({s})"


def print_formula(f: Formula) -> str:
    """Minimal-parenthesization concrete syntax; parse(print_formula(f)) == f."""
    return _print(f, _LEVEL_IFF)
