"""A small expression language over the cross-dimensional operators.

Binary operators are words written infix (``A dk B``).  There is no
precedence table: a chain may repeat one operator, which associates to the
left, but mixing two different operators needs parentheses.  Functions:
``box(X)``, ``sym(X)``, ``alt(X)``, ``proj(X, n)``, ``bridge(n, p)``; a
postfix ``'`` transposes.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np

from . import geometry, hypergroup, stp
from .errors import ShapeError
from .weights import as_mat, bridge


class ExprError(ValueError):
    pass


class ParseError(ExprError):
    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


class UnboundName(ExprError):
    pass


BINARY = ("ltimes", "rtimes", "circ", "dk", "pstp", "badd", "bsub", "hadd", "hsub")
FUNCS = {"box": 1, "sym": 1, "alt": 1, "proj": 2, "bridge": 2}

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<punct>[(),']))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int


def tokenize(src: str) -> list[Token]:
    tokens, pos = [], 0
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if m is None or m.end() == pos:
            col = pos + len(src[pos:]) - len(src[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {src[col - 1]!r}", col)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    tokens.append(Token("end", "", len(src) + 1))
    return tokens


# The AST is a tuple tree: ("name", s) | ("int", n) | ("t", node)
# | ("bin", op, lhs, rhs) | ("call", fname, [args]).


class _Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.take()
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text or 'end of input'!r}", tok.column)
        return tok

    def parse(self):
        node = self.chain()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.column)
        return node

    def chain(self):
        node = self.postfix()
        op = None
        while self.peek().kind == "name" and self.peek().text in BINARY:
            tok = self.take()
            if op is not None and tok.text != op:
                raise ParseError(
                    f"operator {tok.text!r} follows {op!r} without parentheses (no precedence)",
                    tok.column,
                )
            op = tok.text
            node = ("bin", op, node, self.postfix())
        return node

    def postfix(self):
        node = self.primary()
        while self.peek().text == "'":
            self.take()
            node = ("t", node)
        return node

    def primary(self):
        tok = self.take()
        if tok.text == "(":
            node = self.chain()
            self.expect(")")
            return node
        if tok.kind == "int":
            return ("int", int(tok.text))
        if tok.kind == "name":
            if tok.text in BINARY:
                raise ParseError(f"operator {tok.text!r} is missing its left operand", tok.column)
            if tok.text in FUNCS:
                self.expect("(")
                args = [self.chain()]
                while self.peek().text == ",":
                    self.take()
                    args.append(self.chain())
                close = self.expect(")")
                if len(args) != FUNCS[tok.text]:
                    raise ParseError(
                        f"{tok.text} takes {FUNCS[tok.text]} argument(s), got {len(args)}", close.column
                    )
                return ("call", tok.text, args)
            return ("name", tok.text)
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.column)


def parse(src: str):
    return _Parser(src).parse()


def _binary_ops(weighted: bool) -> dict[str, Callable]:
    return {
        "ltimes": stp.ltimes,
        "rtimes": stp.rtimes,
        "circ": stp.circ,
        "dk": lambda a, b: stp.dk_stp(a, b, weighted),
        "pstp": stp.pseudo_stp,
        "badd": stp.badd,
        "bsub": stp.bsub,
        "hadd": stp.hadd,
        "hsub": stp.hsub,
    }


def _int_arg(node, fname: str) -> int:
    if node[0] != "int":
        raise ExprError(f"{fname} expects an integer literal argument")
    return node[1]


def evaluate(src: str, bindings: Mapping[str, np.ndarray], weighted: bool = True) -> np.ndarray:
    ops = _binary_ops(weighted)

    def ev(node):
        kind = node[0]
        if kind == "name":
            if node[1] not in bindings:
                raise UnboundName(f"unbound identifier {node[1]!r}")
            return np.asarray(bindings[node[1]], dtype=float)
        if kind == "int":
            return np.array([[float(node[1])]])
        if kind == "t":
            return as_mat(ev(node[1])).T
        if kind == "bin":
            a, b = ev(node[2]), ev(node[3])
            try:
                return ops[node[1]](a, b)
            except ShapeError as exc:
                raise ShapeError(f"{node[1]} on shapes {a.shape} and {b.shape}: {exc}") from exc
        fname, args = node[1], node[2]
        if fname == "bridge":
            return bridge(_int_arg(args[0], fname), _int_arg(args[1], fname), weighted)
        if fname == "proj":
            return geometry.project(ev(args[0]), _int_arg(args[1], fname))[0]
        x = ev(args[0])
        if fname == "box":
            return hypergroup.box(x)
        return hypergroup.sym_alt(x, "symmetrize" if fname == "sym" else "alternate")

    return ev(parse(src))
