"""Element expressions: ``4*(g^2*h/2) - h^2/2``, ``a^5*t + a*y*t``, ``u[1,2]``.

Grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ['^' INT]
    atom   := INT | NAME | 'delta' '[' INT ']' | 'u' '[' INT ',' INT ']' | '(' expr ')'

Division is only by integer constants and must be exact when evaluated.
Parsing is independent of any space; :func:`evaluate` interprets the tree
in an algebra that supplies generators.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

GENERATOR_DEGREES = {
    # degree as (constant, multiple of d)
    "a": (1, 0), "c": (2, 0),
    "z": (0, 1), "m": (0, 1), "x": (0, 1), "t": (0, 1), "g": (0, 1), "l1": (0, 1), "e1": (0, 1),
    "y": (0, 2), "h": (0, 2), "s": (0, 2), "l2": (0, 2), "e2": (0, 2),
}
INDEXED = {"delta": 1, "u": 2}

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, expected: frozenset[str] = frozenset()):
        self.offset = offset
        self.expected = expected
        exp = f" (expected one of: {', '.join(sorted(expected))})" if expected else ""
        super().__init__(f"{message} at offset {offset}{exp}")


class ElementError(ValueError):
    """An expression that parses but is not an element of the chosen space."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        where = f" at offset {offset}" if offset is not None else ""
        super().__init__(f"{message}{where}")


@dataclass(frozen=True)
class Token:
    kind: str  # int, name, op, end
    text: str
    offset: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    src = text
    # work on characters but report byte offsets
    char_to_byte = []
    b = 0
    for ch in src:
        char_to_byte.append(b)
        b += len(ch.encode("utf-8"))
    char_to_byte.append(b)
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            break
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(Token("int", m.group(1), char_to_byte[start]))
        elif m.group(2):
            out.append(Token("name", m.group(2), char_to_byte[start]))
        else:
            out.append(Token("op", m.group(3), char_to_byte[start]))
        pos = m.end()
    out.append(Token("end", "", char_to_byte[len(src)]))
    return out


ATOM_START = frozenset({"INT", "NAME", "("})


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != op:
            raise ParseError(f"unexpected {_describe(tok)}", tok.offset, frozenset({op}))
        return self.take()

    def expect_int(self) -> int:
        tok = self.peek()
        if tok.kind != "int":
            raise ParseError(f"unexpected {_describe(tok)}", tok.offset, frozenset({"INT"}))
        self.take()
        return int(tok.text)

    def parse(self):
        tok = self.peek()
        if tok.kind == "end":
            raise ParseError("empty expression", tok.offset, ATOM_START | {"-"})
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {_describe(tok)}", tok.offset,
                             frozenset({"+", "-", "*", "/", "^", "end of input"}))
        return node

    def expr(self):
        terms = []
        sign = 1
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.take()
            sign = -1
        terms.append((sign, self.term()))
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.take()
                terms.append((1 if tok.text == "+" else -1, self.term()))
            else:
                break
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return ("add", tuple(terms))

    def term(self):
        factors = [self.factor()]
        divisor = 1
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.take()
                if divisor != 1:
                    raise ParseError("factor after a divisor", self.peek().offset, frozenset({"/", "+", "-"}))
                factors.append(self.factor())
            elif tok.kind == "op" and tok.text == "/":
                self.take()
                start = self.peek()
                base = self.expect_int()
                exp = 1
                nxt = self.peek()
                if nxt.kind == "op" and nxt.text == "^":
                    self.take()
                    exp = self.expect_int()
                k = base**exp
                if k == 0:
                    raise ParseError("division by zero", start.offset)
                divisor *= k
            else:
                break
        node = factors[0] if len(factors) == 1 else ("mul", tuple(factors))
        if divisor != 1:
            node = ("div", node, divisor)
        return node

    def factor(self):
        node = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.take()
            node = ("pow", node, self.expect_int())
        return node

    def atom(self):
        tok = self.peek()
        if tok.kind == "int":
            self.take()
            return ("num", int(tok.text))
        if tok.kind == "op" and tok.text == "(":
            self.take()
            node = self.expr()
            self.expect_op(")")
            return node
        if tok.kind == "name":
            self.take()
            name = tok.text
            if name in INDEXED:
                self.expect_op("[")
                idx = [self.expect_int()]
                for _ in range(INDEXED[name] - 1):
                    self.expect_op(",")
                    idx.append(self.expect_int())
                self.expect_op("]")
                return ("gen", name, tuple(idx), tok.offset)
            if name not in GENERATOR_DEGREES:
                raise ParseError(f"unknown generator {name!r}", tok.offset,
                                 frozenset(GENERATOR_DEGREES) | frozenset(INDEXED))
            return ("gen", name, (), tok.offset)
        raise ParseError(f"unexpected {_describe(tok)}", tok.offset, ATOM_START)


def _describe(tok: Token) -> str:
    return "end of input" if tok.kind == "end" else repr(tok.text)


@dataclass(frozen=True)
class ElementExpr:
    text: str
    tree: tuple = field(compare=False)

    def degree(self, d: int) -> int | None:
        """Degree for the given field dimension; ``None`` for a zero constant."""
        return _degree(self.tree, d)

    def __str__(self):
        return self.text


def _gen_degree(name: str, idx: tuple, d: int) -> int:
    if name == "delta":
        return idx[0] * d + 1
    if name == "u":
        return 2 * idx[0] + idx[1] * d + 1
    const, mult = GENERATOR_DEGREES[name]
    return const + mult * d


def _degree(node, d: int) -> int | None:
    kind = node[0]
    if kind == "num":
        return 0
    if kind == "gen":
        return _gen_degree(node[1], node[2], d)
    if kind == "pow":
        return _degree(node[1], d) * node[2]
    if kind == "div":
        return _degree(node[1], d)
    if kind == "mul":
        return sum(_degree(f, d) for f in node[1])
    degs = {_degree(t, d) for _, t in node[1]}
    if len(degs) > 1:
        raise ElementError("expression is not homogeneous")
    return degs.pop()


def parse_element(text: str) -> ElementExpr:
    """Parse ``text`` into an :class:`ElementExpr` (raises :class:`ParseError`)."""
    return ElementExpr(text, _Parser(text).parse())


def evaluate(expr: ElementExpr | tuple, algebra):
    """Interpret a parse tree.

    ``algebra`` provides ``const(n)``, ``gen(name, indices, offset)`` and
    ``divide(value, k)``; values must support ``+``, ``*`` and unary ``-``.
    """
    node = expr.tree if isinstance(expr, ElementExpr) else expr
    kind = node[0]
    if kind == "num":
        return algebra.const(node[1])
    if kind == "gen":
        return algebra.gen(node[1], node[2], node[3])
    if kind == "pow":
        base = evaluate(node[1], algebra)
        out = algebra.const(1)
        for _ in range(node[2]):
            out = out * base
        return out
    if kind == "div":
        return algebra.divide(evaluate(node[1], algebra), node[2])
    if kind == "mul":
        out = evaluate(node[1][0], algebra)
        for f in node[1][1:]:
            out = out * evaluate(f, algebra)
        return out
    out = None
    for sign, t in node[1]:
        v = evaluate(t, algebra)
        v = v if sign > 0 else -v
        out = v if out is None else out + v
    return out
