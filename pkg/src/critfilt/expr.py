"""Expression syntax for polynomials and rational functions.

Grammar (also in docs/grammar.ebnf)::

    expr   = term { ("+" | "-") term } ;
    term   = unary { ("*" | "/") unary } ;
    unary  = ("+" | "-") unary | power ;
    power  = atom [ "^" integer ] ;
    atom   = integer | name | "(" expr ")" ;

Juxtaposition is not multiplication: ``2z`` is a syntax error.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConstantMap, ExprSyntaxError, MultipleVariables
from .exactnum import Poly, RatFunc
from .ratmap import RatMap


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Pos:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str):
    pos = 0
    out = []
    while True:
        m = _TOKEN.match(text, pos)
        if m is None or m.lastindex is None:
            break
        num, name, sym = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            out.append(("int", num, start))
        elif name is not None:
            out.append(("name", name, start))
        elif sym in "+-*/^()":
            out.append((sym, sym, start))
        else:
            raise ExprSyntaxError(f"unexpected character {sym!r}", start)
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    __slots__ = ("toks", "i")

    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = "an integer" if kind == "int" else repr(kind)
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ExprSyntaxError(f"expected {want}, found {got}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExprSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return Neg(self.unary())
        if kind == "+":
            self.take()
            return Pos(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            return Pow(base, int(self.take("int")[1]))
        return base

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            return Num(int(tok[1]))
        if tok[0] == "name":
            self.take()
            return Var(tok[1])
        if tok[0] == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        got = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ExprSyntaxError(f"expected a number, a name or '(', found {got}", tok[2])


def parse_expr(text: str):
    """Parse ``text`` into an AST; errors carry the character offset."""
    return _Parser(text).parse()


# -- printing ---------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def _prec(node) -> int:
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, (Neg, Pos)):
        return 3
    if isinstance(node, Pow):
        return 4
    return 5


def to_text(node) -> str:
    """Print with the fewest parentheses that reparse to the same AST."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, (Neg, Pos)):
        inner = to_text(node.operand)
        if _prec(node.operand) < 3:
            inner = f"({inner})"
        return ("-" if isinstance(node, Neg) else "+") + inner
    if isinstance(node, Pow):
        base = to_text(node.base)
        if _prec(node.base) < 5:
            base = f"({base})"
        return f"{base}^{node.exponent}"
    p = _PREC[node.op]
    left, right = to_text(node.left), to_text(node.right)
    if _prec(node.left) < p:
        left = f"({left})"
    if _prec(node.right) <= p:
        right = f"({right})"
    return f"{left}{node.op}{right}"


def variables(node) -> set[str]:
    if isinstance(node, Var):
        return {node.name}
    if isinstance(node, Num):
        return set()
    if isinstance(node, (Neg, Pos)):
        return variables(node.operand)
    if isinstance(node, Pow):
        return variables(node.base)
    return variables(node.left) | variables(node.right)


# -- evaluation -------------------------------------------------------------


def _eval(node, var, param):
    """Evaluate to a (num, den) pair of Polys in ``var`` over Q or Q(param)."""
    one = Poly([1])
    if isinstance(node, Num):
        return Poly([node.value]), one
    if isinstance(node, Var):
        if node.name == var:
            return Poly([0, 1]), one
        return Poly([RatFunc.gen(node.name)]), one
    if isinstance(node, Pos):
        return _eval(node.operand, var, param)
    if isinstance(node, Neg):
        n, d = _eval(node.operand, var, param)
        return -n, d
    if isinstance(node, Pow):
        n, d = _eval(node.base, var, param)
        return n ** node.exponent, d ** node.exponent
    ln, ld = _eval(node.left, var, param)
    rn, rd = _eval(node.right, var, param)
    if node.op == "+":
        return ln * rd + rn * ld, ld * rd
    if node.op == "-":
        return ln * rd - rn * ld, ld * rd
    if node.op == "*":
        return ln * rn, ld * rd
    if rn.is_zero():
        raise ZeroDivisionError("division by zero in expression")
    return ln * rd, ld * rn


def _roles(node, param: str | None):
    names = variables(node)
    if param is not None:
        rest = names - {param}
    else:
        rest = names
    if len(rest) > 1 or len(names) > 2:
        raise MultipleVariables(f"more than one map variable: {sorted(rest)}")
    if param is None and len(names) == 2:
        raise MultipleVariables(f"two names {sorted(names)} but no parameter declared")
    var = next(iter(rest)) if rest else None
    return var, (param if param in names else None)


def to_ratmap(text_or_ast, param: str | None = None, value=None, allow_constant: bool = False) -> RatMap:
    """Build a RatMap; ``param`` names the parameter, ``value`` specialises it."""
    node = parse_expr(text_or_ast) if isinstance(text_or_ast, str) else text_or_ast
    var, par = _roles(node, param)
    n, d = _eval(node, var or "_", par)
    R = RatMap(n, d, allow_constant=True)
    if value is not None and par is not None:
        R = RatMap(*_specialize_pair(R, Fraction(value)), allow_constant=True)
    if not allow_constant and R.is_constant():
        raise ConstantMap(f"{to_text(node)} is constant")
    return R


def _specialize_pair(R: RatMap, value):
    sp = lambda p: p.map_coeffs(lambda c: c.evaluate(value) if isinstance(c, RatFunc) else c)
    return sp(R.num), sp(R.den)


def to_ratfunc(text_or_ast, symbol: str | None = None) -> RatFunc:
    """A one-variable expression as a RatFunc in that variable."""
    node = parse_expr(text_or_ast) if isinstance(text_or_ast, str) else text_or_ast
    names = variables(node)
    if len(names) > 1:
        raise MultipleVariables(f"expected one variable, found {sorted(names)}")
    sym = symbol or (next(iter(names)) if names else "t")
    n, d = _eval(node, sym, None)
    return RatFunc(n, d, symbol=sym)


def to_poly(text_or_ast) -> Poly:
    R = to_ratmap(text_or_ast, allow_constant=True)
    if R.den.degree > 0:
        raise ValueError("not a polynomial")
    return R.num * (1 / R.den.lc)
