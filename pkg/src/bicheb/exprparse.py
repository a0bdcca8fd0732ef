"""Tokenizer, parser and evaluator for f(x, y) formula strings.

Grammar, loosest binding first:

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom ('^' factor)?          right associative
    atom   := number | 'pi' | 'e' | 'x' | 'y'
            | name '(' expr (',' expr)* ')' | '(' expr ')'

so '^' binds tighter than unary minus: -x^2 is -(x^2).  Functions are the
fixed set sin cos tan exp log sqrt abs pow; evaluation is deterministic and
any NaN/Inf intermediate is reported as an error naming the subexpression.
"""

import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import EvalError, LexError, ParseError


@dataclass(frozen=True)
class Token:
    kind: str  # number | identifier | operator | paren | comma
    text: str
    position: int


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple


FUNCTIONS = {
    "sin": 1, "cos": 1, "tan": 1, "exp": 1,
    "log": 1, "sqrt": 1, "abs": 1, "pow": 2,
}
CONSTANTS = {"pi": math.pi, "e": math.e}

_TOKEN_RE = re.compile(r"""
    (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<identifier>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<operator>[-+*/^])
  | (?P<paren>[()])
  | (?P<comma>,)
""", re.VERBOSE)


def tokenize(source):
    """Split a formula string into tokens, skipping whitespace."""
    tokens = []
    pos = 0
    while pos < len(source):
        if source[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(source, pos)
        if match is None:
            raise LexError(f"illegal character {source[pos]!r}", pos)
        tokens.append(Token(match.lastgroup, match.group(), pos))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = list(tokens)
        self.index = 0

    def _end_position(self):
        if not self.tokens:
            return 0
        last = self.tokens[-1]
        return last.position + len(last.text)

    def peek(self):
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return None

    def advance(self):
        token = self.peek()
        if token is None:
            raise ParseError("unexpected end of input", self._end_position())
        self.index += 1
        return token

    def expect(self, kind, text):
        token = self.peek()
        if token is None or token.kind != kind or token.text != text:
            found = "end of input" if token is None else repr(token.text)
            pos = self._end_position() if token is None else token.position
            raise ParseError(f"expected {text!r}, found {found}", pos)
        self.index += 1
        return token

    def expression(self):
        node = self.term()
        while True:
            token = self.peek()
            if token is not None and token.kind == "operator" and token.text in "+-":
                self.index += 1
                node = BinOp(token.text, node, self.term())
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            token = self.peek()
            if token is not None and token.kind == "operator" and token.text in "*/":
                self.index += 1
                node = BinOp(token.text, node, self.factor())
            else:
                return node

    def factor(self):
        token = self.peek()
        if token is not None and token.kind == "operator" and token.text == "-":
            self.index += 1
            return Neg(self.factor())
        return self.power()

    def power(self):
        base = self.atom()
        token = self.peek()
        if token is not None and token.kind == "operator" and token.text == "^":
            self.index += 1
            return BinOp("^", base, self.factor())
        return base

    def atom(self):
        token = self.advance()
        if token.kind == "number":
            return Num(float(token.text))
        if token.kind == "paren" and token.text == "(":
            node = self.expression()
            self.expect("paren", ")")
            return node
        if token.kind == "identifier":
            following = self.peek()
            if following is not None and following.kind == "paren" and following.text == "(":
                return self.call(token)
            if token.text in ("x", "y"):
                return Var(token.text)
            if token.text in CONSTANTS:
                return Num(CONSTANTS[token.text])
            raise ParseError(f"unknown identifier {token.text!r}", token.position)
        raise ParseError(f"unexpected token {token.text!r}", token.position)

    def call(self, name_token):
        name = name_token.text
        if name not in FUNCTIONS:
            raise ParseError(f"unknown function {name!r}", name_token.position)
        self.expect("paren", "(")
        args = [self.expression()]
        while True:
            token = self.peek()
            if token is not None and token.kind == "comma":
                self.index += 1
                args.append(self.expression())
            else:
                break
        self.expect("paren", ")")
        if len(args) != FUNCTIONS[name]:
            raise ParseError(
                f"{name} takes {FUNCTIONS[name]} argument(s), got {len(args)}",
                name_token.position)
        return Call(name, tuple(args))


def parse(tokens):
    """Parse a token list into an expression tree."""
    parser = _Parser(tokens)
    if parser.peek() is None:
        raise ParseError("empty expression", 0)
    node = parser.expression()
    trailing = parser.peek()
    if trailing is not None:
        raise ParseError(f"unexpected token {trailing.text!r}", trailing.position)
    return node


def parse_expression(source):
    """Convenience wrapper: tokenize and parse in one step."""
    return parse(tokenize(source))


def pretty_print(node):
    """Fully parenthesized source text that re-parses to the same tree.

    A negative literal prints with a leading minus and would re-parse as a
    negation node, so generated trees should carry nonnegative constants
    under explicit Neg nodes (the parser itself never produces negative
    literals).
    """
    if isinstance(node, Num):
        return repr(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        return f"(-{pretty_print(node.operand)})"
    if isinstance(node, BinOp):
        return f"({pretty_print(node.left)} {node.op} {pretty_print(node.right)})"
    if isinstance(node, Call):
        args = ", ".join(pretty_print(a) for a in node.args)
        return f"{node.func}({args})"
    raise TypeError(f"not an expression node: {node!r}")


_MAX_EXACT_EXPONENT = 16

_UNARY_NUMPY = {
    "sin": np.sin, "cos": np.cos, "tan": np.tan,
    "exp": np.exp, "abs": np.abs,
}


def _check_finite(value, node):
    if not np.all(np.isfinite(value)):
        raise EvalError("non-finite value", pretty_print(node))
    return value


def _int_power(base, exponent, node):
    # repeated multiplication keeps small integer powers exact
    result = np.ones_like(np.asarray(base, dtype=float)) if isinstance(base, np.ndarray) else 1.0
    for _ in range(abs(exponent)):
        result = result * base
    if exponent < 0:
        if np.any(base == 0):
            raise EvalError("zero raised to a negative power", pretty_print(node))
        result = 1.0 / result
    return result


def _power(base, exponent, node):
    scalar_exponent = None
    if np.ndim(exponent) == 0:
        as_float = float(exponent)
        if as_float.is_integer() and abs(as_float) <= _MAX_EXACT_EXPONENT:
            scalar_exponent = int(as_float)
    if scalar_exponent is not None:
        return _int_power(base, scalar_exponent, node)
    return np.power(base, exponent)


def _eval(node, x, y):
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        return x if node.name == "x" else y
    if isinstance(node, Neg):
        return -_eval(node.operand, x, y)
    if isinstance(node, BinOp):
        left = _eval(node.left, x, y)
        right = _eval(node.right, x, y)
        if node.op == "+":
            value = left + right
        elif node.op == "-":
            value = left - right
        elif node.op == "*":
            value = left * right
        elif node.op == "/":
            if np.any(right == 0):
                raise EvalError("division by zero", pretty_print(node))
            value = left / right
        else:
            value = _power(left, right, node)
        return _check_finite(value, node)
    if isinstance(node, Call):
        args = [_eval(a, x, y) for a in node.args]
        if node.func == "log":
            if np.any(args[0] <= 0):
                raise EvalError("log of a nonpositive value", pretty_print(node))
            value = np.log(args[0])
        elif node.func == "sqrt":
            if np.any(args[0] < 0):
                raise EvalError("sqrt of a negative value", pretty_print(node))
            value = np.sqrt(args[0])
        elif node.func == "pow":
            value = _power(args[0], args[1], node)
        else:
            value = _UNARY_NUMPY[node.func](args[0])
        return _check_finite(value, node)
    raise TypeError(f"not an expression node: {node!r}")


def eval_ast(node, x, y):
    """Evaluate an expression tree at (x, y).

    Accepts scalars or broadcastable numpy arrays; scalar inputs return a
    plain float.  Evaluation is pure: equal inputs give bitwise-equal
    results.  NaN/Inf intermediates raise instead of propagating, so the
    floating-point warnings they would trigger are suppressed here.
    """
    with np.errstate(all="ignore"):
        value = _eval(node, x, y)
    if isinstance(value, np.ndarray):
        return value
    return float(value)
