"""Ideal expression language: parser, pretty-printer, evaluator.

Grammar (no implicit multiplication, variables are x1, x2, ...):

    expr  := 'ideal' '(' mono (',' mono)* ')'
           | 'arrangement' '(' uint ',' uint ')'
           | 'intersect' '(' expr ',' expr ')'
           | 'sum' '(' expr ',' expr ')'
           | 'product' '(' expr ',' expr ')'
           | 'power' '(' expr ',' uint ')'
           | 'symbolic' '(' expr ',' uint ')'
           | 'closure' '(' expr ',' uint ')'
           | 'sat' '(' expr ')'
           | 'radical' '(' expr ')'
    mono  := '1' | term ('*' term)*
    term  := var ('^' uint)?
    var   := 'x' uint          (indices start at 1)

Parse errors carry line, column and the expected-token set.  The ambient
variable count is inferred as the largest index that occurs (and the n of
any arrangement), unless a larger one is declared at evaluation time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .closure import DEFAULT_ENUM_CAP, integral_closure_power
from .errors import InputError, ParseError
from .ideals import MonomialIdeal, minimalize
from .squarefree import coordinate_arrangement_ideal, symbolic_power

MAX_UINT = 1_000_000

SparseMonomial = tuple[tuple[int, int], ...]  # ((0-based index, exponent), ...)


@dataclass(frozen=True)
class IdealLit:
    monomials: tuple[SparseMonomial, ...]


@dataclass(frozen=True)
class Arrangement:
    n: int
    e: int


@dataclass(frozen=True)
class Binary:
    op: str  # intersect | sum | product
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Graded:
    op: str  # power | symbolic | closure
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Unary:
    op: str  # sat | radical
    base: "Expr"


Expr = IdealLit | Arrangement | Binary | Graded | Unary


_TOKEN_RE = re.compile(r"x[0-9]+|[a-zA-Z_]+|[0-9]+|[(),*^]|\s+|.")

_BINARY_OPS = ("intersect", "sum", "product")
_GRADED_OPS = ("power", "symbolic", "closure")
_UNARY_OPS = ("sat", "radical")
_ALL_HEADS = ("ideal", "arrangement") + _BINARY_OPS + _GRADED_OPS + _UNARY_OPS


class _Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind: str, text: str, line: int, col: int):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    for m in _TOKEN_RE.finditer(text):
        s = m.group(0)
        if s.isspace():
            for ch in s:
                if ch == "\n":
                    line += 1
                    col = 1
                else:
                    col += 1
            continue
        if re.fullmatch(r"x[0-9]+", s):
            kind = "var"
        elif s.isdigit():
            kind = "uint"
        elif s in "(),*^":
            kind = s
        elif s.isidentifier():
            kind = "name"
        else:
            raise ParseError(f"unexpected character {s!r}", line, col)
        tokens.append(_Token(kind, s, line, col))
        col += len(s)
    tokens.append(_Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self, kind: str, expected: tuple[str, ...]) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(
                f"unexpected {tok.kind} {tok.text!r}", tok.line, tok.col, expected
            )
        self.pos += 1
        return tok

    def uint(self, what: str) -> int:
        tok = self.take("uint", (what,))
        value = int(tok.text)
        if value > MAX_UINT:
            raise ParseError(f"{what} {value} exceeds cap {MAX_UINT}", tok.line, tok.col)
        return value

    def expr(self) -> Expr:
        tok = self.peek()
        if tok.kind != "name" or tok.text not in _ALL_HEADS:
            raise ParseError(
                f"unexpected {tok.kind} {tok.text!r}", tok.line, tok.col, _ALL_HEADS
            )
        self.pos += 1
        head = tok.text
        self.take("(", ("'('",))
        if head == "ideal":
            monos = [self.mono()]
            while self.peek().kind == ",":
                self.pos += 1
                monos.append(self.mono())
            self.take(")", ("','", "')'"))
            return IdealLit(tuple(monos))
        if head == "arrangement":
            n = self.uint("variable count")
            self.take(",", ("','",))
            e = self.uint("codimension")
            self.take(")", ("')'",))
            return Arrangement(n, e)
        if head in _BINARY_OPS:
            left = self.expr()
            self.take(",", ("','",))
            right = self.expr()
            self.take(")", ("')'",))
            return Binary(head, left, right)
        if head in _GRADED_OPS:
            base = self.expr()
            self.take(",", ("','",))
            k = self.uint("exponent")
            self.take(")", ("')'",))
            return Graded(head, base, k)
        base = self.expr()
        self.take(")", ("')'",))
        return Unary(head, base)

    def mono(self) -> SparseMonomial:
        tok = self.peek()
        if tok.kind == "uint" and tok.text == "1":
            self.pos += 1
            return ()
        exponents: dict[int, int] = {}
        self.term(exponents)
        while self.peek().kind == "*":
            self.pos += 1
            self.term(exponents)
        # x1^0 contributes nothing; dropping it keeps the AST canonical.
        return tuple(sorted((i, e) for i, e in exponents.items() if e))

    def term(self, exponents: dict[int, int]) -> None:
        tok = self.take("var", ("variable like x1", "'1'"))
        index = int(tok.text[1:])
        if index < 1:
            raise ParseError("variable indices start at 1", tok.line, tok.col)
        if index > MAX_UINT:
            raise ParseError(f"variable index {index} exceeds cap {MAX_UINT}", tok.line, tok.col)
        exp = 1
        if self.peek().kind == "^":
            self.pos += 1
            exp = self.uint("exponent")
        exponents[index - 1] = exponents.get(index - 1, 0) + exp


def parse_ideal(text: str) -> Expr:
    """Parse an ideal expression; raises ParseError with position info."""
    parser = _Parser(text)
    tree = parser.expr()
    tail = parser.peek()
    if tail.kind != "end":
        raise ParseError(
            f"trailing input {tail.text!r}", tail.line, tail.col, ("end of input",)
        )
    return tree


def pretty(expr: Expr) -> str:
    """Canonical text for an expression; parse(pretty(e)) == e."""
    if isinstance(expr, IdealLit):
        return f"ideal({', '.join(_sparse_text(m) for m in expr.monomials)})"
    if isinstance(expr, Arrangement):
        return f"arrangement({expr.n},{expr.e})"
    if isinstance(expr, Binary):
        return f"{expr.op}({pretty(expr.left)}, {pretty(expr.right)})"
    if isinstance(expr, Graded):
        return f"{expr.op}({pretty(expr.base)},{expr.exponent})"
    if isinstance(expr, Unary):
        return f"{expr.op}({pretty(expr.base)})"
    raise InputError(f"not an expression: {expr!r}")


def _sparse_text(m: SparseMonomial) -> str:
    parts = []
    for idx, e in m:
        if e == 0:
            continue
        parts.append(f"x{idx + 1}" if e == 1 else f"x{idx + 1}^{e}")
    return "*".join(parts) if parts else "1"


def infer_ambient(expr: Expr) -> int:
    """Smallest ambient that accommodates the expression (at least 1)."""
    if isinstance(expr, IdealLit):
        return max((idx + 1 for m in expr.monomials for idx, e in m if e), default=1)
    if isinstance(expr, Arrangement):
        return expr.n
    if isinstance(expr, Binary):
        return max(infer_ambient(expr.left), infer_ambient(expr.right))
    if isinstance(expr, (Graded, Unary)):
        return infer_ambient(expr.base)
    raise InputError(f"not an expression: {expr!r}")


def evaluate(
    expr: Expr, ambient: int | None = None, *, enum_cap: int = DEFAULT_ENUM_CAP
) -> MonomialIdeal:
    """Evaluate an expression to a canonical monomial ideal."""
    needed = infer_ambient(expr)
    if ambient is None:
        ambient = needed
    elif ambient < needed:
        raise InputError(f"declared ambient {ambient} is below the required {needed}")
    return _eval(expr, ambient, enum_cap)


def _eval(expr: Expr, n: int, enum_cap: int = DEFAULT_ENUM_CAP) -> MonomialIdeal:
    if isinstance(expr, IdealLit):
        gens = []
        for m in expr.monomials:
            vec = [0] * n
            for idx, e in m:
                vec[idx] = e
            gens.append(tuple(vec))
        return minimalize(n, gens, _validated=True)
    if isinstance(expr, Arrangement):
        base = coordinate_arrangement_ideal(expr.n, expr.e)
        return _extend(base, n)
    if isinstance(expr, Binary):
        left = _eval(expr.left, n, enum_cap)
        right = _eval(expr.right, n, enum_cap)
        if expr.op == "intersect":
            from .ideals import intersect

            return intersect(left, right)
        if expr.op == "sum":
            return minimalize(n, left.gens + right.gens, _validated=True)
        return left.multiply(right)
    if isinstance(expr, Graded):
        base = _eval(expr.base, n, enum_cap)
        if expr.op == "power":
            return base.power(expr.exponent)
        if expr.op == "symbolic":
            return symbolic_power(base, expr.exponent)
        return integral_closure_power(base, expr.exponent, cap=enum_cap)
    if isinstance(expr, Unary):
        base = _eval(expr.base, n, enum_cap)
        return base.saturate() if expr.op == "sat" else base.radical()
    raise InputError(f"not an expression: {expr!r}")


def _extend(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if I.ambient == n:
        return I
    pad = (0,) * (n - I.ambient)
    return MonomialIdeal(n, tuple(g + pad for g in I.gens))


def canonical_form(I: MonomialIdeal) -> str:
    """Generator-list text of an ideal; equal ideals give equal text."""
    return str(I)
