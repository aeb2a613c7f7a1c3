"""Session language for monomial ideals.

::

    session  := stmt ((";" | newline) stmt)*
    stmt     := "ring" name ("," name)* | name "=" expr | expr
    expr     := capterm ("+" capterm)*
    capterm  := product (("cap" | "∩") product)*
    product  := powterm ("*" powterm)*
    powterm  := atom ("^" int)?
    atom     := name | "(" monomial ("," monomial)* ")" | "(" expr ")"
    monomial := "1" | factor ("*" factor)*       factor := var ("^" int)?

``(0)`` is the zero ideal.  A parenthesis opens an ideal literal when the next
token is a ring variable or a ``0``/``1``; otherwise it groups an expression.
Text after ``#`` on a line is ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ExponentOverflowError, ParseError
from .ideal import MonomialIdeal, add, intersect, mul, power
from .monomial import Monomial, RingContext, check_exponent

_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r]+) | (?P<comment>\#[^\n]*) | (?P<nl>\n)
  | (?P<int>\d+) | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[(),;*^+=∩])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "sep", "eof"
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start, depth = 0, 1, 0, 0
    while pos < len(text):
        mt = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if mt is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = mt.lastgroup
        if kind == "nl":
            # newlines inside parentheses are plain whitespace
            if depth == 0:
                tokens.append(Token("sep", "\n", line, col))
            line, line_start = line + 1, mt.end()
        elif kind == "op" and mt.group() == ";":
            tokens.append(Token("sep", ";", line, col))
        elif kind not in ("ws", "comment"):
            if mt.group() == "(":
                depth += 1
            elif mt.group() == ")":
                depth = max(0, depth - 1)
            tokens.append(Token(kind, mt.group(), line, col))
        pos = mt.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


@dataclass
class Session:
    """Ring, named ideals and a log of evaluated statements."""

    ring: RingContext | None = None
    bindings: dict[str, MonomialIdeal] = field(default_factory=dict)
    log: list[str] = field(default_factory=list)
    last: MonomialIdeal | None = None

    def __getitem__(self, name: str) -> MonomialIdeal:
        return self.bindings[name]


class _Parser:
    def __init__(self, text: str, session: Session):
        self.toks = tokenize(text)
        self.i = 0
        self.s = session

    # -- token helpers -------------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        return ParseError(msg, tok.line, tok.column)

    def at(self, text: str) -> bool:
        return self.tok.kind in ("op", "name") and self.tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        return self.advance()

    def advance(self) -> Token:
        tok = self.tok
        self.i += 1
        return tok

    def integer(self) -> int:
        tok = self.tok
        if tok.kind != "int":
            raise self.error(f"expected an integer, found {tok.text or 'end of input'!r}")
        self.advance()
        try:
            return check_exponent(int(tok.text))
        except ExponentOverflowError as e:
            raise self.error(str(e), tok) from None

    # -- statements ----------------------------------------------------------

    def session(self) -> Session:
        while True:
            while self.tok.kind == "sep":
                self.advance()
            if self.tok.kind == "eof":
                return self.s
            self.statement()
            if self.tok.kind not in ("sep", "eof"):
                raise self.error(f"unexpected {self.tok.text!r}")

    def statement(self) -> None:
        start = self.tok
        if self.at("ring"):
            self.advance()
            names = [self.name()]
            while self.at(","):
                self.advance()
                names.append(self.name())
            try:
                self.s.ring = RingContext(names)
            except ValueError as e:
                raise self.error(str(e), start) from None
            self.s.bindings.clear()
            self.s.log.append("ring " + ",".join(names))
            return
        nxt = self.toks[self.i + 1]
        if start.kind == "name" and nxt.kind == "op" and nxt.text == "=":
            if self.s.ring is not None and start.text in self.s.ring.variables:
                raise self.error(f"{start.text!r} is a ring variable and cannot be bound", start)
            if start.text == "cap":
                raise self.error("'cap' is a reserved word", start)
            self.i += 2
            value = self.expr()
            self.s.bindings[start.text] = value
            self.s.log.append(f"{start.text} = {value}")
            self.s.last = value
            return
        value = self.expr()
        self.s.log.append(str(value))
        self.s.last = value

    def name(self) -> str:
        tok = self.tok
        if tok.kind != "name":
            raise self.error(f"expected a name, found {tok.text or 'end of input'!r}")
        self.advance()
        return tok.text

    # -- expressions ---------------------------------------------------------

    def expr(self) -> MonomialIdeal:
        left = self.capterm()
        while self.at("+"):
            self.advance()
            left = add(left, self.capterm())
        return left

    def capterm(self) -> MonomialIdeal:
        left = self.product()
        while self.at("cap") or self.at("∩"):
            self.advance()
            left = intersect(left, self.product())
        return left

    def product(self) -> MonomialIdeal:
        left = self.powterm()
        while self.at("*"):
            self.advance()
            left = mul(left, self.powterm())
        return left

    def powterm(self) -> MonomialIdeal:
        base = self.atom()
        if self.at("^"):
            tok = self.advance()
            n = self.integer()
            try:
                return power(base, n)
            except ExponentOverflowError as e:
                raise self.error(str(e), tok) from None
        return base

    def atom(self) -> MonomialIdeal:
        tok = self.tok
        if tok.kind == "name" and tok.text != "cap":
            self.advance()
            if tok.text in self.s.bindings:
                return self.s.bindings[tok.text]
            if self.s.ring is not None and tok.text in self.s.ring.variables:
                raise self.error(f"{tok.text!r} is a ring variable; write ({tok.text}) "
                                 "for the ideal it generates", tok)
            raise self.error(f"unknown name {tok.text!r}", tok)
        if self.at("("):
            nxt = self.toks[self.i + 1]
            if self._starts_literal(nxt):
                return self.literal()
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        raise self.error(f"expected an ideal, found {tok.text or 'end of input'!r}")

    def _starts_literal(self, tok: Token) -> bool:
        if tok.kind == "int":
            return True
        if tok.kind != "name" or tok.text in self.s.bindings:
            return False
        # without a ring, let the literal report the missing declaration
        return self.s.ring is None or tok.text in self.s.ring.variables

    def literal(self) -> MonomialIdeal:
        open_tok = self.expect("(")
        if self.s.ring is None:
            raise self.error("declare a ring before writing ideals", open_tok)
        if self.tok.kind == "int" and self.tok.text == "0":
            self.advance()
            self.expect(")")
            return MonomialIdeal.zero(self.s.ring)
        gens = [self.monomial()]
        while self.at(","):
            self.advance()
            gens.append(self.monomial())
        self.expect(")")
        return MonomialIdeal(self.s.ring, gens)

    def monomial(self) -> Monomial:
        ring = self.s.ring
        exps = [0] * len(ring)
        first = self.tok
        if first.kind == "int":
            if first.text != "1":
                raise self.error("the only numeric monomial is 1", first)
            self.advance()
            if not self.at("*"):
                return ring.one()
            self.advance()
        while True:
            tok = self.tok
            if tok.kind != "name":
                raise self.error(f"expected a variable, found {tok.text or 'end of input'!r}")
            if tok.text not in ring.variables:
                raise self.error(f"unknown variable {tok.text!r}", tok)
            self.advance()
            e = 1
            if self.at("^"):
                self.advance()
                e = self.integer()
            k = ring.index(tok.text)
            try:
                exps[k] = check_exponent(exps[k] + e)
            except ExponentOverflowError as err:
                raise self.error(str(err), tok) from None
            if not self.at("*"):
                return Monomial(ring, exps)
            self.advance()


def parse_session(text: str, session: Session | None = None) -> Session:
    """Evaluate ``text`` statement by statement, eagerly, into ``session``."""
    return _Parser(text, session if session is not None else Session()).session()


def _ring(ring) -> RingContext:
    return ring if isinstance(ring, RingContext) else RingContext.from_string(ring)


def parse_ideal(ring, text: str) -> MonomialIdeal:
    """Evaluate one expression over ``ring`` (a context or ``"x,y,z"``)."""
    s = Session(ring=_ring(ring))
    p = _Parser(text, s)
    while p.tok.kind == "sep":
        p.advance()
    value = p.expr()
    if p.tok.kind != "eof":
        raise p.error(f"unexpected {p.tok.text!r}")
    return value


def parse_monomial(ring, text: str) -> Monomial:
    s = Session(ring=_ring(ring))
    p = _Parser(text, s)
    value = p.monomial()
    if p.tok.kind != "eof":
        raise p.error(f"unexpected {p.tok.text!r}")
    return value


def infer_ring(text: str) -> RingContext:
    """Ring of the variable names in ``text``, in order of first appearance."""
    names = []
    for tok in tokenize(text):
        if tok.kind == "name" and tok.text not in names and tok.text not in ("cap", "ring"):
            names.append(tok.text)
    if not names:
        raise ParseError("no variables found to infer a ring from")
    return RingContext(names)
