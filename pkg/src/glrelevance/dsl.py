"""Text notation for parameters.

Grammar (whitespace between tokens is ignored)::

    param    := term ("+" term)* | "0"
    term     := [int "*"] symbol ("x" | "⊠") "S" int
    symbol   := "L(" label ["," "k=" int] ["," "s=" int "/" int] ")"

``k`` defaults to 1 and the presence of ``s`` makes the symbol complementary.
Examples: ``L(a,k=2) x S3 + 2*L(b,s=1/3) x S2``, ``0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .parameters import EtaSymbol, UnitaryParameter, check_field_profile

__all__ = [
    "ParseDiagnostic",
    "ParseError",
    "parse_parameter",
    "parse_symbol",
    "print_parameter",
    "print_symbol",
]

BOX = "⊠"

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<int>[0-9]+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[()+*,=/⊠])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class ParseDiagnostic:
    byte_offset: int
    line: int
    column: int
    message: str
    expected: str = ""

    def __str__(self) -> str:
        hint = f" (expected {self.expected})" if self.expected else ""
        return f"{self.line}:{self.column}: {self.message}{hint}"


class ParseError(ValueError):
    def __init__(self, diagnostic: ParseDiagnostic):
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(_diagnose(text, pos, f"unexpected character {text[pos]!r}"))
        kind = m.lastgroup
        if kind != "ws":
            toks.append(_Tok(kind, m.group(), pos))
        pos = m.end()
    toks.append(_Tok("eof", "", len(text)))
    return toks


def _diagnose(text: str, pos: int, message: str, expected: str = "") -> ParseDiagnostic:
    before = text[:pos]
    line = before.count("\n") + 1
    column = pos - (before.rfind("\n") + 1) + 1
    return ParseDiagnostic(len(before.encode("utf-8")), line, column, message, expected)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, message: str, expected: str = "", tok: _Tok | None = None):
        tok = tok or self.tok
        raise ParseError(_diagnose(self.text, tok.pos, message, expected))

    def describe(self, tok: _Tok) -> str:
        return "end of input" if tok.kind == "eof" else repr(tok.text)

    def expect(self, text: str) -> _Tok:
        tok = self.tok
        if tok.text != text or tok.kind == "eof":
            self.fail(f"unexpected {self.describe(tok)}", repr(text))
        self.i += 1
        return tok

    def accept(self, text: str) -> bool:
        if self.tok.kind != "eof" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def positive_int(self, what: str) -> int:
        tok = self.tok
        if tok.kind != "int":
            self.fail(f"unexpected {self.describe(tok)}", what)
        value = int(tok.text)
        if value < 1:
            self.fail(f"{what} must be positive, got {value}", tok=tok)
        if tok.text[0] == "0":
            self.fail(f"leading zero in {what} {tok.text!r}", tok=tok)
        self.i += 1
        return value

    def param(self) -> UnitaryParameter:
        if self.tok.text == "0" and self.toks[self.i + 1].kind == "eof":
            self.i += 1
            return UnitaryParameter()
        counts: dict[tuple[EtaSymbol, int], int] = {}
        while True:
            eta, d, mult = self.term()
            counts[(eta, d)] = counts.get((eta, d), 0) + mult
            if not self.accept("+"):
                break
        if self.tok.kind != "eof":
            self.fail(f"unexpected {self.describe(self.tok)}", "'+' or end of input")
        return UnitaryParameter.from_counts(counts)

    def term(self) -> tuple[EtaSymbol, int, int]:
        mult = 1
        if self.tok.kind == "int":
            mult = self.positive_int("multiplicity")
            self.expect("*")
        eta = self.symbol()
        tok = self.tok
        if tok.text == BOX or tok.text == "x":
            self.i += 1
            rest = None
        elif tok.kind == "ident" and re.fullmatch(r"xS[0-9]*", tok.text):
            # "xS3" / "xS" lex as one identifier when written without spaces
            self.i += 1
            rest = tok.text[1:]
        else:
            self.fail(f"unexpected {self.describe(tok)}", "'x' or '⊠'")
        if rest is None:
            tok = self.tok
            if tok.kind == "ident" and re.fullmatch(r"S[0-9]*", tok.text):
                rest = tok.text
                self.i += 1
            else:
                self.fail(f"unexpected {self.describe(tok)}", "'S'")
        if rest == "S":
            d = self.positive_int("S index")
        else:
            d = int(rest[1:])
            if d < 1:
                self.fail(f"S index must be positive, got {d}", tok=tok)
            if rest[1] == "0":
                self.fail(f"leading zero in S index {rest[1:]!r}", tok=tok)
        return eta, d, mult

    def symbol(self) -> EtaSymbol:
        start = self.tok
        self.expect("L")
        self.expect("(")
        tok = self.tok
        if tok.kind != "ident":
            self.fail(f"unexpected {self.describe(tok)}", "label")
        label = tok.text
        self.i += 1
        base_dim = 1
        s = None
        if self.accept(","):
            if self.tok.text == "k":
                self.i += 1
                self.expect("=")
                base_dim = self.positive_int("k")
                if self.accept(","):
                    s = self.rational()
            elif self.tok.text == "s":
                s = self.rational()
            else:
                self.fail(f"unexpected {self.describe(self.tok)}", "'k=' or 's='")
        self.expect(")")
        if s is not None and not 0 < s < Fraction(1, 2):
            self.fail(f"s = {s} is outside the open interval (0, 1/2)", tok=start)
        return EtaSymbol(label, base_dim, s)

    def rational(self) -> Fraction:
        self.expect("s")
        self.expect("=")
        tok = self.tok
        if tok.kind != "int":
            self.fail(f"unexpected {self.describe(tok)}", "numerator")
        num = int(tok.text)
        if len(tok.text) > 1 and tok.text[0] == "0":
            self.fail(f"leading zero in numerator {tok.text!r}", tok=tok)
        self.i += 1
        self.expect("/")
        den = self.positive_int("denominator")
        return Fraction(num, den)


def parse_parameter(text: str, field: str = "none") -> UnitaryParameter:
    """Parse ``text`` into a canonical parameter; raises :class:`ParseError`."""
    parser = _Parser(text)
    if parser.tok.kind == "eof":
        parser.fail("empty input", "a term or '0'")
    p = parser.param()
    for eta in p.symbols():
        try:
            check_field_profile(eta, field)
        except ValueError as exc:
            raise ParseError(_diagnose(text, 0, str(exc))) from None
    return p


def parse_symbol(text: str) -> EtaSymbol:
    parser = _Parser(text)
    eta = parser.symbol()
    if parser.tok.kind != "eof":
        parser.fail(f"unexpected {parser.describe(parser.tok)}", "end of input")
    return eta


def print_symbol(eta: EtaSymbol) -> str:
    return str(eta)


def print_parameter(p: UnitaryParameter) -> str:
    return str(p)
