"""
Term Parsers

Surface grammar for named terms:

    term  ::= lam | app
    lam   ::= ("\\" | "λ") ident+ "." term
    app   ::= atom+ [lam]
    atom  ::= ident | "(" term ")"
    ident ::= [A-Za-z][A-Za-z0-9_]*

and the prefix form co-de Bruijn terms are serialized in.
"""

import re
from typing import List, Optional, Tuple

from packed_thinnings.errors import ParseError
from packed_thinnings.thin import Thinning, parse as parse_thinning
from packed_thinnings.terms.models import (
    VAR,
    AppC,
    AppN,
    CBTerm,
    LamC,
    LamN,
    NamedTerm,
    OpenTerm,
    VarN,
)

Token = Tuple[str, str, int]

_NAMED_TOKENS = re.compile(
    r"(?P<ws>\s+)|(?P<lam>[\\λ])|(?P<dot>\.)|(?P<lpar>\()|(?P<rpar>\))"
    r"|(?P<ident>[A-Za-z][A-Za-z0-9_]*)"
)

_CB_TOKENS = re.compile(
    r"(?P<ws>\s+)|(?P<lpar>\()|(?P<rpar>\))|(?P<thin>\[[01]*\])|(?P<word>lam\+|lam-|app|var)"
)


def _tokenize(pattern: "re.Pattern[str]", text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        m = pattern.match(text, pos)
        if m is None:
            raise ParseError(f"Unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup or ""
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    return tokens


class _Cursor:
    def __init__(self, text: str, tokens: List[Token]):
        self.text = text
        self.tokens = tokens
        self.i = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self, expected: str) -> Token:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"Expected {expected}, found end of input", self.text, len(self.text))
        if tok[0] != expected:
            raise ParseError(f"Expected {expected}, found {tok[1]!r}", self.text, tok[2])
        self.i += 1
        return tok

    def at_end(self) -> bool:
        return self.i >= len(self.tokens)


class _Frame:
    """A term being read: the application built so far, delimited either by
    an opening parenthesis or by the binders of an enclosing lambda."""

    __slots__ = ("acc", "binders", "paren")

    def __init__(self, binders: Tuple[str, ...] = (), paren: bool = False):
        self.acc: Optional[NamedTerm] = None
        self.binders = binders
        self.paren = paren

    def feed(self, term: NamedTerm) -> None:
        self.acc = term if self.acc is None else AppN(self.acc, term)

    def finish(self, text: str, found: Optional[Token]) -> NamedTerm:
        if self.acc is None:
            if found is None:
                raise ParseError("Expected a term, found end of input", text, len(text))
            raise ParseError(f"Expected a term, found {found[1]!r}", text, found[2])
        body = self.acc
        for binder in reversed(self.binders):
            body = LamN(binder, body)
        return body


def parse_named(text: str) -> NamedTerm:
    """Parse the surface syntax.

    Nesting is tracked on an explicit frame stack, so parenthesis and binder
    depth are bounded by memory only.

    Raises:
        ParseError: With the position of the offending token
    """
    cur = _Cursor(text, _tokenize(_NAMED_TOKENS, text))
    if cur.at_end():
        raise ParseError("Empty term", text, 0)
    frames = [_Frame()]
    while (tok := cur.peek()) is not None:
        kind = tok[0]
        if kind == "ident":
            cur.i += 1
            frames[-1].feed(VarN(tok[1]))
        elif kind == "lpar":
            cur.i += 1
            frames.append(_Frame(paren=True))
        elif kind == "lam":
            frames.append(_Frame(_binders(cur)))
        elif kind == "rpar":
            _close_lambdas(frames, text, tok)
            if not frames[-1].paren:
                frames[-1].finish(text, tok)
                raise ParseError(f"Unexpected {tok[1]!r}", text, tok[2])
            cur.i += 1
            inner = frames.pop().finish(text, tok)
            frames[-1].feed(inner)
        else:
            frames[-1].finish(text, tok)
            if any(frame.paren for frame in frames):
                raise ParseError(f"Expected rpar, found {tok[1]!r}", text, tok[2])
            raise ParseError(f"Unexpected {tok[1]!r}", text, tok[2])
    _close_lambdas(frames, text, None)
    if frames[-1].paren:
        frames[-1].finish(text, None)
        raise ParseError("Expected rpar, found end of input", text, len(text))
    return frames[0].finish(text, None)


def _binders(cur: _Cursor) -> Tuple[str, ...]:
    cur.next("lam")
    binders = [cur.next("ident")[1]]
    while (tok := cur.peek()) is not None and tok[0] == "ident":
        binders.append(cur.next("ident")[1])
    cur.next("dot")
    return tuple(binders)


def _close_lambdas(frames: List[_Frame], text: str, found: Optional[Token]) -> None:
    # A lambda body runs to the closing parenthesis or the end of input.
    while frames[-1].binders:
        body = frames.pop().finish(text, found)
        frames[-1].feed(body)


def parse_codebruijn(text: str) -> CBTerm:
    """Parse the prefix form produced by show_codebruijn.

    Raises:
        ParseError: On malformed input
    """
    cur = _Cursor(text, _tokenize(_CB_TOKENS, text))
    term = _cb_term(cur)
    tok = cur.peek()
    if tok is not None:
        raise ParseError(f"Unexpected {tok[1]!r}", text, tok[2])
    return term


def parse_open(text: str) -> OpenTerm:
    """Parse an outer thinning followed by a co-de Bruijn term."""
    cur = _Cursor(text, _tokenize(_CB_TOKENS, text))
    outer = _cb_thin(cur)
    term = _cb_term(cur)
    tok = cur.peek()
    if tok is not None:
        raise ParseError(f"Unexpected {tok[1]!r}", text, tok[2])
    return OpenTerm(outer, term)


def _cb_thin(cur: _Cursor) -> Thinning:
    return parse_thinning(cur.next("thin")[1])


def _cb_term(cur: _Cursor) -> CBTerm:
    # Open nodes: [lt] for an app awaiting its left child, [lt, left, rt]
    # for one awaiting its right child, or the used flag of a lam.
    frames: List[Tuple[str, list]] = []
    while True:
        cur.next("lpar")
        word = cur.next("word")[1]
        if word == "app":
            frames.append(("app", [_cb_thin(cur)]))
            continue
        if word != "var":
            frames.append(("lam", [word == "lam+"]))
            continue
        term: CBTerm = VAR
        cur.next("rpar")
        while frames:
            kind, parts = frames[-1]
            if kind == "app" and len(parts) == 1:
                parts.append(term)
                parts.append(_cb_thin(cur))
                break
            frames.pop()
            term = AppC(*parts, term) if kind == "app" else LamC(parts[0], term)
            cur.next("rpar")
        else:
            return term
