"""
Parser for the ASCII formula syntax.

Grammar, loosest binding first::

    iff    := imp ('<->' imp)*
    imp    := or ('->' imp)?
    or     := and ('|' and)*
    and    := unary ('&' unary)*
    unary  := ('~' | 'X' | 'Y' | 'box' | 'dia') unary
            | '[' iff ']' unary | '<' iff '>' unary | primary
    primary:= atom | '#f' | '#t' | '(' iff ')'

Derived connectives are desugared while parsing.
"""
import logging
import re
from typing import List, Tuple

from syntax.formula import (
    And, Atom, BOTTOM, Con, Formula, Next, Not, TOP, Yesterday,
    box, dia, diamond, iff, implies, or_,
)
from utils.errors import FormulaSyntaxError

logger = logging.getLogger(__name__)

ATOM_PATTERN = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")
TOKEN_PATTERN = re.compile(r"\s*(<->|->|#f|#t|[A-Za-z_][A-Za-z0-9_]*|\S)")
KEYWORDS = {"X", "Y", "box", "dia"}
PUNCTUATION = set("~&|()[]<>")

Token = Tuple[str, int]


def tokenize(text: str) -> List[Token]:
    """Split formula text into (token, position) pairs."""
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        match = TOKEN_PATTERN.match(text, pos)
        if match is None:
            break  # only trailing whitespace is left
        token = match.group(1)
        start = match.start(1)
        if token in ("<->", "->", "#f", "#t") or token in KEYWORDS or token in PUNCTUATION:
            tokens.append((token, start))
        elif ATOM_PATTERN.match(token):
            tokens.append((token, start))
        else:
            raise FormulaSyntaxError(f"Unknown token {token!r}", start)
        pos = match.end()
    return tokens


class FormulaParser:
    """Recursive-descent parser over a token list."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def parse(self) -> Formula:
        if not self.tokens:
            raise FormulaSyntaxError("Empty formula", 0)
        formula = self._iff()
        if self.index < len(self.tokens):
            token, pos = self.tokens[self.index]
            raise FormulaSyntaxError(f"Unexpected {token!r}", pos)
        return formula

    # Token helpers

    def _peek(self) -> str:
        if self.index < len(self.tokens):
            return self.tokens[self.index][0]
        return ""

    def _position(self) -> int:
        if self.index < len(self.tokens):
            return self.tokens[self.index][1]
        return len(self.text)

    def _advance(self) -> str:
        token = self._peek()
        self.index += 1
        return token

    def _expect(self, token: str) -> None:
        if self._peek() != token:
            found = self._peek() or "end of input"
            raise FormulaSyntaxError(f"Expected {token!r}, found {found!r}", self._position())
        self.index += 1

    # Grammar levels

    def _iff(self) -> Formula:
        left = self._imp()
        while self._peek() == "<->":
            self._advance()
            left = iff(left, self._imp())
        return left

    def _imp(self) -> Formula:
        left = self._or()
        if self._peek() == "->":
            self._advance()
            return implies(left, self._imp())
        return left

    def _or(self) -> Formula:
        left = self._and()
        while self._peek() == "|":
            self._advance()
            left = or_(left, self._and())
        return left

    def _and(self) -> Formula:
        left = self._unary()
        while self._peek() == "&":
            self._advance()
            left = And(left, self._unary())
        return left

    def _unary(self) -> Formula:
        token = self._peek()
        if token == "~":
            self._advance()
            return Not(self._unary())
        if token == "X":
            self._advance()
            return Next(self._unary())
        if token == "Y":
            self._advance()
            return Yesterday(self._unary())
        if token == "box":
            self._advance()
            return box(self._unary())
        if token == "dia":
            self._advance()
            return dia(self._unary())
        if token == "[":
            self._advance()
            antecedent = self._iff()
            self._expect("]")
            return Con(antecedent, self._unary())
        if token == "<":
            self._advance()
            antecedent = self._iff()
            self._expect(">")
            return diamond(antecedent, self._unary())
        return self._primary()

    def _primary(self) -> Formula:
        token = self._peek()
        pos = self._position()
        if token == "":
            raise FormulaSyntaxError("Unexpected end of input", pos)
        if token == "#f":
            self._advance()
            return BOTTOM
        if token == "#t":
            self._advance()
            return TOP
        if token == "(":
            self._advance()
            inner = self._iff()
            self._expect(")")
            return inner
        if ATOM_PATTERN.match(token) and token not in KEYWORDS:
            self._advance()
            return Atom(token)
        raise FormulaSyntaxError(f"Unexpected {token!r}", pos)


def parse(text: str) -> Formula:
    """Parse formula text into its desugared AST.

    Args:
        text: Formula in the ASCII syntax

    Returns:
        The parsed formula

    Raises:
        FormulaSyntaxError: On unknown tokens or malformed input, with position
    """
    formula = FormulaParser(text).parse()
    logger.debug(f"Parsed {text!r}")
    return formula
