"""Parser for the polytope mini-language.

Grammar (whitespace between tokens is ignored)::

    spec    := "polygon:" INT
             | "simplex:" INT
             | "wedge:" INT "," INT
             | "product:(" spec ("," spec)* ")"

``polygon:m`` is the ``m``-gon, ``simplex:n`` the simplex with ``n`` facets
(dimension ``n-1``), ``wedge:r,n`` the wedge product of the ``r``-gon with
``simplex:n``.  :func:`render` produces the canonical text form.
"""

from __future__ import annotations

from .errors import SpecParseError
from .polytopes import (
    CombinatorialType,
    PolygonType,
    ProductType,
    SimplexType,
    WedgeProductType,
)

KINDS = ("polygon", "simplex", "wedge", "product")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> SpecParseError:
        return SpecParseError(message, self.text, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, token: str) -> None:
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            raise self.error(f"expected {token!r}")
        self.pos += len(token)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def kind(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        word = self.text[start:self.pos]
        if word not in KINDS:
            self.pos = start
            raise self.error(f"unknown polytope kind {word!r}")
        return word

    def spec(self) -> CombinatorialType:
        kind = self.kind()
        self.expect(":")
        if kind == "polygon":
            return PolygonType(self.integer())
        if kind == "simplex":
            return SimplexType(self.integer())
        if kind == "wedge":
            r = self.integer()
            self.expect(",")
            return WedgeProductType(r, self.integer())
        self.expect("(")
        factors = [self.spec()]
        while True:
            self.skip_ws()
            if self.text.startswith(",", self.pos):
                self.pos += 1
                factors.append(self.spec())
            else:
                break
        self.expect(")")
        return ProductType(tuple(factors))


def parse_spec(text: str) -> CombinatorialType:
    """Parse a polytope spec; raises :class:`SpecParseError` or ``InputError``."""
    parser = _Parser(text)
    result = parser.spec()
    parser.skip_ws()
    if parser.pos != len(text):
        raise parser.error("trailing characters")
    return result


def render(P: CombinatorialType) -> str:
    return P.spec()
