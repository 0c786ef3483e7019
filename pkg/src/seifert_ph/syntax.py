"""Text syntax for Seifert invariants.

::

    sfs    := "SFS(" genus ";" bterm ";" fibers? ")"
    genus  := "g=" "n"? nat
    bterm  := "b=" int
    fibers := pair ("," pair)*
    pair   := "(" nat "," int ")"

Whitespace is ignored.  ``g=n2`` is the non-orientable surface with two
cross-caps.  A ``(1, k)`` pair is folded into ``b``.
"""

from __future__ import annotations

from .errors import InvalidInvariant, InvalidOrbifold, SfsSemanticError, SfsSyntaxError
from .invariants import SeifertInvariant


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, literal: str) -> bool:
        self.skip()
        return self.text.startswith(literal, self.pos)

    def expect(self, literal: str):
        # literals are matched character by character so "SFS (" also parses
        for ch in literal:
            self.skip()
            if self.pos >= len(self.text) or self.text[self.pos] != ch:
                found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
                raise SfsSyntaxError(f"expected {ch!r}, found {found!r}", self.pos)
            self.pos += 1

    def integer(self, signed: bool) -> int:
        self.skip()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise SfsSyntaxError("expected an integer", start)
        return int(self.text[start:self.pos])

    def end(self):
        self.skip()
        if self.pos != len(self.text):
            raise SfsSyntaxError("trailing input", self.pos)


def parse_sfs(text: str) -> SeifertInvariant:
    s = _Scanner(text)
    s.expect("SFS(")
    s.expect("g=")
    orientable = True
    if s.peek("n"):
        s.expect("n")
        orientable = False
    genus = s.integer(signed=False)
    s.expect(";")
    s.expect("b=")
    b = s.integer(signed=True)
    s.expect(";")

    fibers = []
    if not s.peek(")"):
        while True:
            s.expect("(")
            at = s.pos
            a = s.integer(signed=False)
            s.expect(",")
            beta = s.integer(signed=True)
            s.expect(")")
            if a < 1:
                raise SfsSemanticError(f"fiber order must be >= 1, got {a} (position {at})")
            if a == 1:
                b += beta
            else:
                fibers.append((a, beta))
            if not s.peek(","):
                break
            s.expect(",")
    s.expect(")")
    s.end()

    try:
        return SeifertInvariant.over(genus, b, fibers, orientable=orientable)
    except (InvalidInvariant, InvalidOrbifold) as exc:
        raise SfsSemanticError(str(exc)) from exc


def render_sfs(m: SeifertInvariant) -> str:
    genus = f"{'' if m.base.orientable else 'n'}{m.base.genus}"
    fibers = ",".join(f"({a},{beta})" for a, beta in m.fibers)
    tail = f" {fibers})" if fibers else ")"
    return f"SFS(g={genus}; b={m.b};{tail}"
