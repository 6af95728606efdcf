"""Words in the braid generators and their evaluation in a representation.

Surface syntax uses s1, s2 for the two elementary braids so they cannot be
confused with eigenvalue names.  Three reserved macros come with the
algebra: a = s1 s2, b = s1 s2 s1 and c = (s1 s2)^3, the central element.
Macros stay symbolic in the parsed word and expand only at evaluation.

Grammar:

    word    := term {term}
    term    := atom ['^' integer]
    atom    := 's1' | 's2' | 'a' | 'b' | 'c' | '(' word ')'
    integer := ['-'] digits        (nonzero)

'^' binds tighter than juxtaposition; whitespace separates factors.
Exponentiated groups are expanded at parse time, so the AST is a flat
factor list.  The empty string parses to the empty word (identity).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .linalg import Matrix

__all__ = [
    "GENERATORS",
    "BraidWord",
    "WordSyntaxError",
    "parse",
    "format_word",
    "free_reduce",
    "evaluate",
]

GENERATORS = ("s1", "s2", "a", "b", "c")


class WordSyntaxError(ValueError):
    """Malformed braid word; carries the character position of the fault."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class BraidWord:
    """Flat product of generator powers.

    Zero exponents are tolerated (free_reduce drops them) so that words can
    be assembled programmatically before cleanup.
    """

    factors: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for gen, exp in self.factors:
            if gen not in GENERATORS:
                raise ValueError(f"unknown generator {gen!r}")
            if not isinstance(exp, int):
                raise ValueError(f"exponent {exp!r} is not an integer")

    def __str__(self) -> str:
        return format_word(self)


_TOKEN = re.compile(r"\s*(s1|s2|a|b|c|\(|\)|\^|-?\d+)")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise WordSyntaxError(f"unexpected character {text[at]!r}", at)
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


def _invert(factors: list[tuple[str, int]]) -> list[tuple[str, int]]:
    return [(g, -e) for g, e in reversed(factors)]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self):
        return self.tokens[self.i][1] if self.i < len(self.tokens) else len(self.text)

    def word(self, inside_group: bool) -> list[tuple[str, int]]:
        factors: list[tuple[str, int]] = []
        while True:
            tok = self.peek()
            if tok is None or tok == ")":
                if not inside_group and tok == ")":
                    raise WordSyntaxError("unmatched ')'", self.pos())
                return factors
            factors.extend(self.term())

    def term(self) -> list[tuple[str, int]]:
        tok, at = self.tokens[self.i]
        if tok in GENERATORS:
            self.i += 1
            base: list[tuple[str, int]] = [(tok, 1)]
        elif tok == "(":
            self.i += 1
            base = self.word(inside_group=True)
            if self.peek() != ")":
                raise WordSyntaxError("missing ')'", self.pos())
            self.i += 1
        else:
            raise WordSyntaxError(f"expected a generator or '(', got {tok!r}", at)
        if self.peek() != "^":
            return base
        self.i += 1
        tok = self.peek()
        if tok is None or not re.fullmatch(r"-?\d+", tok):
            raise WordSyntaxError("expected an integer exponent after '^'", self.pos())
        exp = int(tok)
        if exp == 0:
            raise WordSyntaxError("exponent must be nonzero", self.pos())
        self.i += 1
        if len(base) == 1:
            gen, e = base[0]
            return [(gen, e * exp)]
        if exp < 0:
            base = _invert(base)
            exp = -exp
        return base * exp


def parse(text: str) -> BraidWord:
    """Parse surface syntax into a word; raises WordSyntaxError with position."""
    parser = _Parser(text)
    factors = parser.word(inside_group=False)
    return BraidWord(tuple(factors))


def format_word(w: BraidWord) -> str:
    """Inverse of parse up to whitespace; the empty word prints as ''."""
    return " ".join(g if e == 1 else f"{g}^{e}" for g, e in w.factors)


def free_reduce(w: BraidWord) -> BraidWord:
    """Merge adjacent equal generators and drop zero exponents, to a fixpoint."""
    factors = list(w.factors)
    changed = True
    while changed:
        changed = False
        out: list[tuple[str, int]] = []
        for gen, exp in factors:
            if exp == 0:
                changed = True
                continue
            if out and out[-1][0] == gen:
                out[-1] = (gen, out[-1][1] + exp)
                changed = True
            else:
                out.append((gen, exp))
        factors = out
    return BraidWord(tuple(factors))


def evaluate(w: BraidWord, rep) -> Matrix:
    """Exact product of the factor matrices inside ``rep``.

    Inverses exist because det g_i = prod x_i^{m_i} is nonzero for every
    valid representation.
    """
    g1, g2 = rep.g1, rep.g2
    base: dict[str, Matrix] = {"s1": g1, "s2": g2}
    result = Matrix.identity(rep.context, rep.dim)
    for gen, exp in w.factors:
        if gen not in base:
            a = g1 @ g2
            if gen == "a":
                base[gen] = a
            elif gen == "b":
                base[gen] = a @ g1
            else:
                base[gen] = a @ a @ a
        if exp != 0:
            result = result @ base[gen].power(exp)
    return result
