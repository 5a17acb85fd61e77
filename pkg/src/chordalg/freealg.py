"""Graded noncommutative polynomials over Z/2 in named generators.

A polynomial is a finite set of words (a word is a tuple of generator
indices); addition is symmetric difference, so coefficients never need to be
stored.  Words are ordered degree-lexicographically with generator precedence
given by declaration order, and that single order is used everywhere:
canonical printing, leading terms, and the rewriting machinery built on top.

Gradings live in Z when the modulus is 0 and in Z/modulus otherwise.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

Word = Tuple[int, ...]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


class AlgebraError(ValueError):
    pass


class Algebra:
    """Symbol table of an algebra: generator names, gradings, optional actions.

    ``modulus`` is the grading modulus (2*rho); 0 means Z-graded and 1 means
    trivially graded (used for fixtures whose gradings are unknown).
    """

    __slots__ = ("names", "gradings", "actions", "modulus", "_index")

    def __init__(
        self,
        generators: Sequence[Tuple[str, int] | Tuple[str, int, Optional[Fraction]]],
        modulus: int = 0,
    ):
        if modulus < 0:
            raise AlgebraError("grading modulus must be non-negative")
        names = []
        gradings = []
        actions = []
        for spec in generators:
            name, grading = spec[0], spec[1]
            action = spec[2] if len(spec) > 2 else None
            if not _IDENT.fullmatch(name) or name in ("0", "1"):
                raise AlgebraError(f"bad generator name {name!r}")
            if action is not None:
                action = Fraction(action)
                if action <= 0:
                    raise AlgebraError(f"action of {name} must be positive")
            names.append(name)
            gradings.append(int(grading))
            actions.append(action)
        if len(set(names)) != len(names):
            raise AlgebraError("generator names must be unique")
        self.names = tuple(names)
        self.gradings = tuple(gradings)
        self.actions = tuple(actions)
        self.modulus = modulus
        self._index = {n: i for i, n in enumerate(names)}

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.names == other.names
            and self.gradings == other.gradings
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.names, self.gradings, self.modulus))

    def __repr__(self):
        return f"Algebra({list(self.names)}, modulus={self.modulus})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlgebraError(f"unknown generator {name!r}") from None

    def reduce_grading(self, g: int) -> int:
        return g % self.modulus if self.modulus else g

    def grading_of(self, name: str) -> int:
        return self.reduce_grading(self.gradings[self.index(name)])

    def word_grading(self, word: Word) -> int:
        return self.reduce_grading(sum(self.gradings[i] for i in word))

    # -- construction --------------------------------------------------------

    def zero(self) -> "Poly":
        return Poly(self, frozenset())

    def one(self) -> "Poly":
        return Poly(self, frozenset({()}))

    def gen(self, name: str) -> "Poly":
        return Poly(self, frozenset({(self.index(name),)}))

    def word(self, letters: Sequence[str]) -> "Poly":
        return Poly(self, frozenset({tuple(self.index(n) for n in letters)}))

    def poly(self, words: Iterable[Sequence[str]]) -> "Poly":
        acc = self.zero()
        for w in words:
            acc = acc + self.word(w)
        return acc

    def parse(self, text: str) -> "Poly":
        return _parse_poly(self, text)

    def word_str(self, word: Word) -> str:
        if not word:
            return "1"
        return "*".join(self.names[i] for i in word)


def deglex_key(word: Word) -> Tuple[int, Word]:
    return (len(word), word)


class Poly:
    """Element of the free Z/2-algebra: a frozenset of words."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: Algebra, terms: frozenset):
        self.algebra = algebra
        self.terms = terms

    # -- ring structure ------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.algebra != other.algebra:
            raise AlgebraError("polynomials live over different algebras")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly(self.algebra, self.terms ^ other.terms)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        acc: set = set()
        for u in self.terms:
            for v in other.terms:
                acc ^= {u + v}
        return Poly(self.algebra, frozenset(acc))

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.algebra == other.algebra
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.algebra, self.terms))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == frozenset({()})

    # -- structure queries ---------------------------------------------------

    def degree(self) -> int:
        """Length of the longest word; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(len(w) for w in self.terms)

    def lead(self) -> Word:
        """Deglex-largest word; raises on zero."""
        if not self.terms:
            raise AlgebraError("zero polynomial has no leading word")
        return max(self.terms, key=deglex_key)

    def support(self) -> frozenset:
        """Indices of generators occurring in some term."""
        return frozenset(i for w in self.terms for i in w)

    def homogeneous_degree(self) -> Optional[int]:
        """Common grading of all terms (mod modulus), or None if mixed.

        The zero polynomial is homogeneous of every degree; we return 0.
        """
        if not self.terms:
            return 0
        grades = {self.algebra.word_grading(w) for w in self.terms}
        if len(grades) == 1:
            return grades.pop()
        return None

    def length_part(self, length: int) -> "Poly":
        return Poly(
            self.algebra, frozenset(w for w in self.terms if len(w) == length)
        )

    def substitute(self, images: Mapping[str, "Poly"]) -> "Poly":
        """Unital algebra-map evaluation; every generator occurring needs an image."""
        target: Optional[Algebra] = None
        table: Dict[int, Poly] = {}
        for name, img in images.items():
            table[self.algebra.index(name)] = img
            if target is None:
                target = img.algebra
            elif target != img.algebra:
                raise AlgebraError("substitution images disagree on target algebra")
        if target is None:
            target = self.algebra
        acc: set = set()
        for word in self.terms:
            prod = Poly(target, frozenset({()}))
            for i in word:
                if i not in table:
                    raise AlgebraError(
                        f"no image for generator {self.algebra.names[i]!r}"
                    )
                prod = prod * table[i]
            acc ^= prod.terms
        return Poly(target, frozenset(acc))

    # -- printing ------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        words = sorted(self.terms, key=deglex_key)
        return " + ".join(self.algebra.word_str(w) for w in words)

    def __repr__(self):
        return f"Poly({self})"


# -- parser -------------------------------------------------------------------
#
# Grammar:  expr  := term ('+' term)*
#           term  := factor ('*'? factor)*
#           factor:= IDENT | '0' | '1' | '(' expr ')'
# Juxtaposed generator names without '*' are accepted: an identifier that is
# not itself a declared generator is greedily factored into declared names.


class _Tokens:
    def __init__(self, text: str):
        self.toks = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch in "+*()":
                self.toks.append(ch)
                i += 1
                continue
            if ch in "01" and not (
                _IDENT.match(text, i) and text[i].isalpha()
            ):
                self.toks.append(ch)
                i += 1
                continue
            m = _IDENT.match(text, i)
            if not m:
                raise AlgebraError(f"cannot tokenize {text[i:]!r}")
            self.toks.append(m.group(0))
            i = m.end()
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok


def _split_ident(alg: Algebra, ident: str):
    """Factor a juxtaposed identifier into declared generator names."""
    if ident in alg._index:
        return [ident]
    n = len(ident)
    # DP over split points, preferring longer leading names.
    best: Dict[int, Optional[list]] = {n: []}

    def solve(pos: int):
        if pos in best:
            return best[pos]
        for end in range(n, pos, -1):
            piece = ident[pos:end]
            if piece in alg._index:
                rest = solve(end)
                if rest is not None:
                    best[pos] = [piece] + rest
                    return best[pos]
        best[pos] = None
        return None

    parts = solve(0)
    if parts is None:
        raise AlgebraError(f"unknown generator {ident!r}")
    return parts


def _parse_poly(alg: Algebra, text: str) -> Poly:
    toks = _Tokens(text)
    poly = _parse_expr(alg, toks)
    if toks.peek() is not None:
        raise AlgebraError(f"trailing input at {toks.peek()!r}")
    return poly


def _parse_expr(alg: Algebra, toks: _Tokens) -> Poly:
    acc = _parse_term(alg, toks)
    while toks.peek() == "+":
        toks.next()
        acc = acc + _parse_term(alg, toks)
    return acc


def _parse_term(alg: Algebra, toks: _Tokens) -> Poly:
    acc = _parse_factor(alg, toks)
    while True:
        tok = toks.peek()
        if tok == "*":
            toks.next()
            acc = acc * _parse_factor(alg, toks)
        elif tok is not None and (tok == "(" or tok not in "+)*"):
            acc = acc * _parse_factor(alg, toks)
        else:
            return acc


def _parse_factor(alg: Algebra, toks: _Tokens) -> Poly:
    tok = toks.next()
    if tok is None:
        raise AlgebraError("unexpected end of input")
    if tok == "(":
        inner = _parse_expr(alg, toks)
        if toks.next() != ")":
            raise AlgebraError("missing closing parenthesis")
        return inner
    if tok == "0":
        return alg.zero()
    if tok == "1":
        return alg.one()
    if tok in "+*)":
        raise AlgebraError(f"unexpected token {tok!r}")
    return alg.word(_split_ident(alg, tok))
