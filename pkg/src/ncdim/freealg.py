"""Words, graded monomial orders, and exact-coefficient noncommutative polynomials.

Letters are indices into an :class:`Alphabet`; a word is a plain tuple of
indices, with the empty tuple as the identity monomial.  Coefficients are
``fractions.Fraction`` throughout — floating point never enters.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from .errors import InputError, ParseError

# A word is a tuple of letter indices.
Word = tuple

GRLEX = "grlex"
GREVLEX = "grevlex"
ORDER_KINDS = (GRLEX, GREVLEX)


@dataclass(frozen=True)
class Alphabet:
    """Declared variable names together with their positive integer weights."""

    names: tuple[str, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "weights", tuple(self.weights))
        if not self.names:
            raise InputError("alphabet must declare at least one variable")
        if len(self.weights) != len(self.names):
            raise InputError("need exactly one weight per variable")
        if any(not name for name in self.names):
            raise InputError("variable names must be nonempty")
        if len(set(self.names)) != len(self.names):
            raise InputError("variable names must be distinct")
        for name, w in zip(self.names, self.weights):
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise InputError(f"variable {name!r} needs a positive integer weight, got {w!r}")

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"unknown variable {name!r}") from None

    def degree(self, word: Word) -> int:
        """Weighted degree of a word; the identity has degree 0."""
        weights = self.weights
        return sum(weights[i] for i in word)


def weighted_degree(word: Word, alphabet: Alphabet) -> int:
    return alphabet.degree(word)


@dataclass(frozen=True)
class MonomialOrder:
    """Weighted-degree-first word order; ties broken (reverse) lexicographically.

    ``precedence`` lists letter indices ascending (first entry is the smallest
    letter) and defaults to declaration order.  Both kinds compare total
    weighted degree first, which makes them multiplicative well-orders: with
    positive weights no word of equal degree is a proper prefix (or suffix) of
    another, so the tie-break always finds a differing position.
    """

    alphabet: Alphabet
    kind: str = GRLEX
    precedence: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise InputError(f"unknown order kind {self.kind!r}; expected one of {ORDER_KINDS}")
        prec = self.precedence
        prec = tuple(range(self.alphabet.n)) if prec is None else tuple(prec)
        if sorted(prec) != list(range(self.alphabet.n)):
            raise InputError("order precedence must be a permutation of the variables")
        object.__setattr__(self, "precedence", prec)

    @cached_property
    def _rank(self) -> tuple[int, ...]:
        rank = [0] * self.alphabet.n
        for pos, letter in enumerate(self.precedence):
            rank[letter] = pos
        return tuple(rank)

    def sort_key(self, word: Word):
        """Total-order key: ascending in the monomial order."""
        rank = self._rank
        if self.kind == GRLEX:
            tie = tuple(rank[i] for i in word)
        else:
            # grevlex: the rightmost difference decides, larger letter wins;
            # on sorted words this restricts to commutative grevlex
            tie = tuple(rank[i] for i in reversed(word))
        return (self.alphabet.degree(word), tie)

    def compare(self, u: Word, v: Word) -> int:
        ku, kv = self.sort_key(u), self.sort_key(v)
        return (ku > kv) - (ku < kv)


class Poly:
    """Noncommutative polynomial: a finite map from words to nonzero rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, Fraction | int] | None = None):
        clean: dict[Word, Fraction] = {}
        if terms:
            for word, coeff in terms.items():
                c = Fraction(coeff)
                if c:
                    clean[tuple(word)] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def monomial(cls, word: Iterable[int], coeff=1) -> "Poly":
        return cls({tuple(word): Fraction(coeff)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    __hash__ = None

    def __neg__(self) -> "Poly":
        return Poly({w: -c for w, c in self.terms.items()})

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        acc = dict(self.terms)
        for w, c in other.terms.items():
            nc = acc.get(w, 0) + c
            if nc:
                acc[w] = nc
            else:
                acc.pop(w, None)
        return Poly(acc)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            acc: dict[Word, Fraction] = {}
            for u, a in self.terms.items():
                for v, b in other.terms.items():
                    w = u + v
                    nc = acc.get(w, 0) + a * b
                    if nc:
                        acc[w] = nc
                    else:
                        acc.pop(w, None)
            return Poly(acc)
        if isinstance(other, (int, Fraction)):
            return Poly({w: c * other for w, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly({w: other * c for w, c in self.terms.items()})
        return NotImplemented

    def __repr__(self) -> str:
        items = sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
        return f"Poly({dict(items)!r})"


def leading_data(f: Poly, order: MonomialOrder) -> tuple[Word, Fraction]:
    """Leading word and coefficient of ``f`` under ``order``."""
    if f.is_zero:
        raise ValueError("the zero polynomial has no leading term")
    word = max(f.terms, key=order.sort_key)
    return word, f.terms[word]


def leading_word(f: Poly, order: MonomialOrder) -> Word:
    return leading_data(f, order)[0]


def leading_homogeneous(f: Poly, alphabet: Alphabet) -> Poly:
    """The homogeneous part of highest weighted degree."""
    if f.is_zero:
        raise ValueError("the zero polynomial has no leading homogeneous part")
    top = max(alphabet.degree(w) for w in f.terms)
    return Poly({w: c for w, c in f.terms.items() if alphabet.degree(w) == top})


def homogeneous_components(f: Poly, alphabet: Alphabet) -> list[tuple[int, Poly]]:
    """Split into (degree, part) pairs, ascending by weighted degree."""
    parts: dict[int, dict[Word, Fraction]] = {}
    for w, c in f.terms.items():
        parts.setdefault(alphabet.degree(w), {})[w] = c
    return [(d, Poly(parts[d])) for d in sorted(parts)]


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<nat>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[+\-*/^])"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    return tokens


class _PolyParser:
    """Recursive-descent parser for  poly := [sign] term (('+'|'-') term)*
    with  term := [coeff '*'] factor ('*' factor)* | coeff,
          coeff := nat ['/' nat],  factor := name ['^' nat]."""

    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.index = {name: i for i, name in enumerate(alphabet.names)}

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _accept_op(self, op: str) -> bool:
        tok = self._peek()
        if tok and tok[0] == "op" and tok[1] == op:
            self.pos += 1
            return True
        return False

    def _expect(self, kind: str, message: str):
        tok = self._peek()
        if tok is None:
            raise ParseError(message, len(self.text))
        if tok[0] != kind:
            raise ParseError(message, tok[2])
        self.pos += 1
        return tok

    def _coeff(self) -> Fraction:
        num = self._expect("nat", "expected a coefficient")
        if self._accept_op("/"):
            den = self._expect("nat", "expected a denominator")
            if int(den[1]) == 0:
                raise ParseError("zero denominator in coefficient", den[2])
            return Fraction(int(num[1]), int(den[1]))
        return Fraction(int(num[1]))

    def _factor(self) -> Word:
        tok = self._expect("name", "expected a variable name")
        letter = self.index.get(tok[1])
        if letter is None:
            raise ParseError(f"unknown variable {tok[1]!r}", tok[2])
        if self._accept_op("^"):
            exp = self._expect("nat", "expected an exponent")
            return (letter,) * int(exp[1])
        return (letter,)

    def _term(self) -> tuple[Fraction, Word]:
        tok = self._peek()
        if tok is None:
            raise ParseError("expected a term", len(self.text))
        coeff = Fraction(1)
        if tok[0] == "nat":
            coeff = self._coeff()
            if not self._accept_op("*"):
                return coeff, ()
        word: list[int] = []
        word.extend(self._factor())
        while self._accept_op("*"):
            word.extend(self._factor())
        return coeff, tuple(word)

    def parse(self) -> Poly:
        acc: dict[Word, Fraction] = {}
        sign = 1
        if self._accept_op("-"):
            sign = -1
        else:
            self._accept_op("+")
        while True:
            coeff, word = self._term()
            nc = acc.get(word, 0) + sign * coeff
            if nc:
                acc[word] = nc
            else:
                acc.pop(word, None)
            tok = self._peek()
            if tok is None:
                break
            if tok[0] == "op" and tok[1] in "+-":
                sign = 1 if tok[1] == "+" else -1
                self.pos += 1
            else:
                raise ParseError("expected '+' or '-' between terms", tok[2])
        return Poly(acc)


def parse_polynomial(text: str, alphabet: Alphabet) -> Poly:
    """Parse an expression like ``"x2*x1 - 2*x1*x2 - x1^2"`` over ``alphabet``."""
    return _PolyParser(text, alphabet).parse()
