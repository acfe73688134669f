"""Normal forms, reduced obstruction sets, and diamond-lemma verification.

One Aho–Corasick automaton per obstruction set does all factor-avoidance
work: normality queries and the normal-word counting DP share the machine.
Verification is by checking that the S-element of every overlap ambiguity
reduces to zero; no completion is ever attempted.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import GroebnerVerificationError, InputError
from .freealg import Alphabet, MonomialOrder, Poly, Word, leading_data
from .render import poly_str, word_str


def contains_factor(word: Word, factor: Word) -> bool:
    lf = len(factor)
    if lf == 0:
        return True
    return any(word[i : i + lf] == factor for i in range(len(word) - lf + 1))


def find_factor(word: Word, factor: Word) -> int:
    """Leftmost occurrence position, or -1."""
    lf = len(factor)
    for i in range(len(word) - lf + 1):
        if word[i : i + lf] == factor:
            return i
    return -1


class FactorAutomaton:
    """Aho–Corasick matcher over a set of nonempty forbidden factors."""

    def __init__(self, patterns: Iterable[Word]):
        goto: list[dict[int, int]] = [{}]
        terminal = [False]
        for pat in patterns:
            if not pat:
                raise ValueError("empty pattern not allowed")
            state = 0
            for letter in pat:
                nxt = goto[state].get(letter)
                if nxt is None:
                    nxt = len(goto)
                    goto[state][letter] = nxt
                    goto.append({})
                    terminal.append(False)
                state = nxt
            terminal[state] = True
        fail = [0] * len(goto)
        queue = deque(goto[0].values())
        while queue:
            s = queue.popleft()
            terminal[s] = terminal[s] or terminal[fail[s]]
            for letter, t in goto[s].items():
                f = fail[s]
                while f and letter not in goto[f]:
                    f = fail[f]
                nxt = goto[f].get(letter, 0)
                fail[t] = nxt if nxt != t else 0
                queue.append(t)
        self._goto = goto
        self._fail = fail
        self._terminal = terminal

    def step(self, state: int, letter: int) -> int:
        goto = self._goto
        while True:
            nxt = goto[state].get(letter)
            if nxt is not None:
                return nxt
            if state == 0:
                return 0
            state = self._fail[state]

    def is_normal(self, word: Word) -> bool:
        """True iff no pattern occurs in ``word`` as a factor."""
        state = 0
        terminal = self._terminal
        for letter in word:
            state = self.step(state, letter)
            if terminal[state]:
                return False
        return True

    def count_normal(self, weights: tuple[int, ...], up_to: int) -> list[int]:
        """Number of pattern-avoiding words per weighted degree 0..up_to."""
        n_states = len(self._goto)
        table = [[0] * n_states for _ in range(up_to + 1)]
        table[0][0] = 1
        terminal = self._terminal
        letters = list(enumerate(weights))
        counts = []
        for d in range(up_to + 1):
            row = table[d]
            counts.append(sum(row))
            for state, c in enumerate(row):
                if not c:
                    continue
                for a, w in letters:
                    nd = d + w
                    if nd > up_to:
                        continue
                    t = self.step(state, a)
                    if not terminal[t]:
                        table[nd][t] += c
        return counts


class MonomialSet:
    """A reduced antichain of nonempty words (an obstruction set).

    No member divides (occurs as a factor of) another member; use
    :meth:`interreduce` to build one from an arbitrary collection.
    """

    __slots__ = ("words", "_automaton")

    def __init__(self, words: Iterable[Word]):
        ws = sorted({tuple(w) for w in words}, key=lambda w: (len(w), w))
        if any(not w for w in ws):
            raise InputError("obstruction sets must not contain the identity word")
        for u in ws:
            for v in ws:
                if u != v and contains_factor(v, u):
                    raise InputError(
                        f"not an antichain: word {u} divides word {v}; interreduce first"
                    )
        self.words = tuple(ws)
        self._automaton: FactorAutomaton | None = None

    @classmethod
    def interreduce(cls, words: Iterable[Word]) -> "MonomialSet":
        """Drop every word that has a different input word as a factor."""
        ws = {tuple(w) for w in words}
        keep = [u for u in ws if not any(v != u and contains_factor(u, v) for v in ws)]
        return cls(keep)

    @property
    def automaton(self) -> FactorAutomaton:
        if self._automaton is None:
            self._automaton = FactorAutomaton(self.words)
        return self._automaton

    @property
    def ell(self) -> int:
        """Maximal member length (0 for the empty set)."""
        return max((len(w) for w in self.words), default=0)

    def is_normal(self, word: Word) -> bool:
        if not self.words:
            return True
        return self.automaton.is_normal(word)

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return len(self.words)

    def __contains__(self, word):
        return tuple(word) in self.words

    def __eq__(self, other):
        return isinstance(other, MonomialSet) and self.words == other.words

    __hash__ = None

    def __repr__(self):
        return f"MonomialSet({list(self.words)!r})"


def interreduce_monomials(words: Iterable[Word]) -> MonomialSet:
    return MonomialSet.interreduce(words)


def is_normal(word: Word, omega: MonomialSet) -> bool:
    return omega.is_normal(word)


def count_normal_words(omega: MonomialSet, alphabet: Alphabet, up_to: int) -> list[int]:
    """Dimensions of the monomial algebra per weighted degree 0..up_to."""
    if up_to < 0:
        raise ValueError("up_to must be nonnegative")
    if not omega.words:
        return _count_all_words(alphabet, up_to)
    return omega.automaton.count_normal(alphabet.weights, up_to)


def _count_all_words(alphabet: Alphabet, up_to: int) -> list[int]:
    counts = [0] * (up_to + 1)
    counts[0] = 1
    for d in range(1, up_to + 1):
        counts[d] = sum(counts[d - w] for w in alphabet.weights if d - w >= 0)
    return counts


class GroebnerBasis:
    """Monic, LM-reduced relation list plus the graded order selecting the LMs.

    ``verified`` starts false and is set by :func:`verify_groebner`; operations
    whose meaning depends on the Groebner property call :func:`ensure_verified`.
    """

    __slots__ = ("elements", "order", "leading_words", "verified",
                 "_lm_automaton", "_reduction_order")

    def __init__(self, relations: Iterable[Poly], order: MonomialOrder):
        elements: list[Poly] = []
        leading: list[Word] = []
        for k, f in enumerate(relations):
            if not isinstance(f, Poly):
                raise InputError(f"relation {k + 1} is not a polynomial")
            if f.is_zero:
                raise InputError(f"relation {k + 1} is zero")
            lw, lc = leading_data(f, order)
            if lc != 1:
                f = (Fraction(1) / lc) * f
            elements.append(f)
            leading.append(lw)
        alphabet = order.alphabet
        for a in range(len(leading)):
            for b in range(len(leading)):
                if a != b and contains_factor(leading[b], leading[a]):
                    raise InputError(
                        "relations are not LM-reduced: leading word "
                        f"{word_str(leading[a], alphabet)} of relation {a + 1} divides "
                        f"leading word {word_str(leading[b], alphabet)} of relation {b + 1}"
                    )
        self.elements = tuple(elements)
        self.order = order
        self.leading_words = tuple(leading)
        self.verified = False
        self._lm_automaton = FactorAutomaton(leading) if leading else None
        # reduction strategy: longest leading word first, then lowest index
        self._reduction_order = sorted(
            range(len(leading)), key=lambda i: (-len(leading[i]), i)
        )

    def __len__(self):
        return len(self.elements)

    def reducible(self, word: Word) -> bool:
        if self._lm_automaton is None:
            return False
        return not self._lm_automaton.is_normal(word)

    def find_reduction(self, word: Word) -> tuple[int, int] | None:
        """(relation index, position) per the strategy; None when normal."""
        for idx in self._reduction_order:
            pos = find_factor(word, self.leading_words[idx])
            if pos >= 0:
                return idx, pos
        return None


def normal_form(f: Poly, basis: GroebnerBasis) -> Poly:
    """Rewrite ``f`` until no term contains a leading word.

    Deterministic strategy: always rewrite the largest reducible term in the
    monomial order, at the leftmost occurrence, using the relation with the
    longest leading word (ties go to the lowest relation index).
    """
    work = dict(f.terms)
    key = basis.order.sort_key
    while True:
        target = None
        tkey = None
        for w in work:
            if basis.reducible(w):
                k = key(w)
                if tkey is None or k > tkey:
                    target, tkey = w, k
        if target is None:
            return Poly(work)
        coeff = work[target]
        idx, pos = basis.find_reduction(target)
        g = basis.elements[idx]
        left = target[:pos]
        right = target[pos + len(basis.leading_words[idx]):]
        # work -= coeff * left * g * right  (g is monic: the target cancels)
        for u, c in g.terms.items():
            word = left + u + right
            nc = work.get(word, 0) - coeff * c
            if nc:
                work[word] = nc
            else:
                work.pop(word, None)


@dataclass(frozen=True)
class OverlapAmbiguity:
    """A proper suffix of one leading word equals a proper prefix of another.

    ``word`` is the superposition: LM(left) and LM(right) overlap in it by
    ``overlap`` letters, at positions 0 and ``len(LM(left)) - overlap``.
    """

    left_index: int
    right_index: int
    overlap: int
    word: Word


def overlap_ambiguities(basis: GroebnerBasis) -> list[OverlapAmbiguity]:
    """All overlap ambiguities, in deterministic (i, j, overlap) order.

    Inclusion ambiguities cannot occur for an LM-reduced basis.
    """
    out: list[OverlapAmbiguity] = []
    lws = basis.leading_words
    for i, u in enumerate(lws):
        for j, v in enumerate(lws):
            for o in range(1, min(len(u), len(v))):
                if u[len(u) - o :] == v[:o]:
                    out.append(OverlapAmbiguity(i, j, o, u + v[o:]))
    return out


def s_element(basis: GroebnerBasis, amb: OverlapAmbiguity) -> Poly:
    """Difference of the two one-step rewrites of the superposition word."""
    u = basis.leading_words[amb.left_index]
    v = basis.leading_words[amb.right_index]
    prefix = u[: len(u) - amb.overlap]
    suffix = v[amb.overlap :]
    g_left = basis.elements[amb.left_index]
    g_right = basis.elements[amb.right_index]
    return Poly.monomial(prefix) * g_right - g_left * Poly.monomial(suffix)


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    checked: int
    ambiguity: OverlapAmbiguity | None = None
    remainder: Poly | None = None


def verify_groebner(basis: GroebnerBasis) -> VerificationResult:
    """Diamond-lemma check: every S-element must reduce to zero.

    On success the basis is flagged verified; on failure the result carries
    the first failing ambiguity (fixed enumeration order) and its remainder.
    """
    ambiguities = overlap_ambiguities(basis)
    for amb in ambiguities:
        remainder = normal_form(s_element(basis, amb), basis)
        if not remainder.is_zero:
            return VerificationResult(False, len(ambiguities), amb, remainder)
    basis.verified = True
    return VerificationResult(True, len(ambiguities))


def ensure_verified(basis: GroebnerBasis) -> None:
    """Verify on first use; raise with a printable witness on failure."""
    if basis.verified:
        return
    result = verify_groebner(basis)
    if not result.ok:
        amb = result.ambiguity
        alphabet = basis.order.alphabet
        raise GroebnerVerificationError(
            "not a Groebner basis: the S-element of the overlap of relations "
            f"{amb.left_index + 1} and {amb.right_index + 1} on "
            f"{word_str(amb.word, alphabet)} reduces to "
            f"{poly_str(result.remainder, basis.order)}, not zero",
            ambiguity=amb,
            remainder=result.remainder,
        )
