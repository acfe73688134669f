"""Rees algebra of the degree filtration: homogenization and invariants.

Each relation f of weighted leading degree p is homogenized to
f~ = sum_i lambda_i T^{p - q_i} w_i  (central homogenizer T of weight 1 on
the left), and the commutators X_i T - T X_i are adjoined.  The extended
order compares T-stripped words by the base order before looking at T at
all, so homogenizing never moves the leading word: the leading words are
exactly LM(G) u {X_i T}, the homogenized set is again a Groebner basis, and
the chain sets decompose level by level as C~_i = C_i u C_{i-1}T — all
three facts are re-verified at runtime and a violation raises
CrossCheckError.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import (
    DEFAULT_MAX_LEVEL,
    ChainGraph,
    ChainSets,
    HilbertSeries,
    build_chain_graph,
    chain_sets,
    hilbert_series,
)
from .errors import CrossCheckError
from .freealg import Alphabet, MonomialOrder, Poly, Word, leading_data
from .growth import GrowthClass, build_ufnarovski, classify_growth
from .render import word_str
from .rewrite import GroebnerBasis, MonomialSet, ensure_verified, verify_groebner


@dataclass(frozen=True)
class ExtendedAlphabet:
    """Base alphabet plus the homogenizer T (weight 1, smallest letter)."""

    base: Alphabet
    alphabet: Alphabet
    t_index: int

    @property
    def t_word(self) -> Word:
        return (self.t_index,)


def extend_alphabet(base: Alphabet) -> ExtendedAlphabet:
    t_name = "T"
    while t_name in base.names:
        t_name += "_"
    ext = Alphabet(base.names + (t_name,), base.weights + (1,))
    return ExtendedAlphabet(base, ext, base.n)


@dataclass(frozen=True)
class HomogenizationOrder:
    """Graded order on the extended alphabet keyed on the T-stripped word.

    Words are compared by total weighted degree, then by the base order on
    the words with all T's deleted, and finally by T placement (an earlier T
    is smaller).  Equal-degree words with equal T-stripped parts have the
    same length, so the last tie-break is total.  This is multiplicative,
    restricts to the base order on T-free words, puts T below every base
    letter, and — unlike reusing the base kind on the extended alphabet —
    guarantees for any base kind that homogenizing preserves leading words
    and that X_i*T - T*X_i has leading word X_i*T.
    """

    base: MonomialOrder
    ext: ExtendedAlphabet

    @property
    def alphabet(self) -> Alphabet:
        return self.ext.alphabet

    @property
    def kind(self) -> str:
        return self.base.kind

    def sort_key(self, word: Word):
        t = self.ext.t_index
        stripped = tuple(i for i in word if i != t)
        placement = tuple(0 if i == t else 1 for i in word)
        return (
            self.alphabet.degree(word),
            self.base.sort_key(stripped),
            placement,
        )

    def compare(self, u: Word, v: Word) -> int:
        ku, kv = self.sort_key(u), self.sort_key(v)
        return (ku > kv) - (ku < kv)


def extend_order(order: MonomialOrder, ext: ExtendedAlphabet) -> HomogenizationOrder:
    return HomogenizationOrder(order, ext)


def homogenize(f: Poly, order: MonomialOrder, ext: ExtendedAlphabet) -> Poly:
    """Left-pad every term with T up to the leading weighted degree."""
    alphabet = order.alphabet
    lw, _ = leading_data(f, order)
    p = alphabet.degree(lw)
    terms = {}
    t = ext.t_index
    for w, c in f.terms.items():
        q = alphabet.degree(w)
        if q > p:
            raise ValueError("term exceeds the leading degree; order is not graded")
        terms[(t,) * (p - q) + w] = c
    return Poly(terms)


def dehomogenize(f: Poly, ext: ExtendedAlphabet) -> Poly:
    """Substitute T = 1: drop every T letter and collect."""
    t = ext.t_index
    acc: dict[Word, object] = {}
    for w, c in f.terms.items():
        base_word = tuple(i for i in w if i != t)
        nc = acc.get(base_word, 0) + c
        if nc:
            acc[base_word] = nc
        else:
            acc.pop(base_word, None)
    return Poly(acc)


@dataclass(frozen=True)
class ReesPresentation:
    """Verified presentation of the Rees algebra on the extended alphabet."""

    ext: ExtendedAlphabet
    basis: GroebnerBasis
    source: GroebnerBasis
    warnings: tuple[str, ...]


def tilde_basis(basis: GroebnerBasis) -> ReesPresentation:
    """Homogenized basis plus commutators, re-verified on the extended alphabet."""
    ensure_verified(basis)
    ext = extend_alphabet(basis.order.alphabet)
    ext_order = extend_order(basis.order, ext)
    t = ext.t_index
    elements = [homogenize(g, basis.order, ext) for g in basis.elements]
    warnings: list[str] = []
    dead = {w[0] for w in basis.leading_words if len(w) == 1}
    if dead:
        names = ", ".join(basis.order.alphabet.names[i] for i in sorted(dead))
        warnings.append(
            f"letters {names} are leading words; their T-commutators are "
            "omitted (they lie in the ideal already)"
        )
    live = [i for i in range(basis.order.alphabet.n) if i not in dead]
    for i in live:
        elements.append(Poly({(i, t): 1, (t, i): -1}))
    tilded = GroebnerBasis(elements, ext_order)
    expected = set(basis.leading_words) | {(i, t) for i in live}
    if set(tilded.leading_words) != expected:
        raise CrossCheckError(
            "homogenized leading words differ from LM(G) plus the commutators"
        )
    result = verify_groebner(tilded)
    if not result.ok:
        amb = result.ambiguity
        raise CrossCheckError(
            "homogenized basis failed verification on the overlap "
            f"{word_str(amb.word, ext.alphabet)}"
        )
    return ReesPresentation(ext, tilded, basis, tuple(warnings))


@dataclass(frozen=True)
class ReesInvariants:
    presentation: ReesPresentation
    omega: MonomialSet
    growth: GrowthClass
    gldim: int | None
    hilbert: HilbertSeries
    sets: ChainSets
    graph: ChainGraph
    warnings: tuple[str, ...]


def _check_graph_embedding(graph: ChainGraph, ext: ExtendedAlphabet) -> None:
    t_vertex = ext.t_word
    if graph.successors(t_vertex):
        raise CrossCheckError("the T vertex of the Rees chain graph has out-edges")
    for v in graph.vertices:
        if v and v != t_vertex and v[-1] != ext.t_index:
            if t_vertex not in graph.successors(v):
                raise CrossCheckError(
                    f"Rees chain vertex {word_str(v, ext.alphabet)} has no edge to T"
                )


def _check_level_decomposition(
    tilde_sets: ChainSets, base_sets: ChainSets, ext: ExtendedAlphabet
) -> None:
    t = ext.t_word

    def base_level(i: int):
        if i == -1:
            return {()}
        if i < len(base_sets.levels):
            return set(base_sets.levels[i])
        return set() if base_sets.finite else None  # unknown beyond the cap

    for i, level in enumerate(tilde_sets.levels):
        lower = base_level(i - 1)
        same = base_level(i)
        if lower is None or same is None:
            break
        expected = same | {c + t for c in lower}
        if set(level) != expected:
            raise CrossCheckError(
                f"Rees chain level {i} is not C_{i} plus C_{i - 1}*T"
            )


def _check_top_level(
    tilde_sets: ChainSets, base_sets: ChainSets, ext: ExtendedAlphabet
) -> None:
    if not (tilde_sets.finite and base_sets.finite and tilde_sets.levels):
        return
    top = tilde_sets.levels[-1]
    base_top = set(base_sets.level(len(tilde_sets.levels) - 2))
    for word in top:
        if word[-1] != ext.t_index or word[:-1] not in base_top:
            raise CrossCheckError(
                "a maximal Rees chain does not extend a maximal base chain by T"
            )


def rees_invariants(
    basis: GroebnerBasis,
    truncation: int = 16,
    max_level: int = DEFAULT_MAX_LEVEL,
) -> ReesInvariants:
    """Growth, global dimension, and Hilbert data of the Rees algebra.

    Everything is recomputed from scratch on the extended alphabet; the
    expected relations to the base invariants (degree + 1, dimension + 1,
    chain-level decomposition) are asserted as cross-checks.
    """
    presentation = tilde_basis(basis)
    ext = presentation.ext
    omega = MonomialSet.interreduce(presentation.basis.leading_words)
    growth = classify_growth(build_ufnarovski(omega, ext.alphabet))
    graph = build_chain_graph(omega, ext.alphabet)
    sets = chain_sets(graph, max_level)
    gldim = len(sets.levels) if sets.finite else None
    hilbert = hilbert_series(omega, ext.alphabet, truncation, max_level)

    base_omega = MonomialSet.interreduce(basis.leading_words)
    base_alphabet = basis.order.alphabet
    base_sets = chain_sets(build_chain_graph(base_omega, base_alphabet), max_level)

    _check_graph_embedding(graph, ext)
    _check_level_decomposition(sets, base_sets, ext)
    _check_top_level(sets, base_sets, ext)
    if base_sets.finite != sets.finite:
        raise CrossCheckError("Rees chain finiteness differs from the base")
    if sets.finite and gldim != len(base_sets.levels) + 1:
        raise CrossCheckError("Rees global dimension is not base + 1")
    base_growth = classify_growth(
        build_ufnarovski(base_omega, base_alphabet)
    )
    if base_growth.is_polynomial:
        if growth.exponential or growth.degree != base_growth.degree + 1:
            raise CrossCheckError("Rees growth degree is not base + 1")

    warnings = presentation.warnings + graph.warnings
    return ReesInvariants(
        presentation, omega, growth, gldim, hilbert, sets, graph, warnings
    )
