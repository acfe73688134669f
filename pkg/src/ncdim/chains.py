"""Chain graph, chain sets, global dimension, and Hilbert series.

Chains are built from routes out of the root vertex 1 of the chain graph:
a route 1 -> v1 -> ... -> v_{n+1} concatenates to an n-chain word.  The
global dimension of the monomial algebra is the first level at which the
chain sets vanish, and the Hilbert series denominator is the alternating
sum of the chain-level generating polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError
from .freealg import Alphabet, Word
from .render import dot_digraph, word_str
from .rewrite import MonomialSet, count_normal_words

DEFAULT_MAX_LEVEL = 64
ROOT: Word = ()


@dataclass(frozen=True)
class ChainGraph:
    """Root 1, the live letters, and all proper suffixes of obstructions.

    Edges from the root go exactly to every live letter (letters that are
    themselves obstructions — "dead letters" — are excluded, with a warning:
    the algebra they present is the monomial algebra on the remaining
    letters).  For non-root u, v there is an edge u -> v iff exactly one
    obstruction w is a suffix of uv and uv minus its last letter is normal.
    """

    alphabet: Alphabet
    vertices: tuple[Word, ...]
    edges: dict[Word, tuple[Word, ...]]
    warnings: tuple[str, ...]

    def successors(self, v: Word) -> tuple[Word, ...]:
        return self.edges.get(v, ())


def _edge_matches(u: Word, v: Word, omega: MonomialSet) -> list[Word]:
    z = u + v
    prefix_normal = omega.is_normal(z[:-1])
    matches = []
    for w in omega.words:
        if len(w) <= len(z) and z[len(z) - len(w):] == w:
            if len(w) == len(z) or prefix_normal:
                matches.append(w)
    return matches


def build_chain_graph(omega: MonomialSet, alphabet: Alphabet) -> ChainGraph:
    warnings: list[str] = []
    dead = [i for i in range(alphabet.n) if (i,) in omega]
    if dead:
        names = ", ".join(alphabet.names[i] for i in dead)
        warnings.append(
            f"letters {names} are obstructions; chain invariants are computed "
            "over the remaining letters"
        )
    live = [i for i in range(alphabet.n) if (i,) not in omega]
    vertices = {ROOT}
    vertices.update((i,) for i in live)
    for w in omega.words:
        for k in range(1, len(w)):
            vertices.add(w[k:])
    ordered = sorted(vertices, key=lambda w: (len(w), w))
    edges: dict[Word, tuple[Word, ...]] = {ROOT: tuple(sorted((i,) for i in live))}
    nonroot = [v for v in ordered if v != ROOT]
    for u in nonroot:
        targets = []
        for v in nonroot:
            matches = _edge_matches(u, v, omega)
            if len(matches) == 1:
                targets.append(v)
            elif len(matches) > 1:
                warnings.append(
                    "no edge {} -> {}: {} ends in more than one obstruction ({})".format(
                        word_str(u, alphabet),
                        word_str(v, alphabet),
                        word_str(u + v, alphabet),
                        ", ".join(word_str(w, alphabet) for w in matches),
                    )
                )
        if targets:
            edges[u] = tuple(sorted(targets, key=lambda w: (len(w), w)))
    return ChainGraph(alphabet, tuple(ordered), edges, tuple(warnings))


@dataclass(frozen=True)
class ChainSets:
    """Chain words per level: ``levels[i]`` is C_i, starting at C_0.

    C_{-1} = {1} is implicit.  ``finite`` reports whether the chain sets
    vanish at some level (no cycle is reachable from the root); when false
    the enumeration stops at the configured depth instead.
    """

    levels: tuple[tuple[Word, ...], ...]
    finite: bool

    def level(self, n: int) -> tuple[Word, ...]:
        if n == -1:
            return (ROOT,)
        if 0 <= n < len(self.levels):
            return self.levels[n]
        return ()


def _cycle_reachable(graph: ChainGraph) -> bool:
    # iterative DFS with colors, restricted to the part reachable from the root
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {v: WHITE for v in graph.vertices}
    stack = [(ROOT, iter(graph.successors(ROOT)))]
    color[ROOT] = GRAY
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if color[w] == GRAY:
                return True
            if color[w] == WHITE:
                color[w] = GRAY
                stack.append((w, iter(graph.successors(w))))
                advanced = True
                break
        if not advanced:
            color[v] = BLACK
            stack.pop()
    return False


def chain_sets(graph: ChainGraph, max_level: int = DEFAULT_MAX_LEVEL) -> ChainSets:
    finite = not _cycle_reachable(graph)
    levels: list[tuple[Word, ...]] = []
    current = [(v, v) for v in graph.successors(ROOT)]  # (tail vertex, chain word)
    while current and len(levels) < max_level:
        levels.append(tuple(sorted((word for _, word in current),
                                   key=lambda w: (len(w), w))))
        current = [
            (s, word + s) for tail, word in current for s in graph.successors(tail)
        ]
    if current and finite:
        raise InputError(
            f"chain enumeration exceeded max_level={max_level}; raise the cap"
        )
    return ChainSets(tuple(levels), finite)


def global_dimension_monomial(
    omega: MonomialSet, alphabet: Alphabet, max_level: int = DEFAULT_MAX_LEVEL
) -> int | None:
    """First level at which the chain sets vanish; None = infinite."""
    sets = chain_sets(build_chain_graph(omega, alphabet), max_level)
    return len(sets.levels) if sets.finite else None


@dataclass(frozen=True)
class HilbertSeries:
    """Truncated expansion, with the closed form 1/D(t) when chains are finite.

    ``denominator`` is D as ascending integer coefficients (constant term 1),
    or None when no closed form is available; ``coefficients`` lists the
    dimensions for weighted degrees 0..N.
    """

    denominator: tuple[int, ...] | None
    coefficients: tuple[int, ...]
    closed_form: bool


def expand_reciprocal(denominator: Iterable[int], up_to: int) -> list[int]:
    """Coefficients of 1/D(t) through degree up_to; D must have constant term 1."""
    den = list(denominator)
    if not den or den[0] != 1:
        raise ValueError("denominator must have constant term 1")
    coeffs = [0] * (up_to + 1)
    coeffs[0] = 1
    for k in range(1, up_to + 1):
        coeffs[k] = -sum(
            den[j] * coeffs[k - j] for j in range(1, min(k, len(den) - 1) + 1)
        )
    return coeffs


def chain_denominator(sets: ChainSets, alphabet: Alphabet) -> tuple[int, ...]:
    """D(t) = 1 - sum_i (-1)^i H_{C_i}(t) over the (finite) chain levels."""
    degree_of = alphabet.degree
    size = 1
    contrib: dict[int, int] = {}
    for i, level in enumerate(sets.levels):
        sign = -1 if i % 2 == 0 else 1
        for word in level:
            d = degree_of(word)
            contrib[d] = contrib.get(d, 0) + sign
            size = max(size, d + 1)
    den = [0] * size
    den[0] = 1
    for d, c in contrib.items():
        den[d] += c
    while len(den) > 1 and den[-1] == 0:
        den.pop()
    return tuple(den)


def hilbert_series(
    omega: MonomialSet,
    alphabet: Alphabet,
    truncation: int = 16,
    max_level: int = DEFAULT_MAX_LEVEL,
) -> HilbertSeries:
    """Hilbert series of the monomial algebra defined by ``omega``.

    With finite chain sets the closed form 1/D(t) is produced and expanded;
    otherwise the coefficients fall back to direct normal-word counting.
    """
    sets = chain_sets(build_chain_graph(omega, alphabet), max_level)
    if sets.finite:
        den = chain_denominator(sets, alphabet)
        coeffs = expand_reciprocal(den, truncation)
        return HilbertSeries(den, tuple(coeffs), True)
    coeffs = count_normal_words(omega, alphabet, truncation)
    return HilbertSeries(None, tuple(coeffs), False)


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _partitions(total: int, parts: int, minimum: int = 1):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(minimum, total - (parts - 1) * minimum + 1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def product_form_decomposition(denominator: Iterable[int], m: int) -> list[int] | None:
    """Exponents e_1 <= ... <= e_m with D(t) = prod (1 - t^{e_i}), or None.

    The search is exhaustive over partitions of deg D into m positive parts
    (the degrees must add up), so a None return is a proof of nonexistence.
    """
    den = list(denominator)
    while len(den) > 1 and den[-1] == 0:
        den.pop()
    if not den or den[0] != 1:
        raise ValueError("denominator must have constant term 1")
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        if den == [1]:
            return []
        raise ValueError("m = 0 requires the trivial denominator 1")
    degree = len(den) - 1
    for exponents in _partitions(degree, m):
        prod = [1]
        for e in exponents:
            prod = _poly_mul(prod, [1] + [0] * (e - 1) + [-1])
        if prod == den:
            return list(exponents)
    return None


def emit_dot(graph: ChainGraph, name: str = "chains") -> str:
    pairs = [(src, dst) for src, targets in graph.edges.items() for dst in targets]
    return dot_digraph(name, graph.vertices, pairs, graph.alphabet)
