"""Deterministic text rendering: words, polynomials, series, DOT digraphs."""

from __future__ import annotations

from fractions import Fraction

from .freealg import Alphabet, MonomialOrder, Poly, Word


def word_str(word: Word, alphabet: Alphabet) -> str:
    """Serialized form: '*'-joined letter names; the identity is "1"."""
    if not word:
        return "1"
    return "*".join(alphabet.names[i] for i in word)


def word_pretty(word: Word, alphabet: Alphabet) -> str:
    """Human form with powers collapsed, e.g. x1^2*x2."""
    if not word:
        return "1"
    runs: list[tuple[int, int]] = []
    for letter in word:
        if runs and runs[-1][0] == letter:
            runs[-1] = (letter, runs[-1][1] + 1)
        else:
            runs.append((letter, 1))
    return "*".join(
        alphabet.names[i] if k == 1 else f"{alphabet.names[i]}^{k}" for i, k in runs
    )


def poly_str(f: Poly, order: MonomialOrder) -> str:
    """Render with terms in descending monomial order."""
    if f.is_zero:
        return "0"
    alphabet = order.alphabet
    words = sorted(f.terms, key=order.sort_key, reverse=True)
    parts: list[str] = []
    for pos, w in enumerate(words):
        c = f.terms[w]
        mag = abs(c)
        body = word_pretty(w, alphabet)
        if not w:
            piece = str(mag)
        elif mag == 1:
            piece = body
        else:
            piece = f"{mag}*{body}"
        if pos == 0:
            parts.append(piece if c > 0 else f"-{piece}")
        else:
            parts.append(f"+ {piece}" if c > 0 else f"- {piece}")
    return " ".join(parts)


def denominator_str(coeffs) -> str:
    """Render an integer polynomial in t from its ascending coefficient list."""
    parts: list[str] = []
    for d, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if d == 0:
            body = str(mag)
        elif d == 1:
            body = "t" if mag == 1 else f"{mag}t"
        else:
            body = f"t^{d}" if mag == 1 else f"{mag}t^{d}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def dot_digraph(name: str, vertices, edge_pairs, alphabet: Alphabet) -> str:
    """DOT text with vertices and edges in sorted order (deterministic bytes)."""
    lines = [f"digraph {name} {{"]
    for v in sorted(vertices, key=lambda w: (len(w), w)):
        lines.append(f'  "{word_str(v, alphabet)}";')
    for src, dst in sorted(edge_pairs, key=lambda e: ((len(e[0]), e[0]), (len(e[1]), e[1]))):
        lines.append(f'  "{word_str(src, alphabet)}" -> "{word_str(dst, alphabet)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
