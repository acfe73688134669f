"""Presentation loading, the full analysis pipeline, and report rendering.

The pipeline follows one fixed procedure: verify the candidate basis, take
the obstruction set from the leading words, classify growth, compute chain
sets / global dimension / Hilbert series of the monomial algebra, build the
Rees presentation, and finally decide whether the exact transfer theorems
apply (polynomial growth and finite global dimension) or only the generic
inequality chain can be reported.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from . import chains as chains_mod
from . import growth as growth_mod
from .chains import (
    DEFAULT_MAX_LEVEL,
    ChainGraph,
    ChainSets,
    HilbertSeries,
    build_chain_graph,
    chain_sets,
    hilbert_series,
    product_form_decomposition,
)
from .errors import CrossCheckError, InputError
from .freealg import (
    Alphabet,
    MonomialOrder,
    Poly,
    leading_homogeneous,
    parse_polynomial,
)
from .growth import GrowthClass, UfnarovskiGraph, build_ufnarovski, classify_growth
from .render import denominator_str, poly_str, word_str
from .rewrite import GroebnerBasis, MonomialSet, ensure_verified, overlap_ambiguities
from .rees import ReesInvariants, extend_order, rees_invariants

DEFAULT_TRUNCATION = 16


@dataclass(frozen=True)
class Presentation:
    alphabet: Alphabet
    order: MonomialOrder
    basis: GroebnerBasis
    source_path: str | None = None


def load_presentation_data(data, source_path: str | None = None) -> Presentation:
    """Build a presentation from decoded JSON; raises InputError with details."""
    if not isinstance(data, dict):
        raise InputError("presentation must be a JSON object")
    allowed = {"variables", "order", "relations"}
    unknown = set(data) - allowed
    if unknown:
        raise InputError(f"unknown top-level keys: {', '.join(sorted(unknown))}")
    variables = data.get("variables")
    if not isinstance(variables, list) or not variables:
        raise InputError("'variables' must be a nonempty list")
    names: list[str] = []
    weights: list[int] = []
    for k, entry in enumerate(variables):
        if not isinstance(entry, dict):
            raise InputError(f"variable {k + 1} must be an object")
        extra = set(entry) - {"name", "weight"}
        if extra:
            raise InputError(
                f"variable {k + 1} has unknown keys: {', '.join(sorted(extra))}"
            )
        name = entry.get("name")
        if not isinstance(name, str):
            raise InputError(f"variable {k + 1} needs a string 'name'")
        weight = entry.get("weight", 1)
        names.append(name)
        weights.append(weight)
    alphabet = Alphabet(tuple(names), tuple(weights))

    order_data = data.get("order", {})
    if not isinstance(order_data, dict):
        raise InputError("'order' must be an object")
    extra = set(order_data) - {"kind", "precedence"}
    if extra:
        raise InputError(f"'order' has unknown keys: {', '.join(sorted(extra))}")
    kind = order_data.get("kind", "grlex")
    precedence_names = order_data.get("precedence")
    if precedence_names is None:
        precedence = None
    else:
        if not isinstance(precedence_names, list):
            raise InputError("'precedence' must list variable names, smallest first")
        precedence = tuple(alphabet.index(str(n)) for n in precedence_names)
    order = MonomialOrder(alphabet, kind, precedence)

    relations_data = data.get("relations", [])
    if not isinstance(relations_data, list):
        raise InputError("'relations' must be a list of strings")
    relations: list[Poly] = []
    for k, text in enumerate(relations_data):
        if not isinstance(text, str):
            raise InputError(f"relation {k + 1} must be a string")
        try:
            relations.append(parse_polynomial(text, alphabet))
        except InputError as exc:
            raise InputError(f"relation {k + 1}: {exc}") from None
    basis = GroebnerBasis(relations, order)
    return Presentation(alphabet, order, basis, source_path)


def load_presentation(path) -> Presentation:
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    return load_presentation_data(data, source_path=str(path))


def pbw_check(basis: GroebnerBasis) -> bool:
    """True iff the obstructions are exactly {X_j X_i : i < j} (declaration order),
    so the normal words are the ordered monomials X_1^a1 ... X_n^an."""
    ensure_verified(basis)
    omega = MonomialSet.interreduce(basis.leading_words)
    n = basis.order.alphabet.n
    expected = {(j, i) for j in range(n) for i in range(j)}
    return set(omega.words) == expected


@dataclass
class AnalysisReport:
    presentation: Presentation
    gb_verified: bool
    overlaps_checked: int
    omega: MonomialSet
    growth: GrowthClass
    gldim_monomial: int | None  # None = infinite
    applicable: bool
    gldim_assoc_graded: int | None  # None = not determined exactly
    lh_basis: tuple[Poly, ...]
    rees: ReesInvariants
    hilbert: HilbertSeries
    product_form: list[int] | None
    sets: ChainSets
    pbw: bool
    warnings: tuple[str, ...]
    growth_graph: UfnarovskiGraph
    chain_graph: ChainGraph


def analyze(
    presentation: Presentation,
    truncation: int = DEFAULT_TRUNCATION,
    max_level: int = DEFAULT_MAX_LEVEL,
) -> AnalysisReport:
    """Run the whole procedure; raises on verification or cross-check failure."""
    basis = presentation.basis
    alphabet = presentation.alphabet
    ensure_verified(basis)
    checked = len(overlap_ambiguities(basis))
    omega = MonomialSet.interreduce(basis.leading_words)

    growth_graph = build_ufnarovski(omega, alphabet)
    growth = classify_growth(growth_graph)

    chain_graph = build_chain_graph(omega, alphabet)
    sets = chain_sets(chain_graph, max_level)
    gldim_monomial = len(sets.levels) if sets.finite else None

    hilbert = hilbert_series(omega, alphabet, truncation, max_level)

    lh_basis = tuple(leading_homogeneous(g, alphabet) for g in basis.elements)
    rees = rees_invariants(basis, truncation, max_level)

    applicable = growth.is_polynomial and gldim_monomial is not None
    gldim_assoc_graded = None
    if applicable:
        # exactness transfers; the equalities below are theorems, so a
        # mismatch means a computation bug
        if growth.degree != gldim_monomial:
            raise CrossCheckError(
                f"polynomial growth degree {growth.degree} differs from the "
                f"monomial global dimension {gldim_monomial}"
            )
        if rees.gldim != gldim_monomial + 1:
            raise CrossCheckError("Rees global dimension is not base + 1")
        gldim_assoc_graded = gldim_monomial

    pbw = pbw_check(basis)
    if pbw:
        n = alphabet.n
        if gldim_monomial != n or rees.gldim != n + 1:
            raise CrossCheckError(
                "ordered-monomial (PBW) presentations must have global "
                f"dimension {n} and Rees global dimension {n + 1}"
            )

    product_form = None
    if applicable and hilbert.closed_form:
        product_form = product_form_decomposition(hilbert.denominator, growth.degree)

    warnings = tuple(dict.fromkeys(chain_graph.warnings + rees.warnings))
    return AnalysisReport(
        presentation=presentation,
        gb_verified=True,
        overlaps_checked=checked,
        omega=omega,
        growth=growth,
        gldim_monomial=gldim_monomial,
        applicable=applicable,
        gldim_assoc_graded=gldim_assoc_graded,
        lh_basis=lh_basis,
        rees=rees,
        hilbert=hilbert,
        product_form=product_form,
        sets=sets,
        pbw=pbw,
        warnings=warnings,
        growth_graph=growth_graph,
        chain_graph=chain_graph,
    )


# ---------------------------------------------------------------------------
# rendering

def _dim_json(value: int | None):
    return "infinity" if value is None else value


def _growth_json(growth: GrowthClass) -> dict:
    return {
        "class": "exponential" if growth.exponential else "polynomial",
        "degree": growth.degree,
    }


def _hilbert_json(h: HilbertSeries) -> dict:
    return {
        "denominator": list(h.denominator) if h.denominator is not None else None,
        "coefficients": list(h.coefficients),
        "closed_form": h.closed_form,
    }


def report_to_dict(report: AnalysisReport) -> dict:
    alphabet = report.presentation.alphabet
    return {
        "gb_verified": report.gb_verified,
        "omega": [word_str(w, alphabet) for w in report.omega.words],
        "growth": _growth_json(report.growth),
        "gldim_monomial": _dim_json(report.gldim_monomial),
        "applicable": report.applicable,
        "gldim_assoc_graded": report.gldim_assoc_graded,
        "rees": {
            "growth": _growth_json(report.rees.growth),
            "gldim": _dim_json(report.rees.gldim),
            "hilbert": _hilbert_json(report.rees.hilbert),
        },
        "hilbert": _hilbert_json(report.hilbert),
        "product_form": report.product_form,
        "chains": {
            "levels": [
                [word_str(w, alphabet) for w in level] for level in report.sets.levels
            ],
            "finite": report.sets.finite,
        },
        "warnings": list(report.warnings),
    }


def _fmt_dim(value: int | None) -> str:
    return "infinite" if value is None else str(value)


def _fmt_growth(growth: GrowthClass) -> str:
    if growth.exponential:
        return "exponential"
    return f"polynomial of degree {growth.degree}"


def _fmt_hilbert(h: HilbertSeries) -> list[str]:
    lines = []
    if h.closed_form:
        lines.append(f"  closed form: 1/({denominator_str(h.denominator)})")
    else:
        lines.append("  closed form: none (chain sets do not vanish)")
    lines.append(
        "  coefficients: " + ", ".join(str(c) for c in h.coefficients)
    )
    return lines


def _text_report(report: AnalysisReport) -> str:
    pres = report.presentation
    alphabet = pres.alphabet
    order = pres.order
    ext = report.rees.presentation.ext
    ext_order = extend_order(order, ext)
    lines: list[str] = []
    lines.append(
        "Groebner basis: verified "
        f"({len(pres.basis)} relations, {report.overlaps_checked} overlaps checked)"
    )
    lines.append(
        "obstructions: "
        + (", ".join(word_str(w, alphabet) for w in report.omega.words) or "none")
    )
    lines.append("")
    lines.append("(1) growth of the monomial algebra: " + _fmt_growth(report.growth))
    if report.growth.exponential and report.growth.witness is not None:
        c1, c2 = report.growth.witness
        shared = c1[0][0]
        lines.append(
            "    witness: two cycles through "
            + word_str(shared, alphabet)
            + ": "
            + " / ".join(
                "->".join([word_str(c[0][0], alphabet)] + [word_str(e[1], alphabet) for e in c])
                for c in (c1, c2)
            )
        )
    lines.append(
        "(2) global dimension of the monomial algebra: "
        + _fmt_dim(report.gldim_monomial)
    )
    for i, level in enumerate(report.sets.levels):
        lines.append(
            f"    C_{i} = {{" + ", ".join(word_str(w, alphabet) for w in level) + "}"
        )
    if report.sets.finite:
        lines.append(f"    C_{len(report.sets.levels)} = {{}}")
    else:
        lines.append(
            f"    ... not vanishing (enumeration stopped after "
            f"{len(report.sets.levels)} levels)"
        )
    lines.append("(3) conclusions:")
    if report.applicable:
        lines.append(
            "    polynomial growth and finite global dimension hold, so the "
            "exact transfer applies:"
        )
        lines.append(
            f"    gl.dim of the associated graded algebra = {report.gldim_assoc_graded}"
        )
        lines.append(f"    gl.dim of the Rees algebra = {report.rees.gldim}")
    else:
        bound = (
            f" <= {report.gldim_monomial}" if report.gldim_monomial is not None else ""
        )
        lines.append(
            "    exact transfer not available; only the generic bounds hold:"
        )
        lines.append(
            "    gl.dim(algebra) <= gl.dim(associated graded) <= "
            "gl.dim(monomial algebra)" + bound
        )
        if report.gldim_monomial is not None:
            lines.append(
                f"    gl.dim(Rees algebra) <= {report.gldim_monomial + 1}"
            )
    lines.append("")
    lines.append("Hilbert series of the monomial algebra:")
    lines.extend(_fmt_hilbert(report.hilbert))
    if report.product_form is not None:
        lines.append(
            "  product form: "
            + " ".join(f"(1 - t^{e})" if e != 1 else "(1 - t)" for e in report.product_form)
        )
    else:
        lines.append("  product form: none")
    lines.append("")
    lines.append("associated graded relations (leading homogeneous parts):")
    for g in report.lh_basis:
        lines.append("  " + poly_str(g, order))
    lines.append("")
    lines.append("Rees algebra (homogenized presentation, T central of weight 1):")
    for g in report.rees.presentation.basis.elements:
        lines.append("  " + poly_str(g, ext_order))
    lines.append("  growth: " + _fmt_growth(report.rees.growth))
    lines.append("  global dimension: " + _fmt_dim(report.rees.gldim))
    lines.extend(_fmt_hilbert(report.rees.hilbert))
    lines.append("")
    lines.append(
        "ordered-monomial (PBW) normal words: " + ("yes" if report.pbw else "no")
    )
    if report.warnings:
        lines.append("")
        lines.append("warnings:")
        for w in report.warnings:
            lines.append("  - " + w)
    return "\n".join(lines) + "\n"


def _dot_bundle(report: AnalysisReport) -> str:
    parts = [
        growth_mod.emit_dot(report.growth_graph, "growth"),
        chains_mod.emit_dot(report.chain_graph, "chains"),
        chains_mod.emit_dot(report.rees.graph, "rees_chains"),
    ]
    return "\n".join(parts)


def render_report(report: AnalysisReport, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(report_to_dict(report), indent=2) + "\n").encode("utf-8")
    if fmt == "text":
        return _text_report(report).encode("utf-8")
    if fmt == "dot-bundle":
        return _dot_bundle(report).encode("utf-8")
    raise ValueError(f"unknown report format {fmt!r}")
