"""Command-line interface.

Exit codes: 0 = completed, 2 = input or validation error, 3 = the candidate
basis failed Groebner verification (witness printed), 4 = an internal
cross-check was violated.
"""

from __future__ import annotations

import argparse
import sys

from . import chains as chains_mod
from . import growth as growth_mod
from .chains import DEFAULT_MAX_LEVEL
from .errors import CrossCheckError, GroebnerVerificationError, InputError
from .pipeline import (
    DEFAULT_TRUNCATION,
    analyze,
    load_presentation,
    render_report,
)
from .render import denominator_str, poly_str, word_str
from .rees import extend_order


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncdim",
        description=(
            "Growth, global dimension, and Hilbert series of an algebra "
            "presented by a finite Groebner basis"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, **extra):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="presentation file (JSON)")
        return p

    add("check-gb", "verify the candidate basis by the overlap criterion")
    add("growth", "growth class of the monomial algebra")
    add("gldim", "global dimensions (monomial, associated graded, Rees)")
    p = add("hilbert", "Hilbert series (closed form and truncated expansion)")
    p.add_argument("--terms", type=int, default=DEFAULT_TRUNCATION,
                   help="truncation degree (default %(default)s)")
    add("rees", "Rees algebra presentation and invariants")
    add("pbw", "test for ordered-monomial (PBW) normal words")
    p = add("graph", "emit one of the graphs")
    p.add_argument("--which", choices=["uf", "chains", "rees-chains"], default="uf")
    p.add_argument("--dot", action="store_true", help="DOT output instead of a listing")
    p = add("report", "full analysis report")
    p.add_argument("--format", choices=["json", "text", "dot-bundle"], default="json")
    return parser


def _print_graph(vertices, edges, alphabet) -> None:
    print(f"vertices ({len(vertices)}):")
    for v in vertices:
        print("  " + word_str(v, alphabet))
    print(f"edges ({len(edges)}):")
    for src, dst in edges:
        print(f"  {word_str(src, alphabet)} -> {word_str(dst, alphabet)}")


def _run(args) -> int:
    presentation = load_presentation(args.file)
    alphabet = presentation.alphabet

    if args.command == "hilbert":
        if args.terms < 0:
            raise InputError("--terms must be nonnegative")
        report = analyze(presentation, truncation=args.terms)
    else:
        report = analyze(presentation)

    if args.command == "check-gb":
        print(
            f"ok: {len(presentation.basis)} relations verified "
            f"({report.overlaps_checked} overlap ambiguities reduce to zero)"
        )
        return 0

    if args.command == "growth":
        g = report.growth
        if g.exponential:
            print("growth: exponential")
            c1, c2 = g.witness
            shared = word_str(c1[0][0], alphabet)
            for k, cycle in enumerate((c1, c2), 1):
                path = "->".join(
                    [word_str(cycle[0][0], alphabet)]
                    + [word_str(e[1], alphabet) for e in cycle]
                )
                print(f"  cycle {k} through {shared}: {path}")
        else:
            print(f"growth: polynomial of degree {g.degree}")
        return 0

    if args.command == "gldim":
        def fmt(v):
            return "infinite" if v is None else str(v)
        print(f"gl.dim of the monomial algebra: {fmt(report.gldim_monomial)}")
        if report.applicable:
            print(f"gl.dim of the associated graded algebra: {report.gldim_assoc_graded}")
            print(f"gl.dim of the Rees algebra: {report.rees.gldim}")
        else:
            print("exact transfer not applicable "
                  "(needs polynomial growth and finite global dimension)")
        return 0

    if args.command == "hilbert":
        h = report.hilbert
        if h.closed_form:
            print(f"closed form: 1/({denominator_str(h.denominator)})")
        else:
            print("closed form: none (chain sets do not vanish)")
        print("coefficients:", ", ".join(str(c) for c in h.coefficients))
        return 0

    if args.command == "rees":
        ext = report.rees.presentation.ext
        ext_order = extend_order(presentation.order, ext)
        print("relations:")
        for g in report.rees.presentation.basis.elements:
            print("  " + poly_str(g, ext_order))
        rg = report.rees.growth
        print("growth:", "exponential" if rg.exponential
              else f"polynomial of degree {rg.degree}")
        print("gl.dim:", "infinite" if report.rees.gldim is None else report.rees.gldim)
        h = report.rees.hilbert
        if h.closed_form:
            print(f"hilbert: 1/({denominator_str(h.denominator)})")
        print("coefficients:", ", ".join(str(c) for c in h.coefficients))
        return 0

    if args.command == "pbw":
        if report.pbw:
            n = alphabet.n
            print("yes: normal words are the ordered monomials")
            print(f"gl.dim = {n}, Rees gl.dim = {n + 1} (cross-checked)")
        else:
            print("no")
        return 0

    if args.command == "graph":
        if args.which == "uf":
            g = report.growth_graph
            if args.dot:
                print(growth_mod.emit_dot(g, "growth"), end="")
            else:
                _print_graph(g.vertices, [(e[0], e[1]) for e in g.edges], alphabet)
        else:
            cg = report.chain_graph if args.which == "chains" else report.rees.graph
            label_alphabet = (
                alphabet if args.which == "chains"
                else report.rees.presentation.ext.alphabet
            )
            if args.dot:
                name = "chains" if args.which == "chains" else "rees_chains"
                print(chains_mod.emit_dot(cg, name), end="")
            else:
                pairs = [
                    (src, dst) for src, targets in cg.edges.items() for dst in targets
                ]
                _print_graph(cg.vertices, pairs, label_alphabet)
        return 0

    if args.command == "report":
        sys.stdout.write(render_report(report, args.format).decode("utf-8"))
        return 0

    raise InputError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except GroebnerVerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 3
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CrossCheckError as exc:
        print(f"internal cross-check violated: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
