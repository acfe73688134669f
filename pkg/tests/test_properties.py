"""Property-based checks of the algebraic laws the package relies on."""

import pytest
from hypothesis import assume, given, settings, strategies as st

from ncdim import (
    Alphabet,
    MonomialOrder,
    MonomialSet,
    Poly,
    dehomogenize,
    extend_alphabet,
    extend_order,
    homogenize,
    leading_word,
    normal_form,
    verify_groebner,
)
from ncdim.rewrite import FactorAutomaton, contains_factor
from presets import commutation, down_up, ore_case_a

MANY = settings(max_examples=1000, derandomize=True, deadline=None)


@st.composite
def orders(draw):
    n = draw(st.integers(1, 3))
    weights = tuple(draw(st.integers(1, 3)) for _ in range(n))
    alphabet = Alphabet(tuple(f"x{i + 1}" for i in range(n)), weights)
    kind = draw(st.sampled_from(["grlex", "grevlex"]))
    precedence = tuple(draw(st.permutations(range(n))))
    return MonomialOrder(alphabet, kind, precedence)


def words(n, max_len=5, min_len=0):
    letters = st.integers(0, n - 1)
    return st.lists(letters, min_size=min_len, max_size=max_len).map(tuple)


def polys(n, max_terms=4, max_len=5):
    coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=5)
    return st.dictionaries(words(n, max_len), coeffs, max_size=max_terms).map(Poly)


def nonzero_polys(n, **kwargs):
    return polys(n, **kwargs).filter(lambda p: p.terms)


# fixed verified bases for the normal-form laws
BASES = {
    "down_up": down_up().basis,
    "ore_a": ore_case_a().basis,
    "commutation3": commutation(3).basis,
}
for _basis in BASES.values():
    assert verify_groebner(_basis).ok


class TestOrderLaws:
    @MANY
    @given(data=st.data())
    def test_total_and_antisymmetric(self, data):
        order = data.draw(orders())
        n = order.alphabet.n
        u, v = data.draw(words(n)), data.draw(words(n))
        c = order.compare(u, v)
        assert c in (-1, 0, 1)
        assert c == -order.compare(v, u)
        assert (c == 0) == (u == v)

    @MANY
    @given(data=st.data())
    def test_transitive(self, data):
        order = data.draw(orders())
        n = order.alphabet.n
        u, v, w = (data.draw(words(n)) for _ in range(3))
        if order.compare(u, v) <= 0 and order.compare(v, w) <= 0:
            assert order.compare(u, w) <= 0

    @MANY
    @given(data=st.data())
    def test_multiplicative(self, data):
        order = data.draw(orders())
        n = order.alphabet.n
        u, v = data.draw(words(n)), data.draw(words(n))
        left, right = data.draw(words(n, 3)), data.draw(words(n, 3))
        assume(order.compare(u, v) < 0)
        assert order.compare(left + u + right, left + v + right) < 0

    @MANY
    @given(data=st.data())
    def test_degree_decides_first(self, data):
        order = data.draw(orders())
        n = order.alphabet.n
        u, v = data.draw(words(n)), data.draw(words(n))
        du, dv = order.alphabet.degree(u), order.alphabet.degree(v)
        if du < dv:
            assert order.compare(u, v) < 0
        assert order.compare((), u) <= 0

    @MANY
    @given(data=st.data())
    def test_leading_word_multiplicative(self, data):
        order = data.draw(orders())
        n = order.alphabet.n
        f = data.draw(nonzero_polys(n, max_len=4))
        g = data.draw(nonzero_polys(n, max_len=4))
        assert leading_word(f * g, order) == (
            leading_word(f, order) + leading_word(g, order)
        )


class TestNormalFormLaws:
    @pytest.mark.parametrize("name", sorted(BASES))
    @MANY
    @given(data=st.data())
    def test_idempotent_and_fully_reduced(self, name, data):
        basis = BASES[name]
        omega = MonomialSet.interreduce(basis.leading_words)
        f = data.draw(polys(basis.order.alphabet.n))
        nf = normal_form(f, basis)
        assert all(omega.is_normal(w) for w in nf.terms)
        assert normal_form(nf, basis) == nf

    @pytest.mark.parametrize("name", sorted(BASES))
    @MANY
    @given(data=st.data())
    def test_linear(self, name, data):
        basis = BASES[name]
        n = basis.order.alphabet.n
        f, g = data.draw(polys(n)), data.draw(polys(n))
        scalars = st.fractions(min_value=-5, max_value=5, max_denominator=5)
        a, b = data.draw(scalars), data.draw(scalars)
        assert normal_form(f * a + g * b, basis) == (
            normal_form(f, basis) * a + normal_form(g, basis) * b
        )

    @pytest.mark.parametrize("name", sorted(BASES))
    @MANY
    @given(data=st.data())
    def test_constant_on_ideal_cosets(self, name, data):
        # adding u*g*v for a basis element g never changes the normal form
        basis = BASES[name]
        n = basis.order.alphabet.n
        f = data.draw(polys(n))
        g = basis.elements[data.draw(st.integers(0, len(basis.elements) - 1))]
        u, v = data.draw(words(n, 3)), data.draw(words(n, 3))
        shifted = f + Poly.monomial(u) * g * Poly.monomial(v)
        assert normal_form(shifted, basis) == normal_form(f, basis)


class TestHomogenizationLaws:
    @MANY
    @given(data=st.data())
    def test_round_trip_homogeneity_and_leading_word(self, data):
        order = data.draw(orders())
        n = order.alphabet.n
        f = data.draw(nonzero_polys(n))
        ext = extend_alphabet(order.alphabet)
        ext_order = extend_order(order, ext)
        h = homogenize(f, order, ext)
        assert dehomogenize(h, ext) == f
        degrees = {ext.alphabet.degree(w) for w in h.terms}
        assert len(degrees) == 1
        assert leading_word(h, ext_order) == leading_word(f, order)

    @MANY
    @given(data=st.data())
    def test_extended_order_restricts_to_base(self, data):
        order = data.draw(orders())
        n = order.alphabet.n
        u, v = data.draw(words(n)), data.draw(words(n))
        ext_order = extend_order(order, extend_alphabet(order.alphabet))
        assert ext_order.compare(u, v) == order.compare(u, v)


class TestFactorLaws:
    @MANY
    @given(data=st.data())
    def test_automaton_matches_brute_force(self, data):
        n = data.draw(st.integers(1, 3))
        patterns = data.draw(
            st.lists(words(n, 4, min_len=1), min_size=1, max_size=4)
        )
        automaton = FactorAutomaton(patterns)
        w = data.draw(words(n, 8))
        expected = not any(contains_factor(w, p) for p in patterns)
        assert automaton.is_normal(w) == expected

    @MANY
    @given(data=st.data())
    def test_interreduction_preserves_normal_words(self, data):
        n = data.draw(st.integers(1, 3))
        raw = data.draw(st.lists(words(n, 4, min_len=1), min_size=1, max_size=4))
        omega = MonomialSet.interreduce(raw)
        w = data.draw(words(n, 8))
        expected = not any(contains_factor(w, p) for p in raw)
        assert omega.is_normal(w) == expected
