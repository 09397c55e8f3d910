import pytest
from hypothesis import given, settings, strategies as st

from kbonacci.series import (
    MultiPoly,
    RationalGF,
    expand,
    expand_ints,
    gf_deg4_alternate,
    gf_degree,
    gf_graph,
    gf_hamiltonian,
    gf_named_total,
    gf_polyomino,
    poly_add,
    poly_mul,
    total_weight_series,
)
from kbonacci.words import count_words

PQ = ("p", "q")


def pq(text_terms):
    """Shorthand: {(pe, qe): coef} -> MultiPoly in p, q."""
    return MultiPoly(PQ, text_terms)


def small_polys(variables=("x",), max_terms=4, max_exp=4, max_coef=9):
    term = st.tuples(
        st.tuples(*([st.integers(0, max_exp)] * len(variables))),
        st.integers(-max_coef, max_coef),
    )
    return st.lists(term, max_size=max_terms).map(
        lambda ts: MultiPoly(variables, {e: c for e, c in ts}))


class TestMultiPolyAlgebra:
    def test_additive_identity(self):
        assert pq({(1, 1): 1}) + MultiPoly.zero(PQ) == pq({(1, 1): 1})

    def test_difference_of_squares(self):
        x = ("x",)
        one_plus = MultiPoly(x, {(0,): 1, (1,): 1})
        one_minus = MultiPoly(x, {(0,): 1, (1,): -1})
        assert one_plus * one_minus == MultiPoly(x, {(0,): 1, (2,): -1})

    def test_exponent_addition(self):
        assert pq({(2, 1): 1}) * pq({(1, 2): 1}) == pq({(3, 3): 1})

    def test_module_level_aliases(self):
        a, b = pq({(1, 0): 2}), pq({(0, 1): 3})
        assert poly_add(a, b) == a + b
        assert poly_mul(a, b) == a * b

    def test_arity_mismatch_rejected(self):
        with pytest.raises(ValueError):
            pq({(1, 1): 1}) + MultiPoly(("x",), {(1,): 1})
        with pytest.raises(ValueError):
            MultiPoly(PQ, {(1,): 1})

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            MultiPoly(PQ, {(-1, 0): 1})

    def test_zero_terms_pruned(self):
        p = pq({(1, 1): 1}) - pq({(1, 1): 1})
        assert p.terms == {} and p.is_zero

    def test_integer_operands_and_power(self):
        x = MultiPoly(("x",), {(1,): 1})
        assert (1 - x) * (1 + x) == 1 - x ** 2
        assert x ** 0 == MultiPoly.constant(("x",), 1)
        assert 3 * x == x + x + x
        with pytest.raises(ValueError):
            x ** -1

    @given(small_polys(PQ), small_polys(PQ))
    def test_commutativity(self, a, b):
        assert a + b == b + a
        assert a * b == b * a

    @given(small_polys(PQ), small_polys(PQ), small_polys(PQ))
    @settings(max_examples=40)
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c


class TestMultiPolyStructure:
    def test_specialize(self):
        p = pq({(2, 1): 1, (0, 3): 2})
        assert p.specialize({"p": 1}) == MultiPoly(("q",), {(1,): 1, (3,): 2})
        assert p.specialize({"p": 2, "q": 1}).as_int() == 4 + 2
        with pytest.raises(ValueError):
            p.specialize({"z": 1})

    def test_as_int_requires_constant(self):
        with pytest.raises(ValueError):
            pq({(1, 0): 1}).as_int()
        assert MultiPoly.zero(PQ).as_int() == 0

    def test_weighted_total(self):
        p = pq({(2, 3): 4, (1, 0): 5})
        assert p.weighted_total("q") == 3 * 4
        assert p.weighted_total("p") == 2 * 4 + 1 * 5

    def test_rename(self):
        p = MultiPoly(("q2",), {(3,): 1})
        assert p.rename({"q2": "q"}) == MultiPoly(("q",), {(3,): 1})

    def test_monomial_unknown_variable(self):
        with pytest.raises(ValueError):
            MultiPoly.monomial(PQ, 1, z=2)


class TestTextForm:
    def test_required_ordering(self):
        p = pq({(6, 5): 1, (5, 4): 3, (4, 3): 1, (5, 5): 2})
        assert p.to_text() == "p^4*q^3 + 3*p^5*q^4 + 2*p^5*q^5 + p^6*q^5"

    def test_zero_and_constants(self):
        assert MultiPoly.zero(PQ).to_text() == "0"
        assert MultiPoly.constant(PQ, 7).to_text() == "7"
        assert MultiPoly.constant(PQ, -7).to_text() == "-7"

    def test_unit_coefficients_and_signs(self):
        assert pq({(1, 1): -1, (0, 2): 1}).to_text() == "q^2 - p*q"
        assert pq({(1, 0): 1, (0, 0): -2}).to_text() == "-2 + p"

    def test_json_terms_round_trip_order(self):
        p = pq({(2, 0): 12345678901234567890, (0, 1): -1})
        assert p.to_json_terms() == [
            {"exp": [0, 1], "coef": "-1"},
            {"exp": [2, 0], "coef": "12345678901234567890"},
        ]


class TestRationalGF:
    def test_first_variable_must_be_x(self):
        one = MultiPoly.constant(PQ, 1)
        with pytest.raises(ValueError):
            RationalGF(one, one)

    def test_constant_normalization(self):
        x = ("x",)
        num = MultiPoly(x, {(1,): 2})
        den = MultiPoly(x, {(0,): 2, (1,): -4})
        gf = RationalGF(num, den)
        assert gf.denominator == MultiPoly(x, {(0,): 1, (1,): -2})
        assert gf.numerator == MultiPoly(x, {(1,): 1})

    def test_zero_constant_rejected(self):
        x = ("x",)
        with pytest.raises(ValueError):
            RationalGF(MultiPoly(x, {(1,): 1}), MultiPoly(x, {(1,): 1}))

    def test_non_divisible_constant_rejected(self):
        x = ("x",)
        with pytest.raises(ValueError):
            RationalGF(MultiPoly(x, {(1,): 1}), MultiPoly(x, {(0,): 2, (1,): 1}))


class TestExpand:
    def test_first_coefficient_of_polyomino_family(self):
        assert expand(gf_polyomino(2), 1)[1] == pq({(2, 1): 1, (3, 2): 1})

    def test_denominator_one_returns_numerator_slices(self):
        v = ("x", "q")
        num = MultiPoly(v, {(1, 2): 5, (3, 0): -1})
        gf = RationalGF(num, MultiPoly.constant(v, 1))
        coeffs = expand(gf, 3)
        assert coeffs[1] == MultiPoly(("q",), {(2,): 5})
        assert coeffs[2].is_zero
        assert coeffs[3] == MultiPoly(("q",), {(0,): -1})

    def test_hamiltonian_total_fibonacci(self):
        assert expand_ints(gf_named_total("ham", 2), 4)[1:] == [2, 3, 5, 8]

    def test_expand_ints_requires_univariate(self):
        with pytest.raises(ValueError):
            expand_ints(gf_polyomino(2), 3)

    @given(small_polys(), small_polys(), small_polys(max_terms=3, max_exp=3))
    @settings(max_examples=30)
    def test_linearity(self, a, b, d):
        den = MultiPoly(("x",), {(0,): 1}) + MultiPoly(
            ("x",), {e: c for e, c in d.terms.items() if e != (0,)})
        ga = RationalGF(a, den)
        gb = RationalGF(b, den)
        gab = RationalGF(a + b, den)
        ca, cb, cab = expand(ga, 6), expand(gb, 6), expand(gab, 6)
        assert all(ca[n] + cb[n] == cab[n] for n in range(7))


class TestFamilyConstructors:
    def test_polyomino_coefficients(self):
        coeffs = expand(gf_polyomino(3), 3)
        assert coeffs[1] == pq({(2, 1): 1, (3, 2): 1})
        assert coeffs[3] == pq({(4, 3): 1, (5, 4): 3, (5, 5): 2, (6, 5): 1})
        assert expand(gf_polyomino(2), 2)[2] == pq({(3, 2): 1, (4, 3): 2})

    def test_graph_coefficients(self):
        coeffs = expand(gf_graph(3), 3)
        assert coeffs[1] == pq({(7, 6): 1, (4, 4): 1})
        assert coeffs[3] == pq({(16, 12): 1, (15, 11): 2, (13, 10): 3, (10, 8): 1})

    def test_degree_coefficients(self):
        v = ("q2", "q3", "q4")
        coeffs = expand(gf_degree(3), 3)
        assert coeffs[1] == MultiPoly(v, {(4, 2, 0): 1, (4, 0, 0): 1})
        assert coeffs[3] == MultiPoly(v, {
            (6, 4, 2): 1, (6, 2, 2): 1, (5, 4, 2): 2, (5, 4, 1): 2, (4, 4, 0): 1})

    def test_degree_x1_counts_two_words(self):
        for k in (2, 3, 5):
            c = expand(gf_degree(k), 1)[1]
            assert c.specialize({"q2": 1, "q3": 1, "q4": 1}).as_int() == 2

    def test_hamiltonian_coefficients(self):
        c2 = expand(gf_hamiltonian(3), 2)[2]
        assert c2.terms.get((0,), 0) == 1  # only the 2x2 block fails
        for k in (2, 4):
            coeffs = expand(gf_hamiltonian(k), 8)
            for n in range(1, 9):
                q1 = coeffs[n].specialize({"q": 1}).as_int()
                assert q1 == count_words(n, k)

    def test_k2_marks_every_graph_hamiltonian(self):
        coeffs = expand(gf_hamiltonian(2), 8)
        for n in range(1, 9):
            assert coeffs[n].terms.get((0,), 0) == 0
            assert coeffs[n].terms.get((1,), 0) == count_words(n, 2)

    def test_aux_at_one_recovers_counts(self):
        for k in (2, 3, 4):
            for gf in (gf_polyomino(k), gf_graph(k), gf_degree(k), gf_hamiltonian(k)):
                coeffs = expand(gf, 8)
                ones = {v: 1 for v in gf.aux_variables}
                for n in range(1, 9):
                    assert coeffs[n].specialize(ones).as_int() == count_words(n, k)

    def test_parameter_validation(self):
        for builder in (gf_polyomino, gf_graph, gf_degree, gf_hamiltonian):
            with pytest.raises(ValueError):
                builder(1)


class TestNamedTotals:
    def test_area_values(self):
        assert expand_ints(gf_named_total("area", 2), 2)[1:] == [3, 8]

    def test_deg3_first_value(self):
        assert expand_ints(gf_named_total("deg3", 2), 1)[1] == 2

    def test_unknown_name_rejected(self):
        with pytest.raises(ValueError):
            gf_named_total("girth", 2)

    def test_alternate_deg4_shares_numerator(self):
        assert gf_deg4_alternate(3).numerator == gf_named_total("deg4", 3).numerator
        assert gf_deg4_alternate(3).denominator != gf_named_total("deg4", 3).denominator


class TestTotalWeightSeries:
    def test_area_totals(self):
        assert total_weight_series(gf_polyomino(2), "q", 2)[1:] == [3, 8]

    def test_perimeter_total_length_one(self):
        assert total_weight_series(gf_polyomino(2), "p", 1)[1:] == [5]

    def test_absent_variable_gives_zeros(self):
        v = ("x", "q")
        gf = RationalGF(MultiPoly(v, {(1, 0): 1}),
                        MultiPoly(v, {(0, 0): 1, (1, 0): -1}))
        assert total_weight_series(gf, "q", 5) == [0] * 6

    def test_x_rejected(self):
        with pytest.raises(ValueError):
            total_weight_series(gf_polyomino(2), "x", 3)
        with pytest.raises(ValueError):
            total_weight_series(gf_polyomino(2), "q4", 3)
