from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from demazure.embedding import embed, inner_product
from demazure.root_datum import CartanType, RootDatumError, build_root_datum, as_coweight
from demazure.weyl import weyl_group

ALL_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5",
             "E6", "E7", "E8", "F4", "G2"]
POSITIVE_COUNT = {"A1": 1, "A2": 3, "A3": 6, "A4": 10, "B2": 4, "B3": 9, "B4": 16, "C2": 4,
                  "C3": 9, "C4": 16, "D4": 12, "D5": 20, "E6": 36, "E7": 63, "E8": 120,
                  "F4": 24, "G2": 6}


class TestCartanType:
    @pytest.mark.parametrize("text", ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "H3", "X"])
    def test_inadmissible(self, text):
        with pytest.raises(RootDatumError):
            CartanType.parse(text)

    def test_parse(self):
        assert CartanType.parse("b3") == CartanType("B", 3)
        assert str(CartanType.parse("E_6")) == "E6"


class TestRootDatum:
    def test_a1(self):
        d = build_root_datum("A1")
        assert d.cartan_matrix == ((2,),)
        assert [r.simple_coords for r in d.positive_roots] == [(1,)]

    def test_g2_matrix(self):
        assert build_root_datum("G2").cartan_matrix == ((2, -1), (-3, 2))

    @pytest.mark.parametrize("t", ALL_TYPES)
    def test_matrix_shape_and_root_count(self, t):
        d = build_root_datum(t)
        a = d.cartan_matrix
        assert all(a[i][i] == 2 for i in range(d.rank))
        assert all(a[i][j] <= 0 for i in range(d.rank) for j in range(d.rank) if i != j)
        assert len(d.positive_roots) == POSITIVE_COUNT[t]
        for r in d.positive_roots:
            assert r.is_positive() and not r.is_negative()
            assert d.weight_from_simple(r.simple_coords) == r.weight

    @pytest.mark.parametrize("t", ALL_TYPES)
    def test_pairing_reproduces_cartan(self, t):
        d = build_root_datum(t)
        for i in d.indices:
            for j in d.indices:
                assert d.pair(d.simple_root(i), d.simple_coroot(j)) == d.cartan_matrix[i - 1][j - 1]
                assert d.pair(d.fundamental_weight(i), d.simple_coroot(j)) == int(i == j)
                assert d.pair(d.simple_root(i), d.fundamental_coweight(j)) == int(i == j)

    @pytest.mark.parametrize("t", ["A3", "B3", "C3", "D4", "G2", "F4"])
    def test_simple_reflections_permute_positive_roots(self, t):
        d = build_root_datum(t)
        pos = {r.weight for r in d.positive_roots}
        for i in d.indices:
            alpha = d.simple_root(i)
            image = {d.reflect_weight(i, r) for r in pos - {alpha}}
            assert image == pos - {alpha}
            assert d.reflect_weight(i, alpha) == tuple(-c for c in alpha)

    @pytest.mark.parametrize("t", ["A3", "B3", "C3", "D4", "G2", "F4"])
    def test_coroots_pair_to_two(self, t):
        d = build_root_datum(t)
        for r in d.positive_roots:
            assert d.pair(r.weight, r.coroot) == 2

    def test_b3_rho(self):
        d = build_root_datum("B3")
        assert d.pair(d.rho, d.simple_coroot(2)) == 1
        assert d.simple_coords(d.rho) == (Fraction(5, 2), 4, Fraction(9, 2))
        assert embed(d, d.rho) == (Fraction(5, 2), Fraction(3, 2), Fraction(1, 2))

    def test_dimension_mismatch(self):
        d = build_root_datum("A2")
        with pytest.raises(RootDatumError):
            d.pair((1, 0, 0), (1, 0))
        with pytest.raises(RootDatumError):
            d.reflect_weight(3, (1, 0))

    def test_reflection_examples(self):
        d = build_root_datum("A2")
        assert d.reflect_weight(1, (1, 0)) == (-1, 1)
        assert d.reflect_weight(1, (0, 3)) == (0, 3)
        assert d.reflect_coweight(1, as_coweight((1, 0))) == (-1, 1)  # x_1 - alpha_1^vee
        assert d.reflect_coweight(2, as_coweight((1, 0))) == (1, 0)

    def test_json_round_trip(self):
        from demazure.root_datum import RootDatum
        d = build_root_datum("C3")
        assert RootDatum.from_dict(__import__("json").loads(d.to_json())) == d


class TestLevi:
    def test_strictly_dominant(self):
        d = build_root_datum("B3")
        assert d.levi_subsystem((1, 2, 1)) == ((), ())

    def test_zero(self):
        d = build_root_datum("B3")
        J, roots = d.levi_subsystem((0, 0, 0))
        assert J == (1, 2, 3) and len(roots) == 18

    def test_b3_x1_is_b2(self):
        d = build_root_datum("B3")
        J, roots = d.levi_subsystem((1, 0, 0))
        assert J == (2, 3)
        assert len(roots) == 8  # type B2
        assert {r.simple_coords for r in roots if r.is_positive()} == {
            (0, 1, 0), (0, 0, 1), (0, 1, 1), (0, 1, 2)}

    def test_rejects_non_dominant(self):
        with pytest.raises(RootDatumError):
            build_root_datum("A2").levi_subsystem((1, -1))


@pytest.mark.parametrize("t", ["A2", "A3", "B2", "B3", "C3", "D4", "G2"])
def test_embedding_reproduces_cartan(t):
    d = build_root_datum(t)
    for i in d.indices:
        for j in d.indices:
            ai, aj = d.simple_root(i), d.simple_root(j)
            assert 2 * inner_product(d, ai, aj) / inner_product(d, aj, aj) == d.cartan_matrix[i - 1][j - 1]


weights3 = st.tuples(*[st.integers(-6, 6)] * 3)
coweights3 = st.tuples(*[st.fractions(-4, 4, max_denominator=3)] * 3)


@settings(max_examples=200, deadline=None)
@given(weights3, coweights3, st.lists(st.integers(1, 3), max_size=8))
def test_pairing_is_w_invariant(mu, eta, word):
    d = build_root_datum("B3")
    v = weyl_group(d).from_word(word)
    assert d.pair(v.act(mu), v.act_coweight(eta)) == d.pair(mu, eta)


@settings(max_examples=200, deadline=None)
@given(weights3, coweights3, st.integers(1, 3))
def test_reflections_are_adjoint_involutions(mu, eta, i):
    d = build_root_datum("C3")
    assert d.reflect_weight(i, d.reflect_weight(i, mu)) == mu
    assert d.reflect_coweight(i, d.reflect_coweight(i, eta)) == eta
    assert d.pair(mu, d.reflect_coweight(i, eta)) == d.pair(d.reflect_weight(i, mu), eta)
    assert (d.reflect_weight(i, mu) == mu) == (mu[i - 1] == 0)
