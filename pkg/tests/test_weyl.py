"""Weyl group enumeration: orders, lengths, words, and group laws."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gammaflag import root_system, weyl_group
from oracles import inversion_count, poincare_counts

FROZEN_ORDERS = {"A2": 6, "B2": 8, "G2": 12, "A3": 24, "E6": 51840}


@pytest.mark.parametrize("name,order", sorted(FROZEN_ORDERS.items()))
def test_group_order(name, order):
    rs = root_system(name)
    g = weyl_group(rs)
    assert g.order == order
    assert g.is_full
    product = 1
    for d in rs.degrees:
        product *= d
    assert g.order == product


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3", "B3"])
def test_length_counts_match_poincare_polynomial(name):
    rs = root_system(name)
    g = weyl_group(rs)
    expected = poincare_counts(rs.degrees)
    assert g.count_by_length() == {m: c for m, c in enumerate(expected)}
    assert g.longest_length == len(rs.positive_roots)


def test_e6_length_counts_prefix():
    g = weyl_group(root_system("E6"), max_length=3)
    counts = g.count_by_length()
    assert [counts[m] for m in range(4)] == [1, 6, 20, 50]
    assert not g.is_full


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3"])
def test_length_equals_inversion_count(name):
    g = weyl_group(root_system(name))
    for k in range(g.order):
        assert g.lengths[k] == inversion_count(g, k)


def test_a2_words_frozen():
    g = weyl_group(root_system("A2"))
    assert g.words == [(), (1,), (2,), (1, 2), (2, 1), (1, 2, 1)]


def test_words_are_length_then_lex_sorted_and_reduced():
    g = weyl_group(root_system("B2"))
    keys = [(len(w), w) for w in g.words]
    assert keys == sorted(keys)
    for k, w in enumerate(g.words):
        assert g.lengths[k] == len(w)
        assert g.index_of_word(w) == k


@given(st.sampled_from(["A2", "B2", "G2"]), st.data())
def test_group_laws(name, data):
    g = weyl_group(root_system(name))
    a = data.draw(st.integers(0, g.order - 1))
    b = data.draw(st.integers(0, g.order - 1))
    assert g.multiply(a, g.inverse(a)) == 0
    assert g.inverse(g.inverse(a)) == a
    ab = g.multiply(a, b)
    assert g.inverse(ab) == g.multiply(g.inverse(b), g.inverse(a))


@given(st.sampled_from(["A2", "B2", "G2"]),
       st.lists(st.integers(-3, 3), min_size=2, max_size=2).map(tuple),
       st.data())
def test_action_is_a_homomorphism(name, w, data):
    g = weyl_group(root_system(name))
    a = data.draw(st.integers(0, g.order - 1))
    b = data.draw(st.integers(0, g.order - 1))
    # convention: act(multiply(a, b), w) applies b first
    assert g.act(g.multiply(a, b), w) == g.act(a, g.act(b, w))
    assert g.act(0, w) == w


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3"])
def test_descent_definitions_agree(name):
    g = weyl_group(root_system(name))
    for k in range(g.order):
        assert g.descent_set(k) == g.descent_set_by_roots(k)
    assert g.descent_set(0) == frozenset()
    full = weyl_group(root_system(name))
    longest = full.order - 1
    assert full.descent_set(longest) == frozenset(
        range(1, full.rs.rank + 1))


def test_right_multiplication_table():
    g = weyl_group(root_system("A2"))
    for k in range(g.order):
        for i in range(1, 3):
            t = g.right_mul(k, i)
            assert abs(g.lengths[t] - g.lengths[k]) == 1
            assert g.right_mul(t, i) == k


def test_reflection_indices_are_involutions():
    g = weyl_group(root_system("B2"))
    for root in g.rs.positive_roots:
        k = g.reflection_index(root)
        assert g.multiply(k, k) == 0
        assert g.act(k, root.omega_coords) == tuple(
            -x for x in root.omega_coords)


def test_element_wrapper_round_trip():
    g = weyl_group(root_system("A2"))
    e = g.element(3)
    assert e.word == (1, 2)
    assert e.length == 2
    assert (e * e.inverse()) == g.identity()
    assert e.act((1, 0)) == g.act(3, (1, 0))


def test_full_enumeration_guard():
    for name in ("E7", "E8"):
        rs = root_system(name)
        with pytest.raises(ValueError) as exc:
            weyl_group(rs)
        msg = str(exc.value)
        assert "refusing full enumeration" in msg
        assert str(rs.weyl_order) in msg
        assert "max_length" in msg


def test_truncated_slice_of_e7():
    g = weyl_group(root_system("E7"), max_length=2)
    counts = g.count_by_length()
    assert counts[0] == 1
    assert counts[1] == 7
    assert not g.is_full
    assert g.longest_length == 2


def test_truncation_at_longest_length_is_full():
    rs = root_system("A2")
    g = weyl_group(rs, max_length=3)
    assert g.is_full
    assert g.order == 6
