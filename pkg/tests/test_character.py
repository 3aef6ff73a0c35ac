import pytest
from hypothesis import given
from hypothesis import strategies as st

from catalania.character import (
    GradedCharacter,
    NegativeExponent,
    NotSymmetric,
    RankMismatch,
    SchurExpansion,
    eval_q1,
    flip_q,
    is_symmetric,
    monomial,
    qpoly_from_json,
    qpoly_to_json,
    schur_expand,
    schur_poly,
    twist_Lambda,
)
from catalania.lattice import Partition, partitions_up_to
from catalania.oracle import ssyt_schur


def x(*gamma, m=0, level=0, c=1):
    return monomial(gamma, m, level, c)


def test_level_adds_under_multiplication():
    assert (x(1, 0, level=1) * x(0, 1, level=2)).level == 3
    assert (x(1, 0) * x(0, 1)) == x(1, 1)
    with pytest.raises(RankMismatch):
        x(1, 0) + x(1, 0, 0)


def test_zero_ignores_level():
    assert GradedCharacter.zero(2, 0) == GradedCharacter.zero(2, 3)
    assert hash(GradedCharacter.zero(2, 0)) == hash(GradedCharacter.zero(2, 3))
    assert x(1, 0, level=0) != x(1, 0, level=1)


def test_twist_examples():
    assert twist_Lambda(GradedCharacter.one(3), 1, 1) == x(1, 0, 0, level=1)
    assert twist_Lambda(GradedCharacter.one(2), 0, 2) == x(2, 2, level=2)
    with pytest.raises(ValueError):
        twist_Lambda(GradedCharacter.one(2), 1, -1)


def test_flip_and_eval():
    f = x(1, 0, m=-2) + x(0, 1, m=1)
    assert flip_q(f) == x(1, 0, m=2) + x(0, 1, m=-1)
    assert eval_q1(f) == x(1, 0) + x(0, 1)


def test_symmetry_examples():
    assert is_symmetric(x(1, 0) + x(0, 1))
    assert not is_symmetric(x(1, 0) - x(0, 1))
    s11 = x(1, 1)
    s2 = x(2, 0, m=-1) + x(1, 1, m=-1) + x(0, 2, m=-1)
    assert is_symmetric(s11 + s2)


def test_schur_poly_examples():
    assert schur_poly((1,), 2) == x(1, 0) + x(0, 1)
    assert schur_poly((1, 1), 2) == x(1, 1)
    s21 = schur_poly((2, 1), 3)
    # 8 tableaux, 7 distinct monomials
    assert sum(s21.terms.values()) == 8
    assert len(s21) == 7
    assert s21.coeff((2, 1, 0)) == 1
    assert s21.coeff((1, 1, 1)) == 2
    assert s21 == ssyt_schur((2, 1), 3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_schur_poly_matches_tableaux(n):
    for mu in partitions_up_to(4, n):
        assert schur_poly(tuple(mu), n) == ssyt_schur(mu, n), mu


def test_schur_expand_examples():
    assert schur_expand(x(2, 0) + x(1, 1) + x(0, 2)) == {Partition((2,)): 1}
    square = (x(1, 0) + x(0, 1)) * (x(1, 0) + x(0, 1))
    assert schur_expand(square) == {Partition((2,)): 1, Partition((1, 1)): 1}
    f = x(1, 1) + x(2, 0, m=-1) + x(1, 1, m=-1) + x(0, 2, m=-1)
    exp = schur_expand(f)
    assert exp == {Partition((1, 1)): {0: 1}, Partition((2,)): {-1: 1}}
    assert exp.to_character(2) == f


def test_schur_expand_errors():
    with pytest.raises(NotSymmetric):
        schur_expand(x(1, 0))
    with pytest.raises(NegativeExponent):
        schur_expand(x(-1, -1))


schur_sums = st.integers(1, 3).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.dictionaries(
            st.sampled_from(list(partitions_up_to(3, n))),
            st.dictionaries(st.integers(-2, 2), st.integers(-3, 3).filter(bool), max_size=2),
            max_size=3,
        ),
    )
)


@given(schur_sums)
def test_schur_expand_round_trip(args):
    n, coeffs = args
    exp = SchurExpansion({mu: p for mu, p in coeffs.items() if p})
    assert schur_expand(exp.to_character(n)) == exp


characters = st.builds(
    lambda terms: GradedCharacter(2, terms, 0),
    st.dictionaries(
        st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2)),
        st.integers(-3, 3),
        max_size=4,
    ),
)


@given(characters, characters, characters)
def test_ring_laws(f, g, h):
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == GradedCharacter.zero(2)


@given(characters)
def test_json_round_trip(f):
    assert GradedCharacter.from_json(f.to_json()) == f
    assert flip_q(flip_q(f)) == f


def test_json_schema():
    data = (x(1, 0, m=-1, level=1) + x(0, 1, m=-1, level=1)).to_json()
    assert data["n"] == 2 and data["level"] == 1
    assert data["terms"][0] == {"x": [1, 0], "q": -1, "c": "1"}
    assert qpoly_from_json(qpoly_to_json({-1: 2, 3: 1})) == {-1: 2, 3: 1}
    assert list(qpoly_to_json({2: 1})) == ["2"]
