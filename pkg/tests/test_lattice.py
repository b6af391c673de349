import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix

from RootDatumController.models.lattice import (
    FiniteAbelianGroup, cokernel_torsion, diagonal, smith_normal_form, unimodular_inverse,
)
from Service.utils.errors import InvalidInputError

small_ints = st.integers(min_value=-12, max_value=12)


@st.composite
def integer_matrices(draw):
    rows = draw(st.integers(min_value=1, max_value=4))
    cols = draw(st.integers(min_value=1, max_value=4))
    return [[draw(small_ints) for _ in range(cols)] for _ in range(rows)]


def test_smith_normal_form_of_diagonal_two_three():
    d, u, v = smith_normal_form([[2, 0], [0, 3]])
    assert [abs(x) for x in diagonal(d)] == [1, 6]


def test_smith_normal_form_of_empty_matrix():
    d, u, v = smith_normal_form([])
    assert d == [] and u == [] and v == []


@settings(max_examples=200, derandomize=True, deadline=None)
@given(integer_matrices())
def test_smith_normal_form_is_a_unimodular_diagonalisation(rows):
    d, u, v = smith_normal_form(rows)
    assert Matrix(u) * Matrix(rows) * Matrix(v) == Matrix(d)
    assert abs(Matrix(u).det()) == 1
    assert abs(Matrix(v).det()) == 1
    for i, row in enumerate(d):
        for j, value in enumerate(row):
            if i != j:
                assert value == 0


@settings(max_examples=200, derandomize=True, deadline=None)
@given(integer_matrices())
def test_torsion_order_is_product_of_nonzero_diagonal_entries(rows):
    d, _, _ = smith_normal_form(rows)
    entries = [abs(x) for x in diagonal(d) if x]
    group = FiniteAbelianGroup.from_diagonal(entries)
    product = 1
    for e in entries:
        product *= e
    assert group.order == product


def test_from_diagonal_normalises_to_divisibility_chain():
    assert FiniteAbelianGroup.from_diagonal([2, 3]).invariant_factors == (6,)
    assert FiniteAbelianGroup.from_diagonal([4, 2, 1, 0]).invariant_factors == (2, 4)
    assert FiniteAbelianGroup.from_diagonal([1, 1]).is_trivial


def test_invalid_invariant_factors_are_rejected():
    with pytest.raises(InvalidInputError):
        FiniteAbelianGroup((4, 2))
    with pytest.raises(InvalidInputError):
        FiniteAbelianGroup((1,))


def test_group_properties_and_names():
    group = FiniteAbelianGroup((2, 4))
    assert group.order == 8
    assert not group.is_cyclic
    assert not group.is_elementary_two_group
    assert str(group) == 'Z/2 x Z/4'
    assert str(FiniteAbelianGroup()) == '1'
    assert FiniteAbelianGroup((2, 2)).is_elementary_two_group


def test_character_indices_round_trip_through_tuples():
    group = FiniteAbelianGroup((2, 6))
    for index in group.characters():
        assert group.character_index(group.character_tuple(index)) == index
    assert len(group.all_character_tuples()) == group.order
    with pytest.raises(InvalidInputError):
        group.character_tuple(12)


def test_cokernel_of_type_a_simple_roots_in_sl4_lattice():
    # simple roots of SL(4) written in the weight lattice basis are the Cartan rows
    columns = [(2, -1, 0), (-1, 2, -1), (0, -1, 2)]
    assert cokernel_torsion(columns, 3).invariant_factors == (4,)


def test_cokernel_of_nothing_is_trivial():
    assert cokernel_torsion([], 3).is_trivial


def test_unimodular_inverse():
    rows = [[2, 1], [1, 1]]
    inverse = unimodular_inverse(rows)
    assert Matrix(rows) * Matrix(inverse) == Matrix.eye(2)
