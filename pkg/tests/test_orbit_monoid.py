import pytest

from ClanController.models.clan import Clan, PairKind
from ClanController.models.orbit_monoid import (
    COMPACT_IMAGINARY, NONCOMPACT_IMAGINARY, REAL, ROOT_TYPES, closed_clans, closed_orbit_dimension,
    closure_order, length_and_dimension, m_action, orbit_monoid, root_type, saturation,
)
from ClanController.models.pair_model import build_pair_model
from ClanController.utils.dot import as_dot
from CorrespondenceController.models.correspondence import diagram_data
from Service.utils.errors import InvalidInputError


def _clans(model, *texts):
    return frozenset(Clan.parse(t, model.family) for t in texts)


def test_saturation_of_the_base_orbit_at_the_first_root(a22):
    assert saturation(a22, '+-+-', 1) == _clans(a22, '+-+-', '-++-', '11+-')
    assert m_action(a22, '+-+-', 1) == Clan.parse('11+-')


def test_compact_root_leaves_the_orbit_alone(a22):
    assert saturation(a22, '++--', 1) == _clans(a22, '++--')
    assert root_type(a22, '++--', 1) == COMPACT_IMAGINARY


def test_root_types_in_a22(a22):
    assert root_type(a22, '+-+-', 1) == NONCOMPACT_IMAGINARY
    assert root_type(a22, '11+-', 1) == REAL


def test_long_root_saturation_in_c2(c2):
    assert saturation(c2, '1122', 2) == _clans(c2, '1122', '1212')
    assert m_action(c2, '1122', 2) == Clan.parse('1212', 'C')


@pytest.mark.parametrize('fixture', ['a11', 'a21', 'a22', 'c1', 'c2'])
def test_saturations_have_at_most_three_orbits_and_one_open_member(fixture, request):
    model = request.getfixturevalue(fixture)
    engine = orbit_monoid(model)
    for clan in model.clans:
        for s in range(1, model.rank + 1):
            members = engine.saturation(clan, s)
            assert clan in members
            assert 1 <= len(members) <= 3
            top = engine.m_action(clan, s)
            assert top in members
            assert engine.m_action(top, s) == top
            assert engine.root_type(clan, s) in ROOT_TYPES


def test_bad_root_index(a22):
    with pytest.raises(InvalidInputError):
        saturation(a22, '+-+-', 4)


def test_closed_orbits_are_the_sign_clans(a22, c2):
    assert {str(c) for c in closed_clans(a22)} == {'++--', '+-+-', '+--+', '-++-', '-+-+', '--++'}
    assert {str(c) for c in closed_clans(c2)} == {'++--', '+-+-', '-+-+', '--++'}


def test_closed_orbit_dimension():
    assert closed_orbit_dimension(PairKind('A', 2, 2)) == 2
    assert closed_orbit_dimension(PairKind('A', 3, 2)) == 4
    assert closed_orbit_dimension(PairKind('C', 2)) == 1


def test_dimensions(a22, c2):
    dims = length_and_dimension(a22)
    assert dims[Clan.parse('+-+-')] == (0, 2)
    assert dims[Clan.parse('1+-1')] == (3, 5)
    assert dims[Clan.parse('1221')] == (4, 6)
    c_dims = length_and_dimension(c2)
    assert c_dims[Clan.parse('+-+-', 'C')][1] == 1
    assert c_dims[Clan.parse('1221', 'C')][1] == 4


def test_closure_of_1_plus_minus_1(a22):
    graph = closure_order(a22)
    expected = _clans(
        a22, '1+-1', '1+1-', '+11-', '+1-1', '++--', '+-+-', '+--+', '+-11',
        '-++-', '-+-+', '-+11', '11+-', '11-+', '1122',
    )
    assert graph.closure(Clan.parse('1+-1')) == expected


def test_the_open_orbit_contains_everything(a22, c2):
    for model in (a22, c2):
        graph = closure_order(model)
        top = max(graph.nodes, key=lambda node: node[1])[0]
        assert graph.closure(top) == frozenset(model.clans)


def test_closure_order_is_reflexive_and_graded(a22):
    graph = closure_order(a22)
    for clan, length, _ in graph.nodes:
        assert graph.leq(clan, clan)
        for smaller in graph.closure(clan) - {clan}:
            assert graph.length(smaller) < length


def _edge_sets(data):
    return {tuple(e) for e in data['weakEdges']}, {tuple(e) for e in data['dashedEdges']}


def test_a22_diagram_edges(a22, a22_diagram):
    data = diagram_data(a22, tuple(a22_diagram['ordering']))
    assert len(data['nodes']) == a22_diagram['orbitCount']
    weak, dashed = _edge_sets(data)
    expected_weak, expected_dashed = _edge_sets(a22_diagram)
    assert weak == expected_weak
    assert dashed == expected_dashed
    assert set(data['boxed']) == set(a22_diagram['boxed'])


def test_c2_diagram_edges(c2, c2_diagram):
    data = diagram_data(c2, (2, 1))
    assert len(data['nodes']) == c2_diagram['orbitCount']
    weak, dashed = _edge_sets(data)
    expected_weak, expected_dashed = _edge_sets(c2_diagram)
    assert weak == expected_weak
    assert dashed == expected_dashed
    assert set(data['boxed']) == set(c2_diagram['boxed'])


def test_orbit_graph_dictionary(c2):
    body = closure_order(c2).to_dict()
    assert len(body['nodes']) == 11
    assert {'from': '1122', 'root': 2, 'to': '1212'} in body['weakEdges']
    assert ['1122', '1221'] in body['closurePairs']


def test_dot_output_marks_boxed_and_shadow_nodes(c2):
    graph = closure_order(c2)
    text = as_dot(graph, c2.kind, boxed=['1+-1'], shadow=['1212'])
    assert text.startswith('digraph "C:2" {')
    assert '"1122" -> "1212" [label="β"];' in text
    assert '"1122" -> "1+-1" [style=dashed];' in text
    assert '"1+-1" [label="1+-1", shape=box];' in text
    assert '"1212" [label="1212", shape=box, peripheries=2];' in text
    assert as_dot(graph, c2.kind) == as_dot(graph, c2.kind)


def test_dot_without_ordering_has_no_boxes(a22):
    assert 'shape=box' not in as_dot(closure_order(a22), a22.kind)


def test_different_seeds_give_the_same_order(a22):
    assert closure_order(a22, 0).closure_pairs == closure_order(a22, 7).closure_pairs


@pytest.mark.slow
@pytest.mark.parametrize('kind', [PairKind('A', 3, 2), PairKind('A', 3, 3), PairKind('C', 3)])
def test_closure_order_at_larger_ranks(kind):
    model = build_pair_model(kind)
    graph = closure_order(model)
    top = max(graph.nodes, key=lambda node: node[1])[0]
    assert graph.closure(top) == frozenset(model.clans)
