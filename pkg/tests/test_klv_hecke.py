import pytest

from ClanController.models.clan import Clan
from ClanController.models.orbit_monoid import COMPACT_IMAGINARY, closure_order, orbit_monoid
from CorrespondenceController.models.correspondence import all_orderings
from KLVController.models.klv_hecke import (
    HeckeModuleElement, c_matrix_K, compare_with_torus, hecke_operator, klv_polynomial, klv_polynomials,
    klv_table_rows, restricted_c_matrix_by_subset, verify_boxed_klv,
)
from KLVController.models.qpolynomial import ONE, Q, ZERO
from RootDatumController.models.root_datum import GroupKind, build_root_datum
from Service.utils.errors import InvalidInputError, NotImplementedForKindError
from TorusController.models.torus_orbits import c_matrix_T_trivial


def _t(model, *roots, start):
    element = HeckeModuleElement.basis(start)
    for s in reversed(roots):
        element = hecke_operator(model, s, element)
    return element


@pytest.mark.parametrize('fixture', ['a11', 'a21', 'a22'])
def test_quadratic_relation(fixture, request):
    model = request.getfixturevalue(fixture)
    for clan in model.clans:
        for s in range(1, model.rank + 1):
            basis = HeckeModuleElement.basis(clan)
            once = hecke_operator(model, s, basis)
            twice = hecke_operator(model, s, once)
            assert twice == once.scaled(Q - 1) + basis.scaled(Q)


@pytest.mark.slow
def test_quadratic_relation_for_a32(a32):
    for clan in a32.clans:
        for s in range(1, a32.rank + 1):
            basis = HeckeModuleElement.basis(clan)
            once = hecke_operator(a32, s, basis)
            assert hecke_operator(a32, s, once) == once.scaled(Q - 1) + basis.scaled(Q)


def _check_braid_relations(model):
    for clan in model.clans:
        for s in range(1, model.rank):
            t = s + 1
            assert _t(model, s, t, s, start=clan) == _t(model, t, s, t, start=clan)
        for s in range(1, model.rank + 1):
            for t in range(s + 2, model.rank + 1):
                assert _t(model, s, t, start=clan) == _t(model, t, s, start=clan)


@pytest.mark.parametrize('fixture', ['a21', 'a22'])
def test_braid_relations(fixture, request):
    _check_braid_relations(request.getfixturevalue(fixture))


@pytest.mark.slow
def test_braid_relations_for_a32(a32):
    _check_braid_relations(a32)


def test_compact_roots_act_by_q(a22):
    engine = orbit_monoid(a22)
    for clan in a22.clans:
        for s in range(1, a22.rank + 1):
            if engine.root_type(clan, s) == COMPACT_IMAGINARY:
                image = hecke_operator(a22, s, HeckeModuleElement.basis(clan))
                assert image == HeckeModuleElement({clan: Q})


def test_hecke_module_element_drops_zero_terms():
    element = HeckeModuleElement({Clan.parse('+-'): ZERO, Clan.parse('11'): ONE})
    assert element.support() == frozenset({Clan.parse('11')})
    assert element.to_dict() == {'11': '1'}


def test_unknown_clans_are_rejected(a22):
    with pytest.raises(InvalidInputError):
        hecke_operator(a22, 1, HeckeModuleElement.basis(Clan.parse('+-')))


def test_diagonal_polynomials_are_one(a22):
    for clan in a22.clans:
        assert klv_polynomial(a22, clan, clan) == ONE


def test_polynomials_vanish_outside_the_closure(a22):
    assert klv_polynomial(a22, '1221', '+-+-') == ZERO
    graph = closure_order(a22)
    for psi, gamma in klv_polynomials(a22):
        assert graph.leq(psi, gamma)


@pytest.mark.parametrize('psi,gamma', [('++--', '1+-1'), ('+--+', '1212'), ('-++-', '1212')])
def test_nontrivial_polynomials(a22, psi, gamma):
    value = klv_polynomial(a22, psi, gamma)
    assert value.degree >= 1
    assert value.coefficient(0) == 1
    assert value.evaluate(1) >= 2


@pytest.mark.parametrize('ordering', all_orderings(3))
def test_polynomials_between_qs_are_one(a22, ordering):
    report = verify_boxed_klv(a22, ordering)
    assert report['passed'] == report['total'] == 64


def test_c_matrix_has_ones_on_the_diagonal(a22):
    matrix = c_matrix_K(a22)
    assert len(matrix.labels) == 21
    assert matrix.is_unitriangular()
    for label in matrix.labels:
        assert matrix.entry(label, label) == 1


def test_restricted_matrix_is_the_torus_matrix(a22):
    restricted = restricted_c_matrix_by_subset(a22, (2, 1, 3))
    torus = c_matrix_T_trivial(build_root_datum(GroupKind('GL', 4)))
    assert restricted.labels == torus.labels
    assert restricted.entries == torus.entries


def test_restricted_matrix_does_not_depend_on_the_ordering(a22):
    matrices = {restricted_c_matrix_by_subset(a22, o).entries for o in all_orderings(3)}
    assert len(matrices) == 1


def test_comparison_with_the_torus(a22, a11):
    report = compare_with_torus(a22, (2, 1, 3))
    assert report['passed'] == report['total'] == 64
    assert report['mismatches'] == []
    assert compare_with_torus(a11, (1,))['passed'] == 4


@pytest.mark.slow
def test_comparison_with_the_torus_for_every_a32_ordering(a32):
    for ordering in all_orderings(a32.rank):
        report = compare_with_torus(a32, ordering)
        assert report['passed'] == report['total'] == 256, ordering
        assert report['mismatches'] == []


@pytest.mark.parametrize('fixture', ['a11', 'a21', 'a22'])
def test_constant_term_is_one_on_every_closure_pair(fixture, request):
    model = request.getfixturevalue(fixture)
    for smaller, larger in closure_order(model).closure_pairs:
        assert klv_polynomial(model, smaller, larger).coefficient(0) == 1


def test_family_c_is_not_implemented(c2):
    with pytest.raises(NotImplementedForKindError):
        klv_polynomials(c2)
    with pytest.raises(NotImplementedForKindError):
        c_matrix_K(c2)


def test_table_rows(a11):
    rows = klv_table_rows(a11)
    assert ('+-', '11', '1', '1') in rows
    assert ('-+', '11', '1', '1') in rows
    assert len(rows) == 5


@pytest.mark.slow
def test_boxed_polynomials_for_a32(a32):
    for ordering in all_orderings(a32.rank):
        report = verify_boxed_klv(a32, ordering)
        assert report['passed'] == report['total']
