import pytest
from hypothesis import given, settings, strategies as st

from ClanController.models.clan import Clan, PairKind, enumerate_clans
from RootDatumController.models.root_datum import GroupKind
from Service.utils.errors import InvalidInputError, UnsupportedKindError


def test_parse_accepts_unicode_minus_signs():
    assert Clan.parse('1+−1') == Clan.parse('1+-1')
    assert Clan.parse('+–') == Clan.parse('+-')


def test_parse_canonicalises_pair_labels():
    clan = Clan.parse('2112')
    assert str(clan) == '1221'
    assert clan.pairs() == [(1, 4), (2, 3)]
    assert clan.partner(2) == 3
    assert clan.partner(1) == 4


@pytest.mark.parametrize('text', ['12+', 'x+', '1+-', '', '0+0'])
def test_parse_rejects_malformed_clans(text):
    with pytest.raises(InvalidInputError):
        Clan.parse(text)


def test_signature_counts_pairs_on_both_sides():
    assert Clan.parse('1+-1').signature() == (2, 2)
    assert Clan.parse('++-').signature() == (2, 1)


def test_type_c_clans_must_be_symmetric():
    assert Clan.parse('1+-1', 'C').is_symmetric()
    with pytest.raises(InvalidInputError):
        Clan.parse('+--+', 'C')
    with pytest.raises(InvalidInputError):
        Clan.parse('+-+', 'C')


@pytest.mark.parametrize('kind,count', [
    (PairKind('A', 1, 1), 3),
    (PairKind('A', 2, 1), 6),
    (PairKind('A', 2, 2), 21),
    (PairKind('C', 1), 3),
    (PairKind('C', 2), 11),
])
def test_number_of_clans(kind, count):
    assert len(enumerate_clans(kind)) == count


def test_enumeration_is_sorted_and_has_the_right_signature():
    clans = enumerate_clans(PairKind('A', 2, 2))
    assert [str(c) for c in clans] == sorted(str(c) for c in clans)
    assert all(c.signature() == (2, 2) for c in clans)


def test_pair_kinds():
    kind = PairKind('A', 2, 2)
    assert str(kind) == 'A:2,2'
    assert kind.rank == 3
    assert kind.group_kind == GroupKind('GL', 4)
    c2 = PairKind('C', 2)
    assert str(c2) == 'C:2'
    assert c2.ambient_dim == 4
    assert c2.group_kind == GroupKind('Sp', 2)


@pytest.mark.parametrize('family,p,q', [('A', 1, 2), ('A', 3, 1), ('C', 0, 0), ('B', 2, 0)])
def test_unsupported_pairs(family, p, q):
    with pytest.raises(UnsupportedKindError):
        PairKind(family, p, q)


@settings(max_examples=200, derandomize=True, deadline=None)
@given(st.sampled_from(enumerate_clans(PairKind('A', 3, 3))), st.permutations([1, 2, 3]))
def test_relabelling_pairs_gives_the_same_clan(clan, relabel):
    symbols = tuple(s if s in ('+', '-') else relabel[s - 1] for s in clan.symbols)
    assert Clan('A', symbols) == clan
