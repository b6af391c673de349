"""The orbits Q_S, the dimension and closure laws, A_K data and the parameter map Phi."""
import logging
from dataclasses import dataclass, field
from itertools import permutations

from ClanController.models.orbit_monoid import closure_order, length_and_dimension, orbit_monoid
from ClanController.models.pair_model import check_clan, epsilon_flag, identify_orbit
from RootDatumController.models.lattice import FiniteAbelianGroup
from RootDatumController.models.root_datum import build_root_datum, root_name
from Service.utils.errors import (
    ConsistencyError, DomainError, InvalidInputError, NotImplementedForKindError,
)
from TorusController.models.torus_orbits import (
    SimpleSubset, TorusParameter, all_subsets, component_group_AT, subset_label,
)

logger = logging.getLogger(__name__)

Z2 = FiniteAbelianGroup((2,))


def all_orderings(rank):
    """Every ordering of 1..rank, lexicographically."""
    return [tuple(p) for p in permutations(range(1, rank + 1))]


def _check_ordering(model, ordering):
    ordering = tuple(int(i) for i in ordering)
    if sorted(ordering) != list(range(1, model.rank + 1)):
        raise InvalidInputError(f"Ordering {list(ordering)} is not a permutation of 1..{model.rank}")
    return ordering


@dataclass(frozen=True)
class QSAssignment:
    """
    The orbits Q_S for one ordering

    Attributes:
        ordering (tuple): Ordering of the simple roots
        table (dict): frozenset S -> clan from the monoid product
        epsilon (dict): frozenset S -> clan of epsilon(x_S)
        consistency (dict): frozenset S -> whether the two computations agree
    """

    ordering: tuple
    table: dict = field(compare=False)
    epsilon: dict = field(compare=False)
    consistency: dict = field(compare=False)

    @property
    def consistent(self):
        return all(self.consistency.values())

    def subset_of(self, clan):
        for members, value in self.table.items():
            if value == clan:
                return members
        return None

    @property
    def top(self):
        return self.table[frozenset(self.ordering)]


@dataclass(frozen=True)
class KParameter:
    """An orbit together with a character index of its component group (0 = trivial)."""

    clan: object
    character: int = 0

    def to_dict(self):
        return {'clan': str(self.clan), 'character': self.character}


def base_clan(model):
    return model.base_clan


def monoid_product(model, subset, seed=0):
    """m(alpha_{j_s}) ... m(alpha_{j_1}) Q_empty with the first root of S applied first."""
    engine = orbit_monoid(model, seed)
    clan = base_clan(model)
    for s in subset.ordered_members:
        clan = engine.m_action(clan, s)
    return clan


def orbit_QS(model, ordering, members, seed=0):
    """
    The orbit Q_S, computed by the monoid action and by epsilon(x_S)

    Args:
        model (SymmetricPairModel): The pair
        ordering (tuple): Ordering of the simple roots
        members (iterable): The subset S
        seed (int): Pencil seed

    Returns:
        Clan: Q_S

    Raises:
        ConsistencyError: The two computations disagree
    """
    ordering = _check_ordering(model, ordering)
    subset = SimpleSubset(frozenset(members), ordering)
    by_monoid = monoid_product(model, subset, seed)
    by_epsilon = identify_orbit(model, epsilon_flag(model, subset))
    if by_monoid != by_epsilon:
        raise ConsistencyError(
            f"Q_S for S={subset.label} differs: monoid {by_monoid}, epsilon {by_epsilon}",
            {'ordering': list(ordering)},
        )
    return by_monoid


def qs_assignment(model, ordering, seed=0):
    """
    Q_S for every subset S, with the monoid/epsilon agreement recorded per subset

    Args:
        model (SymmetricPairModel): The pair
        ordering (tuple): Ordering of the simple roots
        seed (int): Pencil seed

    Returns:
        QSAssignment: Table and consistency flags
    """
    ordering = _check_ordering(model, ordering)
    table, epsilon, consistency = {}, {}, {}
    for members in all_subsets(model.rank):
        subset = SimpleSubset(members, ordering)
        table[members] = monoid_product(model, subset, seed)
        epsilon[members] = identify_orbit(model, epsilon_flag(model, subset))
        consistency[members] = table[members] == epsilon[members]
        if not consistency[members]:
            logger.warning("Q_S mismatch for S=%s ordering=%s", subset.label, ordering)
    return QSAssignment(ordering, table, epsilon, consistency)


def _subset_name(model, members):
    names = [root_name(model.kind.cartan_type, model.rank, i) for i in sorted(members)]
    return '{' + ','.join(names) + '}'


def verify_dimension_formula(model, ordering, seed=0, assignment=None):
    """
    Check dim Q_S = dim Q_empty + |S| for every subset

    Args:
        assignment (QSAssignment): Reuse an assignment already built for this ordering

    Returns:
        dict: {'ordering', 'entries': [...], 'passed', 'total'}
    """
    assignment = assignment or qs_assignment(model, ordering, seed)
    dims = length_and_dimension(model, seed)
    base = dims[base_clan(model)][1]
    entries = []
    for members, clan in assignment.table.items():
        expected = base + len(members)
        entries.append({
            'S': sorted(members),
            'name': _subset_name(model, members),
            'clan': str(clan),
            'dim': dims[clan][1],
            'dimExpected': expected,
            'pass': dims[clan][1] == expected,
        })
    passed = sum(e['pass'] for e in entries)
    return {'ordering': list(assignment.ordering), 'entries': entries, 'passed': passed, 'total': len(entries)}


def verify_closure_iff(model, ordering, seed=0, assignment=None):
    """
    Check Q_{S'} in closure(Q_S) iff S' is contained in S, for all ordered pairs

    Args:
        assignment (QSAssignment): Reuse an assignment already built for this ordering

    Returns:
        dict: {'ordering', 'passed', 'total', 'failures': [...], 'perSubset': {label: count}}
    """
    assignment = assignment or qs_assignment(model, ordering, seed)
    graph = closure_order(model, seed)
    passed, total, failures = 0, 0, []
    per_subset = {}
    for big, big_clan in assignment.table.items():
        count = 0
        for small, small_clan in assignment.table.items():
            total += 1
            ok = graph.leq(small_clan, big_clan) == (small <= big)
            if ok:
                passed += 1
                count += 1
            else:
                failures.append({'S_prime': sorted(small), 'S': sorted(big)})
        per_subset[subset_label(big)] = count
    return {
        'ordering': list(assignment.ordering),
        'passed': passed,
        'total': total,
        'failures': failures,
        'perSubset': per_subset,
    }


def _ak_rule(family, n, ordering, members):
    if family == 'A':
        return FiniteAbelianGroup()
    beta = n
    if beta not in members:
        return FiniteAbelianGroup()
    if n == 1:
        return Z2
    alpha = n - 1
    if alpha not in members or ordering.index(beta) < ordering.index(alpha):
        return Z2
    return FiniteAbelianGroup()


def ak_of_QS(model, ordering, members):
    """
    Component group A_K(epsilon(x_S)) of the orbit Q_S

    Family A: trivial. Family C: Z/2 iff beta is in S and, when alpha is also in S,
    beta precedes alpha in the ordering.

    Args:
        model (SymmetricPairModel): The pair
        ordering (tuple): Ordering of the simple roots
        members (iterable): S

    Returns:
        FiniteAbelianGroup: A_K
    """
    ordering = _check_ordering(model, ordering)
    members = frozenset(members)
    if not members <= set(ordering):
        raise InvalidInputError(f"Subset {sorted(members)} outside 1..{model.rank}")
    return _ak_rule(model.family, model.kind.n, ordering, members)


def ak_of_clan(model, ordering, clan, seed=0):
    """
    A_K for an orbit given by its clan, defined only on the Q_S

    Raises:
        DomainError: The clan is not Q_S for this ordering
    """
    clan = check_clan(model, clan)
    members = qs_assignment(model, ordering, seed).subset_of(clan)
    if members is None:
        raise DomainError(f"'{clan}' is not an orbit Q_S for ordering {list(ordering)}")
    return ak_of_QS(model, ordering, members)


def _pull_back(ak_group, at_group, character):
    if ak_group.order == 1:
        return 0
    if ak_group.invariant_factors != at_group.invariant_factors:
        raise DomainError(f"No character pull-back from {ak_group} to {at_group}")
    return character


def phi_map(model, ordering, seed=0):
    """
    The parameter map Phi on parameters supported on the Q_S

    Args:
        model (SymmetricPairModel): The pair
        ordering (tuple): Ordering of the simple roots
        seed (int): Pencil seed

    Returns:
        dict: KParameter -> TorusParameter
    """
    assignment = qs_assignment(model, ordering, seed)
    datum = build_root_datum(model.kind.group_kind)
    mapping = {}
    for members, clan in assignment.table.items():
        subset = SimpleSubset(members, assignment.ordering)
        ak_group = ak_of_QS(model, assignment.ordering, members)
        at_group = component_group_AT(datum, subset)
        for character in ak_group.characters():
            target = _pull_back(ak_group, at_group, character)
            mapping[KParameter(clan, character)] = TorusParameter(subset, target)
    return mapping


def phi_parameter(model, ordering, parameter, seed=0):
    """Phi of a single parameter; DomainError outside the Q_S or for invalid characters."""
    mapping = phi_map(model, ordering, seed)
    try:
        return mapping[parameter]
    except KeyError:
        raise DomainError(f"Parameter {parameter.to_dict()} is outside the domain of Phi")


@dataclass(frozen=True)
class PhiVerdict:
    surjective: bool
    witnesses: tuple = ()

    def to_dict(self):
        return {'surjective': self.surjective, 'witnesses': list(self.witnesses)}


def phi_surjectivity(kind, ordering=None):
    """
    Whether Phi reaches every torus parameter

    GL: always. SL(n): fails where A_T(x_S) is not an elementary 2-group, since A_K is.
    Sp(n): fails where |A_T(x_S)| > |A_K(epsilon(x_S))|.

    Args:
        kind (GroupKind): GL, SL or Sp
        ordering (tuple): Ordering of the simple roots (defaults to 1..r)

    Returns:
        PhiVerdict: Verdict and every failing subset, largest first

    Raises:
        NotImplementedForKindError: Spin and SO kinds
    """
    if kind.family not in ('GL', 'SL', 'Sp'):
        raise NotImplementedForKindError(f"Phi surjectivity is not implemented for {kind}")
    datum = build_root_datum(kind)
    r = datum.rank
    ordering = tuple(int(i) for i in ordering) if ordering else tuple(range(1, r + 1))
    if sorted(ordering) != list(range(1, r + 1)):
        raise InvalidInputError(f"Ordering {list(ordering)} is not a permutation of 1..{r}")
    if kind.family == 'GL':
        return PhiVerdict(True)

    subsets = sorted(all_subsets(r), key=lambda s: (-len(s), sorted(s)))
    witnesses = []
    for members in subsets:
        at_group = component_group_AT(datum, SimpleSubset(members, ordering))
        if kind.family == 'SL':
            failing = not at_group.is_elementary_two_group
            ak_order = None
        else:
            ak_group = _ak_rule('C', kind.n, ordering, members)
            failing = at_group.order > ak_group.order
            ak_order = ak_group.order
        if failing:
            witnesses.append({
                'S': sorted(members),
                'AT': str(at_group),
                'ATOrder': at_group.order,
                'AKOrder': ak_order,
            })
    logger.debug("Phi surjectivity for %s ordering %s: %d witnesses", kind, ordering, len(witnesses))
    return PhiVerdict(not witnesses, tuple(witnesses))


def correspondence_report(model, ordering, seed=0):
    """
    JSON report { ordering, entries: [ { S, clan, dim, dimExpected, closurePassCount } ],
    phiSurjective, witnesses } plus the consistency flags
    """
    ordering = _check_ordering(model, ordering)
    assignment = qs_assignment(model, ordering, seed)
    dimension = verify_dimension_formula(model, ordering, seed, assignment)
    closure = verify_closure_iff(model, ordering, seed, assignment)
    verdict = phi_surjectivity(model.kind.group_kind, ordering)
    entries = []
    for entry in dimension['entries']:
        members = frozenset(entry['S'])
        entries.append({
            'S': entry['S'],
            'clan': entry['clan'],
            'dim': entry['dim'],
            'dimExpected': entry['dimExpected'],
            'closurePassCount': closure['perSubset'][subset_label(members)],
            'consistent': assignment.consistency[members],
        })
    injective = len(set(assignment.table.values())) == len(assignment.table)
    return {
        'ordering': list(ordering),
        'entries': entries,
        'dimensionPassed': dimension['passed'] == dimension['total'],
        'closurePassed': closure['passed'] == closure['total'],
        'closureFailures': closure['failures'],
        'qsConsistent': assignment.consistent,
        'qsInjective': injective,
        'phiSurjective': verdict.surjective,
        'witnesses': list(verdict.witnesses),
    }


def diagram_data(model, ordering=None, seed=0):
    """Labelled weak edges, dashed edges and the boxed Q_S, in the layout of the golden files."""
    graph = closure_order(model, seed)
    name = lambda s: root_name(model.kind.cartan_type, model.rank, s)
    data = {
        'kind': str(model.kind),
        'nodes': sorted(str(c) for c, _, _ in graph.nodes),
        'weakEdges': sorted([str(a), name(s), str(b)] for a, s, b in graph.weak_edges),
        'dashedEdges': sorted([str(a), str(b)] for a, b in graph.dashed_edges),
    }
    if ordering:
        assignment = qs_assignment(model, ordering, seed)
        data['boxed'] = sorted(str(c) for c in assignment.table.values())
    return data


def boxed_and_shadow(model, ordering=None, seed=0):
    """
    Node decorations for drawing the closure order

    Returns:
        tuple: (the Q_S of the ordering, the Q_Pi of the other orderings not already boxed)
    """
    if not ordering:
        return (), ()
    ordering = _check_ordering(model, ordering)
    boxed = set(qs_assignment(model, ordering, seed).table.values())
    shadow = set()
    for other in all_orderings(model.rank):
        if other != ordering:
            subset = SimpleSubset(frozenset(other), other)
            shadow.add(monoid_product(model, subset, seed))
    return tuple(sorted(boxed, key=str)), tuple(sorted(shadow - boxed, key=str))
