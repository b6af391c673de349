"""Hecke operators on orbit functions and KLV polynomials for the pairs A(p,q)."""
import logging
from dataclasses import dataclass, field
from functools import lru_cache

from ClanController.models.orbit_monoid import (
    COMPACT_IMAGINARY, COMPLEX_ASCENT, COMPLEX_DESCENT, NONCOMPACT_IMAGINARY, REAL,
    closure_order, orbit_monoid,
)
from ClanController.models.pair_model import check_clan
from CorrespondenceController.models.correspondence import (
    KParameter, QSAssignment, phi_map, qs_assignment,
)
from KLVController.models.multiplicity import MultiplicityMatrix
from KLVController.models.qpolynomial import ONE, Q, ZERO, QPolynomial
from RootDatumController.models.root_datum import build_root_datum
from Service.utils.errors import ConsistencyError, InvalidInputError, NotImplementedForKindError
from TorusController.models.torus_orbits import all_subsets, c_matrix_T_trivial, subset_label

logger = logging.getLogger(__name__)


def _require_family_a(model):
    if model.family != 'A':
        raise NotImplementedForKindError(
            f"KLV polynomials with local systems are not implemented for {model.kind}"
        )


@dataclass(frozen=True)
class HeckeModuleElement:
    """
    A finite sum of orbit basis elements a_Q with coefficients in Z[q]

    Attributes:
        terms (dict): Clan -> nonzero QPolynomial
    """

    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for clan, value in self.terms.items():
            value = QPolynomial.coerce(value)
            if not value.is_zero():
                cleaned[clan] = value
        object.__setattr__(self, 'terms', cleaned)

    @classmethod
    def basis(cls, clan):
        return cls({clan: ONE})

    def coefficient(self, clan):
        return self.terms.get(clan, ZERO)

    def support(self):
        return frozenset(self.terms)

    def __add__(self, other):
        terms = dict(self.terms)
        for clan, value in other.terms.items():
            terms[clan] = terms.get(clan, ZERO) + value
        return HeckeModuleElement(terms)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, factor):
        factor = QPolynomial.coerce(factor)
        return HeckeModuleElement({c: v * factor for c, v in self.terms.items()})

    def to_dict(self):
        return {str(c): str(v) for c, v in sorted(self.terms.items(), key=lambda t: str(t[0]))}


def _basis_image(engine, clan, s):
    """T_s a_Q as a dict, from the root type of s at Q."""
    kind = engine.root_type(clan, s)
    result = engine.pencil(clan, s)
    if kind == COMPACT_IMAGINARY:
        return {clan: Q}
    if kind == COMPLEX_ASCENT:
        return {result.open_member: ONE}
    if kind == COMPLEX_DESCENT:
        lower = engine.lower_members(clan, s)[0]
        return {clan: Q - 1, lower: Q}
    if len(result.members) != 3:
        raise ConsistencyError(
            f"Root {s} at {clan} is {kind} with a two-orbit fibre; not expected in family A"
        )
    lower = engine.lower_members(clan, s)
    if kind == NONCOMPACT_IMAGINARY:
        other = next(c for c in lower if c != clan)
        return {other: ONE, result.open_member: ONE}
    if kind == REAL:
        image = {c: Q - 1 for c in lower}
        image[clan] = Q - 2
        return image
    raise ConsistencyError(f"Unknown root type {kind}")


def hecke_operator(model, s, element, seed=0):
    """
    Apply T_s to an element of the module of orbit functions

    Args:
        model (SymmetricPairModel): A pair of family A
        s (int): Simple root index
        element (HeckeModuleElement): Element to act on
        seed (int): Pencil seed for the root type computations

    Returns:
        HeckeModuleElement: T_s(element)

    Raises:
        NotImplementedForKindError: Family C
        InvalidInputError: Support outside the enumerated clans
    """
    _require_family_a(model)
    engine = orbit_monoid(model, seed)
    known = set(model.clans)
    result = HeckeModuleElement()
    for clan, coefficient in element.terms.items():
        if clan not in known:
            raise InvalidInputError(f"'{clan}' is not an orbit of {model.kind}")
        image = HeckeModuleElement(_basis_image(engine, clan, s))
        result = result + image.scaled(coefficient)
    return result


def _symmetric_part(coefficient, d):
    """Part of an a_eta coefficient that comes from IC(eta) summands: symmetric about q^{d/2}."""
    part = ZERO
    for k, c in enumerate(coefficient.coefficients):
        if c == 0 or 2 * k < d:
            continue
        if 2 * k == d:
            part = part + QPolynomial.monomial(k, c)
        else:
            part = part + QPolynomial.monomial(k, c) + QPolynomial.monomial(d - k, c)
    return part


@lru_cache(maxsize=None)
def _klv_columns(model, seed):
    graph = closure_order(model, seed)
    engine = orbit_monoid(model, seed)
    lengths = {c: l for c, l, _ in graph.nodes}
    columns = {}
    for gamma, length, _ in graph.nodes:
        descents = [s for s in range(1, model.rank + 1) if engine.is_descent(gamma, s)]
        if not descents:
            columns[gamma] = HeckeModuleElement.basis(gamma)
            continue
        s = descents[0]
        delta = engine.lower_members(gamma, s)[0]
        start = columns[delta]
        element = hecke_operator(model, s, start, seed) + start
        if element.coefficient(gamma) != ONE:
            raise ConsistencyError(
                f"(T_{s} + 1) C({delta}) has coefficient {element.coefficient(gamma)} at {gamma}"
            )
        lower = sorted(
            (c for c in model.clans if lengths[c] < length),
            key=lambda c: (-lengths[c], str(c)),
        )
        for eta in lower:
            d = length - lengths[eta]
            correction = _symmetric_part(element.coefficient(eta), d)
            if not correction.is_zero():
                logger.debug("Subtracting (%s) C(%s) from C(%s)", correction, eta, gamma)
                element = element - columns[eta].scaled(correction)
        _check_column(graph, lengths, gamma, element)
        columns[gamma] = element
    logger.info("KLV polynomials for %s: %d columns", model.kind, len(columns))
    return columns


def _check_column(graph, lengths, gamma, element):
    closure = graph.closure(gamma)
    for eta, value in element.terms.items():
        if eta not in closure:
            raise ConsistencyError(f"P({eta}, {gamma}) = {value} outside the closure of {gamma}")
        if any(c < 0 for c in value.coefficients):
            raise ConsistencyError(f"P({eta}, {gamma}) = {value} has a negative coefficient")
        if eta != gamma and 2 * value.degree > lengths[gamma] - lengths[eta] - 1:
            raise ConsistencyError(f"P({eta}, {gamma}) = {value} breaks the degree bound")
    missing = [eta for eta in closure if eta not in element.terms]
    if missing:
        raise ConsistencyError(f"P vanishes on {missing[0]} inside the closure of {gamma}")


def klv_polynomials(model, seed=0):
    """
    Every KLV polynomial of the block of trivial local systems

    Column gamma is built from a descent s of gamma with lower orbit delta:
    (T_s + 1) C(delta) minus the IC(eta) summands, found from the coefficients of
    degree at least half the length difference.

    Args:
        model (SymmetricPairModel): A pair of family A
        seed (int): Pencil seed

    Returns:
        dict: (psi, gamma) -> QPolynomial, nonzero entries only

    Raises:
        NotImplementedForKindError: Family C
    """
    _require_family_a(model)
    columns = _klv_columns(model, seed)
    return {
        (psi, gamma): value
        for gamma, element in columns.items()
        for psi, value in element.terms.items()
    }


def klv_polynomial(model, psi, gamma, seed=0):
    """P_{psi, gamma}, zero when psi is not in the closure of gamma."""
    psi = check_clan(model, psi)
    gamma = check_clan(model, gamma)
    if gamma not in model.clans or psi not in model.clans:
        raise InvalidInputError(f"'{psi}' or '{gamma}' is not an orbit of {model.kind}")
    return klv_polynomials(model, seed).get((psi, gamma), ZERO)


def c_matrix_K(model, restrict=None, seed=0):
    """
    Geometric multiplicity matrix C(psi, gamma) = P_{psi,gamma}(1)

    Args:
        model (SymmetricPairModel): A pair of family A
        restrict (QSAssignment): Keep only the Q_S of an ordering; None for every orbit
        seed (int): Pencil seed

    Returns:
        MultiplicityMatrix: Labeled by clan strings; dims hold d(psi)
    """
    _require_family_a(model)
    graph = closure_order(model, seed)
    polynomials = klv_polynomials(model, seed)
    if isinstance(restrict, QSAssignment):
        clans = [restrict.table[members] for members in all_subsets(model.rank)]
    else:
        clans = [c for c, _, _ in graph.nodes]
    labels = tuple(str(c) for c in clans)
    entries = tuple(
        tuple(polynomials.get((psi, gamma), ZERO).evaluate(1) for gamma in clans)
        for psi in clans
    )
    dims = {str(c): graph.dimension(c) for c in clans}
    return MultiplicityMatrix(labels, entries, dims)


def restricted_c_matrix_by_subset(model, ordering, seed=0):
    """The C matrix on the Q_S of an ordering, relabeled by the subsets S."""
    assignment = qs_assignment(model, ordering, seed)
    matrix = c_matrix_K(model, assignment, seed)
    subsets = all_subsets(model.rank)
    dims = {subset_label(s): matrix.dims[str(assignment.table[s])] for s in subsets}
    return MultiplicityMatrix(tuple(subset_label(s) for s in subsets), matrix.entries, dims)


def compare_with_torus(model, ordering, seed=0):
    """
    Compare the C matrix on the Q_S with the torus matrix transported along Phi

    Returns:
        dict: {'ordering', 'passed', 'total', 'mismatches': [...]}
    """
    _require_family_a(model)
    assignment = qs_assignment(model, ordering, seed)
    k_side = c_matrix_K(model, assignment, seed)
    t_side = c_matrix_T_trivial(build_root_datum(model.kind.group_kind))
    mapping = phi_map(model, assignment.ordering, seed)
    image = {
        str(clan): subset_label(mapping[KParameter(clan, 0)].subset.members)
        for clan in assignment.table.values()
    }
    passed, mismatches = 0, []
    for psi in k_side.labels:
        for gamma in k_side.labels:
            k_value = k_side.entry(psi, gamma)
            t_value = t_side.entry(image[psi], image[gamma])
            if k_value == t_value:
                passed += 1
            else:
                mismatches.append({'psi': psi, 'gamma': gamma, 'K': k_value, 'T': t_value})
    total = len(k_side.labels) ** 2
    if mismatches:
        logger.warning("%d of %d C entries differ for ordering %s", len(mismatches), total, ordering)
    return {
        'ordering': list(assignment.ordering),
        'passed': passed,
        'total': total,
        'mismatches': mismatches,
    }


def klv_table_rows(model, seed=0):
    """CSV rows (from, to, polynomial, coefficients) over all closure pairs, by orbit order."""
    graph = closure_order(model, seed)
    order = {c: k for k, (c, _, _) in enumerate(graph.nodes)}
    table = klv_polynomials(model, seed)
    rows = []
    for (psi, gamma), value in sorted(table.items(), key=lambda t: (order[t[0][1]], order[t[0][0]])):
        rows.append((str(psi), str(gamma), str(value), ' '.join(str(c) for c in value.coefficients)))
    return rows


def verify_boxed_klv(model, ordering, seed=0):
    """
    Check P_{Q_S', Q_S} = 1 when S' is contained in S and 0 otherwise

    Returns:
        dict: {'ordering', 'passed', 'total', 'failures': [...]}
    """
    _require_family_a(model)
    assignment = qs_assignment(model, ordering, seed)
    table = klv_polynomials(model, seed)
    passed, failures = 0, []
    for big, gamma in assignment.table.items():
        for small, psi in assignment.table.items():
            value = table.get((psi, gamma), ZERO)
            expected = ONE if small <= big else ZERO
            if value == expected:
                passed += 1
            else:
                failures.append({'from': str(psi), 'to': str(gamma), 'polynomial': str(value)})
    return {
        'ordering': list(assignment.ordering),
        'passed': passed,
        'total': len(assignment.table) ** 2,
        'failures': failures,
    }
