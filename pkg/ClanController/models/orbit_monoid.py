"""Monoid action, saturations, simple root types, lengths and the closure order."""
import logging
from dataclasses import dataclass, field
from functools import lru_cache

import networkx as nx
import numpy as np

from ClanController.models.flag import combine, perpendicular_within, rank
from ClanController.models.pair_model import check_clan, identify_orbit, representative_flag
from Service.utils.errors import ConsistencyError, InvalidInputError

logger = logging.getLogger(__name__)

COMPLEX_ASCENT = 'complex-ascent'
COMPLEX_DESCENT = 'complex-descent'
COMPACT_IMAGINARY = 'compact-imaginary'
NONCOMPACT_IMAGINARY = 'noncompact-imaginary'
REAL = 'real'
ROOT_TYPES = (COMPLEX_ASCENT, COMPLEX_DESCENT, COMPACT_IMAGINARY, NONCOMPACT_IMAGINARY, REAL)
DESCENTS = (COMPLEX_DESCENT, REAL)

# Pencil points (a, b) of the line a v_s + b v_{s+1}
SPECIAL_SAMPLES = ((1, 0), (0, 1), (1, 1), (1, -1))


@dataclass(frozen=True)
class PencilResult:
    """
    Identified orbits along the pencil through a clan's representative at a simple root

    Attributes:
        samples (tuple): ((a, b), clan) for the special and random samples, in order
        members (frozenset): The saturation
        open_member (Clan): Orbit of the generic samples
    """

    samples: tuple
    members: frozenset
    open_member: object

    def clan_at(self, point):
        for sample, clan in self.samples:
            if sample == point:
                return clan
        return None

    def special_hits(self, clan):
        return sum(1 for sample, c in self.samples if sample in SPECIAL_SAMPLES and c == clan)


def _random_points(seed, s, index):
    """Two seeded pencil points with a, b nonzero and a != +-b."""
    rng = np.random.default_rng([int(seed), int(s), int(index)])
    points = []
    while len(points) < 2:
        a, b = (int(x) for x in rng.integers(-1000, 1001, size=2))
        if a and b and abs(a) != abs(b):
            points.append((a, b))
    return points


def _pencil_flag(model, flag, s, a, b):
    """The flag obtained by replacing F_i with F_{i-1} + line(a v_i + b v_{i+1}) at root s."""
    columns = flag.columns
    dim = model.dim
    i = s
    v_i, v_next = columns[i - 1], columns[i]
    x = combine((a, b), (v_i, v_next))
    complement = v_next if a else v_i
    replacements = {i: x, i + 1: complement}
    if model.family == 'C' and s < model.kind.n:
        # F_{2n-i} = F_i^perp inside F_{2n-i+1}
        low = dim - i - 1
        new_half = list(columns[:i - 1]) + [x]
        perp = perpendicular_within(model.form, new_half, list(columns[:dim - i + 1]))
        base = list(columns[:low])
        y = next((w for w in perp if rank(base + [w], dim) == low + 1), None)
        if y is None:
            raise ConsistencyError("Perpendicular of the modified isotropic space is degenerate")
        partner = next(
            c for c in (columns[low], columns[low + 1]) if rank(base + [y, c], dim) == low + 2
        )
        replacements[dim - i] = y
        replacements[dim - i + 1] = partner
    return flag.with_columns(replacements)


class OrbitMonoid:
    """
    Geometric saturation engine for one pair model and seed

    Saturations are computed from representative flags by sampling the pencil at a
    simple root and identifying each sample; results are memoized per (clan, s).
    """

    def __init__(self, model, seed=0):
        self.model = model
        self.seed = int(seed)
        self._pencils = {}
        self._positions = {clan: k for k, clan in enumerate(model.clans)}

    def _check_root(self, s):
        if not 1 <= int(s) <= self.model.rank:
            raise InvalidInputError(f"Simple root {s} outside 1..{self.model.rank}")
        return int(s)

    def pencil(self, clan, s):
        clan = check_clan(self.model, clan)
        s = self._check_root(s)
        key = (clan, s)
        if key in self._pencils:
            return self._pencils[key]

        flag = representative_flag(self.model, clan)
        points = list(SPECIAL_SAMPLES) + _random_points(self.seed, s, self._positions[clan])
        samples = tuple(
            (point, identify_orbit(self.model, _pencil_flag(self.model, flag, s, *point)))
            for point in points
        )
        generic = [c for point, c in samples[len(SPECIAL_SAMPLES):]]
        if generic[0] != generic[1]:
            raise ConsistencyError(
                f"Random pencil samples disagree at {clan}, root {s}",
                {'samples': [str(c) for c in generic]},
            )
        members = frozenset(c for _, c in samples)
        if samples[0][1] != clan:
            raise ConsistencyError(f"Pencil at {clan}, root {s} does not pass through {clan}")
        result = PencilResult(samples, members, generic[0])
        self._pencils[key] = result
        return result

    def saturation(self, clan, s):
        return self.pencil(clan, s).members

    def m_action(self, clan, s):
        return self.pencil(clan, s).open_member

    def cross(self, clan, s):
        """Orbit of the swapped coordinate line of the pencil."""
        return self.pencil(clan, s).clan_at((0, 1))

    def lower_members(self, clan, s):
        result = self.pencil(clan, s)
        return sorted((c for c in result.members if c != result.open_member), key=str)

    def root_type(self, clan, s):
        """
        Classify s relative to a clan from its pencil

        One orbit: compact imaginary. Ascent with two lower orbits, or with the swapped line
        staying in the clan: noncompact imaginary; other ascents are complex. Descent with
        two lower orbits, or one lower orbit met twice: real; other descents are complex.
        """
        clan = check_clan(self.model, clan)
        result = self.pencil(clan, s)
        if len(result.members) == 1:
            return COMPACT_IMAGINARY
        if result.open_member != clan:
            if len(result.members) == 3 or self.cross(clan, s) == clan:
                return NONCOMPACT_IMAGINARY
            return COMPLEX_ASCENT
        if len(result.members) == 3:
            return REAL
        lower = self.lower_members(clan, s)[0]
        return REAL if result.special_hits(lower) >= 2 else COMPLEX_DESCENT

    def is_descent(self, clan, s):
        return self.root_type(clan, s) in DESCENTS


@lru_cache(maxsize=None)
def orbit_monoid(model, seed=0):
    """Shared engine per (model, seed)."""
    return OrbitMonoid(model, seed)


def saturation(model, clan, s, seed=0):
    """
    The orbits meeting P_s . Q

    Args:
        model (SymmetricPairModel): The pair
        clan (Clan or str): The orbit Q
        s (int): Simple root index
        seed (int): Seed for the generic pencil samples

    Returns:
        frozenset: Clans in the saturation
    """
    return orbit_monoid(model, seed).saturation(clan, s)


def m_action(model, clan, s, seed=0):
    """The dense orbit m(s)Q of the saturation."""
    return orbit_monoid(model, seed).m_action(clan, s)


def root_type(model, clan, s, seed=0):
    return orbit_monoid(model, seed).root_type(clan, s)


@dataclass(frozen=True)
class OrbitGraph:
    """
    Weak order and closure order on the clans of one pair

    Attributes:
        nodes (tuple): (clan, length, dimension), by length then string
        weak_edges (tuple): (source, s, target) with target = m(s) source != source
        closure_pairs (frozenset): (smaller, larger) with smaller in closure(larger), reflexive
        hasse_edges (tuple): Covering relations of the closure order
        dashed_edges (tuple): Covering relations that are not weak edges
    """

    nodes: tuple
    weak_edges: tuple
    closure_pairs: frozenset
    hasse_edges: tuple = field(default=())
    dashed_edges: tuple = field(default=())

    def length(self, clan):
        return next(l for c, l, _ in self.nodes if c == clan)

    def dimension(self, clan):
        return next(d for c, _, d in self.nodes if c == clan)

    def closure(self, clan):
        return frozenset(a for a, b in self.closure_pairs if b == clan)

    def leq(self, smaller, larger):
        return (smaller, larger) in self.closure_pairs

    def to_dict(self):
        return {
            'nodes': [{'clan': str(c), 'length': l, 'dimension': d} for c, l, d in self.nodes],
            'weakEdges': [{'from': str(a), 'root': s, 'to': str(b)} for a, s, b in self.weak_edges],
            'dashedEdges': [{'from': str(a), 'to': str(b)} for a, b in self.dashed_edges],
            'closurePairs': sorted([str(a), str(b)] for a, b in self.closure_pairs),
        }


def closed_orbit_dimension(kind):
    """Number of positive roots of K: p(p-1)/2 + q(q-1)/2 for A(p,q), n(n-1)/2 for C(n)."""
    if kind.family == 'A':
        return kind.p * (kind.p - 1) // 2 + kind.q * (kind.q - 1) // 2
    return kind.n * (kind.n - 1) // 2


def weak_edges(model, seed=0):
    engine = orbit_monoid(model, seed)
    edges = []
    for clan in model.clans:
        for s in range(1, model.rank + 1):
            target = engine.m_action(clan, s)
            if target != clan:
                edges.append((clan, s, target))
    return edges


def closed_clans(model, seed=0):
    """Clans with no descent, i.e. never the target of a weak edge."""
    targets = {b for _, _, b in weak_edges(model, seed)}
    return [c for c in model.clans if c not in targets]


def length_and_dimension(model, seed=0):
    """
    Length and dimension of every orbit

    Args:
        model (SymmetricPairModel): The pair
        seed (int): Pencil seed

    Returns:
        dict: clan -> (length, dimension)

    Raises:
        ConsistencyError: Some clan is unreachable from the closed orbits
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(model.clans)
    graph.add_edges_from((a, b) for a, _, b in weak_edges(model, seed))
    sources = closed_clans(model, seed)
    distances = nx.multi_source_dijkstra_path_length(graph, sources)
    missing = [c for c in model.clans if c not in distances]
    if missing:
        raise ConsistencyError(
            "Weak order graph is disconnected from the closed orbits",
            {'unreachable': [str(c) for c in missing]},
        )
    base = closed_orbit_dimension(model.kind)
    return {c: (distances[c], base + distances[c]) for c in model.clans}


@lru_cache(maxsize=None)
def closure_order(model, seed=0):
    """
    Closure order of the K-orbits

    closure(Q) is the union of saturation(R, s) over R in closure(Q') for any weak
    edge Q' -> Q labelled s; every choice must give the same set.

    Args:
        model (SymmetricPairModel): The pair
        seed (int): Pencil seed

    Returns:
        OrbitGraph: Nodes, weak edges, closure pairs, Hasse and dashed edges
    """
    engine = orbit_monoid(model, seed)
    lengths = length_and_dimension(model, seed)
    edges = weak_edges(model, seed)
    incoming = {}
    for source, s, target in edges:
        incoming.setdefault(target, []).append((s, source))

    closures = {}
    for clan in sorted(model.clans, key=lambda c: (lengths[c][0], str(c))):
        if clan not in incoming:
            closures[clan] = frozenset([clan])
            continue
        candidates = []
        for s, source in sorted(incoming[clan], key=lambda e: (e[0], str(e[1]))):
            result = frozenset()
            for lower in closures[source]:
                result |= engine.saturation(lower, s)
            candidates.append(((s, source), result))
        first = candidates[0][1]
        for choice, result in candidates[1:]:
            if result != first:
                raise ConsistencyError(
                    f"Closure of {clan} depends on the chosen weak edge",
                    {'choices': [str(candidates[0][0][1]), str(choice[1])]},
                )
        closures[clan] = first
        logger.debug("closure(%s) has %d orbits", clan, len(first))

    pairs = frozenset((low, high) for high, members in closures.items() for low in members)
    order = nx.DiGraph()
    order.add_nodes_from(model.clans)
    order.add_edges_from((a, b) for a, b in pairs if a != b)
    if not nx.is_directed_acyclic_graph(order):
        raise ConsistencyError("Closure relation is not antisymmetric")
    hasse = nx.transitive_reduction(order)
    weak = {(a, b) for a, _, b in edges}
    node_key = lambda c: (lengths[c][0], str(c))
    hasse_edges = tuple(sorted(hasse.edges(), key=lambda e: (node_key(e[0]), node_key(e[1]))))
    dashed = tuple(e for e in hasse_edges if e not in weak)
    nodes = tuple(
        (c, lengths[c][0], lengths[c][1]) for c in sorted(model.clans, key=node_key)
    )
    edge_key = lambda e: (node_key(e[0]), e[1], str(e[2]))
    logger.info(
        "Closure order for %s: %d orbits, %d weak edges, %d dashed edges",
        model.kind, len(nodes), len(edges), len(dashed),
    )
    return OrbitGraph(nodes, tuple(sorted(edges, key=edge_key)), pairs, hasse_edges, dashed)
