"""The torus side: T-orbits O_S on g_{-1}, their closures and component groups."""
import logging
from dataclasses import dataclass
from itertools import combinations
from math import gcd

from KLVController.models.multiplicity import MultiplicityMatrix
from RootDatumController.models.lattice import cokernel_torsion
from Service.utils.errors import ConsistencyError, InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimpleSubset:
    """
    A subset S of the simple roots together with an ordering of all of them

    Attributes:
        members (frozenset): 1-based simple root indices in S
        ordering (tuple): Permutation of 1..r; S inherits the restricted order
    """

    members: frozenset
    ordering: tuple

    def __post_init__(self):
        members = frozenset(int(i) for i in self.members)
        ordering = tuple(int(i) for i in self.ordering)
        r = len(ordering)
        if sorted(ordering) != list(range(1, r + 1)):
            raise InvalidInputError(f"Ordering {list(ordering)} is not a permutation of 1..{r}")
        if not members <= set(ordering):
            raise InvalidInputError(f"Subset {sorted(members)} not contained in 1..{r}")
        object.__setattr__(self, 'members', members)
        object.__setattr__(self, 'ordering', ordering)

    @classmethod
    def of(cls, members, rank, ordering=None):
        return cls(frozenset(members), tuple(ordering) if ordering else tuple(range(1, rank + 1)))

    @property
    def ordered_members(self):
        """Members of S listed in the induced order (first applied first)."""
        return tuple(i for i in self.ordering if i in self.members)

    @property
    def label(self):
        return subset_label(self.members)

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class TorusParameter:
    """A pair (O_S, character of A_T(x_S)); character 0 is the trivial local system."""

    subset: SimpleSubset
    character: int = 0

    def to_dict(self):
        return {'subset': sorted(self.subset.members), 'character': self.character}


def subset_label(members):
    return '{' + ','.join(str(i) for i in sorted(members)) + '}'


def all_subsets(rank):
    """All subsets of 1..rank, by increasing size then lexicographically."""
    indices = range(1, rank + 1)
    return [frozenset(c) for k in range(rank + 1) for c in combinations(indices, k)]


def torus_orbit_dimension(subset):
    return len(subset.members)


def torus_closure_leq(smaller, larger):
    """True iff O_{S'} lies in the closure of O_S, which is S' contained in S."""
    return smaller.members <= larger.members


def component_group_AT(datum, subset):
    """
    Component group of {t in T : alpha(t) = 1 for alpha in S}

    Args:
        datum (RootDatum): Root datum
        subset (SimpleSubset): The subset S

    Returns:
        FiniteAbelianGroup: Torsion of X*(T)/ZS
    """
    columns = [datum.simple_roots[i - 1] for i in sorted(subset.members)]
    group = cokernel_torsion(columns, datum.lattice_rank)
    if datum.kind.family == 'SL':
        expected = sl_component_order(datum.kind.n, subset.members)
        if not group.is_cyclic or group.order != expected:
            raise ConsistencyError(
                f"A_T for SL({datum.kind.n}) and S={subset_label(subset.members)} is {group}, expected Z/{expected}",
                {'expectedOrder': expected, 'invariantFactors': list(group.invariant_factors)},
            )
    return group


def sl_block_sizes(n, members):
    """Sizes of the blocks of {1..n} obtained by joining i and i+1 for every alpha_i in S."""
    sizes, current = [], 1
    for i in range(1, n):
        if i in members:
            current += 1
        else:
            sizes.append(current)
            current = 1
    sizes.append(current)
    return sizes


def sl_component_order(n, members):
    """Closed form |A_T(x_S)| for SL(n): gcd of the block sizes."""
    result = 0
    for size in sl_block_sizes(n, members):
        result = gcd(result, size)
    return result


def xi_T(datum, ordering=None):
    """
    The parameter set Xi(T, g_{-1})

    Args:
        datum (RootDatum): Root datum
        ordering (tuple): Ordering stored on every subset; defaults to 1..r

    Returns:
        list: One TorusParameter per subset and character of A_T(x_S)
    """
    ordering = tuple(ordering) if ordering else tuple(range(1, datum.rank + 1))
    parameters = []
    for members in all_subsets(datum.rank):
        subset = SimpleSubset(members, ordering)
        group = component_group_AT(datum, subset)
        parameters.extend(TorusParameter(subset, character) for character in group.characters())
    logger.debug("Xi(T, g_-1) for %s has %d parameters", datum.kind, len(parameters))
    return parameters


def c_matrix_T_trivial(datum):
    """
    Multiplicity matrix for the trivial local systems on the O_S

    Closures of T-orbits are smooth, so C(S', S) = 1 iff S' is contained in S.

    Args:
        datum (RootDatum): Root datum

    Returns:
        MultiplicityMatrix: Labeled by subset strings, dims = |S|
    """
    subsets = all_subsets(datum.rank)
    labels = tuple(subset_label(s) for s in subsets)
    entries = tuple(tuple(int(a <= b) for b in subsets) for a in subsets)
    dims = {subset_label(s): len(s) for s in subsets}
    return MultiplicityMatrix(labels, entries, dims)
