"""Root data for the classical groups and their isogeny variants."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from RootDatumController.models.lattice import smith_normal_form, unimodular_inverse
from Service.utils.errors import InvalidInputError, UnsupportedKindError

logger = logging.getLogger(__name__)

FAMILIES = ('GL', 'SL', 'Sp', 'SpinB', 'SpinD', 'SOB', 'SOD')

# Dynkin type of each family
CARTAN_TYPES = {
    'GL': 'A', 'SL': 'A', 'Sp': 'C',
    'SpinB': 'B', 'SOB': 'B', 'SpinD': 'D', 'SOD': 'D',
}


@dataclass(frozen=True)
class GroupKind:
    """
    A reductive group named by family and rank parameter

    GL(n), SL(n) act on C^n; Sp(n) is the rank n group Sp(2n); SpinB/SOB(n) are of
    type B_n and SpinD/SOD(n) of type D_n.
    """

    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnsupportedKindError(f"Unsupported family '{self.family}'", {'families': list(FAMILIES)})
        minimum = 2 if self.family.startswith(('Spin', 'SO')) else 1
        if int(self.n) < minimum:
            raise UnsupportedKindError(f"{self.family} needs n >= {minimum}, got {self.n}")

    @property
    def cartan_type(self):
        return CARTAN_TYPES[self.family]

    @property
    def rank(self):
        """Semisimple rank r (number of simple roots)."""
        return self.n - 1 if self.cartan_type == 'A' else self.n

    def __str__(self):
        return f'{self.family}:{self.n}'


def standard_cartan_matrix(cartan_type, r):
    """
    Cartan matrix A[i][j] = <alpha_i, alpha_j^vee> in Bourbaki numbering

    Args:
        cartan_type (str): One of A, B, C, D
        r (int): Rank

    Returns:
        list: r x r integer matrix
    """
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
    for i in range(r - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if r < 2:
        return a
    last, prev = r - 1, r - 2
    if cartan_type == 'B':
        a[prev][last] = -2
    elif cartan_type == 'C':
        a[last][prev] = -2
    elif cartan_type == 'D':
        a[prev][last] = a[last][prev] = 0
        if r >= 3:
            a[r - 3][last] = a[last][r - 3] = -1
    return a


def pair(x, h):
    return sum(Fraction(a) * Fraction(b) for a, b in zip(x, h))


@dataclass(frozen=True)
class RootDatum:
    """
    Simple roots and coroots in explicit bases of X*(T) and X_*(T)

    Attributes:
        kind (GroupKind): The group
        lattice_rank (int): Rank m of the character lattice
        simple_roots (tuple): r integer vectors of length m
        simple_coroots (tuple): r integer vectors of length m
    """

    kind: GroupKind
    lattice_rank: int
    simple_roots: tuple
    simple_coroots: tuple

    @property
    def rank(self):
        return len(self.simple_roots)

    @cached_property
    def cartan_matrix(self):
        return [[int(pair(a, c)) for c in self.simple_coroots] for a in self.simple_roots]

    @cached_property
    def positive_root_coefficients(self):
        """Positive roots as coefficient tuples in the simple roots, sorted by height."""
        r = self.rank
        cartan = self.cartan_matrix
        simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        found = set(simple)
        frontier = list(simple)
        while frontier:
            beta = frontier.pop()
            for i in range(r):
                # <beta, alpha_i^vee>
                k = sum(beta[j] * cartan[j][i] for j in range(r))
                image = tuple(beta[j] - (k if j == i else 0) for j in range(r))
                if any(c > 0 for c in image) and image not in found:
                    found.add(image)
                    frontier.append(image)
        return sorted(found, key=lambda c: (sum(c), tuple(-x for x in c)))

    def root_vector(self, coefficients):
        return tuple(
            sum(c * root[k] for c, root in zip(coefficients, self.simple_roots))
            for k in range(self.lattice_rank)
        )

    @cached_property
    def positive_roots(self):
        return [self.root_vector(c) for c in self.positive_root_coefficients]

    @cached_property
    def positive_coroots(self):
        # closure of the simple coroots under s_i(h) = h - <alpha_i, h> alpha_i^vee
        r = self.rank
        transpose = [[self.cartan_matrix[j][i] for j in range(r)] for i in range(r)]
        simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        found = set(simple)
        frontier = list(simple)
        while frontier:
            gamma = frontier.pop()
            for i in range(r):
                k = sum(gamma[j] * transpose[j][i] for j in range(r))
                image = tuple(gamma[j] - (k if j == i else 0) for j in range(r))
                if any(c > 0 for c in image) and image not in found:
                    found.add(image)
                    frontier.append(image)
        return [
            tuple(sum(c * co[k] for c, co in zip(coeffs, self.simple_coroots)) for k in range(self.lattice_rank))
            for coeffs in sorted(found)
        ]

    @cached_property
    def rho_check(self):
        """Half the sum of the positive coroots, as exact rationals."""
        total = [Fraction(0)] * self.lattice_rank
        for coroot in self.positive_coroots:
            total = [t + c for t, c in zip(total, coroot)]
        return tuple(t / 2 for t in total)

    def root_height(self, root):
        return pair(root, self.rho_check)


# Helper function to build the unit vector e_i of Z^n
def _unit(n, i):
    return tuple(int(k == i) for k in range(n))


def _difference(n, i, j, sign=-1):
    return tuple(int(k == i) + (sign if k == j else 0) for k in range(n))


def _gl_vectors(n):
    roots = [_difference(n, i, i + 1) for i in range(n - 1)]
    return roots, list(roots)


def _sl_vectors(n):
    """
    Realise X*(T_SL) = Z^n / Z(1,...,1) with an explicit basis

    A unimodular U with U(1,...,1)^T = +-e_1 is read off the Smith normal form of
    the column (1,...,1); characters map to rows 2..n of U x, cocharacters of sum
    zero to rows 2..n of U^{-T} h.
    """
    gl_roots, gl_coroots = _gl_vectors(n)
    _, u, _ = smith_normal_form([[1] for _ in range(n)])
    u_inv_t = [list(row) for row in zip(*unimodular_inverse(u))]

    def apply(matrix, vec):
        return tuple(sum(matrix[i][k] * vec[k] for k in range(n)) for i in range(n))

    roots = [apply(u, r)[1:] for r in gl_roots]
    coroots = [apply(u_inv_t, c)[1:] for c in gl_coroots]
    return roots, coroots


def _sp_vectors(n):
    roots = [_difference(n, i, i + 1) for i in range(n - 1)] + [tuple(2 * x for x in _unit(n, n - 1))]
    coroots = [_difference(n, i, i + 1) for i in range(n - 1)] + [_unit(n, n - 1)]
    return roots, coroots


def _so_odd_vectors(n):
    roots, coroots = _sp_vectors(n)
    return coroots, roots


def _so_even_vectors(n):
    roots = [_difference(n, i, i + 1) for i in range(n - 1)] + [_difference(n, n - 2, n - 1, sign=1)]
    return roots, list(roots)


def _spin_vectors(cartan_type, n):
    # weight lattice basis of fundamental weights; coroot lattice basis of simple coroots
    cartan = standard_cartan_matrix(cartan_type, n)
    roots = [tuple(row) for row in cartan]
    coroots = [_unit(n, i) for i in range(n)]
    return roots, coroots


def build_root_datum(kind):
    """
    Build the root datum of a group kind

    Args:
        kind (GroupKind): Family and rank parameter

    Returns:
        RootDatum: Simple roots and coroots in an explicit lattice basis
    """
    n = kind.n
    if kind.family == 'GL':
        roots, coroots = _gl_vectors(n)
        m = n
    elif kind.family == 'SL':
        roots, coroots = _sl_vectors(n)
        m = n - 1
    elif kind.family == 'Sp':
        roots, coroots = _sp_vectors(n)
        m = n
    elif kind.family == 'SOB':
        roots, coroots = _so_odd_vectors(n)
        m = n
    elif kind.family == 'SOD':
        roots, coroots = _so_even_vectors(n)
        m = n
    elif kind.family in ('SpinB', 'SpinD'):
        roots, coroots = _spin_vectors(kind.cartan_type, n)
        m = n
    else:
        raise UnsupportedKindError(f"No root datum for {kind}")

    datum = RootDatum(kind=kind, lattice_rank=m, simple_roots=tuple(roots), simple_coroots=tuple(coroots))
    expected = standard_cartan_matrix(kind.cartan_type, kind.rank)
    if datum.cartan_matrix != expected:
        raise UnsupportedKindError(f"Cartan matrix mismatch for {kind}", {'cartan': datum.cartan_matrix})
    logger.debug("Built root datum for %s: %d simple roots in Z^%d", kind, datum.rank, m)
    return datum


def grading_dimension(datum, k):
    """
    Dimension of the rho-check graded piece g_k

    Args:
        datum (RootDatum): Root datum
        k (int): Degree

    Returns:
        int: Number of roots of height k, plus dim t when k = 0
    """
    k = int(k)
    if k == 0:
        return datum.lattice_rank
    heights = [sum(c) for c in datum.positive_root_coefficients]
    return sum(1 for h in heights if h == abs(k))


GREEK_ALPHA = ('α', 'alpha', 'a')
GREEK_BETA = ('β', 'beta', 'b')


def resolve_root_token(cartan_type, rank, token):
    text = str(token).strip().lower()
    if cartan_type == 'C' and text in GREEK_BETA:
        return rank
    if cartan_type == 'C' and text in GREEK_ALPHA and rank >= 2:
        return rank - 1
    try:
        index = int(text)
    except ValueError:
        raise InvalidInputError(f"Unknown simple root '{token}'")
    if not 1 <= index <= rank:
        raise InvalidInputError(f"Simple root index {index} outside 1..{rank}")
    return index


def root_name(cartan_type, rank, index):
    """Display name of a simple root: Greek letters for rank-2 type C, indices otherwise."""
    if cartan_type == 'C' and rank == 2:
        return 'β' if index == 2 else 'α'
    return str(index)
