"""Integer lattice helpers: Smith normal form and finite abelian groups."""
import logging
from dataclasses import dataclass
from itertools import product
from math import gcd, prod

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_decomp

from Service.utils.errors import ConsistencyError, InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """
    A finite abelian group Z/d_1 x ... x Z/d_k with d_1 | d_2 | ... and every d_i >= 2.

    The empty tuple is the trivial group.
    """

    invariant_factors: tuple = ()

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        if any(d < 2 for d in factors):
            raise InvalidInputError(f"Invariant factors must be >= 2, got {factors}")
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise InvalidInputError(f"Invariant factors {factors} do not form a divisibility chain")
        object.__setattr__(self, 'invariant_factors', factors)

    @classmethod
    def from_diagonal(cls, entries):
        """
        Build the torsion group Z/e_1 x ... from arbitrary nonzero diagonal entries

        Args:
            entries (iterable): Diagonal entries; zeros (free part) and units are skipped

        Returns:
            FiniteAbelianGroup: The group in invariant factor form
        """
        values = [abs(int(e)) for e in entries if abs(int(e)) > 1]
        # (a, b) -> (gcd, lcm) keeps the group and converges to a divisibility chain
        changed = True
        while changed:
            changed = False
            for i in range(len(values)):
                for j in range(i + 1, len(values)):
                    a, b = values[i], values[j]
                    g = gcd(a, b)
                    lo, hi = g, a * b // g
                    if (lo, hi) != (a, b):
                        values[i], values[j] = lo, hi
                        changed = True
        return cls(tuple(v for v in values if v > 1))

    @property
    def order(self):
        return prod(self.invariant_factors)

    @property
    def is_trivial(self):
        return not self.invariant_factors

    @property
    def is_cyclic(self):
        return len(self.invariant_factors) <= 1

    @property
    def is_elementary_two_group(self):
        return all(d == 2 for d in self.invariant_factors)

    def characters(self):
        """Character indices 0..order-1; index 0 is the trivial character."""
        return list(range(self.order))

    def character_tuple(self, index):
        """
        Decode a character index into its mixed-radix tuple (last factor varies fastest)

        Args:
            index (int): Character index

        Returns:
            tuple: Components modulo the invariant factors
        """
        if not 0 <= index < self.order:
            raise InvalidInputError(f"Character index {index} outside 0..{self.order - 1}")
        digits = []
        for d in reversed(self.invariant_factors):
            digits.append(index % d)
            index //= d
        return tuple(reversed(digits))

    def character_index(self, components):
        index = 0
        for value, d in zip(components, self.invariant_factors):
            index = index * d + (int(value) % d)
        return index

    def all_character_tuples(self):
        return list(product(*(range(d) for d in self.invariant_factors)))

    def __str__(self):
        if self.is_trivial:
            return '1'
        return ' x '.join(f'Z/{d}' for d in self.invariant_factors)


def _to_int_rows(matrix):
    return [[int(v) for v in row] for row in matrix.tolist()]


def smith_normal_form(rows):
    """
    Smith normal form with transformation matrices

    Args:
        rows (list): Integer matrix as a list of rows (may have zero rows or columns)

    Returns:
        tuple: (D, U, V) as lists of rows with U*M*V = D, U and V unimodular
    """
    rows = [[int(v) for v in row] for row in rows]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    if n_rows == 0 or n_cols == 0:
        eye_r = [[int(i == j) for j in range(n_rows)] for i in range(n_rows)]
        eye_c = [[int(i == j) for j in range(n_cols)] for i in range(n_cols)]
        zero = [[0] * n_cols for _ in range(n_rows)]
        return zero, eye_r, eye_c

    m = Matrix(rows)
    d, u, v = smith_normal_decomp(m, domain=ZZ)
    if u * m * v != d:
        raise ConsistencyError("Smith normal form check U*M*V = D failed", {'matrix': rows})
    return _to_int_rows(d), _to_int_rows(u), _to_int_rows(v)


def diagonal(rows):
    return [rows[i][i] for i in range(min(len(rows), len(rows[0]) if rows else 0))]


def cokernel_torsion(columns, lattice_rank):
    """
    Torsion subgroup of Z^m / (span of the given integer columns)

    Args:
        columns (list): Integer vectors of length lattice_rank
        lattice_rank (int): m

    Returns:
        FiniteAbelianGroup: Torsion part of the quotient
    """
    if not columns:
        return FiniteAbelianGroup()
    rows = [[col[i] for col in columns] for i in range(lattice_rank)]
    d, _, _ = smith_normal_form(rows)
    group = FiniteAbelianGroup.from_diagonal(diagonal(d))
    logger.debug("Cokernel of %d columns in Z^%d has torsion %s", len(columns), lattice_rank, group)
    return group


def unimodular_inverse(rows):
    """Exact inverse of a unimodular integer matrix, as integer rows."""
    inverse = Matrix(rows).inv()
    return [[int(v) for v in row] for row in inverse.tolist()]
