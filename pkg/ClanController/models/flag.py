"""Flags as exact rational column matrices, with rank and perpendicular helpers."""
from dataclasses import dataclass
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from Service.utils.errors import FlagValidationError


def to_qq(value):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(element):
    return Fraction(int(element.numerator), int(element.denominator))


def vector(values):
    return tuple(Fraction(v) for v in values)


def column_matrix(vectors, dim):
    """DomainMatrix over QQ whose columns are the given vectors."""
    rows = [[to_qq(v[r]) for v in vectors] for r in range(dim)]
    return DomainMatrix.from_list(rows, QQ) if vectors else None


def rank(vectors, dim):
    """Exact rank of a list of vectors."""
    vectors = [v for v in vectors]
    if not vectors:
        return 0
    return column_matrix(vectors, dim).rank()


def matrix_from_rows(rows):
    return DomainMatrix.from_list([[to_qq(v) for v in row] for row in rows], QQ)


def matrix_to_rows(matrix):
    return tuple(tuple(from_qq(e) for e in row) for row in matrix.to_list())


def identity(dim):
    return tuple(tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim))


def apply_matrix(rows, vec):
    return tuple(sum((a * b for a, b in zip(row, vec)), Fraction(0)) for row in rows)


def form_value(form, x, y):
    """The bilinear form x^T J y."""
    total = Fraction(0)
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if yj and form[i][j]:
                total += xi * form[i][j] * yj
    return total


def combine(coefficients, vectors):
    """Linear combination sum c_k v_k."""
    dim = len(vectors[0])
    result = [Fraction(0)] * dim
    for c, v in zip(coefficients, vectors):
        c = Fraction(c)
        if c:
            for k in range(dim):
                result[k] += c * v[k]
    return tuple(result)


def perpendicular_within(form, vectors, within):
    """
    Vectors z in span(within) with J(v, z) = 0 for every v in vectors

    Args:
        form (tuple): Antisymmetric form J
        vectors (list): The subspace to be perpendicular to
        within (list): Spanning list of the ambient subspace

    Returns:
        list: A basis of the perpendicular space inside span(within)
    """
    if not vectors:
        return list(within)
    pairing = [[form_value(form, v, w) for w in within] for v in vectors]
    kernel = matrix_from_rows(pairing).nullspace()
    basis = []
    for row in matrix_to_rows(kernel):
        basis.append(combine(row, within))
    return basis


@dataclass(frozen=True)
class FlagRep:
    """
    A full flag F_1 in F_2 in ... given by columns; F_i is spanned by the first i columns

    Attributes:
        columns (tuple): Column vectors with Fraction entries
        form (tuple): Symplectic form J for family C, None for family A
    """

    columns: tuple
    form: tuple = None

    @classmethod
    def from_columns(cls, columns, form=None):
        return cls(tuple(vector(c) for c in columns), form)

    @property
    def ambient_dim(self):
        return len(self.columns)

    def subspace(self, i):
        return list(self.columns[:i])

    def validate(self):
        """
        Check the columns form a basis and, with a form, that F_{2n-i} = F_i^perp

        Raises:
            FlagValidationError: Dependent columns or a non-isotropic flag
        """
        dim = self.ambient_dim
        if any(len(c) != dim for c in self.columns):
            raise FlagValidationError(f"Flag needs {dim} columns of length {dim}")
        if rank(self.columns, dim) != dim:
            raise FlagValidationError("Flag columns are linearly dependent")
        if self.form is None:
            return self
        # J(v_a, v_b) = 0 whenever a + b <= dim, i.e. F_i is perpendicular to F_{dim-i}
        for a in range(1, dim):
            for b in range(1, dim + 1 - a):
                if form_value(self.form, self.columns[a - 1], self.columns[b - 1]):
                    raise FlagValidationError(
                        "Flag is not isotropic", {'columns': [a, b]}
                    )
        return self

    def transformed(self, rows):
        """The flag g.F for a matrix g given by rows."""
        return FlagRep(tuple(apply_matrix(rows, c) for c in self.columns), self.form)

    def with_columns(self, replacements):
        columns = list(self.columns)
        for position, column in replacements.items():
            columns[position - 1] = vector(column)
        return FlagRep(tuple(columns), self.form)

    def to_dict(self):
        return {'columns': [[str(x) for x in c] for c in self.columns]}
