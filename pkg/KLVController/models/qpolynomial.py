"""Integer polynomials in q, stored as coefficient lists indexed by degree."""
import re
from dataclasses import dataclass

import numpy as np

from Service.utils.errors import InvalidInputError

_TERM = re.compile(r'^([+-]?\d*)(q(?:\^(\d+))?)?$')


def _trim(values):
    values = [int(v) for v in values]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class QPolynomial:
    """
    A polynomial sum c_k q^k with integer coefficients

    Attributes:
        coefficients (tuple): c_0, c_1, ...; no trailing zeros, () is the zero polynomial
    """

    coefficients: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'coefficients', _trim(self.coefficients))

    @classmethod
    def constant(cls, value):
        return cls((value,))

    @classmethod
    def monomial(cls, degree, coefficient=1):
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def coerce(cls, value):
        if isinstance(value, QPolynomial):
            return value
        if isinstance(value, int):
            return cls.constant(value)
        if isinstance(value, (list, tuple)):
            return cls(tuple(value))
        if isinstance(value, str):
            return cls.parse(value)
        raise InvalidInputError(f"Cannot read {value!r} as a polynomial in q")

    @classmethod
    def parse(cls, text):
        """
        Read '1+q', '2q^2-q+1', '0'

        Args:
            text (str): Polynomial in q

        Returns:
            QPolynomial: Parsed value
        """
        compact = str(text).replace(' ', '').replace('*', '')
        if not compact:
            raise InvalidInputError("Empty polynomial")
        terms = re.findall(r'[+-]?[^+-]+', compact)
        if ''.join(terms) != compact:
            raise InvalidInputError(f"Stray sign in '{text}'")
        result = cls()
        for term in terms:
            match = _TERM.match(term)
            if not match or term in ('+', '-'):
                raise InvalidInputError(f"Invalid term '{term}' in '{text}'")
            sign_digits, variable, power = match.groups()
            if sign_digits in ('', '+'):
                coefficient = 1
            elif sign_digits == '-':
                coefficient = -1
            else:
                coefficient = int(sign_digits)
            if variable is None:
                degree = 0
            else:
                degree = int(power) if power else 1
            result = result + cls.monomial(degree, coefficient)
        return result

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def coefficient(self, k):
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def is_zero(self):
        return not self.coefficients

    def evaluate(self, x=1):
        return sum(c * x ** k for k, c in enumerate(self.coefficients))

    def _array(self):
        return np.array(self.coefficients or (0,), dtype=np.int64)

    def __add__(self, other):
        other = QPolynomial.coerce(other)
        size = max(len(self.coefficients), len(other.coefficients))
        total = np.zeros(max(size, 1), dtype=np.int64)
        total[:len(self.coefficients)] += np.asarray(self.coefficients, dtype=np.int64)
        total[:len(other.coefficients)] += np.asarray(other.coefficients, dtype=np.int64)
        return QPolynomial(tuple(total.tolist()))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-QPolynomial.coerce(other))

    def __rsub__(self, other):
        return QPolynomial.coerce(other) - self

    def __mul__(self, other):
        other = QPolynomial.coerce(other)
        if self.is_zero() or other.is_zero():
            return QPolynomial()
        return QPolynomial(tuple(np.convolve(self._array(), other._array()).tolist()))

    __rmul__ = __mul__

    def __str__(self):
        if not self.coefficients:
            return '0'
        parts = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                power = 'q' if k == 1 else f'q^{k}'
                body = power if abs(c) == 1 else f'{abs(c)}{power}'
            sign = '-' if c < 0 else '+'
            parts.append((sign, body))
        text = ''.join(f'{sign}{body}' for sign, body in parts)
        return text[1:] if text.startswith('+') else text

    def to_list(self):
        return list(self.coefficients)


ZERO = QPolynomial()
ONE = QPolynomial.constant(1)
Q = QPolynomial.monomial(1)
