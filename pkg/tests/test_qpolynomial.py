import pytest
from hypothesis import given, settings, strategies as st

from KLVController.models.qpolynomial import ONE, Q, ZERO, QPolynomial
from Service.utils.errors import InvalidInputError

polynomials = st.lists(st.integers(-20, 20), max_size=6).map(QPolynomial)


@pytest.mark.parametrize('text,coefficients', [
    ('1+q', (1, 1)),
    ('2q^2-q+1', (1, -1, 2)),
    ('0', ()),
    ('q^3', (0, 0, 0, 1)),
    ('-q + 3', (3, -1)),
    ('2*q', (0, 2)),
])
def test_parse(text, coefficients):
    assert QPolynomial.parse(text).coefficients == coefficients


@pytest.mark.parametrize('text', ['', 'x', 'q^', '1++q', '2qq'])
def test_parse_rejects_garbage(text):
    with pytest.raises(InvalidInputError):
        QPolynomial.parse(text)


def test_string_form():
    assert str(QPolynomial((1, 1))) == '1+q'
    assert str(QPolynomial((0, 0, 1))) == 'q^2'
    assert str(QPolynomial((-2, 0, 3))) == '-2+3q^2'
    assert str(ZERO) == '0'


def test_trailing_zeros_are_dropped():
    assert QPolynomial((1, 0, 0)) == ONE
    assert ZERO.degree == -1
    assert (Q * Q).degree == 2


def test_sums_with_the_zero_polynomial():
    assert ZERO + ONE == ONE
    assert ONE + ZERO == ONE
    assert ZERO + ZERO == ZERO
    assert ZERO - Q == QPolynomial((0, -1))


def test_arithmetic_with_integers():
    assert Q - 1 == QPolynomial((-1, 1))
    assert 2 * Q == QPolynomial((0, 2))
    assert 1 - Q == QPolynomial((1, -1))
    assert (Q + 1) * (Q - 1) == QPolynomial((-1, 0, 1))
    assert (Q + 1).evaluate(1) == 2
    assert QPolynomial.coerce('1+q') == Q + 1


def test_coerce_rejects_other_types():
    with pytest.raises(InvalidInputError):
        QPolynomial.coerce(1.5)


@settings(max_examples=200, derandomize=True, deadline=None)
@given(polynomials, polynomials, polynomials)
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - b) + b == a


@settings(max_examples=200, derandomize=True, deadline=None)
@given(polynomials)
def test_string_form_parses_back(a):
    assert QPolynomial.parse(str(a)) == a
