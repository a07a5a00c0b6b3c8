import pytest
from hypothesis import given
from hypothesis import strategies as st

from jacsplit.errors import BadModulus, DivisionByZero, NonSquare
from jacsplit.ff import (
    field,
    is_square,
    is_square_in_prime_subfield,
    sqrt,
    sqrt_exhaustive,
)

from conftest import field_and_elements


def test_inv_of_one():
    F = field(11)
    assert F.one.inv() == 1


def test_small_products():
    F = field(11)
    assert F(3) * 4 == 1
    assert F.nonresidue == 2
    assert F.t * F.t == 2


@pytest.mark.parametrize("p,n", [(3, 2), (5, 2), (7, 3), (11, 2), (13, 2), (17, 3)])
def test_smallest_nonresidue(p, n):
    assert field(p).nonresidue == n


@pytest.mark.parametrize("p", [2, 1, 9, 15])
def test_bad_modulus(p):
    with pytest.raises(BadModulus):
        field(p)


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        field(7).zero.inv()
    with pytest.raises(ZeroDivisionError):
        field(7)(1) / 0


def test_prime_subfield_squares_mod_11():
    F = field(11)
    squares = {x * x % 11 for x in range(1, 11)}
    assert squares == {1, 3, 4, 5, 9}
    for x in range(1, 11):
        assert is_square_in_prime_subfield(F(x)) == (x in squares)
    assert is_square_in_prime_subfield(F(3))
    assert not is_square_in_prime_subfield(F(2))


def test_every_prime_field_element_is_a_square_in_L():
    for p in (3, 5, 7, 11, 13):
        F = field(p)
        assert all(is_square(x) for x in F.prime_elements())


def test_sqrt_examples():
    F = field(11)
    assert sqrt(F.zero) == (0, 0)
    assert sqrt(F(4)) == (2, 9)
    assert sqrt(F(2)) == (F.t, -F.t)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_sqrt_matches_exhaustive_search(p):
    F = field(p)
    squares = 0
    for x in F.elements():
        if is_square(x):
            squares += 1
            assert sqrt(x) == sqrt_exhaustive(x)
        else:
            with pytest.raises(NonSquare):
                sqrt(x)
            with pytest.raises(NonSquare):
                sqrt_exhaustive(x)
    # zero plus half of L*
    assert squares == 1 + (p * p - 1) // 2


@given(field_and_elements(n=3))
def test_ring_axioms(data):
    F, (x, y, z) = data
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0
    assert x + (-x) == F.zero


@given(field_and_elements(n=1))
def test_inverse(data):
    F, (x,) = data
    if x:
        assert x * x.inv() == 1
        assert x / x == F.one


@given(field_and_elements(n=1))
def test_frobenius_fixes_L(data):
    F, (x,) = data
    assert x ** (F.p * F.p) == x


@given(field_and_elements(n=1), st.integers(0, 50), st.integers(0, 50))
def test_pow_laws(data, a, b):
    F, (x,) = data
    assert x ** (a + b) == x ** a * x ** b


@given(field_and_elements(n=1))
def test_sqrt_of_square(data):
    F, (x,) = data
    y0, y1 = sqrt(x * x)
    assert y0 * y0 == x * x and y1 == -y0
    assert y0.sort_key() <= y1.sort_key()
