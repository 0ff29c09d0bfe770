import itertools

import pytest
from hypothesis import given, strategies as st

from gqlrc.gf import (
    CONWAY,
    Field,
    FieldError,
    field_create,
    field_of_order,
    frobenius,
    is_irreducible,
    is_primitive,
)

SMALL = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4)]


def test_prime_field_modulus_is_x():
    F = field_create(2, 1)
    assert F.modulus == (0, 1)
    assert F.q == 2


def test_gf4_modulus():
    assert field_create(2, 2).modulus == (1, 1, 1)


def test_non_prime_characteristic():
    with pytest.raises(FieldError):
        Field(4, 1)


@pytest.mark.parametrize("p,h", [(2, 0), (2, 21)])
def test_bad_degree(p, h):
    with pytest.raises(FieldError):
        Field(p, h)


def test_reducible_modulus_rejected():
    with pytest.raises(FieldError):
        Field(2, 2, (1, 0, 1))  # x^2 + 1 = (x + 1)^2


def test_gf4_products():
    F = field_create(2, 2)
    x = F.from_coeffs([0, 1])
    assert F.mul(1, x) == x
    assert F.mul(x, x) == F.from_coeffs([1, 1])


def test_gf3_inverse():
    assert field_create(3).inv(2) == 2


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        field_create(5).inv(0)


def test_mixed_fields():
    a = field_create(2, 2)(1)
    b = field_create(3)(1)
    with pytest.raises(FieldError):
        a + b


def test_element_wrapper():
    F = field_create(3, 2)
    a = F([1, 2])
    assert a.coeffs == (1, 2)
    assert (a * a.inv()).value == 1
    assert (a - a).value == 0
    assert (a ** (F.q - 1)).value == 1


def test_frobenius_examples():
    F4 = field_create(2, 2)
    x = F4(2)
    assert frobenius(x, 1).value == F4.mul(2, 2) == 3
    assert frobenius(field_create(2)(1), 1).value == 1
    F9 = field_create(3, 2)
    for a in F9.elements():
        assert F9.frobenius(F9.frobenius(a, 1), 1) == a


@pytest.mark.parametrize("p,h", SMALL)
def test_field_axioms_exhaustive(p, h):
    F = field_create(p, h)
    els = list(F.elements())
    for a, b, c in itertools.product(els, repeat=3):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    for a in els:
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 243, 256])
def test_lagrange(q):
    F = field_of_order(q)
    assert all(F.pow(a, q - 1) == 1 for a in range(1, q))


@pytest.mark.parametrize("q", [4, 8, 9, 16, 27, 81, 256])
def test_frobenius_full_degree_is_identity(q):
    F = field_of_order(q)
    assert all(F.frobenius(a, F.h) == a for a in F.elements())


@pytest.mark.parametrize("key", sorted(CONWAY))
def test_conway_table_entries_are_primitive(key):
    p, h = key
    assert is_irreducible(CONWAY[key], p)
    assert is_primitive(CONWAY[key], p)


def test_generator_has_full_order():
    for p, h in [(2, 4), (3, 3), (5, 2), (2, 8)]:
        F = field_create(p, h)
        g = F.generator
        assert len({F.pow(g, i) for i in range(F.q - 1)}) == F.q - 1


def test_field_of_order_rejects_composites():
    for q in (6, 12, 1):
        with pytest.raises(FieldError):
            field_of_order(q)


@given(st.sampled_from([(2, 3), (3, 2), (5, 2), (2, 8), (7, 2)]), st.data())
def test_division_roundtrip(ph, data):
    F = field_create(*ph)
    a = data.draw(st.integers(0, F.q - 1))
    b = data.draw(st.integers(1, F.q - 1))
    assert F.mul(F.div(a, b), b) == a


def test_large_field_without_tables():
    F = field_create(2, 17)
    a, b = 12345, 67890
    assert F.mul(F.div(a, b), b) == a
    assert F.pow(a, F.q - 1) == 1
