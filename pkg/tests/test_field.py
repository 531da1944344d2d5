import pytest

from classchar.errors import EnvelopeExceeded, NonPrime, WrongCharacteristic
from classchar.field import (
    frobenius,
    is_square,
    least_nonsquare,
    make_field,
    pow_elem,
    sqrt_char2,
)


def test_prime_field_modulus_is_x():
    F = make_field(2, 1)
    assert F.q == 2
    assert F.modulus == (0, 1)


def test_gf9_modulus_is_least_lex_irreducible():
    # enumerate monic quadratics over GF(3); irreducible iff no root
    F = make_field(3, 2)
    found = None
    for c0 in range(3):
        for c1 in range(3):
            if all((x * x + c1 * x + c0) % 3 != 0 for x in range(3)):
                found = (c0, c1, 1)
                break
        if found:
            break
    assert F.modulus == found == (1, 0, 1)  # x^2 + 1


def test_non_prime_rejected():
    with pytest.raises(NonPrime):
        make_field(4, 1)


def test_envelope():
    with pytest.raises(EnvelopeExceeded):
        make_field(2, 17)


@pytest.mark.parametrize("p,f", [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2), (2, 3), (7, 1)])
def test_field_axioms_exhaustive(p, f):
    F = make_field(p, f)
    q = F.q
    els = list(F.elements())
    for a in els:
        assert F.add(a, 0) == a
        assert F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    # associativity/distributivity over all triples (q <= 8 here)
    for a in els:
        for b in els:
            for c in els:
                assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("p,f", [(2, 2), (3, 2), (2, 3)])
def test_frobenius_is_automorphism(p, f):
    F = make_field(p, f)
    for a in F.elements():
        for b in F.elements():
            assert frobenius(F, F.add(a, b)) == F.add(frobenius(F, a), frobenius(F, b))
            assert frobenius(F, F.mul(a, b)) == F.mul(frobenius(F, a), frobenius(F, b))
        assert frobenius(F, frobenius(F, a, 1), f - 1) == a
        assert frobenius(F, a, f) == a


def test_frobenius_gf4_generator():
    F = make_field(2, 2)
    g = F.gen()
    assert frobenius(F, g, 1) == pow_elem(F, g, 2) == F.add(g, 1)


def test_frobenius_fixed_field_size():
    # q = q0^2: a -> a^q0 has fixed field of size exactly q0
    for (p, f) in [(2, 2), (3, 2)]:
        F = make_field(p, f)
        q0 = p ** (f // 2)
        fixed = [a for a in F.elements() if pow_elem(F, a, q0) == a]
        assert len(fixed) == q0


def test_sqrt_char2_exhaustive():
    F = make_field(2, 3)
    for a in F.elements():
        b = sqrt_char2(F, a)
        assert F.mul(b, b) == a
    # additivity
    for a in F.elements():
        for b in F.elements():
            assert sqrt_char2(F, F.add(a, b)) == F.add(sqrt_char2(F, a), sqrt_char2(F, b))
    assert sqrt_char2(F, 0) == 0 and sqrt_char2(F, 1) == 1


def test_sqrt_char2_wrong_characteristic():
    F = make_field(3, 1)
    with pytest.raises(WrongCharacteristic):
        sqrt_char2(F, 1)


def test_squares_odd_q():
    F = make_field(7, 1)
    squares = {F.mul(a, a) for a in F.elements()}
    for a in F.elements():
        assert is_square(F, a) == (a in squares)
    assert least_nonsquare(F) not in squares
