from fractions import Fraction

from classchar.cyclo import Cyclo, compare_real, cyclotomic_polynomial


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(2) == [1, 1]
    assert cyclotomic_polynomial(3) == [1, 1, 1]
    assert cyclotomic_polynomial(4) == [1, 0, 1]
    assert cyclotomic_polynomial(6) == [1, -1, 1]
    assert cyclotomic_polynomial(12) == [1, 0, -1, 0, 1]


def test_root_of_unity_relations():
    z = Cyclo.root_of_unity(5, 1)
    s = z + z ** 2 + z ** 3 + z ** 4
    assert s == -1
    assert (z ** 5) == 1


def test_sum_of_all_roots_is_zero():
    for e in (2, 3, 4, 6, 7, 12):
        total = Cyclo(e)
        for k in range(e):
            total = total + Cyclo.root_of_unity(e, k)
        assert total.is_zero()


def test_galois_and_conj():
    z = Cyclo.root_of_unity(7, 1)
    w = 3 * z + 2 * (z ** 2)
    assert w.conj() == 3 * (z ** 6) + 2 * (z ** 5)
    assert w.galois(2) == 3 * (z ** 2) + 2 * (z ** 4)
    assert (w * w.conj()).conj() == w * w.conj()  # |w|^2 real


def test_rationality_detection():
    z = Cyclo.root_of_unity(4, 1)
    assert not z.is_rational()
    assert (z * z).is_rational() and (z * z).rational_value() == -1
    w = Cyclo.from_rational(4, Fraction(3, 2))
    assert w.rational_value() == Fraction(3, 2)


def test_abs_squared_golden_ratio():
    # z = zeta_5 + zeta_5^4 = (sqrt(5)-1)/2; z real, z > 0
    z = Cyclo.root_of_unity(5, 1) + Cyclo.root_of_unity(5, 4)
    assert z == z.conj()
    assert z.sign_real() == 1
    # z satisfies z^2 + z - 1 = 0
    assert (z * z + z - Cyclo.from_rational(5, 1)).is_zero()


def test_compare_real():
    z = Cyclo.root_of_unity(5, 1) + Cyclo.root_of_unity(5, 4)  # about 0.618
    assert compare_real(z, Fraction(1, 2)) == 1
    assert compare_real(z, 1) == -1
    assert compare_real(z, z) == 0


def test_evaluate_matches_float():
    import cmath

    z = Cyclo.root_of_unity(12, 1) * 2 + Cyclo.root_of_unity(12, 7)
    approx = complex(z.evaluate(dps=30))
    expect = 2 * cmath.exp(2j * cmath.pi / 12) + cmath.exp(2j * cmath.pi * 7 / 12)
    assert abs(approx - expect) < 1e-12


def test_scalar_div_and_json_roundtrip():
    z = Cyclo.root_of_unity(6, 1) * 6 + 3
    w = z.scalar_div(3)
    assert w == Cyclo.root_of_unity(6, 1) * 2 + 1
    again = Cyclo.from_json(w.to_json())
    assert again == w


def test_power_basis_reduction_composite_conductor():
    # zeta_6 = 1 + zeta_6^2 (since Phi_6 = x^2 - x + 1)
    z = Cyclo.root_of_unity(6, 1)
    assert z.canonical() == (0, 1)
    z2 = Cyclo.root_of_unity(6, 2)
    assert (z - z2 - 1).is_zero() is True
