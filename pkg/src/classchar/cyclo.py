"""Exact cyclotomic numbers.

A Cyclo of conductor e is a formal sum  sum_k c_k zeta^k  with zeta a fixed
primitive e-th root of unity and exponents k taken mod e.  The working
representation is the group ring Z[mu_e] (a sparse exponent -> coefficient
dict), which makes multiplication and Galois twists cheap; the canonical
form reduces modulo the e-th cyclotomic polynomial to the power basis
zeta^0..zeta^(phi(e)-1), which decides equality and rationality exactly.

Coefficients are Python ints when possible and Fractions otherwise; all
arithmetic is exact.  Numeric embedding (for logarithms in reports) goes
through mpmath at user-chosen precision, and sign decisions for real
cyclotomics escalate precision until the error bound separates the value
from zero, so comparisons are exact too.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import mpmath

_CYCLO_POLY_CACHE = {}
_REDROW_CACHE = {}


def _poly_div_exact(num, den):
    """Exact division of integer polynomials (num by monic-leading den)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        assert c % den[-1] == 0
        c //= den[-1]
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    assert not any(num)
    return out


def cyclotomic_polynomial(e):
    """Coefficients of Phi_e, low-to-high, exact integers."""
    if e in _CYCLO_POLY_CACHE:
        return _CYCLO_POLY_CACHE[e]
    poly = [-1] + [0] * (e - 1) + [1]  # x^e - 1
    for d in range(1, e):
        if e % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    _CYCLO_POLY_CACHE[e] = poly
    return poly


def _phi(e):
    out = e
    m = e
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


def reduction_rows(e):
    """rows[k] = coefficients of zeta^k on the power basis, k in [0, 2e)."""
    if e in _REDROW_CACHE:
        return _REDROW_CACHE[e]
    phi = _phi(e)
    Phi = cyclotomic_polynomial(e)
    rows = []
    for k in range(phi):
        row = [0] * phi
        row[k] = 1
        rows.append(row)
    for k in range(phi, 2 * e):
        # zeta^k = zeta * zeta^(k-1), reduced by Phi_e
        prev = rows[k - 1]
        row = [0] + prev[:-1]
        lead = prev[-1]
        if lead:
            for j in range(phi):
                row[j] -= lead * Phi[j]
        rows.append(row)
    _REDROW_CACHE[e] = rows
    return rows


class Cyclo:
    __slots__ = ("e", "c", "_canon")

    def __init__(self, e, coeffs=None):
        self.e = e
        self.c = {}
        self._canon = None
        if coeffs:
            for k, v in coeffs.items():
                if v:
                    k %= e
                    cur = self.c.get(k)
                    self.c[k] = v if cur is None else cur + v
            self.c = {k: v for k, v in self.c.items() if v}

    @staticmethod
    def from_rational(e, value):
        value = value if isinstance(value, int) else Fraction(value)
        return Cyclo(e, {0: value} if value else {})

    @staticmethod
    def root_of_unity(e, k):
        return Cyclo(e, {k % e: 1})

    # ring operations ------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.c)
        for k, v in other.c.items():
            cur = out.get(k)
            s = v if cur is None else cur + v
            if s:
                out[k] = s
            elif cur is not None:
                del out[k]
        z = Cyclo(self.e)
        z.c = out
        return z

    def __neg__(self):
        z = Cyclo(self.e)
        z.c = {k: -v for k, v in self.c.items()}
        return z

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Cyclo(self.e)
            z = Cyclo(self.e)
            z.c = {k: v * other for k, v in self.c.items()}
            return z
        other = self._coerce(other)
        e = self.e
        out = {}
        for k1, v1 in self.c.items():
            for k2, v2 in other.c.items():
                k = k1 + k2
                if k >= e:
                    k -= e
                cur = out.get(k)
                s = v1 * v2 if cur is None else cur + v1 * v2
                out[k] = s
        z = Cyclo(e)
        z.c = {k: v for k, v in out.items() if v}
        return z

    __rmul__ = __mul__
    __radd__ = __add__

    def __pow__(self, k):
        assert k >= 0
        out = Cyclo.from_rational(self.e, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scalar_div(self, d):
        z = Cyclo(self.e)
        z.c = {k: Fraction(v, d) if isinstance(v, int) else v / d for k, v in self.c.items()}
        z.c = {k: (int(v) if isinstance(v, Fraction) and v.denominator == 1 else v) for k, v in z.c.items() if v}
        return z

    def _coerce(self, other):
        if isinstance(other, Cyclo):
            assert other.e == self.e, "conductor mismatch"
            return other
        return Cyclo.from_rational(self.e, other)

    # Galois action --------------------------------------------------------
    def galois(self, t):
        """Apply zeta -> zeta^t; t must be coprime to the conductor."""
        assert gcd(t, self.e) == 1
        z = Cyclo(self.e)
        out = {}
        for k, v in self.c.items():
            kk = (k * t) % self.e
            out[kk] = out.get(kk, 0) + v
        z.c = {k: v for k, v in out.items() if v}
        return z

    def conj(self):
        return self.galois(self.e - 1)

    # canonical form -------------------------------------------------------
    def canonical(self):
        """Coefficient tuple on the power basis zeta^0..zeta^(phi-1)."""
        if self._canon is None:
            rows = reduction_rows(self.e)
            phi = len(rows[0])
            vec = [0] * phi
            for k, v in self.c.items():
                row = rows[k]
                for j in range(phi):
                    if row[j]:
                        vec[j] += v * row[j]
            self._canon = tuple(vec)
        return self._canon

    def is_zero(self):
        return all(v == 0 for v in self.canonical())

    def is_rational(self):
        vec = self.canonical()
        return all(v == 0 for v in vec[1:])

    def rational_value(self):
        assert self.is_rational(), "not a rational cyclotomic"
        v = self.canonical()[0]
        return Fraction(v) if isinstance(v, int) else v

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclo.from_rational(self.e, other)
        if not isinstance(other, Cyclo) or other.e != self.e:
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash((self.e, self.canonical()))

    def sort_key(self):
        """Deterministic total-order key (lexicographic on canonical form)."""
        return tuple(
            (v.numerator, v.denominator) if isinstance(v, Fraction) else (v, 1)
            for v in self.canonical()
        )

    # numerics -------------------------------------------------------------
    def evaluate(self, dps=40):
        """Embed at zeta = exp(2 pi i / e) with mpmath at dps digits."""
        with mpmath.workdps(dps):
            total = mpmath.mpc(0)
            for k, v in self.c.items():
                if isinstance(v, Fraction):
                    coeff = mpmath.mpf(v.numerator) / mpmath.mpf(v.denominator)
                else:
                    coeff = mpmath.mpf(v)
                total += coeff * mpmath.expjpi(mpmath.mpf(2 * k) / self.e)
            return total

    def abs_squared(self):
        """|z|^2 = z * conj(z), a real cyclotomic, exact."""
        return self * self.conj()

    def coeff_l1(self):
        total = 0
        for v in self.c.values():
            total += abs(v)
        return total

    def sign_real(self):
        """Exact sign of a real cyclotomic (raises if not real)."""
        assert self == self.conj(), "sign_real needs a real cyclotomic"
        if self.is_zero():
            return 0
        l1 = self.coeff_l1()
        l1 = float(l1) if not isinstance(l1, int) else l1
        dps = 40
        while True:
            val = self.evaluate(dps=dps)
            bound = mpmath.mpf(10) ** (8 - dps) * (1 + l1)
            assert abs(val.imag) <= bound
            if val.real > bound:
                return 1
            if val.real < -bound:
                return -1
            dps *= 2
            assert dps <= 10 ** 5, "sign decision did not converge"

    def __repr__(self):
        if not self.c:
            return "Cyclo(0)"
        terms = ", ".join(f"{v}*z{self.e}^{k}" for k, v in sorted(self.c.items()))
        return f"Cyclo({terms})"

    def to_json(self):
        return {
            "conductor": self.e,
            "terms": {
                str(k): ([v.numerator, v.denominator] if isinstance(v, Fraction) else [v, 1])
                for k, v in sorted(self.c.items())
            },
        }

    @staticmethod
    def from_json(obj):
        e = obj["conductor"]
        coeffs = {}
        for k, (num, den) in obj["terms"].items():
            coeffs[int(k)] = num if den == 1 else Fraction(num, den)
        return Cyclo(e, coeffs)


def cyclo_sum(e, items):
    total = Cyclo(e)
    for z in items:
        total = total + z
    return total


def compare_real(a, b):
    """Exact comparison of two real cyclotomics (or rationals): sign(a - b)."""
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        d = a - b
        return (d > 0) - (d < 0)
    if isinstance(a, (int, Fraction)):
        a = Cyclo.from_rational(b.e, a)
    if isinstance(b, (int, Fraction)):
        b = Cyclo.from_rational(a.e, b)
    return (a - b).sign_real()
