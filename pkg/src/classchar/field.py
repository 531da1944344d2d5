"""Exact arithmetic in GF(p^f).

Field elements are integers in [0, q) encoding polynomial coefficient
vectors in base p, low digit = constant term.  So in GF(9) with modulus
x^2+1, the integer 5 = 2 + 1*3 encodes 2 + x.  The zero element is 0 and
the multiplicative identity is 1 for every field.

The modulus is the lexicographically least monic irreducible of degree f
over GF(p) (coefficient order low-to-high), which makes every run
reproducible.  All arithmetic goes through precomputed tables, so the
supported envelope is q <= 2**16 but tables are only built on demand.
"""

from __future__ import annotations

from .errors import EnvelopeExceeded, NonPrime, WrongCharacteristic

ENVELOPE = 2 ** 16


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    # deterministic Miller-Rabin, valid far beyond the envelope
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _digits(value, p, f):
    out = []
    for _ in range(f):
        out.append(value % p)
        value //= p
    return out


def _undigits(coeffs, p):
    value = 0
    for c in reversed(coeffs):
        value = value * p + c
    return value


def _poly_mod_mul(a, b, modulus, p):
    """Multiply two coefficient lists mod (modulus, p)."""
    f = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce by the monic modulus
    for i in range(len(prod) - 1, f - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(f + 1):
                prod[i - f + j] = (prod[i - f + j] - c * modulus[j]) % p
    return prod[:f] + [0] * (f - len(prod))


def _is_irreducible(poly, p):
    """Test irreducibility of a monic poly over GF(p) by trial division."""
    deg = len(poly) - 1
    if deg == 1:
        return True
    # x^(p^k) - x gcd ladder is overkill at these degrees; trial division
    # against all monic polynomials of degree <= deg/2 is exact and simple.
    for d in range(1, deg // 2 + 1):
        for idx in range(p ** d):
            trial = _digits(idx, p, d) + [1]
            if _poly_divides(trial, poly, p):
                return False
    return True


def _poly_divides(d, f, p):
    rem = list(f)
    dd = len(d) - 1
    while len(rem) - 1 >= dd and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dd:
            break
        c = rem[-1]  # d monic
        shift = len(rem) - 1 - dd
        for j in range(dd + 1):
            rem[shift + j] = (rem[shift + j] - c * d[j]) % p
        while rem and rem[-1] == 0:
            rem.pop()
    return not any(rem)


def least_irreducible(p, f):
    """Lexicographically least monic irreducible of degree f over GF(p)."""
    if f == 1:
        return [0, 1]  # the polynomial x
    for idx in range(p ** f):
        poly = _digits(idx, p, f) + [1]
        if _is_irreducible(poly, p):
            return poly
    raise AssertionError("no irreducible polynomial found (impossible)")


class FieldSpec:
    """GF(p^f) with explicit modulus and full arithmetic tables.

    Immutable after construction; shareable across workers.
    """

    def __init__(self, p, f, modulus=None):
        if not is_prime(p):
            raise NonPrime(f"p={p} is not prime")
        if f < 1:
            raise EnvelopeExceeded(f"degree f={f} must be >= 1")
        q = p ** f
        if q > ENVELOPE:
            raise EnvelopeExceeded(f"q={q} exceeds the supported envelope {ENVELOPE}")
        self.p = p
        self.f = f
        self.q = q
        if modulus is None:
            modulus = least_irreducible(p, f)
        assert len(modulus) == f + 1 and modulus[-1] == 1
        assert _is_irreducible(modulus, p)
        self.modulus = tuple(modulus)
        self._build_tables()

    def _build_tables(self):
        p, f, q = self.p, self.f, self.q
        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            da = _digits(a, p, f)
            for b in range(a, q):
                db = _digits(b, p, f)
                s = _undigits([(x + y) % p for x, y in zip(da, db)], p)
                add[a][b] = s
                add[b][a] = s
                m = _undigits(_poly_mod_mul(da, db, list(self.modulus), p), p)
                mul[a][b] = m
                mul[b][a] = m
        self.add_table = add
        self.mul_table = mul
        neg = [0] * q
        for a in range(q):
            da = _digits(a, p, f)
            neg[a] = _undigits([(-x) % p for x in da], p)
        self.neg_table = neg
        inv = [0] * q
        for a in range(1, q):
            inv[a] = pow_elem(self, a, q - 2)
            assert mul[a][inv[a]] == 1
        self.inv_table = inv

    # element-level operations -------------------------------------------
    def add(self, a, b):
        return self.add_table[a][b]

    def sub(self, a, b):
        return self.add_table[a][self.neg_table[b]]

    def neg(self, a):
        return self.neg_table[a]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.inv_table[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        return range(self.q)

    def gen(self):
        """The image of x, a field generator as an F_p-algebra."""
        return self.p if self.f > 1 else (1 if self.p == 2 else self.least_primitive())

    def least_primitive(self):
        """Least multiplicative generator (used for prime fields)."""
        for a in range(2, self.q):
            seen, x, n = 1, a, 1
            while x != 1:
                x = self.mul(x, a)
                n += 1
            if n == self.q - 1:
                return a
        return 1

    def coeffs(self, a):
        return _digits(a, self.p, self.f)

    def from_coeffs(self, coeffs):
        assert len(coeffs) == self.f
        return _undigits([c % self.p for c in coeffs], self.p)

    def to_json(self):
        return {"p": self.p, "f": self.f, "modulus": list(self.modulus)}

    def __repr__(self):
        return f"GF({self.q})"

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.f, self.modulus) == (other.p, other.f, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.f, self.modulus))


def pow_elem(F, a, k):
    out, base = 1, a
    while k:
        if k & 1:
            out = F.mul_table[out][base]
        base = F.mul_table[base][base]
        k >>= 1
    return out


_FIELD_CACHE = {}


def make_field(p, f):
    """GF(p^f) with the deterministically chosen modulus, memoized."""
    key = (p, f)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = FieldSpec(p, f)
    return _FIELD_CACHE[key]


def field_of_size(q):
    """GF(q) for a prime power q."""
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                raise NonPrime(f"{q} is not a prime power")
            f = 0
            m = q
            while m % p == 0:
                m //= p
                f += 1
            if m != 1:
                raise NonPrime(f"{q} is not a prime power")
            return make_field(p, f)
    raise NonPrime(f"{q} is not a prime power")


def frobenius(F, a, k=1):
    """a^(p^k); frobenius(., f) is the identity map."""
    return pow_elem(F, a, F.p ** (k % F.f))


def sqrt_char2(F, a):
    """The unique square root in characteristic 2: frobenius(., f-1)."""
    if F.p != 2:
        raise WrongCharacteristic("sqrt_char2 requires characteristic 2")
    return frobenius(F, a, F.f - 1) if F.f > 1 else a


def sqrt_odd(F, a):
    """A square root in odd characteristic, or None if a is a non-square."""
    if a == 0:
        return 0
    for b in range(1, F.q):
        if F.mul(b, b) == a:
            return b
    return None


def is_square(F, a):
    """Square test in F^x (0 counts as a square)."""
    if a == 0:
        return True
    if F.p == 2:
        return True
    return pow_elem(F, a, (F.q - 1) // 2) == 1


def least_nonsquare(F):
    for a in range(2, F.q):
        if not is_square(F, a):
            return a
    raise WrongCharacteristic("every element is a square (char 2?)")
