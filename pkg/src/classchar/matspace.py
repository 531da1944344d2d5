"""Exact dense linear algebra and univariate polynomials over GF(q).

Matrices are flat tuples of length n*n (row-major field elements as
integers), always paired with their FieldSpec.  Polynomials are tuples of
coefficients low-to-high with trailing zeros trimmed; the zero polynomial
is the empty tuple and has degree -1.
"""

from __future__ import annotations

from .errors import ZeroPolynomial
from .field import pow_elem

# ---------------------------------------------------------------------------
# matrices


def mat_identity(F, n):
    return tuple(1 if i == j else 0 for i in range(n) for j in range(n))


def mat_zero(F, n):
    return (0,) * (n * n)


def mat_mul(F, A, B, n):
    add, mul = F.add_table, F.mul_table
    out = [0] * (n * n)
    for i in range(n):
        ioff = i * n
        for k in range(n):
            a = A[ioff + k]
            if a:
                mrow = mul[a]
                koff = k * n
                for j in range(n):
                    b = B[koff + j]
                    if b:
                        out[ioff + j] = add[out[ioff + j]][mrow[b]]
    return tuple(out)


def mat_vec(F, A, v, n):
    add, mul = F.add_table, F.mul_table
    out = [0] * n
    for i in range(n):
        acc = 0
        ioff = i * n
        for j in range(n):
            a = A[ioff + j]
            if a and v[j]:
                acc = add[acc][mul[a][v[j]]]
        out[i] = acc
    return tuple(out)


def mat_transpose(A, n):
    return tuple(A[j * n + i] for i in range(n) for j in range(n))


def mat_scale(F, A, c):
    mul = F.mul_table
    return tuple(mul[c][a] for a in A)


def mat_add(F, A, B):
    add = F.add_table
    return tuple(add[a][b] for a, b in zip(A, B))


def mat_sub(F, A, B):
    add, neg = F.add_table, F.neg_table
    return tuple(add[a][neg[b]] for a, b in zip(A, B))


def mat_entrywise_frob(F, A, k=1):
    """Apply a -> a^(p^k) to every entry (the bar map for unitary groups)."""
    e = F.p ** (k % F.f)
    return tuple(pow_elem(F, a, e) for a in A)


def _echelon(F, rows, ncols):
    """Row-reduce a list of row-lists in place; returns (rank, pivots)."""
    add, mul, neg, inv = F.add_table, F.mul_table, F.neg_table, F.inv_table
    rank = 0
    pivots = []
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        row = rows[rank]
        c = inv[row[col]]
        if c != 1:
            for j in range(col, ncols):
                row[j] = mul[c][row[j]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = neg[rows[r][col]]
                target = rows[r]
                for j in range(col, ncols):
                    if row[j]:
                        target[j] = add[target[j]][mul[factor][row[j]]]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rank, pivots


def rank_of_rows(F, rows):
    """Rank of a list of vectors (tuples) over F."""
    if not rows:
        return 0
    work = [list(r) for r in rows]
    rank, _ = _echelon(F, work, len(rows[0]))
    return rank


def rank_and_kernel(F, A, n):
    """Rank and reduced-echelon kernel basis of a square matrix.

    Kernel vectors v satisfy A @ v = 0; the basis is returned in reduced
    echelon form, so equal kernels have identical bases.
    """
    rows = [list(A[i * n : (i + 1) * n]) for i in range(n)]
    rank, pivots = _echelon(F, rows, n)
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    basis = []
    neg = F.neg_table
    for j in free:
        v = [0] * n
        v[j] = 1
        for r, col in enumerate(pivots):
            v[col] = neg[rows[r][j]]
        basis.append(tuple(v))
    work = [list(v) for v in basis]
    if work:
        _echelon(F, work, n)
    basis = [tuple(v) for v in work]
    assert rank + len(basis) == n
    return rank, basis


def mat_rank(F, A, n):
    rows = [list(A[i * n : (i + 1) * n]) for i in range(n)]
    rank, _ = _echelon(F, rows, n)
    return rank


def mat_inv(F, A, n):
    """Inverse by Gauss-Jordan; raises ZeroDivisionError if singular."""
    add, mul, neg, inv = F.add_table, F.mul_table, F.neg_table, F.inv_table
    work = [list(A[i * n : (i + 1) * n]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if work[r][col]:
                piv = r
                break
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        work[col], work[piv] = work[piv], work[col]
        row = work[col]
        c = inv[row[col]]
        if c != 1:
            for j in range(2 * n):
                row[j] = mul[c][row[j]]
        for r in range(n):
            if r != col and work[r][col]:
                factor = neg[work[r][col]]
                target = work[r]
                for j in range(2 * n):
                    if row[j]:
                        target[j] = add[target[j]][mul[factor][row[j]]]
    return tuple(work[i][n + j] for i in range(n) for j in range(n))


def mat_det(F, A, n):
    add, mul, neg, inv = F.add_table, F.mul_table, F.neg_table, F.inv_table
    work = [list(A[i * n : (i + 1) * n]) for i in range(n)]
    det = 1
    for col in range(n):
        piv = None
        for r in range(col, n):
            if work[r][col]:
                piv = r
                break
        if piv is None:
            return 0
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            det = neg[det]
        row = work[col]
        det = mul[det][row[col]]
        c = inv[row[col]]
        for r in range(col + 1, n):
            if work[r][col]:
                factor = neg[mul[c][work[r][col]]]
                target = work[r]
                for j in range(col, n):
                    if row[j]:
                        target[j] = add[target[j]][mul[factor][row[j]]]
    return det


def char_poly(F, A, n):
    """Characteristic polynomial det(xI - A), monic of degree n.

    Hessenberg reduction by exact similarity transforms, then the standard
    determinant recurrence on the Hessenberg form.
    """
    add, mul, neg, inv = F.add_table, F.mul_table, F.neg_table, F.inv_table
    H = [list(A[i * n : (i + 1) * n]) for i in range(n)]
    for col in range(n - 2):
        piv = None
        for r in range(col + 1, n):
            if H[r][col]:
                piv = r
                break
        if piv is None:
            continue
        if piv != col + 1:
            H[col + 1], H[piv] = H[piv], H[col + 1]
            for r in range(n):
                H[r][col + 1], H[r][piv] = H[r][piv], H[r][col + 1]
        c = inv[H[col + 1][col]]
        for r in range(col + 2, n):
            if H[r][col]:
                factor = mul[c][H[r][col]]
                nfactor = neg[factor]
                for j in range(n):
                    if H[col + 1][j]:
                        H[r][j] = add[H[r][j]][mul[nfactor][H[col + 1][j]]]
                for i in range(n):
                    if H[i][r]:
                        H[i][col + 1] = add[H[i][col + 1]][mul[factor][H[i][r]]]
    # p_0 = 1 (empty product); p_k = charpoly of leading k x k block
    polys = [(1,)]
    for k in range(1, n + 1):
        term = poly_sub(F, poly_shift(polys[k - 1], 1), poly_scale(F, polys[k - 1], H[k - 1][k - 1]))
        beta = 1
        for i in range(k - 1, 0, -1):
            beta = mul[beta][H[i][i - 1]]
            coeff = mul[beta][H[i - 1][k - 1]]
            if coeff:
                term = poly_sub(F, term, poly_scale(F, polys[i - 1], coeff))
        polys.append(term)
    cp = polys[n]
    assert poly_deg(cp) == n and cp[-1] == 1
    return cp


def eval_poly_at_matrix(F, P, A, n):
    """Horner evaluation of P at the matrix A."""
    out = mat_zero(F, n)
    for c in reversed(poly_coeffs(P)):
        out = mat_mul(F, out, A, n)
        if c:
            out = mat_add(F, out, mat_scale(F, mat_identity(F, n), c))
    return out


# ---------------------------------------------------------------------------
# polynomials


def poly_trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_deg(P):
    return len(P) - 1


def poly_coeffs(P):
    return P


def poly_shift(P, k):
    if not P:
        return ()
    return (0,) * k + tuple(P)


def poly_scale(F, P, c):
    if c == 0:
        return ()
    mul = F.mul_table
    return tuple(mul[c][a] for a in P)


def poly_add(F, P, Q):
    add = F.add_table
    n = max(len(P), len(Q))
    P = tuple(P) + (0,) * (n - len(P))
    Q = tuple(Q) + (0,) * (n - len(Q))
    return poly_trim(add[a][b] for a, b in zip(P, Q))


def poly_sub(F, P, Q):
    neg = F.neg_table
    return poly_add(F, P, tuple(neg[a] for a in Q))


def poly_mul(F, P, Q):
    if not P or not Q:
        return ()
    add, mul = F.add_table, F.mul_table
    out = [0] * (len(P) + len(Q) - 1)
    for i, a in enumerate(P):
        if a:
            row = mul[a]
            for j, b in enumerate(Q):
                if b:
                    out[i + j] = add[out[i + j]][row[b]]
    return poly_trim(out)


def poly_divmod(F, P, D):
    if not D:
        raise ZeroDivisionError("division by zero polynomial")
    add, mul, neg, inv = F.add_table, F.mul_table, F.neg_table, F.inv_table
    rem = list(P)
    dd = poly_deg(D)
    lead_inv = inv[D[-1]]
    quot = [0] * max(0, len(P) - dd)
    while len(rem) - 1 >= dd and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dd:
            break
        c = mul[rem[-1]][lead_inv]
        shift = len(rem) - 1 - dd
        quot[shift] = c
        nc = neg[c]
        for j in range(dd + 1):
            if D[j]:
                rem[shift + j] = add[rem[shift + j]][mul[nc][D[j]]]
        while rem and rem[-1] == 0:
            rem.pop()
    return poly_trim(quot), poly_trim(rem)


def poly_gcd(F, P, Q):
    while Q:
        P, Q = Q, poly_divmod(F, P, Q)[1]
    if P:
        P = poly_scale(F, P, F.inv_table[P[-1]])
    return P


def poly_eval(F, P, x):
    add, mul = F.add_table, F.mul_table
    acc = 0
    for c in reversed(P):
        acc = add[mul[acc][x]][c]
    return acc


def poly_monic(F, P):
    if not P:
        return P
    return poly_scale(F, P, F.inv_table[P[-1]])


def poly_pow_mod(F, P, k, M):
    out = (1,)
    base = poly_divmod(F, P, M)[1]
    while k:
        if k & 1:
            out = poly_divmod(F, poly_mul(F, out, base), M)[1]
        base = poly_divmod(F, poly_mul(F, base, base), M)[1]
        k >>= 1
    return out


_IRRED_CACHE = {}


def monic_irreducibles(F, d):
    """All monic irreducibles of degree d over F, in lexicographic order.

    Lexicographic means by the coefficient vector (c_0, ..., c_{d-1}) read
    as digits low-to-high, i.e. the enumeration order of integers.
    Built inductively: a monic poly of degree d is irreducible iff no monic
    irreducible of degree <= d/2 divides it.
    """
    key = (F.p, F.f, F.modulus, d)
    if key in _IRRED_CACHE:
        return _IRRED_CACHE[key]
    q = F.q
    lower = []
    for dd in range(1, d // 2 + 1):
        lower.extend(monic_irreducibles(F, dd))
    out = []
    for idx in range(q ** d):
        coeffs = []
        m = idx
        for _ in range(d):
            coeffs.append(m % q)
            m //= q
        poly = poly_trim(coeffs + [1])
        if d == 1:
            out.append(poly)
            continue
        if poly[0] == 0:
            continue  # divisible by x
        if any(poly_divmod(F, poly, g)[1] == () for g in lower):
            continue
        out.append(poly)
    _IRRED_CACHE[key] = out
    return out


def is_irreducible_poly(F, P):
    """Irreducibility via the x^(q^k) - x gcd criterion."""
    d = poly_deg(P)
    if d <= 0:
        return False
    if d == 1:
        return True
    P = poly_monic(F, P)
    x = (0, 1)
    # x^(q^d) == x mod P and gcd(x^(q^(d/t)) - x, P) == 1 for prime t | d
    xq = poly_pow_mod(F, x, F.q ** d, P)
    if poly_sub(F, xq, x) != ():
        return False
    dd = d
    primes = set()
    t = 2
    while t * t <= dd:
        if dd % t == 0:
            primes.add(t)
            while dd % t == 0:
                dd //= t
        t += 1
    if dd > 1:
        primes.add(dd)
    for t in sorted(primes):
        xq = poly_pow_mod(F, x, F.q ** (d // t), P)
        g = poly_gcd(F, poly_sub(F, xq, x), P)
        if poly_deg(g) > 0:
            return False
    return True


def factor_squarefree_irreducible(F, P):
    """Factor P into (irreducible, multiplicity) pairs, sorted lexicographically.

    Deterministic: repeatedly strips the least irreducible divisor found by
    degree-ordered trial division against the cached irreducible tables.
    """
    if not P:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    P = poly_monic(F, P)
    factors = {}
    d = 1
    while poly_deg(P) > 0:
        if d > poly_deg(P) // 2:
            factors[P] = factors.get(P, 0) + 1
            break
        hit = False
        for g in monic_irreducibles(F, d):
            q, r = poly_divmod(F, P, g)
            if r == ():
                mult = 0
                while r == ():
                    P = q
                    mult += 1
                    if poly_deg(P) < d:
                        break
                    q, r = poly_divmod(F, P, g)
                factors[g] = factors.get(g, 0) + mult
                hit = True
                break
        if not hit:
            d += 1
    for g in factors:
        assert is_irreducible_poly(F, g)
    return sorted(factors.items())
