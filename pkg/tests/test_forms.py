import pytest

from classchar.errors import InconsistentSpec
from classchar.field import make_field
from classchar import matspace as ms
from classchar.forms import (
    GroupSpec,
    certified_epsilon,
    dickson_invariant,
    dim_of,
    embed_diag,
    generators,
    in_group,
    is_isometry,
    omega_membership,
    order,
    order_sandwich_holds,
    parse_spec,
    reflection,
    spec_str,
    standard_form,
)


def test_parse_and_roundtrip():
    for s in ["SL(2,3)", "SU(3,2)", "Sp(4,2)", "SO(3,3)", "O+(4,2)", "O-(6,2)"]:
        spec = parse_spec(s)
        assert spec_str(spec) == s
    assert spec_str(parse_spec("o-(4, 3)")) == "O-(4,3)"
    assert spec_str(parse_spec("sl(2,4)")) == "SL(2,4)"


def test_parse_rejects_bad_specs():
    for s in ["XX(2,3)", "SL(2)", "Sp(3,2)", "SO(3,2)", "O+(3,3)"]:
        with pytest.raises((InconsistentSpec, ValueError)):
            parse_spec(s)


def test_su_field_is_square():
    spec = parse_spec("SU(3,2)")
    assert spec.field.q == 4 and spec.q0 == 2


def test_sp2_standard_form():
    spec = parse_spec("Sp(2,3)")
    assert spec.form.gram == (0, 1, 2, 0)  # [[0,1],[-1,0]] over GF(3)


def test_omega_even_forms_match_spec_examples():
    plus = standard_form("Omega", 2, make_field(2, 1), "+")
    assert plus.qmat == (0, 1, 0, 0)
    minus = standard_form("Omega", 2, make_field(2, 1), "-")
    # Q(x,y) = x^2 + xy + y^2: no nonzero singular vector
    vals = {v: minus.quadratic(v) for v in [(0, 1), (1, 0), (1, 1)]}
    assert all(val != 0 for val in vals.values())
    assert minus.qmat == (1, 1, 0, 1)


def test_certified_epsilon_counts():
    for (fam, n, q, eps) in [("Omega", 4, 2, "+"), ("Omega", 4, 2, "-"),
                             ("Omega", 4, 3, "+"), ("Omega", 4, 3, "-"),
                             ("Omega", 6, 2, "+"), ("Omega", 6, 2, "-")]:
        form = standard_form(fam, n, make_field(*_pf(q)), eps)
        assert certified_epsilon(form) == eps


def _pf(q):
    for p in (2, 3, 5, 7):
        f = 1
        while p ** f < q:
            f += 1
        if p ** f == q:
            return (p, f)
    raise ValueError(q)


ORDERS = {
    "SL(2,2)": 6, "SL(2,3)": 24, "SL(2,4)": 60, "SL(2,5)": 120, "SL(2,7)": 336,
    "SL(3,2)": 168, "SL(3,3)": 5616, "SU(3,2)": 216, "SU(3,3)": 6048,
    "Sp(2,3)": 24, "Sp(4,2)": 720, "Sp(4,3)": 51840, "SO(3,3)": 24,
    "O+(4,2)": 36, "O-(4,2)": 60, "O+(4,3)": 288, "O-(4,3)": 360,
    "O+(6,2)": 20160, "O-(6,2)": 25920,
}


def test_orders_match_classical_values():
    for s, o in ORDERS.items():
        assert order(parse_spec(s)) == o, s


def test_dimension_formulas():
    assert dim_of("SL", 3) == 8
    assert dim_of("Sp", 4) == 10
    assert dim_of("SO", 3) == 3
    assert dim_of("Omega", 6) == 15
    assert dim_of("SU", 3) == 4


def test_order_sandwich_paper_carriers():
    # q^D > |G| > q^D/2 for the paper's convention groups
    for s in ["SL(2,2)", "SL(2,3)", "SL(2,4)", "SL(2,5)", "SL(2,7)", "SL(3,2)",
              "SL(3,3)", "SU(3,2)", "SU(3,3)", "Sp(2,3)", "Sp(4,2)", "Sp(4,3)",
              "SO(3,3)", "O+(4,2)", "O-(4,2)", "O+(6,2)", "O-(6,2)"]:
        assert order_sandwich_holds(parse_spec(s)), s
    # Omega in odd characteristic sits index 2 below the paper's SO carrier
    # and the sandwich can fail at desk scale:
    assert not order_sandwich_holds(parse_spec("O+(4,3)"))


def test_is_isometry_examples():
    spec = parse_spec("Sp(2,5)")
    F = spec.field
    assert is_isometry(ms.mat_identity(F, 2), spec.form)
    for a in range(1, 5):
        g = (a, 0, 0, F.inv_table[a])
        assert is_isometry(g, spec.form)
    swap = (0, 1, 1, 0)  # sends gram to -gram
    assert not is_isometry(swap, spec.form)


def test_generators_produce_members():
    for s in ["SL(2,3)", "SL(3,2)", "Sp(4,2)", "SU(3,2)", "SO(3,3)", "O+(4,2)", "O-(4,2)"]:
        spec = parse_spec(s)
        for g in generators(spec):
            assert in_group(spec, g)


def test_reflection_is_isometry_and_involution():
    spec = parse_spec("SO(3,3)")
    F = spec.form.F
    w = (1, 2, 0)
    r = reflection(spec.form, w)
    assert is_isometry(r, spec.form)
    assert ms.mat_mul(F, r, r, 3) == ms.mat_identity(F, 3)
    assert ms.mat_det(F, r, 3) == F.neg_table[1]


def test_omega_membership_identity_and_reflection_product():
    spec = parse_spec("O+(4,3)")
    F = spec.field
    assert omega_membership(ms.mat_identity(F, 4), spec.form)
    from classchar.field import is_square, least_nonsquare

    # product of two reflections whose Q-values are both squares: in Omega
    sq, ns = [], []
    from classchar.forms import all_vectors

    for v in all_vectors(F, 4):
        if any(v) and spec.form.quadratic(v) != 0:
            (sq if is_square(F, spec.form.quadratic(v)) else ns).append(v)
    g = ms.mat_mul(F, reflection(spec.form, sq[0]), reflection(spec.form, sq[1]), 4)
    assert omega_membership(g, spec.form)
    h = ms.mat_mul(F, reflection(spec.form, sq[0]), reflection(spec.form, ns[0]), 4)
    assert not omega_membership(h, spec.form)


def test_dickson_invariant_transvection():
    # an orthogonal transvection over GF(2) has rank(g-1) = 1, Dickson 1
    spec = parse_spec("O+(4,2)")
    F = spec.field
    # x -> x + (x|v) v with Q(v) = 1: v = e2 + e3 has Q = 0+0+1... find one
    from classchar.forms import all_vectors

    v = next(w for w in all_vectors(F, 4) if any(w) and spec.form.quadratic(w) == 1)
    n = 4
    cols = []
    for j in range(n):
        ej = tuple(1 if i == j else 0 for i in range(n))
        c = spec.form.bilinear(ej, v)
        cols.append(tuple(F.add(ej[i], F.mul_table[c][v[i]]) for i in range(n)))
    g = tuple(cols[j][i] for i in range(n) for j in range(n))
    assert is_isometry(g, spec.form)
    assert dickson_invariant(g, spec.form) == 1
    assert not omega_membership(g, spec.form)


def test_embed_diag_form_stacking():
    small = parse_spec("Sp(2,2)")
    big = parse_spec("Sp(4,2)")
    g = (1, 1, 0, 1)
    emb = embed_diag(small, big, g, offset=0)
    assert in_group(big, emb)
    emb2 = embed_diag(small, big, g, offset=2)
    assert in_group(big, emb2)
