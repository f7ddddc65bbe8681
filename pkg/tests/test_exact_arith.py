"""Tests for the exact arithmetic substrate: scalars, polynomials, matrices."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from desmic_kit.scalars import Mod, QI, F4, W, I, sqrt_minus_one, F4_ELEMENTS
from desmic_kit.poly import (MultiPoly, PolyRing, PowerSeriesTrunc, RatFunc,
                             poly_subst, prem)
from desmic_kit.matrices import (IntMatrix, det_poly_matrix, inertia_signature,
                                 matrix_rank, nullspace, pfaffian_poly_matrix,
                                 smith_invariants, smith_normal_form)


# ---------------------------------------------------------------- scalars --

def test_mod_field():
    a = Mod(7, 13)
    assert a + 8 == Mod(2, 13)
    assert a * a == Mod(49, 13)
    assert (a / a) == Mod(1, 13)
    assert a ** -1 * a == 1
    assert -a == Mod(6, 13)


def test_sqrt_minus_one_canonical():
    assert sqrt_minus_one(13) == Mod(5, 13)
    assert sqrt_minus_one(17) == Mod(4, 17)
    for p in (13, 17, 29):
        i = sqrt_minus_one(p)
        assert i * i == Mod(-1, p)
    with pytest.raises(ValueError):
        sqrt_minus_one(7)


def test_gaussian_rationals():
    assert I * I == QI(-1)
    a = QI(Fraction(1, 2), 3)
    assert a * a.conj() == QI(a.norm())
    assert (a / a) == QI(1)
    assert a + Fraction(1, 2) == QI(1, 3)
    assert QI(2) == 2


def test_f4():
    assert W * W == W + 1
    assert W ** 3 == F4(1)
    assert W + W == F4(0)
    assert (W / W) == F4(1)
    assert all(x * x.inverse() == F4(1) for x in F4_ELEMENTS if x)


scalar_samples = {
    "Q": [Fraction(n, d) for n in range(-3, 4) for d in (1, 2, 3)],
    "Qi": [QI(n, m) for n in range(-2, 3) for m in range(-2, 3)],
    "F13": [Mod(n, 13) for n in range(13)],
    "F4": list(F4_ELEMENTS),
}


@pytest.mark.parametrize("field", sorted(scalar_samples))
def test_field_axioms_sampled(field):
    xs = scalar_samples[field]
    rng = random.Random(7)
    for _ in range(50):
        a, b, c = (rng.choice(xs) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if b:
            assert (a / b) * b == a


# ------------------------------------------------------------ polynomials --

def ring_q(*names):
    return PolyRing(names)


def test_poly_subst_basic():
    r = ring_q("x", "y")
    x, y = r.gens()
    f = x + y
    r2 = ring_q("u", "v")
    u, v = r2.gens()
    assert poly_subst(f, {"x": u ** 2, "y": v}) == u ** 2 + v


def test_poly_subst_missing_var():
    r = ring_q("x", "y")
    x, y = r.gens()
    with pytest.raises(ValueError):
        poly_subst(x + y, {"x": x})


def test_poly_mixed_ring_rejected():
    r1, r2 = ring_q("x"), ring_q("y")
    with pytest.raises(ValueError):
        r1.var("x") + r2.var("y")


def test_poly_derivative_char2():
    r = PolyRing(["x", "w"], Mod(1, 2))
    x, w = r.gens()
    f = w ** 2 * x + x ** 2
    assert f.diff("w").is_zero()
    assert f.diff("x") == w ** 2


def test_prem_membership():
    r = ring_q("z", "b")
    z, b = r.gens()
    g = b * z ** 2 + 1
    f = (z ** 3 + b) * g
    assert prem(f, g, "z").is_zero()
    assert not prem(f + z, g, "z").is_zero()


@st.composite
def small_polys(draw, ring, coeff_strategy):
    n = ring.nvars()
    terms = draw(st.lists(
        st.tuples(st.tuples(*[st.integers(0, 2)] * n), coeff_strategy),
        max_size=4))
    out = ring.zero()
    for e, c in terms:
        out = out + MultiPoly(ring, {e: ring.one}).scale(ring.one * c)
    return out


COEFF = {
    "Q": (PolyRing(["x", "y"]), st.fractions(min_value=-3, max_value=3,
                                             max_denominator=4)),
    "Qi": (PolyRing(["x", "y"], QI(1)),
           st.builds(QI, st.integers(-2, 2), st.integers(-2, 2))),
    "F13": (PolyRing(["x", "y"], Mod(1, 13)),
            st.builds(lambda n: Mod(n, 13), st.integers(0, 12))),
    "F4": (PolyRing(["x", "y"], F4(1)),
           st.sampled_from(F4_ELEMENTS)),
}


@pytest.mark.parametrize("variant", sorted(COEFF))
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_poly_ring_axioms(variant, data):
    ring, cs = COEFF[variant]
    f = data.draw(small_polys(ring, cs))
    g = data.draw(small_polys(ring, cs))
    h = data.draw(small_polys(ring, cs))
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + ring.zero() == f
    assert f * ring.const(1) == f


def test_divexact():
    r = ring_q("x", "y")
    x, y = r.gens()
    f = (x + y) ** 3 * (x - 2 * y)
    assert f.divexact(x + y) == (x + y) ** 2 * (x - 2 * y)
    with pytest.raises(ValueError):
        (x ** 2 + y).divexact(x + y)


def test_ratfunc():
    r = ring_q("a", "b")
    a, b = r.gens()
    f = RatFunc(a) / RatFunc(b)
    assert f * RatFunc(b) == RatFunc(a)
    assert RatFunc(a * b, b) == RatFunc(a)
    assert (f + 1) * RatFunc(b) == RatFunc(a + b)


def test_power_series_trunc():
    r = ring_q("u", "v", "t")
    u, v, t = r.gens()
    s = PowerSeriesTrunc.from_poly((u + v) ** 2, N=4)
    assert (s * s) == PowerSeriesTrunc.from_poly((u + v) ** 4, N=4)
    assert (s * s * s).is_zero()  # degree 6 exceeds truncation
    big = PowerSeriesTrunc.from_poly(t, N=3) ** 5
    assert big.is_zero()
    sub = PowerSeriesTrunc.from_poly(u * v + t ** 2, N=4)
    swapped = sub.subst({"u": v, "v": u})
    assert swapped == sub


# ---------------------------------------------------------------- matrices --

def test_det_small():
    r = ring_q("x", "y", "z", "w")
    x, y, z, w = r.gens()
    assert det_poly_matrix([[x]]) == x
    assert det_poly_matrix([[x, y], [z, w]]) == x * w - y * z
    with pytest.raises(ValueError):
        det_poly_matrix([[x, y]])


def test_det_scalar_entries():
    m = [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]
    assert det_poly_matrix(m) == Fraction(-2)


def test_pfaffian_small():
    r = ring_q("a", "b", "c", "d", "e", "f")
    a, b, c, d, e, f = r.gens()
    assert pfaffian_poly_matrix([[r.zero(), f], [-f, r.zero()]]) == f
    z = r.zero()
    m = [[z, a, b, c],
         [-a, z, d, e],
         [-b, -d, z, f],
         [-c, -e, -f, z]]
    assert pfaffian_poly_matrix(m) == a * f - b * e + c * d


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([2, 4, 6]))
def test_pfaffian_squared_is_det(seed, n):
    rng = random.Random(seed)
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = Fraction(rng.randint(-4, 4))
            m[i][j] = v
            m[j][i] = -v
    pf = pfaffian_poly_matrix(m)
    assert pf * pf == det_poly_matrix(m)


def test_pfaffian_char2_symmetric_zero_diagonal():
    r2 = PolyRing(["a", "b", "c", "d", "e", "f"], Mod(1, 2))
    a, b, c, d, e, f = r2.gens()
    z = r2.zero()
    m = [[z, a, b, c],
         [a, z, d, e],
         [b, d, z, f],
         [c, e, f, z]]
    pf = pfaffian_poly_matrix(m)
    assert pf == a * f + b * e + c * d
    assert pf * pf == det_poly_matrix(m)


def gram_a(n):
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2
        if i:
            g[i][i - 1] = g[i - 1][i] = -1
    return g


def gram_d(n):
    g = gram_a(n)
    g[0][1] = g[1][0] = 0
    g[0][2] = g[2][0] = -1
    return g


def gram_e8():
    # E8 as D8 plus one extra node on the third vertex of the chain
    g = [[0] * 8 for _ in range(8)]
    adj = [(0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)]
    # that is D8; E8 instead: chain of 7 with one branch at node 4
    g = [[0] * 8 for _ in range(8)]
    chain = [(i, i + 1) for i in range(6)]
    adj = chain + [(4, 7)]
    for i in range(8):
        g[i][i] = 2
    for i, j in adj:
        g[i][j] = g[j][i] = -1
    return g


def test_smith_identity():
    d, u, v = smith_normal_form(IntMatrix.identity(3))
    assert d == IntMatrix.identity(3)


def test_smith_gram_a3():
    assert smith_invariants(IntMatrix(gram_a(3))) == [1, 1, 4]


def test_smith_gram_d8():
    inv = smith_invariants(IntMatrix(gram_d(8)))
    assert inv[-2:] == [2, 2]
    assert inv[:-2] == [1] * 6


def rand_unimodular(n, rng):
    m = IntMatrix.identity(n)
    a = [list(r) for r in m.rows]
    for _ in range(3 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        for k in range(n):
            a[i][k] += c * a[j][k]
    return IntMatrix(a)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_smith_invariance_and_unimodularity(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    m = IntMatrix([[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)])
    d, u, v = smith_normal_form(m)
    assert u * m * v == d
    assert abs(u.det()) == 1 and abs(v.det()) == 1
    s, t = rand_unimodular(n, rng), rand_unimodular(n, rng)
    d2, _, _ = smith_normal_form(s * m * t)
    assert d.rows == d2.rows


def test_inertia_hyperbolic_plane():
    assert inertia_signature([[0, 1], [1, 0]]) == (1, 0, 1)


def test_inertia_e8_negative():
    g = [[-x for x in row] for row in gram_e8()]
    assert inertia_signature(g) == (0, 0, 8)
    assert abs(IntMatrix(gram_e8()).det()) == 1


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_inertia_congruence_invariance(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            g[i][j] = g[j][i] = rng.randint(-3, 3)
    s = rand_unimodular(n, rng)
    gs = (s.transpose() * IntMatrix(g) * s).rows
    assert inertia_signature(g) == inertia_signature(gs)


def test_rank_nullspace_over_gf13():
    one = Mod(1, 13)
    rows = [[Mod(1, 13), Mod(2, 13), Mod(3, 13)],
            [Mod(2, 13), Mod(4, 13), Mod(6, 13)]]
    assert matrix_rank(rows) == 1
    ker = nullspace(rows, one)
    assert len(ker) == 2
    for vec in ker:
        for row in rows:
            s = Mod(0, 13)
            for a, b in zip(row, vec):
                s = s + a * b
            assert s == Mod(0, 13)
