import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qr2m.errors import NotAUnit, ShapeMismatch
from qr2m.lincode import code_from_polynomial
from qr2m.polyring import (
    ZPoly,
    binary_qr_factors,
    cyclotomic_cosets,
    hensel_lift_factors,
    idempotent_from_generator,
    is_idempotent,
    mu_map,
    ring_mul,
)


def naive_cyclic_mul(a, b, n, mod):
    out = [0] * n
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[(i + j) % n] = (out[(i + j) % n] + x * y) % mod
    return out


def test_zpoly_construction_and_text():
    f = ZPoly.from_support((1, 2, 4), 7, 4)
    assert f.coeffs == (0, 1, 1, 0, 1, 0, 0)
    assert ZPoly.from_text(f.to_text(), 7, 4) == f
    assert ZPoly.x_power(9, 7, 4) == ZPoly.x_power(2, 7, 4)


def test_zpoly_arithmetic_basics():
    one = ZPoly.one(5, 3)
    x = ZPoly.x_power(1, 5, 3)
    f = one + x
    assert (f - f).is_zero()
    assert (-f + f).is_zero()
    assert f.scale(3).coeffs == (3, 3, 0, 0, 0)
    g = ZPoly.x_power(4, 5, 3)
    assert (x * g) == one  # x^5 wraps to 1


def test_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        ZPoly.one(5, 3) + ZPoly.one(7, 3)
    with pytest.raises(ShapeMismatch):
        ZPoly.one(5, 3) + ZPoly.one(5, 2)


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=2, max_value=9),
    st.integers(min_value=1, max_value=4),
    st.data(),
)
def test_ring_mul_matches_naive(n, m, data):
    mod = 1 << m
    coeff = st.integers(min_value=0, max_value=mod - 1)
    a = data.draw(st.lists(coeff, min_size=n, max_size=n))
    b = data.draw(st.lists(coeff, min_size=n, max_size=n))
    fa = ZPoly(n=n, m=m, coeffs=tuple(a))
    fb = ZPoly(n=n, m=m, coeffs=tuple(b))
    assert ring_mul(fa, fb).coeffs == tuple(naive_cyclic_mul(a, b, n, mod))


def test_ring_mul_commutes_and_distributes():
    rng = random.Random(7)
    for _ in range(25):
        n, m = rng.randint(2, 9), rng.randint(1, 3)
        mk = lambda: ZPoly(n=n, m=m, coeffs=tuple(rng.randrange(1 << m) for _ in range(n)))
        a, b, c = mk(), mk(), mk()
        assert ring_mul(a, b) == ring_mul(b, a)
        assert ring_mul(a, b + c) == ring_mul(a, b) + ring_mul(a, c)


def test_mu_map_composition():
    f = ZPoly.from_support((1, 2, 4), 7, 3)
    assert mu_map(f, 1) == f
    assert mu_map(mu_map(f, 2), 4) == mu_map(f, 1)  # 2 * 4 = 1 mod 7
    g = mu_map(f, 3)
    assert g.coeffs[3] == 1 and g.coeffs[6] == 1 and g.coeffs[5] == 1
    with pytest.raises(NotAUnit):
        mu_map(ZPoly.one(6, 2), 2)


def test_mu_map_is_ring_morphism():
    rng = random.Random(11)
    for _ in range(10):
        m = rng.randint(1, 3)
        a = ZPoly(n=7, m=m, coeffs=tuple(rng.randrange(1 << m) for _ in range(7)))
        b = ZPoly(n=7, m=m, coeffs=tuple(rng.randrange(1 << m) for _ in range(7)))
        for u in (2, 3, 5):
            assert mu_map(ring_mul(a, b), u) == ring_mul(mu_map(a, u), mu_map(b, u))


def test_cyclotomic_cosets():
    # cosets cover {1..p-1}; the zero orbit is left out
    assert cyclotomic_cosets(7) == [(1, 2, 4), (3, 5, 6)]
    cosets = cyclotomic_cosets(17)
    assert sum(len(c) for c in cosets) == 16
    # ord_2 mod 17 is 8, so both cosets have size 8
    assert sorted(len(c) for c in cosets) == [8, 8]


def test_binary_factors_split_by_residue_class():
    for p in (7, 17, 23, 31):
        fac = binary_qr_factors(p)
        assert fac.verify_product()
        half = (p - 1) // 2
        assert fac.f_q.degree() == half
        assert fac.f_n.degree() == half
        assert fac.f_unit.coeffs[:2] == (1, 1)
    fac7 = binary_qr_factors(7)
    assert fac7.f_q.coeffs == (1, 1, 0, 1, 0, 0, 0)  # 1 + x + x^3
    assert fac7.f_n.coeffs == (1, 0, 1, 1, 0, 0, 0)  # 1 + x^2 + x^3


def test_hensel_lift_known_value():
    lifted = hensel_lift_factors(binary_qr_factors(7), 2)
    # 3 + x + 2x^2 + x^3
    assert lifted.f_q.coeffs == (3, 1, 2, 1, 0, 0, 0)
    assert lifted.verify_product()


def test_hensel_product_many_parameters():
    for p in (7, 17, 23, 31, 41, 47):
        for m in (2, 5, 8):
            lifted = hensel_lift_factors(binary_qr_factors(p), m)
            assert lifted.verify_product()


def test_hensel_tower_consistency():
    for p in (7, 17, 23):
        seed = binary_qr_factors(p)
        top = hensel_lift_factors(seed, 8)
        for j in range(1, 8):
            lower = hensel_lift_factors(seed, j)
            assert top.f_q.reduce_mod(j) == lower.f_q
            assert top.f_n.reduce_mod(j) == lower.f_n
            assert top.f_unit.reduce_mod(j) == lower.f_unit


def test_hensel_reduces_to_seed():
    seed = binary_qr_factors(23)
    lifted = hensel_lift_factors(seed, 6)
    assert lifted.f_q.reduce_mod(1) == seed.f_q
    assert lifted.f_n.reduce_mod(1) == seed.f_n


def test_idempotent_from_generator():
    for p, m in ((7, 2), (7, 4), (17, 3), (23, 4)):
        lifted = hensel_lift_factors(binary_qr_factors(p), m)
        e = idempotent_from_generator(lifted.f_q)
        assert is_idempotent(e)
        assert code_from_polynomial(e) == code_from_polynomial(lifted.f_q)


def test_is_idempotent():
    assert is_idempotent(ZPoly.one(7, 4))
    assert is_idempotent(ZPoly.zero(7, 4))
    assert not is_idempotent(ZPoly.x_power(1, 7, 4))
