import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_pow_mod, gf_rem

from qbch.errors import DivisionByZero, NotPrime, TooLarge
from qbch.field import (GF, RelativeBasis, build_field, element_order, embed, field_arith,
                        find_embedding, format_field, is_primitive_poly, prime_power)

FIELDS = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1)]


def _sympy_poly(coeffs):
    # galoistools wants the leading coefficient first
    return [ZZ(c) for c in reversed(coeffs)]


@pytest.mark.parametrize("p,d,modulus", [
    (2, 1, (0, 1)),
    (2, 2, (1, 1, 1)),
    (2, 4, (1, 1, 0, 0, 1)),
])
def test_build_field_modulus(p, d, modulus):
    assert build_field(p, d).modulus == modulus


@pytest.mark.parametrize("p,d", [f for f in FIELDS if f[1] > 1])
def test_modulus_irreducible_and_primitive_per_sympy(p, d):
    f = build_field(p, d)
    poly = _sympy_poly(f.modulus)
    assert gf_irreducible_p(poly, p, ZZ)
    x = [ZZ(1), ZZ(0)]
    n = p**d - 1
    assert gf_pow_mod(x, n, poly, p, ZZ) == [ZZ(1)]
    for r in {n // q for q in range(2, n + 1) if n % q == 0 and all(q % t for t in range(2, q))}:
        assert gf_pow_mod(x, r, poly, p, ZZ) != [ZZ(1)]


@pytest.mark.parametrize("p,d", [(2, 4), (3, 2), (5, 2)])
def test_multiplication_matches_sympy(p, d):
    f = build_field(p, d)
    mod = _sympy_poly(f.modulus)
    for a in f.elements():
        for b in f.elements():
            want = gf_rem(gf_mul(_sympy_poly(f.digits(a)), _sympy_poly(f.digits(b)), p, ZZ),
                          mod, p, ZZ)
            assert f.mul(a, b) == sum(int(c) * p**i for i, c in enumerate(reversed(want)))


def test_small_arithmetic():
    f4 = build_field(2, 2)
    w = 2
    assert f4.mul(w, w) == 3  # w^2 = w + 1
    assert f4.inv(1) == 1
    assert build_field(2, 1).add(1, 1) == 0
    assert field_arith(f4(w), f4(w), "mul") == f4(3)
    assert field_arith(f4(w), None, "inv") * f4(w) == f4(1)


def test_element_order():
    f4, f16 = build_field(2, 2), build_field(2, 4)
    assert element_order(f4(1)) == 1
    assert element_order(f4(2)) == 3
    g = 2  # X is a root of X^4 + X + 1
    assert f16.order_of(f16.pow(g, 3)) == 5


def test_embedding_f4_into_f16():
    f4, f16 = build_field(2, 2), build_field(2, 4)
    emb = find_embedding(f4, f16)
    assert emb(0) == 0 and emb(1) == 1
    assert emb(2) == f16.pow(f16.generator, 5) == 6
    assert f16.order_of(emb(2)) == 3
    assert embed(f4(2), emb) == f16(6)
    assert emb.pull(emb(3)) == 3
    assert not emb.contains(2)


def test_errors():
    with pytest.raises(NotPrime):
        prime_power(12)
    with pytest.raises(NotPrime):
        GF(4, 1, (0, 1))
    with pytest.raises(ValueError):
        GF(2, 2, (1, 0, 1))  # (X+1)^2
    with pytest.raises(TooLarge):
        build_field(2, 21)
    with pytest.raises(DivisionByZero):
        build_field(3, 2).inv(0)
    assert not is_primitive_poly((1, 1, 1, 1, 1), 2)  # irreducible, order 5


def test_format_field():
    assert format_field(build_field(2, 4)) == "p=2\nd=4\nmodulus=1,1,0,0,1"


field_params = st.sampled_from(FIELDS)


@st.composite
def field_and_elems(draw, k=3):
    f = build_field(*draw(field_params))
    return f, [draw(st.integers(0, f.order - 1)) for _ in range(k)]


@given(field_and_elems())
def test_field_axioms(data):
    f, (a, b, c) = data
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == 0
    assert f.sub(f.add(a, b), b) == a
    if a:
        assert f.mul(a, f.inv(a)) == 1
        assert f.mul(f.div(b, a), a) == b
        assert f.pow(a, f.order - 1) == 1
        assert f.pow(a, -1) == f.inv(a)


@given(field_and_elems(2))
def test_frobenius_is_additive_and_multiplicative(data):
    f, (a, b) = data
    fr = lambda x: f.pow(x, f.p)  # noqa: E731
    assert fr(f.add(a, b)) == f.add(fr(a), fr(b))
    assert fr(f.mul(a, b)) == f.mul(fr(a), fr(b))


TOWERS = [((2, 1), (2, 4)), ((2, 2), (2, 4)), ((3, 1), (3, 2)), ((2, 1), (2, 3)), ((2, 2), (2, 2))]


@settings(max_examples=200)
@given(st.sampled_from(TOWERS), st.data())
def test_embedding_is_homomorphism(tower, data):
    src, dst = build_field(*tower[0]), build_field(*tower[1])
    emb = find_embedding(src, dst)
    a = data.draw(st.integers(0, src.order - 1))
    b = data.draw(st.integers(0, src.order - 1))
    assert emb(src.add(a, b)) == dst.add(emb(a), emb(b))
    assert emb(src.mul(a, b)) == dst.mul(emb(a), emb(b))
    assert emb.pull(emb(a)) == a


@given(st.integers(0, 15))
def test_relative_basis_round_trip(w):
    f4, f16 = build_field(2, 2), build_field(2, 4)
    basis = RelativeBasis(find_embedding(f4, f16), [1, f16.generator])
    coords = basis.coords(w)
    assert len(coords) == 2 and all(0 <= c < 4 for c in coords)
    assert basis.combine(coords) == w
