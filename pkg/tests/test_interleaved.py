import itertools
import random
from types import SimpleNamespace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qbch import linalg
from qbch.code import BlockWord, block_metric, build_spec, encode, is_codeword
from qbch.errors import DecodingFailure, NotInBaseField, NotScalarGamma
from qbch.field import build_field
from qbch.interleaved import (InterleavedView, collaborative_decode, diagonalize, ilrs_decode,
                              row_parity_check, row_parity_matrix, sigma_transform,
                              splitting_field)
from qbch.matring import MatRingElem
from qbch.sim import random_error
from qbch.wb import wb_decode

SPECS = [(2, 1, 2, 3, 2), (2, 2, 2, 5, 3), (2, 2, 2, 5, 2), (3, 1, 2, 4, 3), (2, 1, 3, 7, 3),
         (2, 1, 4, 5, 3), (2, 1, 2, 3, 3)]


def test_splitting_field(small_spec, wb_spec):
    assert splitting_field(small_spec) == 2
    assert splitting_field(wb_spec) == 4
    assert splitting_field(SimpleNamespace(q=2, s=3, m=1)) == 3


def test_eigenvalues_of_companion_matrix(small_spec):
    eig = diagonalize(small_spec)
    f4 = build_field(2, 2)
    assert eig.field == f4
    assert eig.lambdas == (2, 3)  # w and w^2 = w + 1
    assert f4.mul(2, 2) == 3


def test_scalar_gamma_is_already_diagonal(scalar_spec):
    eig = diagonalize(scalar_spec)
    assert eig.lambdas == (2, 2)
    assert eig.P == ((1, 0), (0, 1))


@pytest.mark.parametrize("params", SPECS)
def test_diagonalization(params):
    spec = build_spec(*params)
    eig = diagonalize(spec)
    f = eig.field
    gamma = [[eig.emb(x) for x in row] for row in spec.gamma.rows]
    D = linalg.matmul(f, linalg.matmul(f, [list(r) for r in eig.P_inv], gamma),
                      [list(r) for r in eig.P])
    assert D == [[eig.lambdas[i] if i == j else 0 for j in range(spec.ell)]
                 for i in range(spec.ell)]
    assert all(f.order_of(lam) == spec.m for lam in eig.lambdas)


@pytest.mark.parametrize("params", [p for p in SPECS if p[0] ** (p[2] * p[3]) <= 1 << 13])
def test_membership_equivalence(params):
    spec = build_spec(*params)
    eig = diagonalize(spec)
    for flat in itertools.product(range(spec.q), repeat=spec.length):
        y = BlockWord.from_flat(spec.base, flat, spec.ell)
        view = sigma_transform(eig, y)
        assert is_codeword(spec, y) == all(row_parity_check(eig, spec, view))


@settings(max_examples=80)
@given(st.sampled_from(SPECS), st.data())
def test_sigma_round_trip_and_isometry(params, data):
    spec = build_spec(*params)
    eig = diagonalize(spec)
    flat = data.draw(st.lists(st.integers(0, spec.q - 1), min_size=spec.length,
                              max_size=spec.length))
    y = BlockWord.from_flat(spec.base, flat, spec.ell)
    view = sigma_transform(eig, y, "forward")
    assert sigma_transform(eig, view, "inverse", spec.base) == y
    assert view.nonzero_columns() == block_metric(y)


def test_sigma_edge_cases(wb_spec):
    eig = diagonalize(wb_spec)
    zero = BlockWord.zero(wb_spec.base, 5, 2)
    view = sigma_transform(eig, zero)
    assert not any(any(r) for r in view.rows)
    assert all(row_parity_check(eig, wb_spec, view))
    bad = InterleavedView(((2, 0, 0, 0, 0), (0, 0, 0, 0, 0)))
    with pytest.raises(NotInBaseField):
        sigma_transform(eig, bad, "inverse", wb_spec.base)
    with pytest.raises(ValueError):
        sigma_transform(eig, zero, "sideways")


def test_single_block_error_fails_some_row(wb_spec):
    eig = diagonalize(wb_spec)
    c = encode(wb_spec, [1, 1])
    assert all(row_parity_check(eig, wb_spec, sigma_transform(eig, c)))
    e = BlockWord(wb_spec.base, ((0, 0), (1, 0), (0, 0), (0, 0), (0, 0)))
    assert not all(row_parity_check(eig, wb_spec, sigma_transform(eig, c + e)))


def test_scalar_gamma_rows_share_one_code(scalar_spec):
    eig = diagonalize(scalar_spec)
    mats = {tuple(map(tuple, row_parity_matrix(eig.field, lam, 15, 7))) for lam in eig.lambdas}
    assert len(mats) == 1


def test_ilrs_agrees_with_wb_exhaustively(wb_spec):
    words = [encode(wb_spec, m) for m in itertools.product(range(2), repeat=2)]
    for c in words:
        assert ilrs_decode(wb_spec, c) == c
        for pos in range(5):
            for b in itertools.product(range(2), repeat=2):
                blocks = [(0, 0)] * 5
                blocks[pos] = b
                y = c + BlockWord(wb_spec.base, tuple(blocks))
                assert ilrs_decode(wb_spec, y) == wb_decode(wb_spec, y) == c


def test_ilrs_beyond_radius_fails_or_returns_a_codeword(wb_spec):
    rng = random.Random(3)
    for _ in range(100):
        c = encode(wb_spec, [rng.randrange(2), rng.randrange(2)])
        y = c + random_error(wb_spec, 2, rng)
        try:
            got = ilrs_decode(wb_spec, y)
        except DecodingFailure:
            continue
        assert is_codeword(wb_spec, got)


def test_collaborative_needs_scalar_gamma(wb_spec):
    with pytest.raises(NotScalarGamma):
        collaborative_decode(wb_spec, BlockWord.zero(wb_spec.base, 5, 2))


def test_collaborative_within_half_distance(scalar_spec):
    rng = random.Random(17)
    for t in range(scalar_spec.tau + 1):
        for _ in range(15):
            c = encode(scalar_spec, [rng.randrange(2) for _ in range(scalar_spec.dim)])
            y = c + random_error(scalar_spec, t, rng)
            assert collaborative_decode(scalar_spec, y) == wb_decode(scalar_spec, y) == c


def test_collaborative_beyond_half_distance(scalar_spec):
    rng = random.Random(23)
    ok = 0
    for _ in range(20):
        c = encode(scalar_spec, [rng.randrange(2) for _ in range(scalar_spec.dim)])
        y = c + random_error(scalar_spec, 4, rng)
        try:
            got = collaborative_decode(scalar_spec, y)
        except DecodingFailure:
            continue
        assert is_codeword(scalar_spec, got)
        assert block_metric(got, y) <= 4
        ok += got == c
    assert ok >= 12


def test_non_scalar_gamma_spec_rejected_even_if_diagonal():
    f16 = build_field(2, 4)
    g = f16.generator
    gamma = MatRingElem.from_rows(f16, [[g, 0], [0, f16.pow(g, 2)]])
    spec = build_spec(2, 4, 2, 15, 3, gamma)
    with pytest.raises(NotScalarGamma):
        collaborative_decode(spec, BlockWord.zero(spec.base, 15, 2))
