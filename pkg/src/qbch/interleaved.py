"""Quasi-BCH codes viewed as interleaved Reed-Solomon codes.

Over the splitting field F_{q^s'} of X^m - 1, Gamma = P diag(lambda_i) P^-1.
Multiplying every block by P^-1 (the map sigma) turns a word into l rows of
length m; the word is a codeword iff it lies in F_q^{ml} and row i satisfies
sum_j lambda_i^(t(j-1)) v_ji = 0 for t = 1..delta-1.  Block errors become
errors in whole columns of that array, which is what the collaborative
decoder exploits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import linalg
from .code import BlockWord, QuasiBCHSpec, is_codeword
from .errors import DecodingFailure, InternalError, NotInBaseField, NotScalarGamma
from .field import GF, build_field, find_embedding, prime_power
from .matring import MatRingElem, evaluate
from .wb import find_root, interpolate

MAX_LOCATOR_CANDIDATES = 4096


def splitting_field(spec: QuasiBCHSpec) -> int:
    """Smallest multiple s' of s with m | q^s' - 1."""
    s2 = spec.s
    while (spec.q**s2 - 1) % spec.m:
        s2 += spec.s
    return s2


@dataclass(frozen=True, eq=False)
class EigenData:
    s_prime: int
    field: GF
    lambdas: tuple[int, ...]
    P: tuple[tuple[int, ...], ...]
    P_inv: tuple[tuple[int, ...], ...]
    emb: object  # F_{q^s} -> F_{q^s'}
    base_emb: object  # F_q -> F_{q^s'}

    @property
    def ell(self) -> int:
        return len(self.lambdas)


@lru_cache(maxsize=32)
def diagonalize(spec: QuasiBCHSpec) -> EigenData:
    """Eigen-decomposition of Gamma over the splitting field.

    Eigenvalues are the m-th roots of unity at which Gamma - mu I is singular,
    sorted by integer code; eigenvectors come from RREF null spaces.
    """
    s2 = splitting_field(spec)
    p, e = prime_power(spec.q)
    big = build_field(p, e * s2)
    emb = find_embedding(spec.field, big)
    base_emb = find_embedding(spec.base, big)
    gamma = spec.gamma.map_entries(emb, big)
    ell = spec.ell
    omega = big.pow(big.generator, (big.order - 1) // spec.m)
    roots = sorted({big.pow(omega, j) for j in range(spec.m)})
    lambdas, vectors = [], []
    for mu in roots:
        shifted = gamma - MatRingElem.scalar(big, ell, mu)
        for v in linalg.nullspace(big, [list(r) for r in shifted.rows], ell):
            lambdas.append(mu)
            vectors.append(v)
    if len(vectors) != ell:
        raise InternalError("Gamma does not diagonalize over the splitting field")
    P = [[vectors[c][r] for c in range(ell)] for r in range(ell)]
    P_inv = linalg.inverse(big, P)
    for lam in lambdas:
        if big.order_of(lam) != spec.m:
            raise InternalError(f"eigenvalue {lam} does not have order {spec.m}")
    return EigenData(s2, big, tuple(lambdas), tuple(map(tuple, P)), tuple(map(tuple, P_inv)),
                     emb, base_emb)


@dataclass(frozen=True)
class InterleavedView:
    """rows[i][j] = v_{j+1, i+1}: row i holds coordinate i of every transformed block."""

    rows: tuple[tuple[int, ...], ...]

    def nonzero_columns(self) -> int:
        return sum(1 for col in zip(*self.rows) if any(col))


def sigma_forward(eig: EigenData, word: BlockWord) -> InterleavedView:
    f = eig.field
    cols = [linalg.matvec(f, eig.P_inv, [eig.base_emb(x) for x in block])
            for block in word.blocks]
    return InterleavedView(tuple(tuple(c[i] for c in cols) for i in range(eig.ell)))


def sigma_inverse(eig: EigenData, view: InterleavedView, base: GF) -> BlockWord:
    f = eig.field
    blocks = []
    for col in zip(*view.rows):
        c = linalg.matvec(f, eig.P, list(col))
        if not all(eig.base_emb.contains(x) for x in c):
            raise NotInBaseField(f"block {c} leaves F_{base.order}")
        blocks.append(tuple(eig.base_emb.pull(x) for x in c))
    return BlockWord(base, tuple(blocks))


def sigma_transform(eig: EigenData, word, direction: str = "forward", base: GF | None = None):
    if direction == "forward":
        return sigma_forward(eig, word)
    if direction == "inverse":
        if base is None:
            raise ValueError("inverse transform needs the base field")
        return sigma_inverse(eig, word, base)
    raise ValueError(f"direction must be 'forward' or 'inverse', not {direction!r}")


def row_syndromes(field: GF, lam: int, row, delta: int) -> list[int]:
    """S_t = sum_j lambda^(t j) row[j], t = 1..delta-1 (j counted from 0)."""
    out = []
    for t in range(1, delta):
        acc = 0
        for j, v in enumerate(row):
            if v:
                acc = field.add(acc, field.mul(field.pow(lam, t * j), v))
        out.append(acc)
    return out


def row_parity_matrix(field: GF, lam: int, m: int, delta: int) -> list[list[int]]:
    return [[field.pow(lam, t * j) for j in range(m)] for t in range(1, delta)]


def row_parity_check(eig: EigenData, spec: QuasiBCHSpec, view: InterleavedView) -> list[bool]:
    return [not any(row_syndromes(eig.field, lam, row, spec.delta))
            for lam, row in zip(eig.lambdas, view.rows)]


def _decode_row(field: GF, lam: int, row, spec: QuasiBCHSpec) -> tuple[int, ...]:
    """Scalar Welch-Berlekamp on one row (the l = 1 case of the matrix decoder)."""
    points = [MatRingElem(field, ((field.pow(lam, j),),)) for j in range(spec.m)]
    Z = [MatRingElem(field, ((v,),)) for v in row]
    Q = interpolate(points, Z, spec.k, spec.tau)
    f = find_root(points, Z, Q, spec.k, spec.tau)
    return tuple(evaluate(f, x, "right").rows[0][0] for x in points)


def _finish(spec: QuasiBCHSpec, eig: EigenData, view: InterleavedView) -> BlockWord:
    try:
        c = sigma_inverse(eig, view, spec.base)
    except NotInBaseField as exc:
        raise DecodingFailure(f"corrected array leaves F_q: {exc}") from None
    if not is_codeword(spec, c):
        raise DecodingFailure("corrected word has nonzero syndromes")
    return c


def ilrs_decode(spec: QuasiBCHSpec, y: BlockWord, eig: EigenData | None = None) -> BlockWord:
    """Row-by-row decoding of sigma(y), each row up to tau errors."""
    spec.check_word(y)
    eig = eig or diagonalize(spec)
    view = sigma_forward(eig, y)
    ok = row_parity_check(eig, spec, view)
    rows = []
    for lam, row, good in zip(eig.lambdas, view.rows, ok):
        rows.append(tuple(row) if good else _decode_row(eig.field, lam, row, spec))
    return _finish(spec, eig, InterleavedView(tuple(rows)))


def _locator_roots(field: GF, lam: int, m: int, locator) -> list[int]:
    """Positions j with locator(lambda^-j) = 0."""
    out = []
    for j in range(m):
        z = field.pow(lam, -j)
        acc = 0
        for c in reversed(locator):
            acc = field.add(field.mul(acc, z), c)
        if acc == 0:
            out.append(j)
    return out


def collaborative_decode(spec: QuasiBCHSpec, y: BlockWord,
                         max_candidates: int = MAX_LOCATOR_CANDIDATES) -> BlockWord:
    """Joint decoding of the l rows against one shared error locator.

    Tries locator degrees t = 1, 2, ... up to floor(l(delta-1)/(l+1)) and
    returns at the first degree that yields exactly one verified codeword.
    When the stacked key equations are rank deficient, every locator in the
    solution space is tried (at most ``max_candidates``).
    """
    spec.check_word(y)
    if not spec.gamma.is_scalar():
        raise NotScalarGamma("collaborative decoding needs Gamma = lambda I")
    eig = diagonalize(spec)
    f = eig.field
    lam = eig.lambdas[0]
    view = sigma_forward(eig, y)
    synd = [row_syndromes(f, lam, row, spec.delta) for row in view.rows]
    if not any(any(s) for s in synd):
        return _finish(spec, eig, view)
    ell, dm1 = spec.ell, spec.delta - 1
    t_max = ell * dm1 // (ell + 1)
    for t in range(1, t_max + 1):
        # S_u + sum_{i=1..t} L_i S_{u-i} = 0 for u = t+1..delta-1, every row
        rows, rhs = [], []
        for S in synd:
            for u in range(t + 1, dm1 + 1):
                rows.append([S[u - i - 1] for i in range(1, t + 1)])
                rhs.append(f.neg(S[u - 1]))
        sol = linalg.solve(f, rows, rhs, t)
        if sol is None:
            continue
        x0, null = sol
        if f.order ** len(null) > max_candidates:
            continue
        results = set()
        for coefs in itertools.product(range(f.order), repeat=len(null)):
            lam_vec = list(x0)
            for a, nv in zip(coefs, null):
                if a:
                    lam_vec = [f.add(x, f.mul(a, w)) for x, w in zip(lam_vec, nv)]
            if lam_vec[-1] == 0:
                continue
            locator = [1] + lam_vec
            positions = _locator_roots(f, lam, spec.m, locator)
            if len(positions) != t:
                continue
            corrected = []
            for S, row in zip(synd, view.rows):
                vander = [[f.pow(lam, u * j) for j in positions] for u in range(1, dm1 + 1)]
                errs = linalg.solve(f, vander, S, t)
                if errs is None:
                    break
                fixed = list(row)
                for j, ev in zip(positions, errs[0]):
                    fixed[j] = f.sub(fixed[j], ev)
                corrected.append(tuple(fixed))
            else:
                try:
                    results.add(_finish(spec, eig, InterleavedView(tuple(corrected))))
                except DecodingFailure:
                    pass
        if len(results) == 1:
            return results.pop()
        if len(results) > 1:
            raise DecodingFailure(f"{len(results)} codewords at block distance {t}")
    raise DecodingFailure("no consistent error locator within the collaborative radius")
