"""Welch-Berlekamp decoding of quasi-BCH codes through right Reed-Solomon codes
over M_l(F_{q^s}).

The received word y is embedded as Z = psi(y).  Interpolation finds
Q = Q0(X) + Q1(X) Y with (Gamma^(i-1), Z_i)Q = 0 for every position i and
deg Q0 <= n - tau - 1, deg Q1 <= n - tau - k.  Any message polynomial f
within distance tau of Z then satisfies (X, f(X))Q = Q0 + f Q1 = 0, which is
a linear system in the coefficients of f.  Over a matrix ring that system
need not have a unique solution, so the root step keeps the whole affine
solution space and selects the member whose evaluations agree with Z on at
least n - tau positions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg
from .code import BlockWord, QuasiBCHSpec, is_codeword
from .errors import AmbiguousRoot, DecodingFailure, NoSolution, NotInBaseField
from .grs import pr, psi
from .matring import BivariateQ, MatPoly, MatRingElem, evaluate


@dataclass(frozen=True)
class WBInstance:
    spec: QuasiBCHSpec
    Z: tuple[MatRingElem, ...]

    @classmethod
    def from_word(cls, spec: QuasiBCHSpec, y: BlockWord) -> WBInstance:
        spec.check_word(y)
        return cls(spec, psi(y, spec.field))

    @property
    def points(self) -> tuple[MatRingElem, ...]:
        return self.spec.gamma_powers

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def k(self) -> int:
        return self.spec.k

    @property
    def tau(self) -> int:
        return self.spec.tau


def _powers(x: MatRingElem, top: int) -> list[MatRingElem]:
    out = [MatRingElem.identity(x.field, x.ell)]
    for _ in range(top):
        out.append(out[-1] * x)
    return out


def interpolation_system(points, Z, k: int, tau: int):
    """Homogeneous system shared by every column of (Q0, Q1).

    Unknowns are the column vectors of Q0_0..Q0_{d0} followed by those of
    Q1_0..Q1_{d1}; one block of l equations per interpolation point.
    Returns (rows, d0, d1).
    """
    n = len(points)
    ell = points[0].ell
    d0 = n - tau - 1
    d1 = n - tau - k
    rows = []
    for x, z in zip(points, Z):
        pw = _powers(x, max(d0, d1))
        left = [pw[j] for j in range(d0 + 1)] + [pw[j] * z for j in range(d1 + 1)]
        for r in range(ell):
            rows.append([e for blk in left for e in blk.rows[r]])
    return rows, d0, d1


def interpolate(points, Z, k: int, tau: int) -> BivariateQ:
    field, ell = points[0].field, points[0].ell
    rows, d0, d1 = interpolation_system(points, Z, k, tau)
    nvars = ell * (d0 + d1 + 2)
    kernel = linalg.nullspace(field, rows, nvars)
    if not kernel:
        raise NoSolution("interpolation system has only the zero solution")

    def q1_part(v):
        off = ell * (d0 + 1)
        return [v[off + j * ell: off + (j + 1) * ell] for j in range(d1 + 1)]

    def informative(v):
        # Q1 columns annihilated by every Z_i carry no information about f
        return any(any(z.apply(col)) for z in Z for col in q1_part(v) if any(col))

    ranked = sorted(range(len(kernel)), key=lambda i: (not informative(kernel[i]), i))
    cols = [kernel[i] for i in ranked[:ell]]
    cols += [[0] * nvars] * (ell - len(cols))

    def coeff(j):
        return MatRingElem(field, tuple(tuple(cols[c][j * ell + r] for c in range(ell))
                                        for r in range(ell)))

    q0 = MatPoly(field, ell, tuple(coeff(j) for j in range(d0 + 1)))
    q1 = MatPoly(field, ell, tuple(coeff(d0 + 1 + j) for j in range(d1 + 1)))
    return BivariateQ(q0, q1)


def _distance(points, Z, f: MatPoly) -> int:
    return sum(1 for x, z in zip(points, Z) if evaluate(f, x, "right") != z)


def find_root(points, Z, Q: BivariateQ, k: int, tau: int) -> MatPoly:
    """The f of degree < k with (X, f(X))Q = 0 and d(Z, ((x_i)f)_i) <= tau.

    Columns of f where every Z_i vanishes are forced to zero: such a column
    would otherwise evaluate to nonzero at >= n - k + 1 > tau positions.
    """
    field, ell = points[0].field, points[0].ell
    n = len(points)
    active = [c for c in range(ell) if any(z.rows[r][c] for z in Z for r in range(ell))]
    zero_poly = MatPoly(field, ell)
    if not active:
        if _distance(points, Z, zero_poly) <= tau:
            return zero_poly
        raise DecodingFailure("no root within the decoding radius")
    na = len(active)
    nvars = k * ell * na

    def var(a, r, u):  # f_a[r][active[u]]
        return (a * ell + r) * na + u

    # root equations: Q0_t[r][c] + sum_{a+b=t} sum_u f_a[r][u] Q1_b[u][c] = 0
    q0, q1 = Q.q0, Q.q1
    top = max(q0.degree, k - 1 + q1.degree)
    rows, rhs = [], []
    for t in range(top + 1):
        for r in range(ell):
            for c in range(ell):
                row = [0] * nvars
                for a in range(k):
                    b = t - a
                    if 0 <= b <= q1.degree:
                        qb = q1.coeffs[b].rows
                        for ui, u in enumerate(active):
                            if qb[u][c]:
                                row[var(a, r, ui)] = qb[u][c]
                rows.append(row)
                rhs.append(field.neg(q0.coeff(t).rows[r][c]))
    sol = linalg.solve(field, rows, rhs, nvars)
    if sol is None:
        raise DecodingFailure("Q has no root of degree < k")
    x0, null = sol

    def to_poly(vec):
        coeffs = []
        for a in range(k):
            m = [[0] * ell for _ in range(ell)]
            for r in range(ell):
                for ui, u in enumerate(active):
                    m[r][u] = vec[var(a, r, ui)]
            coeffs.append(MatRingElem.from_rows(field, m))
        return MatPoly(field, ell, tuple(coeffs))

    if not null:
        f = to_poly(x0)
        if _distance(points, Z, f) > tau:
            raise DecodingFailure("the unique root of Q is farther than tau from Z")
        return f

    # agreement (x_i)f = Z_i, restated in the coordinates of the solution space
    def dot(u, v):
        acc = 0
        for a, b in zip(u, v):
            if a and b:
                acc = field.add(acc, field.mul(a, b))
        return acc

    agree = []
    for x, z in zip(points, Z):
        pw = _powers(x, k - 1)
        block = []
        for r in range(ell):
            for ui, c in enumerate(active):
                coef = [0] * nvars
                for a in range(k):
                    for u in range(ell):
                        if pw[a].rows[r][u]:
                            coef[var(a, u, ui)] = pw[a].rows[r][u]
                block.append(([dot(coef, nv) for nv in null],
                              field.sub(z.rows[r][c], dot(coef, x0))))
        agree.append(block)

    for errs in range(tau + 1):
        found = None
        for bad in itertools.combinations(range(n), errs):
            skip = set(bad)
            eqs = [e for i in range(n) if i not in skip for e in agree[i]]
            res = linalg.solve(field, [e[0] for e in eqs], [e[1] for e in eqs], len(null))
            if res is None:
                continue
            t = res[0]
            vec = list(x0)
            for coef, nv in zip(t, null):
                if coef:
                    vec = [field.add(v, field.mul(coef, w)) for v, w in zip(vec, nv)]
            f = to_poly(vec)
            if found is None:
                found = f
            elif f != found:
                raise AmbiguousRoot("two roots of Q lie within distance tau of Z")
        if found is not None:
            return found
    raise DecodingFailure("no root of Q lies within distance tau of Z")


def wb_interpolate(inst: WBInstance) -> BivariateQ:
    return interpolate(inst.points, inst.Z, inst.k, inst.tau)


def wb_find_root(inst: WBInstance, Q: BivariateQ) -> MatPoly:
    return find_root(inst.points, inst.Z, Q, inst.k, inst.tau)


def wb_decode(spec: QuasiBCHSpec, y: BlockWord) -> BlockWord:
    inst = WBInstance.from_word(spec, y)
    Q = wb_interpolate(inst)
    f = wb_find_root(inst, Q)
    evals = [evaluate(f, x, "right") for x in inst.points]
    try:
        c = pr(evals, spec.base)
    except NotInBaseField as exc:
        raise DecodingFailure(f"decoded word leaves the base field: {exc}") from None
    if not is_codeword(spec, c):
        raise DecodingFailure("decoded word has nonzero syndromes")
    return c
