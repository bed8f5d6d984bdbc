"""The matrix ring M_l(F) and polynomials over it.

Evaluation in a noncommutative ring depends on which side the coefficients
sit, so every evaluator here takes an explicit side.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import linalg
from .errors import DimensionMismatch, IncompatibleOrder, NotCoprime
from .field import GF, FieldElement, RelativeBasis, build_field, find_embedding, prime_power


@dataclass(frozen=True)
class MatRingElem:
    field: GF
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n == 0 or any(len(r) != n for r in self.rows):
            raise DimensionMismatch("matrix ring elements must be square and non-empty")

    @classmethod
    def from_rows(cls, field: GF, rows) -> MatRingElem:
        return cls(field, tuple(tuple(int(x) for x in r) for r in rows))

    @classmethod
    def zero(cls, field: GF, ell: int) -> MatRingElem:
        return cls(field, tuple((0,) * ell for _ in range(ell)))

    @classmethod
    def scalar(cls, field: GF, ell: int, c: int) -> MatRingElem:
        return cls(field, tuple(tuple(c if i == j else 0 for j in range(ell))
                                for i in range(ell)))

    @classmethod
    def identity(cls, field: GF, ell: int) -> MatRingElem:
        return cls.scalar(field, ell, 1)

    @property
    def ell(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> FieldElement:
        return self.field(self.rows[i][j])

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def _check(self, other: MatRingElem):
        if other.field != self.field or other.ell != self.ell:
            raise DimensionMismatch("operands live in different matrix rings")

    def __add__(self, other: MatRingElem) -> MatRingElem:
        self._check(other)
        add = self.field.add
        return MatRingElem(self.field, tuple(tuple(add(x, y) for x, y in zip(r, s))
                                             for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: MatRingElem) -> MatRingElem:
        self._check(other)
        sub = self.field.sub
        return MatRingElem(self.field, tuple(tuple(sub(x, y) for x, y in zip(r, s))
                                             for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> MatRingElem:
        neg = self.field.neg
        return MatRingElem(self.field, tuple(tuple(neg(x) for x in r) for r in self.rows))

    def __mul__(self, other: MatRingElem) -> MatRingElem:
        self._check(other)
        prod = linalg.matmul(self.field, self.rows, other.rows)
        return MatRingElem(self.field, tuple(tuple(r) for r in prod))

    def scale(self, c: int) -> MatRingElem:
        mul = self.field.mul
        return MatRingElem(self.field, tuple(tuple(mul(c, x) for x in r) for r in self.rows))

    def __pow__(self, e: int) -> MatRingElem:
        if e < 0:
            return self.inverse() ** (-e)
        acc = MatRingElem.identity(self.field, self.ell)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def det(self) -> int:
        return linalg.determinant(self.field, self.rows)

    def is_unit(self) -> bool:
        return self.det() != 0

    def inverse(self) -> MatRingElem:
        return MatRingElem.from_rows(self.field, linalg.inverse(self.field, self.rows))

    def commutes_with(self, other: MatRingElem) -> bool:
        return self * other == other * self

    def is_scalar(self) -> bool:
        c = self.rows[0][0]
        return self == MatRingElem.scalar(self.field, self.ell, c)

    def apply(self, v) -> list[int]:
        """Matrix times column vector."""
        return linalg.matvec(self.field, self.rows, v)

    def map_entries(self, fn, field: GF) -> MatRingElem:
        return MatRingElem(field, tuple(tuple(fn(x) for x in r) for r in self.rows))

    def flat(self) -> list[int]:
        return [x for r in self.rows for x in r]

    def __repr__(self):
        return f"Mat{[list(r) for r in self.rows]}"


def mat_is_unit(m: MatRingElem) -> bool:
    return m.is_unit()


@dataclass(frozen=True)
class MatPoly:
    """Polynomial sum coeffs[i] X^i with matrix coefficients; X is central."""

    field: GF
    ell: int
    coeffs: tuple[MatRingElem, ...] = ()

    def __post_init__(self):
        cs = list(self.coeffs)
        for c in cs:
            if c.field != self.field or c.ell != self.ell:
                raise DimensionMismatch("coefficient outside the polynomial's ring")
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> MatRingElem:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return MatRingElem.zero(self.field, self.ell)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: MatPoly) -> MatPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return MatPoly(self.field, self.ell,
                       tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __neg__(self) -> MatPoly:
        return MatPoly(self.field, self.ell, tuple(-c for c in self.coeffs))

    def __sub__(self, other: MatPoly) -> MatPoly:
        return self + (-other)

    def __mul__(self, other: MatPoly) -> MatPoly:
        if self.is_zero() or other.is_zero():
            return MatPoly(self.field, self.ell)
        zero = MatRingElem.zero(self.field, self.ell)
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return MatPoly(self.field, self.ell, tuple(out))


def evaluate(f: MatPoly, a: MatRingElem, side: str = "left") -> MatRingElem:
    """Left evaluation f(a) = sum f_i a^i, or right evaluation (a)f = sum a^i f_i."""
    if a.field != f.field or a.ell != f.ell:
        raise DimensionMismatch("evaluation point outside the polynomial's ring")
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    acc = MatRingElem.zero(f.field, f.ell)
    power = MatRingElem.identity(f.field, f.ell)
    for c in f.coeffs:
        acc = acc + (c * power if side == "left" else power * c)
        power = power * a
    return acc


@dataclass(frozen=True)
class BivariateQ:
    """Q = q0(X) + q1(X) Y."""

    q0: MatPoly
    q1: MatPoly

    def is_zero(self) -> bool:
        return self.q0.is_zero() and self.q1.is_zero()


def biv_evaluate(Q: BivariateQ, a: MatRingElem, b: MatRingElem) -> MatRingElem:
    """(a, b)Q = sum a^i b^j Q_ij, coefficients multiplied on the right."""
    for m in (a, b):
        if m.field != Q.q0.field or m.ell != Q.q0.ell:
            raise DimensionMismatch("evaluation point outside Q's ring")
    acc = evaluate(Q.q0, a, "right")
    power = MatRingElem.identity(a.field, a.ell)
    for c in Q.q1.coeffs:
        acc = acc + power * b * c
        power = power * a
    return acc


def compose_Y(Q: BivariateQ, f: MatPoly) -> MatPoly:
    """(X, f(X))Q = q0(X) + f(X) q1(X), with f's coefficients on the left."""
    return Q.q0 + f * Q.q1


def validate_root(gamma: MatRingElem, m: int) -> bool:
    """True iff gamma**m = I and gamma**i - I is a unit for 0 < i < m."""
    if m < 1:
        return False
    ident = MatRingElem.identity(gamma.field, gamma.ell)
    power = ident
    for _ in range(1, m):
        power = power * gamma
        if not (power - ident).is_unit():
            return False
    return power * gamma == ident


def regular_representation(beta: int, basis: RelativeBasis, ell: int) -> MatRingElem:
    """Matrix of w -> beta * w in ``basis``; column j holds the coordinates of beta*b_j."""
    big = basis.emb.dst
    cols = [basis.coords(big.mul(beta, b)) for b in basis.basis]
    rows = [[cols[j][i] for j in range(ell)] for i in range(ell)]
    return MatRingElem.from_rows(basis.emb.src, rows)


def find_primitive_root(q: int, s: int, ell: int, m: int) -> MatRingElem:
    """A primitive m-th root of unity in M_ell(F_{q^s}).

    Realizes F_{q^{s ell}} over F_{q^s} in the basis 1, g, ..., g^(ell-1)
    (g the generator of the big field) and returns the matrix of
    multiplication by g^((q^(s ell) - 1)/m).  Since g^(i*(q^(s ell)-1)/m) != 1
    for 0 < i < m, every power minus I is invertible.
    """
    p, e = prime_power(q)
    if m < 1:
        raise IncompatibleOrder("m must be positive")
    if gcd(m, q) != 1:
        raise NotCoprime(f"gcd(m={m}, q={q}) != 1")
    big_order = q ** (s * ell)
    if (big_order - 1) % m:
        raise IncompatibleOrder(f"m={m} does not divide q^(s*l) - 1 = {big_order - 1}")
    small = build_field(p, e * s)
    if m == 1:
        return MatRingElem.identity(small, ell)
    big = build_field(p, e * s * ell)
    emb = find_embedding(small, big)
    g = big.generator
    basis = RelativeBasis(emb, [big.pow(g, i) for i in range(ell)])
    beta = big.pow(g, (big_order - 1) // m)
    return regular_representation(beta, basis, ell)
