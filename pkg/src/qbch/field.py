"""Finite fields F_{p^d} with table arithmetic, plus embeddings between them.

Elements are stored as plain integers: the polynomial ``c_0 + c_1 x + ... +
c_{d-1} x^{d-1}`` is encoded as ``sum(c_i * p**i)``.  The same encoding is
used in every file format of the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import DivisionByZero, FieldMismatch, NotPrime, TooLarge, ZeroElement

MAX_FIELD_ORDER = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p**e, or raise NotPrime."""
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1 or not is_prime(p):
                break
            return p, e
    raise NotPrime(f"{q} is not a prime power")


# -- polynomials over F_p, coefficient lists in ascending order -------------

def _ptrim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = _ptrim(a)
    m = _ptrim(m)
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        a = _ptrim(a)
    return a


def _pmulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(out, m, p)


def _monic_polys(p: int, d: int):
    """All monic polynomials of degree d over F_p, by increasing integer code."""
    for low in itertools.product(range(p), repeat=d):
        yield list(reversed(low)) + [1]


def is_irreducible(modulus, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    f = _ptrim(modulus)
    d = len(f) - 1
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for g in _monic_polys(p, k):
            if not _pmod(f, g, p):
                return False
    return True


def _x_order_is_full(modulus, p: int) -> bool:
    d = len(modulus) - 1
    n = p**d - 1
    for r in prime_factors(n):
        e = n // r
        # x**e mod modulus by square and multiply
        acc, base = [1], [0, 1]
        while e:
            if e & 1:
                acc = _pmulmod(acc, base, modulus, p)
            base = _pmulmod(base, base, modulus, p)
            e >>= 1
        if acc == [1]:
            return False
    return True


def is_primitive_poly(modulus, p: int) -> bool:
    return is_irreducible(modulus, p) and _x_order_is_full(list(modulus), p)


class GF:
    """The field F_{p^d} defined by a monic irreducible ``modulus`` over F_p.

    Multiplication goes through exp/log tables built from the smallest
    generator of the multiplicative group.
    """

    def __init__(self, p: int, d: int, modulus):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        modulus = tuple(int(c) % p for c in modulus)
        if d < 1 or len(modulus) != d + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {d}")
        if p**d > MAX_FIELD_ORDER:
            raise TooLarge(f"field of order {p**d} exceeds {MAX_FIELD_ORDER}")
        if d > 1 and not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.d = d
        self.modulus = modulus
        self.order = p**d
        self._digits = [self._to_digits(v) for v in range(self.order)]
        self._build_tables()

    # integer <-> coefficient vector
    def _to_digits(self, v: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.d):
            v, r = divmod(v, self.p)
            out.append(r)
        return tuple(out)

    def _from_digits(self, cs) -> int:
        v = 0
        for c in reversed(list(cs)):
            v = v * self.p + c % self.p
        return v

    def digits(self, v: int) -> tuple[int, ...]:
        return self._digits[v]

    def _raw_mul(self, a: int, b: int) -> int:
        if self.d == 1:
            return a * b % self.p
        prod = _pmulmod(_ptrim(self._digits[a]), _ptrim(self._digits[b]),
                        list(self.modulus), self.p)
        return self._from_digits(prod + [0] * (self.d - len(prod)))

    def _build_tables(self):
        n = self.order - 1
        factors = prime_factors(n)
        gen = None
        for g in range(1, self.order):
            if all(self._raw_pow(g, n // r) != 1 for r in factors):
                gen = g
                break
        self.generator = gen
        exp = [0] * (2 * n)
        log = [0] * self.order
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, gen)
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        self._exp = exp
        self._log = log
        if self.p != 2 and self.order <= 256:
            self._add_table = [[self._slow_add(a, b) for b in range(self.order)]
                               for a in range(self.order)]
        else:
            self._add_table = None

    def _raw_pow(self, a: int, e: int) -> int:
        acc = 1
        while e:
            if e & 1:
                acc = self._raw_mul(acc, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return acc

    def _slow_add(self, a: int, b: int) -> int:
        da, db = self._digits[a], self._digits[b]
        return self._from_digits([(x + y) % self.p for x, y in zip(da, db)])

    # arithmetic on integer codes
    zero = 0
    one = 1

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._slow_add(a, b)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self._from_digits([-c for c in self._digits[a]])

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero("division by zero")
        if a == 0:
            return 0
        return self._exp[(self._log[a] - self._log[b]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise DivisionByZero("zero to a negative power")
            return 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def exp(self, i: int) -> int:
        """generator ** i"""
        return self._exp[i % (self.order - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise ZeroElement("log of zero")
        return self._log[a]

    def order_of(self, a: int) -> int:
        if a == 0:
            raise ZeroElement("zero has no multiplicative order")
        n = self.order - 1
        return n // gcd(n, self._log[a])

    def from_int(self, k: int) -> int:
        """Image of the integer k under Z -> F_p -> this field."""
        return k % self.p

    def elements(self) -> range:
        return range(self.order)

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, int(value))

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.d, self.modulus) == (
            other.p, other.d, other.modulus)

    def __hash__(self):
        return hash((self.p, self.d, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.d}, modulus={list(self.modulus)})"


@dataclass(frozen=True)
class FieldElement:
    """An element of a GF, with operator overloads.  Mostly a user-facing wrapper."""

    field: GF
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.order:
            raise ValueError(f"{self.value} is not an element of {self.field}")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.digits(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inv(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FieldElement({self.value} in GF({self.field.p}^{self.field.d}))"


@lru_cache(maxsize=None)
def build_field(p: int, d: int) -> GF:
    """F_{p^d} with the primitive modulus of smallest integer code.

    For d == 1 the modulus is X and elements are the residues mod p.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if d < 1:
        raise ValueError("extension degree must be >= 1")
    if p**d > MAX_FIELD_ORDER:
        raise TooLarge(f"field of order {p**d} exceeds {MAX_FIELD_ORDER}")
    if d == 1:
        return GF(p, 1, (0, 1))
    for cand in _monic_polys(p, d):
        if cand[0] != 0 and is_primitive_poly(cand, p):
            return GF(p, d, tuple(cand))
    raise AssertionError("no primitive polynomial found")  # unreachable


def field_arith(a: FieldElement, b: FieldElement | None, kind: str) -> FieldElement:
    """Dispatch ``kind`` in {add, sub, mul, div, inv, neg, pow}; for pow, b is an int."""
    if kind == "inv":
        return a.inv()
    if kind == "neg":
        return -a
    if kind == "pow":
        return a ** int(b)
    if not isinstance(b, FieldElement) or b.field != a.field:
        raise FieldMismatch("operands must lie in the same field")
    ops = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}
    if kind not in ops:
        raise ValueError(f"unknown operation {kind!r}")
    return ops[kind](b)


def element_order(a: FieldElement) -> int:
    return a.field.order_of(a.value)


def poly_eval(field: GF, coeffs, x: int) -> int:
    """Horner evaluation of an F_p-coefficient (or field-coded) polynomial at x."""
    acc = 0
    for c in reversed(list(coeffs)):
        acc = field.add(field.mul(acc, x), c)
    return acc


@dataclass(frozen=True)
class TowerEmbedding:
    """Field homomorphism src -> dst fixed by the image of src's generator x."""

    src: GF
    dst: GF
    image_of_generator: int

    def __post_init__(self):
        if self.src.p != self.dst.p or self.dst.d % self.src.d:
            raise FieldMismatch(f"cannot embed {self.src} into {self.dst}")
        lifted = [self.dst.from_int(c) for c in self.src.modulus]
        if poly_eval(self.dst, lifted, self.image_of_generator) != 0:
            raise ValueError("image_of_generator is not a root of the source modulus")
        src, dst, r = self.src, self.dst, self.image_of_generator
        powers = [dst.pow(r, i) for i in range(src.d)]
        table = []
        for v in range(src.order):
            acc = 0
            for c, pw in zip(src.digits(v), powers):
                if c:
                    acc = dst.add(acc, dst.mul(dst.from_int(c), pw))
            table.append(acc)
        object.__setattr__(self, "table", tuple(table))
        object.__setattr__(self, "preimage", {w: v for v, w in enumerate(table)})

    def __call__(self, v: int) -> int:
        return self.table[v]

    def contains(self, w: int) -> bool:
        return w in self.preimage

    def pull(self, w: int) -> int:
        """Preimage of w; KeyError if w is outside the image."""
        return self.preimage[w]


@lru_cache(maxsize=None)
def find_embedding(src: GF, dst: GF) -> TowerEmbedding:
    """Embedding sending src's generator x to the smallest root of its modulus in dst."""
    if src.p != dst.p or dst.d % src.d:
        raise FieldMismatch(f"cannot embed {src} into {dst}")
    lifted = [dst.from_int(c) for c in src.modulus]
    for r in dst.elements():
        if poly_eval(dst, lifted, r) == 0:
            return TowerEmbedding(src, dst, r)
    raise AssertionError("source modulus has no root in destination")  # unreachable


def embed(x: FieldElement, emb: TowerEmbedding) -> FieldElement:
    if x.field != emb.src:
        raise FieldMismatch(f"{x!r} is not in {emb.src}")
    return FieldElement(emb.dst, emb(x.value))


def format_field(field: GF) -> str:
    return (f"p={field.p}\nd={field.d}\n"
            f"modulus={','.join(str(c) for c in field.modulus)}")


class RelativeBasis:
    """Coordinates of a big field over an embedded subfield in a given basis.

    ``basis`` holds r = [big:small] elements of the big field; ``coords(w)``
    returns the unique small-field codes a_i with w = sum emb(a_i) * basis[i].
    """

    def __init__(self, emb: TowerEmbedding, basis):
        from . import linalg

        self.emb = emb
        self.basis = tuple(basis)
        small, big = emb.src, emb.dst
        r = big.d // small.d
        if len(self.basis) != r:
            raise ValueError(f"need {r} basis elements, got {len(self.basis)}")
        fp = build_field(big.p, 1)
        cols = []
        for b in self.basis:
            for k in range(small.d):
                unit = small.p**k
                cols.append(big.digits(big.mul(emb(unit), b)))
        mat = [list(row) for row in zip(*cols)]
        self._fp = fp
        self._inv = linalg.inverse(fp, mat)
        self._r = r

    def coords(self, w: int) -> list[int]:
        from . import linalg

        small = self.emb.src
        x = linalg.matvec(self._fp, self._inv, self.emb.dst.digits(w))
        out = []
        for i in range(self._r):
            chunk = x[i * small.d:(i + 1) * small.d]
            out.append(sum(c * small.p**k for k, c in enumerate(chunk)))
        return out

    def combine(self, coords) -> int:
        big = self.emb.dst
        acc = 0
        for a, b in zip(coords, self.basis):
            acc = big.add(acc, big.mul(self.emb(a), b))
        return acc
