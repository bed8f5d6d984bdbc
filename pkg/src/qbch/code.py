"""Quasi-BCH codes QBCH_q(m, l, delta, Gamma): construction, encoding, syndromes.

A word is m blocks of l symbols over F_q.  Membership is defined by
``sum_j (Gamma^i)^j c_{j+1}^T = 0`` for i = 1..delta-1, where each block
enters as a column vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

from . import linalg
from .errors import BadParameters, InvalidRoot, LengthMismatch, NotPrime, ShapeMismatch
from .field import GF, RelativeBasis, build_field, find_embedding, prime_power
from .matring import MatRingElem, find_primitive_root, validate_root


@dataclass(frozen=True)
class BlockWord:
    """An element of (F_q^l)^m, stored as a tuple of m blocks."""

    field: GF
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.blocks:
            raise ShapeMismatch("a word needs at least one block")
        ell = len(self.blocks[0])
        if ell == 0 or any(len(b) != ell for b in self.blocks):
            raise ShapeMismatch("all blocks must have the same positive length")

    @classmethod
    def from_flat(cls, field: GF, symbols, ell: int) -> BlockWord:
        symbols = [int(x) for x in symbols]
        if ell < 1 or len(symbols) % ell:
            raise ShapeMismatch(f"{len(symbols)} symbols do not split into blocks of {ell}")
        return cls(field, tuple(tuple(symbols[i:i + ell])
                                for i in range(0, len(symbols), ell)))

    @classmethod
    def zero(cls, field: GF, m: int, ell: int) -> BlockWord:
        return cls(field, tuple((0,) * ell for _ in range(m)))

    @property
    def m(self) -> int:
        return len(self.blocks)

    @property
    def ell(self) -> int:
        return len(self.blocks[0])

    def flat(self) -> list[int]:
        return [x for b in self.blocks for x in b]

    def _same_shape(self, other: BlockWord):
        if (other.field != self.field or other.m != self.m or other.ell != self.ell):
            raise ShapeMismatch("words have different shapes or fields")

    def __add__(self, other: BlockWord) -> BlockWord:
        self._same_shape(other)
        add = self.field.add
        return BlockWord(self.field, tuple(tuple(add(x, y) for x, y in zip(a, b))
                                           for a, b in zip(self.blocks, other.blocks)))

    def __sub__(self, other: BlockWord) -> BlockWord:
        self._same_shape(other)
        sub = self.field.sub
        return BlockWord(self.field, tuple(tuple(sub(x, y) for x, y in zip(a, b))
                                           for a, b in zip(self.blocks, other.blocks)))

    def shift(self, blocks: int = 1) -> BlockWord:
        """Cyclic left shift by whole blocks (T^l applied ``blocks`` times)."""
        k = blocks % self.m
        return BlockWord(self.field, self.blocks[k:] + self.blocks[:k])


def block_metric(x: BlockWord, y: BlockWord | None = None) -> int:
    """l-block weight of x, or l-block distance between x and y."""
    if y is not None:
        x = x - y
    return sum(1 for b in x.blocks if any(b))


@dataclass(frozen=True, eq=False)
class QuasiBCHSpec:
    q: int
    s: int
    ell: int
    m: int
    delta: int
    gamma: MatRingElem

    @property
    def n(self) -> int:
        return self.m

    @property
    def k(self) -> int:
        return self.n - self.delta + 1

    @property
    def tau(self) -> int:
        return (self.delta - 1) // 2

    @property
    def length(self) -> int:
        return self.m * self.ell

    @cached_property
    def base(self) -> GF:
        p, e = prime_power(self.q)
        return build_field(p, e)

    @property
    def field(self) -> GF:
        return self.gamma.field

    @cached_property
    def base_emb(self):
        return find_embedding(self.base, self.field)

    @cached_property
    def gamma_powers(self) -> tuple[MatRingElem, ...]:
        """Gamma^0 .. Gamma^(m-1)."""
        out = [MatRingElem.identity(self.field, self.ell)]
        for _ in range(1, self.m):
            out.append(out[-1] * self.gamma)
        return tuple(out)

    @cached_property
    def parity(self) -> list[list[int]]:
        return parity_matrix(self)

    @cached_property
    def generator(self) -> list[list[int]]:
        return generator_matrix(self)

    @property
    def dim(self) -> int:
        return len(self.generator)

    def lift(self, word: BlockWord) -> list[list[int]]:
        """Blocks of ``word`` as vectors over F_{q^s}."""
        return [[self.base_emb(x) for x in b] for b in word.blocks]

    def check_word(self, word: BlockWord):
        if word.field != self.base or word.m != self.m or word.ell != self.ell:
            raise ShapeMismatch(
                f"expected {self.m} blocks of {self.ell} symbols over F_{self.q}")

    def __eq__(self, other):
        return isinstance(other, QuasiBCHSpec) and (
            self.q, self.s, self.ell, self.m, self.delta, self.gamma) == (
            other.q, other.s, other.ell, other.m, other.delta, other.gamma)

    def __hash__(self):
        return hash((self.q, self.s, self.ell, self.m, self.delta, self.gamma))


def build_spec(q: int, s: int, ell: int, m: int, delta: int,
               gamma: MatRingElem | None = None) -> QuasiBCHSpec:
    try:
        p, e = prime_power(q)
    except NotPrime as exc:
        raise BadParameters(str(exc)) from None
    if s < 1 or ell < 1 or m < 1:
        raise BadParameters("s, l and m must be positive")
    if not 2 <= delta <= m:
        raise BadParameters(f"need 2 <= delta <= m, got delta={delta}, m={m}")
    if gcd(m, q) != 1:
        raise BadParameters(f"gcd(m={m}, q={q}) != 1")
    if gamma is None:
        gamma = find_primitive_root(q, s, ell, m)
    else:
        # any modulus of the right degree is accepted for F_{q^s}
        if gamma.field.p != p or gamma.field.d != e * s or gamma.ell != ell:
            raise InvalidRoot(f"gamma must be a {ell}x{ell} matrix over F_{q}^{s}")
        if not validate_root(gamma, m):
            raise InvalidRoot(f"gamma is not a primitive {m}-th root of unity")
    return QuasiBCHSpec(q, s, ell, m, delta, gamma)


def parity_matrix(spec: QuasiBCHSpec) -> list[list[int]]:
    """(delta-1)l x ml matrix over F_{q^s}; block (i, j) is Gamma^(i*(j-1))."""
    ell = spec.ell
    rows = []
    for i in range(1, spec.delta):
        blocks = [spec.gamma_powers[(i * j) % spec.m] for j in range(spec.m)]
        for r in range(ell):
            rows.append([x for b in blocks for x in b.rows[r]])
    return rows


def _relative_basis(spec: QuasiBCHSpec) -> RelativeBasis:
    f = spec.field
    return RelativeBasis(spec.base_emb, [f.pow(f.generator, i) for i in range(spec.s)])


def generator_matrix(spec: QuasiBCHSpec) -> list[list[int]]:
    """RREF basis over F_q of the code, from the F_q-expansion of the parity checks."""
    basis = _relative_basis(spec)
    expanded = []
    for row in parity_matrix(spec):
        coords = [basis.coords(h) for h in row]
        for t in range(spec.s):
            expanded.append([c[t] for c in coords])
    kernel = linalg.nullspace(spec.base, expanded, spec.length)
    if not kernel:
        return []
    red, _ = linalg.rref(spec.base, kernel, spec.length)
    return red


def encode(spec: QuasiBCHSpec, msg) -> BlockWord:
    msg = [int(x) for x in msg]
    if len(msg) != spec.dim:
        raise LengthMismatch(f"message has {len(msg)} symbols, code dimension is {spec.dim}")
    f = spec.base
    out = [0] * spec.length
    for coef, row in zip(msg, spec.generator):
        if coef:
            out = [f.add(o, f.mul(coef, g)) for o, g in zip(out, row)]
    return BlockWord.from_flat(f, out, spec.ell)


def message_of(spec: QuasiBCHSpec, word: BlockWord) -> list[int]:
    """Inverse of encode on codewords: read the RREF pivot positions."""
    flat = word.flat()
    out = []
    for row in spec.generator:
        pivot = next(i for i, x in enumerate(row) if x)
        out.append(flat[pivot])
    return out


def syndromes(spec: QuasiBCHSpec, y: BlockWord) -> list[list[int]]:
    """The delta-1 column vectors sum_j Gamma^(i j) y_{j+1}^T, i = 1..delta-1."""
    spec.check_word(y)
    f = spec.field
    lifted = spec.lift(y)
    out = []
    for i in range(1, spec.delta):
        acc = [0] * spec.ell
        for j, block in enumerate(lifted):
            if any(block):
                v = spec.gamma_powers[(i * j) % spec.m].apply(block)
                acc = [f.add(a, b) for a, b in zip(acc, v)]
        out.append(acc)
    return out


def is_codeword(spec: QuasiBCHSpec, y: BlockWord) -> bool:
    return not any(any(s) for s in syndromes(spec, y))


def is_shift_invariant(rows, ell: int, member) -> bool:
    """True iff each generator row, cyclically shifted left by ell, satisfies ``member``.

    For a linear code this is exactly stability under T^ell.
    """
    for row in rows:
        row = list(row)
        if not member(row[ell:] + row[:ell]):
            return False
    return True


def quasi_cyclic_check(spec: QuasiBCHSpec) -> bool:
    def member(flat):
        return is_codeword(spec, BlockWord.from_flat(spec.base, flat, spec.ell))

    return is_shift_invariant(spec.generator, spec.ell, member)
