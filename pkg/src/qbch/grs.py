"""Generalized Reed-Solomon codes over the matrix ring A = M_l(F).

Everything here is an exhaustive, desk-scale construction: codes and duals
are materialized as Python sets of words (tuples of MatRingElem).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .code import BlockWord
from .errors import DegreeTooHigh, DimensionMismatch, NotInBaseField, TooLarge
from .field import GF, find_embedding
from .matring import MatPoly, MatRingElem, evaluate

MAX_ENUMERATION = 1 << 20


@dataclass(frozen=True)
class GRSSpec:
    support: tuple[MatRingElem, ...]
    multipliers: tuple[MatRingElem, ...]
    k: int
    side: str = "left"

    def __post_init__(self):
        x, v = self.support, self.multipliers
        if len(x) != len(v) or not x:
            raise DimensionMismatch("support and multipliers must have equal, positive length")
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', not {self.side!r}")
        if not 0 < self.k <= len(x):
            raise ValueError(f"need 0 < k <= n, got k={self.k}, n={len(x)}")
        for i, j in itertools.combinations(range(len(x)), 2):
            if not (x[i] - x[j]).is_unit():
                raise ValueError(f"support entries {i} and {j} do not differ by a unit")
            if not x[i].commutes_with(x[j]):
                raise ValueError(f"support entries {i} and {j} do not commute")
        for i, vi in enumerate(v):
            if not vi.is_unit():
                raise ValueError(f"multiplier {i} is not a unit")

    @property
    def n(self) -> int:
        return len(self.support)

    @property
    def field(self) -> GF:
        return self.support[0].field

    @property
    def ell(self) -> int:
        return self.support[0].ell


def ring_elements(field: GF, ell: int):
    """Every element of M_ell(field), in lexicographic order of entries."""
    for flat in itertools.product(range(field.order), repeat=ell * ell):
        yield MatRingElem(field, tuple(tuple(flat[i * ell:(i + 1) * ell])
                                       for i in range(ell)))


def grs_encode(spec: GRSSpec, f: MatPoly) -> tuple[MatRingElem, ...]:
    if f.degree > spec.k - 1:
        raise DegreeTooHigh(f"deg f = {f.degree} exceeds k - 1 = {spec.k - 1}")
    if spec.side == "left":
        return tuple(evaluate(f, x, "left") * v for x, v in zip(spec.support, spec.multipliers))
    return tuple(v * evaluate(f, x, "right") for x, v in zip(spec.support, spec.multipliers))


def _ring_size(spec: GRSSpec) -> int:
    return spec.field.order ** (spec.ell * spec.ell)


def enumerate_code(spec: GRSSpec) -> set:
    total = _ring_size(spec) ** spec.k
    if total > MAX_ENUMERATION:
        raise TooLarge(f"{total} codewords exceed the enumeration guard")
    elems = list(ring_elements(spec.field, spec.ell))
    out = set()
    for coeffs in itertools.product(elems, repeat=spec.k):
        out.add(grs_encode(spec, MatPoly(spec.field, spec.ell, coeffs)))
    return out


def hamming_weight(word) -> int:
    return sum(1 for z in word if not z.is_zero())


def hamming_distance(x, y) -> int:
    return sum(1 for a, b in zip(x, y) if a != b)


def grs_min_distance_brute(spec: GRSSpec) -> int:
    return min(hamming_weight(c) for c in enumerate_code(spec) if hamming_weight(c))


def inner(x, y) -> MatRingElem:
    """sum_{i=1..n} x_i y_i."""
    acc = MatRingElem.zero(x[0].field, x[0].ell)
    for a, b in zip(x, y):
        acc = acc + a * b
    return acc


def _module_generators(spec: GRSSpec):
    """Words generating the code as a left (resp. right) module: the images of X^a."""
    ident = MatRingElem.identity(spec.field, spec.ell)
    zero = MatRingElem.zero(spec.field, spec.ell)
    gens = []
    for a in range(spec.k):
        mono = MatPoly(spec.field, spec.ell, (zero,) * a + (ident,))
        gens.append(grs_encode(spec, mono))
    return gens


def dual_brute(spec: GRSSpec) -> set:
    """Right dual of a left code, left dual of a right code, by scanning A^n.

    Orthogonality to the module generators is equivalent to orthogonality to
    the whole code, since the inner product is left (resp. right) linear.
    """
    total = _ring_size(spec) ** spec.n
    if total > MAX_ENUMERATION:
        raise TooLarge(f"{total} candidate words exceed the enumeration guard")
    gens = _module_generators(spec)
    elems = list(ring_elements(spec.field, spec.ell))
    out = set()
    for y in itertools.product(elems, repeat=spec.n):
        if spec.side == "left":
            ok = all(inner(g, y).is_zero() for g in gens)
        else:
            ok = all(inner(y, g).is_zero() for g in gens)
        if ok:
            out.add(y)
    return out


def full_space(field: GF, ell: int, n: int) -> set:
    elems = list(ring_elements(field, ell))
    if len(elems) ** n > MAX_ENUMERATION:
        raise TooLarge("space too large to enumerate")
    return set(itertools.product(elems, repeat=n))


def psi(c: BlockWord, field: GF) -> tuple[MatRingElem, ...]:
    """Each block becomes the first column of an l x l matrix over ``field``."""
    emb = find_embedding(c.field, field)
    ell = c.ell
    out = []
    for block in c.blocks:
        rows = tuple((emb(x),) + (0,) * (ell - 1) for x in block)
        out.append(MatRingElem(field, rows))
    return tuple(out)


def pr(Z, base: GF) -> BlockWord:
    """Concatenated first columns, pulled back into the base field."""
    emb = find_embedding(base, Z[0].field)
    blocks = []
    for z in Z:
        col = z.column(0)
        if not all(emb.contains(x) for x in col):
            raise NotInBaseField(f"first column {col} leaves F_{base.order}")
        blocks.append(tuple(emb.pull(x) for x in col))
    return BlockWord(base, tuple(blocks))
