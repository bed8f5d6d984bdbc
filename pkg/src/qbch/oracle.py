"""Brute-force ground truth for desk-scale quasi-BCH codes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .code import BlockWord, QuasiBCHSpec, block_metric, encode
from .errors import EmptyCode, TooLarge

MAX_CODEWORDS = 1 << 20


@dataclass(frozen=True)
class CodeTable:
    spec: QuasiBCHSpec
    words: tuple[BlockWord, ...]

    def __len__(self):
        return len(self.words)

    def __contains__(self, word):
        return word in self.index

    @cached_property
    def index(self) -> frozenset:
        return frozenset(self.words)


def enumerate_codewords(spec: QuasiBCHSpec) -> CodeTable:
    size = spec.q ** spec.dim
    if size > MAX_CODEWORDS:
        raise TooLarge(f"{size} codewords exceed the enumeration guard")
    words = {encode(spec, msg) for msg in itertools.product(range(spec.q), repeat=spec.dim)}
    return CodeTable(spec, tuple(sorted(words, key=lambda w: w.flat())))


def brute_min_block_distance(table: CodeTable) -> int:
    weights = [block_metric(w) for w in table.words if block_metric(w)]
    if not weights:
        raise EmptyCode("the code has no nonzero codeword")
    return min(weights)


def nearest_codeword(table: CodeTable, y: BlockWord) -> tuple[int, list[BlockWord]]:
    """(minimal block distance, every codeword attaining it)."""
    best, hits = None, []
    for w in table.words:
        d = block_metric(w, y)
        if best is None or d < best:
            best, hits = d, [w]
        elif d == best:
            hits.append(w)
    return best, hits
