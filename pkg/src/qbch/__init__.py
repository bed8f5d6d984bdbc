"""Quasi-BCH codes over matrix rings: construction, Welch-Berlekamp and interleaved decoding."""

from .code import (BlockWord, QuasiBCHSpec, block_metric, build_spec, encode, generator_matrix,
                   is_codeword, message_of, parity_matrix, quasi_cyclic_check, syndromes)
from .errors import DecodingFailure, QBCHError
from .field import GF, FieldElement, build_field, find_embedding
from .interleaved import (collaborative_decode, diagonalize, ilrs_decode, sigma_transform,
                          splitting_field)
from .matring import MatPoly, MatRingElem, find_primitive_root, validate_root
from .oracle import brute_min_block_distance, enumerate_codewords, nearest_codeword
from .wb import wb_decode

__all__ = [
    "BlockWord", "QuasiBCHSpec", "block_metric", "build_spec", "encode", "generator_matrix",
    "is_codeword", "message_of", "parity_matrix", "quasi_cyclic_check", "syndromes",
    "DecodingFailure", "QBCHError", "GF", "FieldElement", "build_field", "find_embedding",
    "collaborative_decode", "diagonalize", "ilrs_decode", "sigma_transform", "splitting_field",
    "MatPoly", "MatRingElem", "find_primitive_root", "validate_root",
    "brute_min_block_distance", "enumerate_codewords", "nearest_codeword", "wb_decode",
]
