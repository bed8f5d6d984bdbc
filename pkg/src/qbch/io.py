"""Plain-text formats: key=value code-spec files and whitespace word files."""

from __future__ import annotations

from pathlib import Path

from .code import BlockWord, QuasiBCHSpec, build_spec
from .errors import BadParameters, ShapeMismatch
from .field import GF, format_field
from .matring import MatRingElem

SPEC_KEYS = ("q", "s", "l", "m", "delta", "p", "d", "modulus", "gamma")


def format_spec(spec: QuasiBCHSpec) -> str:
    lines = [f"q={spec.q}", f"s={spec.s}", f"l={spec.ell}", f"m={spec.m}",
             f"delta={spec.delta}", format_field(spec.field),
             "gamma=" + ",".join(str(x) for x in spec.gamma.flat())]
    return "\n".join(lines) + "\n"


def parse_spec(text: str) -> QuasiBCHSpec:
    kv = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise BadParameters(f"line {lineno}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in SPEC_KEYS:
            raise BadParameters(f"line {lineno}: unknown key {key!r}")
        kv[key] = value
    missing = [k for k in SPEC_KEYS if k not in kv]
    if missing:
        raise BadParameters(f"missing keys: {', '.join(missing)}")
    try:
        q, s, ell, m, delta, p, d = (int(kv[k]) for k in ("q", "s", "l", "m", "delta", "p", "d"))
        modulus = [int(c) for c in kv["modulus"].split(",")]
        entries = [int(c) for c in kv["gamma"].split(",")]
    except ValueError as exc:
        raise BadParameters(f"malformed number: {exc}") from None
    try:
        field = GF(p, d, modulus)
    except ValueError as exc:
        raise BadParameters(f"bad field block: {exc}") from None
    if len(entries) != ell * ell or any(not 0 <= x < field.order for x in entries):
        raise BadParameters(f"gamma needs {ell * ell} field elements in 0..{field.order - 1}")
    gamma = MatRingElem.from_rows(field, [entries[i * ell:(i + 1) * ell] for i in range(ell)])
    return build_spec(q, s, ell, m, delta, gamma)


def load_spec(path) -> QuasiBCHSpec:
    return parse_spec(Path(path).read_text())


def save_spec(spec: QuasiBCHSpec, path):
    Path(path).write_text(format_spec(spec))


def parse_symbol_lines(text: str, width: int, q: int):
    """Yield (line number, symbols) for each non-blank line; validates width and range."""
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        try:
            symbols = [int(tok) for tok in raw.split()]
        except ValueError:
            raise ShapeMismatch(f"line {lineno}: non-integer symbol") from None
        if len(symbols) != width:
            raise ShapeMismatch(f"line {lineno}: expected {width} symbols, got {len(symbols)}")
        if any(not 0 <= x < q for x in symbols):
            raise ShapeMismatch(f"line {lineno}: symbols must lie in 0..{q - 1}")
        yield lineno, symbols


def format_word(word: BlockWord | list[int]) -> str:
    flat = word.flat() if isinstance(word, BlockWord) else word
    return " ".join(str(x) for x in flat)
