"""Seeded Monte-Carlo block-error channel for comparing decoders.

Trial i of a run with master seed S uses ``random.Random(trial_seeds(S, N)[i])``:
the state starts at S, each step adds 0x9E3779B97F4A7C15 (mod 2^64) and the
output is the standard splitmix64 finalizer of the new state.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .code import BlockWord, QuasiBCHSpec, encode
from .errors import BadParameters, DecodingFailure
from .interleaved import collaborative_decode, ilrs_decode
from .wb import wb_decode

MASK64 = (1 << 64) - 1

DECODERS = {
    "wb": wb_decode,
    "ilrs": ilrs_decode,
    "collab": collaborative_decode,
    "collaborative": collaborative_decode,
}


def splitmix64(state: int) -> tuple[int, int]:
    """One splitmix64 step: returns (new state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, z ^ (z >> 31)


def trial_seeds(seed: int, count: int) -> list[int]:
    state = seed & MASK64
    out = []
    for _ in range(count):
        state, z = splitmix64(state)
        out.append(z)
    return out


@dataclass
class SimReport:
    decoder: str
    errors: int
    trials: int
    seed: int
    successes: int = 0
    failures: int = 0
    miscorrections: int = 0

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials if self.trials else 0.0

    def check(self):
        assert self.successes + self.failures + self.miscorrections == self.trials


def random_error(spec: QuasiBCHSpec, t: int, rng: random.Random) -> BlockWord:
    """t uniformly random nonzero blocks at t uniformly random distinct positions."""
    q, ell = spec.q, spec.ell
    blocks = [(0,) * ell for _ in range(spec.m)]
    for pos in rng.sample(range(spec.m), t):
        v = rng.randrange(1, q**ell)
        digits = []
        for _ in range(ell):
            v, r = divmod(v, q)
            digits.append(r)
        blocks[pos] = tuple(digits)
    return BlockWord(spec.base, tuple(blocks))


def run_trial(spec: QuasiBCHSpec, decoder, t: int, seed: int):
    """One transmission.  Returns (outcome, sent, received, decoded or None)."""
    rng = random.Random(seed)
    msg = [rng.randrange(spec.q) for _ in range(spec.dim)]
    sent = encode(spec, msg)
    received = sent + random_error(spec, t, rng)
    try:
        got = decoder(spec, received)
    except DecodingFailure:
        return "failure", sent, received, None
    return ("success" if got == sent else "miscorrection"), sent, received, got


def simulate(spec: QuasiBCHSpec, decoder: str, errors: int, trials: int, seed: int) -> SimReport:
    if decoder not in DECODERS:
        raise BadParameters(f"unknown decoder {decoder!r}")
    if not 0 <= errors <= spec.m:
        raise BadParameters(f"errors must lie in 0..{spec.m}")
    if trials < 0:
        raise BadParameters("trials must be non-negative")
    fn = DECODERS[decoder]
    report = SimReport(decoder, errors, trials, seed)
    for sub in trial_seeds(seed, trials):
        outcome = run_trial(spec, fn, errors, sub)[0]
        if outcome == "success":
            report.successes += 1
        elif outcome == "failure":
            report.failures += 1
        else:
            report.miscorrections += 1
    report.check()
    return report
