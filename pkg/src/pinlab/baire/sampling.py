"""Deterministic samplers for sequences and structured projection families."""

from __future__ import annotations

from ..errors import UnknownIdError
from ..rng import SplitMix64
from .inj import BAInj, Pi0Endo, Pi1Endo
from .seq import UPSeq


def random_bainj(rng: SplitMix64, max_exc: int = 3, max_m: int = 3, max_gap: int = 4) -> BAInj:
    m = rng.between(1, max_m)
    d = m + rng.between(0, max_gap)
    residues = rng.sample(range(d), m)
    offsets = [r + d * rng.between(0, 2) for r in residues]

    def hit(v):
        return any(v >= b and (v - b) % d == 0 for b in offsets)

    free = [v for v in range(3 * d + 6) if not hit(v)]
    n_exc = min(rng.between(0, max_exc), len(free))
    return BAInj(rng.sample(free, n_exc), m, d, offsets)


def random_upseq(rng: SplitMix64, max_prefix: int = 4, max_period: int = 3, max_value: int = 3) -> UPSeq:
    pre = [rng.between(0, max_value) for _ in range(rng.between(0, max_prefix))]
    per = [rng.between(0, max_value) for _ in range(rng.between(1, max_period))]
    return UPSeq(pre, per)


def _perturb(rng: SplitMix64, x: UPSeq) -> UPSeq:
    """A sequence near ``x``: finite bumps, or a shifted tail."""
    mode = rng.below(4)
    L = len(x.prefix) + len(x.period) * 2 + 2
    vals = x.values(L)
    if mode == 0:
        # finitely many changes: same tail
        for _ in range(rng.between(1, 3)):
            i = rng.below(L)
            vals[i] = rng.between(0, 4)
        return UPSeq.from_function(lambda i: vals[i] if i < L else x(i), L, len(x.period))
    if mode == 1:
        return UPSeq(x.prefix, [v + rng.between(0, 1) for v in x.period])
    if mode == 2:
        return UPSeq(x.prefix, [max(0, v - rng.between(0, 1)) for v in x.period])
    return random_upseq(rng)


def random_pair(rng: SplitMix64) -> tuple[UPSeq, UPSeq]:
    x = random_upseq(rng)
    return x, _perturb(rng, x)


def sample_family(family_id: str, seed: int, count: int) -> list:
    rng = SplitMix64(seed)
    if family_id in ("proj†", "proj", "proj-dagger"):
        return [random_bainj(rng) for _ in range(count)]
    if family_id in ("Π0", "Pi0"):
        out = []
        for _ in range(count):
            half = random_bainj(rng)
            support = rng.sample(range(6), rng.between(0, 4))
            image = rng.shuffle(list(support))
            out.append(Pi0Endo(half, tuple(zip(support, image))))
        return out
    if family_id in ("Π1", "Pi1"):
        out = []
        for _ in range(count):
            if rng.chance(1, 4):
                out.append(Pi1Endo(None))
                continue
            h = random_bainj(rng)
            even = BAInj([2 * v for v in h.exceptions], h.m, 2 * h.d, [2 * b for b in h.offsets])
            out.append(Pi1Endo(even))
        return out
    raise UnknownIdError(f"unknown structured family {family_id!r}")
