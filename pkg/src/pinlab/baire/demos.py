"""Constructive checks of the witness theorems on sampled sequences."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import PreconditionError
from ..rng import SplitMix64
from .forms import closed_form, compare, correct_witness_tau, pin_witness_nleq_star, two_step_witness
from .inj import project
from .sampling import random_bainj, random_pair


@dataclass
class DemoReport:
    name: str
    seed: int
    pairs: int
    per_pair: int
    dominated: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = [
            f"DEMO {self.name} seed={self.seed} pairs={self.pairs} per_pair={self.per_pair} "
            f"dominated={self.dominated} failures={len(self.failures)}"
        ]
        out += ["  " + s for s in self.notes]
        out += ["  FAIL " + s for s in self.failures[:5]]
        return out


def _pointwise_le(f, g, x, y) -> bool:
    """Is ``x∘f∘g <= y∘f∘g`` everywhere?"""
    return compare(project(g, project(f, x)), project(g, project(f, y))).le


def correct_witness_check(seed: int, pairs: int = 1000, per_pair: int = 100) -> DemoReport:
    """Eventual domination holds exactly when every sampled σ is corrected.

    For ``x ≤* y`` each sampled σ receives a shift τ making ``τσ(x) ≤ τσ(y)``
    pointwise, and the pinning construction must refuse.  Otherwise the
    enumeration of ``{x > y}`` is a σ that no sampled τ corrects, and the
    shift construction must refuse.
    """
    rng = SplitMix64(seed)
    rep = DemoReport("correct-witness", seed, pairs, per_pair)
    for k in range(pairs):
        x, y = random_pair(rng)
        dominated = compare(x, y).le_star
        rep.dominated += dominated
        if dominated:
            try:
                pin_witness_nleq_star(x, y)
                rep.failures.append(f"pair {k}: pinning succeeded on a dominated pair {x} {y}")
            except PreconditionError:
                pass
            for _ in range(per_pair):
                s = random_bainj(rng)
                t = correct_witness_tau(x, y, s)
                if not _pointwise_le(s, t, x, y):
                    rep.failures.append(f"pair {k}: shift {t} fails for {s} on {x} {y}")
                    break
        else:
            try:
                correct_witness_tau(x, y, random_bainj(rng))
                rep.failures.append(f"pair {k}: shift built for an undominated pair {x} {y}")
            except PreconditionError:
                pass
            s = pin_witness_nleq_star(x, y)
            for _ in range(per_pair):
                t = random_bainj(rng)
                if _pointwise_le(s, t, x, y):
                    rep.failures.append(f"pair {k}: {t} corrects the pinning map {s} on {x} {y}")
                    break
    return rep


def two_step_check(seed: int, pairs: int = 1000) -> DemoReport:
    """Every dominated pair splits through its pointwise meet into two strictive hops."""
    rng = SplitMix64(seed)
    rep = DemoReport("two-step", seed, pairs, 1)
    shown = 0
    for k in range(pairs):
        x, y = random_pair(rng)
        if not compare(x, y).le_star:
            continue
        rep.dominated += 1
        try:
            r = two_step_witness(x, y)
        except AssertionError as exc:
            rep.failures.append(f"pair {k}: {exc}")
            continue
        if not (closed_form("str_proj", x, r) and closed_form("str_proj", r, y)):
            rep.failures.append(f"pair {k}: hops through {r} not both strictive")
        elif shown < 3:
            rep.notes.append(f"{x} -> {r} -> {y}")
            shown += 1
    return rep


__all__ = ["DemoReport", "correct_witness_check", "two_step_check"]
