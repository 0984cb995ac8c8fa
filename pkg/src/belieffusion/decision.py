"""Pignistic transform and the maximum-pignistic decision."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Frame, MassFunction

__all__ = ["PignisticDistribution", "Decision", "betp", "decide", "TIE_TOL"]

TIE_TOL = 1e-12


@dataclass(frozen=True)
class PignisticDistribution:
    """Probability vector over the singletons of a frame."""

    frame: Frame
    probs: tuple[float, ...]

    def prob(self, label: str) -> float:
        return self.probs[self.frame.index(label)]


@dataclass(frozen=True)
class Decision:
    index: int
    probability: float
    tie: bool


def betp(m: MassFunction) -> PignisticDistribution:
    """Split each focal mass equally among its members.

    Only defined for closed-world bbas; mass on ∅ has no pignistic home.
    """
    if m.open_world:
        raise ValueError("pignistic transform requires a closed-world bba")
    probs = [0.0] * m.frame.size
    for fs, v in m.entries.items():
        share = v / fs.cardinality
        for i in fs.indices():
            probs[i] += share
    return PignisticDistribution(m.frame, tuple(probs))


def decide(p: PignisticDistribution) -> Decision:
    """Pick the most probable singleton; ties (within TIE_TOL of the max)
    resolve to the lowest frame index with the tie flag set."""
    best = max(p.probs)
    tied = [i for i, v in enumerate(p.probs) if best - v <= TIE_TOL]
    return Decision(tied[0], p.probs[tied[0]], len(tied) > 1)
